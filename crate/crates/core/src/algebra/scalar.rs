use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::{Error, Result};

/// Exact Gaussian rational: `re + im·i` with arbitrary-precision rational
/// parts. Purely rational values keep `im = 0`.
///
/// `BigRational` stores every value in lowest terms with a positive
/// denominator, so the representation is canonical and `==` is exact
/// numeric equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn from_rational(re: BigRational) -> Self {
        Scalar {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn int(n: i64) -> Self {
        Scalar::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Rational literal `p/q`. Panics if `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Self {
        Scalar::from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// Gaussian rational literal `rp/rq + ip/iq·i`. Panics on zero denominators.
    pub fn complex_ratio(rp: i64, rq: i64, ip: i64, iq: i64) -> Self {
        Scalar {
            re: BigRational::new(BigInt::from(rp), BigInt::from(rq)),
            im: BigRational::new(BigInt::from(ip), BigInt::from(iq)),
        }
    }

    pub fn zero() -> Self {
        Scalar::int(0)
    }

    pub fn one() -> Self {
        Scalar::int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate. An involution: `x.conj().conj() == x`.
    pub fn conj(&self) -> Scalar {
        Scalar {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `|x|² = re² + im²`, always a nonnegative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Scalar {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }

    /// The real part as a rational, if the value is purely real.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_real().then(|| self.re.clone())
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

/// Exact division. Panics on a zero divisor, matching `BigRational`.
impl Div for &Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)] // division as multiplication by the inverse
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("scalar division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $trait::$method(self, &rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| &acc + &x)
    }
}

/// Formats a rational as `p` or `p/q` (lowest terms, positive denominator).
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", format_rational(&self.re));
        }
        if !self.re.is_zero() {
            write!(f, "{}", format_rational(&self.re))?;
            if self.im.is_positive() {
                write!(f, "+")?;
            }
        }
        let mag = self.im.abs();
        if self.im.is_negative() {
            write!(f, "-")?;
        }
        if mag.is_one() {
            write!(f, "i")
        } else {
            write!(f, "{}i", format_rational(&mag))
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

fn parse_error(text: &str, reason: &str) -> Error {
    Error::ScalarParse {
        text: text.to_string(),
        reason: reason.to_string(),
    }
}

fn parse_bigint(text: &str, original: &str) -> Result<BigInt> {
    BigInt::from_str(text).map_err(|_| parse_error(original, "expected an integer"))
}

fn parse_number(text: &str, original: &str) -> Result<BigRational> {
    if text.is_empty() || text == "+" || text == "-" {
        return Err(parse_error(original, "empty numeric part"));
    }
    if let Some((num, den)) = text.split_once('/') {
        let n = parse_bigint(num, original)?;
        let d = parse_bigint(den, original)?;
        if d.is_zero() {
            return Err(parse_error(original, "zero denominator"));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int_part, frac_part)) = text.split_once('.') {
        // Decimal notation is exact: d.f = (d·10^k + f) / 10^k.
        let (sign, int_digits) = match int_part.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, int_part.strip_prefix('+').unwrap_or(int_part)),
        };
        if !int_digits.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
            || (int_digits.is_empty() && frac_part.is_empty())
        {
            return Err(parse_error(original, "malformed decimal"));
        }
        let scale = BigInt::from(10u8).pow(frac_part.len() as u32);
        let int_value = if int_digits.is_empty() {
            BigInt::zero()
        } else {
            parse_bigint(int_digits, original)?
        };
        let frac_value = if frac_part.is_empty() {
            BigInt::zero()
        } else {
            parse_bigint(frac_part, original)?
        };
        return Ok(BigRational::new(
            BigInt::from(sign) * (int_value * &scale + frac_value),
            scale,
        ));
    }
    Ok(BigRational::from_integer(parse_bigint(text, original)?))
}

/// Parses a purely rational value: an integer, `p/q`, or an exact decimal
/// like `0.96` (= `24/25`).
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    parse_number(&compact, text)
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts integers, rationals `p/q`, exact decimals, and Gaussian
    /// rationals written as `a+bi`, `a-bi`, `bi`, `i`, or `-i`, where each
    /// part is itself an integer, rational, or decimal.
    fn from_str(s: &str) -> Result<Scalar> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(parse_error(s, "empty input"));
        }
        let Some(body) = compact.strip_suffix('i') else {
            return Ok(Scalar::from_rational(parse_number(&compact, s)?));
        };
        // Signs occur only at the start of a numeric part, so the last sign
        // past position 0 separates the real part from the imaginary term.
        let (re_text, im_text) = match body.rfind(['+', '-']) {
            Some(pos) if pos > 0 => (&body[..pos], &body[pos..]),
            _ => ("", body),
        };
        let re = if re_text.is_empty() {
            BigRational::zero()
        } else {
            parse_number(re_text, s)?
        };
        let im = match im_text {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            _ => parse_number(im_text, s)?,
        };
        Ok(Scalar::new(re, im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn parses_integers_rationals_decimals() {
        assert_eq!(s("3"), Scalar::int(3));
        assert_eq!(s("-7"), Scalar::int(-7));
        assert_eq!(s("3/5"), Scalar::ratio(3, 5));
        assert_eq!(s("-4/6"), Scalar::ratio(-2, 3));
        assert_eq!(s("0.96"), Scalar::ratio(24, 25));
        assert_eq!(s("-3.5"), Scalar::ratio(-7, 2));
        assert_eq!(s(".5"), Scalar::ratio(1, 2));
        assert_eq!(s("0.7"), Scalar::ratio(7, 10));
    }

    #[test]
    fn parses_gaussian_forms() {
        assert_eq!(s("i"), Scalar::i());
        assert_eq!(s("-i"), -Scalar::i());
        assert_eq!(s("2i"), Scalar::complex_ratio(0, 1, 2, 1));
        assert_eq!(s("1+i"), Scalar::complex_ratio(1, 1, 1, 1));
        assert_eq!(s("1-2i"), Scalar::complex_ratio(1, 1, -2, 1));
        assert_eq!(s("3/5-4/5i"), Scalar::complex_ratio(3, 5, -4, 5));
        assert_eq!(s("-1/2+1/3i"), Scalar::complex_ratio(-1, 2, 1, 3));
        assert_eq!(s("0.5i"), Scalar::complex_ratio(0, 1, 1, 2));
        assert_eq!(s(" 1 / 2 - i "), Scalar::complex_ratio(1, 2, -1, 1));
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in ["", "1/0", "1+", "+", "i2", "1.2.3", "2/", "a", "1+2"] {
            assert!(bad.parse::<Scalar>().is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn displays_canonical_forms() {
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::ratio(-3, 6).to_string(), "-1/2");
        assert_eq!(Scalar::i().to_string(), "i");
        assert_eq!((-Scalar::i()).to_string(), "-i");
        assert_eq!(Scalar::complex_ratio(1, 2, 1, 3).to_string(), "1/2+1/3i");
        assert_eq!(Scalar::complex_ratio(0, 1, -2, 5).to_string(), "-2/5i");
        assert_eq!(Scalar::complex_ratio(1, 1, -1, 1).to_string(), "1-i");
    }

    #[test]
    fn field_arithmetic() {
        let x = Scalar::complex_ratio(1, 2, -3, 4);
        let y = Scalar::complex_ratio(2, 3, 1, 5);
        assert_eq!(&(&x + &y) - &y, x);
        assert_eq!(&(&x * &y) / &y, x);
        assert_eq!(&x * &x.inv().unwrap(), Scalar::one());
        assert!(Scalar::zero().inv().is_err());
    }

    #[test]
    fn norm_sqr_is_conj_product() {
        let x = Scalar::complex_ratio(3, 5, -4, 5);
        let via_conj = &x * &x.conj();
        assert_eq!(via_conj.as_rational().unwrap(), x.norm_sqr());
        assert_eq!(x.norm_sqr(), BigRational::one());
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-30i64..30, 1i64..12, -30i64..30, 1i64..12)
            .prop_map(|(rp, rq, ip, iq)| Scalar::complex_ratio(rp, rq, ip, iq))
    }

    proptest! {
        #[test]
        fn conjugation_is_an_involution(x in arb_scalar()) {
            prop_assert_eq!(x.conj().conj(), x);
        }

        #[test]
        fn display_parse_round_trip(x in arb_scalar()) {
            let text = x.to_string();
            prop_assert_eq!(text.parse::<Scalar>().unwrap(), x);
        }

        #[test]
        fn multiplication_distributes(
            a in arb_scalar(), b in arb_scalar(), c in arb_scalar()
        ) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }
}
