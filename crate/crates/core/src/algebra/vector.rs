use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use super::scalar::Scalar;
use crate::{Error, Result};

/// A vector of exact scalars. Used both for rays (unnormalized, nonzero)
/// and for pure states.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    entries: Vec<Scalar>,
}

impl Vector {
    pub fn new(entries: Vec<Scalar>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyVector);
        }
        Ok(Vector { entries })
    }

    /// Convenience constructor for integer-valued vectors.
    ///
    /// Panics on an empty slice.
    pub fn from_ints(values: &[i64]) -> Self {
        assert!(!values.is_empty(), "vector needs at least one entry");
        Vector {
            entries: values.iter().map(|&n| Scalar::int(n)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// `⟨v|v⟩ = Σ |v_k|²`, a nonnegative rational.
    pub fn norm_sqr(&self) -> BigRational {
        self.entries
            .iter()
            .fold(BigRational::zero(), |acc, e| acc + e.norm_sqr())
    }

    pub fn scale(&self, factor: &Scalar) -> Vector {
        Vector {
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    /// Canonical projective representative of a nonzero ray: entries are
    /// scaled to coprime Gaussian integers and the overall unit `{±1, ±i}`
    /// is fixed so the first nonzero entry has positive real part and
    /// nonnegative imaginary part. Two vectors are scalar multiples of each
    /// other over the Gaussian rationals iff their canonical forms are equal.
    pub fn canonical_ray(&self) -> Result<Vector> {
        if self.is_zero() {
            return Err(Error::ZeroRay);
        }
        // Clear denominators.
        let mut lcm = BigInt::one();
        for e in &self.entries {
            lcm = lcm.lcm(e.re().denom());
            lcm = lcm.lcm(e.im().denom());
        }
        let lcm = BigRational::from_integer(lcm);
        let mut gauss: Vec<(BigInt, BigInt)> = self
            .entries
            .iter()
            .map(|e| {
                let re = e.re() * &lcm;
                let im = e.im() * &lcm;
                debug_assert!(re.denom().is_one() && im.denom().is_one());
                (re.to_integer(), im.to_integer())
            })
            .collect();
        // Divide by the Gaussian-integer gcd of the entries.
        let mut g = (BigInt::zero(), BigInt::zero());
        for z in &gauss {
            g = gauss_gcd(&g, z);
        }
        for z in gauss.iter_mut() {
            *z = gauss_div_exact(z, &g);
        }
        // Fix the unit: rotate so the first nonzero entry lands in the
        // quarter plane re > 0, im >= 0 (exactly one of the four unit
        // multiples does).
        let lead = gauss
            .iter()
            .find(|(a, b)| !a.is_zero() || !b.is_zero())
            .expect("nonzero ray has a nonzero entry")
            .clone();
        let rotations = [
            (BigInt::from(1), BigInt::from(0)),  // 1
            (BigInt::from(0), BigInt::from(1)),  // i
            (BigInt::from(-1), BigInt::from(0)), // -1
            (BigInt::from(0), BigInt::from(-1)), // -i
        ];
        let unit = rotations
            .into_iter()
            .find(|u| {
                let (a, b) = gauss_mul(&lead, u);
                a.is_positive() && !b.is_negative()
            })
            .expect("one unit multiple lies in the canonical quarter plane");
        let entries = gauss
            .iter()
            .map(|z| {
                let (a, b) = gauss_mul(z, &unit);
                Scalar::new(BigRational::from_integer(a), BigRational::from_integer(b))
            })
            .collect();
        Ok(Vector { entries })
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vector{self}")
    }
}

fn gauss_mul(x: &(BigInt, BigInt), y: &(BigInt, BigInt)) -> (BigInt, BigInt) {
    (&x.0 * &y.0 - &x.1 * &y.1, &x.0 * &y.1 + &x.1 * &y.0)
}

fn gauss_norm(x: &(BigInt, BigInt)) -> BigInt {
    &x.0 * &x.0 + &x.1 * &x.1
}

/// Exact Gaussian-integer division; the caller guarantees divisibility.
fn gauss_div_exact(x: &(BigInt, BigInt), y: &(BigInt, BigInt)) -> (BigInt, BigInt) {
    let n = gauss_norm(y);
    let conj = (y.0.clone(), -y.1.clone());
    let (a, b) = gauss_mul(x, &conj);
    let (qa, ra) = a.div_rem(&n);
    let (qb, rb) = b.div_rem(&n);
    debug_assert!(ra.is_zero() && rb.is_zero(), "inexact Gaussian division");
    (qa, qb)
}

fn round_nearest(n: &BigInt, d: &BigInt) -> BigInt {
    // d > 0; round half up.
    let two = BigInt::from(2);
    let num: BigInt = n * &two + d;
    num.div_floor(&(d * &two))
}

/// Euclidean gcd on Gaussian integers, defined up to a unit.
fn gauss_gcd(x: &(BigInt, BigInt), y: &(BigInt, BigInt)) -> (BigInt, BigInt) {
    let mut a = x.clone();
    let mut b = y.clone();
    while !(b.0.is_zero() && b.1.is_zero()) {
        let n = gauss_norm(&b);
        let conj = (b.0.clone(), -b.1.clone());
        let (p, q) = gauss_mul(&a, &conj);
        let quot = (round_nearest(&p, &n), round_nearest(&q, &n));
        let r = {
            let qb = gauss_mul(&quot, &b);
            (&a.0 - &qb.0, &a.1 - &qb.1)
        };
        a = b;
        b = r;
    }
    a
}

/// Sesquilinear inner product `⟨u|v⟩ = Σ conj(u_k)·v_k`, conjugate-linear
/// in the first argument.
pub fn inner_product(u: &Vector, v: &Vector) -> Result<Scalar> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            left: u.dim(),
            right: v.dim(),
        });
    }
    Ok(u.entries
        .iter()
        .zip(&v.entries)
        .map(|(a, b)| &a.conj() * b)
        .sum())
}

/// Rank of a family of vectors of equal dimension, by exact Gaussian
/// elimination.
#[allow(clippy::needless_range_loop)] // elimination touches two rows at once
pub fn vector_rank(vectors: &[&Vector]) -> Result<usize> {
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    let dim = first.dim();
    for v in vectors {
        if v.dim() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: v.dim(),
            });
        }
    }
    let mut rows: Vec<Vec<Scalar>> = vectors.iter().map(|v| v.entries.to_vec()).collect();
    let mut rank = 0;
    for col in 0..dim {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv().expect("pivot is nonzero");
        for c in col..dim {
            rows[rank][c] = &rows[rank][c] * &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..dim {
                    rows[r][c] = &rows[r][c] - &(&factor * &rows[rank][c]);
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    Ok(rank)
}
