use std::fmt;

use super::scalar::Scalar;
use super::vector::Vector;
use crate::{Error, Result};

/// A square matrix of exact scalars, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Operator {
    dim: usize,
    entries: Vec<Scalar>,
}

impl Operator {
    pub fn new(dim: usize, entries: Vec<Scalar>) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::MalformedMatrix { dim });
        }
        Ok(Operator { dim, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::MalformedMatrix { dim });
        }
        Ok(Operator {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![Scalar::zero(); dim * dim];
        for k in 0..dim {
            entries[k * dim + k] = Scalar::one();
        }
        Operator { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    fn check_dim(&self, other: &Operator) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Operator) -> Result<Operator> {
        self.check_dim(other)?;
        Ok(Operator {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Operator) -> Result<Operator> {
        self.check_dim(other)?;
        Ok(Operator {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, factor: &Scalar) -> Operator {
        Operator {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    pub fn matmul(&self, other: &Operator) -> Result<Operator> {
        self.check_dim(other)?;
        let d = self.dim;
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let mut acc = Scalar::zero();
                for k in 0..d {
                    acc = &acc + &(self.entry(i, k) * other.entry(k, j));
                }
                entries.push(acc);
            }
        }
        Ok(Operator { dim: d, entries })
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Operator {
        let d = self.dim;
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                entries.push(self.entry(j, i).conj());
            }
        }
        Operator { dim: d, entries }
    }

    pub fn trace(&self) -> Scalar {
        (0..self.dim).map(|k| self.entry(k, k).clone()).sum()
    }

    pub fn is_hermitian(&self) -> bool {
        for i in 0..self.dim {
            for j in i..self.dim {
                if *self.entry(i, j) != self.entry(j, i).conj() {
                    return false;
                }
            }
        }
        true
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: v.dim(),
            });
        }
        let entries = (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|k| self.entry(i, k) * v.entry(k))
                    .sum()
            })
            .collect();
        Vector::new(entries)
    }

    /// Exact determinant by Gaussian elimination.
    #[allow(clippy::needless_range_loop)] // elimination touches two rows at once
    pub fn determinant(&self) -> Scalar {
        let d = self.dim;
        let mut rows: Vec<Vec<Scalar>> = (0..d)
            .map(|i| (0..d).map(|j| self.entry(i, j).clone()).collect())
            .collect();
        let mut det = Scalar::one();
        for col in 0..d {
            let Some(pivot) = (col..d).find(|&r| !rows[r][col].is_zero()) else {
                return Scalar::zero();
            };
            if pivot != col {
                rows.swap(col, pivot);
                det = -det;
            }
            det = &det * &rows[col][col];
            let inv = rows[col][col].inv().expect("pivot is nonzero");
            for r in col + 1..d {
                if rows[r][col].is_zero() {
                    continue;
                }
                let factor = &rows[r][col] * &inv;
                for c in col..d {
                    rows[r][c] = &rows[r][c] - &(&factor * &rows[col][c]);
                }
            }
        }
        det
    }

    /// The principal submatrix picking `rows` (sorted, distinct) for both
    /// rows and columns.
    pub(crate) fn principal_submatrix(&self, rows: &[usize]) -> Operator {
        let entries = rows
            .iter()
            .flat_map(|&i| rows.iter().map(move |&j| self.entry(i, j).clone()))
            .collect();
        Operator {
            dim: rows.len(),
            entries,
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Operator(dim={})", self.dim)?;
        write!(f, "{self}")
    }
}

/// The rank-1 projector `|v⟩⟨v| / ⟨v|v⟩` onto a nonzero ray. Idempotent,
/// Hermitian, trace 1 — exactly.
pub fn projector_from_ray(v: &Vector) -> Result<Operator> {
    if v.is_zero() {
        return Err(Error::ZeroRay);
    }
    let norm = Scalar::from_rational(v.norm_sqr());
    let inv_norm = norm.inv().expect("nonzero ray has nonzero norm");
    let d = v.dim();
    let mut entries = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            entries.push(&(v.entry(i) * &v.entry(j).conj()) * &inv_norm);
        }
    }
    Ok(Operator { dim: d, entries })
}

/// Exact commutation test: `pq == qp`.
pub fn commutes(p: &Operator, q: &Operator) -> Result<bool> {
    p.check_dim(q)?;
    Ok(p.matmul(q)? == q.matmul(p)?)
}
