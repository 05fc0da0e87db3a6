//! Recovers a density operator from its Born table by exact linear
//! inversion.
//!
//! A Hermitian `d×d` operator has `d²` real degrees of freedom: the diagonal
//! plus the real and imaginary parts of each above-diagonal entry. Every ray
//! contributes one real linear equation
//! `Tr(ρ·P_v) = Σ_j P_jj·ρ_jj + Σ_{j<k} (2·Re(P_kj)·Re ρ_jk − 2·Im(P_kj)·Im ρ_jk)`,
//! and the trace condition contributes one more. Gaussian elimination over
//! the rationals then either pins the operator uniquely, shows the system
//! underdetermined, or refutes it.

use std::collections::BTreeMap;

use num::{BigRational, One, Zero};

use crate::algebra::{projector_from_ray, Operator, Scalar};
use crate::frames::{Frame, RayId};
use crate::{DensityOperator, Error, Result};

use super::IntensiveValuation;

/// Outcome of [`reconstruct_density`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reconstruction {
    /// The frame is informationally complete for this table and the unique
    /// solution is a valid density operator.
    Unique(DensityOperator),
    /// The equations are consistent but do not pin the operator.
    Underdetermined,
    /// No Hermitian trace-1 operator reproduces the table.
    Inconsistent,
    /// The equations pin a unique Hermitian trace-1 operator, but it is not
    /// positive semi-definite.
    NotPsd,
}

impl Reconstruction {
    pub fn density(&self) -> Option<&DensityOperator> {
        match self {
            Reconstruction::Unique(rho) => Some(rho),
            _ => None,
        }
    }

    pub fn describe(&self) -> &'static str {
        match self {
            Reconstruction::Unique(_) => "unique",
            Reconstruction::Underdetermined => "underdetermined",
            Reconstruction::Inconsistent => "inconsistent",
            Reconstruction::NotPsd => "not-psd",
        }
    }
}

/// Solves `Tr(ρ·P_v) = giv(v)` for all rays, plus `Tr(ρ) = 1`, over
/// Hermitian `ρ`.
///
/// Returns [`Reconstruction::Unique`] only when the rational system has full
/// rank and the solution passes the positive-semidefiniteness check; the
/// check enumerates principal minors and errors above its dimension cap.
#[allow(clippy::needless_range_loop)] // row reduction touches two rows at once
pub fn reconstruct_density(frame: &Frame, giv: &IntensiveValuation) -> Result<Reconstruction> {
    let d = frame.dim();
    let unknowns = d * d;
    // Column layout: diagonal entries, then (re, im) per above-diagonal pair.
    let pair_column: BTreeMap<(usize, usize), usize> = {
        let mut map = BTreeMap::new();
        let mut next = d;
        for j in 0..d {
            for k in j + 1..d {
                map.insert((j, k), next);
                next += 2;
            }
        }
        map
    };

    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(frame.rays().len() + 1);
    let sorted_ids: Vec<RayId> = frame.ray_ids();
    for id in &sorted_ids {
        let ray = frame.ray(*id).expect("id comes from the frame");
        let p = projector_from_ray(ray.coords())?;
        let mut row = vec![BigRational::zero(); unknowns + 1];
        for j in 0..d {
            row[j] = p
                .entry(j, j)
                .as_rational()
                .expect("diagonal of a Hermitian operator is real");
        }
        for (&(j, k), &col) in &pair_column {
            let below = p.entry(k, j);
            row[col] = below.re() * BigRational::from_integer(2.into());
            row[col + 1] = below.im() * BigRational::from_integer((-2).into());
        }
        row[unknowns] = giv.value(*id).expect("valuation is total").clone();
        rows.push(row);
    }
    let mut trace_row = vec![BigRational::zero(); unknowns + 1];
    for j in 0..d {
        trace_row[j] = BigRational::one();
    }
    trace_row[unknowns] = BigRational::one();
    rows.push(trace_row);

    // Reduced row echelon form.
    let mut rank = 0;
    let mut pivot_cols = Vec::new();
    for col in 0..unknowns {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].clone();
        for c in col..=unknowns {
            rows[rank][c] = &rows[rank][c] / &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..=unknowns {
                    let delta = &factor * &rows[rank][c];
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    for row in &rows[rank..] {
        if !row[unknowns].is_zero() {
            return Ok(Reconstruction::Inconsistent);
        }
    }
    if rank < unknowns {
        return Ok(Reconstruction::Underdetermined);
    }

    let mut solution = vec![BigRational::zero(); unknowns];
    for (r, &col) in pivot_cols.iter().enumerate() {
        solution[col] = rows[r][unknowns].clone();
    }
    let mut entries = vec![Scalar::zero(); d * d];
    for j in 0..d {
        entries[j * d + j] = Scalar::from_rational(solution[j].clone());
    }
    for (&(j, k), &col) in &pair_column {
        let value = Scalar::new(solution[col].clone(), solution[col + 1].clone());
        entries[k * d + j] = value.conj();
        entries[j * d + k] = value;
    }
    let op = Operator::new(d, entries)?;
    match DensityOperator::new(op) {
        Ok(rho) => Ok(Reconstruction::Unique(rho)),
        Err(Error::NotPositiveSemiDefinite { .. }) => Ok(Reconstruction::NotPsd),
        Err(other) => Err(other),
    }
}
