//! Seeded generators for states, unitaries, and frames.
//!
//! Everything here is driven by an explicit [`ChaCha8Rng`] so that callers
//! (tests, benches, search scripts) get reproducible streams from a fixed
//! seed.

use num::{BigInt, BigRational};
use rand::prelude::IndexedRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{DensityOperator, RationalUnitary, Scalar, State, Vector};
use crate::frames::{Frame, Ray, RayId};

/// A reproducible generator from a fixed seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Exact Pythagorean cosine/sine pairs used to build rational rotations.
const PYTHAGOREAN_PAIRS: [(i64, i64, i64); 3] = [(3, 4, 5), (5, 12, 13), (8, 15, 17)];

fn random_entry(rng: &mut ChaCha8Rng, complex: bool) -> Scalar {
    let num = rng.random_range(-6i64..=6);
    let den = rng.random_range(1i64..=4);
    if complex {
        let inum = rng.random_range(-6i64..=6);
        let iden = rng.random_range(1i64..=4);
        Scalar::complex_ratio(num, den, inum, iden)
    } else {
        Scalar::ratio(num, den)
    }
}

/// A nonzero vector with small rational (or Gaussian-rational) entries.
pub fn random_pure_state(rng: &mut ChaCha8Rng, dim: usize, complex: bool) -> Vector {
    loop {
        let entries: Vec<Scalar> = (0..dim).map(|_| random_entry(rng, complex)).collect();
        let v = Vector::new(entries).expect("dim >= 1");
        if !v.is_zero() {
            return v;
        }
    }
}

/// A random mixture of one to three pure states with rational weights.
pub fn random_density(rng: &mut ChaCha8Rng, dim: usize, complex: bool) -> DensityOperator {
    let components: Vec<(Vector, BigRational)> = (0..rng.random_range(1..=3))
        .map(|_| {
            let weight = BigRational::new(
                BigInt::from(rng.random_range(1i64..=5)),
                BigInt::from(rng.random_range(1i64..=5)),
            );
            (random_pure_state(rng, dim, complex), weight)
        })
        .collect();
    DensityOperator::from_mixture(&components).expect("weights are positive")
}

/// A random pure or mixed state.
pub fn random_state(rng: &mut ChaCha8Rng, dim: usize, complex: bool) -> State {
    if rng.random_bool(0.5) {
        State::Pure(random_pure_state(rng, dim, complex))
    } else {
        State::Density(random_density(rng, dim, complex))
    }
}

/// A random exact unitary: a product of plane rotations with Pythagorean
/// angles, a coordinate permutation, and (over the Gaussian rationals) a
/// diagonal of units.
pub fn random_unitary(rng: &mut ChaCha8Rng, dim: usize, complex: bool) -> RationalUnitary {
    let mut u = RationalUnitary::identity(dim).expect("dim >= 1");
    if dim >= 2 {
        for _ in 0..rng.random_range(1..=3) {
            let i = rng.random_range(0..dim);
            let mut j = rng.random_range(0..dim - 1);
            if j >= i {
                j += 1;
            }
            let &(a, b, c) = PYTHAGOREAN_PAIRS.choose(rng).expect("nonempty");
            let (cos, sin) = if rng.random_bool(0.5) { (a, b) } else { (b, a) };
            let sign = if rng.random_bool(0.5) { 1 } else { -1 };
            let rotation = RationalUnitary::givens(
                dim,
                i,
                j,
                BigRational::new(BigInt::from(cos), BigInt::from(c)),
                BigRational::new(BigInt::from(sign * sin), BigInt::from(c)),
            )
            .expect("pythagorean pair is exact");
            u = u.compose(&rotation).expect("same dim");
        }
    }
    let mut perm: Vec<usize> = (0..dim).collect();
    for k in (1..dim).rev() {
        let swap = rng.random_range(0..=k);
        perm.swap(k, swap);
    }
    u = u
        .compose(&RationalUnitary::permutation(&perm).expect("valid permutation"))
        .expect("same dim");
    if complex {
        let units: Vec<Scalar> = (0..dim)
            .map(|_| match rng.random_range(0..4) {
                0 => Scalar::one(),
                1 => -Scalar::one(),
                2 => Scalar::i(),
                _ => -Scalar::i(),
            })
            .collect();
        u = u
            .compose(&RationalUnitary::diagonal(units).expect("units are unimodular"))
            .expect("same dim");
    }
    u
}

fn standard_basis(dim: usize) -> Vec<Vector> {
    (0..dim)
        .map(|k| {
            let mut coords = vec![0i64; dim];
            coords[k] = 1;
            Vector::from_ints(&coords)
        })
        .collect()
}

/// A random frame with planted orthonormal bases: dimension 2–4, one to five
/// bases, at most `max_rays` rays. Later bases are either fresh rotations of
/// the standard basis or a two-ray rotation of an existing basis, which
/// shares the remaining rays and creates overlapping contexts. Half of the
/// frames declare their planted bases; the rest leave discovery to context
/// enumeration.
pub fn random_planted_frame(rng: &mut ChaCha8Rng, max_rays: usize) -> Frame {
    let dim = rng.random_range(2..=4usize);
    let basis_count = rng.random_range(1..=5usize);
    let mut bases: Vec<Vec<Vector>> = Vec::new();
    let first = random_unitary(rng, dim, false);
    bases.push(
        standard_basis(dim)
            .iter()
            .map(|e| first.apply(e).expect("same dim"))
            .collect(),
    );
    while bases.len() < basis_count {
        if rng.random_bool(0.6) {
            // Rotate two members of an existing basis inside their plane:
            // the rest of the basis is shared verbatim.
            let source = bases[rng.random_range(0..bases.len())].clone();
            let i = rng.random_range(0..dim);
            let mut j = rng.random_range(0..dim - 1);
            if j >= i {
                j += 1;
            }
            let &(a, b, c) = PYTHAGOREAN_PAIRS.choose(rng).expect("nonempty");
            let cos = Scalar::ratio(a, c);
            let sin = Scalar::ratio(b, c);
            let neg_sin = -&sin;
            let mut next = source.clone();
            next[i] = add_vectors(&source[i].scale(&cos), &source[j].scale(&sin));
            next[j] = add_vectors(&source[i].scale(&neg_sin), &source[j].scale(&cos));
            bases.push(next);
        } else {
            let u = random_unitary(rng, dim, false);
            bases.push(
                standard_basis(dim)
                    .iter()
                    .map(|e| u.apply(e).expect("same dim"))
                    .collect(),
            );
        }
    }
    // Deduplicate rays by canonical form, assigning ids in first-seen order.
    let mut rays: Vec<Ray> = Vec::new();
    let mut basis_ids: Vec<Vec<RayId>> = Vec::new();
    for basis in &bases {
        let mut ids = Vec::with_capacity(dim);
        for v in basis {
            let canonical = v.canonical_ray().expect("basis vectors are nonzero");
            let id = match rays.iter().find(|r| *r.coords() == canonical) {
                Some(existing) => existing.id(),
                None => {
                    let id = RayId(rays.len() as u32 + 1);
                    rays.push(Ray::new(id, None, &canonical).expect("nonzero"));
                    id
                }
            };
            ids.push(id);
        }
        ids.sort();
        ids.dedup();
        if ids.len() == dim {
            basis_ids.push(ids);
        }
        if rays.len() + dim > max_rays {
            break;
        }
    }
    let declared = rng.random_bool(0.5).then(|| {
        basis_ids.sort();
        basis_ids.dedup();
        basis_ids
    });
    Frame::new(dim, rays, declared).expect("planted bases are orthonormal")
}

fn add_vectors(a: &Vector, b: &Vector) -> Vector {
    let entries = a
        .entries()
        .iter()
        .zip(b.entries())
        .map(|(x, y)| x + y)
        .collect();
    Vector::new(entries).expect("dim >= 1")
}
