//! Born tables, additivity, the support collapse, reconstruction
//! diagnostics, and evolution invariance over random exact inputs.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Zero};
use potentia_core::{
    born_giv, check_psa, collapse_tau, is_asa, reconstruct_density, resolve_bases, samples,
    BinaryValuation, DensityOperator, Frame, IntensiveValuation, Origin, Ray, RayId,
    Reconstruction, State, Vector,
};

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

#[test]
fn born_tables_satisfy_additivity_for_random_states() {
    let frame = samples::cabello18();
    let bases = resolve_bases(&frame).unwrap();
    let mut rng = potentia_core::random::rng(41);
    for _ in 0..30 {
        let state = potentia_core::random::random_state(&mut rng, 4, false);
        let giv = born_giv(&frame, &state).unwrap();
        assert!(check_psa(&giv, &frame));
        for basis in &bases {
            let sum: BigRational = basis
                .members()
                .iter()
                .map(|id| giv.value(*id).unwrap().clone())
                .sum();
            assert!(sum.is_one());
        }
    }
}

#[test]
fn collapse_of_born_tables_is_never_admissible_on_cabello() {
    let frame = samples::cabello18();
    let bases = resolve_bases(&frame).unwrap();
    let mut rng = potentia_core::random::rng(42);
    for _ in 0..30 {
        let state = potentia_core::random::random_state(&mut rng, 4, false);
        let collapsed = collapse_tau(&born_giv(&frame, &state).unwrap());
        assert!(!is_asa(&collapsed, &bases));
    }
}

#[test]
fn collapse_is_not_injective_on_admissible_tables() {
    // Two distinct full-support Born tables collapse to the same constant-1
    // valuation: the binary shadow forgets the intensities.
    let frame = samples::cabello18();
    let spread = State::pure(Vector::from_ints(&[1, 2, 4, 8])).unwrap();
    let mixed = State::Density(DensityOperator::maximally_mixed(4).unwrap());
    let giv_a = born_giv(&frame, &spread).unwrap();
    let giv_b = born_giv(&frame, &mixed).unwrap();
    assert!(check_psa(&giv_a, &frame) && check_psa(&giv_b, &frame));
    assert_ne!(giv_a.values(), giv_b.values());
    assert!(giv_a.values().values().all(|v| !v.is_zero()));
    let collapsed_a = collapse_tau(&giv_a);
    let collapsed_b = collapse_tau(&giv_b);
    assert_eq!(collapsed_a, collapsed_b);
    assert_eq!(collapsed_a, BinaryValuation::constant(&frame, true));
}

#[test]
fn reconstruction_diagnoses_underdetermined_frames() {
    // Two rays in dimension 2 leave the off-diagonal free.
    let frame = Frame::new(
        2,
        vec![
            Ray::new(RayId(1), None, &Vector::from_ints(&[1, 0])).unwrap(),
            Ray::new(RayId(2), None, &Vector::from_ints(&[0, 1])).unwrap(),
        ],
        None,
    )
    .unwrap();
    let values: BTreeMap<RayId, BigRational> =
        [(RayId(1), rat(1, 2)), (RayId(2), rat(1, 2))].into();
    let giv = IntensiveValuation::new(&frame, values, Origin::Loaded).unwrap();
    assert_eq!(
        reconstruct_density(&frame, &giv).unwrap(),
        Reconstruction::Underdetermined
    );
}

#[test]
fn reconstruction_diagnoses_inconsistent_and_non_psd_tables() {
    let frame = samples::tomography_qubit();
    let table = |p1: BigRational, p2, p3, p4| {
        let values: BTreeMap<RayId, BigRational> = [
            (RayId(1), p1),
            (RayId(2), p2),
            (RayId(3), p3),
            (RayId(4), p4),
        ]
        .into();
        IntensiveValuation::new(&frame, values, Origin::Loaded).unwrap()
    };
    // Diagonal probabilities that contradict the unit trace.
    let inconsistent = table(rat(1, 2), rat(1, 4), rat(1, 2), rat(1, 2));
    assert_eq!(
        reconstruct_density(&frame, &inconsistent).unwrap(),
        Reconstruction::Inconsistent
    );
    // The Born table of I/2 perturbed on both complex directions: the unique
    // Hermitian solution has determinant 1/4 - 1/4 - 1/4 < 0.
    let non_psd = table(rat(1, 2), rat(1, 2), BigRational::one(), BigRational::one());
    assert_eq!(
        reconstruct_density(&frame, &non_psd).unwrap(),
        Reconstruction::NotPsd
    );
    // The unperturbed maximally mixed table round-trips.
    let mixed = table(rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2));
    match reconstruct_density(&frame, &mixed).unwrap() {
        Reconstruction::Unique(rho) => {
            assert_eq!(rho, DensityOperator::maximally_mixed(2).unwrap());
        }
        other => panic!("expected a unique solution, got {other:?}"),
    }
}

#[test]
fn reconstruction_round_trips_random_densities() {
    let frame = samples::tomography_qubit();
    let mut rng = potentia_core::random::rng(43);
    for _ in 0..25 {
        let rho = potentia_core::random::random_density(&mut rng, 2, true);
        let giv = born_giv(&frame, &State::Density(rho.clone())).unwrap();
        let outcome = reconstruct_density(&frame, &giv).unwrap();
        assert_eq!(outcome.density(), Some(&rho), "round trip failed");
    }
}

#[test]
fn evolution_invariance_over_random_exact_unitaries() {
    let frames = [
        samples::cabello18(),
        samples::qubit_pair(),
        samples::single_basis_d3(),
        samples::tomography_qubit(),
    ];
    let mut rng = potentia_core::random::rng(44);
    for frame in &frames {
        let complex = frame == &samples::tomography_qubit();
        for _ in 0..10 {
            let state = potentia_core::random::random_state(&mut rng, frame.dim(), complex);
            let u = potentia_core::random::random_unitary(&mut rng, frame.dim(), complex);
            assert!(potentia_core::evolution_commutes(frame, &state, &u).unwrap());
        }
    }
}

#[test]
fn born_giv_dimension_mismatch() {
    let frame = samples::qubit_pair();
    let state = State::pure(Vector::from_ints(&[1, 0, 0])).unwrap();
    assert!(born_giv(&frame, &state).is_err());
}
