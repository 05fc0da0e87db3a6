//! Programmatic versions of the bundled scenarios, shared by tests, benches,
//! and the dataset files shipped with the CLI.

use std::collections::BTreeMap;

use num::BigRational;

use crate::algebra::{parse_rational, DensityOperator, Operator, Scalar, Vector};
use crate::frames::{Frame, Ray, RayId};
use crate::valuations::{IntensiveValuation, Origin};

fn ray(id: u32, label: &str, coords: Vector) -> Ray {
    Ray::new(RayId(id), Some(label.to_string()), &coords).expect("sample rays are nonzero")
}

/// The 18-ray scenario in dimension 4: nine orthogonal bases, every ray in
/// exactly two of them, so no admissible binary valuation exists. Bases are
/// left undeclared and are recovered by context enumeration.
pub fn cabello18() -> Frame {
    let coords: [[i64; 4]; 18] = [
        [0, 0, 1, 0],
        [1, 1, 0, 0],
        [1, -1, 0, 0],
        [0, 1, 0, 0],
        [1, 0, 1, 0],
        [1, 0, -1, 0],
        [1, -1, 1, -1],
        [1, -1, -1, 1],
        [0, 0, 1, 1],
        [1, 1, 1, 1],
        [0, 1, 0, -1],
        [1, 0, 0, 1],
        [1, 0, 0, -1],
        [0, 1, -1, 0],
        [1, 1, -1, 1],
        [1, 1, 1, -1],
        [-1, 1, 1, 1],
        [0, 0, 0, 1],
    ];
    let rays = coords
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let id = k as u32 + 1;
            ray(id, &format!("v{id}"), Vector::from_ints(c))
        })
        .collect();
    Frame::new(4, rays, None).expect("the 18-ray scenario is well-formed")
}

/// Two disjoint qubit bases: the satisfiable two-context case.
pub fn qubit_pair() -> Frame {
    let rays = vec![
        ray(1, "z+", Vector::from_ints(&[1, 0])),
        ray(2, "z-", Vector::from_ints(&[0, 1])),
        ray(3, "x+", Vector::from_ints(&[1, 1])),
        ray(4, "x-", Vector::from_ints(&[1, -1])),
    ];
    let bases = vec![vec![RayId(1), RayId(2)], vec![RayId(3), RayId(4)]];
    Frame::new(2, rays, Some(bases)).expect("the qubit pair is well-formed")
}

/// A single orthonormal basis in dimension 3: the classical case.
pub fn single_basis_d3() -> Frame {
    let rays = vec![
        ray(1, "e1", Vector::from_ints(&[1, 0, 0])),
        ray(2, "e2", Vector::from_ints(&[0, 1, 0])),
        ray(3, "e3", Vector::from_ints(&[0, 0, 1])),
    ];
    Frame::new(3, rays, None).expect("the single basis is well-formed")
}

/// An informationally complete qubit frame: the Born table of any density
/// operator over these four rays determines it uniquely.
pub fn tomography_qubit() -> Frame {
    let rays = vec![
        ray(1, "z+", Vector::from_ints(&[1, 0])),
        ray(2, "z-", Vector::from_ints(&[0, 1])),
        ray(3, "x+", Vector::from_ints(&[1, 1])),
        ray(
            4,
            "y+",
            Vector::new(vec![Scalar::one(), Scalar::i()]).expect("two entries"),
        ),
    ];
    Frame::new(2, rays, None).expect("the tomography frame is well-formed")
}

/// A genuinely complex qubit density operator bundled with the tomography
/// scenario.
pub fn tomography_state() -> DensityOperator {
    let op = Operator::from_rows(vec![
        vec![Scalar::ratio(2, 3), Scalar::complex_ratio(1, 6, 1, 6)],
        vec![Scalar::complex_ratio(1, 6, -1, 6), Scalar::ratio(1, 3)],
    ])
    .expect("2x2 matrix");
    DensityOperator::new(op).expect("the sample state is a valid density operator")
}

/// Names and intensities for the two-player skill table: thirteen powers per
/// player, each assigned an exact rational intensity.
pub const POWER_NAMES: [&str; 13] = [
    "Ball Control",
    "Dribbling",
    "Low Pass",
    "Lofted Pass",
    "Finishing",
    "Header",
    "Defensive Prowess",
    "Kicking Power",
    "Speed",
    "Explosive Power",
    "Body Control",
    "Stamina",
    "Injury Resistance",
];

pub const MESSI_VALUES: [&str; 13] = [
    "0.96", "0.97", "0.94", "0.97", "0.98", "0.67", "0.45", "0.88", "0.95", "0.98", "0.97",
    "0.85", "0.7",
];

pub const NEYMAR_VALUES: [&str; 13] = [
    "0.88", "0.90", "0.77", "0.75", "0.86", "0.64", "0.40", "0.78", "0.90", "0.92", "0.91",
    "0.80", "0.4",
];

/// The two-player skill table as a scenario: each player's thirteen powers
/// are mutually compatible (a complete subgraph) and no cross-player pair
/// is. Realized in dimension 13 — one player on the standard basis, the
/// other on the rows of `13·I − 2·J`, which are mutually orthogonal with no
/// zero entries. The intensities come as a standalone valuation with no
/// generating state.
pub fn powers_table() -> (Frame, IntensiveValuation) {
    let mut rays = Vec::with_capacity(26);
    for (k, name) in POWER_NAMES.iter().enumerate() {
        let mut coords = vec![0i64; 13];
        coords[k] = 1;
        rays.push(ray(
            k as u32 + 1,
            &format!("{name} (Messi)"),
            Vector::from_ints(&coords),
        ));
    }
    for (k, name) in POWER_NAMES.iter().enumerate() {
        let mut coords = vec![-2i64; 13];
        coords[k] = 11;
        rays.push(ray(
            k as u32 + 14,
            &format!("{name} (Neymar)"),
            Vector::from_ints(&coords),
        ));
    }
    let frame = Frame::new(13, rays, None).expect("the powers table is well-formed");
    let mut values: BTreeMap<RayId, BigRational> = BTreeMap::new();
    for (k, text) in MESSI_VALUES.iter().enumerate() {
        values.insert(RayId(k as u32 + 1), parse_rational(text).expect("table value"));
    }
    for (k, text) in NEYMAR_VALUES.iter().enumerate() {
        values.insert(
            RayId(k as u32 + 14),
            parse_rational(text).expect("table value"),
        );
    }
    let valuation = IntensiveValuation::new(&frame, values, Origin::Loaded)
        .expect("table values lie in [0, 1]");
    (frame, valuation)
}
