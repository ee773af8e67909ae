//! Fixtures for the kernel benchmarks.

use toric_core::catalog;
use toric_core::cone::Polycone;
use toric_core::linalg::{ivec, IntMatrix};
use toric_core::Fan;

/// A dense 6×6 integer matrix with a nontrivial Smith form.
pub fn dense_matrix() -> IntMatrix {
    IntMatrix::from_i64(&[
        &[2, 4, 4, -6, 1, 3],
        &[-6, -12, 3, 1, 0, 2],
        &[10, -4, -16, 2, 5, 7],
        &[1, 1, 1, 1, 1, 1],
        &[3, -1, 4, -1, 5, -9],
        &[2, 6, 5, 3, 5, 8],
    ])
}

/// A simplicial 3-cone whose dual has a large Hilbert basis.
pub fn wide_cone() -> Polycone {
    Polycone::from_rays(3, &[ivec(&[1, 0, 0]), ivec(&[0, 1, 0]), ivec(&[7, 11, 13])])
        .expect("rays have length 3")
}

/// A pointed cone with many rays over a hexagon.
pub fn hexagonal_cone() -> Polycone {
    let rays: Vec<_> = [[2, 0], [1, 2], [-1, 2], [-2, 0], [-1, -2], [1, -2]]
        .iter()
        .map(|&[a, b]| ivec(&[a, b, 3]))
        .collect();
    Polycone::from_rays(3, &rays).expect("rays have length 3")
}

pub fn fans() -> Vec<(&'static str, Fan)> {
    let mut out = catalog::golden_fans();
    out.push(("P3", catalog::projective_space_three()));
    out
}
