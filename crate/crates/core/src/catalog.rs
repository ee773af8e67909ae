//! Small named fans used as fixtures and examples.

use crate::cone::Polycone;
use crate::fan::{complete_under_faces, validate_fan, Fan};

/// The face closure of the cones spanned by each ray list.
pub fn fan_from_maximal(n: usize, maximal: &[&[&[i64]]]) -> Fan {
    let cones: Vec<Polycone> = maximal
        .iter()
        .map(|rays| Polycone::from_i64_rays(n, rays).expect("ray lengths match"))
        .collect();
    let closed = complete_under_faces(&cones).expect("catalog cones are pointed");
    validate_fan(n, &closed).expect("catalog fans are valid")
}

pub fn projective_line() -> Fan {
    fan_from_maximal(1, &[&[&[1]], &[&[-1]]])
}

pub fn projective_plane() -> Fan {
    fan_from_maximal(
        2,
        &[
            &[&[1, 0], &[0, 1]],
            &[&[0, 1], &[-1, -1]],
            &[&[-1, -1], &[1, 0]],
        ],
    )
}

/// The Hirzebruch surface `F₂`.
pub fn hirzebruch_two() -> Fan {
    fan_from_maximal(
        2,
        &[
            &[&[1, 0], &[0, 1]],
            &[&[0, 1], &[-1, 2]],
            &[&[-1, 2], &[0, -1]],
            &[&[0, -1], &[1, 0]],
        ],
    )
}

/// The cone over the `A₂` quadric singularity with its faces.
pub fn a2_cone() -> Fan {
    fan_from_maximal(2, &[&[&[1, 0], &[1, 2]]])
}

pub fn quadrant() -> Fan {
    fan_from_maximal(2, &[&[&[1, 0], &[0, 1]]])
}

pub fn projective_space_three() -> Fan {
    let rays: [&[i64]; 4] = [&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]];
    let maximal: Vec<Vec<&[i64]>> = (0..4)
        .map(|skip| (0..4).filter(|&i| i != skip).map(|i| rays[i]).collect())
        .collect();
    let refs: Vec<&[&[i64]]> = maximal.iter().map(Vec::as_slice).collect();
    fan_from_maximal(3, &refs)
}

/// The four fans every property check is run against.
pub fn golden_fans() -> Vec<(&'static str, Fan)> {
    vec![
        ("P1", projective_line()),
        ("P2", projective_plane()),
        ("F2", hirzebruch_two()),
        ("A2", a2_cone()),
    ]
}
