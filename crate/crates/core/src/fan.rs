//! Fans: finite face-closed sets of pointed cones meeting in common faces.

use std::collections::BTreeSet;

use num_traits::One;

use crate::cone::Polycone;
use crate::error::{Error, Result};
use crate::linalg::{
    complete_to_basis, integer_coordinates, rank, saturate_rows, smith_normal_form, IntMatrix,
    IntVec,
};

/// A validated fan, ordered as a lower semilattice under the face relation.
///
/// Cones are sorted by dimension, then by canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    ambient_rank: usize,
    cones: Vec<Polycone>,
    /// `face_relation[i][j]` iff `cones[i] ⪯ cones[j]`.
    face_relation: Vec<Vec<bool>>,
    /// Index of `cones[i] ∩ cones[j]`.
    inf_table: Vec<Vec<usize>>,
}

impl Fan {
    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn cones(&self) -> &[Polycone] {
        &self.cones
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    pub fn index_of(&self, cone: &Polycone) -> Option<usize> {
        self.cones.iter().position(|c| c == cone)
    }

    /// `cones[i] ⪯ cones[j]`.
    pub fn precedes(&self, i: usize, j: usize) -> bool {
        self.face_relation[i][j]
    }

    pub fn inf(&self, i: usize, j: usize) -> usize {
        self.inf_table[i][j]
    }

    /// Cones that are not proper faces of other cones.
    pub fn maximal_cones(&self) -> Vec<&Polycone> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| j == i || !self.face_relation[i][j]))
            .map(|i| &self.cones[i])
            .collect()
    }

    /// All rays of all cones, sorted.
    pub fn rays(&self) -> Vec<IntVec> {
        let set: BTreeSet<IntVec> = self
            .cones
            .iter()
            .flat_map(|c| c.rays().iter().cloned())
            .collect();
        set.into_iter().collect()
    }
}

/// Checks the fan axioms and builds the semilattice tables.
///
/// Violations are reported in the order: a cone containing a line, a missing
/// face, an intersection that is not a face of both cones.
pub fn validate_fan(ambient_rank: usize, cones: &[Polycone]) -> Result<Fan> {
    if let Some(c) = cones.iter().find(|c| c.ambient_rank() != ambient_rank) {
        return Err(Error::DimensionMismatch {
            expected: ambient_rank,
            found: c.ambient_rank(),
        });
    }
    if let Some(c) = cones.iter().find(|c| !c.is_pointed()) {
        return Err(Error::NonPointed(Box::new(c.clone())));
    }
    let set: BTreeSet<(usize, Polycone)> = cones.iter().map(|c| (c.dim(), c.clone())).collect();
    let cones: Vec<Polycone> = set.into_iter().map(|(_, c)| c).collect();
    for sigma in &cones {
        for face in sigma.faces()? {
            if !cones.contains(&face.cone) {
                return Err(Error::MissingFace {
                    cone: Box::new(sigma.clone()),
                    face: Box::new(face.cone),
                });
            }
        }
    }
    let m = cones.len();
    let mut inf_table = vec![vec![0; m]; m];
    for i in 0..m {
        for j in i..m {
            let meet = cones[i].intersect(&cones[j])?;
            if !cones[i].has_face(&meet) || !cones[j].has_face(&meet) {
                return Err(Error::BadIntersection {
                    first: Box::new(cones[i].clone()),
                    second: Box::new(cones[j].clone()),
                });
            }
            let k = cones
                .iter()
                .position(|c| *c == meet)
                .expect("faces are present");
            inf_table[i][j] = k;
            inf_table[j][i] = k;
        }
    }
    let face_relation = (0..m)
        .map(|i| (0..m).map(|j| inf_table[i][j] == i).collect())
        .collect();
    Ok(Fan {
        ambient_rank,
        cones,
        face_relation,
        inf_table,
    })
}

/// Union of the face lattices, canonical and sorted by dimension.
pub fn complete_under_faces(cones: &[Polycone]) -> Result<Vec<Polycone>> {
    let mut set = BTreeSet::new();
    for c in cones {
        for face in c.faces()? {
            set.insert((face.cone.dim(), face.cone));
        }
    }
    Ok(set.into_iter().map(|(_, c)| c).collect())
}

/// Whether the rays span the ambient space.
pub fn is_full(f: &Fan) -> bool {
    rank(&f.rays(), f.ambient_rank) == f.ambient_rank
}

/// Whether the support is the whole space.
///
/// Decided by wall crossing: the fan must be full, have a top-dimensional
/// cone, and every codimension-one cone must bound exactly two top cones.
pub fn is_complete(f: &Fan) -> bool {
    let n = f.ambient_rank;
    if n == 0 {
        return !f.is_empty();
    }
    let top: Vec<usize> = (0..f.len()).filter(|&i| f.cones[i].dim() == n).collect();
    if !is_full(f) || top.is_empty() {
        return false;
    }
    (0..f.len())
        .filter(|&i| f.cones[i].dim() == n - 1)
        .all(|w| top.iter().filter(|&&t| f.face_relation[w][t]).count() == 2)
}

/// Per-cone regularity verdicts, in the order of [`Fan::cones`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityReport {
    pub per_cone: Vec<bool>,
    pub regular: bool,
}

/// Whether a cone is generated by part of a ℤ-basis.
pub fn is_regular_cone(c: &Polycone) -> bool {
    if c.rays().len() != c.dim() {
        return false;
    }
    let m = IntMatrix::from_rows(c.rays(), c.ambient_rank());
    smith_normal_form(&m)
        .invariant_factors
        .iter()
        .all(One::is_one)
}

pub fn is_regular(f: &Fan) -> RegularityReport {
    let per_cone: Vec<bool> = f.cones.iter().map(is_regular_cone).collect();
    RegularityReport {
        regular: per_cone.iter().all(|&r| r),
        per_cone,
    }
}

/// A full fan in the saturated sublattice spanned by a fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullificationResult {
    pub reduced_fan: Fan,
    /// ℤ-basis of `N′ = N ∩ span`; reduced coordinates are taken in it.
    pub sublattice_basis: Vec<IntVec>,
    /// Rows completing `sublattice_basis` to a ℤ-basis of ℤⁿ.
    pub complement: Vec<IntVec>,
    pub torus_rank: usize,
    /// `cone_map[i]` is the index in the reduced fan of input cone `i`.
    pub cone_map: Vec<usize>,
}

pub fn fullify(f: &Fan) -> Result<FullificationResult> {
    let n = f.ambient_rank;
    let basis = saturate_rows(&f.rays(), n);
    let k = basis.len();
    let b = IntMatrix::from_rows(&basis, n);
    let full = complete_to_basis(&basis, n).expect("saturated bases extend to ℤ-bases");
    let reduced: Vec<Polycone> = f
        .cones
        .iter()
        .map(|c| {
            let rays: Vec<IntVec> = c
                .rays()
                .iter()
                .map(|r| integer_coordinates(&b, r).expect("rays lie in N′"))
                .collect();
            Polycone::from_rays(k, &rays)
        })
        .collect::<Result<_>>()?;
    let reduced_fan = validate_fan(k, &reduced)?;
    let cone_map = reduced
        .iter()
        .map(|c| reduced_fan.index_of(c).expect("cone present"))
        .collect();
    Ok(FullificationResult {
        reduced_fan,
        sublattice_basis: basis,
        complement: (k..n).map(|i| full.row(i).to_vec()).collect(),
        torus_rank: n - k,
        cone_map,
    })
}
