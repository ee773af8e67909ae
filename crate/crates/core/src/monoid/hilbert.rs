//! Hilbert bases of lattice-point monoids `C ∩ L`.
//!
//! The lineality space is split off first. The pointed quotient is
//! triangulated by pulling its first ray, the half-open parallelepiped of
//! every simplex is enumerated through Smith coset representatives, and the
//! union of those points with the rays is minimalized.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::cone::Polycone;
use crate::linalg::{
    complete_to_basis, dot, integer_coordinates, neg, primitive, rational_inverse, saturate_rows,
    smith_normal_form, solve_left, sub, unimodular_inverse, IntMatrix, IntVec, Lattice, RatVector,
};

/// Minimal generators of a saturated affine monoid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertBasis {
    /// Irreducible elements of the pointed part, each reduced modulo the lineality lattice.
    pub pointed: Vec<IntVec>,
    /// ℤ-basis of the group of units.
    pub lineality: Vec<IntVec>,
}

impl HilbertBasis {
    /// Pointed part together with `±` the lineality basis, sorted.
    pub fn all(&self) -> Vec<IntVec> {
        let mut set: BTreeSet<IntVec> = self.pointed.iter().cloned().collect();
        for l in &self.lineality {
            set.insert(l.clone());
            set.insert(neg(l));
        }
        set.into_iter().collect()
    }
}

/// Hilbert basis of `cone ∩ ℤⁿ`.
pub fn hilbert_basis_of_cone(cone: &Polycone) -> HilbertBasis {
    let n = cone.ambient_rank();
    if cone.is_zero() {
        return HilbertBasis {
            pointed: Vec::new(),
            lineality: Vec::new(),
        };
    }
    let mut spanning: Vec<IntVec> = cone.rays().to_vec();
    spanning.extend(cone.lineality().iter().cloned());
    let w = IntMatrix::from_rows(&saturate_rows(&spanning, n), n);
    let k = w.nrows();
    let coords =
        |v: &IntVec| integer_coordinates(&w, v).expect("generator lies in its saturated span");

    let lin: Vec<IntVec> = cone.lineality().iter().map(coords).collect();
    let l = lin.len();
    let basis = complete_to_basis(&lin, k).expect("lineality lattice is saturated");
    let inverse = unimodular_inverse(&basis).expect("completion is unimodular");
    let quotient_rays: BTreeSet<IntVec> = cone
        .rays()
        .iter()
        .map(|r| primitive(&inverse.apply_left(&coords(r))[l..]))
        .collect();
    let quotient_rays: Vec<IntVec> = quotient_rays.into_iter().collect();
    let pointed_q = pointed_hilbert_basis(&quotient_rays, k - l);

    let units = Lattice::generated_by(cone.lineality(), n);
    let lift = |b: &IntVec| {
        let mut full = vec![BigInt::zero(); l];
        full.extend(b.iter().cloned());
        units.reduce(&w.apply_left(&basis.apply_left(&full)))
    };
    let pointed: BTreeSet<IntVec> = pointed_q.iter().map(lift).collect();
    HilbertBasis {
        pointed: pointed.into_iter().collect(),
        lineality: cone.lineality().to_vec(),
    }
}

/// Hilbert basis of `cone ∩ lattice`, where the span of the lattice contains the cone.
pub fn hilbert_basis_in_lattice(cone: &Polycone, lattice: &Lattice) -> HilbertBasis {
    let n = cone.ambient_rank();
    let b = lattice.basis_matrix();
    let k = b.nrows();
    let to_coords = |v: &IntVec| {
        let x = solve_left(&b, v).expect("cone lies in the span of the lattice");
        RatVector::new(x).to_primitive_ray()
    };
    let gens: Vec<IntVec> = cone.generators().iter().map(to_coords).collect();
    let local = Polycone::from_rays(k, &gens).expect("coordinates have the lattice rank");
    let hb = hilbert_basis_of_cone(&local);
    let lineality: Vec<IntVec> = hb.lineality.iter().map(|v| b.apply_left(v)).collect();
    let lineality = Lattice::generated_by(&lineality, n).basis().to_vec();
    let units = Lattice::generated_by(&lineality, n);
    let pointed: BTreeSet<IntVec> = hb
        .pointed
        .iter()
        .map(|v| units.reduce(&b.apply_left(v)))
        .collect();
    HilbertBasis {
        pointed: pointed.into_iter().collect(),
        lineality,
    }
}

/// Hilbert basis of a pointed full-dimensional cone in ℤᵈ given by its rays.
fn pointed_hilbert_basis(rays: &[IntVec], d: usize) -> Vec<IntVec> {
    if d == 0 || rays.is_empty() {
        return Vec::new();
    }
    let cone = Polycone::from_rays(d, rays).expect("rays have length d");
    let indices: Vec<usize> = (0..rays.len()).collect();
    let mut candidates: BTreeSet<IntVec> = rays.iter().cloned().collect();
    for simplex in triangulate(rays, &indices, d) {
        let v: Vec<IntVec> = simplex.iter().map(|&i| rays[i].clone()).collect();
        candidates.extend(parallelepiped_points(&v));
    }
    let candidates: Vec<IntVec> = candidates.into_iter().collect();
    candidates
        .iter()
        .filter(|x| {
            !candidates
                .iter()
                .any(|y| y != *x && cone.contains(&sub(x, y)))
        })
        .cloned()
        .collect()
}

/// Pulling triangulation of `cone(rays[subset])`, a pointed cone of dimension `d`.
fn triangulate(rays: &[IntVec], subset: &[usize], d: usize) -> Vec<Vec<usize>> {
    if subset.len() == d {
        return vec![subset.to_vec()];
    }
    let gens: Vec<IntVec> = subset.iter().map(|&i| rays[i].clone()).collect();
    let n = rays[0].len();
    let cone = Polycone::from_rays(n, &gens).expect("uniform lengths");
    let apex = &rays[subset[0]];
    let mut out = Vec::new();
    for u in cone.normals() {
        if !dot(u, apex).is_positive() {
            continue;
        }
        let facet: Vec<usize> = subset
            .iter()
            .copied()
            .filter(|&i| dot(u, &rays[i]).is_zero())
            .collect();
        for mut simplex in triangulate(rays, &facet, d - 1) {
            simplex.push(subset[0]);
            out.push(simplex);
        }
    }
    out
}

/// Nonzero lattice points of `{Σ λᵢ vᵢ : 0 ≤ λᵢ < 1}` for linearly independent `v`.
fn parallelepiped_points(v: &[IntVec]) -> Vec<IntVec> {
    let d = v.len();
    let m = IntMatrix::from_rows(v, d);
    let snf = smith_normal_form(&m);
    let right_inv = unimodular_inverse(&snf.right).expect("Smith transforms are unimodular");
    let m_inv = rational_inverse(&m).expect("simplex rays are independent");
    let factors: Vec<BigInt> = snf.invariant_factors.clone();

    let mut out = Vec::new();
    let mut a = vec![BigInt::zero(); d];
    loop {
        let x = right_inv.apply_left(&a);
        // λ = x · m⁻¹, then p = x − ⌊λ⌋ · m
        let floors: IntVec = (0..d)
            .map(|j| {
                let lambda = (0..d).fold(BigRational::zero(), |acc, i| {
                    acc + BigRational::from_integer(x[i].clone()) * &m_inv[i][j]
                });
                lambda.floor().to_integer()
            })
            .collect();
        let p = sub(&x, &m.apply_left(&floors));
        if p.iter().any(|c| !c.is_zero()) {
            out.push(p);
        }
        // odometer over 0 ≤ aᵢ < dᵢ
        let mut i = 0;
        loop {
            if i == d {
                return out;
            }
            a[i] += 1;
            if a[i] < factors[i] {
                break;
            }
            a[i] = BigInt::zero();
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ivec;

    fn vs(rows: &[&[i64]]) -> Vec<IntVec> {
        rows.iter().map(|r| ivec(r)).collect()
    }

    fn hb(n: usize, rays: &[&[i64]]) -> HilbertBasis {
        hilbert_basis_of_cone(&Polycone::from_i64_rays(n, rays).unwrap())
    }

    #[test]
    fn quadrant() {
        assert_eq!(hb(2, &[&[1, 0], &[0, 1]]).all(), vs(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn dual_of_a2_cone() {
        assert_eq!(
            hb(2, &[&[0, 1], &[2, -1]]).all(),
            vs(&[&[0, 1], &[1, 0], &[2, -1]])
        );
    }

    #[test]
    fn half_plane() {
        let b = hb(2, &[&[1, 0], &[0, 1], &[0, -1]]);
        assert_eq!(b.pointed, vs(&[&[1, 0]]));
        assert_eq!(b.lineality, vs(&[&[0, 1]]));
    }

    #[test]
    fn whole_plane_and_zero() {
        let b = hb(2, &[&[1, 0], &[0, 1], &[-1, -1]]);
        assert!(b.pointed.is_empty());
        assert_eq!(b.all(), vs(&[&[-1, 0], &[0, -1], &[0, 1], &[1, 0]]));
        assert!(hb(3, &[]).all().is_empty());
    }

    #[test]
    fn lower_dimensional_cones() {
        // a 2-cone inside a plane of ℤ³ with index-3 lattice structure
        let b = hb(3, &[&[1, 0, 0], &[1, 3, 0]]);
        assert_eq!(
            b.all(),
            vs(&[&[1, 0, 0], &[1, 1, 0], &[1, 2, 0], &[1, 3, 0]])
        );
        let b = hb(3, &[&[2, 2, 2]]);
        assert_eq!(b.all(), vs(&[&[1, 1, 1]]));
    }

    #[test]
    fn non_simplicial_cone() {
        // square pyramid over the unit square: the four rays suffice
        let b = hb(3, &[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]]);
        assert_eq!(b.pointed.len(), 4);
    }

    #[test]
    fn parallelepiped_size_is_determinant() {
        let pts = parallelepiped_points(&vs(&[&[1, 0], &[1, 5]]));
        assert_eq!(pts.len(), 4);
        let pts = parallelepiped_points(&vs(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 1]]));
        assert_eq!(pts.len(), 5);
    }

    #[test]
    fn sublattice_points() {
        let l = Lattice::generated_by(&vs(&[&[2]]), 1);
        let cone = Polycone::from_i64_rays(1, &[&[1]]).unwrap();
        assert_eq!(hilbert_basis_in_lattice(&cone, &l).all(), vs(&[&[2]]));
        let l = Lattice::generated_by(&vs(&[&[1, 1], &[1, -1]]), 2);
        let q = Polycone::from_i64_rays(2, &[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(
            hilbert_basis_in_lattice(&q, &l).all(),
            vs(&[&[0, 2], &[1, 1], &[2, 0]])
        );
    }
}
