//! Finitely generated submonoids of ℤⁿ.
//!
//! A monoid is either the full lattice-point monoid `C ∩ ℤⁿ` of a cone, held
//! by its Hilbert basis, or the monoid generated by a designated finite set.

mod hilbert;

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub use hilbert::{hilbert_basis_in_lattice, hilbert_basis_of_cone, HilbertBasis};

use crate::cone::Polycone;
use crate::error::{Error, Result};
use crate::linalg::{add, combine, dot, neg, scale, sub, IntVec, Lattice};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMonoid {
    ambient_rank: usize,
    generators: Vec<IntVec>,
    cone: Polycone,
    lattice: Lattice,
    /// Present exactly when the monoid is `cone ∩ ℤⁿ`.
    hilbert: Option<HilbertBasis>,
}

impl AffineMonoid {
    /// The monoid generated by `generators`.
    pub fn generated_by(ambient_rank: usize, generators: &[IntVec]) -> Result<Self> {
        let cone = Polycone::from_rays(ambient_rank, generators)?;
        let set: BTreeSet<IntVec> = generators
            .iter()
            .filter(|g| g.iter().any(|x| !x.is_zero()))
            .cloned()
            .collect();
        let generators: Vec<IntVec> = set.into_iter().collect();
        Ok(Self {
            ambient_rank,
            lattice: Lattice::generated_by(&generators, ambient_rank),
            generators,
            cone,
            hilbert: None,
        })
    }

    pub fn from_i64(ambient_rank: usize, generators: &[&[i64]]) -> Result<Self> {
        let gens: Vec<IntVec> = generators.iter().map(|g| crate::linalg::ivec(g)).collect();
        Self::generated_by(ambient_rank, &gens)
    }

    /// `cone ∩ ℤⁿ`, generated by its Hilbert basis.
    pub fn lattice_points(cone: &Polycone) -> Self {
        let hb = hilbert_basis_of_cone(cone);
        let generators = hb.all();
        Self {
            ambient_rank: cone.ambient_rank(),
            lattice: Lattice::generated_by(&generators, cone.ambient_rank()),
            generators,
            cone: cone.clone(),
            hilbert: Some(hb),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// The generating set, sorted; the Hilbert basis for lattice-point monoids.
    pub fn generators(&self) -> &[IntVec] {
        &self.generators
    }

    /// `cone(generators)`.
    pub fn cone(&self) -> &Polycone {
        &self.cone
    }

    /// The group of differences as a sublattice of ℤⁿ.
    pub fn diff_lattice(&self) -> &Lattice {
        &self.lattice
    }

    /// Rank of the group of differences.
    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn is_lattice_point_monoid(&self) -> bool {
        self.hilbert.is_some()
    }

    /// Whether the monoid is a group.
    pub fn is_group(&self) -> bool {
        self.cone.normals().is_empty()
    }

    /// Whether the monoid is `{0}`.
    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        if v.len() != self.ambient_rank || !self.cone.contains(v) {
            return false;
        }
        if self.hilbert.is_some() {
            return true;
        }
        self.lattice.contains(v) && self.decompose(v)
    }

    /// Exact decision for a designated generating set.
    ///
    /// Generators in the lineality space of the cone generate a group. The
    /// remaining ones have positive weight under `w`, the sum of the facet
    /// normals, which bounds a depth-first search over their coefficients.
    fn decompose(&self, v: &[BigInt]) -> bool {
        let w = self
            .cone
            .normals()
            .iter()
            .fold(vec![BigInt::zero(); self.ambient_rank], |acc, u| {
                add(&acc, u)
            });
        let (pointed, flat): (Vec<IntVec>, Vec<IntVec>) = self
            .generators
            .iter()
            .cloned()
            .partition(|g| dot(&w, g).is_positive());
        let search = Decomposition {
            weights: pointed.iter().map(|g| dot(&w, g)).collect(),
            pointed,
            units: Lattice::generated_by(&flat, self.ambient_rank),
            cone: &self.cone,
            w,
        };
        search.run(0, v.to_vec(), &mut HashSet::new())
    }
}

struct Decomposition<'a> {
    pointed: Vec<IntVec>,
    weights: Vec<BigInt>,
    units: Lattice,
    cone: &'a Polycone,
    w: IntVec,
}

impl Decomposition<'_> {
    fn run(&self, i: usize, residual: IntVec, failed: &mut HashSet<(usize, IntVec)>) -> bool {
        if i == self.pointed.len() {
            return self.units.contains(&residual);
        }
        if !self.cone.contains(&residual) || failed.contains(&(i, residual.clone())) {
            return false;
        }
        let mut r = residual.clone();
        loop {
            if self.run(i + 1, r.clone(), failed) {
                return true;
            }
            if dot(&self.w, &r) < self.weights[i] {
                break;
            }
            r = sub(&r, &self.pointed[i]);
        }
        failed.insert((i, residual));
        false
    }
}

/// Hilbert basis of the monoid; only lattice-point monoids have one.
///
/// A generated monoid is accepted when it happens to equal `cone ∩ ℤⁿ`.
pub fn hilbert_basis(m: &AffineMonoid) -> Result<HilbertBasis> {
    if let Some(hb) = &m.hilbert {
        return Ok(hb.clone());
    }
    let hb = hilbert_basis_of_cone(&m.cone);
    match hb.all().into_iter().find(|h| !m.contains(h)) {
        Some(missing) => Err(Error::NotSaturated(missing)),
        None => Ok(hb),
    }
}

/// `σ∨ ∩ ℤⁿ`.
pub fn dual_monoid(sigma: &Polycone) -> AffineMonoid {
    AffineMonoid::lattice_points(&sigma.dual())
}

pub fn membership(m: &AffineMonoid, v: &[BigInt]) -> bool {
    m.contains(v)
}

/// `M − T`: the monoid with the elements of `T` made invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceExtension {
    pub base: AffineMonoid,
    pub inverted: Vec<IntVec>,
    pub result: AffineMonoid,
}

pub fn monoid_of_differences(m: &AffineMonoid, t: &[IntVec]) -> Result<DifferenceExtension> {
    if let Some(bad) = t.iter().find(|x| !m.contains(x)) {
        return Err(Error::NotInMonoid(bad.clone()));
    }
    let mut gens = m.generators.clone();
    gens.extend(t.iter().map(|x| neg(x)));
    Ok(DifferenceExtension {
        base: m.clone(),
        inverted: t.to_vec(),
        result: AffineMonoid::generated_by(m.ambient_rank, &gens)?,
    })
}

/// Whether `m = cone(m) ∩ diff(m)`.
pub fn is_integrally_closed(m: &AffineMonoid) -> bool {
    if m.hilbert.is_some() {
        return true;
    }
    hilbert_basis_in_lattice(&m.cone, &m.lattice)
        .all()
        .iter()
        .all(|h| m.contains(h))
}

/// The monoid generated by both generating sets.
pub fn monoid_sum(a: &AffineMonoid, b: &AffineMonoid) -> Result<AffineMonoid> {
    if a.ambient_rank != b.ambient_rank {
        return Err(Error::DimensionMismatch {
            expected: a.ambient_rank,
            found: b.ambient_rank,
        });
    }
    let mut gens = a.generators.clone();
    gens.extend(b.generators.iter().cloned());
    AffineMonoid::generated_by(a.ambient_rank, &gens)
}

/// The first generator of `a` missing from `b`, if any.
pub fn first_missing(a: &AffineMonoid, b: &AffineMonoid) -> Option<IntVec> {
    a.generators.iter().find(|g| !b.contains(g)).cloned()
}

/// Equality as subsets of ℤⁿ, by mutual membership of generators.
pub fn same_elements(a: &AffineMonoid, b: &AffineMonoid) -> bool {
    a.ambient_rank == b.ambient_rank
        && first_missing(a, b).is_none()
        && first_missing(b, a).is_none()
}

/// Certificate that `small = big − u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizationCertificate {
    pub u: IntVec,
    /// For every generator `h` of the small monoid, the least `k` with `h + k·u` in the big one.
    pub shifts: Vec<(IntVec, BigInt)>,
}

/// For faces `tau ⪯ sigma`, finds `u ∈ σ∨_M` with `τ = σ ∩ ker(u)` and `τ∨_M = σ∨_M − u`.
///
/// `u` is the sum of the facet normals of `sigma` vanishing on `tau`.
pub fn find_localizing_element(
    big: &AffineMonoid,
    small: &AffineMonoid,
    sigma: &Polycone,
    tau: &Polycone,
) -> Result<LocalizationCertificate> {
    let Some(u) = sigma.witness_of_face(tau) else {
        return Err(Error::NotAFace {
            face: Box::new(tau.clone()),
            cone: Box::new(sigma.clone()),
        });
    };
    if !big.contains(&u) {
        return Err(Error::NotInMonoid(u));
    }
    if let Some(g) = first_missing(big, small) {
        return Err(Error::NotIncluded(g));
    }
    let off_face: Vec<&IntVec> = sigma
        .rays()
        .iter()
        .filter(|r| dot(&u, r).is_positive())
        .collect();
    let mut shifts = Vec::new();
    for h in hilbert_basis(small)?.all() {
        let k = off_face
            .iter()
            .map(|r| ceil_div(&-dot(&h, r), &dot(&u, r)))
            .fold(BigInt::zero(), |a, b| a.max(b));
        let shifted = combine(&BigInt::from(1), &h, &k, &u);
        if !big.contains(&shifted) {
            return Err(Error::NotInMonoid(shifted));
        }
        shifts.push((h, k));
    }
    Ok(LocalizationCertificate { u, shifts })
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

/// Why a target monoid cannot be a single-element localization of a source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    /// The groups of differences differ; `witness` generates the target group
    /// but not the source group.
    DiffGroupMismatch { witness: IntVec },
    /// The source is integrally closed but the target is not.
    SaturationMismatch { witness: IntVec },
    /// `cone(target)` is not `cone(source)` plus the span of one of its faces.
    NotAFaceLocalization,
}

impl Obstruction {
    pub fn name(&self) -> &'static str {
        match self {
            Obstruction::DiffGroupMismatch { .. } => "diff-group mismatch",
            Obstruction::SaturationMismatch { .. } => "saturation mismatch",
            Obstruction::NotAFaceLocalization => "not a face localization",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Immersion {
    Yes { t: IntVec },
    No(Obstruction),
    Unknown,
}

/// Decides whether `target = source − t` for some `t ∈ source`.
///
/// Invariant obstructions give `No`; otherwise `t` is searched among the
/// ℕ-combinations of source generators with coefficient sum at most
/// `search_bound`, restricted to the relative interior of the face that
/// must become invertible.
pub fn check_openly_immersive_pair(
    target: &AffineMonoid,
    source: &AffineMonoid,
    search_bound: usize,
) -> Result<Immersion> {
    if target.ambient_rank != source.ambient_rank {
        return Err(Error::DimensionMismatch {
            expected: target.ambient_rank,
            found: source.ambient_rank,
        });
    }
    if let Some(g) = first_missing(source, target) {
        return Err(Error::NotIncluded(g));
    }
    if let Some(w) = target
        .lattice
        .basis()
        .iter()
        .find(|b| !source.lattice.contains(b))
    {
        return Ok(Immersion::No(Obstruction::DiffGroupMismatch {
            witness: w.clone(),
        }));
    }
    if is_integrally_closed(source) {
        if let Some(w) = hilbert_basis_in_lattice(&target.cone, &target.lattice)
            .all()
            .into_iter()
            .find(|h| !target.contains(h))
        {
            return Ok(Immersion::No(Obstruction::SaturationMismatch {
                witness: w,
            }));
        }
    }
    let n = target.ambient_rank;
    let units = target.cone.lineality();
    let mut span_gens: Vec<IntVec> = units.to_vec();
    span_gens.extend(units.iter().map(|l| neg(l)));
    let unit_space = Polycone::from_rays(n, &span_gens)?;
    let face = source.cone.intersect(&unit_space)?;
    let mut expected = source.cone.generators();
    expected.extend(span_gens);
    if !source.cone.has_face(&face)
        || face.dim() != units.len()
        || Polycone::from_rays(n, &expected)? != target.cone
    {
        return Ok(Immersion::No(Obstruction::NotAFaceLocalization));
    }
    for t in combinations(&source.generators, search_bound) {
        if face.contains_in_relative_interior(&t) && localizes_at(target, source, &t, search_bound)
        {
            return Ok(Immersion::Yes { t });
        }
    }
    Ok(Immersion::Unknown)
}

/// Whether `target ⊆ source − t` and `−t ∈ target`.
fn localizes_at(target: &AffineMonoid, source: &AffineMonoid, t: &IntVec, slack: usize) -> bool {
    if !target.contains(&neg(t)) {
        return false;
    }
    target.generators.iter().all(|g| {
        let Some(k_min) = least_shift(&source.cone, g, t) else {
            return false;
        };
        let mut x = combine(&BigInt::from(1), g, &k_min, t);
        for _ in 0..=slack {
            if source.contains(&x) {
                return true;
            }
            x = add(&x, t);
        }
        false
    })
}

/// Least `k ≥ 0` with `g + k·t ∈ cone`, if any.
fn least_shift(cone: &Polycone, g: &IntVec, t: &IntVec) -> Option<BigInt> {
    if cone.equations().iter().any(|e| !dot(e, g).is_zero()) {
        return None;
    }
    let mut k = BigInt::zero();
    for u in cone.normals() {
        let (ug, ut) = (dot(u, g), dot(u, t));
        if ut.is_positive() {
            k = k.max(ceil_div(&-ug, &ut));
        } else if ug.is_negative() {
            return None;
        }
    }
    Some(k)
}

/// Sums of the generators with coefficient sum `0..=bound`, by increasing sum.
fn combinations(gens: &[IntVec], bound: usize) -> Vec<IntVec> {
    let n = gens.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for total in 0..=bound {
        let mut coeffs = vec![0usize; gens.len()];
        fill(gens, &mut coeffs, 0, total, n, &mut out);
    }
    out
}

fn fill(
    gens: &[IntVec],
    coeffs: &mut Vec<usize>,
    i: usize,
    left: usize,
    n: usize,
    out: &mut Vec<IntVec>,
) {
    if i == gens.len() {
        if left == 0 {
            let mut v = vec![BigInt::zero(); n];
            for (c, g) in coeffs.iter().zip(gens) {
                v = add(&v, &scale(&BigInt::from(*c), g));
            }
            out.push(v);
        }
        return;
    }
    for c in (0..=left).rev() {
        coeffs[i] = c;
        fill(gens, coeffs, i + 1, left - c, n, out);
    }
    coeffs[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ivec;

    fn vs(rows: &[&[i64]]) -> Vec<IntVec> {
        rows.iter().map(|r| ivec(r)).collect()
    }

    fn gen(n: usize, g: &[&[i64]]) -> AffineMonoid {
        AffineMonoid::from_i64(n, g).unwrap()
    }

    fn cone(n: usize, rays: &[&[i64]]) -> Polycone {
        Polycone::from_i64_rays(n, rays).unwrap()
    }

    #[test]
    fn dual_monoids() {
        let q = dual_monoid(&cone(2, &[&[1, 0], &[0, 1]]));
        assert_eq!(q.generators(), vs(&[&[0, 1], &[1, 0]]).as_slice());
        let a2 = dual_monoid(&cone(2, &[&[1, 0], &[1, 2]]));
        assert_eq!(
            a2.generators(),
            vs(&[&[0, 1], &[1, 0], &[2, -1]]).as_slice()
        );
        let z = dual_monoid(&Polycone::zero(2));
        assert_eq!(
            z.generators(),
            vs(&[&[-1, 0], &[0, -1], &[0, 1], &[1, 0]]).as_slice()
        );
        assert!(z.is_group());
    }

    #[test]
    fn membership_examples() {
        let q = dual_monoid(&cone(2, &[&[1, 0], &[0, 1]]));
        assert!(q.contains(&ivec(&[3, 2])));
        assert!(!gen(2, &[&[2, 0], &[0, 1]]).contains(&ivec(&[1, 0])));
        let m = gen(2, &[&[1, 2], &[2, 1]]);
        assert!(m.contains(&ivec(&[3, 3])));
        assert!(!m.contains(&ivec(&[2, 2])));
        assert!(m.contains(&ivec(&[0, 0])));
        // a non-pointed generated monoid: ⟨(1,0), (−2,0), (0,3)⟩
        let h = gen(2, &[&[1, 0], &[-2, 0], &[0, 3]]);
        assert!(h.contains(&ivec(&[-7, 6])));
        assert!(!h.contains(&ivec(&[0, 4])));
        assert!(!h.contains(&ivec(&[0, -3])));
    }

    #[test]
    fn hilbert_basis_rejects_unsaturated() {
        let m = gen(1, &[&[2], &[3]]);
        assert_eq!(hilbert_basis(&m), Err(Error::NotSaturated(ivec(&[1]))));
        let q = gen(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(hilbert_basis(&q).unwrap().all(), vs(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn differences() {
        let n2 = gen(2, &[&[1, 0], &[0, 1]]);
        let z2 = gen(2, &[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]]);
        let e = monoid_of_differences(&n2, &[ivec(&[1, 0])]).unwrap();
        assert!(same_elements(
            &e.result,
            &gen(2, &[&[1, 0], &[-1, 0], &[0, 1]])
        ));
        let e = monoid_of_differences(&n2, &vs(&[&[1, 0], &[0, 1]])).unwrap();
        assert!(same_elements(&e.result, &z2));
        let e = monoid_of_differences(&n2, &[ivec(&[1, 1])]).unwrap();
        assert!(same_elements(&e.result, &z2));
        assert_eq!(e.result.diff_lattice(), n2.diff_lattice());
        assert_eq!(
            monoid_of_differences(&n2, &[ivec(&[-1, 0])]).unwrap_err(),
            Error::NotInMonoid(ivec(&[-1, 0]))
        );
    }

    #[test]
    fn integral_closure() {
        assert!(is_integrally_closed(&gen(2, &[&[1, 0], &[0, 1]])));
        assert!(!is_integrally_closed(&gen(1, &[&[2], &[3]])));
        assert!(is_integrally_closed(&gen(1, &[&[2]])));
        assert!(is_integrally_closed(&gen(2, &[&[2, 0], &[1, 1], &[0, 2]])));
        assert!(is_integrally_closed(&gen(2, &[&[1, 0], &[1, 2]])));
        assert!(!is_integrally_closed(&gen(2, &[&[2, 0], &[3, 0], &[0, 1]])));
        assert!(is_integrally_closed(&dual_monoid(&cone(
            2,
            &[&[1, 0], &[1, 2]]
        ))));
    }

    #[test]
    fn sums() {
        let q = dual_monoid(&cone(2, &[&[1, 0], &[0, 1]]));
        assert!(same_elements(&monoid_sum(&q, &q).unwrap(), &q));
        let s = monoid_sum(&gen(2, &[&[1, 0]]), &gen(2, &[&[0, 1]])).unwrap();
        assert!(same_elements(&s, &q));
        let s = monoid_sum(
            &dual_monoid(&cone(1, &[&[1]])),
            &dual_monoid(&cone(1, &[&[-1]])),
        )
        .unwrap();
        assert!(same_elements(&s, &dual_monoid(&Polycone::zero(1))));
    }

    #[test]
    fn localizing_elements() {
        let sigma = cone(2, &[&[1, 0], &[0, 1]]);
        let tau = cone(2, &[&[1, 0]]);
        let c = find_localizing_element(&dual_monoid(&sigma), &dual_monoid(&tau), &sigma, &tau)
            .unwrap();
        assert_eq!(c.u, ivec(&[0, 1]));
        let c = find_localizing_element(&dual_monoid(&sigma), &dual_monoid(&sigma), &sigma, &sigma)
            .unwrap();
        assert_eq!(c.u, ivec(&[0, 0]));
        let a2 = cone(2, &[&[1, 0], &[1, 2]]);
        let c = find_localizing_element(&dual_monoid(&a2), &dual_monoid(&tau), &a2, &tau).unwrap();
        assert_eq!(c.u, ivec(&[0, 1]));
        let diagonal = cone(2, &[&[1, 1]]);
        assert!(matches!(
            find_localizing_element(
                &dual_monoid(&sigma),
                &dual_monoid(&diagonal),
                &sigma,
                &diagonal
            ),
            Err(Error::NotAFace { .. })
        ));
    }

    #[test]
    fn immersive_pairs() {
        let n2 = gen(2, &[&[1, 0], &[0, 1]]);
        let z2 = dual_monoid(&Polycone::zero(2));
        assert_eq!(
            check_openly_immersive_pair(&z2, &n2, 6).unwrap(),
            Immersion::Yes { t: ivec(&[1, 1]) }
        );
        let n = gen(1, &[&[1]]);
        let two_n = gen(1, &[&[2]]);
        assert_eq!(
            check_openly_immersive_pair(&n, &two_n, 6).unwrap(),
            Immersion::No(Obstruction::DiffGroupMismatch {
                witness: ivec(&[1])
            })
        );
        assert_eq!(
            check_openly_immersive_pair(&n2, &n2, 6).unwrap(),
            Immersion::Yes { t: ivec(&[0, 0]) }
        );
        assert!(matches!(
            check_openly_immersive_pair(&two_n, &n, 6),
            Err(Error::NotIncluded(_))
        ));
        let skew = gen(2, &[&[1, 0], &[0, 1], &[-1, -1]]);
        let upper = gen(2, &[&[1, 0], &[-1, 0], &[0, 1]]);
        assert_eq!(
            check_openly_immersive_pair(&upper, &n2, 6).unwrap(),
            Immersion::Yes { t: ivec(&[1, 0]) }
        );
        assert_eq!(
            check_openly_immersive_pair(&skew, &n2, 6).unwrap(),
            Immersion::Yes { t: ivec(&[1, 1]) }
        );
        // the ray (−1,1) leaves ℕ² through no face
        let slanted = gen(2, &[&[1, 0], &[0, 1], &[-1, 1]]);
        assert_eq!(
            check_openly_immersive_pair(&slanted, &n2, 6).unwrap(),
            Immersion::No(Obstruction::NotAFaceLocalization)
        );
    }

    #[test]
    fn saturation_obstruction_and_unknown() {
        let n2 = gen(2, &[&[1, 0], &[0, 1]]);
        let target = gen(2, &[&[1, 0], &[0, 1], &[-3, 2]]);
        assert_eq!(
            check_openly_immersive_pair(&target, &n2, 6).unwrap(),
            Immersion::No(Obstruction::SaturationMismatch {
                witness: ivec(&[-1, 1])
            })
        );
        let source = gen(2, &[&[1, 0], &[0, 1]]);
        let target = gen(2, &[&[1, 0], &[0, 1], &[-2, 0], &[-3, 0]]);
        assert_eq!(
            check_openly_immersive_pair(&target, &source, 6).unwrap(),
            Immersion::Yes { t: ivec(&[1, 0]) }
        );
        let source = gen(1, &[&[2], &[3]]);
        let target = gen(1, &[&[2], &[3], &[-4], &[-6]]);
        assert!(matches!(
            check_openly_immersive_pair(&target, &source, 6).unwrap(),
            Immersion::Yes { .. }
        ));
        assert_eq!(
            check_openly_immersive_pair(&target, &source, 0).unwrap(),
            Immersion::Unknown
        );
    }
}
