//! Rational polyhedral cones in a fixed lattice ℤⁿ.
//!
//! A [`Polycone`] carries both descriptions at once: generators (extremal rays
//! plus a lineality basis) and halfspaces (facet normals plus equations). Both
//! are produced by the double description method and kept in canonical form,
//! so structural equality is equality of cones.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{fmt_vec, Error, Result};
use crate::linalg::{
    combine, dot, ivec, neg, primitive, project_out, rank, saturate_rows, IntVec, RatVector,
};

/// A rational polyhedral cone `cone(rays) + span(lineality)`, equivalently
/// `{x : ⟨u,x⟩ ≥ 0 for u in normals, ⟨e,x⟩ = 0 for e in equations}`.
///
/// Canonical form: rays primitive, extremal, orthogonal to the lineality
/// space and sorted; lineality and equations are saturated Hermite bases;
/// normals likewise reduced against the equations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polycone {
    ambient_rank: usize,
    rays: Vec<IntVec>,
    lineality: Vec<IntVec>,
    normals: Vec<IntVec>,
    equations: Vec<IntVec>,
}

/// A face together with the covector that cuts it out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub cone: Polycone,
    /// `u` in the dual cone with `face = cone ∩ ker(u)`.
    pub witness: IntVec,
}

impl Polycone {
    /// `cone(generators)`. Lines are allowed; the empty list gives the zero cone.
    pub fn from_rays(ambient_rank: usize, generators: &[IntVec]) -> Result<Self> {
        check_lengths(ambient_rank, generators)?;
        let (normals, equations) = halfspace_generators(ambient_rank, generators);
        let mut ineqs = normals.clone();
        for e in &equations {
            ineqs.push(e.clone());
            ineqs.push(neg(e));
        }
        let (rays, lineality) = halfspace_generators(ambient_rank, &ineqs);
        Ok(Self::canonical(
            ambient_rank,
            rays,
            lineality,
            normals,
            equations,
        ))
    }

    pub fn from_i64_rays(ambient_rank: usize, generators: &[&[i64]]) -> Result<Self> {
        let gens: Vec<IntVec> = generators.iter().map(|g| ivec(g)).collect();
        Self::from_rays(ambient_rank, &gens)
    }

    /// `{x : ⟨u,x⟩ ≥ 0 for u in inequalities, ⟨e,x⟩ = 0 for e in equations}`.
    pub fn from_halfspaces(
        ambient_rank: usize,
        inequalities: &[IntVec],
        equations: &[IntVec],
    ) -> Result<Self> {
        check_lengths(ambient_rank, inequalities)?;
        check_lengths(ambient_rank, equations)?;
        let mut ineqs = inequalities.to_vec();
        for e in equations {
            ineqs.push(e.clone());
            ineqs.push(neg(e));
        }
        let (rays, lineality) = halfspace_generators(ambient_rank, &ineqs);
        let mut gens = rays.clone();
        for l in &lineality {
            gens.push(l.clone());
            gens.push(neg(l));
        }
        let (normals, eqs) = halfspace_generators(ambient_rank, &gens);
        Ok(Self::canonical(ambient_rank, rays, lineality, normals, eqs))
    }

    pub fn zero(ambient_rank: usize) -> Self {
        Self::from_rays(ambient_rank, &[]).expect("no generators to mismatch")
    }

    fn canonical(
        n: usize,
        rays: Vec<IntVec>,
        lineality: Vec<IntVec>,
        normals: Vec<IntVec>,
        equations: Vec<IntVec>,
    ) -> Self {
        let lineality = saturate_rows(&lineality, n);
        let equations = saturate_rows(&equations, n);
        let reduce = |vs: Vec<IntVec>, against: &[IntVec]| -> Vec<IntVec> {
            let set: BTreeSet<IntVec> = vs.iter().map(|v| project_out(v, against)).collect();
            set.into_iter().collect()
        };
        let rays = reduce(rays, &lineality);
        let normals = reduce(normals, &equations);
        Self {
            ambient_rank: n,
            rays,
            lineality,
            normals,
            equations,
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// Extremal rays of the pointed part.
    pub fn rays(&self) -> &[IntVec] {
        &self.rays
    }

    /// ℤ-basis of the lattice points of the largest linear subspace contained.
    pub fn lineality(&self) -> &[IntVec] {
        &self.lineality
    }

    /// Irredundant facet normals.
    pub fn normals(&self) -> &[IntVec] {
        &self.normals
    }

    /// ℤ-basis of the lattice points of the orthogonal complement of the span.
    pub fn equations(&self) -> &[IntVec] {
        &self.equations
    }

    pub fn dim(&self) -> usize {
        self.ambient_rank - self.equations.len()
    }

    pub fn lineality_rank(&self) -> usize {
        self.lineality.len()
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    /// All generators, with the lineality basis entered with both signs.
    pub fn generators(&self) -> Vec<IntVec> {
        let mut g = self.rays.clone();
        for l in &self.lineality {
            g.push(l.clone());
            g.push(neg(l));
        }
        g
    }

    /// All inequalities, with every equation entered with both signs.
    pub fn inequalities(&self) -> Vec<IntVec> {
        let mut h = self.normals.clone();
        for e in &self.equations {
            h.push(e.clone());
            h.push(neg(e));
        }
        h
    }

    /// `{u : ⟨u,x⟩ ≥ 0 for all x in the cone}`; swaps the two descriptions.
    pub fn dual(&self) -> Polycone {
        Polycone {
            ambient_rank: self.ambient_rank,
            rays: self.normals.clone(),
            lineality: self.equations.clone(),
            normals: self.rays.clone(),
            equations: self.lineality.clone(),
        }
    }

    /// Membership of a lattice point.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.normals.iter().all(|u| !dot(u, v).is_negative())
            && self.equations.iter().all(|e| dot(e, v).is_zero())
    }

    pub fn contains_point(&self, p: &RatVector) -> Result<bool> {
        if p.len() != self.ambient_rank {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_rank,
                found: p.len(),
            });
        }
        Ok(self.normals.iter().all(|u| !p.pair(u).is_negative())
            && self.equations.iter().all(|e| p.pair(e).is_zero()))
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains_cone(&self, other: &Polycone) -> bool {
        other.generators().iter().all(|g| self.contains(g))
    }

    /// Whether `v` lies in the relative interior.
    pub fn contains_in_relative_interior(&self, v: &[BigInt]) -> bool {
        self.normals.iter().all(|u| dot(u, v).is_positive())
            && self.equations.iter().all(|e| dot(e, v).is_zero())
    }

    pub fn intersect(&self, other: &Polycone) -> Result<Polycone> {
        if other.ambient_rank != self.ambient_rank {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_rank,
                found: other.ambient_rank,
            });
        }
        let mut ineqs = self.normals.clone();
        ineqs.extend(other.normals.iter().cloned());
        let mut eqs = self.equations.clone();
        eqs.extend(other.equations.iter().cloned());
        Polycone::from_halfspaces(self.ambient_rank, &ineqs, &eqs)
    }

    /// Sum of the facet normals vanishing on every generator of `tau`; the
    /// canonical witness covector for the smallest face containing `tau`.
    pub fn face_witness(&self, tau: &Polycone) -> IntVec {
        let gens = tau.generators();
        let mut u = vec![BigInt::zero(); self.ambient_rank];
        for normal in &self.normals {
            if gens.iter().all(|g| dot(normal, g).is_zero()) {
                u = combine(&1.into(), &u, &1.into(), normal);
            }
        }
        u
    }

    /// `self ∩ ker(u)` for `u` in the dual cone, computed ray-wise.
    pub fn face_cut_by(&self, u: &[BigInt]) -> Result<Polycone> {
        let mut gens: Vec<IntVec> = self
            .rays
            .iter()
            .filter(|r| dot(u, r).is_zero())
            .cloned()
            .collect();
        for l in &self.lineality {
            gens.push(l.clone());
            gens.push(neg(l));
        }
        Polycone::from_rays(self.ambient_rank, &gens)
    }

    /// The witness for `tau ⪯ self`, or `None` when `tau` is not a face.
    pub fn witness_of_face(&self, tau: &Polycone) -> Option<IntVec> {
        if tau.ambient_rank != self.ambient_rank {
            return None;
        }
        let u = self.face_witness(tau);
        match self.face_cut_by(&u) {
            Ok(face) if face == *tau => Some(u),
            _ => None,
        }
    }

    pub fn has_face(&self, tau: &Polycone) -> bool {
        self.witness_of_face(tau).is_some()
    }

    /// The whole face lattice, sorted by dimension then rays.
    pub fn faces(&self) -> Result<Vec<Face>> {
        if !self.is_pointed() {
            return Err(Error::NonPointed(Box::new(self.clone())));
        }
        let tight: Vec<BTreeSet<usize>> = self
            .normals
            .iter()
            .map(|u| {
                (0..self.rays.len())
                    .filter(|&i| dot(u, &self.rays[i]).is_zero())
                    .collect()
            })
            .collect();
        let full: BTreeSet<usize> = (0..self.rays.len()).collect();
        let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        let mut queue = VecDeque::from([full.clone()]);
        seen.insert(full);
        while let Some(f) = queue.pop_front() {
            for t in &tight {
                let g: BTreeSet<usize> = f.intersection(t).copied().collect();
                if seen.insert(g.clone()) {
                    queue.push_back(g);
                }
            }
        }
        let mut faces = BTreeMap::new();
        for ray_set in seen {
            let gens: Vec<IntVec> = ray_set.iter().map(|&i| self.rays[i].clone()).collect();
            let cone = Polycone::from_rays(self.ambient_rank, &gens)?;
            let witness = self.face_witness(&cone);
            faces.insert((cone.dim(), cone.clone()), Face { cone, witness });
        }
        Ok(faces.into_values().collect())
    }
}

impl fmt::Display for Polycone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |vs: &[IntVec]| vs.iter().map(|v| fmt_vec(v)).collect::<Vec<_>>().join(",");
        if self.is_zero() {
            return write!(f, "{{0}}");
        }
        write!(f, "cone({})", join(&self.rays))?;
        if !self.lineality.is_empty() {
            write!(f, "+span({})", join(&self.lineality))?;
        }
        Ok(())
    }
}

pub fn cone_from_rays(ambient_rank: usize, generators: &[IntVec]) -> Result<Polycone> {
    Polycone::from_rays(ambient_rank, generators)
}

pub fn dual_cone(c: &Polycone) -> Polycone {
    c.dual()
}

pub fn faces(c: &Polycone) -> Result<Vec<Face>> {
    c.faces()
}

pub fn contains_point(c: &Polycone, p: &RatVector) -> Result<bool> {
    c.contains_point(p)
}

pub fn intersect_cones(a: &Polycone, b: &Polycone) -> Result<Polycone> {
    a.intersect(b)
}

fn check_lengths(n: usize, vs: &[IntVec]) -> Result<()> {
    match vs.iter().find(|v| v.len() != n) {
        Some(v) => Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        }),
        None => Ok(()),
    }
}

/// Double description: generators of `{x : ⟨a,x⟩ ≥ 0 for all a}`.
///
/// Returns `(rays, lineality)` where rays are the extremal rays of the
/// pointed part (one representative each) and lineality spans the largest
/// contained subspace. Starts from the whole space and adds one inequality
/// at a time; ray pairs are combined only when adjacent, decided by the rank
/// of their common tight set.
fn halfspace_generators(n: usize, inequalities: &[IntVec]) -> (Vec<IntVec>, Vec<IntVec>) {
    let mut lineality: Vec<IntVec> = (0..n)
        .map(|i| {
            let mut e = vec![BigInt::zero(); n];
            e[i] = 1.into();
            e
        })
        .collect();
    let mut rays: Vec<IntVec> = Vec::new();
    let mut processed: Vec<IntVec> = Vec::new();

    for a in inequalities {
        if a.iter().all(Zero::is_zero) {
            continue;
        }
        if let Some(pos) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l = lineality.remove(pos);
            let mut al = dot(a, &l);
            if al.is_negative() {
                l = neg(&l);
                al = -al;
            }
            let shift = |x: &IntVec| primitive(&combine(&al, x, &-dot(a, x), &l));
            lineality = lineality.iter().map(shift).collect();
            rays = rays.iter().map(shift).collect();
            rays.push(primitive(&l));
        } else {
            let values: Vec<BigInt> = rays.iter().map(|r| dot(a, r)).collect();
            let mut next: Vec<IntVec> = rays
                .iter()
                .zip(&values)
                .filter(|(_, v)| !v.is_negative())
                .map(|(r, _)| r.clone())
                .collect();
            let target_rank = (n - lineality.len()).saturating_sub(2);
            for (i, p) in rays.iter().enumerate() {
                if !values[i].is_positive() {
                    continue;
                }
                for (j, q) in rays.iter().enumerate() {
                    if !values[j].is_negative() {
                        continue;
                    }
                    let common: Vec<IntVec> = processed
                        .iter()
                        .filter(|b| dot(b, p).is_zero() && dot(b, q).is_zero())
                        .cloned()
                        .collect();
                    if rank(&common, n) == target_rank {
                        next.push(primitive(&combine(&values[i], q, &-&values[j], p)));
                    }
                }
            }
            rays = next;
        }
        processed.push(a.clone());
    }
    (rays, lineality)
}
