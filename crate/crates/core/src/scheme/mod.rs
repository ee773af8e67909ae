//! Projective systems of monoids over a finite lower semilattice, their
//! gluing atlases, and the symbolic property calculus of the glued schemes.
//!
//! Convention: for indices `i ≤ j` the monoid at `j` is contained in the
//! monoid at `i`, and the edge `(i, j)` is openly immersive when
//! `M_i = M_j − t` for some `t ∈ M_j`. For a fan the index is the face
//! order and `M_σ = σ∨_M`.

mod base;
mod report;

pub use base::{BaseDescriptor, BaseFlag, DimValue, Tri};
pub use report::{
    component_transport, dimension_bounds, property_report, property_report_with, reduction_report,
    rules, ComponentKind, Condition, DimensionBounds, PropertyReport, ReductionNote, ReportOptions,
    Rule, Verdict,
};

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::linalg::IntVec;
use crate::monoid::{
    check_openly_immersive_pair, dual_monoid, find_localizing_element, first_missing, monoid_sum,
    AffineMonoid, Immersion, LocalizationCertificate,
};

/// Search bound used when none is given.
pub const DEFAULT_SEARCH_BOUND: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SystemSource {
    FromFan(Fan),
    Explicit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidSystem {
    labels: Vec<String>,
    leq: Vec<Vec<bool>>,
    inf: Vec<Vec<usize>>,
    monoids: Vec<AffineMonoid>,
    source: SystemSource,
}

impl MonoidSystem {
    /// A system over the order generated by `relations` (pairs `i ≤ j`).
    ///
    /// The order must be a lower semilattice and `M_j ⊆ M_i` whenever `i ≤ j`.
    pub fn explicit(
        labels: Vec<String>,
        monoids: Vec<AffineMonoid>,
        relations: &[(usize, usize)],
    ) -> Result<Self> {
        let len = monoids.len();
        if labels.len() != len {
            return Err(Error::InvalidSystem(format!(
                "{} labels for {} monoids",
                labels.len(),
                len
            )));
        }
        if let Some(m) = monoids
            .iter()
            .find(|m| m.ambient_rank() != monoids[0].ambient_rank())
        {
            return Err(Error::DimensionMismatch {
                expected: monoids[0].ambient_rank(),
                found: m.ambient_rank(),
            });
        }
        let mut leq = vec![vec![false; len]; len];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in relations {
            if i >= len || j >= len {
                return Err(Error::InvalidSystem(format!(
                    "relation ({i},{j}) out of range"
                )));
            }
            leq[i][j] = true;
        }
        for k in 0..len {
            for i in 0..len {
                for j in 0..len {
                    if leq[i][k] && leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
        for i in 0..len {
            for j in i + 1..len {
                if leq[i][j] && leq[j][i] {
                    return Err(Error::InvalidSystem(format!(
                        "{} and {} are mutually below each other",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        let mut inf = vec![vec![0; len]; len];
        for i in 0..len {
            for j in 0..len {
                let lower: Vec<usize> = (0..len).filter(|&k| leq[k][i] && leq[k][j]).collect();
                let greatest = lower
                    .iter()
                    .copied()
                    .find(|&k| lower.iter().all(|&l| leq[l][k]));
                inf[i][j] = greatest.ok_or_else(|| {
                    Error::InvalidSystem(format!(
                        "{} and {} have no greatest lower bound",
                        labels[i], labels[j]
                    ))
                })?;
            }
        }
        for i in 0..len {
            for j in 0..len {
                if i != j && leq[i][j] {
                    if let Some(g) = first_missing(&monoids[j], &monoids[i]) {
                        return Err(Error::InvalidSystem(format!(
                            "{} <= {} but generator {} of {} is missing from {}",
                            labels[i],
                            labels[j],
                            crate::error::fmt_vec(&g),
                            labels[j],
                            labels[i]
                        )));
                    }
                }
            }
        }
        Ok(MonoidSystem {
            labels,
            leq,
            inf,
            monoids,
            source: SystemSource::Explicit,
        })
    }

    pub fn len(&self) -> usize {
        self.monoids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monoids.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn monoids(&self) -> &[AffineMonoid] {
        &self.monoids
    }

    pub fn source(&self) -> &SystemSource {
        &self.source
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn inf(&self, i: usize, j: usize) -> usize {
        self.inf[i][j]
    }

    /// Strict order pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if i != j && self.leq[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Supremum of the ranks of the difference groups; `None` for the empty system.
    pub fn rank(&self) -> Option<usize> {
        self.monoids.iter().map(|m| m.rank()).max()
    }
}

/// The system `(σ∨_M)_{σ ∈ Σ}` with the canonical inclusions.
pub fn system_from_fan(f: &Fan) -> MonoidSystem {
    let len = f.len();
    let leq = (0..len)
        .map(|i| (0..len).map(|j| f.precedes(i, j)).collect())
        .collect();
    let inf = (0..len)
        .map(|i| (0..len).map(|j| f.inf(i, j)).collect())
        .collect();
    MonoidSystem {
        labels: f.cones().iter().map(|c| c.to_string()).collect(),
        leq,
        inf,
        monoids: f.cones().iter().map(dual_monoid).collect(),
        source: SystemSource::FromFan(f.clone()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeReport {
    pub lower: usize,
    pub upper: usize,
    pub outcome: Immersion,
    /// Present for fan systems, where the localizing element comes from a face witness.
    pub certificate: Option<LocalizationCertificate>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImmersionReport {
    pub verdict: Tri,
    pub edges: Vec<EdgeReport>,
}

/// Checks every edge of the system for a single-element localization.
pub fn is_openly_immersive(s: &MonoidSystem, search_bound: usize) -> Result<ImmersionReport> {
    let mut edges = Vec::new();
    for (i, j) in s.edges() {
        let report = match &s.source {
            SystemSource::FromFan(f) => {
                let cert = find_localizing_element(
                    &s.monoids[j],
                    &s.monoids[i],
                    &f.cones()[j],
                    &f.cones()[i],
                )?;
                EdgeReport {
                    lower: i,
                    upper: j,
                    outcome: Immersion::Yes { t: cert.u.clone() },
                    certificate: Some(cert),
                }
            }
            SystemSource::Explicit => EdgeReport {
                lower: i,
                upper: j,
                outcome: check_openly_immersive_pair(&s.monoids[i], &s.monoids[j], search_bound)?,
                certificate: None,
            },
        };
        edges.push(report);
    }
    let verdict = if edges.iter().any(|e| matches!(e.outcome, Immersion::No(_))) {
        Tri::No
    } else if edges.iter().any(|e| e.outcome == Immersion::Unknown) {
        Tri::Unknown
    } else {
        Tri::Yes
    };
    Ok(ImmersionReport { verdict, edges })
}

/// The closed immersion `S → X_i` given by the augmentation: its ideal is
/// generated by `e^g − 1` over the listed monoid generators `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalSection {
    pub augmentation_ideal: Vec<IntVec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    pub label: String,
    pub monoid: AffineMonoid,
    pub section: CanonicalSection,
}

/// `X_lower` is the principal open of `X_upper` where `e^u` is invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transition {
    pub lower: usize,
    pub upper: usize,
    pub u: IntVec,
    pub certificate: Option<LocalizationCertificate>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingAtlas {
    pub charts: Vec<Chart>,
    pub transitions: Vec<Transition>,
    overlaps: Vec<Vec<usize>>,
}

impl GluingAtlas {
    /// Index of the chart covering the intersection of charts `i` and `j`.
    pub fn overlap(&self, i: usize, j: usize) -> usize {
        self.overlaps[i][j]
    }

    pub fn transition(&self, lower: usize, upper: usize) -> Option<&Transition> {
        self.transitions
            .iter()
            .find(|t| t.lower == lower && t.upper == upper)
    }

    /// Charts not contained in any other chart.
    pub fn maximal_charts(&self) -> Vec<usize> {
        (0..self.charts.len())
            .filter(|&i| !self.transitions.iter().any(|t| t.lower == i))
            .collect()
    }
}

pub fn build_atlas(s: &MonoidSystem) -> Result<GluingAtlas> {
    build_atlas_with_bound(s, DEFAULT_SEARCH_BOUND)
}

pub fn build_atlas_with_bound(s: &MonoidSystem, search_bound: usize) -> Result<GluingAtlas> {
    let report = is_openly_immersive(s, search_bound)?;
    if report.verdict != Tri::Yes {
        let edge = report
            .edges
            .iter()
            .find(|e| !matches!(e.outcome, Immersion::Yes { .. }))
            .expect("a failing edge exists");
        let why = match &edge.outcome {
            Immersion::No(o) => o.name().to_string(),
            _ => format!("no localizing element within search bound {search_bound}"),
        };
        return Err(Error::NotOpenlyImmersive(format!(
            "{} <= {}: {}",
            s.labels[edge.lower], s.labels[edge.upper], why
        )));
    }
    let charts = s
        .labels
        .iter()
        .zip(&s.monoids)
        .map(|(label, m)| Chart {
            label: label.clone(),
            monoid: m.clone(),
            section: CanonicalSection {
                augmentation_ideal: m.generators().to_vec(),
            },
        })
        .collect();
    let transitions = report
        .edges
        .into_iter()
        .map(|e| {
            let Immersion::Yes { t } = e.outcome else {
                unreachable!("verdict is yes")
            };
            Transition {
                lower: e.lower,
                upper: e.upper,
                u: t,
                certificate: e.certificate,
            }
        })
        .collect();
    Ok(GluingAtlas {
        charts,
        transitions,
        overlaps: s.inf.clone(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationFailure {
    pub first: usize,
    pub second: usize,
    /// An element of `M_inf(i,j)` outside `M_i + M_j`.
    pub witness: IntVec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationCheck {
    pub holds: bool,
    pub failure: Option<SeparationFailure>,
}

/// Whether `M_inf(i,j) = M_i + M_j` for every pair.
pub fn check_separation_condition(s: &MonoidSystem) -> Result<SeparationCheck> {
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            let k = s.inf(i, j);
            if k == i || k == j {
                continue;
            }
            let sum = monoid_sum(&s.monoids[i], &s.monoids[j])?;
            if let Some(witness) = first_missing(&s.monoids[k], &sum) {
                return Ok(SeparationCheck {
                    holds: false,
                    failure: Some(SeparationFailure {
                        first: i,
                        second: j,
                        witness,
                    }),
                });
            }
        }
    }
    Ok(SeparationCheck {
        holds: true,
        failure: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::ivec;
    use crate::monoid::{monoid_of_differences, same_elements, Obstruction};

    fn mono(gens: &[&[i64]]) -> AffineMonoid {
        AffineMonoid::from_i64(gens.first().map_or(1, |g| g.len()), gens).unwrap()
    }

    #[test]
    fn projective_line_system() {
        let s = system_from_fan(&catalog::projective_line());
        assert_eq!(s.len(), 3);
        assert_eq!(s.edges().len(), 2);
        assert_eq!(s.rank(), Some(1));
        let gens: Vec<Vec<IntVec>> = s
            .monoids()
            .iter()
            .map(|m| m.generators().to_vec())
            .collect();
        assert!(gens.contains(&vec![ivec(&[1])]));
        assert!(gens.contains(&vec![ivec(&[-1])]));
        assert!(gens.contains(&vec![ivec(&[-1]), ivec(&[1])]));
    }

    #[test]
    fn empty_and_quadrant_systems() {
        let empty = crate::fan::validate_fan(2, &[]).unwrap();
        let s = system_from_fan(&empty);
        assert!(s.is_empty());
        assert_eq!(s.rank(), None);
        assert!(build_atlas(&s).unwrap().charts.is_empty());
        let q = system_from_fan(&catalog::quadrant());
        assert_eq!(q.len(), 4);
        assert_eq!(q.edges().len(), 5);
    }

    #[test]
    fn projective_line_atlas() {
        let atlas = build_atlas(&system_from_fan(&catalog::projective_line())).unwrap();
        assert_eq!(atlas.charts.len(), 3);
        assert_eq!(atlas.maximal_charts().len(), 2);
        let mut us: Vec<IntVec> = atlas.transitions.iter().map(|t| t.u.clone()).collect();
        us.sort();
        assert_eq!(us, vec![ivec(&[-1]), ivec(&[1])]);
        let [a, b] = atlas.maximal_charts()[..] else {
            panic!()
        };
        let o = atlas.overlap(a, b);
        assert!(atlas.charts[o].monoid.is_group());
    }

    #[test]
    fn quadrant_atlas_and_sections() {
        let atlas = build_atlas(&system_from_fan(&catalog::quadrant())).unwrap();
        assert_eq!(atlas.charts.len(), 4);
        assert_eq!(atlas.maximal_charts().len(), 1);
        let top = &atlas.charts[atlas.maximal_charts()[0]];
        assert_eq!(top.monoid.generators(), &[ivec(&[0, 1]), ivec(&[1, 0])]);
        assert_eq!(top.section.augmentation_ideal.len(), 2);
    }

    #[test]
    fn golden_fans_are_openly_immersive_and_separated() {
        for (name, f) in catalog::golden_fans() {
            let s = system_from_fan(&f);
            let r = is_openly_immersive(&s, 0).unwrap();
            assert_eq!(r.verdict, Tri::Yes, "{name}");
            assert!(r.edges.iter().all(|e| e.certificate.is_some()));
            assert!(check_separation_condition(&s).unwrap().holds, "{name}");
        }
    }

    #[test]
    fn transitions_compose_along_chains() {
        let f = catalog::projective_plane();
        let s = system_from_fan(&f);
        let atlas = build_atlas(&s).unwrap();
        for (r, t) in s.edges() {
            for (t2, sg) in s.edges() {
                if t2 != t {
                    continue;
                }
                let u_ts = &atlas.transition(t, sg).unwrap().u;
                let u_rs = &atlas.transition(r, sg).unwrap().u;
                let step =
                    monoid_of_differences(&s.monoids()[sg], std::slice::from_ref(u_ts)).unwrap();
                let u_rt = &atlas.transition(r, t).unwrap().u;
                let chained =
                    monoid_of_differences(&step.result, std::slice::from_ref(u_rt)).unwrap();
                assert!(same_elements(&chained.result, &s.monoids()[r]));
                let direct =
                    monoid_of_differences(&s.monoids()[sg], std::slice::from_ref(u_rs)).unwrap();
                assert!(same_elements(&direct.result, &s.monoids()[r]));
            }
        }
    }

    #[test]
    fn explicit_systems() {
        let labels = |n: usize| (0..n).map(|i| format!("m{i}")).collect::<Vec<_>>();
        let s = MonoidSystem::explicit(labels(2), vec![mono(&[&[1]]), mono(&[&[2]])], &[(0, 1)])
            .unwrap();
        let r = is_openly_immersive(&s, 4).unwrap();
        assert_eq!(r.verdict, Tri::No);
        assert!(matches!(
            r.edges[0].outcome,
            Immersion::No(Obstruction::DiffGroupMismatch { .. })
        ));
        assert!(matches!(build_atlas(&s), Err(Error::NotOpenlyImmersive(_))));

        let z = mono(&[&[1], &[-1]]);
        let s =
            MonoidSystem::explicit(labels(2), vec![z.clone(), mono(&[&[1]])], &[(0, 1)]).unwrap();
        assert_eq!(is_openly_immersive(&s, 0).unwrap().verdict, Tri::Unknown);
        assert_eq!(is_openly_immersive(&s, 2).unwrap().verdict, Tri::Yes);

        let s = MonoidSystem::explicit(
            labels(3),
            vec![z, mono(&[&[1]]), mono(&[&[1]])],
            &[(0, 1), (0, 2)],
        )
        .unwrap();
        let sep = check_separation_condition(&s).unwrap();
        assert!(!sep.holds);
        assert_eq!(sep.failure.unwrap().witness, ivec(&[-1]));
    }

    #[test]
    fn explicit_rejects_bad_orders() {
        let labels = vec!["a".to_string(), "b".to_string()];
        let n = mono(&[&[1]]);
        assert!(MonoidSystem::explicit(
            labels.clone(),
            vec![n.clone(), n.clone()],
            &[(0, 1), (1, 0)]
        )
        .is_err());
        assert!(MonoidSystem::explicit(labels.clone(), vec![n.clone(), n.clone()], &[]).is_err());
        assert!(MonoidSystem::explicit(labels, vec![mono(&[&[2]]), n], &[(0, 1)]).is_err());
    }
}
