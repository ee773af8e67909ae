//! Symbolic description of a base scheme by three-valued property flags.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Three-valued truth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tri {
    Yes,
    No,
    Unknown,
}

impl Tri {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Tri::Yes
        } else {
            Tri::No
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Tri::Yes => "yes",
            Tri::No => "no",
            Tri::Unknown => "unknown",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "yes" => Some(Tri::Yes),
            "no" => Some(Tri::No),
            "unknown" => Some(Tri::Unknown),
            _ => None,
        }
    }

    pub fn is(&self, value: bool) -> bool {
        *self == Tri::from_bool(value)
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseFlag {
    Empty,
    Affine,
    Quasicompact,
    Quasiseparated,
    Separated,
    LocallyNoetherian,
    Noetherian,
    PointwiseNoetherian,
    TopologicallyNoetherian,
    Jacobsonian,
    Reduced,
    Irreducible,
    Connected,
    Integral,
    Normal,
    CohenMacaulay,
    Regular,
    UniversallyCatenary,
    Equidimensional,
}

impl BaseFlag {
    pub const ALL: [BaseFlag; 19] = [
        BaseFlag::Empty,
        BaseFlag::Affine,
        BaseFlag::Quasicompact,
        BaseFlag::Quasiseparated,
        BaseFlag::Separated,
        BaseFlag::LocallyNoetherian,
        BaseFlag::Noetherian,
        BaseFlag::PointwiseNoetherian,
        BaseFlag::TopologicallyNoetherian,
        BaseFlag::Jacobsonian,
        BaseFlag::Reduced,
        BaseFlag::Irreducible,
        BaseFlag::Connected,
        BaseFlag::Integral,
        BaseFlag::Normal,
        BaseFlag::CohenMacaulay,
        BaseFlag::Regular,
        BaseFlag::UniversallyCatenary,
        BaseFlag::Equidimensional,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            BaseFlag::Empty => "empty",
            BaseFlag::Affine => "affine",
            BaseFlag::Quasicompact => "quasicompact",
            BaseFlag::Quasiseparated => "quasiseparated",
            BaseFlag::Separated => "separated",
            BaseFlag::LocallyNoetherian => "locally_noetherian",
            BaseFlag::Noetherian => "noetherian",
            BaseFlag::PointwiseNoetherian => "pointwise_noetherian",
            BaseFlag::TopologicallyNoetherian => "topologically_noetherian",
            BaseFlag::Jacobsonian => "jacobsonian",
            BaseFlag::Reduced => "reduced",
            BaseFlag::Irreducible => "irreducible",
            BaseFlag::Connected => "connected",
            BaseFlag::Integral => "integral",
            BaseFlag::Normal => "normal",
            BaseFlag::CohenMacaulay => "cohen_macaulay",
            BaseFlag::Regular => "regular",
            BaseFlag::UniversallyCatenary => "universally_catenary",
            BaseFlag::Equidimensional => "equidimensional",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|f| f.name() == s)
    }

    /// Adjective used in report justifications.
    pub fn phrase(&self) -> &'static str {
        match self {
            BaseFlag::Empty => "empty",
            BaseFlag::Affine => "affine",
            BaseFlag::Quasicompact => "quasicompact",
            BaseFlag::Quasiseparated => "quasiseparated",
            BaseFlag::Separated => "separated",
            BaseFlag::LocallyNoetherian => "locally noetherian",
            BaseFlag::Noetherian => "noetherian",
            BaseFlag::PointwiseNoetherian => "pointwise noetherian",
            BaseFlag::TopologicallyNoetherian => "topologically noetherian",
            BaseFlag::Jacobsonian => "jacobsonian",
            BaseFlag::Reduced => "reduced",
            BaseFlag::Irreducible => "irreducible",
            BaseFlag::Connected => "connected",
            BaseFlag::Integral => "integral",
            BaseFlag::Normal => "normal",
            BaseFlag::CohenMacaulay => "Cohen-Macaulay",
            BaseFlag::Regular => "regular",
            BaseFlag::UniversallyCatenary => "universally catenary",
            BaseFlag::Equidimensional => "equidimensional",
        }
    }
}

/// A Krull dimension: a natural number or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DimValue {
    Finite(u64),
    Infinite,
}

impl DimValue {
    pub fn plus(self, r: u64) -> Self {
        match self {
            DimValue::Finite(d) => DimValue::Finite(d + r),
            DimValue::Infinite => DimValue::Infinite,
        }
    }

    /// `(r+1)·d + r`.
    pub fn stretched(self, r: u64) -> Self {
        match self {
            DimValue::Finite(d) => DimValue::Finite((r + 1) * d + r),
            DimValue::Infinite => DimValue::Infinite,
        }
    }
}

impl fmt::Display for DimValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimValue::Finite(d) => write!(f, "{d}"),
            DimValue::Infinite => write!(f, "inf"),
        }
    }
}

/// Flags of a base scheme `S`, closed under the standard implications.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseDescriptor {
    flags: BTreeMap<BaseFlag, Tri>,
    dim: Option<(DimValue, DimValue)>,
}

/// `premises ⇒ conclusion` over literals `(flag, value)`.
struct Clause {
    premises: &'static [(BaseFlag, bool)],
    conclusion: (BaseFlag, bool),
}

const fn clause(premises: &'static [(BaseFlag, bool)], conclusion: (BaseFlag, bool)) -> Clause {
    Clause {
        premises,
        conclusion,
    }
}

use BaseFlag::*;

const CLAUSES: &[Clause] = &[
    clause(&[(Empty, true)], (Affine, true)),
    clause(&[(Empty, true)], (Reduced, true)),
    clause(&[(Empty, true)], (Connected, true)),
    clause(&[(Empty, true)], (Jacobsonian, true)),
    clause(&[(Empty, true)], (Regular, true)),
    clause(&[(Empty, true)], (UniversallyCatenary, true)),
    clause(&[(Empty, true)], (Equidimensional, true)),
    clause(&[(Empty, true)], (Noetherian, true)),
    clause(&[(Empty, true)], (Irreducible, false)),
    clause(&[(Irreducible, true)], (Connected, true)),
    clause(&[(Integral, true)], (Reduced, true)),
    clause(&[(Integral, true)], (Irreducible, true)),
    clause(&[(Reduced, true), (Irreducible, true)], (Integral, true)),
    clause(&[(Noetherian, true)], (LocallyNoetherian, true)),
    clause(&[(Noetherian, true)], (Quasicompact, true)),
    clause(
        &[(LocallyNoetherian, true), (Quasicompact, true)],
        (Noetherian, true),
    ),
    clause(&[(Noetherian, true)], (TopologicallyNoetherian, true)),
    clause(&[(TopologicallyNoetherian, true)], (Quasicompact, true)),
    clause(&[(Affine, true)], (Quasicompact, true)),
    clause(&[(Affine, true)], (Separated, true)),
    clause(&[(Separated, true)], (Quasiseparated, true)),
    clause(&[(LocallyNoetherian, true)], (PointwiseNoetherian, true)),
    clause(&[(LocallyNoetherian, true)], (Quasiseparated, true)),
    clause(&[(Regular, true)], (Normal, true)),
    clause(&[(Regular, true)], (CohenMacaulay, true)),
    clause(&[(Normal, true)], (Reduced, true)),
    clause(&[(CohenMacaulay, true)], (LocallyNoetherian, true)),
];

impl BaseDescriptor {
    /// Builds a descriptor and closes it under the implications and their
    /// contrapositives. Contradictions are rejected.
    pub fn new(flags: BTreeMap<BaseFlag, Tri>, dim: Option<(DimValue, DimValue)>) -> Result<Self> {
        if let Some((lo, hi)) = dim {
            if lo > hi {
                return Err(Error::InconsistentBase(format!(
                    "dimension interval [{lo},{hi}] is empty"
                )));
            }
        }
        let mut d = BaseDescriptor { flags, dim };
        d.flags.retain(|_, v| *v != Tri::Unknown);
        if dim.is_some() {
            d.assign(Empty, false)?;
        }
        loop {
            let mut changed = false;
            for c in CLAUSES {
                changed |= d.apply(c.premises, c.conclusion)?;
                // contrapositives: ¬conclusion ∧ other premises ⇒ ¬premise
                for (i, &(flag, value)) in c.premises.iter().enumerate() {
                    let mut known = vec![(c.conclusion.0, !c.conclusion.1)];
                    known.extend(
                        c.premises
                            .iter()
                            .enumerate()
                            .filter(|&(j, _)| j != i)
                            .map(|(_, &p)| p),
                    );
                    changed |= d.apply(&known, (flag, !value))?;
                }
            }
            if !changed {
                break;
            }
        }
        Ok(d)
    }

    fn apply(
        &mut self,
        premises: &[(BaseFlag, bool)],
        conclusion: (BaseFlag, bool),
    ) -> Result<bool> {
        if premises.iter().all(|&(f, v)| self.get(f).is(v)) {
            return self.assign(conclusion.0, conclusion.1);
        }
        Ok(false)
    }

    fn assign(&mut self, flag: BaseFlag, value: bool) -> Result<bool> {
        match self.get(flag) {
            Tri::Unknown => {
                self.flags.insert(flag, Tri::from_bool(value));
                Ok(true)
            }
            t if t.is(value) => Ok(false),
            t => Err(Error::InconsistentBase(format!(
                "{} is both {} and {}",
                flag.name(),
                t,
                Tri::from_bool(value)
            ))),
        }
    }

    /// A base about which nothing is known.
    pub fn unknown() -> Self {
        Self::new(BTreeMap::new(), None).expect("no flags to contradict")
    }

    /// `Spec K` for a field `K`.
    pub fn field_point() -> Self {
        let flags = BaseFlag::ALL
            .iter()
            .map(|&f| (f, Tri::from_bool(f != Empty)))
            .collect();
        Self::new(flags, Some((DimValue::Finite(0), DimValue::Finite(0))))
            .expect("a field point is consistent")
    }

    /// The empty scheme.
    pub fn empty() -> Self {
        Self::new([(Empty, Tri::Yes)].into(), None).expect("the empty scheme is consistent")
    }

    pub fn get(&self, flag: BaseFlag) -> Tri {
        self.flags.get(&flag).copied().unwrap_or(Tri::Unknown)
    }

    /// The same descriptor with one flag forgotten, re-closed.
    pub fn forget(&self, flag: BaseFlag) -> Result<Self> {
        let mut flags = self.flags.clone();
        flags.remove(&flag);
        Self::new(flags, self.dim)
    }

    /// Dimension interval; `None` when unknown or when the base is empty.
    pub fn dim(&self) -> Option<(DimValue, DimValue)> {
        self.dim
    }

    /// Artinian: noetherian of dimension at most zero.
    pub fn artinian(&self) -> Tri {
        match (self.get(Noetherian), self.get(Empty), self.dim) {
            (_, Tri::Yes, _) => Tri::Yes,
            (Tri::No, _, _) => Tri::No,
            (_, _, Some((lo, _))) if lo > DimValue::Finite(0) => Tri::No,
            (Tri::Yes, _, Some((_, DimValue::Finite(0)))) => Tri::Yes,
            _ => Tri::Unknown,
        }
    }

    /// Serre's `(S_k)`: implied by Cohen-Macaulay, and requires local noetherianity.
    pub fn serre_s(&self) -> Tri {
        if self.get(CohenMacaulay) == Tri::Yes {
            Tri::Yes
        } else if self.get(LocallyNoetherian) == Tri::No {
            Tri::No
        } else {
            Tri::Unknown
        }
    }

    /// Serre's `(R_k)`: implied by regular, and requires local noetherianity.
    pub fn serre_r(&self) -> Tri {
        if self.get(Regular) == Tri::Yes {
            Tri::Yes
        } else if self.get(LocallyNoetherian) == Tri::No {
            Tri::No
        } else {
            Tri::Unknown
        }
    }

    /// All known flags, in declaration order.
    pub fn known_flags(&self) -> impl Iterator<Item = (BaseFlag, Tri)> + '_ {
        self.flags.iter().map(|(f, t)| (*f, *t))
    }
}
