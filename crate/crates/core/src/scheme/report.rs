//! Cited three-valued verdicts for toric schemes over symbolic bases.

use std::fmt;

use serde::Serialize;

use super::base::{BaseDescriptor, BaseFlag, DimValue, Tri};
use super::MonoidSystem;
use crate::error::{Error, Result};
use crate::fan::{is_complete, is_regular, Fan};

const MORPHISM: &str = "structure theorem (a)";
const TOTAL: &str = "structure theorem (b)";
const DIMENSION: &str = "structure theorem (c)";
const EQUIDIM: &str = "structure theorem (d)";
const COMPONENTS: &str = "structure theorem (e)";
const QUASICOMPACT: &str = "gluing proposition (quasicompactness)";
const FLAT: &str = "gluing proposition (flatness)";
const PROPER: &str = "properness criterion";
const REGULARITY: &str = "regularity theorem";
const REG_K: &str = "regularity corollary (a)";
const REG_TOTAL: &str = "regularity corollary (b)";
const CATENARY: &str = "catenarity proposition";
const REDUCTION: &str = "reduction corollary";

/// An atomic hypothesis about the fan, the chosen `k`, or the base.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    FanEmpty(bool),
    FanComplete(bool),
    FanRegular(bool),
    RankZero(bool),
    /// `k ≥ n` for the Serre index `k`.
    SerreIndexAtLeastRank(bool),
    Base(BaseFlag, bool),
    BaseArtinian(bool),
    BaseSerreS(bool),
    BaseSerreR(bool),
}

struct Facts<'a> {
    fan_empty: bool,
    complete: bool,
    regular: bool,
    n: usize,
    k: usize,
    base: &'a BaseDescriptor,
}

impl<'a> Facts<'a> {
    fn new(f: &Fan, base: &'a BaseDescriptor, options: ReportOptions) -> Self {
        let n = f.ambient_rank();
        Facts {
            fan_empty: f.is_empty(),
            complete: is_complete(f),
            regular: is_regular(f).regular,
            n,
            k: options.serre_k.unwrap_or(n),
            base,
        }
    }
}

impl Condition {
    fn holds(&self, f: &Facts) -> bool {
        match *self {
            Condition::FanEmpty(v) => f.fan_empty == v,
            Condition::FanComplete(v) => f.complete == v,
            Condition::FanRegular(v) => f.regular == v,
            Condition::RankZero(v) => (f.n == 0) == v,
            Condition::SerreIndexAtLeastRank(v) => (f.k >= f.n) == v,
            Condition::Base(flag, v) => f.base.get(flag).is(v),
            Condition::BaseArtinian(v) => f.base.artinian().is(v),
            Condition::BaseSerreS(v) => f.base.serre_s().is(v),
            Condition::BaseSerreR(v) => f.base.serre_r().is(v),
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let not = |v: bool| if v { "" } else { "not " };
        match *self {
            Condition::FanEmpty(true) => write!(f, "the fan is empty"),
            Condition::FanEmpty(false) => write!(f, "the fan is nonempty"),
            Condition::FanComplete(v) => write!(f, "the fan is {}complete", not(v)),
            Condition::FanRegular(v) => write!(f, "the fan is {}regular", not(v)),
            Condition::RankZero(true) => write!(f, "n = 0"),
            Condition::RankZero(false) => write!(f, "n != 0"),
            Condition::SerreIndexAtLeastRank(true) => write!(f, "k >= n"),
            Condition::SerreIndexAtLeastRank(false) => write!(f, "k < n"),
            Condition::Base(BaseFlag::Empty, true) => write!(f, "S is empty"),
            Condition::Base(BaseFlag::Empty, false) => write!(f, "S is nonempty"),
            Condition::Base(flag, v) => write!(f, "S is {}{}", not(v), flag.phrase()),
            Condition::BaseArtinian(v) => write!(f, "S is {}artinian", not(v)),
            Condition::BaseSerreS(true) => write!(f, "S has (S_k)"),
            Condition::BaseSerreS(false) => write!(f, "S lacks (S_k)"),
            Condition::BaseSerreR(true) => write!(f, "S has (R_k)"),
            Condition::BaseSerreR(false) => write!(f, "S lacks (R_k)"),
        }
    }
}

/// When every hypothesis holds, `property` has truth value `verdict`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub property: &'static str,
    pub verdict: bool,
    pub citation: &'static str,
    pub hypotheses: Vec<Condition>,
}

impl Rule {
    /// Whether every hypothesis holds for this fan, base and options.
    pub fn applies(&self, f: &Fan, base: &BaseDescriptor, options: ReportOptions) -> bool {
        let facts = Facts::new(f, base, options);
        self.hypotheses.iter().all(|c| c.holds(&facts))
    }

    fn describe(&self) -> String {
        if self.hypotheses.is_empty() {
            "holds for every fan and base".to_string()
        } else {
            self.hypotheses
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" and ")
        }
    }
}

/// Properties in report order; `dim` is handled separately and comes last.
const PROPERTIES: &[&str] = &[
    "separated_morphism",
    "quasicompact_morphism",
    "flat",
    "faithfully_flat",
    "finite_presentation",
    "proper",
    "finite",
    "regular_morphism",
    "r_k_morphism",
    "cohen_macaulay_morphism",
    "normal_morphism",
    "connected_morphism",
    "irreducible_morphism",
    "s_k_morphism",
    "quasiseparated",
    "separated",
    "quasicompact",
    "locally_noetherian",
    "noetherian",
    "pointwise_noetherian",
    "topologically_noetherian",
    "jacobsonian",
    "connected",
    "reduced",
    "normal",
    "cohen_macaulay",
    "s_k",
    "irreducible",
    "integral",
    "artinian",
    "regular",
    "r_k",
    "equidimensional",
    "universally_catenary",
    "catenary",
];

/// Total-space properties that transfer from the base unless the fan is empty.
const TRANSFERRED: &[(&str, BaseFlag)] = &[
    ("quasiseparated", BaseFlag::Quasiseparated),
    ("separated", BaseFlag::Separated),
    ("quasicompact", BaseFlag::Quasicompact),
    ("locally_noetherian", BaseFlag::LocallyNoetherian),
    ("noetherian", BaseFlag::Noetherian),
    ("pointwise_noetherian", BaseFlag::PointwiseNoetherian),
    (
        "topologically_noetherian",
        BaseFlag::TopologicallyNoetherian,
    ),
    ("jacobsonian", BaseFlag::Jacobsonian),
    ("connected", BaseFlag::Connected),
    ("reduced", BaseFlag::Reduced),
    ("normal", BaseFlag::Normal),
    ("cohen_macaulay", BaseFlag::CohenMacaulay),
];

/// The full rule table. For each property the rules are tried in order.
pub fn rules() -> Vec<Rule> {
    use BaseFlag::*;
    use Condition::*;
    let mut out = Vec::new();
    let mut add =
        |property: &'static str, verdict: bool, citation: &'static str, h: &[Condition]| {
            out.push(Rule {
                property,
                verdict,
                citation,
                hypotheses: h.to_vec(),
            })
        };
    let s_nonempty = Base(Empty, false);
    let s_empty = Base(Empty, true);

    add("separated_morphism", true, MORPHISM, &[]);
    add("quasicompact_morphism", true, QUASICOMPACT, &[]);
    add("flat", true, FLAT, &[]);
    add("faithfully_flat", true, MORPHISM, &[FanEmpty(false)]);
    add("faithfully_flat", true, MORPHISM, &[s_empty]);
    add(
        "faithfully_flat",
        false,
        MORPHISM,
        &[FanEmpty(true), s_nonempty],
    );
    add("finite_presentation", true, MORPHISM, &[]);
    add("proper", true, PROPER, &[FanComplete(true)]);
    add("proper", true, PROPER, &[FanEmpty(true)]);
    add("proper", true, PROPER, &[s_empty]);
    add(
        "proper",
        false,
        PROPER,
        &[FanComplete(false), FanEmpty(false), s_nonempty],
    );
    add("finite", true, MORPHISM, &[RankZero(true)]);
    add("finite", true, MORPHISM, &[FanEmpty(true)]);
    add("finite", true, MORPHISM, &[s_empty]);
    add(
        "finite",
        false,
        MORPHISM,
        &[RankZero(false), FanEmpty(false), s_nonempty],
    );
    add("regular_morphism", true, REGULARITY, &[FanRegular(true)]);
    add("regular_morphism", true, REGULARITY, &[s_empty]);
    add(
        "regular_morphism",
        false,
        REGULARITY,
        &[FanRegular(false), s_nonempty],
    );
    add("r_k_morphism", true, REGULARITY, &[FanRegular(true)]);
    add("r_k_morphism", true, REGULARITY, &[s_empty]);
    add(
        "r_k_morphism",
        false,
        REGULARITY,
        &[SerreIndexAtLeastRank(true), FanRegular(false), s_nonempty],
    );
    add("cohen_macaulay_morphism", true, MORPHISM, &[]);
    add("normal_morphism", true, MORPHISM, &[]);
    add("connected_morphism", true, MORPHISM, &[]);
    add("irreducible_morphism", true, MORPHISM, &[FanEmpty(false)]);
    add("s_k_morphism", true, MORPHISM, &[]);

    for &(property, flag) in TRANSFERRED {
        add(property, true, TOTAL, &[FanEmpty(true)]);
        add(property, true, TOTAL, &[Base(flag, true)]);
        add(
            property,
            false,
            TOTAL,
            &[Base(flag, false), FanEmpty(false)],
        );
    }
    add("s_k", true, TOTAL, &[FanEmpty(true)]);
    add("s_k", true, TOTAL, &[BaseSerreS(true)]);
    add("s_k", false, TOTAL, &[BaseSerreS(false), FanEmpty(false)]);
    for (property, flag) in [("irreducible", Irreducible), ("integral", Integral)] {
        add(property, true, TOTAL, &[Base(flag, true), FanEmpty(false)]);
        add(property, false, TOTAL, &[Base(flag, false)]);
        add(property, false, TOTAL, &[FanEmpty(true)]);
    }
    add("artinian", true, TOTAL, &[FanEmpty(true)]);
    add("artinian", true, TOTAL, &[s_empty]);
    add(
        "artinian",
        true,
        TOTAL,
        &[BaseArtinian(true), RankZero(true)],
    );
    add(
        "artinian",
        false,
        TOTAL,
        &[BaseArtinian(false), FanEmpty(false), s_nonempty],
    );
    add(
        "artinian",
        false,
        TOTAL,
        &[RankZero(false), FanEmpty(false), s_nonempty],
    );
    add(
        "regular",
        true,
        REG_TOTAL,
        &[Base(Regular, true), FanRegular(true)],
    );
    add("regular", true, REG_TOTAL, &[s_empty]);
    add("regular", true, REG_TOTAL, &[FanEmpty(true)]);
    add(
        "regular",
        false,
        REG_TOTAL,
        &[Base(Regular, false), s_nonempty, FanEmpty(false)],
    );
    add(
        "regular",
        false,
        REG_TOTAL,
        &[FanRegular(false), s_nonempty, FanEmpty(false)],
    );
    add("r_k", true, REG_K, &[BaseSerreR(true), FanRegular(true)]);
    add("r_k", true, REG_K, &[s_empty]);
    add("r_k", true, REG_K, &[FanEmpty(true)]);
    add(
        "r_k",
        false,
        REG_K,
        &[
            SerreIndexAtLeastRank(true),
            BaseSerreR(false),
            s_nonempty,
            FanEmpty(false),
        ],
    );
    add(
        "r_k",
        false,
        REG_K,
        &[
            SerreIndexAtLeastRank(true),
            FanRegular(false),
            s_nonempty,
            FanEmpty(false),
        ],
    );
    add(
        "equidimensional",
        true,
        EQUIDIM,
        &[Base(LocallyNoetherian, true), Base(Equidimensional, true)],
    );
    add(
        "equidimensional",
        true,
        EQUIDIM,
        &[Base(LocallyNoetherian, true), FanEmpty(true)],
    );
    add(
        "equidimensional",
        false,
        EQUIDIM,
        &[
            Base(LocallyNoetherian, true),
            Base(Equidimensional, false),
            FanEmpty(false),
        ],
    );
    add(
        "universally_catenary",
        true,
        CATENARY,
        &[Base(UniversallyCatenary, true)],
    );
    add("universally_catenary", true, CATENARY, &[FanEmpty(true)]);
    add(
        "universally_catenary",
        false,
        CATENARY,
        &[Base(UniversallyCatenary, false), FanEmpty(false)],
    );
    add(
        "catenary",
        true,
        CATENARY,
        &[Base(UniversallyCatenary, true)],
    );
    add("catenary", true, CATENARY, &[FanEmpty(true)]);
    add(
        "catenary",
        false,
        EQUIDIM,
        &[
            RankZero(false),
            Base(PointwiseNoetherian, true),
            Base(UniversallyCatenary, false),
            FanEmpty(false),
        ],
    );
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub property: String,
    pub verdict: Tri,
    pub citation: String,
    pub justification: String,
    /// The rule that produced a yes/no verdict.
    #[serde(skip)]
    pub rule: Option<Rule>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub verdicts: Vec<Verdict>,
}

impl PropertyReport {
    pub fn get(&self, property: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.property == property)
    }

    pub fn verdict(&self, property: &str) -> Tri {
        self.get(property).map_or(Tri::Unknown, |v| v.verdict)
    }

    /// A JSON array of `{property, verdict, citation, justification}` records.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.verdicts).expect("verdicts serialize");
        s.push('\n');
        s
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ReportOptions {
    /// Index `k` for the Serre properties; defaults to the lattice rank.
    pub serre_k: Option<usize>,
}

pub fn property_report(f: &Fan, base: &BaseDescriptor) -> PropertyReport {
    property_report_with(f, base, ReportOptions::default())
}

pub fn property_report_with(
    f: &Fan,
    base: &BaseDescriptor,
    options: ReportOptions,
) -> PropertyReport {
    let n = f.ambient_rank();
    let facts = Facts::new(f, base, options);
    let table = rules();
    let mut verdicts = Vec::new();
    for &property in PROPERTIES {
        let candidates: Vec<&Rule> = table.iter().filter(|r| r.property == property).collect();
        let prefix = if property.contains("_k") {
            format!("k = {}: ", facts.k)
        } else {
            String::new()
        };
        let verdict = match candidates
            .iter()
            .find(|r| r.hypotheses.iter().all(|c| c.holds(&facts)))
        {
            Some(rule) => Verdict {
                property: property.to_string(),
                verdict: Tri::from_bool(rule.verdict),
                citation: rule.citation.to_string(),
                justification: format!("{prefix}{}", rule.describe()),
                rule: Some((*rule).clone()),
            },
            None => Verdict {
                property: property.to_string(),
                verdict: Tri::Unknown,
                citation: candidates[0].citation.to_string(),
                justification: format!(
                    "{prefix}undetermined; a verdict needs one of: {}",
                    candidates
                        .iter()
                        .map(|r| r.describe())
                        .collect::<Vec<_>>()
                        .join("; ")
                ),
                rule: None,
            },
        };
        verdicts.push(verdict);
    }
    let bounds = bounds_for_rank((!f.is_empty()).then_some(n), base);
    verdicts.push(Verdict {
        property: "dim".to_string(),
        verdict: if bounds.is_exact() {
            Tri::Yes
        } else {
            Tri::Unknown
        },
        citation: DIMENSION.to_string(),
        justification: format!("dim(X) = {bounds}"),
        rule: None,
    });
    PropertyReport { verdicts }
}

/// Possible Krull dimensions of the glued scheme.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimensionBounds {
    /// The scheme is empty; its dimension lies below every natural number.
    Empty,
    Range {
        lo: DimValue,
        hi: DimValue,
    },
    Unknown,
}

impl DimensionBounds {
    pub fn is_exact(&self) -> bool {
        match self {
            DimensionBounds::Empty => true,
            DimensionBounds::Range { lo, hi } => lo == hi,
            DimensionBounds::Unknown => false,
        }
    }
}

impl fmt::Display for DimensionBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimensionBounds::Empty => write!(f, "empty"),
            DimensionBounds::Range { lo, hi } => write!(f, "[{lo},{hi}]"),
            DimensionBounds::Unknown => write!(f, "unknown"),
        }
    }
}

/// `[dim S + r, (r+1)·dim S + r]`, tightened to `dim S + r` over a locally noetherian base.
pub fn dimension_bounds(s: &MonoidSystem, base: &BaseDescriptor) -> DimensionBounds {
    bounds_for_rank(s.rank(), base)
}

fn bounds_for_rank(r: Option<usize>, base: &BaseDescriptor) -> DimensionBounds {
    let Some(r) = r else {
        return DimensionBounds::Empty;
    };
    if base.get(BaseFlag::Empty) == Tri::Yes {
        return DimensionBounds::Empty;
    }
    let Some((lo, hi)) = base.dim() else {
        return DimensionBounds::Unknown;
    };
    let r = r as u64;
    let hi = if base.get(BaseFlag::LocallyNoetherian) == Tri::Yes {
        hi.plus(r)
    } else {
        hi.stretched(r)
    };
    DimensionBounds::Range { lo: lo.plus(r), hi }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    Irreducible,
    Connected,
}

/// Number of irreducible or connected components of `X_Σ(S)` given that of `S`.
pub fn component_transport(
    f: &Fan,
    base: &BaseDescriptor,
    kind: ComponentKind,
    component_count: usize,
) -> Result<usize> {
    if f.is_empty() {
        return Err(Error::HypothesesNotMet(format!(
            "{COMPONENTS}: transport of {} components needs a nonempty fan",
            match kind {
                ComponentKind::Irreducible => "irreducible",
                ComponentKind::Connected => "connected",
            }
        )));
    }
    let empty = base.get(BaseFlag::Empty);
    if (empty == Tri::Yes && component_count != 0) || (empty == Tri::No && component_count == 0) {
        return Err(Error::InconsistentBase(format!(
            "{component_count} components for a base that is {}empty",
            if empty == Tri::Yes { "" } else { "not " }
        )));
    }
    if kind == ComponentKind::Irreducible
        && base.get(BaseFlag::Irreducible) == Tri::Yes
        && component_count != 1
    {
        return Err(Error::InconsistentBase(format!(
            "an irreducible base has one irreducible component, not {component_count}"
        )));
    }
    Ok(component_count)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionNote {
    pub commutes_with_reduction: bool,
    pub citation: &'static str,
    pub note: String,
}

/// Fan systems are torsionfree, so `X_Σ(S)_red = X_Σ(S_red)`.
pub fn reduction_report(f: &Fan) -> ReductionNote {
    let note = if f.is_empty() {
        "the fan is empty, so X is empty and reduced".to_string()
    } else {
        "X is reduced exactly when S is; the reduction of X is X over the reduction of S"
            .to_string()
    };
    ReductionNote {
        commutes_with_reduction: true,
        citation: REDUCTION,
        note,
    }
}
