//! Command-line front end for the toric kernel.
//!
//! Every command prints pretty JSON on stdout. Exit codes: 0 on success,
//! 1 for unreadable or malformed input, 2 when the input is rejected
//! mathematically.

pub mod io;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use thiserror::Error;
use toric_core::cone::Polycone;
use toric_core::fan::{fullify, is_complete, is_regular};
use toric_core::monoid::hilbert_basis_of_cone;
use toric_core::scheme::{
    build_atlas_with_bound, property_report_with, system_from_fan, ReportOptions,
};

use io::{parse_base, vec_json, vecs_json, FanDocument, LoadedFan};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Math(#[from] toric_core::Error),
    #[error("{0}")]
    Rejected(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Math(_) | CliError::Rejected(_) => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "toric",
    version,
    about = "Exact computations with fans and toric schemes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct FanArgs {
    /// Fan document (JSON).
    #[arg(long)]
    pub fan: PathBuf,
    /// Use the listed cones as they are instead of closing them under faces.
    #[arg(long)]
    pub no_auto_close: bool,
}

#[derive(Debug, Args)]
pub struct ConeArgs {
    #[command(flatten)]
    pub fan: FanArgs,
    /// Position of the cone in the document's cone list.
    #[arg(long)]
    pub cone: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the fan axioms and print the canonical fan.
    Validate(FanArgs),
    /// Hilbert basis of the dual monoid of a cone.
    Hilbert(ConeArgs),
    /// Dual cone of a cone.
    Dual(ConeArgs),
    /// Face lattice of a cone.
    Faces(ConeArgs),
    /// Regularity of each cone and of the fan.
    Regularity(FanArgs),
    /// Whether the fan covers the whole space.
    Complete(FanArgs),
    /// Charts and transition localizations of the toric scheme.
    Atlas {
        #[command(flatten)]
        fan: FanArgs,
        #[arg(long, default_value_t = toric_core::scheme::DEFAULT_SEARCH_BOUND)]
        search_bound: usize,
    },
    /// Replace the fan by a full fan in the sublattice it spans.
    Fullify(FanArgs),
    /// Cited property table of the toric scheme over a base.
    Report {
        #[command(flatten)]
        fan: FanArgs,
        /// Base descriptor (JSON).
        #[arg(long)]
        base: PathBuf,
        /// Index k for the Serre properties; defaults to the lattice rank.
        #[arg(long)]
        serre_k: Option<usize>,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn load(args: &FanArgs) -> Result<LoadedFan, CliError> {
    let doc = FanDocument::parse(&read(&args.fan)?)?;
    doc.load(doc.auto_close() && !args.no_auto_close)
}

fn pick(loaded: &LoadedFan, index: usize) -> Result<&Polycone, CliError> {
    loaded.listed.get(index).ok_or_else(|| {
        CliError::Rejected(format!(
            "cone index {index} out of range; the document lists {} cones",
            loaded.listed.len()
        ))
    })
}

fn cone_json(c: &Polycone) -> Value {
    json!({
        "cone": c.to_string(),
        "dim": c.dim(),
        "rays": vecs_json(c.rays()),
        "lineality": vecs_json(c.lineality()),
        "inequalities": vecs_json(c.normals()),
        "equations": vecs_json(c.equations()),
    })
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Runs a command and returns what it prints on success.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Validate(args) => {
            let loaded = load(args)?;
            let doc = serde_json::to_value(FanDocument::from_fan(&loaded.fan))
                .expect("documents serialize");
            Ok(render(&doc))
        }
        Command::Hilbert(args) => {
            let loaded = load(&args.fan)?;
            let hb = hilbert_basis_of_cone(&pick(&loaded, args.cone)?.dual());
            Ok(render(&json!({
                "hilbert_basis": vecs_json(&hb.all()),
                "lineality": vecs_json(&hb.lineality),
            })))
        }
        Command::Dual(args) => {
            let loaded = load(&args.fan)?;
            Ok(render(&cone_json(&pick(&loaded, args.cone)?.dual())))
        }
        Command::Faces(args) => {
            let loaded = load(&args.fan)?;
            let faces = pick(&loaded, args.cone)?.faces()?;
            let items: Vec<Value> = faces
                .iter()
                .map(|f| {
                    json!({
                        "face": f.cone.to_string(),
                        "dim": f.cone.dim(),
                        "rays": vecs_json(f.cone.rays()),
                        "witness": vec_json(&f.witness),
                    })
                })
                .collect();
            Ok(render(&Value::Array(items)))
        }
        Command::Regularity(args) => {
            let loaded = load(args)?;
            let report = is_regular(&loaded.fan);
            let cones: Vec<Value> = loaded
                .fan
                .cones()
                .iter()
                .zip(&report.per_cone)
                .map(|(c, r)| json!({"cone": c.to_string(), "regular": r}))
                .collect();
            Ok(render(&json!({"regular": report.regular, "cones": cones})))
        }
        Command::Complete(args) => {
            let loaded = load(args)?;
            Ok(render(&json!({"complete": is_complete(&loaded.fan)})))
        }
        Command::Atlas { fan, search_bound } => {
            let loaded = load(fan)?;
            let atlas = build_atlas_with_bound(&system_from_fan(&loaded.fan), *search_bound)?;
            let charts: Vec<Value> = atlas
                .charts
                .iter()
                .map(|c| {
                    json!({
                        "label": c.label,
                        "monoid_generators": vecs_json(c.monoid.generators()),
                        "augmentation_ideal": vecs_json(&c.section.augmentation_ideal),
                    })
                })
                .collect();
            let transitions: Vec<Value> = atlas
                .transitions
                .iter()
                .map(|t| json!({"lower": t.lower, "upper": t.upper, "u": vec_json(&t.u)}))
                .collect();
            Ok(render(&json!({
                "charts": charts,
                "maximal_charts": atlas.maximal_charts(),
                "transitions": transitions,
            })))
        }
        Command::Fullify(args) => {
            let loaded = load(args)?;
            let full = fullify(&loaded.fan)?;
            let reduced = serde_json::to_value(FanDocument::from_fan(&full.reduced_fan))
                .expect("documents serialize");
            Ok(render(&json!({
                "reduced_fan": reduced,
                "sublattice_basis": vecs_json(&full.sublattice_basis),
                "complement": vecs_json(&full.complement),
                "torus_rank": full.torus_rank,
                "cone_map": full.cone_map,
            })))
        }
        Command::Report { fan, base, serre_k } => {
            let loaded = load(fan)?;
            let base = parse_base(&read(base)?)?;
            let report =
                property_report_with(&loaded.fan, &base, ReportOptions { serre_k: *serre_k });
            Ok(report.to_json())
        }
    }
}
