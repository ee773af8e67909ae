//! JSON documents for fans and base descriptors.
//!
//! Integers are written as decimal strings; plain JSON integers are also
//! accepted on input.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use toric_core::cone::Polycone;
use toric_core::fan::{complete_under_faces, validate_fan};
use toric_core::scheme::{BaseFlag, DimValue};
use toric_core::{BaseDescriptor, Fan, IntVec, Tri};

use crate::CliError;

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
enum Integer {
    Text(String),
    Number(i64),
}

impl Integer {
    fn value(&self) -> Result<BigInt, CliError> {
        match self {
            Integer::Text(s) => s
                .trim()
                .parse()
                .map_err(|_| CliError::Parse(format!("not an integer: {s:?}"))),
            Integer::Number(n) => Ok(BigInt::from(*n)),
        }
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct ConeDocument {
    rays: Vec<Vec<Integer>>,
}

#[derive(Clone, Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct FanOptions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    auto_close_faces: Option<bool>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct FanDocument {
    lattice_rank: usize,
    cones: Vec<ConeDocument>,
    #[serde(default)]
    options: FanOptions,
}

/// A parsed fan together with the cones exactly as listed in the document.
#[derive(Clone, Debug)]
pub struct LoadedFan {
    pub fan: Fan,
    pub listed: Vec<Polycone>,
}

impl FanDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn auto_close(&self) -> bool {
        self.options.auto_close_faces.unwrap_or(true)
    }

    /// Builds the cones, closes them under faces when asked, and validates.
    pub fn load(&self, auto_close: bool) -> Result<LoadedFan, CliError> {
        let n = self.lattice_rank;
        let mut listed = Vec::new();
        for (i, cone) in self.cones.iter().enumerate() {
            let rays = cone
                .rays
                .iter()
                .map(|r| {
                    if r.len() != n {
                        return Err(CliError::Parse(format!(
                            "cone {i}: ray of length {} in lattice of rank {n}",
                            r.len()
                        )));
                    }
                    r.iter().map(Integer::value).collect::<Result<IntVec, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            listed.push(Polycone::from_rays(n, &rays)?);
        }
        let cones = if auto_close {
            complete_under_faces(&listed)?
        } else {
            listed.clone()
        };
        let fan = validate_fan(n, &cones)?;
        Ok(LoadedFan { fan, listed })
    }

    /// The document listing every cone of `fan` in canonical order.
    pub fn from_fan(fan: &Fan) -> Self {
        FanDocument {
            lattice_rank: fan.ambient_rank(),
            cones: fan
                .cones()
                .iter()
                .map(|c| ConeDocument {
                    rays: c.rays().iter().map(|r| text_vec(r)).collect(),
                })
                .collect(),
            options: FanOptions {
                auto_close_faces: Some(false),
            },
        }
    }
}

fn text_vec(v: &[BigInt]) -> Vec<Integer> {
    v.iter().map(|x| Integer::Text(x.to_string())).collect()
}

/// Integer vectors as arrays of decimal strings.
pub fn vec_json(v: &[BigInt]) -> serde_json::Value {
    serde_json::Value::Array(
        v.iter()
            .map(|x| serde_json::Value::String(x.to_string()))
            .collect(),
    )
}

pub fn vecs_json(vs: &[IntVec]) -> serde_json::Value {
    serde_json::Value::Array(vs.iter().map(|v| vec_json(v)).collect())
}

/// Reads a base descriptor: flag names map to `"yes"`, `"no"` or
/// `"unknown"`; `"dim"` is `[lo, hi]` with `"inf"` allowed, or `"unknown"`.
pub fn parse_base(text: &str) -> Result<BaseDescriptor, CliError> {
    let doc: BTreeMap<String, serde_json::Value> =
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let mut flags = BTreeMap::new();
    let mut dim = None;
    for (key, value) in doc {
        if key == "dim" {
            dim = parse_dim(&value)?;
            continue;
        }
        let flag = BaseFlag::from_name(&key)
            .ok_or_else(|| CliError::Parse(format!("unknown base property {key:?}")))?;
        let tri = value.as_str().and_then(Tri::parse).ok_or_else(|| {
            CliError::Parse(format!("{key}: expected \"yes\", \"no\" or \"unknown\""))
        })?;
        flags.insert(flag, tri);
    }
    Ok(BaseDescriptor::new(flags, dim)?)
}

fn parse_dim(value: &serde_json::Value) -> Result<Option<(DimValue, DimValue)>, CliError> {
    if value.as_str() == Some("unknown") {
        return Ok(None);
    }
    let bad = || CliError::Parse("dim: expected [lo, hi] or \"unknown\"".to_string());
    let items = value.as_array().filter(|a| a.len() == 2).ok_or_else(bad)?;
    let mut out = [DimValue::Infinite; 2];
    for (slot, item) in out.iter_mut().zip(items) {
        *slot = match item {
            serde_json::Value::Number(n) => DimValue::Finite(n.as_u64().ok_or_else(bad)?),
            serde_json::Value::String(s) if s == "inf" => DimValue::Infinite,
            serde_json::Value::String(s) => DimValue::Finite(s.parse().map_err(|_| bad())?),
            _ => return Err(bad()),
        };
    }
    Ok(Some((out[0], out[1])))
}
