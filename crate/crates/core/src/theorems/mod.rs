//! Machine checks for the matchability, counting and isoperimetric statements
//! over concrete instances, with reproducible records.

use std::borrow::Cow;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::set::GroupSet;

mod sweep;
mod verify;

pub use sweep::{replay, sweep, Retain, SweepMode, SweepReport, SweepSpec, Summary};
pub use verify::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum StatementId {
    #[serde(rename = "K1")]
    K1,
    #[serde(rename = "KAROLYI")]
    Karolyi,
    #[serde(rename = "MCP")]
    Mcp,
    #[serde(rename = "MUBB")]
    Mubb,
    #[serde(rename = "EHO")]
    Eho,
    #[serde(rename = "EHOL")]
    Ehol,
    #[serde(rename = "OLSON_XY")]
    OlsonXy,
    #[serde(rename = "OLSON_CLIQUE")]
    OlsonClique,
    #[serde(rename = "CCHOWLA")]
    Cchowla,
    #[serde(rename = "VCHOWLA")]
    Vchowla,
    #[serde(rename = "CF")]
    Cf,
    #[serde(rename = "TRANS")]
    Trans,
    #[serde(rename = "DEG")]
    Deg,
    #[serde(rename = "KHC_FORM")]
    KhcForm,
    #[serde(rename = "LOSONCZY")]
    Losonczy,
    #[serde(rename = "PROG_EXAMPLE_1")]
    ProgExample1,
    #[serde(rename = "PROG_EXAMPLE_2")]
    ProgExample2,
}

impl StatementId {
    pub const ALL: [StatementId; 17] = [
        StatementId::K1,
        StatementId::Karolyi,
        StatementId::Mcp,
        StatementId::Mubb,
        StatementId::Eho,
        StatementId::Ehol,
        StatementId::OlsonXy,
        StatementId::OlsonClique,
        StatementId::Cchowla,
        StatementId::Vchowla,
        StatementId::Cf,
        StatementId::Trans,
        StatementId::Deg,
        StatementId::KhcForm,
        StatementId::Losonczy,
        StatementId::ProgExample1,
        StatementId::ProgExample2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StatementId::K1 => "K1",
            StatementId::Karolyi => "KAROLYI",
            StatementId::Mcp => "MCP",
            StatementId::Mubb => "MUBB",
            StatementId::Eho => "EHO",
            StatementId::Ehol => "EHOL",
            StatementId::OlsonXy => "OLSON_XY",
            StatementId::OlsonClique => "OLSON_CLIQUE",
            StatementId::Cchowla => "CCHOWLA",
            StatementId::Vchowla => "VCHOWLA",
            StatementId::Cf => "CF",
            StatementId::Trans => "TRANS",
            StatementId::Deg => "DEG",
            StatementId::KhcForm => "KHC_FORM",
            StatementId::Losonczy => "LOSONCZY",
            StatementId::ProgExample1 => "PROG_EXAMPLE_1",
            StatementId::ProgExample2 => "PROG_EXAMPLE_2",
        }
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StatementId {
    type Err = Error;

    fn from_str(s: &str) -> Result<StatementId> {
        StatementId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Parse {
                input: s.to_string(),
                reason: "unknown statement id".into(),
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

/// Everything needed to re-run one check: the group descriptor plus named
/// element lists and integer parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub group: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub sets: BTreeMap<String, Vec<usize>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, usize>,
}

impl Instance {
    pub fn new(g: &Group) -> Instance {
        Instance {
            group: g.spec().to_string(),
            sets: BTreeMap::new(),
            params: BTreeMap::new(),
        }
    }

    pub fn with_set(mut self, name: &str, s: &GroupSet) -> Instance {
        self.sets.insert(name.to_string(), s.to_vec());
        self
    }

    pub fn with_param(mut self, name: &str, v: usize) -> Instance {
        self.params.insert(name.to_string(), v);
        self
    }

    pub fn set(&self, g: &Group, name: &str) -> Result<GroupSet> {
        let items = self
            .sets
            .get(name)
            .ok_or_else(|| Error::Precondition(format!("instance has no set {name:?}")))?;
        g.set(items.iter().copied())
    }

    pub fn param(&self, name: &str) -> Result<usize> {
        self.params
            .get(name)
            .copied()
            .ok_or_else(|| Error::Precondition(format!("instance has no parameter {name:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub statement_id: StatementId,
    pub instance: Instance,
    pub verdict: Verdict,
    pub details: serde_json::Value,
}

impl VerificationRecord {
    /// Out-of-regime runs (non-abelian λ-side questions, relaxed order floors)
    /// are flagged in their details and never count as acceptance failures.
    pub fn is_exploratory(&self) -> bool {
        self.details.get("exploratory").and_then(serde_json::Value::as_bool) == Some(true)
    }
}

/// Why a check did not apply to an instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skip(pub Cow<'static, str>);

impl Skip {
    fn new(reason: impl Into<Cow<'static, str>>) -> Skip {
        Skip(reason.into())
    }
}

/// Details attached to a checked instance.
pub trait Detail: Serialize {
    fn exploratory(&self) -> bool {
        false
    }
}

pub type Outcome<D> = std::result::Result<(Verdict, D), Skip>;

fn verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

pub(crate) fn make_record<D: Detail>(id: StatementId, instance: Instance, outcome: Outcome<D>) -> VerificationRecord {
    let (verdict, details) = match outcome {
        Ok((v, d)) => (v, serde_json::to_value(&d).expect("details serialize")),
        Err(Skip(reason)) => (Verdict::Skipped, serde_json::json!({ "reason": reason })),
    };
    VerificationRecord {
        statement_id: id,
        instance,
        verdict,
        details,
    }
}
