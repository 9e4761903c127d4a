//! Flat row shapes for the documented JSON/CSV output schemas, shared by
//! the command-line frontend and the Python bindings.

use serde::{Deserialize, Serialize};

use crate::census::{Form, OrbitLabel, OrbitRecord};
use crate::error::Error;
use crate::matching::{distinguished_triple, sigma_lambda};
use crate::partition::Partition;
use crate::sigma::{support_level, Triple};

/// One orbit line: `{lambda, form, k, local_systems}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrbitRow {
    pub lambda: Partition,
    pub form: Option<Form>,
    pub k: u32,
    pub local_systems: u64,
}

impl From<&OrbitRecord> for OrbitRow {
    fn from(record: &OrbitRecord) -> Self {
        Self {
            lambda: record.label.lambda().clone(),
            form: record.label.form(),
            k: record.distinct_sizes,
            local_systems: record.local_system_count,
        }
    }
}

/// One parameter line: `{nu, mu1, mu2, omega, support_m, support_omega}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TripleRow {
    pub nu: Partition,
    pub mu1: Partition,
    pub mu2: Partition,
    pub omega: Option<Form>,
    pub support_m: u32,
    pub support_omega: Option<Form>,
}

impl TripleRow {
    pub fn new(triple: &Triple, n: u32) -> Result<Self, Error> {
        let support = support_level(triple, n)?;
        Ok(Self {
            nu: triple.nu().clone(),
            mu1: triple.mu1().clone(),
            mu2: triple.mu2().clone(),
            omega: triple.omega(),
            support_m: support.m,
            support_omega: support.omega,
        })
    }
}

/// A parameter line inside a matching output, with the distinguished
/// triple flagged.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatchRow {
    #[serde(flatten)]
    pub triple: TripleRow,
    pub distinguished: bool,
}

/// Output of the `match` command: the orbit, its triple set, and the
/// distinguished triple repeated separately.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatchOutput {
    pub lambda: Partition,
    pub form: Option<Form>,
    pub triples: Vec<MatchRow>,
    pub distinguished: TripleRow,
}

pub fn match_output(orbit: &OrbitLabel) -> Result<MatchOutput, Error> {
    let n = orbit.lambda().weight();
    let chosen = distinguished_triple(orbit)?;
    let triples = sigma_lambda(orbit)
        .iter()
        .map(|t| {
            Ok(MatchRow {
                triple: TripleRow::new(t, n)?,
                distinguished: *t == chosen,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(MatchOutput {
        lambda: orbit.lambda().clone(),
        form: orbit.form(),
        triples,
        distinguished: TripleRow::new(&chosen, n)?,
    })
}
