//! The single document emitted per invocation.

use abelcodes::eta::Step;
use abelcodes::witness::ThetaCase;
use abelcodes::GroupElement;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub input: Input,
    pub result: Payload,
    /// Wall time, only with `--timing` so that reports stay reproducible.
    pub timing_ms: Option<f64>,
}

/// Echo of the arguments that determine the result.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Input {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    /// Reference basis orders that generator coordinates refer to.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_orders: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbits: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub cap: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Eta(EtaOutcome),
    Inventory(InventoryOutcome),
    Witness(WitnessOutcome),
    Codes(CodesOutcome),
    Suite(SuiteOutcome),
    Error(ErrorOutcome),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtaOutcome {
    pub group: String,
    pub order: u64,
    pub tau: u64,
    pub value: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formula: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derivation: Option<Vec<Step>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brute_force: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
    pub sylow_homocyclic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InventoryRow {
    pub iso_type: String,
    pub count: u64,
    pub representative: Vec<GroupElement>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InventoryOutcome {
    pub group: String,
    pub eta: u64,
    pub tau: u64,
    pub cocyclic_subgroups: u64,
    pub rows: Vec<InventoryRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentOutcome {
    pub prime: u64,
    pub x: GroupElement,
    pub y: GroupElement,
    pub m: u32,
    pub case: ThetaCase,
    /// Basis of the Sylow part of `H` and its images under theta.
    pub theta_domain: Vec<GroupElement>,
    pub theta_images: Vec<GroupElement>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fallback: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessOutcome {
    pub group: String,
    pub h: Vec<GroupElement>,
    pub k: Vec<GroupElement>,
    pub iso_type: String,
    pub quotient_type: String,
    /// Images of the reference basis under phi.
    pub phi: Vec<GroupElement>,
    pub components: Vec<ComponentOutcome>,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRow {
    pub representative: GroupElement,
    pub class_size: usize,
    pub kernel_type: String,
    pub dimension: usize,
    /// `(weight, number of codewords)` pairs, increasing weight.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<(usize, u64)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitOutcome {
    pub count: usize,
    pub eta: u64,
    pub agreement: bool,
    /// Indices into the code table.
    pub orbits: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodesOutcome {
    pub group: String,
    pub q: u64,
    pub extension_degree: u32,
    pub modulus: Vec<u64>,
    pub codes: Vec<CodeRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbits: Option<OrbitOutcome>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionOutcome {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    pub checks: u64,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOutcome {
    pub seed: u64,
    pub passed: bool,
    pub criteria: Vec<CriterionOutcome>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorOutcome {
    pub exit_code: i32,
    pub message: String,
}

impl Payload {
    /// Exit status implied by the outcome itself.
    pub fn exit_code(&self) -> i32 {
        let mismatch = match self {
            Payload::Eta(e) => e.agreement == Some(false),
            Payload::Witness(w) => !w.verified,
            Payload::Codes(c) => c.orbits.as_ref().is_some_and(|o| !o.agreement),
            Payload::Suite(s) => !s.passed,
            Payload::Inventory(_) => false,
            Payload::Error(e) => return e.exit_code,
        };
        if mismatch {
            crate::EXIT_MISMATCH
        } else {
            0
        }
    }
}
