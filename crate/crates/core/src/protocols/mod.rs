//! Two-party protocols for applying Alice's operator to Bob's qubit, with
//! exact branch enumeration and resource accounting.
//!
//! Register layout shared by the protocols:
//!
//! | qubit      | role                                  |
//! |------------|---------------------------------------|
//! | `alice#0`  | Alice's half of the first shared pair  |
//! | `alice#1`  | Alice's half of the second shared pair |
//! | `bob#2`    | Bob's half of the first shared pair    |
//! | `bob#3`    | Bob's half of the second shared pair   |
//! | `bob#4`    | Bob's input qubit                     |

mod demos;
mod engine;
mod ledger;
mod one_one_one;
mod ramsey;
mod record;
mod two_way;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::opsets::{
    anticommutator_norm, classify_operator, commutator_norm, Axis, ClassTag, Unimodular,
};
use crate::qcore::{Basis, Party, QubitId, StateVector};
use crate::tolerance;

pub use demos::{
    cp_gates, demo_cnot_reverse, demo_cp_capacity, demo_cp_entanglement, CP_CONTROLS, CP_TARGETS,
};
pub use ledger::{Direction, ResourceLedger};
pub use one_one_one::run_111;
pub use ramsey::{ramsey_curve, ramsey_grid};
pub use record::{
    header, to_records, write_structured, BranchRecord, Header, LedgerRecord, MeasurementEntry,
    SCHEMA_VERSION,
};
pub use two_way::{run_bqst, run_restricted_221, run_universal_221};

pub const ALICE_PAIR_1: QubitId = QubitId::alice(0);
pub const ALICE_PAIR_2: QubitId = QubitId::alice(1);
pub const BOB_PAIR_1: QubitId = QubitId::bob(2);
pub const BOB_PAIR_2: QubitId = QubitId::bob(3);
pub const BOB_INPUT: QubitId = QubitId::bob(4);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProtocolKind {
    Bqst,
    Universal221,
    Restricted221,
    One11,
}

impl ProtocolKind {
    pub fn name(self) -> &'static str {
        match self {
            ProtocolKind::Bqst => "bqst",
            ProtocolKind::Universal221 => "universal221",
            ProtocolKind::Restricted221 => "restricted221",
            ProtocolKind::One11 => "one11",
        }
    }

    pub fn ledger(self) -> ResourceLedger {
        match self {
            ProtocolKind::Bqst => ResourceLedger::BQST,
            ProtocolKind::Universal221 | ProtocolKind::Restricted221 => ResourceLedger::TWO_TWO_ONE,
            ProtocolKind::One11 => ResourceLedger::ONE_ONE_ONE,
        }
    }

    /// Runs the protocol and checks the ledger and, for exhaustive runs,
    /// probability conservation.
    pub fn run(self, cfg: &ProtocolConfig) -> Result<Vec<ProtocolOutcome>> {
        let outcomes = match self {
            ProtocolKind::Bqst => run_bqst(cfg),
            ProtocolKind::Universal221 => run_universal_221(cfg),
            ProtocolKind::Restricted221 => run_restricted_221(cfg),
            ProtocolKind::One11 => run_111(cfg),
        }?;
        for o in &outcomes {
            engine::invariant(o.ledger == self.ledger(), || {
                format!("{self}: ledger {:?}", o.ledger)
            })?;
        }
        if cfg.mode == Mode::Exhaustive {
            let total = total_probability(&outcomes);
            engine::invariant((total - 1.0).abs() <= tolerance::NORM, || {
                format!("{self}: total probability {total}")
            })?;
        }
        Ok(outcomes)
    }
}

impl fmt::Display for ProtocolKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProtocolKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bqst" => Ok(ProtocolKind::Bqst),
            "universal221" => Ok(ProtocolKind::Universal221),
            "restricted221" => Ok(ProtocolKind::Restricted221),
            "one11" => Ok(ProtocolKind::One11),
            other => Err(Error::Parse {
                column: 1,
                message: format!("unknown protocol `{other}`"),
            }),
        }
    }
}

/// What Alice is told about her box: which σz-family `U` comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Promise {
    Commuting,
    Anticommuting,
}

impl Promise {
    pub fn tag(self) -> ClassTag {
        match self {
            Promise::Commuting => ClassTag::CommutesWithAxis,
            Promise::Anticommuting => ClassTag::AnticommutesWithAxis,
        }
    }

    pub fn holds_for(self, u: &Unimodular) -> bool {
        classify_operator(u, &Axis::Z).tag() == self.tag()
    }
}

impl FromStr for Promise {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "commuting" => Ok(Promise::Commuting),
            "anticommuting" => Ok(Promise::Anticommuting),
            other => Err(Error::Parse {
                column: 1,
                message: format!("unknown promise `{other}`"),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Exhaustive,
    Sampled {
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProtocolConfig {
    pub u: Unimodular,
    pub psi: StateVector,
    pub promise: Option<Promise>,
    pub mode: Mode,
}

impl ProtocolConfig {
    pub fn new(u: Unimodular, psi: StateVector) -> Self {
        ProtocolConfig {
            u,
            psi,
            promise: None,
            mode: Mode::Exhaustive,
        }
    }

    pub fn with_promise(mut self, promise: Promise) -> Self {
        self.promise = Some(promise);
        self
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    /// Entry checks shared by every protocol.
    pub fn validate(&self) -> Result<()> {
        if self.psi.num_qubits() != 1 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: self.psi.dim(),
            });
        }
        let norm = self.psi.norm_sqr();
        if (norm - 1.0).abs() > tolerance::NORM {
            return Err(Error::NotNormalized(norm));
        }
        let residual = self.u.unimodularity_residual();
        if residual.abs() > tolerance::NORM {
            return Err(Error::NotUnimodular(residual));
        }
        if let Some(p) = self.promise {
            if !p.holds_for(&self.u) {
                return Err(Error::Precondition(format!(
                    "promise `{}` violated: ‖[U,σz]‖ = {:.3e}, ‖{{U,σz}}‖ = {:.3e}",
                    match p {
                        Promise::Commuting => "commuting",
                        Promise::Anticommuting => "anticommuting",
                    },
                    commutator_norm(&self.u, &Axis::Z),
                    anticommutator_norm(&self.u, &Axis::Z)
                )));
            }
        }
        Ok(())
    }

    /// `U|ψ⟩`, the state Bob should end up with.
    pub fn target(&self) -> Result<StateVector> {
        let v = self.psi.as_qubit().ok_or(Error::DimensionMismatch {
            expected: 2,
            got: self.psi.dim(),
        })?;
        let w = self.u.matrix().apply(v);
        StateVector::qubit(w[0], w[1])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasurementRecord {
    pub party: Party,
    pub basis: Basis,
    pub outcome: Vec<u8>,
}

/// One leaf of a protocol's branch tree.
#[derive(Debug, Clone, PartialEq)]
pub struct ProtocolOutcome {
    pub protocol: ProtocolKind,
    pub measurement_record: Vec<MeasurementRecord>,
    pub probability: f64,
    /// Bob's output qubit, factored out of the register.
    pub bob_final: StateVector,
    pub target_fidelity: f64,
    pub succeeded: bool,
    pub ledger: ResourceLedger,
}

/// Total probability of the branches that delivered `U|ψ⟩`.
pub fn success_probability(outcomes: &[ProtocolOutcome]) -> f64 {
    outcomes
        .iter()
        .filter(|o| o.succeeded)
        .map(|o| o.probability)
        .sum()
}

pub fn total_probability(outcomes: &[ProtocolOutcome]) -> f64 {
    outcomes.iter().map(|o| o.probability).sum()
}
