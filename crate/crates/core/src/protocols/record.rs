//! Line-delimited JSON output: one header line, then one record per branch.
//!
//! ```text
//! {"schema":1,"protocol":"universal221","branches":16,"total_probability":1.0,"success_probability":0.5}
//! {"protocol":"universal221","branch_id":0,"measurement_record":[{"party":"bob","basis":"computational","outcome":"0"},...],"probability":0.0625,"fidelity":1.0,"succeeded":true,"ledger":{"ebits":2,"cbits_ab":2,"cbits_ba":1},"bob_final":[[re,im],[re,im]]}
//! ```

use std::io::Write;

use serde::{Deserialize, Serialize};

use super::{success_probability, total_probability, ProtocolKind, ProtocolOutcome};
use crate::error::{Error, Result};
use crate::qcore::{Basis, Party};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Header {
    pub schema: u32,
    pub protocol: ProtocolKind,
    pub branches: usize,
    pub total_probability: f64,
    pub success_probability: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasurementEntry {
    #[serde(with = "party_name")]
    pub party: Party,
    pub basis: Basis,
    /// Outcome bits as a string, e.g. `"01"`.
    pub outcome: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerRecord {
    pub ebits: u32,
    pub cbits_ab: u32,
    pub cbits_ba: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BranchRecord {
    pub protocol: ProtocolKind,
    pub branch_id: usize,
    pub measurement_record: Vec<MeasurementEntry>,
    pub probability: f64,
    pub fidelity: f64,
    pub succeeded: bool,
    pub ledger: LedgerRecord,
    /// Bob's output amplitudes as `[re, im]` pairs.
    pub bob_final: [[f64; 2]; 2],
}

mod party_name {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::qcore::Party;

    pub fn serialize<S: Serializer>(p: &Party, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&p.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Party, D::Error> {
        match String::deserialize(d)?.as_str() {
            "alice" => Ok(Party::Alice),
            "bob" => Ok(Party::Bob),
            "blackbox" => Ok(Party::BlackBox),
            other => Err(serde::de::Error::custom(format!("unknown party {other}"))),
        }
    }
}

pub fn header(protocol: ProtocolKind, outcomes: &[ProtocolOutcome]) -> Header {
    Header {
        schema: SCHEMA_VERSION,
        protocol,
        branches: outcomes.len(),
        total_probability: total_probability(outcomes),
        success_probability: success_probability(outcomes),
    }
}

pub fn to_records(outcomes: &[ProtocolOutcome]) -> Vec<BranchRecord> {
    outcomes
        .iter()
        .enumerate()
        .map(|(branch_id, o)| {
            let amps = o.bob_final.amplitudes();
            BranchRecord {
                protocol: o.protocol,
                branch_id,
                measurement_record: o
                    .measurement_record
                    .iter()
                    .map(|m| MeasurementEntry {
                        party: m.party,
                        basis: m.basis,
                        outcome: m.outcome.iter().map(|b| char::from(b'0' + b)).collect(),
                    })
                    .collect(),
                probability: o.probability,
                fidelity: o.target_fidelity,
                succeeded: o.succeeded,
                ledger: LedgerRecord {
                    ebits: o.ledger.ebits_consumed(),
                    cbits_ab: o.ledger.cbits_a_to_b(),
                    cbits_ba: o.ledger.cbits_b_to_a(),
                },
                bob_final: [[amps[0].re, amps[0].im], [amps[1].re, amps[1].im]],
            }
        })
        .collect()
}

pub fn write_structured<W: Write>(
    protocol: ProtocolKind,
    outcomes: &[ProtocolOutcome],
    mut w: W,
) -> Result<()> {
    let io = |e: std::io::Error| Error::Io(e.to_string());
    let json = |e: serde_json::Error| Error::Io(e.to_string());
    writeln!(
        w,
        "{}",
        serde_json::to_string(&header(protocol, outcomes)).map_err(json)?
    )
    .map_err(io)?;
    for rec in to_records(outcomes) {
        writeln!(w, "{}", serde_json::to_string(&rec).map_err(json)?).map_err(io)?;
    }
    Ok(())
}
