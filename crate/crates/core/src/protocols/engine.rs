//! Branch bookkeeping shared by all protocols.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Direction, MeasurementRecord, Mode, ProtocolKind, ProtocolOutcome, ResourceLedger};
use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::qcore::{sample_branch, Basis, Gate, Party, QubitId, StateVector};
use crate::tolerance;

#[derive(Debug, Clone)]
struct SharedPair {
    qubits: [QubitId; 2],
    used: bool,
}

/// One branch of a protocol run in progress.
#[derive(Debug, Clone)]
pub(crate) struct Path {
    pub state: StateVector,
    pub record: Vec<MeasurementRecord>,
    pub probability: f64,
    pub ledger: ResourceLedger,
    pairs: Vec<SharedPair>,
}

impl Path {
    pub fn new(state: StateVector, pairs: &[[QubitId; 2]]) -> Self {
        Path {
            state,
            record: Vec::new(),
            probability: 1.0,
            ledger: ResourceLedger::default(),
            pairs: pairs
                .iter()
                .map(|q| SharedPair {
                    qubits: *q,
                    used: false,
                })
                .collect(),
        }
    }

    fn touch(&mut self, qubits: &[QubitId]) {
        for pair in self.pairs.iter_mut().filter(|p| !p.used) {
            if pair.qubits.iter().any(|q| qubits.contains(q)) {
                pair.used = true;
                self.ledger.consume_ebit();
            }
        }
    }

    pub fn apply(&mut self, gate: &Gate, targets: &[QubitId]) -> Result<()> {
        self.touch(targets);
        self.state = self.state.apply_gate(gate, targets)?;
        Ok(())
    }

    pub fn apply_mat(&mut self, m: &Mat2, target: QubitId) -> Result<()> {
        self.apply(&Gate::from_mat2(m)?, &[target])
    }

    pub fn send(&mut self, direction: Direction) {
        let bits = self.last_outcome().len() as u32;
        self.ledger.send(direction, bits);
    }

    pub fn last_outcome(&self) -> &[u8] {
        self.record
            .last()
            .map(|r| r.outcome.as_slice())
            .unwrap_or(&[])
    }

    pub fn last_bit(&self) -> u8 {
        self.last_outcome().first().copied().unwrap_or(0)
    }

    /// Closes the branch: Bob's qubit must be unentangled; it is compared with `target`.
    pub fn finish(
        self,
        protocol: ProtocolKind,
        bob: QubitId,
        target: &StateVector,
    ) -> Result<ProtocolOutcome> {
        let bob_final = self.state.factor_out(bob)?;
        let target_fidelity = bob_final.fidelity_up_to_phase(&target.relabel(vec![bob])?)?;
        Ok(ProtocolOutcome {
            protocol,
            measurement_record: self.record,
            probability: self.probability,
            bob_final,
            target_fidelity,
            succeeded: target_fidelity >= 1.0 - tolerance::EQUALITY,
            ledger: self.ledger,
        })
    }
}

/// Drives measurements: exhaustive mode forks every path into all of its
/// branches, sampled mode follows one seeded draw.
pub(crate) struct Runner {
    rng: Option<ChaCha8Rng>,
}

impl Runner {
    pub fn new(mode: Mode) -> Self {
        let rng = match mode {
            Mode::Exhaustive => None,
            Mode::Sampled { seed } => Some(ChaCha8Rng::seed_from_u64(seed)),
        };
        Runner { rng }
    }

    pub fn measure(
        &mut self,
        paths: Vec<Path>,
        party: Party,
        targets: &[QubitId],
        basis: Basis,
    ) -> Result<Vec<Path>> {
        let mut out = Vec::with_capacity(paths.len() * 2);
        for mut path in paths {
            path.touch(targets);
            let branches = path.state.measure(targets, basis)?;
            let chosen = match self.rng.as_mut() {
                None => branches,
                Some(rng) => vec![sample_branch(&branches, rng)?.clone()],
            };
            for br in chosen {
                let mut next = path.clone();
                next.state = br.post_state;
                next.probability *= br.probability;
                next.record.push(MeasurementRecord {
                    party,
                    basis,
                    outcome: br.outcome,
                });
                out.push(next);
            }
        }
        Ok(out)
    }
}

/// Runs a fallible step on every path.
pub(crate) fn each<F>(mut paths: Vec<Path>, mut step: F) -> Result<Vec<Path>>
where
    F: FnMut(&mut Path) -> Result<()>,
{
    for p in &mut paths {
        step(p)?;
    }
    Ok(paths)
}

pub(crate) fn invariant(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Invariant(what()))
    }
}
