//! Executable versions of the resource lower-bound arguments.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Mode;
use crate::error::{Error, Result};
use crate::qcore::{
    sample_branch, Basis, BellState, Gate, MeasurementBranch, QubitId, StateVector,
};

/// Alice's two control qubits.
pub const CP_CONTROLS: [QubitId; 2] = [QubitId::alice(0), QubitId::alice(1)];
/// Bob's pair; the controlled-Pauli acts on the first.
pub const CP_TARGETS: [QubitId; 2] = [QubitId::bob(2), QubitId::bob(3)];

/// Controlled-Pauli: controls `00, 01, 10, 11` select `𝟙, σx, σy, σz`.
pub fn cp_gates() -> [Gate; 4] {
    [Gate::identity(), Gate::x(), Gate::y(), Gate::z()]
}

fn apply_cp(state: &StateVector) -> Result<StateVector> {
    state.apply_multiplexed(&CP_CONTROLS, CP_TARGETS[0], &cp_gates())
}

/// Alice's uniform control state and Bob's Φ⁺ pair before the gate.
pub fn cp_input() -> Result<StateVector> {
    let controls = StateVector::plus()
        .relabel(vec![CP_CONTROLS[0]])?
        .tensor(&StateVector::plus().relabel(vec![CP_CONTROLS[1]])?)?;
    controls.tensor(&StateVector::phi_plus(CP_TARGETS[0], CP_TARGETS[1])?)
}

/// The controlled-Pauli output and its entanglement across Alice | Bob, in bits.
pub fn demo_cp_entanglement() -> Result<(StateVector, f64)> {
    let out = apply_cp(&cp_input()?)?;
    let entropy = out.entanglement_entropy(&CP_CONTROLS)?;
    Ok((out, entropy))
}

/// Message each Bell state decodes to: the Pauli that produced it from Φ⁺.
fn decode(bell: BellState) -> u8 {
    match bell {
        BellState::PhiPlus => 0b00,
        BellState::PsiPlus => 0b01,
        BellState::PsiMinus => 0b10,
        BellState::PhiMinus => 0b11,
    }
}

fn single_branch(mut branches: Vec<MeasurementBranch>) -> Result<MeasurementBranch> {
    if branches.len() != 1 {
        return Err(Error::Invariant(format!(
            "expected a deterministic outcome, got {} branches",
            branches.len()
        )));
    }
    Ok(branches.remove(0))
}

/// Alice writes a 2-bit message into her controls; one controlled-Pauli on
/// Bob's Φ⁺ lets Bob read it with a Bell measurement.
pub fn demo_cp_capacity(message: u8) -> Result<u8> {
    if message > 0b11 {
        return Err(Error::Precondition(format!(
            "message must be 2 bits, got {message}"
        )));
    }
    let controls = StateVector::basis(&[message >> 1 & 1, message & 1], CP_CONTROLS.to_vec())?;
    let state = controls.tensor(&StateVector::phi_plus(CP_TARGETS[0], CP_TARGETS[1])?)?;
    let branch = single_branch(apply_cp(&state)?.measure(&CP_TARGETS, Basis::Bell)?)?;
    let bell = BellState::from_bits(&branch.outcome)
        .ok_or_else(|| Error::Invariant("bad Bell outcome".into()))?;
    Ok(decode(bell))
}

/// Bob signals one bit backwards through a CNOT that Alice controls:
/// `|+⟩|−⟩ ↦ |−⟩|−⟩` while `|+⟩|+⟩` is unchanged.
pub fn demo_cnot_reverse(bob_bit: u8, mode: Mode) -> Result<u8> {
    let (alice, bob) = (QubitId::alice(0), QubitId::bob(1));
    let bob_state = match bob_bit {
        0 => StateVector::plus(),
        1 => StateVector::minus(),
        other => {
            return Err(Error::Precondition(format!(
                "bob_bit must be 0 or 1, got {other}"
            )))
        }
    };
    let state = StateVector::plus()
        .relabel(vec![alice])?
        .tensor(&bob_state.relabel(vec![bob])?)?;
    let state = state.apply_gate(&Gate::cnot(), &[alice, bob])?;
    // ± basis readout on Alice's side
    let state = state.apply_gate(&Gate::h(), &[alice])?;
    let branches = state.measure(&[alice], Basis::Computational)?;
    let branch = match mode {
        Mode::Exhaustive => single_branch(branches)?,
        Mode::Sampled { seed } => {
            sample_branch(&branches, &mut ChaCha8Rng::seed_from_u64(seed))?.clone()
        }
    };
    Ok(branch.outcome[0])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn input_is_unentangled_across_the_cut() {
        let s = cp_input().unwrap();
        assert!(s.entanglement_entropy(&CP_CONTROLS).unwrap().abs() < 1e-12);
    }

    #[test]
    fn capacity_rejects_wide_messages() {
        assert!(matches!(demo_cp_capacity(4), Err(Error::Precondition(_))));
        assert!(matches!(
            demo_cnot_reverse(2, Mode::Exhaustive),
            Err(Error::Precondition(_))
        ));
    }
}
