use super::engine::{each, Path, Runner};
use super::{
    Direction, ProtocolConfig, ProtocolKind, ProtocolOutcome, ALICE_PAIR_1, ALICE_PAIR_2,
    BOB_INPUT, BOB_PAIR_1, BOB_PAIR_2,
};
use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::opsets::{anticommutator_norm, classify_operator, commutator_norm, Axis};
use crate::qcore::{Basis, BellState, Gate, Party, StateVector};

fn bell_correction(path: &Path) -> Result<Mat2> {
    BellState::from_bits(path.last_outcome())
        .map(BellState::correction)
        .ok_or_else(|| Error::Invariant(format!("not a Bell outcome: {:?}", path.last_outcome())))
}

/// Bob teleports his qubit to Alice, Alice applies `U`, Alice teleports it back.
pub fn run_bqst(cfg: &ProtocolConfig) -> Result<Vec<ProtocolOutcome>> {
    cfg.validate()?;
    let initial = cfg
        .psi
        .relabel(vec![BOB_INPUT])?
        .tensor(&StateVector::phi_plus(ALICE_PAIR_1, BOB_PAIR_1)?)?
        .tensor(&StateVector::phi_plus(ALICE_PAIR_2, BOB_PAIR_2)?)?;
    let mut runner = Runner::new(cfg.mode);
    let paths = vec![Path::new(
        initial,
        &[[ALICE_PAIR_1, BOB_PAIR_1], [ALICE_PAIR_2, BOB_PAIR_2]],
    )];

    let paths = runner.measure(paths, Party::Bob, &[BOB_INPUT, BOB_PAIR_1], Basis::Bell)?;
    let paths = each(paths, |p| {
        p.send(Direction::BobToAlice);
        let fix = bell_correction(p)?;
        p.apply_mat(&fix, ALICE_PAIR_1)?;
        p.apply(&cfg.u.gate(), &[ALICE_PAIR_1])
    })?;

    let paths = runner.measure(
        paths,
        Party::Alice,
        &[ALICE_PAIR_1, ALICE_PAIR_2],
        Basis::Bell,
    )?;
    let paths = each(paths, |p| {
        p.send(Direction::AliceToBob);
        let fix = bell_correction(p)?;
        p.apply_mat(&fix, BOB_PAIR_2)
    })?;

    let target = cfg.target()?;
    paths
        .into_iter()
        .map(|p| p.finish(ProtocolKind::Bqst, BOB_PAIR_2, &target))
        .collect()
}

/// Two shared pairs, one c-bit from Bob, two from Alice; the last local
/// measurement leaves Bob with `U|ψ⟩` (outcome 0) or `U σz|ψ⟩` (outcome 1).
fn run_two_two_one(
    cfg: &ProtocolConfig,
    kind: ProtocolKind,
    correct: bool,
) -> Result<Vec<ProtocolOutcome>> {
    let initial = StateVector::phi_plus(ALICE_PAIR_1, BOB_PAIR_1)?
        .tensor(&StateVector::phi_plus(ALICE_PAIR_2, BOB_PAIR_2)?)?
        .tensor(&cfg.psi.relabel(vec![BOB_INPUT])?)?;
    let mut runner = Runner::new(cfg.mode);
    let paths = vec![Path::new(
        initial,
        &[[ALICE_PAIR_1, BOB_PAIR_1], [ALICE_PAIR_2, BOB_PAIR_2]],
    )];

    // Bob moves α, β onto the first pair: α|00⟩ + β|11⟩ on (alice#0, bob#2)
    let paths = each(paths, |p| p.apply(&Gate::cnot(), &[BOB_PAIR_1, BOB_INPUT]))?;
    let paths = runner.measure(paths, Party::Bob, &[BOB_INPUT], Basis::Computational)?;
    let paths = each(paths, |p| {
        p.send(Direction::BobToAlice);
        if p.last_bit() == 1 {
            p.apply(&Gate::x(), &[ALICE_PAIR_1])?;
            p.apply(&Gate::x(), &[BOB_PAIR_1])?;
        }
        p.apply(&cfg.u.gate(), &[ALICE_PAIR_1])
    })?;

    // Alice teleports her U-rotated qubit over the second pair
    let paths = runner.measure(
        paths,
        Party::Alice,
        &[ALICE_PAIR_1, ALICE_PAIR_2],
        Basis::Bell,
    )?;
    let paths = each(paths, |p| {
        p.send(Direction::AliceToBob);
        let fix = bell_correction(p)?;
        p.apply_mat(&fix, BOB_PAIR_2)?;
        p.apply(&Gate::h(), &[BOB_PAIR_1])
    })?;

    let paths = runner.measure(paths, Party::Bob, &[BOB_PAIR_1], Basis::Computational)?;
    let paths = each(paths, |p| {
        if correct && p.last_bit() == 1 {
            p.apply(&Gate::z(), &[BOB_PAIR_2])?;
        }
        Ok(())
    })?;

    let target = cfg.target()?;
    paths
        .into_iter()
        .map(|p| p.finish(kind, BOB_PAIR_2, &target))
        .collect()
}

/// Works for any `U` half of the time.
pub fn run_universal_221(cfg: &ProtocolConfig) -> Result<Vec<ProtocolOutcome>> {
    cfg.validate()?;
    if cfg.promise.is_some() {
        return Err(Error::Precondition("universal221 takes no promise".into()));
    }
    run_two_two_one(cfg, ProtocolKind::Universal221, false)
}

/// The 2-2-1 protocol with Bob applying σz on the failed outcome. Requires
/// `U` to commute or anticommute with σz; no promise needs to be communicated.
pub fn run_restricted_221(cfg: &ProtocolConfig) -> Result<Vec<ProtocolOutcome>> {
    cfg.validate()?;
    if !classify_operator(&cfg.u, &Axis::Z).is_teleportable() {
        return Err(Error::Precondition(format!(
            "U neither commutes nor anticommutes with σz: ‖[U,σz]‖ = {:.3e}, ‖{{U,σz}}‖ = {:.3e}",
            commutator_norm(&cfg.u, &Axis::Z),
            anticommutator_norm(&cfg.u, &Axis::Z)
        )));
    }
    run_two_two_one(cfg, ProtocolKind::Restricted221, true)
}
