use super::engine::{each, Path, Runner};
use super::{
    Direction, Promise, ProtocolConfig, ProtocolKind, ProtocolOutcome, ALICE_PAIR_1, BOB_INPUT,
    BOB_PAIR_1,
};
use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::qcore::{Basis, Gate, Party, StateVector};

/// Bob's correction for Alice's outcome bit under each promise.
fn correction(promise: Promise, bit: u8) -> Mat2 {
    match (promise, bit) {
        (Promise::Commuting, 0) => Mat2::identity(),
        (Promise::Commuting, _) => Mat2::sigma_z(),
        (Promise::Anticommuting, 0) => Mat2::sigma_x(),
        (Promise::Anticommuting, _) => Mat2::sigma_z() * Mat2::sigma_x(),
    }
}

/// One shared pair and one c-bit each way, for an operator promised to
/// commute (or anticommute) with σz.
pub fn run_111(cfg: &ProtocolConfig) -> Result<Vec<ProtocolOutcome>> {
    let promise = cfg.promise.ok_or_else(|| {
        Error::Precondition("one11 requires a promise (commuting|anticommuting)".into())
    })?;
    cfg.validate()?;

    let initial = StateVector::phi_plus(ALICE_PAIR_1, BOB_PAIR_1)?
        .tensor(&cfg.psi.relabel(vec![BOB_INPUT])?)?;
    let mut runner = Runner::new(cfg.mode);
    let paths = vec![Path::new(initial, &[[ALICE_PAIR_1, BOB_PAIR_1]])];

    let paths = each(paths, |p| p.apply(&Gate::cnot(), &[BOB_PAIR_1, BOB_INPUT]))?;
    let paths = runner.measure(paths, Party::Bob, &[BOB_INPUT], Basis::Computational)?;
    let paths = each(paths, |p| {
        p.send(Direction::BobToAlice);
        if p.last_bit() == 1 {
            p.apply(&Gate::x(), &[ALICE_PAIR_1])?;
            p.apply(&Gate::x(), &[BOB_PAIR_1])?;
        }
        p.apply(&cfg.u.gate(), &[ALICE_PAIR_1])?;
        p.apply(&Gate::h(), &[ALICE_PAIR_1])
    })?;

    let paths = runner.measure(paths, Party::Alice, &[ALICE_PAIR_1], Basis::Computational)?;
    let paths = each(paths, |p| {
        p.send(Direction::AliceToBob);
        let fix = correction(promise, p.last_bit());
        p.apply_mat(&fix, BOB_PAIR_1)
    })?;

    let target = cfg.target()?;
    paths
        .into_iter()
        .map(|p| p.finish(ProtocolKind::One11, BOB_PAIR_1, &target))
        .collect()
}
