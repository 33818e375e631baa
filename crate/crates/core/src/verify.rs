//! Randomized invariant suites, one per module, run by the `verify` command.

use std::f64::consts::PI;
use std::thread;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bloch::{bloch_of_state, bloch_vector, mirror_state, verify_restoration};
use crate::cli::{parse_operator, parse_state, render_operator};
use crate::error::Result;
use crate::mat2::{Mat2, C64};
use crate::opsets::{
    anticommutator_norm, classify_operator, commutator_norm, find_common_axis,
    find_orthogonal_pair, q_operator, solve_correction, Axis, ClassTag, Unimodular,
};
use crate::protocols::{
    success_probability, total_probability, Promise, ProtocolConfig, ProtocolKind,
};
use crate::qcore::{Basis, DensityMatrix, Gate, QubitId, StateVector};
use crate::{random, tolerance, Error};

/// Outcome of one named check over a number of random trials.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
    /// First failure, if any.
    pub detail: Option<String>,
}

impl CheckResult {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

type Check = fn(&mut ChaCha8Rng) -> Result<bool>;

struct Suite {
    name: &'static str,
    checks: &'static [(&'static str, usize, Check)],
}

fn run_suite(suite: &Suite, seed: u64) -> Vec<CheckResult> {
    suite
        .checks
        .iter()
        .enumerate()
        .map(|(k, &(name, total, check))| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
            let mut passed = 0;
            let mut detail = None;
            for trial in 0..total {
                match check(&mut rng) {
                    Ok(true) => passed += 1,
                    Ok(false) => {
                        detail.get_or_insert_with(|| format!("trial {trial} failed"));
                    }
                    Err(e) => {
                        detail.get_or_insert_with(|| format!("trial {trial}: {e}"));
                    }
                }
            }
            CheckResult {
                suite: suite.name,
                name,
                passed,
                total,
                detail,
            }
        })
        .collect()
}

/// Runs every suite, one thread per suite. Results are in a fixed order.
pub fn run_all(seed: u64) -> Vec<CheckResult> {
    let suites = [QCORE, OPSETS, PROTOCOLS, BLOCH, CLI];
    thread::scope(|s| {
        let handles: Vec<_> = suites
            .iter()
            .map(|suite| s.spawn(move || run_suite(suite, seed)))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("suite thread panicked"))
            .collect()
    })
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

fn register(n: usize) -> Vec<QubitId> {
    (0..n).map(QubitId::bob).collect()
}

fn random_register_state(rng: &mut ChaCha8Rng, n: usize) -> Result<StateVector> {
    let mut state = random::state(rng);
    for k in 1..n {
        // entangle as we go so the register is not a product state
        state = state.tensor(&random::state(rng).relabel(vec![QubitId::bob(k)])?)?;
        state = state.apply_gate(&Gate::cnot(), &[QubitId::bob(k - 1), QubitId::bob(k)])?;
        state = state.apply_gate(&random::unimodular(rng).gate(), &[QubitId::bob(k)])?;
    }
    Ok(state)
}

fn perp(psi: &StateVector) -> Result<StateVector> {
    let [a, b] = psi.as_qubit().ok_or(Error::EmptyTargets)?;
    StateVector::qubit(-b.conj(), a.conj())
}

fn teleportable(rng: &mut ChaCha8Rng) -> (Unimodular, Promise) {
    if rng.random::<bool>() {
        (random::set_a(rng), Promise::Commuting)
    } else {
        (random::set_b(rng), Promise::Anticommuting)
    }
}

const QCORE: Suite = Suite {
    name: "qcore",
    checks: &[
        ("norm_preservation", 200, |rng| {
            let s = random_register_state(rng, 3)?;
            let q = QubitId::bob(rng.random_range(0..3));
            let s = s.apply_gate(&random::unimodular(rng).gate(), &[q])?;
            let s = s.apply_gate(&Gate::cnot(), &[QubitId::bob(2), QubitId::bob(0)])?;
            Ok(close(s.norm_sqr(), 1.0, tolerance::NORM))
        }),
        ("branch_completeness", 200, |rng| {
            let s = random_register_state(rng, 3)?;
            let mut ok = true;
            for (targets, basis) in [
                (vec![QubitId::bob(1)], Basis::Computational),
                (vec![QubitId::bob(0), QubitId::bob(2)], Basis::Bell),
            ] {
                let branches = s.measure(&targets, basis)?;
                let total: f64 = branches.iter().map(|b| b.probability).sum();
                ok &= close(total, 1.0, tolerance::NORM);
                ok &= branches
                    .iter()
                    .all(|b| close(b.post_state.norm_sqr(), 1.0, tolerance::NORM));
            }
            Ok(ok)
        }),
        ("entropy_bounds", 200, |rng| {
            let s = random_register_state(rng, 3)?;
            let one = s.entanglement_entropy(&[QubitId::bob(0)])?;
            let rest = s.entanglement_entropy(&[QubitId::bob(1), QubitId::bob(2)])?;
            Ok((-1e-12..=1.0 + 1e-12).contains(&one) && close(one, rest, 1e-9))
        }),
        ("purity_bounds", 200, |rng| {
            let s = random_register_state(rng, 3)?;
            let rho = s.reduced_density(&[QubitId::bob(0), QubitId::bob(2)])?;
            let p = rho.purity();
            Ok((0.25 - 1e-12..=1.0 + 1e-12).contains(&p)
                && close(rho.trace().re, 1.0, tolerance::NORM))
        }),
        ("measurement_idempotence", 200, |rng| {
            let s = random_register_state(rng, 2)?;
            let targets = register(2);
            let basis = if rng.random::<bool>() {
                Basis::Bell
            } else {
                Basis::Computational
            };
            let mut ok = true;
            for b in s.measure(&targets, basis)? {
                let again = b.post_state.measure(&targets, basis)?;
                ok &= again.len() == 1
                    && again[0].outcome == b.outcome
                    && close(again[0].probability, 1.0, tolerance::NORM);
            }
            Ok(ok)
        }),
    ],
};

const OPSETS: Suite = Suite {
    name: "opsets",
    checks: &[
        ("unimodularity_closure", 200, |rng| {
            let (u, v) = (random::unimodular(rng), random::unimodular(rng));
            let p = u * v.adjoint();
            Ok(p.unimodularity_residual().abs() <= tolerance::NORM
                && p.matrix().distance(&(u.matrix() * v.matrix().adjoint())) <= 1e-12)
        }),
        ("trichotomy", 300, |rng| {
            let n = random::axis(rng);
            let u = match rng.random_range(0..3) {
                0 => random::commuting_about(&n, rng),
                1 => random::anticommuting_about(&n, rng),
                _ => random::unimodular(rng),
            };
            let (c, a) = (
                commutator_norm(&u, &n) <= tolerance::EQUALITY,
                anticommutator_norm(&u, &n) <= tolerance::EQUALITY,
            );
            let expected = match (c, a) {
                (true, false) => ClassTag::CommutesWithAxis,
                (false, true) => ClassTag::AnticommutesWithAxis,
                (false, false) => ClassTag::General,
                (true, true) => return Ok(false),
            };
            Ok(classify_operator(&u, &n).tag() == expected)
        }),
        ("q_symmetry", 1000, |rng| {
            let alpha = random::angle(rng) - PI;
            let psi = random::state(rng);
            Ok(
                q_operator(alpha, &psi)?.distance(&q_operator(-alpha, &perp(&psi)?)?)
                    <= tolerance::EQUALITY,
            )
        }),
        ("correction_identity", 300, |rng| {
            let (u, _) = teleportable(rng);
            let sol = solve_correction(&u);
            Ok(sol.residual(&u) <= tolerance::EQUALITY && (sol.delta == 0.0 || sol.delta == PI))
        }),
        ("set_closure", 300, |rng| {
            let z = Mat2::sigma_z();
            let a = random::set_a(rng).matrix();
            let b = random::set_b(rng).matrix();
            Ok((z * a * z).distance(&a) <= tolerance::EQUALITY
                && (z * b * z).distance(&-b) <= tolerance::EQUALITY)
        }),
        ("orthogonal_pair_overlap", 1000, |rng| {
            let (u1, u2) = (random::unimodular(rng), random::unimodular(rng));
            let pair = match find_orthogonal_pair(&u1, &u2) {
                Err(Error::DegeneratePair(_)) => return Ok(true),
                other => other?,
            };
            // |sin λ| from the trace alone
            let cos_l = (u2.adjoint() * u1).matrix().trace().re / 2.0;
            let sin_l = (1.0 - cos_l * cos_l).max(0.0).sqrt();
            let orth = pair.psi_perp.inner(&pair.psi)?.norm();
            Ok(close(pair.overlap().norm(), sin_l, tolerance::EQUALITY)
                && orth <= tolerance::EQUALITY)
        }),
        ("axis_recovery", 100, |rng| {
            let n = random::axis(rng);
            let set: Vec<_> = (0..10)
                .map(|k| {
                    if k % 2 == 0 {
                        random::commuting_about(&n, rng)
                    } else {
                        random::anticommuting_about(&n, rng)
                    }
                })
                .collect();
            Ok(find_common_axis(&set)?.is_some_and(|m| m.line_angle(&n) <= tolerance::AXIS))
        }),
    ],
};

const PROTOCOLS: Suite = Suite {
    name: "protocols",
    checks: &[
        ("ledger_exactness", 100, |rng| {
            let (u, promise) = teleportable(rng);
            let psi = random::state(rng);
            let base = ProtocolConfig::new(u, psi);
            let mut ok = true;
            for (kind, cfg) in [
                (ProtocolKind::Bqst, base.clone()),
                (ProtocolKind::Universal221, base.clone()),
                (ProtocolKind::Restricted221, base.clone()),
                (ProtocolKind::One11, base.clone().with_promise(promise)),
            ] {
                ok &= kind.run(&cfg)?.iter().all(|o| o.ledger == kind.ledger());
            }
            Ok(ok)
        }),
        ("universal_half", 100, |rng| {
            let cfg = ProtocolConfig::new(random::unimodular(rng), random::state(rng));
            Ok(close(
                success_probability(&ProtocolKind::Universal221.run(&cfg)?),
                0.5,
                tolerance::EQUALITY,
            ))
        }),
        ("restricted_fidelity", 1000, |rng| {
            let (u, _) = teleportable(rng);
            let cfg = ProtocolConfig::new(u, random::state(rng));
            Ok(ProtocolKind::Restricted221
                .run(&cfg)?
                .iter()
                .all(|o| o.target_fidelity >= 1.0 - tolerance::EQUALITY))
        }),
        ("one11_fidelity", 1000, |rng| {
            let (u, promise) = teleportable(rng);
            let cfg = ProtocolConfig::new(u, random::state(rng)).with_promise(promise);
            Ok(ProtocolKind::One11
                .run(&cfg)?
                .iter()
                .all(|o| o.target_fidelity >= 1.0 - tolerance::EQUALITY))
        }),
        ("bqst_fidelity", 100, |rng| {
            let cfg = ProtocolConfig::new(random::unimodular(rng), random::state(rng));
            Ok(ProtocolKind::Bqst
                .run(&cfg)?
                .iter()
                .all(|o| o.target_fidelity >= 1.0 - tolerance::EQUALITY))
        }),
        ("probability_conservation", 100, |rng| {
            let cfg = ProtocolConfig::new(random::unimodular(rng), random::state(rng));
            let mut ok = true;
            for kind in [ProtocolKind::Bqst, ProtocolKind::Universal221] {
                ok &= close(total_probability(&kind.run(&cfg)?), 1.0, tolerance::NORM);
            }
            Ok(ok)
        }),
        ("failure_branch_identity", 100, |rng| {
            let u = random::unimodular(rng);
            let psi = random::state(rng);
            let v = psi.as_qubit().ok_or(Error::EmptyTargets)?;
            let w = (u.matrix() * Mat2::sigma_z()).apply(v);
            let wrong = StateVector::qubit(w[0], w[1])?;
            let outcomes = ProtocolKind::Universal221.run(&ProtocolConfig::new(u, psi))?;
            let mut ok = true;
            for o in outcomes.iter().filter(|o| {
                o.measurement_record
                    .last()
                    .is_some_and(|m| m.outcome == [1])
            }) {
                ok &= o.bob_final.fidelity_up_to_phase(&wrong)? >= 1.0 - tolerance::EQUALITY;
            }
            Ok(ok)
        }),
        ("classification_consistency", 200, |rng| {
            let u = if rng.random::<bool>() {
                teleportable(rng).0
            } else {
                random::general_about(&Axis::Z, rng)
            };
            let cfg = ProtocolConfig::new(u, random::state(rng));
            let general = classify_operator(&u, &Axis::Z).tag() == ClassTag::General;
            Ok(match ProtocolKind::Restricted221.run(&cfg) {
                Ok(_) => !general,
                Err(Error::Precondition(_)) => general,
                Err(e) => return Err(e),
            })
        }),
    ],
};

const BLOCH: Suite = Suite {
    name: "bloch",
    checks: &[
        ("purity", 200, |rng| {
            let (p, q) = (random::state(rng), random::state(rng));
            let pure = bloch_of_state(&p)?.norm();
            let w: f64 = rng.random();
            let (pv, qv) = (
                p.as_qubit().ok_or(Error::EmptyTargets)?,
                q.as_qubit().ok_or(Error::EmptyTargets)?,
            );
            let m = Mat2::outer(pv).scale(C64::new(w, 0.0))
                + Mat2::outer(qv).scale(C64::new(1.0 - w, 0.0));
            let mixed = bloch_vector(&DensityMatrix::from_mat2(&m))?.norm();
            Ok(close(pure, 1.0, tolerance::EQUALITY) && mixed <= 1.0 + tolerance::EQUALITY)
        }),
        ("covariance", 200, |rng| {
            let (u, psi) = (random::unimodular(rng), random::state(rng));
            let s = bloch_of_state(&psi)?.components();
            let v = psi.as_qubit().ok_or(Error::EmptyTargets)?;
            let w = u.matrix().apply(v);
            let t = bloch_of_state(&StateVector::qubit(w[0], w[1])?)?.components();
            // R_ij = ½ tr(σ_i U σ_j U†)
            let m = u.matrix();
            let paulis = [Mat2::sigma_x(), Mat2::sigma_y(), Mat2::sigma_z()];
            let mut ok = true;
            for i in 0..3 {
                let mut acc = 0.0;
                for (j, sj) in paulis.iter().enumerate() {
                    acc += (m * *sj * m.adjoint()).pauli_coefficients()[i].re * s[j];
                }
                ok &= close(acc, t[i], tolerance::EQUALITY);
            }
            Ok(ok)
        }),
        ("mirror", 200, |rng| {
            let psi = random::state(rng);
            let [x, y, z] = bloch_of_state(&psi)?.components();
            let [mx, my, mz] = bloch_of_state(&mirror_state(&psi)?)?.components();
            Ok(close(mx, -x, 1e-12) && close(my, -y, 1e-12) && close(mz, z, 1e-12))
        }),
        ("restoration_classification", 1000, |rng| {
            let u = match rng.random_range(0..3) {
                0 => random::set_a(rng),
                1 => random::set_b(rng),
                _ => random::unimodular(rng),
            };
            if classify_operator(&u, &Axis::Z).is_teleportable() {
                verify_restoration(&u, &random::state(rng))
            } else {
                let mut failed = false;
                for _ in 0..10 {
                    failed |= !verify_restoration(&u, &random::state(rng))?;
                }
                Ok(failed)
            }
        }),
    ],
};

const CLI: Suite = Suite {
    name: "cli",
    checks: &[
        ("operator_round_trip", 100, |rng| {
            let u = random::unimodular(rng);
            let back = parse_operator(&render_operator(&u))?;
            Ok((back.a() - u.a()).norm() <= 1e-12 && (back.b() - u.b()).norm() <= 1e-12)
        }),
        ("state_round_trip", 100, |rng| {
            let psi = random::state(rng);
            let [a, b] = psi.as_qubit().ok_or(Error::EmptyTargets)?;
            let back = parse_state(&format!("amp:{},{},{},{}", a.re, a.im, b.re, b.im))?;
            Ok(back.fidelity_up_to_phase(&psi)? >= 1.0 - 1e-12)
        }),
    ],
};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes() {
        let results = run_all(7);
        let failures: Vec<_> = results.iter().filter(|r| !r.ok()).collect();
        assert!(failures.is_empty(), "{failures:#?}");
        assert!(results.iter().any(|r| r.suite == "cli"));
    }

    #[test]
    fn results_are_deterministic() {
        assert_eq!(run_suite(&CLI, 1), run_suite(&CLI, 1));
    }
}
