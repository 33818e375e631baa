use std::f64::consts::PI;

use super::{run_111, Promise, ProtocolConfig};
use crate::error::Result;
use crate::opsets::Unimodular;
use crate::qcore::StateVector;

/// `ϑ_k = kπ/steps` for `k = 0..=steps`.
pub fn ramsey_grid(steps: usize) -> Vec<f64> {
    (0..=steps)
        .map(|k| k as f64 * PI / steps.max(1) as f64)
        .collect()
}

/// Probability of finding Bob's output in `|+⟩` after the 1-1-1 protocol
/// applies `rz(ϑ/2) = diag(e^{iϑ/2}, e^{−iϑ/2})` to `|+⟩`.
pub fn ramsey_curve(thetas: &[f64]) -> Result<Vec<(f64, f64)>> {
    thetas
        .iter()
        .map(|&theta| {
            let cfg = ProtocolConfig::new(Unimodular::rz(theta / 2.0), StateVector::plus())
                .with_promise(Promise::Commuting);
            let mut p_plus = 0.0;
            for o in run_111(&cfg)? {
                let plus = StateVector::plus().relabel(o.bob_final.register().to_vec())?;
                p_plus += o.probability * plus.fidelity_up_to_phase(&o.bob_final)?;
            }
            Ok((theta, p_plus))
        })
        .collect()
}
