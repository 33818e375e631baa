use std::f64::consts::PI;

use super::{Axis, Unimodular};
use crate::error::{Error, Result};
use crate::mat2::{Mat2, C64};
use crate::tolerance;

/// A correction `V` with `V U = e^{iδ} U σz` for the operator it was solved for.
///
/// `V` is a reflection `m·σ` (determinant −1), so it is kept as a plain matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrectionSolution {
    pub v: Mat2,
    /// 0 or π, in `[0, 2π)`.
    pub delta: f64,
}

impl CorrectionSolution {
    /// `‖V U − e^{iδ} U σz‖_F`
    pub fn residual(&self, u: &Unimodular) -> f64 {
        correction_residual(&self.v, self.delta, u)
    }
}

/// One `V` shared by a whole set, with a phase per element.
#[derive(Debug, Clone, PartialEq)]
pub struct CommonCorrection {
    pub v: Mat2,
    pub deltas: Vec<f64>,
}

impl CommonCorrection {
    pub fn max_residual(&self, set: &[Unimodular]) -> f64 {
        set.iter()
            .zip(&self.deltas)
            .map(|(u, d)| correction_residual(&self.v, *d, u))
            .fold(0.0, f64::max)
    }
}

pub(crate) fn correction_residual(v: &Mat2, delta: f64, u: &Unimodular) -> f64 {
    let m = u.matrix();
    (*v * m).distance(&(m * Mat2::sigma_z()).scale(C64::from_polar(1.0, delta)))
}

/// `U σz U†` written as `m·σ`; returns the sign-canonical `m·σ` and
/// whether the canonical form flipped the sign.
fn conjugated_z(u: &Unimodular) -> (Mat2, bool) {
    let w = u.matrix() * Mat2::sigma_z() * u.matrix().adjoint();
    let c = w.pauli_coefficients();
    let m = Axis::normalized([c[0].re, c[1].re, c[2].re]).expect("U σz U† is a unit Pauli vector");
    let canon = m.canonical();
    (canon.pauli(), canon != m)
}

/// `V = ±U σz U†` with the sign fixed by the axis sign convention; `δ` absorbs the sign.
pub fn solve_correction(u: &Unimodular) -> CorrectionSolution {
    let (v, flipped) = conjugated_z(u);
    CorrectionSolution {
        v,
        delta: if flipped { PI } else { 0.0 },
    }
}

/// A single `V` serving every element of `set`, if one exists: all
/// `W_i = U_i σz U_i†` must agree with `W_1` up to sign.
pub fn check_common_correction(set: &[Unimodular]) -> Result<Option<CommonCorrection>> {
    let first = set.first().ok_or(Error::EmptySet)?;
    let (v, _) = conjugated_z(first);
    let mut deltas = Vec::with_capacity(set.len());
    for u in set {
        let w = u.matrix() * Mat2::sigma_z() * u.matrix().adjoint();
        if w.distance(&v) <= tolerance::EQUALITY {
            deltas.push(0.0);
        } else if w.distance(&-v) <= tolerance::EQUALITY {
            deltas.push(PI);
        } else {
            return Ok(None);
        }
    }
    Ok(Some(CommonCorrection { v, deltas }))
}
