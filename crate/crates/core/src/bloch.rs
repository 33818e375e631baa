//! Bloch vectors and the σz-conjugation identity behind the final
//! correction step.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mat2::{Mat2, C64};
use crate::opsets::Unimodular;
use crate::qcore::{DensityMatrix, Gate, StateVector};
use crate::tolerance;

/// `(S_x, S_y, S_z)` with `S_i = tr(ρ σ_i)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlochVector {
    pub sx: f64,
    pub sy: f64,
    pub sz: f64,
}

impl BlochVector {
    pub fn norm(&self) -> f64 {
        (self.sx * self.sx + self.sy * self.sy + self.sz * self.sz).sqrt()
    }

    pub fn components(&self) -> [f64; 3] {
        [self.sx, self.sy, self.sz]
    }

    /// `(𝟙 + S·σ)/2`
    pub fn to_density(&self) -> Mat2 {
        (Mat2::identity() + Mat2::pauli_dot(self.components())).scale(C64::new(0.5, 0.0))
    }
}

pub fn bloch_vector(rho: &DensityMatrix) -> Result<BlochVector> {
    let m = rho.as_mat2().ok_or_else(|| {
        Error::InvalidDensity(format!("expected a 2x2 matrix, got {0}x{0}", rho.dim()))
    })?;
    let herm = rho.hermiticity_residual();
    if herm > tolerance::EQUALITY {
        return Err(Error::InvalidDensity(format!(
            "not Hermitian (residual {herm:e})"
        )));
    }
    let tr = m.trace();
    if (tr - C64::new(1.0, 0.0)).norm() > tolerance::EQUALITY {
        return Err(Error::InvalidDensity(format!("trace {tr} != 1")));
    }
    // 2x2 Hermitian unit-trace: PSD iff both diagonal entries and the determinant are nonnegative
    let det = m.det().re;
    if det < -tolerance::EQUALITY
        || m.get(0, 0).re < -tolerance::EQUALITY
        || m.get(1, 1).re < -tolerance::EQUALITY
    {
        return Err(Error::InvalidDensity(format!(
            "not positive semidefinite (det {det:e})"
        )));
    }
    Ok(BlochVector {
        sx: (m * Mat2::sigma_x()).trace().re,
        sy: (m * Mat2::sigma_y()).trace().re,
        sz: (m * Mat2::sigma_z()).trace().re,
    })
}

/// Bloch vector of a one-qubit pure state.
pub fn bloch_of_state(psi: &StateVector) -> Result<BlochVector> {
    let v = psi.as_qubit().ok_or(Error::DimensionMismatch {
        expected: 2,
        got: psi.dim(),
    })?;
    bloch_vector(&DensityMatrix::pure_qubit(v))
}

/// `σz|ψ⟩`: the equatorial part of the Bloch vector is reversed, `S_z` kept.
pub fn mirror_state(psi: &StateVector) -> Result<StateVector> {
    let q = *psi.register().first().ok_or(Error::EmptyTargets)?;
    if psi.num_qubits() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: psi.dim(),
        });
    }
    psi.apply_gate(&Gate::z(), &[q])
}

/// Whether `σz U ρ̄ U† σz = U ρ U†` for `ρ = |ψ⟩⟨ψ|`, `ρ̄ = σz ρ σz`, entrywise.
pub fn verify_restoration(u: &Unimodular, psi: &StateVector) -> Result<bool> {
    let v = psi.as_qubit().ok_or(Error::DimensionMismatch {
        expected: 2,
        got: psi.dim(),
    })?;
    let (m, z) = (u.matrix(), Mat2::sigma_z());
    let rho = Mat2::outer(v);
    let rho_bar = z * rho * z;
    let restored = z * m * rho_bar * m.adjoint() * z;
    let target = m * rho * m.adjoint();
    Ok((restored - target).max_abs() <= tolerance::EQUALITY)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat2::ZERO;
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn basis_and_mixed_states() {
        let b = bloch_of_state(&StateVector::zero()).unwrap();
        assert_eq!(b.components(), [0.0, 0.0, 1.0]);
        let half = C64::new(0.5, 0.0);
        let mixed = DensityMatrix::from_mat2(&Mat2::new(half, ZERO, ZERO, half));
        assert_eq!(bloch_vector(&mixed).unwrap().components(), [0.0, 0.0, 0.0]);
    }

    #[test]
    fn sz_is_population_difference() {
        let (a, b) = (C64::new(0.6, 0.0), C64::new(0.0, 0.8));
        let v = bloch_of_state(&StateVector::qubit(a, b).unwrap()).unwrap();
        assert!((v.sz - (0.36 - 0.64)).abs() < 1e-14);
        assert!((v.norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_invalid_density() {
        let bad = DensityMatrix::from_mat2(&Mat2::new(
            C64::new(1.5, 0.0),
            ZERO,
            ZERO,
            C64::new(-0.5, 0.0),
        ));
        assert!(matches!(bloch_vector(&bad), Err(Error::InvalidDensity(_))));
        let non_herm = DensityMatrix::from_mat2(&Mat2::new(
            C64::new(0.5, 0.0),
            C64::new(0.1, 0.0),
            ZERO,
            C64::new(0.5, 0.0),
        ));
        assert!(matches!(
            bloch_vector(&non_herm),
            Err(Error::InvalidDensity(_))
        ));
        let trace2 = DensityMatrix::from_mat2(&Mat2::identity());
        assert!(matches!(
            bloch_vector(&trace2),
            Err(Error::InvalidDensity(_))
        ));
    }

    #[test]
    fn mirror_examples() {
        let m = mirror_state(&StateVector::plus()).unwrap();
        assert!(m.fidelity_up_to_phase(&StateVector::minus()).unwrap() > 1.0 - 1e-14);
        assert_eq!(bloch_of_state(&m).unwrap().sx.round(), -1.0);
        let z = mirror_state(&StateVector::zero()).unwrap();
        assert!(z.fidelity_up_to_phase(&StateVector::zero()).unwrap() > 1.0 - 1e-14);
    }

    #[test]
    fn restoration_for_the_teleportable_sets() {
        let psi = StateVector::qubit(C64::new(0.3, -0.2), C64::new(0.5, 0.7)).unwrap();
        assert!(verify_restoration(&Unimodular::rz(1.2), &psi).unwrap());
        assert!(verify_restoration(&Unimodular::anticommuting(-0.4), &psi).unwrap());
    }

    #[test]
    fn restoration_fails_for_hadamard_like() {
        let h = C64::new(FRAC_1_SQRT_2, 0.0);
        let u = Unimodular::new(h, h).unwrap();
        assert!(!verify_restoration(&u, &StateVector::zero()).unwrap());
        // a y-rotation leaves its own eigenstates alone
        let psi = StateVector::qubit(C64::new(1.0, 0.0), C64::new(0.0, 1.0)).unwrap();
        assert!(verify_restoration(&u, &psi).unwrap());
    }
}
