use std::f64::consts::{FRAC_1_SQRT_2, PI};

use super::Unimodular;
use crate::error::{Error, Result};
use crate::mat2::C64;
use crate::qcore::StateVector;
use crate::tolerance;

/// Orthogonal inputs `ψ ⟂ ψ⊥` whose images `φ = U₁ψ`, `φ′ = U₂ψ⊥` overlap.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalPair {
    pub psi: StateVector,
    pub psi_perp: StateVector,
    pub phi: StateVector,
    pub phi_prime: StateVector,
    /// `U₂†U₁` has eigenvalues `e^{±iλ}`, `λ ∈ (0, π)`.
    pub lambda: f64,
}

impl OrthogonalPair {
    /// `⟨φ′|φ⟩`, which equals `i sin λ`.
    pub fn overlap(&self) -> C64 {
        self.phi_prime
            .inner(&self.phi)
            .expect("single-qubit states")
    }
}

/// Unit eigenvector of `m·σ` for eigenvalue `sign` (±1).
fn pauli_eigenvector(m: [f64; 3], sign: f64) -> [C64; 2] {
    let [x, y, z] = m;
    // two candidate columns of the (rank-one) projector; take the better conditioned one
    let first = [C64::new(sign + z, 0.0), C64::new(x, y)];
    let second = [C64::new(x, -y), C64::new(sign - z, 0.0)];
    let norm = |v: &[C64; 2]| (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
    let v = if norm(&first) >= norm(&second) {
        first
    } else {
        second
    };
    let n = norm(&v);
    [v[0] / n, v[1] / n]
}

/// Diagonalizes `U₂†U₁` and builds the pair `ψ = (λ₊ + λ₋)/√2`,
/// `ψ⊥ = (λ₊ − λ₋)/√2`.
pub fn find_orthogonal_pair(u1: &Unimodular, u2: &Unimodular) -> Result<OrthogonalPair> {
    let product = u2.adjoint() * *u1;
    // product = cos λ 𝟙 − i sin λ m·σ with sin λ ≥ 0
    let r = product.rotation_vector();
    let sin_l = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
    if sin_l < tolerance::DEGENERACY {
        return Err(Error::DegeneratePair(sin_l));
    }
    let lambda = sin_l.atan2(product.cos_half_angle());
    let m = [r[0] / sin_l, r[1] / sin_l, r[2] / sin_l];
    // e^{+iλ} lives on the −1 eigenvector of m·σ
    let plus = pauli_eigenvector(m, -1.0);
    let minus = pauli_eigenvector(m, 1.0);
    let h = FRAC_1_SQRT_2;
    let psi_amps = [(plus[0] + minus[0]) * h, (plus[1] + minus[1]) * h];
    let perp_amps = [(plus[0] - minus[0]) * h, (plus[1] - minus[1]) * h];
    let psi = StateVector::qubit(psi_amps[0], psi_amps[1])?;
    let psi_perp = StateVector::qubit(perp_amps[0], perp_amps[1])?;
    let phi_amps = u1.matrix().apply(psi_amps);
    let phi_prime_amps = u2.matrix().apply(perp_amps);
    Ok(OrthogonalPair {
        psi,
        psi_perp,
        phi: StateVector::qubit(phi_amps[0], phi_amps[1])?,
        phi_prime: StateVector::qubit(phi_prime_amps[0], phi_prime_amps[1])?,
        lambda,
    })
}

/// β with `u = u0 e^{iβσz}`, `β ∈ (−π, π]`, if `u0†u` is diagonal.
pub fn diag_form_decompose(u: &Unimodular, u0: &Unimodular) -> Option<f64> {
    let d = u0.adjoint() * *u;
    if d.b().norm() > tolerance::EQUALITY {
        return None;
    }
    let beta = d.a().arg();
    Some(if beta <= -PI { PI } else { beta })
}

/// `e^{iβσz}`
pub fn z_phase(beta: f64) -> Unimodular {
    Unimodular::rz(beta)
}

#[cfg(test)]
fn eigen_check(m: &crate::mat2::Mat2, v: [C64; 2], eig: C64) -> f64 {
    let mv = m.apply(v);
    ((mv[0] - eig * v[0]).norm_sqr() + (mv[1] - eig * v[1]).norm_sqr()).sqrt()
}
