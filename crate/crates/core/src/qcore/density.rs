use nalgebra::DMatrix;

use super::QubitId;
use crate::mat2::{Mat2, C64};

/// Reduced density operator over the qubits it was kept on (in that order).
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dim: usize,
    entries: Vec<C64>,
    register: Vec<QubitId>,
}

impl DensityMatrix {
    pub(crate) fn from_parts(dim: usize, entries: Vec<C64>, register: Vec<QubitId>) -> Self {
        DensityMatrix {
            dim,
            entries,
            register,
        }
    }

    /// `|ψ⟩⟨ψ|` for a one-qubit amplitude pair.
    pub fn pure_qubit(v: [C64; 2]) -> Self {
        DensityMatrix::from_mat2(&Mat2::outer(v))
    }

    pub fn from_mat2(m: &Mat2) -> Self {
        DensityMatrix {
            dim: 2,
            entries: m.0.iter().flatten().copied().collect(),
            register: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn register(&self) -> &[QubitId] {
        &self.register
    }

    pub fn get(&self, r: usize, c: usize) -> C64 {
        self.entries[r * self.dim + c]
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// `tr ρ²`
    pub fn purity(&self) -> f64 {
        let mut acc = 0.0;
        for r in 0..self.dim {
            for c in 0..self.dim {
                acc += (self.get(r, c) * self.get(c, r)).re;
            }
        }
        acc
    }

    /// Largest `|ρ_rc − conj(ρ_cr)|`.
    pub fn hermiticity_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for r in 0..self.dim {
            for c in 0..self.dim {
                worst = worst.max((self.get(r, c) - self.get(c, r).conj()).norm());
            }
        }
        worst
    }

    pub fn as_mat2(&self) -> Option<Mat2> {
        (self.dim == 2).then(|| {
            Mat2::new(
                self.entries[0],
                self.entries[1],
                self.entries[2],
                self.entries[3],
            )
        })
    }

    /// Ascending eigenvalues (Hermitian eigendecomposition).
    pub fn eigenvalues(&self) -> Vec<f64> {
        let m = DMatrix::from_fn(self.dim, self.dim, |r, c| self.get(r, c));
        let mut ev: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
        ev.sort_by(|a, b| a.total_cmp(b));
        ev
    }

    /// Von Neumann entropy in bits.
    pub fn von_neumann_entropy(&self) -> f64 {
        let s: f64 = self
            .eigenvalues()
            .into_iter()
            .filter(|l| *l > 1e-15)
            .map(|l| -l * l.log2())
            .sum();
        s.max(0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat2::{ONE, ZERO};

    #[test]
    fn maximally_mixed_qubit_has_one_bit() {
        let half = C64::new(0.5, 0.0);
        let rho = DensityMatrix::from_mat2(&Mat2::new(half, ZERO, ZERO, half));
        assert!((rho.von_neumann_entropy() - 1.0).abs() < 1e-12);
        assert!((rho.purity() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn pure_state_has_zero_entropy() {
        let rho = DensityMatrix::pure_qubit([C64::new(0.6, 0.0), C64::new(0.0, 0.8)]);
        assert!(rho.von_neumann_entropy().abs() < 1e-12);
        assert!((rho.trace() - ONE).norm() < 1e-12);
        assert!(rho.hermiticity_residual() < 1e-15);
    }
}
