use crate::error::{Error, Result};
use crate::mat2::{Mat2, C64, ONE, ZERO};
use crate::tolerance;

/// A unitary on one (dim 2) or two (dim 4) qubits, row-major.
///
/// For two-qubit gates the first target is the more significant bit of the
/// gate's local index.
#[derive(Debug, Clone, PartialEq)]
pub struct Gate {
    dim: usize,
    entries: Vec<C64>,
}

impl Gate {
    pub fn new(dim: usize, entries: Vec<C64>) -> Result<Self> {
        if dim != 2 && dim != 4 {
            return Err(Error::DimensionMismatch {
                expected: 4,
                got: dim,
            });
        }
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        let gate = Gate { dim, entries };
        let residual = gate.unitarity_residual();
        if residual > tolerance::NORM {
            return Err(Error::NotUnitary(residual));
        }
        Ok(gate)
    }

    pub fn from_mat2(m: &Mat2) -> Result<Self> {
        Gate::new(2, m.0.iter().flatten().copied().collect())
    }

    fn known(m: Mat2) -> Self {
        Gate {
            dim: 2,
            entries: m.0.iter().flatten().copied().collect(),
        }
    }

    pub fn identity() -> Self {
        Gate::known(Mat2::identity())
    }

    pub fn x() -> Self {
        Gate::known(Mat2::sigma_x())
    }

    pub fn y() -> Self {
        Gate::known(Mat2::sigma_y())
    }

    pub fn z() -> Self {
        Gate::known(Mat2::sigma_z())
    }

    pub fn h() -> Self {
        Gate::known(Mat2::hadamard())
    }

    /// Controlled-NOT with the first target as control.
    pub fn cnot() -> Self {
        let mut e = vec![ZERO; 16];
        e[0] = ONE;
        e[5] = ONE;
        e[11] = ONE;
        e[14] = ONE;
        Gate { dim: 4, entries: e }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_qubits(&self) -> usize {
        if self.dim == 2 {
            1
        } else {
            2
        }
    }

    pub fn entry(&self, r: usize, c: usize) -> C64 {
        self.entries[r * self.dim + c]
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
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

    /// `‖G† G − 𝟙‖_F`
    pub fn unitarity_residual(&self) -> f64 {
        let d = self.dim;
        let mut acc = 0.0;
        for r in 0..d {
            for c in 0..d {
                let mut s = ZERO;
                for k in 0..d {
                    s += self.entry(k, r).conj() * self.entry(k, c);
                }
                if r == c {
                    s -= ONE;
                }
                acc += s.norm_sqr();
            }
        }
        acc.sqrt()
    }

    pub(crate) fn apply_local(&self, v: &[C64]) -> Vec<C64> {
        (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.entry(r, c) * v[c]).sum())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_unitary() {
        let m = Mat2::new(ONE, ONE, ZERO, ONE);
        assert!(matches!(Gate::from_mat2(&m), Err(Error::NotUnitary(_))));
    }

    #[test]
    fn rejects_bad_dimension() {
        assert!(Gate::new(3, vec![ONE; 9]).is_err());
        assert!(Gate::new(2, vec![ONE; 3]).is_err());
    }

    #[test]
    fn named_gates_are_unitary() {
        for g in [
            Gate::identity(),
            Gate::x(),
            Gate::y(),
            Gate::z(),
            Gate::h(),
            Gate::cnot(),
        ] {
            assert!(g.unitarity_residual() < 1e-15);
        }
    }
}
