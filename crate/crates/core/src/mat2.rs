//! Dense 2x2 complex matrices and the Pauli operators.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Row-major 2x2 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2(pub [[C64; 2]; 2]);

impl Mat2 {
    pub const fn new(m00: C64, m01: C64, m10: C64, m11: C64) -> Self {
        Mat2([[m00, m01], [m10, m11]])
    }

    pub const fn identity() -> Self {
        Mat2::new(ONE, ZERO, ZERO, ONE)
    }

    pub const fn zero() -> Self {
        Mat2::new(ZERO, ZERO, ZERO, ZERO)
    }

    pub const fn sigma_x() -> Self {
        Mat2::new(ZERO, ONE, ONE, ZERO)
    }

    pub const fn sigma_y() -> Self {
        Mat2::new(ZERO, C64::new(0.0, -1.0), I, ZERO)
    }

    pub const fn sigma_z() -> Self {
        Mat2::new(ONE, ZERO, ZERO, C64::new(-1.0, 0.0))
    }

    pub fn hadamard() -> Self {
        let h = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Mat2::new(h, h, h, -h)
    }

    /// `n · σ` for a real 3-vector `n`.
    pub fn pauli_dot(n: [f64; 3]) -> Self {
        Mat2::sigma_x().scale(C64::from(n[0]))
            + Mat2::sigma_y().scale(C64::from(n[1]))
            + Mat2::sigma_z().scale(C64::from(n[2]))
    }

    /// `|v⟩⟨v|`
    pub fn outer(v: [C64; 2]) -> Self {
        let mut m = Mat2::zero();
        for r in 0..2 {
            for c in 0..2 {
                m.0[r][c] = v[r] * v[c].conj();
            }
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> C64 {
        self.0[r][c]
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.0;
        Mat2::new(
            m[0][0].conj(),
            m[1][0].conj(),
            m[0][1].conj(),
            m[1][1].conj(),
        )
    }

    pub fn scale(&self, k: C64) -> Self {
        let m = &self.0;
        Mat2::new(k * m[0][0], k * m[0][1], k * m[1][0], k * m[1][1])
    }

    pub fn trace(&self) -> C64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn det(&self) -> C64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    pub fn apply(&self, v: [C64; 2]) -> [C64; 2] {
        let m = &self.0;
        [
            m[0][0] * v[0] + m[0][1] * v[1],
            m[1][0] * v[0] + m[1][1] * v[1],
        ]
    }

    pub fn frobenius(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// `‖self - other‖_F`
    pub fn distance(&self, other: &Mat2) -> f64 {
        (*self - *other).frobenius()
    }

    /// Coefficients `(x, y, z)` with `self = t·𝟙 + x σx + y σy + z σz`
    /// (`t = tr/2`). Complex in general.
    pub fn pauli_coefficients(&self) -> [C64; 3] {
        let half = C64::new(0.5, 0.0);
        [
            (Mat2::sigma_x() * *self).trace() * half,
            (Mat2::sigma_y() * *self).trace() * half,
            (Mat2::sigma_z() * *self).trace() * half,
        ]
    }

    /// Deviation of `M† M` from the identity.
    pub fn unitarity_residual(&self) -> f64 {
        (self.adjoint() * *self).distance(&Mat2::identity())
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, o: Mat2) -> Mat2 {
        let (a, b) = (&self.0, &o.0);
        Mat2::new(
            a[0][0] + b[0][0],
            a[0][1] + b[0][1],
            a[1][0] + b[1][0],
            a[1][1] + b[1][1],
        )
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, o: Mat2) -> Mat2 {
        self + (-o)
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        self.scale(C64::new(-1.0, 0.0))
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        let (a, b) = (&self.0, &o.0);
        let mut m = Mat2::zero();
        for r in 0..2 {
            for c in 0..2 {
                m.0[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paulis_square_to_identity_and_anticommute() {
        let (x, y, z) = (Mat2::sigma_x(), Mat2::sigma_y(), Mat2::sigma_z());
        for p in [x, y, z] {
            assert!((p * p).distance(&Mat2::identity()) < 1e-15);
        }
        assert!((x * y + y * x).frobenius() < 1e-15);
        assert!((x * y).distance(&z.scale(I)) < 1e-15);
    }

    #[test]
    fn pauli_coefficients_recover_vector() {
        let m = Mat2::pauli_dot([0.3, -0.4, 0.5]);
        let c = m.pauli_coefficients();
        assert!((c[0] - 0.3).norm() < 1e-15);
        assert!((c[1] + 0.4).norm() < 1e-15);
        assert!((c[2] - 0.5).norm() < 1e-15);
    }

    #[test]
    fn hadamard_is_unitary() {
        assert!(Mat2::hadamard().unitarity_residual() < 1e-15);
    }
}
