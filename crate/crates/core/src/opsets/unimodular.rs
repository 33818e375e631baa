use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::mat2::{Mat2, C64, I, ONE, ZERO};
use crate::qcore::Gate;
use crate::tolerance;

/// A unit 3-vector naming a direction on the Bloch sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis([f64; 3]);

impl Axis {
    pub const X: Axis = Axis([1.0, 0.0, 0.0]);
    pub const Y: Axis = Axis([0.0, 1.0, 0.0]);
    pub const Z: Axis = Axis([0.0, 0.0, 1.0]);

    /// Accepts `v` only if it is already unit length.
    pub fn new(v: [f64; 3]) -> Result<Self> {
        let n = norm3(v);
        if !n.is_finite() || (n - 1.0).abs() > tolerance::EQUALITY {
            return Err(Error::NonUnitAxis(n));
        }
        Ok(Axis(v))
    }

    /// Rescales any nonzero vector to unit length.
    pub fn normalized(v: [f64; 3]) -> Result<Self> {
        let n = norm3(v);
        if !(n > 1e-12) || !n.is_finite() {
            return Err(Error::NonUnitAxis(n));
        }
        Ok(Axis([v[0] / n, v[1] / n, v[2] / n]))
    }

    pub fn components(&self) -> [f64; 3] {
        self.0
    }

    pub fn dot(&self, other: &Axis) -> f64 {
        dot3(self.0, other.0)
    }

    pub fn neg(&self) -> Axis {
        Axis([-self.0[0], -self.0[1], -self.0[2]])
    }

    /// Sign convention: the first component that is not numerically zero is positive.
    pub fn canonical(&self) -> Axis {
        match self.0.iter().find(|c| c.abs() > tolerance::EQUALITY) {
            Some(c) if *c < 0.0 => self.neg(),
            _ => *self,
        }
    }

    /// Angle between the lines spanned by the two axes, in `[0, π/2]`.
    pub fn line_angle(&self, other: &Axis) -> f64 {
        let c = cross3(self.0, other.0);
        norm3(c).atan2(self.dot(other).abs())
    }

    /// `n · σ`
    pub fn pauli(&self) -> Mat2 {
        Mat2::pauli_dot(self.0)
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.0[0], self.0[1], self.0[2])
    }
}

pub(crate) fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn norm3(a: [f64; 3]) -> f64 {
    dot3(a, a).sqrt()
}

pub(crate) fn cross3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Special-unitary qubit operator `[[a, b], [−b*, a*]]`, `|a|² + |b|² = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Unimodular {
    a: C64,
    b: C64,
}

impl Unimodular {
    pub fn new(a: C64, b: C64) -> Result<Self> {
        let residual = a.norm_sqr() + b.norm_sqr() - 1.0;
        if !residual.is_finite() || residual.abs() > tolerance::NORM {
            return Err(Error::NotUnimodular(residual));
        }
        Ok(Unimodular { a, b })
    }

    pub(crate) const fn raw(a: C64, b: C64) -> Self {
        Unimodular { a, b }
    }

    /// Reads `a` and `b` off a matrix, checking the special-unitary shape.
    pub fn from_mat2(m: &Mat2) -> Result<Self> {
        let (a, b) = (m.get(0, 0), m.get(0, 1));
        let shape = (m.get(1, 0) + b.conj())
            .norm()
            .max((m.get(1, 1) - a.conj()).norm());
        if shape > tolerance::NORM {
            return Err(Error::NotUnitary(shape));
        }
        Unimodular::new(a, b)
    }

    pub const fn identity() -> Self {
        Unimodular::raw(ONE, ZERO)
    }

    /// `exp(−iθ n·σ/2)`.
    pub fn from_axis_angle(axis: &Axis, theta: f64) -> Self {
        let [nx, ny, nz] = axis.components();
        let (s, c) = (theta / 2.0).sin_cos();
        Unimodular::raw(C64::new(c, -s * nz), C64::new(-s * ny, -s * nx))
    }

    /// `diag(e^{iφ}, e^{−iφ}) = e^{iφσz}`, the rotations commuting with σz.
    pub fn rz(phi: f64) -> Self {
        Unimodular::raw(C64::from_polar(1.0, phi), ZERO)
    }

    /// `[[0, e^{iφ}], [−e^{−iφ}, 0]]`, the π-rotations anticommuting with σz.
    pub fn anticommuting(phi: f64) -> Self {
        Unimodular::raw(ZERO, C64::from_polar(1.0, phi))
    }

    /// `iσx`
    pub fn i_sigma_x() -> Self {
        Unimodular::raw(ZERO, I)
    }

    /// `iσy`
    pub fn i_sigma_y() -> Self {
        Unimodular::raw(ZERO, ONE)
    }

    /// `iσz`
    pub fn i_sigma_z() -> Self {
        Unimodular::raw(I, ZERO)
    }

    /// `iH`, the Hadamard gate made unimodular.
    pub fn i_hadamard() -> Self {
        let h = C64::new(0.0, std::f64::consts::FRAC_1_SQRT_2);
        Unimodular::raw(h, h)
    }

    pub fn a(&self) -> C64 {
        self.a
    }

    pub fn b(&self) -> C64 {
        self.b
    }

    pub fn matrix(&self) -> Mat2 {
        Mat2::new(self.a, self.b, -self.b.conj(), self.a.conj())
    }

    pub fn gate(&self) -> Gate {
        Gate::from_mat2(&self.matrix()).expect("unimodular operators are unitary")
    }

    pub fn adjoint(&self) -> Self {
        Unimodular::raw(self.a.conj(), -self.b)
    }

    pub fn unimodularity_residual(&self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr() - 1.0
    }

    /// `cos(θ/2)` for the rotation angle θ.
    pub fn cos_half_angle(&self) -> f64 {
        self.a.re
    }

    /// `sin(θ/2) n` for `U = cos(θ/2) 𝟙 − i sin(θ/2) n·σ`.
    pub fn rotation_vector(&self) -> [f64; 3] {
        [-self.b.im, -self.b.re, -self.a.im]
    }

    /// True within tolerance when `U = ±𝟙`.
    pub fn is_scalar(&self) -> bool {
        norm3(self.rotation_vector()) * std::f64::consts::SQRT_2 <= tolerance::EQUALITY
    }

    /// `W U W†`
    pub fn conjugate_by(&self, w: &Unimodular) -> Unimodular {
        *w * *self * w.adjoint()
    }

    /// Entrywise distance of the matrices.
    pub fn distance(&self, other: &Unimodular) -> f64 {
        self.matrix().distance(&other.matrix())
    }
}

impl Mul for Unimodular {
    type Output = Unimodular;
    fn mul(self, o: Unimodular) -> Unimodular {
        Unimodular::raw(
            self.a * o.a - self.b * o.b.conj(),
            self.a * o.b + self.b * o.a.conj(),
        )
    }
}

impl fmt::Display for Unimodular {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "mat:{},{},{},{}",
            self.a.re, self.a.im, self.b.re, self.b.im
        )
    }
}
