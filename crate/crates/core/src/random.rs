//! Seedable samplers for states and operators, used by the invariant suites.

use std::f64::consts::PI;

use rand::Rng;
use rand_distr::StandardNormal;

use crate::mat2::C64;
use crate::opsets::{classify_operator, Axis, Unimodular};
use crate::qcore::StateVector;

fn normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.sample(StandardNormal)
}

fn unit4<R: Rng + ?Sized>(rng: &mut R) -> [f64; 4] {
    loop {
        let v = [normal(rng), normal(rng), normal(rng), normal(rng)];
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-6 {
            return [v[0] / n, v[1] / n, v[2] / n, v[3] / n];
        }
    }
}

/// Haar-random pure qubit state.
pub fn state<R: Rng + ?Sized>(rng: &mut R) -> StateVector {
    let v = unit4(rng);
    StateVector::qubit(C64::new(v[0], v[1]), C64::new(v[2], v[3])).expect("nonzero")
}

/// Haar-random element of SU(2).
pub fn unimodular<R: Rng + ?Sized>(rng: &mut R) -> Unimodular {
    let v = unit4(rng);
    Unimodular::raw(C64::new(v[0], v[1]), C64::new(v[2], v[3]))
}

pub fn axis<R: Rng + ?Sized>(rng: &mut R) -> Axis {
    loop {
        if let Ok(a) = Axis::normalized([normal(rng), normal(rng), normal(rng)]) {
            return a;
        }
    }
}

pub fn angle<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.random_range(0.0..2.0 * PI)
}

/// `diag(e^{iφ}, e^{−iφ})` with uniform φ.
pub fn set_a<R: Rng + ?Sized>(rng: &mut R) -> Unimodular {
    Unimodular::rz(angle(rng))
}

/// `[[0, e^{iφ}], [−e^{−iφ}, 0]]` with uniform φ.
pub fn set_b<R: Rng + ?Sized>(rng: &mut R) -> Unimodular {
    Unimodular::anticommuting(angle(rng))
}

/// Rotation about `n` by a uniform angle in `[0, 4π)`.
pub fn commuting_about<R: Rng + ?Sized>(n: &Axis, rng: &mut R) -> Unimodular {
    Unimodular::from_axis_angle(n, 2.0 * angle(rng))
}

/// π-rotation about a uniformly chosen axis orthogonal to `n`.
pub fn anticommuting_about<R: Rng + ?Sized>(n: &Axis, rng: &mut R) -> Unimodular {
    loop {
        let v = axis(rng).components();
        let [x, y, z] = n.components();
        let d = v[0] * x + v[1] * y + v[2] * z;
        if let Ok(m) = Axis::normalized([v[0] - d * x, v[1] - d * y, v[2] - d * z]) {
            return Unimodular::from_axis_angle(&m, PI);
        }
    }
}

/// Haar sample rejected until it neither commutes nor anticommutes with `n·σ`.
pub fn general_about<R: Rng + ?Sized>(n: &Axis, rng: &mut R) -> Unimodular {
    loop {
        let u = unimodular(rng);
        if !classify_operator(&u, n).is_teleportable() {
            return u;
        }
    }
}
