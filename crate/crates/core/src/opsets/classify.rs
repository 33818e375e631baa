use serde::{Deserialize, Serialize};

use super::{Axis, Unimodular};
use crate::tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassTag {
    CommutesWithAxis,
    AnticommutesWithAxis,
    General,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OperatorClass {
    CommutesWithAxis(Axis),
    AnticommutesWithAxis(Axis),
    General,
}

impl OperatorClass {
    pub fn tag(&self) -> ClassTag {
        match self {
            OperatorClass::CommutesWithAxis(_) => ClassTag::CommutesWithAxis,
            OperatorClass::AnticommutesWithAxis(_) => ClassTag::AnticommutesWithAxis,
            OperatorClass::General => ClassTag::General,
        }
    }

    pub fn axis(&self) -> Option<Axis> {
        match self {
            OperatorClass::CommutesWithAxis(n) | OperatorClass::AnticommutesWithAxis(n) => Some(*n),
            OperatorClass::General => None,
        }
    }

    pub fn is_teleportable(&self) -> bool {
        !matches!(self, OperatorClass::General)
    }
}

/// `‖[U, n·σ]‖_F`
pub fn commutator_norm(u: &Unimodular, axis: &Axis) -> f64 {
    let (m, n) = (u.matrix(), axis.pauli());
    (m * n - n * m).frobenius()
}

/// `‖{U, n·σ}‖_F`
pub fn anticommutator_norm(u: &Unimodular, axis: &Axis) -> f64 {
    let (m, n) = (u.matrix(), axis.pauli());
    (m * n + n * m).frobenius()
}

/// Sorts `u` into the rotations about `axis`, the π-rotations about axes
/// orthogonal to it, or neither.
pub fn classify_operator(u: &Unimodular, axis: &Axis) -> OperatorClass {
    if commutator_norm(u, axis) <= tolerance::EQUALITY {
        OperatorClass::CommutesWithAxis(*axis)
    } else if anticommutator_norm(u, axis) <= tolerance::EQUALITY {
        OperatorClass::AnticommutesWithAxis(*axis)
    } else {
        OperatorClass::General
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat2::C64;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    #[test]
    fn diagonal_commutes_with_z() {
        let u = Unimodular::rz(PI / 4.0);
        assert_eq!(
            classify_operator(&u, &Axis::Z),
            OperatorClass::CommutesWithAxis(Axis::Z)
        );
    }

    #[test]
    fn off_diagonal_anticommutes_with_z() {
        let u = Unimodular::new(C64::new(0.0, 0.0), C64::new(1.0, 0.0)).unwrap();
        assert_eq!(
            classify_operator(&u, &Axis::Z),
            OperatorClass::AnticommutesWithAxis(Axis::Z)
        );
    }

    #[test]
    fn hadamard_like_is_general() {
        let h = C64::new(FRAC_1_SQRT_2, 0.0);
        let u = Unimodular::new(h, h).unwrap();
        assert!(commutator_norm(&u, &Axis::Z) > 0.5);
        assert!(anticommutator_norm(&u, &Axis::Z) > 0.5);
        assert_eq!(classify_operator(&u, &Axis::Z), OperatorClass::General);
    }

    #[test]
    fn identity_commutes_with_every_axis() {
        let axis = Axis::normalized([0.3, -0.2, 0.7]).unwrap();
        assert_eq!(
            classify_operator(&Unimodular::identity(), &axis).tag(),
            ClassTag::CommutesWithAxis
        );
    }
}
