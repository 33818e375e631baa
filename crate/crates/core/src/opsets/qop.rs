use super::Unimodular;
use crate::error::{Error, Result};
use crate::mat2::{Mat2, C64};
use crate::qcore::StateVector;
use crate::tolerance;

/// `Q(α, ξ) = e^{iα}|ξ⟩⟨ξ| + e^{−iα}(𝟙 − |ξ⟩⟨ξ|)`.
///
/// Nontrivial only for α not a multiple of π; at those values Q is ±𝟙.
pub fn q_operator(alpha: f64, xi: &StateVector) -> Result<Unimodular> {
    let v = xi.as_qubit().ok_or(Error::DimensionMismatch {
        expected: 2,
        got: xi.dim(),
    })?;
    let norm = v[0].norm_sqr() + v[1].norm_sqr();
    if (norm - 1.0).abs() > tolerance::NORM {
        return Err(Error::NotNormalized(norm));
    }
    let p = Mat2::outer(v);
    let q = p.scale(C64::from_polar(1.0, alpha))
        + (Mat2::identity() - p).scale(C64::from_polar(1.0, -alpha));
    Unimodular::from_mat2(&q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat2::{ONE, ZERO};
    use crate::qcore::QubitId;
    use std::f64::consts::PI;

    #[test]
    fn basis_projector_gives_diagonal() {
        let alpha = 0.8;
        let q = q_operator(alpha, &StateVector::zero()).unwrap();
        assert!(q.distance(&Unimodular::rz(alpha)) < 1e-15);
    }

    #[test]
    fn pi_gives_minus_identity() {
        let xi = StateVector::qubit(C64::new(0.3, 0.4), C64::new(-0.5, 0.1)).unwrap();
        let q = q_operator(PI, &xi).unwrap();
        assert!(
            q.matrix()
                .distance(&Mat2::identity().scale(C64::new(-1.0, 0.0)))
                < 1e-14
        );
    }

    #[test]
    fn orthogonal_complement_with_negated_angle() {
        let (a, b) = (C64::new(0.3, 0.4), C64::new(-0.5, 0.1));
        let xi = StateVector::qubit(a, b).unwrap();
        let v = xi.as_qubit().unwrap();
        let perp = StateVector::qubit(-v[1].conj(), v[0].conj()).unwrap();
        let lhs = q_operator(1.3, &xi).unwrap();
        let rhs = q_operator(-1.3, &perp).unwrap();
        assert!(lhs.distance(&rhs) < 1e-14);
    }

    #[test]
    fn rejects_multi_qubit_input() {
        let two = StateVector::basis(&[0, 0], vec![QubitId::alice(0), QubitId::bob(1)]).unwrap();
        assert!(matches!(
            q_operator(0.4, &two),
            Err(Error::DimensionMismatch { .. })
        ));
        let _ = (ONE, ZERO);
    }
}
