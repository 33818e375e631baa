use std::f64::consts::FRAC_1_SQRT_2;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::state::spread;
use super::{QubitId, StateVector};
use crate::error::{Error, Result};
use crate::mat2::{Mat2, C64, ZERO};
use crate::tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Computational,
    Bell,
}

/// Bell states in the fixed outcome order Φ⁺, Φ⁻, Ψ⁺, Ψ⁻.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BellState {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl BellState {
    pub const ALL: [BellState; 4] = [
        BellState::PhiPlus,
        BellState::PhiMinus,
        BellState::PsiPlus,
        BellState::PsiMinus,
    ];

    /// Two outcome bits: the first marks Ψ (odd parity), the second the minus sign.
    pub fn bits(self) -> [u8; 2] {
        match self {
            BellState::PhiPlus => [0, 0],
            BellState::PhiMinus => [0, 1],
            BellState::PsiPlus => [1, 0],
            BellState::PsiMinus => [1, 1],
        }
    }

    pub fn from_bits(bits: &[u8]) -> Option<Self> {
        match bits {
            [0, 0] => Some(BellState::PhiPlus),
            [0, 1] => Some(BellState::PhiMinus),
            [1, 0] => Some(BellState::PsiPlus),
            [1, 1] => Some(BellState::PsiMinus),
            _ => None,
        }
    }

    /// Amplitudes over `|00⟩, |01⟩, |10⟩, |11⟩`.
    pub fn amplitudes(self) -> [C64; 4] {
        let h = C64::new(FRAC_1_SQRT_2, 0.0);
        match self {
            BellState::PhiPlus => [h, ZERO, ZERO, h],
            BellState::PhiMinus => [h, ZERO, ZERO, -h],
            BellState::PsiPlus => [ZERO, h, h, ZERO],
            BellState::PsiMinus => [ZERO, h, -h, ZERO],
        }
    }

    pub fn state(self, q0: QubitId, q1: QubitId) -> Result<StateVector> {
        StateVector::new(self.amplitudes().to_vec(), vec![q0, q1])
    }

    /// Pauli correction the receiving side applies after a teleportation
    /// Bell outcome: Φ⁺ → 𝟙, Φ⁻ → σz, Ψ⁺ → σx, Ψ⁻ → σx σz.
    pub fn correction(self) -> Mat2 {
        match self {
            BellState::PhiPlus => Mat2::identity(),
            BellState::PhiMinus => Mat2::sigma_z(),
            BellState::PsiPlus => Mat2::sigma_x(),
            BellState::PsiMinus => Mat2::sigma_x() * Mat2::sigma_z(),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            BellState::PhiPlus => "phi+",
            BellState::PhiMinus => "phi-",
            BellState::PsiPlus => "psi+",
            BellState::PsiMinus => "psi-",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementBranch {
    pub outcome: Vec<u8>,
    pub probability: f64,
    pub post_state: StateVector,
}

impl StateVector {
    /// Exhaustive projective measurement. Every outcome with nonnegligible
    /// probability is returned with its renormalized post-measurement state;
    /// measured qubits stay in the register, collapsed.
    pub fn measure(&self, targets: &[QubitId], basis: Basis) -> Result<Vec<MeasurementBranch>> {
        if targets.is_empty() {
            return Err(Error::EmptyTargets);
        }
        let shifts = self.shifts(targets)?;
        match basis {
            Basis::Computational => self.measure_computational(&shifts),
            Basis::Bell => {
                if targets.len() != 2 {
                    return Err(Error::BellArity(targets.len()));
                }
                self.measure_bell(&shifts)
            }
        }
    }

    fn measure_computational(&self, shifts: &[usize]) -> Result<Vec<MeasurementBranch>> {
        let k = shifts.len();
        let mut branches = Vec::new();
        for pattern in 0..1usize << k {
            let mut amps = vec![ZERO; self.dim()];
            let mut p = 0.0;
            for (idx, a) in self.amplitudes().iter().enumerate() {
                let read = shifts
                    .iter()
                    .fold(0usize, |acc, s| (acc << 1) | (idx >> s & 1));
                if read == pattern {
                    amps[idx] = *a;
                    p += a.norm_sqr();
                }
            }
            if p > tolerance::NEGLIGIBLE {
                let outcome = (0..k).map(|i| (pattern >> (k - 1 - i) & 1) as u8).collect();
                branches.push(MeasurementBranch {
                    outcome,
                    probability: p,
                    post_state: StateVector::new(amps, self.register().to_vec())?,
                });
            }
        }
        Ok(branches)
    }

    fn measure_bell(&self, shifts: &[usize]) -> Result<Vec<MeasurementBranch>> {
        let mask = shifts.iter().map(|s| 1usize << s).sum::<usize>();
        let mut branches = Vec::new();
        for bell in BellState::ALL {
            let b = bell.amplitudes();
            let mut amps = vec![ZERO; self.dim()];
            let mut p = 0.0;
            for base in (0..self.dim()).filter(|i| i & mask == 0) {
                let overlap: C64 = (0..4)
                    .map(|sub| b[sub].conj() * self.amplitudes()[spread(base, sub, shifts)])
                    .sum();
                p += overlap.norm_sqr();
                for (sub, bs) in b.iter().enumerate() {
                    amps[spread(base, sub, shifts)] = overlap * bs;
                }
            }
            if p > tolerance::NEGLIGIBLE {
                branches.push(MeasurementBranch {
                    outcome: bell.bits().to_vec(),
                    probability: p,
                    post_state: StateVector::new(amps, self.register().to_vec())?,
                });
            }
        }
        Ok(branches)
    }
}

/// Index drawn from `probs`, which must sum to one within the distribution tolerance.
pub(crate) fn sample_index<R: Rng + ?Sized>(probs: &[f64], rng: &mut R) -> Result<usize> {
    let total: f64 = probs.iter().sum();
    if probs.is_empty()
        || (total - 1.0).abs() > tolerance::DISTRIBUTION
        || probs.iter().any(|p| *p < 0.0)
    {
        return Err(Error::DegenerateDistribution(total));
    }
    let u: f64 = rng.random::<f64>() * total;
    let mut acc = 0.0;
    for (i, p) in probs.iter().enumerate() {
        acc += p;
        if u < acc {
            return Ok(i);
        }
    }
    Ok(probs
        .iter()
        .rposition(|p| *p > 0.0)
        .unwrap_or(probs.len() - 1))
}

/// Draws one branch with its probability.
pub fn sample_branch<'a, R: Rng + ?Sized>(
    branches: &'a [MeasurementBranch],
    rng: &mut R,
) -> Result<&'a MeasurementBranch> {
    let probs: Vec<f64> = branches.iter().map(|b| b.probability).collect();
    Ok(&branches[sample_index(&probs, rng)?])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::state::DEFAULT_QUBIT;
    use crate::qcore::Gate;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn computational_measurement_of_qubit() {
        let (alpha, beta) = (C64::new(0.6, 0.0), C64::new(0.0, 0.8));
        let s = StateVector::qubit(alpha, beta).unwrap();
        let branches = s.measure(&[DEFAULT_QUBIT], Basis::Computational).unwrap();
        assert_eq!(branches.len(), 2);
        assert_eq!(branches[0].outcome, vec![0]);
        assert!((branches[0].probability - 0.36).abs() < 1e-12);
        assert!((branches[1].probability - 0.64).abs() < 1e-12);
        assert!(
            branches[0]
                .post_state
                .fidelity_up_to_phase(&StateVector::zero())
                .unwrap()
                > 1.0 - 1e-12
        );
        assert!(
            branches[1]
                .post_state
                .fidelity_up_to_phase(&StateVector::one())
                .unwrap()
                > 1.0 - 1e-12
        );
    }

    #[test]
    fn bell_measurement_of_phi_plus() {
        let (a, b) = (QubitId::alice(0), QubitId::bob(1));
        let s = StateVector::phi_plus(a, b).unwrap();
        let branches = s.measure(&[a, b], Basis::Bell).unwrap();
        assert_eq!(branches.len(), 1);
        assert_eq!(
            BellState::from_bits(&branches[0].outcome),
            Some(BellState::PhiPlus)
        );
        assert!((branches[0].probability - 1.0).abs() < 1e-12);
    }

    #[test]
    fn bell_states_are_distinguished() {
        let (a, b) = (QubitId::alice(0), QubitId::bob(1));
        for bell in BellState::ALL {
            let s = bell.state(a, b).unwrap();
            let branches = s.measure(&[a, b], Basis::Bell).unwrap();
            assert_eq!(branches.len(), 1);
            assert_eq!(branches[0].outcome, bell.bits().to_vec());
        }
    }

    #[test]
    fn bell_corrections_undo_teleportation_frames() {
        // Bell outcome k leaves the receiver with correction(k)† applied (up to phase)
        let (src, a, b) = (QubitId::bob(0), QubitId::alice(1), QubitId::bob(2));
        let chi = StateVector::qubit(C64::new(0.6, 0.1), C64::new(-0.2, 0.77)).unwrap();
        let s = chi.tensor(&StateVector::phi_plus(a, b).unwrap()).unwrap();
        for br in s.measure(&[src, a], Basis::Bell).unwrap() {
            assert!((br.probability - 0.25).abs() < 1e-12);
            let fix = BellState::from_bits(&br.outcome).unwrap().correction();
            let fixed = br
                .post_state
                .apply_gate(&Gate::from_mat2(&fix).unwrap(), &[b])
                .unwrap();
            let got = fixed.factor_out(b).unwrap();
            assert!(
                got.fidelity_up_to_phase(&chi.relabel(vec![b]).unwrap())
                    .unwrap()
                    > 1.0 - 1e-12
            );
        }
    }

    #[test]
    fn measurement_errors() {
        let s = StateVector::zero();
        assert_eq!(
            s.measure(&[], Basis::Computational),
            Err(Error::EmptyTargets)
        );
        assert_eq!(
            s.measure(&[DEFAULT_QUBIT], Basis::Bell),
            Err(Error::BellArity(1))
        );
    }

    #[test]
    fn sampling_single_branch_and_determinism() {
        let s = StateVector::zero();
        let branches = s.measure(&[DEFAULT_QUBIT], Basis::Computational).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(sample_branch(&branches, &mut rng).unwrap().outcome, vec![0]);

        let branches = StateVector::plus()
            .measure(&[DEFAULT_QUBIT], Basis::Computational)
            .unwrap();
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..64)
                .map(|_| sample_branch(&branches, &mut rng).unwrap().outcome[0])
                .collect::<Vec<_>>()
        };
        assert_eq!(draw(42), draw(42));
    }

    #[test]
    fn sampling_frequency_is_half() {
        let branches = StateVector::plus()
            .measure(&[DEFAULT_QUBIT], Basis::Computational)
            .unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let n = 100_000;
        let ones = (0..n)
            .filter(|_| sample_branch(&branches, &mut rng).unwrap().outcome[0] == 1)
            .count();
        assert!((ones as f64 / n as f64 - 0.5).abs() < 0.01);
    }

    #[test]
    fn sampling_rejects_degenerate_vector() {
        let mut branches = StateVector::plus()
            .measure(&[DEFAULT_QUBIT], Basis::Computational)
            .unwrap();
        branches[0].probability = 0.7;
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(matches!(
            sample_branch(&branches, &mut rng),
            Err(Error::DegenerateDistribution(_))
        ));
        assert!(matches!(
            sample_branch(&[], &mut rng),
            Err(Error::DegenerateDistribution(_))
        ));
    }
}
