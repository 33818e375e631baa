use std::collections::BTreeSet;
use std::f64::consts::FRAC_1_SQRT_2;

use super::{DensityMatrix, Gate, Party, QubitId};
use crate::error::{Error, Result};
use crate::mat2::{C64, ONE, ZERO};
use crate::tolerance;

/// Normalized amplitude vector over an ordered register.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<C64>,
    register: Vec<QubitId>,
}

/// Label given to single-qubit states built without an explicit register.
pub const DEFAULT_QUBIT: QubitId = QubitId::new(0, Party::Bob);

fn check_register(register: &[QubitId]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for q in register {
        if !seen.insert(q.index) {
            return Err(Error::RegisterConflict(*q));
        }
    }
    Ok(())
}

impl StateVector {
    /// Builds a state from raw amplitudes, normalizing on entry.
    pub fn new(amplitudes: Vec<C64>, register: Vec<QubitId>) -> Result<Self> {
        let expected = 1usize << register.len();
        if amplitudes.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                got: amplitudes.len(),
            });
        }
        check_register(&register)?;
        let norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if !(norm > 0.0) || !norm.is_finite() {
            return Err(Error::ZeroVector);
        }
        let amplitudes = amplitudes.into_iter().map(|a| a / norm).collect();
        Ok(StateVector {
            amplitudes,
            register,
        })
    }

    /// Computational basis state `|bits⟩`, one bit per register entry.
    pub fn basis(bits: &[u8], register: Vec<QubitId>) -> Result<Self> {
        if bits.len() != register.len() {
            return Err(Error::DimensionMismatch {
                expected: register.len(),
                got: bits.len(),
            });
        }
        let index = bits
            .iter()
            .fold(0usize, |acc, &b| (acc << 1) | usize::from(b != 0));
        let mut amps = vec![ZERO; 1 << register.len()];
        amps[index] = ONE;
        StateVector::new(amps, register)
    }

    /// `α|0⟩ + β|1⟩` (normalized) on [`DEFAULT_QUBIT`].
    pub fn qubit(alpha: C64, beta: C64) -> Result<Self> {
        StateVector::new(vec![alpha, beta], vec![DEFAULT_QUBIT])
    }

    pub fn zero() -> Self {
        StateVector {
            amplitudes: vec![ONE, ZERO],
            register: vec![DEFAULT_QUBIT],
        }
    }

    pub fn one() -> Self {
        StateVector {
            amplitudes: vec![ZERO, ONE],
            register: vec![DEFAULT_QUBIT],
        }
    }

    pub fn plus() -> Self {
        let h = C64::new(FRAC_1_SQRT_2, 0.0);
        StateVector {
            amplitudes: vec![h, h],
            register: vec![DEFAULT_QUBIT],
        }
    }

    pub fn minus() -> Self {
        let h = C64::new(FRAC_1_SQRT_2, 0.0);
        StateVector {
            amplitudes: vec![h, -h],
            register: vec![DEFAULT_QUBIT],
        }
    }

    /// `(|00⟩ + |11⟩)/√2` on `(q0, q1)`.
    pub fn phi_plus(q0: QubitId, q1: QubitId) -> Result<Self> {
        super::BellState::PhiPlus.state(q0, q1)
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn register(&self) -> &[QubitId] {
        &self.register
    }

    pub fn num_qubits(&self) -> usize {
        self.register.len()
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Amplitudes of a one-qubit state.
    pub fn as_qubit(&self) -> Option<[C64; 2]> {
        (self.num_qubits() == 1).then(|| [self.amplitudes[0], self.amplitudes[1]])
    }

    pub fn position(&self, q: QubitId) -> Result<usize> {
        self.register
            .iter()
            .position(|r| *r == q)
            .ok_or(Error::UnknownQubit(q))
    }

    /// Bit shift of qubit `q` inside the amplitude index.
    pub(crate) fn shift(&self, q: QubitId) -> Result<usize> {
        Ok(self.num_qubits() - 1 - self.position(q)?)
    }

    pub(crate) fn shifts(&self, targets: &[QubitId]) -> Result<Vec<usize>> {
        let mut seen = BTreeSet::new();
        targets
            .iter()
            .map(|q| {
                if !seen.insert(*q) {
                    return Err(Error::RegisterConflict(*q));
                }
                self.shift(*q)
            })
            .collect()
    }

    /// Same amplitudes under new labels.
    pub fn relabel(&self, register: Vec<QubitId>) -> Result<Self> {
        if register.len() != self.register.len() {
            return Err(Error::DimensionMismatch {
                expected: self.register.len(),
                got: register.len(),
            });
        }
        check_register(&register)?;
        Ok(StateVector {
            amplitudes: self.amplitudes.clone(),
            register,
        })
    }

    /// Kronecker product; the register is `self` followed by `other`.
    pub fn tensor(&self, other: &StateVector) -> Result<Self> {
        if let Some(q) = other
            .register
            .iter()
            .find(|q| self.register.iter().any(|r| r.index == q.index))
        {
            return Err(Error::RegisterConflict(*q));
        }
        let mut amps = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                amps.push(a * b);
            }
        }
        let mut register = self.register.clone();
        register.extend_from_slice(&other.register);
        StateVector::new(amps, register)
    }

    pub fn apply_gate(&self, gate: &Gate, targets: &[QubitId]) -> Result<Self> {
        if targets.is_empty() {
            return Err(Error::EmptyTargets);
        }
        if gate.num_qubits() != targets.len() {
            return Err(Error::DimensionMismatch {
                expected: gate.dim(),
                got: 1 << targets.len(),
            });
        }
        let shifts = self.shifts(targets)?;
        let mask: usize = shifts.iter().map(|s| 1usize << s).sum();
        let k = shifts.len();
        let mut out = self.amplitudes.clone();
        let mut local = vec![ZERO; 1 << k];
        for base in (0..self.dim()).filter(|i| i & mask == 0) {
            for (sub, slot) in local.iter_mut().enumerate() {
                *slot = self.amplitudes[spread(base, sub, &shifts)];
            }
            for (sub, v) in gate.apply_local(&local).into_iter().enumerate() {
                out[spread(base, sub, &shifts)] = v;
            }
        }
        StateVector::new(out, self.register.clone())
    }

    /// Uniformly controlled single-qubit gate: applies `gates[m]` to `target`
    /// when the controls read `m` (first control is the most significant bit).
    pub fn apply_multiplexed(
        &self,
        controls: &[QubitId],
        target: QubitId,
        gates: &[Gate],
    ) -> Result<Self> {
        if gates.len() != 1 << controls.len() {
            return Err(Error::DimensionMismatch {
                expected: 1 << controls.len(),
                got: gates.len(),
            });
        }
        if let Some(g) = gates.iter().find(|g| g.num_qubits() != 1) {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: g.dim(),
            });
        }
        let mut all = controls.to_vec();
        all.push(target);
        let shifts = self.shifts(&all)?;
        let (control_shifts, t) = shifts.split_at(controls.len());
        let t = t[0];
        let mut out = self.amplitudes.clone();
        for base in (0..self.dim()).filter(|i| i >> t & 1 == 0) {
            let m = control_shifts
                .iter()
                .fold(0usize, |acc, s| (acc << 1) | (base >> s & 1));
            let local = [self.amplitudes[base], self.amplitudes[base | 1 << t]];
            let v = gates[m].apply_local(&local);
            out[base] = v[0];
            out[base | 1 << t] = v[1];
        }
        StateVector::new(out, self.register.clone())
    }

    /// `⟨self|other⟩`
    pub fn inner(&self, other: &StateVector) -> Result<C64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// `|⟨self|other⟩|²`; insensitive to global phase.
    pub fn fidelity_up_to_phase(&self, other: &StateVector) -> Result<f64> {
        Ok(self.inner(other)?.norm_sqr().min(1.0))
    }

    pub fn reduced_density(&self, keep: &[QubitId]) -> Result<DensityMatrix> {
        if keep.is_empty() {
            return Err(Error::InvalidCut("keep set is empty".into()));
        }
        let keep_shifts = self.shifts(keep)?;
        let rest: Vec<usize> = (0..self.num_qubits())
            .filter(|s| !keep_shifts.contains(s))
            .collect();
        let kd = 1usize << keep_shifts.len();
        let rd = 1usize << rest.len();
        // amplitudes regrouped as rows = rest index, columns = kept index
        let mut grouped = vec![ZERO; rd * kd];
        for (idx, a) in self.amplitudes.iter().enumerate() {
            let k = keep_shifts
                .iter()
                .fold(0usize, |acc, s| (acc << 1) | (idx >> s & 1));
            let r = rest
                .iter()
                .fold(0usize, |acc, s| (acc << 1) | (idx >> s & 1));
            grouped[r * kd + k] = *a;
        }
        let mut rho = vec![ZERO; kd * kd];
        for r in 0..rd {
            let row = &grouped[r * kd..(r + 1) * kd];
            for i in 0..kd {
                for j in 0..kd {
                    rho[i * kd + j] += row[i] * row[j].conj();
                }
            }
        }
        Ok(DensityMatrix::from_parts(kd, rho, keep.to_vec()))
    }

    /// Von Neumann entropy in bits of the reduced state on `cut`.
    pub fn entanglement_entropy(&self, cut: &[QubitId]) -> Result<f64> {
        if cut.is_empty() || cut.len() >= self.num_qubits() {
            return Err(Error::InvalidCut(format!(
                "cut must be a proper nonempty subset of the {}-qubit register",
                self.num_qubits()
            )));
        }
        self.shifts(cut)?;
        // entropy is symmetric across a pure bipartition; diagonalize the smaller side
        let complement: Vec<QubitId> = self
            .register
            .iter()
            .copied()
            .filter(|q| !cut.contains(q))
            .collect();
        let side = if cut.len() <= complement.len() {
            cut
        } else {
            &complement[..]
        };
        Ok(self.reduced_density(side)?.von_neumann_entropy())
    }

    /// The single-qubit state of `q`, provided `q` is unentangled from the rest.
    pub fn factor_out(&self, q: QubitId) -> Result<StateVector> {
        let rho = self.reduced_density(&[q])?;
        let purity = rho.purity();
        if purity < 1.0 - tolerance::EQUALITY {
            return Err(Error::Entangled { qubit: q, purity });
        }
        let col = if rho.get(0, 0).re >= rho.get(1, 1).re {
            0
        } else {
            1
        };
        let scale = rho.get(col, col).re.sqrt();
        StateVector::new(
            vec![rho.get(0, col) / scale, rho.get(1, col) / scale],
            vec![q],
        )
    }
}

/// Full index from a base index (target bits zero) and a local sub-index.
pub(crate) fn spread(base: usize, sub: usize, shifts: &[usize]) -> usize {
    let k = shifts.len();
    shifts
        .iter()
        .enumerate()
        .fold(base, |acc, (i, s)| acc | ((sub >> (k - 1 - i) & 1) << s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn approx(a: C64, b: C64) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn tensor_of_basis_states() {
        let s = StateVector::zero()
            .tensor(&StateVector::one().relabel(vec![QubitId::bob(1)]).unwrap())
            .unwrap();
        assert!(approx(s.amplitudes()[1], ONE));
        assert_eq!(s.amplitudes().iter().filter(|a| a.norm() > 0.0).count(), 1);
    }

    #[test]
    fn tensor_bell_with_zero() {
        let bell = StateVector::phi_plus(QubitId::alice(0), QubitId::bob(1)).unwrap();
        let z = StateVector::zero().relabel(vec![QubitId::bob(2)]).unwrap();
        let s = bell.tensor(&z).unwrap();
        let h = C64::new(FRAC_1_SQRT_2, 0.0);
        let expected = [h, ZERO, ZERO, ZERO, ZERO, ZERO, h, ZERO];
        for (a, e) in s.amplitudes().iter().zip(expected) {
            assert!(approx(*a, e));
        }
    }

    #[test]
    fn tensor_plus_plus_is_uniform() {
        let p = StateVector::plus()
            .relabel(vec![QubitId::alice(5)])
            .unwrap();
        let s = p.tensor(&StateVector::plus()).unwrap();
        assert!(s
            .amplitudes()
            .iter()
            .all(|a| approx(*a, C64::new(0.5, 0.0))));
    }

    #[test]
    fn tensor_rejects_overlap() {
        let err = StateVector::zero().tensor(&StateVector::one()).unwrap_err();
        assert_eq!(err, Error::RegisterConflict(DEFAULT_QUBIT));
    }

    #[test]
    fn new_rejects_wrong_length_and_zero() {
        assert!(matches!(
            StateVector::new(vec![ONE; 3], vec![QubitId::bob(0), QubitId::bob(1)]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert_eq!(StateVector::qubit(ZERO, ZERO), Err(Error::ZeroVector));
        assert!(matches!(
            StateVector::new(vec![ONE; 4], vec![QubitId::bob(0), QubitId::alice(0)]),
            Err(Error::RegisterConflict(_))
        ));
    }

    #[test]
    fn x_flips_zero() {
        let s = StateVector::zero()
            .apply_gate(&Gate::x(), &[DEFAULT_QUBIT])
            .unwrap();
        assert!(approx(s.amplitudes()[1], ONE));
    }

    #[test]
    fn hadamard_on_zero() {
        let s = StateVector::zero()
            .apply_gate(&Gate::h(), &[DEFAULT_QUBIT])
            .unwrap();
        assert!(s.fidelity_up_to_phase(&StateVector::plus()).unwrap() > 1.0 - 1e-12);
    }

    #[test]
    fn cnot_copies_control_bit() {
        let (q0, q1) = (QubitId::alice(0), QubitId::bob(1));
        let (alpha, beta) = (C64::new(0.6, 0.0), C64::new(0.0, 0.8));
        let s = StateVector::new(vec![alpha, ZERO, beta, ZERO], vec![q0, q1]).unwrap();
        let out = s.apply_gate(&Gate::cnot(), &[q0, q1]).unwrap();
        assert!(approx(out.amplitudes()[0], alpha));
        assert!(approx(out.amplitudes()[3], beta));
        assert!(approx(out.amplitudes()[2], ZERO));
        // reversed roles: control q1 (which is 0) leaves the state alone
        let same = s.apply_gate(&Gate::cnot(), &[q1, q0]).unwrap();
        assert_eq!(same.amplitudes(), s.amplitudes());
    }

    #[test]
    fn apply_gate_errors() {
        let s = StateVector::zero();
        assert_eq!(s.apply_gate(&Gate::x(), &[]), Err(Error::EmptyTargets));
        assert_eq!(
            s.apply_gate(&Gate::x(), &[QubitId::alice(9)]),
            Err(Error::UnknownQubit(QubitId::alice(9)))
        );
        assert!(matches!(
            s.apply_gate(&Gate::cnot(), &[DEFAULT_QUBIT]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn fidelity_examples() {
        let phased = StateVector::qubit(C64::new(0.0, 0.6), C64::new(0.0, 0.8)).unwrap();
        let psi = StateVector::qubit(C64::new(0.6, 0.0), C64::new(0.8, 0.0)).unwrap();
        assert!((psi.fidelity_up_to_phase(&phased).unwrap() - 1.0).abs() < 1e-12);
        assert!(
            StateVector::zero()
                .fidelity_up_to_phase(&StateVector::one())
                .unwrap()
                < 1e-15
        );
        assert!(
            (StateVector::plus()
                .fidelity_up_to_phase(&StateVector::zero())
                .unwrap()
                - 0.5)
                .abs()
                < 1e-12
        );
        let two = StateVector::plus()
            .tensor(&StateVector::plus().relabel(vec![QubitId::bob(3)]).unwrap())
            .unwrap();
        assert!(matches!(
            two.fidelity_up_to_phase(&psi),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn reduced_density_examples() {
        let bell = StateVector::phi_plus(QubitId::alice(0), QubitId::bob(1)).unwrap();
        let rho = bell.reduced_density(&[QubitId::alice(0)]).unwrap();
        assert!(approx(rho.get(0, 0), C64::new(0.5, 0.0)));
        assert!(approx(rho.get(1, 1), C64::new(0.5, 0.0)));
        assert!(approx(rho.get(0, 1), ZERO));

        let s = StateVector::basis(&[0, 1], vec![QubitId::alice(0), QubitId::bob(1)]).unwrap();
        let rho = s.reduced_density(&[QubitId::alice(0)]).unwrap();
        assert!(approx(rho.get(0, 0), ONE));
        assert!(approx(rho.get(1, 1), ZERO));

        assert!(matches!(s.reduced_density(&[]), Err(Error::InvalidCut(_))));
        assert!(matches!(
            s.reduced_density(&[QubitId::bob(7)]),
            Err(Error::UnknownQubit(_))
        ));
    }

    #[test]
    fn entropy_examples() {
        let (a, b) = (QubitId::alice(0), QubitId::bob(1));
        let product = StateVector::basis(&[0, 0], vec![a, b]).unwrap();
        assert!(product.entanglement_entropy(&[a]).unwrap().abs() < 1e-12);
        let bell = StateVector::phi_plus(a, b).unwrap();
        assert!((bell.entanglement_entropy(&[a]).unwrap() - 1.0).abs() < 1e-12);
        assert!(matches!(
            bell.entanglement_entropy(&[a, b]),
            Err(Error::InvalidCut(_))
        ));
        assert!(matches!(
            bell.entanglement_entropy(&[]),
            Err(Error::InvalidCut(_))
        ));
    }

    #[test]
    fn factor_out_detects_entanglement() {
        let (a, b) = (QubitId::alice(0), QubitId::bob(1));
        let bell = StateVector::phi_plus(a, b).unwrap();
        assert!(matches!(bell.factor_out(a), Err(Error::Entangled { .. })));
        let psi = StateVector::qubit(C64::new(0.6, 0.0), C64::new(0.0, 0.8))
            .unwrap()
            .relabel(vec![b])
            .unwrap();
        let s = StateVector::plus()
            .relabel(vec![a])
            .unwrap()
            .tensor(&psi)
            .unwrap();
        let got = s.factor_out(b).unwrap();
        assert!((got.fidelity_up_to_phase(&psi).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn multiplexed_matches_cnot() {
        let (c, t) = (QubitId::alice(0), QubitId::bob(1));
        let s = StateVector::new(
            vec![
                C64::new(0.1, 0.2),
                C64::new(0.3, 0.0),
                C64::new(0.0, 0.5),
                C64::new(0.4, -0.1),
            ],
            vec![c, t],
        )
        .unwrap();
        let via_cnot = s.apply_gate(&Gate::cnot(), &[c, t]).unwrap();
        let via_mux = s
            .apply_multiplexed(&[c], t, &[Gate::identity(), Gate::x()])
            .unwrap();
        for (x, y) in via_cnot.amplitudes().iter().zip(via_mux.amplitudes()) {
            assert!(approx(*x, *y));
        }
    }
}
