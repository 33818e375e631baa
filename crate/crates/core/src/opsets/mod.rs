//! Single-qubit SU(2) operator algebra: the two teleportable operator
//! families, the correction that repairs the protocol's failed branch, and
//! the constructions used to characterize which sets admit one.

mod axis;
mod classify;
mod correction;
mod pair;
mod qop;
mod unimodular;

pub use axis::find_common_axis;
pub use classify::{
    anticommutator_norm, classify_operator, commutator_norm, ClassTag, OperatorClass,
};
pub use correction::{
    check_common_correction, solve_correction, CommonCorrection, CorrectionSolution,
};
pub use pair::{diag_form_decompose, find_orthogonal_pair, z_phase, OrthogonalPair};
pub use qop::q_operator;
pub use unimodular::{Axis, Unimodular};
