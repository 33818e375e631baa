//! Numerical tolerances shared by every module.

/// Unitarity of gates, normalization of states, unimodularity of operators.
pub const NORM: f64 = 1e-10;

/// Derived equalities: commutator norms, fidelities, operator identities.
pub const EQUALITY: f64 = 1e-9;

/// Angular error allowed when recovering an axis after a basis change.
pub const AXIS: f64 = 1e-6;

/// Below this `|sin λ|` the product `U2† U1` counts as proportional to the identity.
pub const DEGENERACY: f64 = 1e-8;

/// Allowed deviation of a branch probability vector from summing to one
/// before sampling refuses it.
pub const DISTRIBUTION: f64 = 1e-8;

/// Branches with probability below this are dropped from measurement results.
pub const NEGLIGIBLE: f64 = 1e-14;
