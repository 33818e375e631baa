//! Exact statevector engine over small party-labeled qubit registers.
//!
//! Qubit ordering: register position 0 is the most significant bit of the
//! amplitude index. All states are stored normalized; every operation
//! returns a new value.

mod density;
mod gate;
mod measure;
mod state;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use density::DensityMatrix;
pub use gate::Gate;
pub use measure::{sample_branch, Basis, BellState, MeasurementBranch};
pub use state::StateVector;

/// Which lab a qubit lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Party {
    Alice,
    Bob,
    BlackBox,
}

impl fmt::Display for Party {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Party::Alice => "alice",
            Party::Bob => "bob",
            Party::BlackBox => "blackbox",
        };
        f.write_str(s)
    }
}

/// A qubit label. Two labels with the same `index` conflict regardless of owner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QubitId {
    pub index: usize,
    pub owner: Party,
}

impl QubitId {
    pub const fn new(index: usize, owner: Party) -> Self {
        QubitId { index, owner }
    }

    pub const fn alice(index: usize) -> Self {
        QubitId::new(index, Party::Alice)
    }

    pub const fn bob(index: usize) -> Self {
        QubitId::new(index, Party::Bob)
    }
}

impl fmt::Display for QubitId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.owner, self.index)
    }
}
