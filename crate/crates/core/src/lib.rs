//! Exact simulation of remotely applying a single-qubit unitary held by
//! Alice to a qubit held by Bob, using shared entanglement, local
//! operations and classical communication.
//!
//! * [`qcore`]: statevector engine with party-labeled registers.
//! * [`opsets`]: SU(2) operator families that admit cheap remote implementation.
//! * [`protocols`]: the protocols themselves, with resource ledgers.
//! * [`bloch`]: Bloch vectors and the restoration identity.
//! * [`cli`]: text formats and the command-line front end.

pub mod bloch;
pub mod cli;
pub mod error;
pub mod mat2;
pub mod opsets;
pub mod protocols;
pub mod qcore;
pub mod random;
pub mod tolerance;
pub mod verify;

pub use error::{Error, Result};
