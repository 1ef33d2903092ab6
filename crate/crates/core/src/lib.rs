//! Three qubits decaying under independent thermal reservoirs.
//!
//! The GHZ and W initial states are evolved with the thermal Kraus channel;
//! along the trajectory we track the tripartite negativity, Svetlichny and
//! WWZB Bell violations and the average teleportation fidelity, and locate
//! the times at which each of them crosses its classical threshold.

pub mod analysis;
pub mod bell;
pub mod channel;
pub mod error;
pub mod measures;
pub mod qmat;
pub mod states;
pub mod teleport;

pub use error::{Error, Result};
