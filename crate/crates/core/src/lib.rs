//! Cycle decompositions of the toroidal grid `C_m □ C_n`.
//!
//! Every constructor returns a [`Decomposition`] that has already passed
//! [`validate`]. Files use the format in [`format`].

pub mod blocks;
pub mod cli;
mod cycle;
mod decomposition;
mod error;
pub mod format;
pub mod four_phase;
mod graph;
pub mod render;
pub mod search;
pub mod special;
mod validate;

pub use cycle::CycleWalk;
pub use decomposition::Decomposition;
pub use error::{Error, Result};
pub use graph::{canonical_edge, Edge, Orientation, TorusDims, Vertex};
pub use validate::{validate, ClassCheck, CycleDefect, SharedEdge, ValidationReport};

/// Validate a freshly built decomposition, turning failure into an internal error.
pub(crate) fn checked(d: Decomposition) -> Result<Decomposition> {
    let report = validate(&d);
    match report.first_failure() {
        None => Ok(d),
        Some(reason) => Err(Error::Internal(format!(
            "construction on {} failed validation: {reason}",
            d.dims()
        ))),
    }
}
