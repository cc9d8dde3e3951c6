//! Generalized Venn diagrams in dimension m >= 2: exact combinatorial
//! representations, constructions, and decision procedures.
//!
//! Two concrete diagram models are provided:
//!
//! * [`CombinatorialMap`] — an exact dart-based encoding of an arrangement
//!   of closed curves in the plane (rotation system plus edge pairing),
//!   supporting face tracing, curve deletion, and edge counting.
//! * [`GridDiagram`] — an m-dimensional array of cells labeled by sign
//!   vectors; surfaces are the implicit boundaries between cells that
//!   differ in one bit. Grids support subset restriction, intersection
//!   loci, edge counting, prism lifting to dimension m+1, and projection
//!   onto a surface.
//!
//! The [`analysis`] module decides Venn-ness, simplicity, and (full)
//! reducibility over either model and checks the classical edge-count and
//! dimension bounds. The [`numerics`] module certifies the exact-rational
//! edge-bound polynomial, its defining linear system, the edge recurrence,
//! and a determinant identity.
//!
//! Surfaces are indexed `0..n` throughout the library; file formats and
//! command-line output use 1-based ids.

pub mod analysis;
pub mod census;
pub mod complex;
pub mod construct;
pub mod grid;
pub mod map;
pub mod numerics;
pub mod sign;
pub mod subset;
mod validate;

pub use census::{region_census, Census, RegionComplex};
pub use complex::LabeledComplex;
pub use grid::GridDiagram;
pub use map::CombinatorialMap;
pub use sign::SignVector;
pub use validate::{Check, ValidationReport};

use thiserror::Error;

/// Errors shared across the diagram models and analyses.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Cell-count cap for grid allocations, overridable via `VENN_MAX_CELLS`.
pub fn max_cells() -> usize {
    std::env::var("VENN_MAX_CELLS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(64_000_000)
}

pub(crate) fn check_cell_budget(cells: usize) -> Result<()> {
    let cap = max_cells();
    if cells > cap {
        return Err(Error::Budget(format!(
            "{cells} cells exceed the cap of {cap} (set VENN_MAX_CELLS to raise)"
        )));
    }
    Ok(())
}
