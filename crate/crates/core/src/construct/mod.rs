//! Diagram constructors: rasterized curve families and built-in maps.

mod builtin;
mod edwards;
mod trace;

pub use builtin::builtin_map;
pub use edwards::{builtin_grid, edwards_grid, edwards_interior, rasterize, EdwardsParams};
pub use trace::trace_map;
