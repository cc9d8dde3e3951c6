//! Lifting an m-dimensional diagram to dimension m+1.
//!
//! Surface i of the lift bounds the prism of surface i's closed interior
//! over an interval along the new axis. The intervals are staggered so
//! that every two overlap but no two share an endpoint facet: on a new
//! axis of length 2n+2, surface i (0-based) occupies cells i+2 ..= n+i+1.
//! Every pair of intervals overlaps in at least one cell and each
//! difference is nonempty, which is what makes restrictions of the lift
//! reconnect regions that were disconnected downstairs.

use super::GridDiagram;
use crate::{check_cell_budget, Error, Result};

impl GridDiagram {
    /// Lift to dimension m+1. The input must validate; the output is
    /// validated, with one refine-and-retry attempt before giving up.
    pub fn lift_prism(&self) -> Result<GridDiagram> {
        if !self.validate().passed() {
            return Err(Error::Precondition(
                "lift input must pass grid validation".into(),
            ));
        }
        let mut input = self.clone();
        for attempt in 0..2 {
            let lifted = input.lift_once()?;
            let report = lifted.validate();
            if report.passed() {
                return Ok(lifted);
            }
            if attempt == 1 {
                return Err(Error::Construction(format!(
                    "lift failed validation even after refining: {}",
                    report.first_failure().map(|c| c.name).unwrap_or("unknown")
                )));
            }
            input = input.refine()?;
        }
        unreachable!()
    }

    fn lift_once(&self) -> Result<GridDiagram> {
        let n = self.surface_count();
        let height = 2 * n + 2;
        let mut shape = self.shape.clone();
        shape.push(height);
        let total: usize = shape.iter().product();
        check_cell_budget(total)?;
        let all_ext = if n == 0 { 0 } else { (1u32 << n) - 1 };

        // covers[t] = bitmask of surfaces whose slab covers layer t.
        let mut covers = vec![0u32; height];
        for (t, c) in covers.iter_mut().enumerate() {
            for i in 0..n {
                if t >= i + 2 && t <= n + i + 1 {
                    *c |= 1 << i;
                }
            }
        }

        // The new axis is last, so the lift of old cell i occupies the
        // contiguous block i*height .. (i+1)*height.
        let mut cells = vec![all_ext; total];
        for cell in 0..self.cells.len() {
            let interior = !self.cells[cell] & all_ext;
            for (t, &cover) in covers.iter().enumerate() {
                // Interior of lifted surface i at (x, t) iff x is interior
                // to i downstairs and t lies in i's slab.
                cells[cell * height + t] = all_ext & !(interior & cover);
            }
        }
        GridDiagram::new(shape, n, cells)
    }
}
