//! m-dimensional grid diagrams.
//!
//! A grid stores one sign vector per cell; surface i is the set of facets
//! between cells whose labels differ in bit i. All counting semantics
//! assume clean position: face-adjacent cells differ in at most one bit,
//! and the 2^k cells around a codimension-k grid face differ in at most k
//! bits. Diagrams violating this are rejected and must be re-rasterized
//! at a higher resolution.

mod lift;
mod locus;

use crate::census::{census_with, region_census, Census, RegionComplex};
use crate::sign::{SignVector, MAX_SURFACES};
use crate::validate::ValidationReport;
use crate::{check_cell_budget, Error, Result};

pub use crate::map::EdgeCounts;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridDiagram {
    shape: Vec<usize>,
    n: usize,
    /// Row-major, last axis fastest; one label bitmask per cell.
    cells: Vec<u32>,
    strides: Vec<usize>,
}

impl GridDiagram {
    pub fn new(shape: Vec<usize>, n: usize, cells: Vec<u32>) -> Result<Self> {
        if shape.len() < 2 {
            return Err(Error::InvalidGrid(format!(
                "dimension must be at least 2, got {}",
                shape.len()
            )));
        }
        if n > MAX_SURFACES {
            return Err(Error::InvalidGrid(format!(
                "at most {MAX_SURFACES} surfaces supported, got {n}"
            )));
        }
        if shape.iter().any(|&d| d < 2) {
            return Err(Error::InvalidGrid("every axis needs at least 2 cells".into()));
        }
        let expected: usize = shape.iter().product();
        check_cell_budget(expected)?;
        if cells.len() != expected {
            return Err(Error::InvalidGrid(format!(
                "shape {:?} wants {expected} cells, got {}",
                shape,
                cells.len()
            )));
        }
        let limit = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        if let Some(bad) = cells.iter().position(|&c| c > limit) {
            return Err(Error::InvalidGrid(format!(
                "cell {bad} has bits beyond the {n} surfaces"
            )));
        }
        let strides = strides_of(&shape);
        Ok(Self {
            shape,
            n,
            cells,
            strides,
        })
    }

    pub fn dimension(&self) -> usize {
        self.shape.len()
    }

    pub fn surface_count(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn cell_data(&self) -> &[u32] {
        &self.cells
    }

    pub fn label(&self, cell: usize) -> SignVector {
        SignVector::new(self.cells[cell], self.n)
    }

    pub fn index_of(&self, coords: &[usize]) -> usize {
        coords
            .iter()
            .zip(&self.strides)
            .map(|(c, s)| c * s)
            .sum()
    }

    pub fn coords_of(&self, mut cell: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.shape.len());
        for &s in &self.strides {
            out.push(cell / s);
            cell %= s;
        }
        out
    }

    /// Verify border-exterior and clean-position invariants.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let all_ext = if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        };

        let mut border_bad = None;
        let mut walker = Walker::new(&self.shape);
        loop {
            let on_border = walker
                .coords
                .iter()
                .zip(&self.shape)
                .any(|(&c, &d)| c == 0 || c == d - 1);
            if on_border && self.cells[walker.index] != all_ext {
                border_bad = Some(format!(
                    "border cell {:?} is not all-exterior",
                    walker.coords
                ));
                break;
            }
            if !walker.advance(&self.shape, &self.strides) {
                break;
            }
        }
        report.record("border_exterior", border_bad.is_none(), border_bad);

        let mut clean_bad = None;
        'outer: for axes in axis_subsets(self.dimension()) {
            let k = axes.len();
            let mut blocks = BlockWalker::new(&self.shape, &self.strides, &axes);
            while let Some(base) = blocks.next_base() {
                let base_label = self.cells[base];
                let mut varying = 0u32;
                for &off in &blocks.offsets {
                    varying |= self.cells[base + off] ^ base_label;
                }
                if varying.count_ones() as usize > k {
                    clean_bad = Some(format!(
                        "codimension-{k} face at cell {:?} along axes {:?} varies in {} bits",
                        self.coords_of(base),
                        axes,
                        varying.count_ones()
                    ));
                    break 'outer;
                }
            }
        }
        report.record("clean_position", clean_bad.is_none(), clean_bad);
        report
    }

    /// Clean position plus strict transversality of every pairwise locus:
    /// wherever two surfaces both vary around a codimension-2 face, all
    /// four bit combinations must be realized; a surface may not pinch
    /// diagonally through a codimension-2 face either.
    pub fn is_simple(&self) -> bool {
        self.validate().passed() && self.first_transversality_failure().is_none()
    }

    /// First codimension-2 face with a tangential touch, with the
    /// offending surfaces.
    pub fn first_transversality_failure(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        for axes in axis_subsets(self.dimension()) {
            if axes.len() != 2 {
                continue;
            }
            let mut blocks = BlockWalker::new(&self.shape, &self.strides, &axes);
            while let Some(base) = blocks.next_base() {
                let quad = [
                    self.cells[base],
                    self.cells[base + blocks.offsets[0]],
                    self.cells[base + blocks.offsets[1]],
                    self.cells[base + blocks.offsets[2]],
                ];
                let varying = quad[1] ^ quad[0] | quad[2] ^ quad[0] | quad[3] ^ quad[0];
                match varying.count_ones() {
                    0 => {}
                    1 => {
                        // Diagonal split means the surface touches itself here.
                        let bit = varying.trailing_zeros();
                        let v: Vec<bool> = quad.iter().map(|&c| c >> bit & 1 == 1).collect();
                        if v[0] == v[3] && v[1] == v[2] && v[0] != v[1] {
                            return Some((
                                self.coords_of(base),
                                vec![bit as usize],
                            ));
                        }
                    }
                    2 => {
                        let i = varying.trailing_zeros();
                        let j = 31 - varying.leading_zeros();
                        let mut seen = [false; 4];
                        for &c in &quad {
                            seen[((c >> i & 1) | (c >> j & 1) << 1) as usize] = true;
                        }
                        if seen.iter().any(|&s| !s) {
                            return Some((
                                self.coords_of(base),
                                vec![i as usize, j as usize],
                            ));
                        }
                    }
                    _ => {
                        // Already a clean-position failure; report it too.
                        return Some((
                            self.coords_of(base),
                            (0..self.n).filter(|&b| varying >> b & 1 == 1).collect(),
                        ));
                    }
                }
            }
        }
        None
    }

    pub fn region_census(&self) -> Census {
        region_census(self)
    }

    /// Census of the diagram restricted to a subset of surfaces, without
    /// materializing the restricted grid.
    pub fn census_restricted(&self, keep: &[usize]) -> Census {
        census_with(self, |s| s.restrict(keep))
    }

    /// Keep only the given surfaces (ascending), re-packing labels.
    pub fn restrict(&self, keep: &[usize]) -> Result<GridDiagram> {
        if keep.windows(2).any(|w| w[0] >= w[1]) || keep.iter().any(|&s| s >= self.n) {
            return Err(Error::InvalidArgument(
                "kept surfaces must be ascending and in range".into(),
            ));
        }
        let cells = self
            .cells
            .iter()
            .map(|&c| {
                let mut out = 0u32;
                for (j, &s) in keep.iter().enumerate() {
                    out |= (c >> s & 1) << j;
                }
                out
            })
            .collect();
        GridDiagram::new(self.shape.clone(), keep.len(), cells)
    }

    /// Double the resolution along every axis by cell replication.
    pub fn refine(&self) -> Result<GridDiagram> {
        let shape: Vec<usize> = self.shape.iter().map(|&d| d * 2).collect();
        let total: usize = shape.iter().product();
        check_cell_budget(total)?;
        let strides = strides_of(&shape);
        let mut cells = vec![0u32; total];
        let mut walker = Walker::new(&shape);
        loop {
            let src: usize = walker
                .coords
                .iter()
                .zip(&self.strides)
                .map(|(&c, s)| (c / 2) * s)
                .sum();
            cells[walker.index] = self.cells[src];
            if !walker.advance(&shape, &strides) {
                break;
            }
        }
        GridDiagram::new(shape, self.n, cells)
    }

    /// Drop every axis slab identical to its predecessor. This is the
    /// exact inverse direction of [`refine`](Self::refine): the census,
    /// cleanliness, loci, and edge counts are all invariant, and lifting
    /// a compacted grid is far cheaper.
    pub fn compact(&self) -> GridDiagram {
        let mut current = self.clone();
        for axis in 0..self.dimension() {
            current = current.compact_axis(axis);
        }
        current
    }

    fn compact_axis(&self, axis: usize) -> GridDiagram {
        let d = self.shape[axis];
        let mut keep = vec![true; d];
        for p in 1..d {
            keep[p] = !self.slabs_equal(axis, p - 1, p);
        }
        if keep.iter().all(|&k| k) {
            return self.clone();
        }
        let positions: Vec<usize> = (0..d).filter(|&p| keep[p]).collect();
        let mut shape = self.shape.clone();
        shape[axis] = positions.len();
        let strides = strides_of(&shape);
        let mut cells = vec![0u32; shape.iter().product()];
        let mut walker = Walker::new(&shape);
        loop {
            let mut src = 0usize;
            for (a, (&c, s)) in walker.coords.iter().zip(&self.strides).enumerate() {
                src += if a == axis { positions[c] * s } else { c * s };
            }
            cells[walker.index] = self.cells[src];
            if !walker.advance(&shape, &strides) {
                break;
            }
        }
        GridDiagram::new(shape, self.n, cells).expect("compaction preserves validity")
    }

    fn slabs_equal(&self, axis: usize, p: usize, q: usize) -> bool {
        let mut shape = self.shape.clone();
        shape[axis] = 1;
        let strides = strides_of(&shape);
        let mut walker = Walker::new(&shape);
        loop {
            let at = |pos: usize| -> u32 {
                let mut idx = 0usize;
                for (a, (&c, s)) in walker.coords.iter().zip(&self.strides).enumerate() {
                    idx += if a == axis { pos * s } else { c * s };
                }
                self.cells[idx]
            };
            if at(p) != at(q) {
                return false;
            }
            if !walker.advance(&shape, &strides) {
                return true;
            }
        }
    }

    /// Per-surface and total edge counts plus the region count.
    pub fn edge_counts(&self) -> EdgeCounts {
        let per_curve: Vec<usize> = (0..self.n).map(|i| self.edge_components(i)).collect();
        let total = per_curve.iter().sum();
        let regions = self.region_census().total_components();
        EdgeCounts {
            per_curve,
            total,
            regions,
        }
    }
}

impl RegionComplex for GridDiagram {
    fn cell_count(&self) -> usize {
        self.cells.len()
    }

    fn cell_label(&self, cell: usize) -> SignVector {
        self.label(cell)
    }

    fn for_each_adjacency(&self, f: &mut dyn FnMut(usize, usize)) {
        let mut walker = Walker::new(&self.shape);
        loop {
            for (axis, &s) in self.strides.iter().enumerate() {
                if walker.coords[axis] + 1 < self.shape[axis] {
                    f(walker.index, walker.index + s);
                }
            }
            if !walker.advance(&self.shape, &self.strides) {
                break;
            }
        }
    }
}

pub(crate) fn strides_of(shape: &[usize]) -> Vec<usize> {
    let mut strides = vec![1usize; shape.len()];
    for a in (0..shape.len().saturating_sub(1)).rev() {
        strides[a] = strides[a + 1] * shape[a + 1];
    }
    strides
}

/// Odometer over all cells, maintaining coordinates and flat index.
pub(crate) struct Walker {
    pub coords: Vec<usize>,
    pub index: usize,
}

impl Walker {
    pub fn new(shape: &[usize]) -> Self {
        Self {
            coords: vec![0; shape.len()],
            index: 0,
        }
    }

    pub fn advance(&mut self, shape: &[usize], strides: &[usize]) -> bool {
        for a in (0..shape.len()).rev() {
            if self.coords[a] + 1 < shape[a] {
                self.coords[a] += 1;
                self.index += strides[a];
                return true;
            }
            self.index -= self.coords[a] * strides[a];
            self.coords[a] = 0;
        }
        false
    }
}

/// Iterate base cells of codimension-k blocks spanned by `axes`,
/// exposing the 2^k - 1 nonzero in-block offsets.
pub(crate) struct BlockWalker {
    shape_limit: Vec<usize>,
    strides: Vec<usize>,
    walker: Walker,
    pub offsets: Vec<usize>,
    started: bool,
}

impl BlockWalker {
    pub fn new(shape: &[usize], strides: &[usize], axes: &[usize]) -> Self {
        let mut shape_limit = shape.to_vec();
        for &a in axes {
            shape_limit[a] -= 1; // base cells must leave room for +1
        }
        let k = axes.len();
        let mut offsets = Vec::with_capacity((1 << k) - 1);
        for mask in 1..(1usize << k) {
            let mut off = 0usize;
            for (bit, &a) in axes.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    off += strides[a];
                }
            }
            offsets.push(off);
        }
        Self {
            shape_limit,
            strides: strides.to_vec(),
            walker: Walker::new(shape),
            offsets,
            started: false,
        }
    }

    pub fn next_base(&mut self) -> Option<usize> {
        if self.shape_limit.iter().any(|&d| d == 0) {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.walker.index);
        }
        self.walker
            .advance(&self.shape_limit, &self.strides)
            .then_some(self.walker.index)
    }
}

/// All nonempty subsets of the axes, by size then lexicographic.
pub(crate) fn axis_subsets(m: usize) -> Vec<Vec<usize>> {
    crate::subset::subsets_by_size(m)
        .filter(|s| !s.is_empty())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn tiny_grid(shape: &[usize], n: usize, rows: &[u32]) -> GridDiagram {
        GridDiagram::new(shape.to_vec(), n, rows.to_vec()).unwrap()
    }

    /// 4x4 one-surface grid: a 2x2 interior block.
    fn one_square() -> GridDiagram {
        #[rustfmt::skip]
        let cells = vec![
            1, 1, 1, 1,
            1, 0, 0, 1,
            1, 0, 0, 1,
            1, 1, 1, 1,
        ];
        tiny_grid(&[4, 4], 1, &cells)
    }

    #[test]
    fn square_grid_passes_validation() {
        let g = one_square();
        assert!(g.validate().passed());
        let census = g.region_census();
        assert_eq!(census.total_components(), 2);
        assert!(census.is_venn(1));
        assert!(g.is_simple());
    }

    #[test]
    fn interior_border_cell_fails() {
        #[rustfmt::skip]
        let cells = vec![
            1, 1, 1,
            1, 0, 1,
            1, 1, 0,
        ];
        let g = tiny_grid(&[3, 3], 1, &cells);
        let report = g.validate();
        assert!(!report.passed());
        assert_eq!(report.first_failure().unwrap().name, "border_exterior");
    }

    #[test]
    fn double_bit_flip_across_a_facet_fails_clean_position() {
        #[rustfmt::skip]
        let cells = vec![
            3, 3, 3, 3,
            3, 0, 3, 3,
            3, 3, 3, 3,
        ];
        let g = tiny_grid(&[3, 4], 2, &cells);
        let report = g.validate();
        assert!(!report.passed());
        assert_eq!(report.first_failure().unwrap().name, "clean_position");
    }

    #[test]
    fn diagonal_pinch_is_not_simple() {
        #[rustfmt::skip]
        let cells = vec![
            1, 1, 1, 1,
            1, 0, 1, 1,
            1, 1, 0, 1,
            1, 1, 1, 1,
        ];
        let g = tiny_grid(&[4, 4], 1, &cells);
        assert!(g.validate().passed());
        assert!(!g.is_simple());
    }

    #[test]
    fn refine_preserves_census_and_compact_undoes_it() {
        let g = one_square();
        let refined = g.refine().unwrap();
        assert!(refined.validate().passed());
        assert_eq!(refined.region_census(), g.region_census());
        assert_eq!(refined.shape(), &[8, 8]);
        // Compaction folds all duplicate slabs, including the ones the
        // fixture already had, so compare fixed points.
        assert_eq!(refined.compact(), g.compact());
        assert_eq!(g.compact().region_census(), g.region_census());
        assert!(g.compact().validate().passed());
    }

    #[test]
    fn restrict_to_nothing_leaves_one_region() {
        let g = one_square();
        let empty = g.restrict(&[]).unwrap();
        let census = empty.region_census();
        assert_eq!(census.total_components(), 1);
        assert!(census.is_venn(0));
    }

    #[test]
    fn masked_census_matches_restricted_census() {
        #[rustfmt::skip]
        let cells = vec![
            3, 3, 3, 3, 3,
            3, 2, 2, 3, 3,
            3, 2, 0, 1, 3,
            3, 3, 1, 1, 3,
            3, 3, 3, 3, 3,
        ];
        let g = tiny_grid(&[5, 5], 2, &cells);
        for keep in [vec![], vec![0], vec![1], vec![0, 1]] {
            assert_eq!(
                g.census_restricted(&keep),
                g.restrict(&keep).unwrap().region_census(),
                "masked census diverges for keep = {keep:?}"
            );
        }
    }
}
