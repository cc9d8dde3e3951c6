//! Surface intersections, edge counting, and projection onto a surface.
//!
//! All three operations walk codimension-k grid faces. A codimension-k
//! face is identified by its base cell and the k axes it spans; the 2^k
//! cells around it decide membership:
//!
//! * a face belongs to the intersection locus of k surfaces when the
//!   surrounding block realizes all 2^k combinations of those bits;
//! * facets of one surface are adjacent through a shared codimension-2
//!   face, except where that face carries a transversal crossing with
//!   another surface, which is exactly where edges break.

use std::collections::HashMap;

use super::{axis_subsets, BlockWalker, GridDiagram, Walker};
use crate::census::UnionFind;
use crate::complex::LabeledComplex;
use crate::subset::{complement, subsets_of_size};
use crate::{Error, Result};

impl GridDiagram {
    /// The locus S_{i1} ∩ ... ∩ S_{ik} as a labeled complex of
    /// codimension-k grid faces. Labels carry the sign over the other
    /// surfaces. For k greater than the dimension the locus is empty.
    pub fn intersection_locus(&self, surfaces: &[usize]) -> Result<LabeledComplex> {
        let k = surfaces.len();
        if k < 2 {
            return Err(Error::InvalidArgument(
                "intersection locus needs at least two surfaces".into(),
            ));
        }
        if surfaces.windows(2).any(|w| w[0] >= w[1]) || surfaces.iter().any(|&s| s >= self.n) {
            return Err(Error::InvalidArgument(
                "surfaces must be ascending and in range".into(),
            ));
        }
        let m = self.dimension();
        let others = complement(self.n, surfaces);
        if k > m {
            return LabeledComplex::new(m, vec![], vec![]);
        }

        // Collect locus cells: (base, axes-subset id).
        let axes_sets: Vec<Vec<usize>> = subsets_of_size(m, k).collect();
        let mut ids: HashMap<(usize, u16), u32> = HashMap::new();
        let mut labels = vec![];
        for (set_id, axes) in axes_sets.iter().enumerate() {
            let mut blocks = BlockWalker::new(&self.shape, &self.strides, axes);
            while let Some(base) = blocks.next_base() {
                if self.block_realizes_all(base, &blocks.offsets, surfaces) {
                    ids.insert((base, set_id as u16), labels.len() as u32);
                    labels.push(self.label(base).restrict(&others));
                }
            }
        }

        // Adjacency through shared codimension-(k+1) faces.
        let mut edges = vec![];
        if k < m {
            for big_axes in subsets_of_size(m, k + 1) {
                let mut blocks = BlockWalker::new(&self.shape, &self.strides, &big_axes);
                while let Some(base) = blocks.next_base() {
                    let mut incident: Vec<u32> = vec![];
                    for (drop_pos, &dropped) in big_axes.iter().enumerate() {
                        let sub: Vec<usize> = big_axes
                            .iter()
                            .enumerate()
                            .filter(|&(p, _)| p != drop_pos)
                            .map(|(_, &a)| a)
                            .collect();
                        let set_id = axes_sets
                            .iter()
                            .position(|s| *s == sub)
                            .expect("subset of axes") as u16;
                        for cand in [base, base + self.strides[dropped]] {
                            if let Some(&id) = ids.get(&(cand, set_id)) {
                                incident.push(id);
                            }
                        }
                    }
                    for w in 1..incident.len() {
                        edges.push((incident[0], incident[w]));
                    }
                }
            }
        }
        LabeledComplex::new(m, labels, edges)
    }

    /// Number of connected pieces of the locus.
    pub fn intersection_components(&self, surfaces: &[usize]) -> Result<usize> {
        let complex = self.intersection_locus(surfaces)?;
        let mut uf = UnionFind::new(complex.labels().len());
        for &(a, b) in complex.edges() {
            uf.union(a as usize, b as usize);
        }
        Ok(uf.component_count())
    }

    /// Edge count e_V(S_i): connected pieces of surface i's facet graph,
    /// with adjacencies severed at transversal crossings. A surface with
    /// no crossings counts one edge.
    pub fn edge_components(&self, surface: usize) -> usize {
        assert!(surface < self.n, "unknown surface {surface}");
        let m = self.dimension();
        // Facet slots: cell * m + axis addresses the facet between the
        // cell and its +axis neighbor.
        let mut facet_id = vec![u32::MAX; self.cells.len() * m];
        let mut facets = 0u32;
        let bit = 1u32 << surface;
        let mut w = Walker::new(&self.shape);
        loop {
            for (axis, &s) in self.strides.iter().enumerate() {
                if w.coords[axis] + 1 < self.shape[axis]
                    && self.cells[w.index] ^ self.cells[w.index + s] == bit
                {
                    facet_id[w.index * m + axis] = facets;
                    facets += 1;
                }
            }
            if !w.advance(&self.shape, &self.strides) {
                break;
            }
        }
        if facets == 0 {
            return 0;
        }

        let mut uf = UnionFind::new(facets as usize);
        for axes in axis_subsets(m) {
            if axes.len() != 2 {
                continue;
            }
            let (a, b) = (axes[0], axes[1]);
            let (sa, sb) = (self.strides[a], self.strides[b]);
            let mut blocks = BlockWalker::new(&self.shape, &self.strides, &axes);
            while let Some(base) = blocks.next_base() {
                let quad = [
                    self.cells[base],
                    self.cells[base + sa],
                    self.cells[base + sb],
                    self.cells[base + sa + sb],
                ];
                let varying = quad[1] ^ quad[0] | quad[2] ^ quad[0] | quad[3] ^ quad[0];
                if varying & bit == 0 {
                    continue;
                }
                if quad_is_crossing(&quad, surface, varying, self.n) {
                    continue; // edges break here
                }
                let mut members: Vec<u32> = vec![];
                for (cell, axis) in [(base, a), (base + sb, a), (base, b), (base + sa, b)] {
                    let id = facet_id[cell * m + axis];
                    if id != u32::MAX {
                        members.push(id);
                    }
                }
                for w in 1..members.len() {
                    uf.union(members[0] as usize, members[w] as usize);
                }
            }
        }
        uf.component_count()
    }

    /// The diagram induced on surface i by the other surfaces: cells are
    /// facets of i labeled by the common sign over the remaining bits,
    /// adjacent through shared codimension-2 faces.
    pub fn project_onto_surface(&self, surface: usize) -> Result<LabeledComplex> {
        if surface >= self.n {
            return Err(Error::InvalidArgument(format!("unknown surface {surface}")));
        }
        if self.n < 2 {
            return Err(Error::Precondition(
                "projection needs at least two surfaces".into(),
            ));
        }
        let m = self.dimension();
        let others = complement(self.n, &[surface]);
        let bit = 1u32 << surface;
        let mut facet_id = vec![u32::MAX; self.cells.len() * m];
        let mut labels = vec![];
        let mut w = Walker::new(&self.shape);
        loop {
            for (axis, &s) in self.strides.iter().enumerate() {
                if w.coords[axis] + 1 < self.shape[axis]
                    && self.cells[w.index] ^ self.cells[w.index + s] == bit
                {
                    facet_id[w.index * m + axis] = labels.len() as u32;
                    labels.push(self.label(w.index).restrict(&others));
                }
            }
            if !w.advance(&self.shape, &self.strides) {
                break;
            }
        }

        let mut edges = vec![];
        for axes in axis_subsets(m) {
            if axes.len() != 2 {
                continue;
            }
            let (a, b) = (axes[0], axes[1]);
            let (sa, sb) = (self.strides[a], self.strides[b]);
            let mut blocks = BlockWalker::new(&self.shape, &self.strides, &axes);
            while let Some(base) = blocks.next_base() {
                let mut members: Vec<u32> = vec![];
                for (cell, axis) in [(base, a), (base + sb, a), (base, b), (base + sa, b)] {
                    let id = facet_id[cell * m + axis];
                    if id != u32::MAX {
                        members.push(id);
                    }
                }
                for w in 1..members.len() {
                    edges.push((members[0], members[w]));
                }
            }
        }
        LabeledComplex::new(m - 1, labels, edges)
    }

    fn block_realizes_all(&self, base: usize, offsets: &[usize], surfaces: &[usize]) -> bool {
        let k = surfaces.len();
        let project = |cell: u32| -> u32 {
            let mut v = 0u32;
            for (pos, &s) in surfaces.iter().enumerate() {
                v |= (cell >> s & 1) << pos;
            }
            v
        };
        let mut seen = 1u32 << project(self.cells[base]);
        for &off in offsets {
            seen |= 1 << project(self.cells[base + off]);
        }
        seen == (1u32 << (1usize << k)) - 1
    }
}

fn quad_is_crossing(quad: &[u32; 4], surface: usize, varying: u32, n: usize) -> bool {
    let rest = varying & !(1 << surface);
    if rest == 0 {
        return false;
    }
    for j in 0..n {
        if rest >> j & 1 == 0 {
            continue;
        }
        let mut seen = [false; 4];
        for &c in quad {
            seen[((c >> surface & 1) | (c >> j & 1) << 1) as usize] = true;
        }
        if seen.iter().all(|&s| s) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::region_census;

    fn tiny(shape: &[usize], n: usize, cells: &[u32]) -> GridDiagram {
        GridDiagram::new(shape.to_vec(), n, cells.to_vec()).unwrap()
    }

    /// Two overlapping squares on a 5x5 grid (a 2D "two circles").
    fn two_squares() -> GridDiagram {
        // Surface 0 spans rows 1..3, cols 1..3; surface 1 rows 2..4, cols 2..4.
        #[rustfmt::skip]
        let cells = vec![
            3, 3, 3, 3, 3,
            3, 2, 2, 3, 3,
            3, 2, 0, 1, 3,
            3, 3, 1, 1, 3,
            3, 3, 3, 3, 3,
        ];
        tiny(&[5, 5], 2, &cells)
    }

    #[test]
    fn two_squares_is_a_venn_pair() {
        let g = two_squares();
        assert!(g.validate().passed(), "{}", g.validate());
        assert!(g.is_simple());
        assert!(region_census(&g).is_venn(2));
    }

    #[test]
    fn crossing_points_of_two_squares() {
        let g = two_squares();
        assert_eq!(g.intersection_components(&[0, 1]).unwrap(), 2);
    }

    #[test]
    fn edge_counts_of_two_squares() {
        let g = two_squares();
        assert_eq!(g.edge_components(0), 2);
        assert_eq!(g.edge_components(1), 2);
        let counts = g.edge_counts();
        assert_eq!(counts.total, 4);
        assert_eq!(counts.regions, 4);
    }

    #[test]
    fn crossing_free_surface_counts_one_edge() {
        #[rustfmt::skip]
        let cells = vec![
            1, 1, 1, 1,
            1, 0, 0, 1,
            1, 0, 0, 1,
            1, 1, 1, 1,
        ];
        let g = tiny(&[4, 4], 1, &cells);
        assert_eq!(g.edge_components(0), 1);
    }

    #[test]
    fn projection_of_two_squares_onto_surface_one() {
        let g = two_squares();
        let complex = g.project_onto_surface(1).unwrap();
        assert_eq!(complex.dimension(), 1);
        assert_eq!(complex.surface_count(), 1);
        let census = region_census(&complex);
        // Surface 1 is split by surface 0 into an inside arc and an
        // outside arc: each label once.
        assert_eq!(census.label_count(), 2);
        assert_eq!(census.total_components(), 2);
    }
}
