//! Tracing a clean, simple 2D grid into a combinatorial map.
//!
//! Vertices are the transversal crossing corners; arcs are walked facet
//! by facet between them. The rotation at a crossing lists the four
//! outgoing directions counterclockwise (+x, +y, -x, -y with axis 0 as x
//! and axis 1 as y), and the outer dart is the northbound dart through
//! the leftmost x-facet, whose left side provably lies in the unbounded
//! face.

use std::collections::HashMap;

use crate::grid::GridDiagram;
use crate::map::{assign_parents, CombinatorialMap};
use crate::{Error, Result};

/// A facet between cell `base` and its +`axis` neighbor.
type Facet = (usize, u8);

pub fn trace_map(grid: &GridDiagram) -> Result<CombinatorialMap> {
    if grid.dimension() != 2 {
        return Err(Error::Precondition("tracing requires a 2D grid".into()));
    }
    if !grid.validate().passed() {
        return Err(Error::Precondition("tracing requires a valid grid".into()));
    }
    if let Some((at, surfaces)) = grid.first_transversality_failure() {
        return Err(Error::Precondition(format!(
            "tracing requires a simple grid; surfaces {surfaces:?} touch near {at:?}"
        )));
    }
    let tracer = Tracer::new(grid);
    tracer.run()
}

struct Tracer<'a> {
    grid: &'a GridDiagram,
    shape: [usize; 2],
    strides: [usize; 2],
    n: usize,
}

#[derive(Debug)]
struct Arc {
    curve: usize,
    start_corner: usize,
    end_corner: usize,
    start_facet: Facet,
    end_facet: Facet,
    /// Facet crossings with walk heading (axis, positive).
    path: Vec<(Facet, u8, bool)>,
}

impl<'a> Tracer<'a> {
    fn new(grid: &'a GridDiagram) -> Self {
        let shape = [grid.shape()[0], grid.shape()[1]];
        Self {
            grid,
            shape,
            strides: [shape[1], 1],
            n: grid.surface_count(),
        }
    }

    fn cell(&self, idx: usize) -> u32 {
        self.grid.cell_data()[idx]
    }

    fn is_facet(&self, (base, axis): Facet, curve: usize) -> bool {
        let s = self.strides[axis as usize];
        self.cell(base) ^ self.cell(base + s) == 1 << curve
    }

    /// The four facet slots around a corner, counterclockwise from +x.
    fn slots(&self, corner: usize) -> [Facet; 4] {
        let (s0, s1) = (self.strides[0], self.strides[1]);
        [
            (corner + s0, 1),
            (corner + s1, 0),
            (corner, 1),
            (corner, 0),
        ]
    }

    /// Corner endpoints of a facet, in -/+ order along its span axis.
    fn endpoints(&self, (base, axis): Facet) -> Result<[usize; 2]> {
        let span = 1 - axis as usize; // the axis the facet extends along
        let coords = self.grid.coords_of(base);
        if coords[span] == 0 || coords[span] + 1 >= self.shape[span] {
            return Err(Error::Construction(
                "curve facet touches the raster border".into(),
            ));
        }
        Ok([base - self.strides[span], base])
    }

    fn run(&self) -> Result<CombinatorialMap> {
        // Crossing corners.
        let mut vertex_at: HashMap<usize, u32> = HashMap::new();
        let mut vertices_of_curve: Vec<Vec<usize>> = vec![vec![]; self.n];
        for c0 in 0..self.shape[0] - 1 {
            for c1 in 0..self.shape[1] - 1 {
                let base = c0 * self.strides[0] + c1;
                let quad = [
                    self.cell(base),
                    self.cell(base + self.strides[0]),
                    self.cell(base + self.strides[1]),
                    self.cell(base + self.strides[0] + self.strides[1]),
                ];
                let varying = quad[1] ^ quad[0] | quad[2] ^ quad[0] | quad[3] ^ quad[0];
                if varying.count_ones() == 2 {
                    let id = vertex_at.len() as u32;
                    vertex_at.insert(base, id);
                    for b in 0..self.n {
                        if varying >> b & 1 == 1 {
                            vertices_of_curve[b].push(base);
                        }
                    }
                }
            }
        }

        // Walk arcs of crossing curves; collect loops of free ones.
        let mut claimed: HashMap<Facet, ()> = HashMap::new();
        let mut arcs: Vec<Arc> = vec![];
        let mut free_hosts: Vec<(usize, u32)> = vec![];
        for curve in 0..self.n {
            let facets = self.facets_of(curve);
            if facets.is_empty() {
                return Err(Error::Construction(format!(
                    "surface {curve} has no boundary facets"
                )));
            }
            if vertices_of_curve[curve].is_empty() {
                let start = facets[0];
                let loop_len = self.walk_loop(curve, start, &mut claimed)?;
                if loop_len != facets.len() {
                    return Err(Error::Construction(format!(
                        "crossing-free curve {curve} splits into several loops"
                    )));
                }
                let (base, axis) = start;
                let s = self.strides[axis as usize];
                let outside = if self.cell(base) >> curve & 1 == 1 {
                    self.cell(base)
                } else {
                    self.cell(base + s)
                };
                free_hosts.push((curve, outside));
                continue;
            }
            for &v in &vertices_of_curve[curve] {
                for slot in self.slots(v) {
                    if self.is_facet(slot, curve) && !claimed.contains_key(&slot) {
                        arcs.push(self.walk_arc(curve, v, slot, &mut claimed)?);
                    }
                }
            }
            let claimed_count = facets
                .iter()
                .filter(|f| claimed.contains_key(*f))
                .count();
            if claimed_count != facets.len() {
                return Err(Error::Construction(format!(
                    "curve {curve} has facets unreachable from its crossings"
                )));
            }
        }

        // Darts: 2k for the start of arc k, 2k+1 for its end.
        let mut curve_of_dart = vec![0u32; arcs.len() * 2];
        let mut alpha = vec![0u32; arcs.len() * 2];
        let mut dart_of_slot: HashMap<(usize, Facet), usize> = HashMap::new();
        for (k, arc) in arcs.iter().enumerate() {
            let (a, b) = (2 * k, 2 * k + 1);
            curve_of_dart[a] = arc.curve as u32;
            curve_of_dart[b] = arc.curve as u32;
            alpha[a] = b as u32;
            alpha[b] = a as u32;
            dart_of_slot.insert((arc.start_corner, arc.start_facet), a);
            dart_of_slot.insert((arc.end_corner, arc.end_facet), b);
        }
        let mut sigma = vec![0u32; arcs.len() * 2];
        for &corner in vertex_at.keys() {
            let slots = self.slots(corner);
            let darts: Vec<usize> = slots
                .iter()
                .map(|&s| {
                    dart_of_slot.get(&(corner, s)).copied().ok_or_else(|| {
                        Error::Construction(format!(
                            "crossing at cell {:?} is missing an outgoing arc",
                            self.grid.coords_of(corner)
                        ))
                    })
                })
                .collect::<Result<_>>()?;
            for i in 0..4 {
                sigma[darts[i]] = darts[(i + 1) % 4] as u32;
            }
        }

        // Outer dart: northbound crossing of the leftmost x-facet.
        let outer = self.find_outer_dart(&arcs)?;

        let free_curves = assign_parents(
            free_hosts
                .into_iter()
                .map(|(c, mask)| (c, crate::sign::SignVector::new(mask, self.n)))
                .collect(),
        );

        CombinatorialMap::new(self.n, curve_of_dart, alpha, sigma, outer, free_curves)
    }

    fn facets_of(&self, curve: usize) -> Vec<Facet> {
        let mut out = vec![];
        for c0 in 0..self.shape[0] {
            for c1 in 0..self.shape[1] {
                let base = c0 * self.strides[0] + c1;
                if c0 + 1 < self.shape[0] && self.is_facet((base, 0), curve) {
                    out.push((base, 0));
                }
                if c1 + 1 < self.shape[1] && self.is_facet((base, 1), curve) {
                    out.push((base, 1));
                }
            }
        }
        out
    }

    /// Other facet of the same curve at a pass-through corner.
    fn continuation(&self, corner: usize, curve: usize, from: Facet) -> Result<Facet> {
        let mut found = None;
        for slot in self.slots(corner) {
            if slot != from && self.is_facet(slot, curve) {
                if found.is_some() {
                    return Err(Error::Construction(format!(
                        "ambiguous continuation of curve {curve} at cell {:?}",
                        self.grid.coords_of(corner)
                    )));
                }
                found = Some(slot);
            }
        }
        found.ok_or_else(|| {
            Error::Construction(format!(
                "curve {curve} dead-ends at cell {:?}",
                self.grid.coords_of(corner)
            ))
        })
    }

    fn step(&self, prev_corner: usize, facet: Facet) -> Result<(usize, u8, bool)> {
        let ends = self.endpoints(facet)?;
        let span = 1 - facet.1;
        if ends[0] == prev_corner {
            Ok((ends[1], span, true))
        } else if ends[1] == prev_corner {
            Ok((ends[0], span, false))
        } else {
            Err(Error::Construction("walk lost its corner".into()))
        }
    }

    fn walk_arc(
        &self,
        curve: usize,
        start: usize,
        first: Facet,
        claimed: &mut HashMap<Facet, ()>,
    ) -> Result<Arc> {
        let mut path = vec![];
        let mut corner = start;
        let mut facet = first;
        loop {
            let (next, axis, positive) = self.step(corner, facet)?;
            claimed.insert(facet, ());
            path.push((facet, axis, positive));
            if self.is_vertex_corner(next) {
                return Ok(Arc {
                    curve,
                    start_corner: start,
                    end_corner: next,
                    start_facet: first,
                    end_facet: facet,
                    path,
                });
            }
            facet = self.continuation(next, curve, facet)?;
            corner = next;
        }
    }

    fn walk_loop(
        &self,
        curve: usize,
        first: Facet,
        claimed: &mut HashMap<Facet, ()>,
    ) -> Result<usize> {
        // Start from either endpoint; a crossing-free curve never meets a
        // vertex, so the walk must come back around.
        let mut corner = self.endpoints(first)?[0];
        let mut facet = first;
        let mut len = 0usize;
        loop {
            let (next, _, _) = self.step(corner, facet)?;
            claimed.insert(facet, ());
            len += 1;
            if self.is_vertex_corner(next) {
                return Err(Error::Construction(format!(
                    "crossing-free curve {curve} runs into a crossing"
                )));
            }
            facet = self.continuation(next, curve, facet)?;
            corner = next;
            if facet == first {
                return Ok(len);
            }
        }
    }

    fn is_vertex_corner(&self, corner: usize) -> bool {
        let coords = self.grid.coords_of(corner);
        if coords[0] + 1 >= self.shape[0] || coords[1] + 1 >= self.shape[1] {
            return false;
        }
        let quad = [
            self.cell(corner),
            self.cell(corner + self.strides[0]),
            self.cell(corner + self.strides[1]),
            self.cell(corner + self.strides[0] + self.strides[1]),
        ];
        let varying = quad[1] ^ quad[0] | quad[2] ^ quad[0] | quad[3] ^ quad[0];
        varying.count_ones() == 2
    }

    fn find_outer_dart(&self, arcs: &[Arc]) -> Result<Option<usize>> {
        let mut best: Option<((usize, usize), usize)> = None; // (coords of x-facet, dart)
        for (k, arc) in arcs.iter().enumerate() {
            for &((base, axis), span_axis, positive) in &arc.path {
                if axis != 0 {
                    continue; // want facets separating cells along axis 0
                }
                debug_assert_eq!(span_axis, 1);
                let coords = self.grid.coords_of(base);
                let key = (coords[0], coords[1]);
                // Northbound traversal keeps the unbounded side on its
                // left; the southbound walk's reverse dart is the one.
                let dart = if positive { 2 * k } else { 2 * k + 1 };
                if best.as_ref().is_none_or(|(bk, _)| key < *bk) {
                    best = Some((key, dart));
                }
            }
        }
        Ok(best.map(|(_, d)| d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{builtin_grid, edwards_grid};

    #[test]
    fn traced_two_circles_matches_hand_built_counts() {
        let map = trace_map(&builtin_grid(2, 256).unwrap()).unwrap();
        assert!(map.validate().passed());
        assert_eq!(map.vertices().len(), 2);
        assert_eq!(map.arc_count(), 4);
        let counts = map.edge_counts().unwrap();
        assert_eq!(counts.per_curve, vec![2, 2]);
        assert_eq!(counts.regions, 4);
    }

    #[test]
    fn traced_single_circle_is_free() {
        let map = trace_map(&builtin_grid(1, 128).unwrap()).unwrap();
        assert_eq!(map.dart_count(), 0);
        assert_eq!(map.free_curves().len(), 1);
        assert_eq!(map.free_curves()[0].host_sign.to_string(), "1");
    }

    #[test]
    fn traced_family_member_counts() {
        let map = trace_map(&edwards_grid(4, 256).unwrap()).unwrap();
        assert!(map.validate().passed());
        assert!(map.is_simple());
        assert_eq!(map.vertices().len(), 14); // 2^n - 2
        assert_eq!(map.arc_count(), 28);
        let census = map.region_census().unwrap();
        assert!(census.is_venn(4));
    }

    #[test]
    fn traced_census_matches_grid_census_label_by_label() {
        // Restriction with an asymmetric census pins the outer-face and
        // rotation conventions: any mislabeling would permute labels.
        let grid = edwards_grid(4, 256).unwrap().restrict(&[0, 2, 3]).unwrap();
        let map = trace_map(&grid).unwrap();
        assert_eq!(map.region_census().unwrap(), grid.region_census());
    }
}
