//! The rectilinear Edwards-style planar family and a generic rasterizer.
//!
//! Curve 1 is a tall rectangle on the left half plane, curve 2 a wide
//! rectangle on the lower half plane, curve 3 the square |x|,|y| < 3, and
//! curve k >= 4 a square cogwheel: the sup-norm radius is pushed out or
//! pulled in by a square wave in the perimeter parameter, with 2^(k-2)
//! flanks. Amplitudes halve with k, so each new wheel oscillates
//! strictly inside the band of the previous one; the flank ladder is
//! dyadic with each level bisecting the runs of the coarser ones, and
//! curve 4, whose flanks would land on the square's corners, is drawn
//! instead as an explicit polygon with corner staircases. Consequences:
//!
//! * every pair of curves crosses transversally, always as a vertical
//!   segment meeting a horizontal one, so rasterization is clean at
//!   sufficient resolution by construction;
//! * no three curves meet in a point;
//! * the total crossing count is 2^n - 2.
//!
//! Everything is axis-aligned on purpose. Boundaries with diagonal
//! tangents can cross between two cell centers no matter how fine the
//! raster is, which breaks clean position near crossings; rectilinear
//! geometry removes that failure mode entirely.

use crate::grid::GridDiagram;
use crate::{Error, Result};

/// Geometry of the family. The defaults put every curve strictly inside
/// the rasterization box.
#[derive(Debug, Clone)]
pub struct EdwardsParams {
    pub n: usize,
    /// Cells per axis of the raster.
    pub resolution: usize,
    /// The raster covers [-half_extent, half_extent]^2.
    pub half_extent: f64,
    /// Sup-norm radius of curve 3 and center line of every cogwheel.
    pub base_radius: f64,
}

impl EdwardsParams {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            resolution: 1024,
            half_extent: 12.0,
            base_radius: 3.0,
        }
    }

    pub fn with_resolution(mut self, resolution: usize) -> Self {
        self.resolution = resolution;
        self
    }

    /// Cogwheel amplitude for curve k >= 4.
    pub fn amplitude(&self, k: usize) -> f64 {
        self.base_radius / f64::exp2(k as f64 - 2.0)
    }

    /// Perimeter parameter of the direction of (x, y): the reference
    /// square is traversed counterclockwise from (r, 0) with u in
    /// [-1, 7), corners at odd integers, axes at even integers. Held
    /// constant along grid-aligned rays (constant y in the east and west
    /// sectors, constant x in the north and south ones), so cogwheel
    /// flanks are axis-aligned segments.
    fn square_angle(&self, x: f64, y: f64) -> f64 {
        let r = self.base_radius;
        if x.abs() >= y.abs() {
            if x >= 0.0 {
                y / r
            } else {
                4.0 - y / r
            }
        } else if y >= 0.0 {
            2.0 - x / r
        } else {
            6.0 + x / r
        }
    }

    /// Square wave of curve k >= 5 at perimeter parameter u: flanks at
    /// odd multiples of 2^(4-k), teeth centered on the axes (and, from
    /// k = 6 on, on the corners too). The waves are even around every
    /// axis, so the two rectangles split each doubled sector, and even
    /// around every corner, so the sector formula changing across a
    /// diagonal never creates a diagonal boundary piece.
    fn wave(&self, k: usize, u: f64) -> f64 {
        debug_assert!(k >= 5);
        let half_tooth = f64::exp2(4.0 - k as f64);
        if (u + half_tooth).rem_euclid(4.0 * half_tooth) < 2.0 * half_tooth {
            1.0
        } else {
            -1.0
        }
    }

    /// Curve 4 as an explicit rectilinear polygon, 4-fold symmetric.
    ///
    /// A pure square wave would put this wheel's flanks exactly on the
    /// square's corners, where the perimeter parameter is discontinuous
    /// off the reference radius. Instead each corner carries a staircase
    /// that plays the role of the flank: teeth reach out to 3.75 around
    /// the east and west axes, dropping back to the 2.25 valley through
    /// two jogs placed inside the finer wheels' corner gaps. Walking in
    /// from a tooth tip, the staircase crosses curve 6's corner tooth at
    /// 3.1875, the reference square at 3, and curve 5's corner valley at
    /// 2.625, each exactly once; that ordering realizes every sign
    /// combination for up to six curves. (Wheels beyond the sixth would
    /// need a deeper staircase; the constructor rejects them.)
    fn first_wheel_interior(&self, x: f64, y: f64) -> bool {
        let unit = self.base_radius / 3.0;
        let (ax, ay) = ((x / unit).abs(), (y / unit).abs());
        if ay < 2.25 {
            ax < 3.75
        } else if ay < 2.4 {
            2.5 < ax && ax < 3.75
        } else if ay < 2.9 {
            2.95 < ax && ax < 3.75
        } else {
            false
        }
    }

    /// Interior test for curve k (1-based), at a point in the plane.
    pub fn interior(&self, k: usize, x: f64, y: f64) -> bool {
        assert!(k >= 1, "curves are numbered from 1");
        match k {
            1 => -10.0 < x && x < 0.0 && -9.0 < y && y < 9.0,
            2 => -9.0 < x && x < 9.0 && -10.0 < y && y < 0.0,
            3 => x.abs().max(y.abs()) < self.base_radius,
            4 => self.first_wheel_interior(x, y),
            _ => {
                let rho = x.abs().max(y.abs());
                let s = self.wave(k, self.square_angle(x, y));
                rho < self.base_radius + self.amplitude(k) * s
            }
        }
    }
}

/// Interior test for curve k of the default family.
pub fn edwards_interior(k: usize, x: f64, y: f64) -> bool {
    EdwardsParams::new(k.max(1)).interior(k, x, y)
}

/// Rasterize `n` curves over the centered square box by sampling each
/// interior predicate at cell centers. Axis 0 is x, axis 1 is y.
pub fn rasterize(
    n: usize,
    resolution: usize,
    half_extent: f64,
    interior: impl Fn(usize, f64, f64) -> bool,
) -> Result<GridDiagram> {
    if resolution < 4 {
        return Err(Error::InvalidArgument("resolution too small".into()));
    }
    let step = 2.0 * half_extent / resolution as f64;
    let coord = |i: usize| -half_extent + (i as f64 + 0.5) * step;
    let mut cells = vec![0u32; resolution * resolution];
    for ix in 0..resolution {
        let x = coord(ix);
        for iy in 0..resolution {
            let y = coord(iy);
            let mut mask = 0u32;
            for s in 0..n {
                if !interior(s, x, y) {
                    mask |= 1 << s;
                }
            }
            cells[ix * resolution + iy] = mask;
        }
    }
    GridDiagram::new(vec![resolution, resolution], n, cells)
}

/// Rasterize the n-curve family, doubling the resolution up to twice if
/// the result is not clean, simple, and Venn.
pub fn edwards_grid(n: usize, resolution: usize) -> Result<GridDiagram> {
    if n < 1 {
        return Err(Error::InvalidArgument("need at least one curve".into()));
    }
    if n > 6 {
        return Err(Error::Construction(format!(
            "the rectilinear family schedule is worked out through n = 6 \
             (the corner staircases of curve 4 would need more jogs), got n = {n}"
        )));
    }
    let params = EdwardsParams::new(n).with_resolution(resolution);
    build_checked(n, resolution, |s, x, y| params.interior(s + 1, x, y))
}

/// Grid realizations of the canonical small diagrams: one, two, or three
/// closed curves, combinatorially the classic circle pictures, drawn as
/// overlapping axis-aligned squares.
pub fn builtin_grid(n: usize, resolution: usize) -> Result<GridDiagram> {
    if !(1..=3).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "builtin diagrams cover n in 1..=3, got {n}"
        )));
    }
    // Rectangles as (x0, x1, y0, y1), staggered so no two edges share a
    // coordinate and no crossing lands on a corner.
    let boxes: [[f64; 4]; 3] = match n {
        1 => [[-4.0, 4.0, -4.0, 4.0]; 3],
        2 => [
            [-6.0, 2.0, -4.0, 4.0],
            [-2.0, 6.0, -3.0, 5.0],
            [0.0; 4],
        ],
        _ => [
            [-6.0, 2.0, -1.0, 7.0],
            [-2.0, 6.0, -2.0, 6.0],
            [-4.0, 4.0, -6.0, 2.0],
        ],
    };
    build_checked(n, resolution, move |s, x, y| {
        let [x0, x1, y0, y1] = boxes[s];
        x0 < x && x < x1 && y0 < y && y < y1
    })
}

fn build_checked(
    n: usize,
    resolution: usize,
    interior: impl Fn(usize, f64, f64) -> bool,
) -> Result<GridDiagram> {
    let mut res = resolution;
    let mut last_failure = String::new();
    for _ in 0..3 {
        let grid = rasterize(n, res, 12.0, &interior)?;
        let report = grid.validate();
        if !report.passed() {
            let first = report.first_failure().unwrap();
            last_failure = match &first.detail {
                Some(d) => format!("{}: {d}", first.name),
                None => first.name.to_string(),
            };
            res *= 2;
            continue;
        }
        if let Some((at, surfaces)) = grid.first_transversality_failure() {
            last_failure = format!("tangential touch of surfaces {surfaces:?} near cell {at:?}");
            res *= 2;
            continue;
        }
        if !grid.region_census().is_venn(n) {
            last_failure = "region census is not a Venn census".into();
            res *= 2;
            continue;
        }
        return Ok(grid);
    }
    Err(Error::Construction(format!(
        "rasterization failed up to resolution {res}: {last_failure}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::subsets_of_size;

    #[test]
    fn interior_predicate_samples() {
        assert!(edwards_interior(3, 0.0, 0.0));
        assert!(edwards_interior(1, -5.0, 0.0));
        assert!(!edwards_interior(2, -5.0, 1.0));
        assert!(edwards_interior(1, -5.0, 1.0));
        // First tooth of curve 4 reaches out to 3.75.
        assert!(edwards_interior(4, 3.5, 0.1));
        assert!(!edwards_interior(4, 3.8, 0.1));
        // Valley of curve 4 pulls in to 2.25.
        assert!(!edwards_interior(4, 0.1, 2.5));
    }

    #[test]
    fn small_family_members_verify() {
        for n in 1..=4 {
            let g = edwards_grid(n, 256).unwrap();
            assert!(g.validate().passed());
            assert!(g.is_simple());
            assert!(g.region_census().is_venn(n), "n = {n} not Venn");
        }
    }

    #[test]
    fn pairwise_crossings_sum_to_formula() {
        let n = 4;
        let g = edwards_grid(n, 256).unwrap();
        let mut crossings = 0;
        for pair in subsets_of_size(n, 2) {
            crossings += g.intersection_components(&pair).unwrap();
        }
        assert_eq!(crossings, (1 << n) - 2);
        // The inner square and the first wheel cross four times,
        // everything else twice.
        assert_eq!(g.intersection_components(&[2, 3]).unwrap(), 4);
    }

    #[test]
    fn edge_counts_match_planar_formula() {
        let g = edwards_grid(4, 256).unwrap();
        let counts = g.edge_counts();
        assert_eq!(counts.total, 28); // 2^(n+1) - 4 at n = 4
        assert_eq!(counts.regions, 16);
    }

    #[test]
    fn builtin_grids_verify() {
        for n in 1..=3 {
            let g = builtin_grid(n, 256).unwrap();
            assert!(g.region_census().is_venn(n));
        }
        let g3 = builtin_grid(3, 256).unwrap();
        assert_eq!(g3.edge_counts().total, 12);
    }
}
