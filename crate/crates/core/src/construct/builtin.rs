//! Canonical one-, two-, and three-circle diagrams as maps.

use crate::construct::{builtin_grid, trace_map};
use crate::map::{CombinatorialMap, FreeCurve};
use crate::sign::SignVector;
use crate::{Error, Result};

/// The classical circle diagram with `n` in 1..=3 curves.
///
/// The one- and two-circle maps are written out directly; the rotation
/// of the two-circle map lists the four darts counterclockwise at each
/// crossing of circles centered at (-2, 0) and (2, 0). The three-circle
/// map is traced from a rasterized symmetric layout.
pub fn builtin_map(n: usize) -> Result<CombinatorialMap> {
    match n {
        1 => CombinatorialMap::new(
            1,
            vec![],
            vec![],
            vec![],
            None,
            vec![FreeCurve {
                curve: 0,
                host_sign: SignVector::all_exterior(1),
                parent: None,
            }],
        ),
        2 => {
            // Darts 0..4 on curve 0 (left circle), 4..8 on curve 1.
            // 0/1: western arc of curve 0, 2/3 its lens arc; 4/5 the lens
            // arc of curve 1, 6/7 its eastern arc. Even darts sit at the
            // top crossing, odd at the bottom.
            let curve = vec![0, 0, 0, 0, 1, 1, 1, 1];
            let alpha = vec![1, 0, 3, 2, 5, 4, 7, 6];
            let sigma = vec![4, 6, 5, 7, 3, 1, 2, 0];
            CombinatorialMap::new(2, curve, alpha, sigma, Some(1), vec![])
        }
        3 => trace_map(&builtin_grid(3, 256)?),
        _ => Err(Error::InvalidArgument(format!(
            "builtin circle diagrams cover n in 1..=3, got {n}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_builtins_validate_and_are_venn() {
        for n in 1..=3 {
            let map = builtin_map(n).unwrap();
            assert!(map.validate().passed(), "n = {n}: {}", map.validate());
            assert!(map.region_census().unwrap().is_venn(n), "n = {n}");
        }
        assert!(builtin_map(0).is_err());
        assert!(builtin_map(4).is_err());
    }

    #[test]
    fn three_circles_counts() {
        let map = builtin_map(3).unwrap();
        assert_eq!(map.vertices().len(), 6);
        assert_eq!(map.arc_count(), 12);
        let counts = map.edge_counts().unwrap();
        assert_eq!(counts.total, 12);
        assert_eq!(counts.regions, 8);
    }

    #[test]
    fn hand_built_two_circles_matches_traced_one() {
        let by_hand = builtin_map(2).unwrap();
        let traced = trace_map(&builtin_grid(2, 256).unwrap()).unwrap();
        assert_eq!(by_hand.canonical_key(), traced.canonical_key());
    }
}
