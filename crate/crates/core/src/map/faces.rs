//! Face tracing and sign assignment for combinatorial maps.

use std::collections::VecDeque;

use super::{orbits, CombinatorialMap, Dart};
use crate::census::Census;
use crate::sign::SignVector;
use crate::{Error, Result};

/// One region of the arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub kind: RegionKind,
    pub sign: SignVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegionKind {
    /// A face of the dart structure, as its dart cycle.
    Face { darts: Vec<Dart> },
    /// The interior disk of a crossing-free curve.
    FreeInterior { curve: usize },
    /// The whole plane when the map has no darts.
    OuterVoid,
}

/// Edge and region counts of a map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCounts {
    /// e_V(S_i) per curve; a crossing-free curve counts one edge.
    pub per_curve: Vec<usize>,
    /// e(V), the sum over curves.
    pub total: usize,
    /// r(V), the number of regions.
    pub regions: usize,
}

/// A face carrying two or more boundary edges of the same curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceRepeat {
    pub face_darts: Vec<Dart>,
    pub sign: SignVector,
    pub curve: usize,
}

impl CombinatorialMap {
    /// Trace all regions and assign each its sign vector.
    ///
    /// The face containing the outer dart receives the all-exterior
    /// label; crossing an arc of curve i flips bit i. Free curves add
    /// their interior regions. Fails if the flip rule is inconsistent
    /// around some cycle, which means the darts do not encode an
    /// arrangement of closed curves.
    pub fn faces_with_signs(&self) -> Result<Vec<Region>> {
        let n = self.curve_count();
        let mut regions = vec![];
        if self.dart_count() == 0 {
            regions.push(Region {
                kind: RegionKind::OuterVoid,
                sign: SignVector::all_exterior(n),
            });
        } else {
            let face_perm = self.face_permutation();
            let faces = orbits(&face_perm);
            let mut face_of = vec![usize::MAX; self.dart_count()];
            for (fi, face) in faces.iter().enumerate() {
                for &d in face {
                    face_of[d] = fi;
                }
            }
            let outer = face_of[self.outer_dart().expect("darts imply an outer dart")];
            let mut signs: Vec<Option<SignVector>> = vec![None; faces.len()];
            signs[outer] = Some(SignVector::all_exterior(n));
            let mut queue = VecDeque::from([outer]);
            while let Some(fi) = queue.pop_front() {
                let sign = signs[fi].expect("queued faces are labeled");
                for &d in &faces[fi] {
                    let neighbor = face_of[self.alpha(d)];
                    let flipped = sign.flipped(self.curve_of(d));
                    match &signs[neighbor] {
                        None => {
                            signs[neighbor] = Some(flipped);
                            queue.push_back(neighbor);
                        }
                        Some(existing) => {
                            if *existing != flipped {
                                return Err(Error::InvalidMap(format!(
                                    "inconsistent sign across the arc at dart {d}: \
                                     {existing} vs {flipped}"
                                )));
                            }
                        }
                    }
                }
            }
            for (face, sign) in faces.into_iter().zip(signs) {
                let sign = sign.ok_or_else(|| {
                    Error::InvalidMap("face unreachable from the outer face".into())
                })?;
                regions.push(Region {
                    kind: RegionKind::Face { darts: face },
                    sign,
                });
            }
        }
        for fc in self.free_curves() {
            regions.push(Region {
                kind: RegionKind::FreeInterior { curve: fc.curve },
                sign: fc.host_sign.with_bit(fc.curve, false),
            });
        }
        Ok(regions)
    }

    /// Component counts per sign vector over all regions.
    pub fn region_census(&self) -> Result<Census> {
        let mut census = Census::default();
        for region in self.faces_with_signs()? {
            census.insert(region.sign, 1);
        }
        Ok(census)
    }

    /// Per-curve and total edge counts plus the region count.
    pub fn edge_counts(&self) -> Result<EdgeCounts> {
        let mut per_curve = vec![0usize; self.curve_count()];
        for d in 0..self.dart_count() {
            per_curve[self.curve_of(d)] += 1;
        }
        for c in per_curve.iter_mut() {
            *c /= 2; // two darts per arc
        }
        for fc in self.free_curves() {
            per_curve[fc.curve] += 1;
        }
        let total = per_curve.iter().sum();
        let regions = self.region_census()?.total_components();
        Ok(EdgeCounts {
            per_curve,
            total,
            regions,
        })
    }

    /// Find a region with two boundary edges on the same curve, if any.
    ///
    /// For simple Venn diagrams no such region exists; the first witness
    /// in face order is returned otherwise.
    pub fn first_face_with_repeated_curve(&self) -> Result<Option<FaceRepeat>> {
        for region in self.faces_with_signs()? {
            let Region {
                kind: RegionKind::Face { darts },
                sign,
            } = region
            else {
                // Free-curve interiors and their hosts gain one edge per
                // free curve, never two from the same curve.
                continue;
            };
            // Boundary arcs of the face: each arc contributes one dart
            // here unless the face touches it from both sides.
            let mut arcs: Vec<(usize, usize)> = darts
                .iter()
                .map(|&d| (d.min(self.alpha(d)), self.curve_of(d)))
                .collect();
            arcs.sort_unstable();
            arcs.dedup();
            let mut curves: Vec<usize> = arcs.into_iter().map(|(_, c)| c).collect();
            curves.sort_unstable();
            if let Some(w) = curves.windows(2).find(|w| w[0] == w[1]) {
                return Ok(Some(FaceRepeat {
                    face_darts: darts,
                    sign,
                    curve: w[0],
                }));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::builtin_map;

    fn signs_of(map: &CombinatorialMap) -> Vec<String> {
        let mut v: Vec<String> = map
            .faces_with_signs()
            .unwrap()
            .into_iter()
            .map(|r| r.sign.to_string())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn two_circles_has_all_four_signs() {
        let map = builtin_map(2).unwrap();
        assert_eq!(signs_of(&map), vec!["00", "01", "10", "11"]);
    }

    #[test]
    fn single_free_curve_has_interior_and_exterior() {
        let map = builtin_map(1).unwrap();
        assert_eq!(signs_of(&map), vec!["0", "1"]);
        let counts = map.edge_counts().unwrap();
        assert_eq!(counts.per_curve, vec![1]);
        assert_eq!(counts.total, 1);
        assert_eq!(counts.regions, 2);
    }

    #[test]
    fn two_circles_edge_counts() {
        let counts = builtin_map(2).unwrap().edge_counts().unwrap();
        assert_eq!(counts.per_curve, vec![2, 2]);
        assert_eq!(counts.total, 4);
        assert_eq!(counts.regions, 4);
    }

    #[test]
    fn three_circles_is_a_venn_diagram() {
        let map = builtin_map(3).unwrap();
        let census = map.region_census().unwrap();
        assert!(census.is_venn(3));
        let counts = map.edge_counts().unwrap();
        assert_eq!(counts.per_curve, vec![4, 4, 4]);
        assert_eq!(counts.total, 12);
        assert_eq!(counts.regions, 8);
        assert!(map.first_face_with_repeated_curve().unwrap().is_none());
    }
}
