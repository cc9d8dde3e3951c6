//! Deleting curves from a map.
//!
//! Darts of deleted curves are spliced out of the rotation system,
//! vertices reduced to degree two are dissolved by merging their arcs,
//! and surviving curves left with no crossings become free curves whose
//! host signs come from the pre-deletion face structure.

use std::collections::BTreeSet;

use super::{orbits, CombinatorialMap, Dart, FreeCurve, RegionKind};
use crate::sign::SignVector;
use crate::subset::complement;
use crate::{Error, Result};

impl CombinatorialMap {
    /// Remove the given curves, renumbering the survivors in ascending
    /// order.
    pub fn delete_curves(&self, remove: &[usize]) -> Result<CombinatorialMap> {
        for &c in remove {
            if c >= self.curve_count() {
                return Err(Error::InvalidArgument(format!(
                    "cannot delete unknown curve {c}"
                )));
            }
        }
        self.restricted_map(&complement(self.curve_count(), remove))
    }

    /// Keep only the curves in `keep` (ascending), renumbered `0..keep.len()`.
    pub fn restricted_map(&self, keep: &[usize]) -> Result<CombinatorialMap> {
        let n = self.curve_count();
        if keep.windows(2).any(|w| w[0] >= w[1]) || keep.iter().any(|&c| c >= n) {
            return Err(Error::InvalidArgument(
                "kept curves must be ascending and in range".into(),
            ));
        }
        let keep_set: BTreeSet<usize> = keep.iter().copied().collect();
        let new_id = |c: usize| keep.binary_search(&c).expect("kept curve");

        let regions = self.faces_with_signs()?;
        let dart_faces: Vec<(&Vec<Dart>, SignVector)> = regions
            .iter()
            .filter_map(|r| match &r.kind {
                RegionKind::Face { darts } => Some((darts, r.sign)),
                _ => None,
            })
            .collect();
        let mut face_sign_of_dart: Vec<SignVector> =
            vec![SignVector::all_exterior(n); self.dart_count()];
        for (darts, sign) in &dart_faces {
            for &d in darts.iter() {
                face_sign_of_dart[d] = *sign;
            }
        }

        // Which kept crossing curves lose all their crossings.
        let vertices = self.vertices();
        let mut keeps_a_crossing = vec![false; n];
        for v in &vertices {
            let curves: BTreeSet<usize> = v.iter().map(|&d| self.curve_of(d)).collect();
            let surviving: Vec<usize> = curves
                .iter()
                .copied()
                .filter(|c| keep_set.contains(c))
                .collect();
            if surviving.len() >= 2 {
                for c in surviving {
                    keeps_a_crossing[c] = true;
                }
            }
        }
        let newly_freed: Vec<usize> = keep
            .iter()
            .copied()
            .filter(|&c| {
                !keeps_a_crossing[c] && self.raw_curve().iter().any(|&x| x as usize == c)
            })
            .collect();

        // Reject configurations the free-curve model cannot express: a
        // curve that goes crossing-free while other kept curves keep
        // crossing inside it.
        for &c in &newly_freed {
            for d in 0..self.dart_count() {
                let dc = self.curve_of(d);
                if dc != c
                    && keep_set.contains(&dc)
                    && keeps_a_crossing[dc]
                    && !face_sign_of_dart[d].bit(c)
                {
                    return Err(Error::Unsupported(format!(
                        "deleting these curves leaves crossings of curve {dc} \
                         inside the now crossing-free curve {c}"
                    )));
                }
            }
        }

        // Exterior-side sign per curve, for host signs of freed curves.
        let mut exterior_sign: Vec<Option<SignVector>> = vec![None; n];
        for d in 0..self.dart_count() {
            let c = self.curve_of(d);
            if exterior_sign[c].is_none() && face_sign_of_dart[d].bit(c) {
                exterior_sign[c] = Some(face_sign_of_dart[d]);
            }
        }

        // Splice out darts of deleted curves. Darts of curves about to go
        // crossing-free stay in for now; dissolution discovers them as
        // closed loops, which doubles as a consistency check against the
        // vertex scan above.
        let mut alpha: Vec<u32> = self.raw_alpha().to_vec();
        let mut sigma: Vec<u32> = self.raw_sigma().to_vec();
        let mut sigma_inv = self.sigma_inv();
        let mut alive: Vec<bool> = (0..self.dart_count())
            .map(|d| keep_set.contains(&self.curve_of(d)))
            .collect();
        for d in 0..self.dart_count() {
            if alive[d] {
                continue;
            }
            let prev = sigma_inv[d] as usize;
            let next = sigma[d] as usize;
            sigma[prev] = next as u32;
            sigma_inv[next] = prev as u32;
        }

        // Dissolve vertices that dropped to degree two.
        let mut queue: Vec<Dart> = (0..self.dart_count())
            .filter(|&d| alive[d] && sigma[sigma[d] as usize] as usize == d && sigma[d] as usize != d)
            .collect();
        let mut freed_by_dissolution: Vec<usize> = vec![];
        while let Some(x) = queue.pop() {
            if !alive[x] {
                continue;
            }
            let y = sigma[x] as usize;
            if !(alive[y] && sigma[y] as usize == x && x != y) {
                continue;
            }
            debug_assert_eq!(self.curve_of(x), self.curve_of(y), "degree-2 vertex mixes curves");
            alive[x] = false;
            alive[y] = false;
            if alpha[x] as usize == y {
                // The merged arc closed up on itself: the curve is free now.
                freed_by_dissolution.push(self.curve_of(x));
                continue;
            }
            let a = alpha[x] as usize;
            let b = alpha[y] as usize;
            alpha[a] = b as u32;
            alpha[b] = a as u32;
        }

        // Post-deletion unbounded zone: pre-deletion faces reachable from
        // the outer face across arcs of non-surviving curves only.
        let new_outer_old_dart: Option<Dart> = if alive.iter().any(|&a| a) {
            let face_perm = self.face_permutation();
            let faces = orbits(&face_perm);
            let mut face_of = vec![usize::MAX; self.dart_count()];
            for (fi, f) in faces.iter().enumerate() {
                for &d in f {
                    face_of[d] = fi;
                }
            }
            let outer_face = face_of[self.outer_dart().expect("darts imply outer")];
            let mut in_zone = vec![false; faces.len()];
            in_zone[outer_face] = true;
            let mut stack = vec![outer_face];
            while let Some(fi) = stack.pop() {
                for &d in &faces[fi] {
                    // Arcs of deleted or freed curves no longer separate
                    // regions of the restricted arrangement.
                    let c = self.curve_of(d);
                    let still_separates = keep_set.contains(&c) && keeps_a_crossing[c];
                    if !still_separates {
                        let g = face_of[self.alpha(d)];
                        if !in_zone[g] {
                            in_zone[g] = true;
                            stack.push(g);
                        }
                    }
                }
            }
            Some(
                (0..self.dart_count())
                    .find(|&d| alive[d] && in_zone[face_of[d]])
                    .expect("surviving darts must border the unbounded zone"),
            )
        } else {
            None
        };

        // Assemble the free-curve set: old free curves that survive, plus
        // everything newly freed.
        let mut free: Vec<(usize, SignVector)> = vec![];
        for fc in self.free_curves() {
            if keep_set.contains(&fc.curve) {
                free.push((new_id(fc.curve), fc.host_sign.restrict(keep)));
            }
        }
        for &c in newly_freed.iter() {
            let host = exterior_sign[c].ok_or_else(|| {
                Error::InvalidMap(format!("curve {c} has no exterior-side face"))
            })?;
            free.push((new_id(c), host.restrict(keep)));
        }
        debug_assert_eq!(
            {
                let mut f: Vec<usize> = freed_by_dissolution.iter().map(|&c| new_id(c)).collect();
                f.sort_unstable();
                f
            },
            {
                let mut f: Vec<usize> = newly_freed.iter().map(|&c| new_id(c)).collect();
                f.sort_unstable();
                f
            },
            "dissolution and vertex scan disagree about freed curves"
        );
        free.sort_by_key(|&(c, _)| c);
        let free_curves = assign_parents(free);

        // Compact surviving darts.
        let mut dart_new = vec![usize::MAX; self.dart_count()];
        let mut count = 0usize;
        for d in 0..self.dart_count() {
            if alive[d] {
                dart_new[d] = count;
                count += 1;
            }
        }
        let mut curve_out = vec![0u32; count];
        let mut alpha_out = vec![0u32; count];
        let mut sigma_out = vec![0u32; count];
        for d in 0..self.dart_count() {
            if !alive[d] {
                continue;
            }
            let nd = dart_new[d];
            curve_out[nd] = new_id(self.curve_of(d)) as u32;
            alpha_out[nd] = dart_new[alpha[d] as usize] as u32;
            sigma_out[nd] = dart_new[sigma[d] as usize] as u32;
        }

        CombinatorialMap::new(
            keep.len(),
            curve_out,
            alpha_out,
            sigma_out,
            new_outer_old_dart.map(|d| dart_new[d]),
            free_curves,
        )
    }
}

/// Derive containment parents from host signs. Free-curve interiors hold
/// only free curves, so `g` lies inside `f` exactly when `g`'s host sign
/// marks `f` interior; the innermost container is the parent.
pub(crate) fn assign_parents(free: Vec<(usize, SignVector)>) -> Vec<FreeCurve> {
    let depth = |host: &SignVector| -> usize {
        free.iter().filter(|(f, _)| !host.bit(*f)).count()
    };
    free.iter()
        .map(|(c, host)| {
            let parent = free
                .iter()
                .filter(|(f, _)| !host.bit(*f))
                .max_by_key(|(_, fhost)| depth(fhost))
                .map(|&(f, _)| f);
            FreeCurve {
                curve: *c,
                host_sign: *host,
                parent,
            }
        })
        .collect()
}
