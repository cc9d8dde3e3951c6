//! Subset enumeration in colexicographic order, used by the reducibility
//! sweeps so that reported witnesses are deterministic.

/// All subsets of `{0, .., n-1}` of the given size, in colex order
/// (ascending as bitmasks). Each subset is an ascending index vector.
pub fn subsets_of_size(n: usize, k: usize) -> SubsetsOfSize {
    assert!(n < usize::BITS as usize);
    let first = if k == 0 { 0 } else { (1usize << k) - 1 };
    SubsetsOfSize {
        n,
        k,
        next: if k <= n { Some(first) } else { None },
    }
}

pub struct SubsetsOfSize {
    n: usize,
    k: usize,
    next: Option<usize>,
}

impl Iterator for SubsetsOfSize {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Self::Item> {
        let mask = self.next?;
        let out = mask_to_indices(mask);
        self.next = if self.k == 0 {
            None
        } else {
            // Gosper's hack: next bitmask with the same popcount.
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            let succ = (((r ^ mask) >> 2) / c) | r;
            (succ < (1usize << self.n)).then_some(succ)
        };
        Some(out)
    }
}

/// All subsets of `{0, .., n-1}` ordered by size, then colex within size.
pub fn subsets_by_size(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..=n).flat_map(move |k| subsets_of_size(n, k))
}

pub fn mask_to_indices(mask: usize) -> Vec<usize> {
    (0..usize::BITS as usize)
        .filter(|&i| mask >> i & 1 == 1)
        .collect()
}

pub fn indices_to_mask(indices: &[usize]) -> usize {
    indices.iter().fold(0, |m, &i| m | 1 << i)
}

/// Ascending complement of `subset` within `0..n`.
pub fn complement(n: usize, subset: &[usize]) -> Vec<usize> {
    let mask = indices_to_mask(subset);
    (0..n).filter(|&i| mask >> i & 1 == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colex_order_of_pairs() {
        let pairs: Vec<_> = subsets_of_size(4, 2).collect();
        assert_eq!(
            pairs,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 3],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn counts_match_binomials() {
        assert_eq!(subsets_of_size(6, 3).count(), 20);
        assert_eq!(subsets_by_size(5).count(), 32);
        assert_eq!(subsets_of_size(3, 0).count(), 1);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
    }

    #[test]
    fn complement_is_sorted() {
        assert_eq!(complement(5, &[1, 3]), vec![0, 2, 4]);
        assert_eq!(complement(3, &[]), vec![0, 1, 2]);
    }
}
