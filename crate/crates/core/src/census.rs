//! Connected-component labeling of region complexes.
//!
//! A region of a diagram is a maximal connected set of cells carrying the
//! same sign vector. The census maps each label that occurs to its number
//! of connected components; a diagram with n surfaces is Venn exactly when
//! the census holds all 2^n labels with one component each.

use std::collections::BTreeMap;

use crate::sign::SignVector;

/// Anything that exposes labeled cells with a symmetric adjacency.
///
/// Grids and projected surface complexes both implement this; the census
/// and the Venn test are written once against the trait.
pub trait RegionComplex {
    fn cell_count(&self) -> usize;
    fn cell_label(&self, cell: usize) -> SignVector;
    /// Invoke `f` on each adjacent pair at least once (order and
    /// duplicates are irrelevant).
    fn for_each_adjacency(&self, f: &mut dyn FnMut(usize, usize));
}

/// Component counts per sign vector.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Census {
    counts: BTreeMap<SignVector, usize>,
}

impl Census {
    pub fn counts(&self) -> &BTreeMap<SignVector, usize> {
        &self.counts
    }

    pub fn count(&self, label: &SignVector) -> usize {
        self.counts.get(label).copied().unwrap_or(0)
    }

    pub fn label_count(&self) -> usize {
        self.counts.len()
    }

    /// Total number of regions over all labels.
    pub fn total_components(&self) -> usize {
        self.counts.values().sum()
    }

    /// Exactly 2^n labels, each connected.
    pub fn is_venn(&self, n: usize) -> bool {
        self.counts.len() == 1usize << n && self.counts.values().all(|&c| c == 1)
    }

    /// All 2^k labels occur (component counts unconstrained).
    pub fn all_labels_present(&self, k: usize) -> bool {
        self.counts.len() == 1usize << k
    }

    /// Deterministically first label with more than one component.
    pub fn first_disconnected(&self) -> Option<(SignVector, usize)> {
        self.counts
            .iter()
            .find(|(_, &c)| c > 1)
            .map(|(s, &c)| (*s, c))
    }

    pub(crate) fn insert(&mut self, label: SignVector, components: usize) {
        *self.counts.entry(label).or_insert(0) += components;
    }
}

/// Count connected components of equal-label cells.
pub fn region_census<C: RegionComplex + ?Sized>(complex: &C) -> Census {
    census_with(complex, |s| s)
}

/// Census with every label passed through `map` first. Restricting a
/// diagram to a surface subset reduces to a masked census, so subset
/// sweeps can avoid materializing restricted copies.
pub fn census_with<C: RegionComplex + ?Sized>(
    complex: &C,
    map: impl Fn(SignVector) -> SignVector,
) -> Census {
    let cells = complex.cell_count();
    let mut uf = UnionFind::new(cells);
    complex.for_each_adjacency(&mut |a, b| {
        if map(complex.cell_label(a)) == map(complex.cell_label(b)) {
            uf.union(a, b);
        }
    });
    let mut census = Census::default();
    for cell in 0..cells {
        if uf.find(cell) == cell {
            census.insert(map(complex.cell_label(cell)), 1);
        }
    }
    census
}

/// Plain union-find with path halving and union by size.
pub(crate) struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        assert!(n < u32::MAX as usize);
        Self {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let grand = self.parent[self.parent[x] as usize];
            self.parent[x] = grand;
            x = grand as usize;
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra as u32;
        self.size[ra] += self.size[rb];
    }

    /// Number of distinct roots.
    pub fn component_count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}
