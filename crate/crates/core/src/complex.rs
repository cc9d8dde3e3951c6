//! Abstract cell complexes with sign labels.

use crate::census::RegionComplex;
use crate::sign::SignVector;
use crate::{Error, Result};

/// A finite set of cells with a symmetric adjacency and a sign label per
/// cell. Intersection loci and surface projections are returned in this
/// form so that the census machinery can run on them unchanged.
#[derive(Debug, Clone)]
pub struct LabeledComplex {
    /// Ambient dimension the cells live in.
    dimension: usize,
    labels: Vec<SignVector>,
    /// Undirected adjacency pairs, stored once with `a < b`.
    edges: Vec<(u32, u32)>,
}

impl LabeledComplex {
    pub fn new(dimension: usize, labels: Vec<SignVector>, edges: Vec<(u32, u32)>) -> Result<Self> {
        let n = labels.first().map(|l| l.len());
        if let Some(n) = n {
            if let Some(bad) = labels.iter().position(|l| l.len() != n) {
                return Err(Error::InvalidComplex(format!(
                    "label length mismatch at cell {bad}"
                )));
            }
        }
        let mut edges: Vec<(u32, u32)> = edges
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        for &(a, b) in &edges {
            if a == b {
                return Err(Error::InvalidComplex(format!("self-adjacent cell {a}")));
            }
            if b as usize >= labels.len() {
                return Err(Error::InvalidComplex(format!("edge ({a},{b}) out of range")));
            }
        }
        Ok(Self {
            dimension,
            labels,
            edges,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Number of surfaces the labels refer to.
    pub fn surface_count(&self) -> usize {
        self.labels.first().map_or(0, |l| l.len())
    }

    pub fn labels(&self) -> &[SignVector] {
        &self.labels
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Keep only the bits of `keep` (ascending surface indices).
    pub fn restrict(&self, keep: &[usize]) -> Self {
        Self {
            dimension: self.dimension,
            labels: self.labels.iter().map(|l| l.restrict(keep)).collect(),
            edges: self.edges.clone(),
        }
    }
}

impl RegionComplex for LabeledComplex {
    fn cell_count(&self) -> usize {
        self.labels.len()
    }

    fn cell_label(&self, cell: usize) -> SignVector {
        self.labels[cell]
    }

    fn for_each_adjacency(&self, f: &mut dyn FnMut(usize, usize)) {
        for &(a, b) in &self.edges {
            f(a as usize, b as usize);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::region_census;

    #[test]
    fn census_counts_components_per_label() {
        // Four cells on a path: labels 0,1,1,0 -> label 0 twice, label 1 once.
        let l0 = SignVector::parse("0").unwrap();
        let l1 = SignVector::parse("1").unwrap();
        let c = LabeledComplex::new(1, vec![l0, l1, l1, l0], vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let census = region_census(&c);
        assert_eq!(census.count(&l0), 2);
        assert_eq!(census.count(&l1), 1);
        assert_eq!(census.total_components(), 3);
        assert!(!census.is_venn(1));
    }

    #[test]
    fn mismatched_labels_rejected() {
        let a = SignVector::parse("01").unwrap();
        let b = SignVector::parse("0").unwrap();
        assert!(LabeledComplex::new(2, vec![a, b], vec![]).is_err());
    }

    #[test]
    fn self_edges_rejected() {
        let a = SignVector::parse("0").unwrap();
        assert!(LabeledComplex::new(1, vec![a, a], vec![(1, 1)]).is_err());
    }
}
