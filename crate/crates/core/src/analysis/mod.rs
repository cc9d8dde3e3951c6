//! Decision procedures over any diagram model: Venn-ness, simplicity,
//! reducibility, and the edge-count and dimension bounds.
//!
//! Everything below runs against the [`Diagram`] trait, so maps, grids,
//! and projected surface complexes are analyzed by the same code. The
//! subset sweeps enumerate in colexicographic order (by size where a
//! minimal witness is promised), which makes every reported witness
//! deterministic. Brute force over all 2^n subsets is the ground truth
//! for full reducibility; the fixed-size shortcut is checked against it
//! in the test suites rather than trusted.

use std::collections::BTreeMap;

use crate::census::Census;
use crate::complex::LabeledComplex;
use crate::grid::GridDiagram;
use crate::map::{CombinatorialMap, EdgeCounts};
use crate::subset::{subsets_by_size, subsets_of_size};
use crate::{Error, Result};

/// Largest surface count the exhaustive subset sweeps accept.
pub const BRUTE_FORCE_LIMIT: usize = 20;

/// Common surface-diagram interface for the analyses.
pub trait Diagram: Sized {
    /// Ambient dimension m.
    fn dimension(&self) -> usize;
    /// Number of surfaces n.
    fn surface_count(&self) -> usize;
    /// Component counts per sign vector.
    fn region_census(&self) -> Result<Census>;
    /// The sub-diagram of the given surfaces (ascending), renumbered.
    fn restricted(&self, keep: &[usize]) -> Result<Self>;
}

pub trait EdgeCounted {
    fn edge_counts(&self) -> Result<EdgeCounts>;
}

pub trait Simplicity {
    fn is_simple(&self) -> bool;
}

impl Diagram for CombinatorialMap {
    fn dimension(&self) -> usize {
        2
    }

    fn surface_count(&self) -> usize {
        self.curve_count()
    }

    fn region_census(&self) -> Result<Census> {
        CombinatorialMap::region_census(self)
    }

    fn restricted(&self, keep: &[usize]) -> Result<Self> {
        self.restricted_map(keep)
    }
}

impl EdgeCounted for CombinatorialMap {
    fn edge_counts(&self) -> Result<EdgeCounts> {
        CombinatorialMap::edge_counts(self)
    }
}

impl Simplicity for CombinatorialMap {
    fn is_simple(&self) -> bool {
        CombinatorialMap::is_simple(self)
    }
}

impl Diagram for GridDiagram {
    fn dimension(&self) -> usize {
        GridDiagram::dimension(self)
    }

    fn surface_count(&self) -> usize {
        GridDiagram::surface_count(self)
    }

    fn region_census(&self) -> Result<Census> {
        Ok(GridDiagram::region_census(self))
    }

    fn restricted(&self, keep: &[usize]) -> Result<Self> {
        self.restrict(keep)
    }
}

impl EdgeCounted for GridDiagram {
    fn edge_counts(&self) -> Result<EdgeCounts> {
        Ok(GridDiagram::edge_counts(self))
    }
}

impl Simplicity for GridDiagram {
    fn is_simple(&self) -> bool {
        GridDiagram::is_simple(self)
    }
}

impl Diagram for LabeledComplex {
    fn dimension(&self) -> usize {
        LabeledComplex::dimension(self)
    }

    fn surface_count(&self) -> usize {
        LabeledComplex::surface_count(self)
    }

    fn region_census(&self) -> Result<Census> {
        Ok(crate::census::region_census(self))
    }

    fn restricted(&self, keep: &[usize]) -> Result<Self> {
        Ok(self.restrict(keep))
    }
}

/// Exactly 2^n labels, each a single connected region.
pub fn is_venn<D: Diagram>(d: &D) -> Result<bool> {
    Ok(d.region_census()?.is_venn(d.surface_count()))
}

/// Every one of the 2^k labels occurs in the restriction to `subset`
/// (component counts unconstrained). Holds for every subset of a Venn
/// diagram, because an empty intersection upstairs would force empty
/// regions downstairs.
pub fn restriction_has_all_labels<D: Diagram>(d: &D, subset: &[usize]) -> Result<bool> {
    let census = d.restricted(subset)?.region_census()?;
    Ok(census.all_labels_present(subset.len()))
}

/// Outcome of the exhaustive reducibility sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reducibility {
    pub fully_reducible: bool,
    /// A smallest non-Venn subset (by size, then colex), when not fully
    /// reducible.
    pub witness: Option<Vec<usize>>,
}

/// Sweep all 2^n subsets; Venn everywhere means fully reducible.
pub fn fully_reducible_bruteforce<D: Diagram>(d: &D) -> Result<Reducibility> {
    let n = d.surface_count();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::Budget(format!(
            "brute-force reducibility refuses n = {n} > {BRUTE_FORCE_LIMIT}"
        )));
    }
    for subset in subsets_by_size(n) {
        if !is_venn(&d.restricted(&subset)?)? {
            return Ok(Reducibility {
                fully_reducible: false,
                witness: Some(subset),
            });
        }
    }
    Ok(Reducibility {
        fully_reducible: true,
        witness: None,
    })
}

/// Some (n-1)-subset is a Venn diagram.
pub fn is_reducible<D: Diagram>(d: &D) -> Result<bool> {
    let n = d.surface_count();
    if n == 0 {
        return Ok(false);
    }
    for subset in subsets_of_size(n, n - 1) {
        if is_venn(&d.restricted(&subset)?)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Every subset of the fixed size `r` is a Venn diagram. On simple Venn
/// diagrams this is equivalent to full reducibility; the test corpus
/// verifies that equivalence against the brute-force sweep.
pub fn fully_reducible_via_size<D: Diagram>(d: &D, r: usize) -> Result<bool> {
    let n = d.surface_count();
    if !(1 < r && r < n) {
        return Err(Error::Precondition(format!(
            "subset size must satisfy 1 < r < n, got r = {r}, n = {n}"
        )));
    }
    for subset in subsets_of_size(n, r) {
        if !is_venn(&d.restricted(&subset)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For every size 1 < r < n, the colex-first size-r subset whose census
/// has more than 2^r components, including a disconnected label.
///
/// Such witnesses must exist at every size for a simple Venn diagram
/// that is not fully reducible; failing to find one is reported as an
/// error rather than skipped.
pub fn disconnection_witnesses<D: Diagram + Simplicity>(
    d: &D,
) -> Result<BTreeMap<usize, Vec<usize>>> {
    if !is_venn(d)? || !d.is_simple() {
        return Err(Error::Precondition(
            "disconnection witnesses require a simple Venn diagram".into(),
        ));
    }
    if fully_reducible_bruteforce(d)?.fully_reducible {
        return Err(Error::Precondition(
            "diagram is fully reducible; no disconnection witnesses exist".into(),
        ));
    }
    let n = d.surface_count();
    let mut out = BTreeMap::new();
    for r in 2..n {
        let mut found = None;
        for subset in subsets_of_size(n, r) {
            let census = d.restricted(&subset)?.region_census()?;
            if census.total_components() > (1 << r) && census.first_disconnected().is_some() {
                found = Some(subset);
                break;
            }
        }
        match found {
            Some(subset) => {
                out.insert(r, subset);
            }
            None => {
                return Err(Error::Construction(format!(
                    "no disconnected subset of size {r} exists; \
                     this contradicts the reducibility dichotomy"
                )))
            }
        }
    }
    Ok(out)
}

/// The edge-count bound e(V) <= n 2^(n-1) and its equality case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeBoundCheck {
    pub n: usize,
    pub edges: usize,
    pub bound: usize,
    pub equality: bool,
    pub fully_reducible: bool,
    /// Bound holds and equality occurs exactly for fully reducible input.
    pub consistent: bool,
}

pub fn edge_bound_check<D: Diagram + EdgeCounted + Simplicity>(d: &D) -> Result<EdgeBoundCheck> {
    let n = d.surface_count();
    if n < 2 {
        return Err(Error::Precondition(
            "edge bound is stated for n >= 2".into(),
        ));
    }
    if !is_venn(d)? || !d.is_simple() {
        return Err(Error::Precondition(
            "edge bound check requires a simple Venn diagram".into(),
        ));
    }
    let edges = d.edge_counts()?.total;
    let bound = n * (1usize << (n - 1));
    let equality = edges == bound;
    let fully_reducible = fully_reducible_bruteforce(d)?.fully_reducible;
    Ok(EdgeBoundCheck {
        n,
        edges,
        bound,
        equality,
        fully_reducible,
        consistent: edges <= bound && (equality == fully_reducible),
    })
}

/// Full reducibility forces n <= m + 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionBoundCheck {
    pub fully_reducible: bool,
    pub n: usize,
    pub m: usize,
    pub implication_holds: bool,
}

pub fn dimension_bound_check<D: Diagram + Simplicity>(d: &D) -> Result<DimensionBoundCheck> {
    if !is_venn(d)? || !d.is_simple() {
        return Err(Error::Precondition(
            "dimension bound check requires a simple Venn diagram".into(),
        ));
    }
    let n = d.surface_count();
    let m = d.dimension();
    let fully_reducible = fully_reducible_bruteforce(d)?.fully_reducible;
    Ok(DimensionBoundCheck {
        fully_reducible,
        n,
        m,
        implication_holds: !fully_reducible || n <= m + 1,
    })
}

/// Everything the analyses can say about one diagram.
#[derive(Debug, Clone)]
pub struct AnalysisReport {
    pub id: String,
    pub m: usize,
    pub n: usize,
    pub regions: usize,
    pub edges: usize,
    pub edges_per_surface: Vec<usize>,
    pub is_venn: bool,
    pub is_simple: bool,
    pub is_reducible: bool,
    pub is_fully_reducible: bool,
    /// Smallest non-Venn subset when not fully reducible.
    pub witness: Option<Vec<usize>>,
    /// Per-size disconnection witnesses for non-fully-reducible simple
    /// Venn diagrams.
    pub disconnections: Option<BTreeMap<usize, Vec<usize>>>,
    /// Refused (None) unless the diagram is simple Venn with n >= 2.
    pub edge_bound: Option<EdgeBoundCheck>,
    /// Refused (None) unless the diagram is simple Venn.
    pub dimension_bound: Option<DimensionBoundCheck>,
}

pub fn analyze<D: Diagram + EdgeCounted + Simplicity>(id: &str, d: &D) -> Result<AnalysisReport> {
    let n = d.surface_count();
    let census = d.region_census()?;
    let venn = census.is_venn(n);
    let simple = d.is_simple();
    let counts = d.edge_counts()?;
    let reduc = fully_reducible_bruteforce(d)?;
    let disconnections = if venn && simple && !reduc.fully_reducible && n >= 3 {
        Some(disconnection_witnesses(d)?)
    } else {
        None
    };
    Ok(AnalysisReport {
        id: id.to_string(),
        m: d.dimension(),
        n,
        regions: census.total_components(),
        edges: counts.total,
        edges_per_surface: counts.per_curve,
        is_venn: venn,
        is_simple: simple,
        is_reducible: is_reducible(d)?,
        is_fully_reducible: reduc.fully_reducible,
        witness: reduc.witness,
        disconnections,
        edge_bound: (venn && simple && n >= 2)
            .then(|| edge_bound_check(d))
            .transpose()?,
        dimension_bound: (venn && simple).then(|| dimension_bound_check(d)).transpose()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::builtin_map;

    #[test]
    fn builtin_three_is_fully_reducible_with_equality() {
        let map = builtin_map(3).unwrap();
        assert!(is_venn(&map).unwrap());
        let r = fully_reducible_bruteforce(&map).unwrap();
        assert!(r.fully_reducible);
        assert!(r.witness.is_none());
        let eb = edge_bound_check(&map).unwrap();
        assert_eq!((eb.edges, eb.bound), (12, 12));
        assert!(eb.equality && eb.fully_reducible && eb.consistent);
        let db = dimension_bound_check(&map).unwrap();
        assert!(db.implication_holds); // 3 <= 2 + 1
        assert!(fully_reducible_via_size(&map, 2).unwrap());
    }

    #[test]
    fn witness_requests_on_reducible_input_are_refused() {
        let map = builtin_map(3).unwrap();
        assert!(matches!(
            disconnection_witnesses(&map),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn empty_and_single_curve_edge_cases() {
        let map1 = builtin_map(1).unwrap();
        assert!(is_venn(&map1).unwrap());
        assert!(fully_reducible_bruteforce(&map1).unwrap().fully_reducible);
        assert!(is_reducible(&map1).unwrap()); // the empty subset is Venn
        assert!(fully_reducible_via_size(&map1, 1).is_err());
    }

    #[test]
    fn via_size_rejects_out_of_range_r() {
        let map = builtin_map(3).unwrap();
        assert!(fully_reducible_via_size(&map, 1).is_err());
        assert!(fully_reducible_via_size(&map, 3).is_err());
    }
}
