//! Named check suites and their combined JSON report.

use std::collections::BTreeSet;

use multilayer_order::algebra::laws as algebra;
use multilayer_order::pattern::laws as pattern;
use multilayer_order::pattern::PatternSpace;
use multilayer_order::poset::props;
use multilayer_order::{Color, LawReport, PropReport};
use serde::Serialize;

use crate::random;

/// Default largest `k` for the exhaustive suites.
pub const DEFAULT_CAP: usize = 5;
/// Default largest `k` for the per-sector lattice suite.
pub const LATTICE_CAP: usize = 6;
/// Carrier size limits of the proposition scans.
pub const SCAN_POSETS: usize = 5;
pub const SCAN_LATTICES: usize = 5;
pub const SCAN_MONOIDS: usize = 4;
pub const SCAN_PAIRS: usize = 2;
/// Random layer pairs in the `layers` suite.
pub const LAYER_PAIRS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// Poset axioms, order/merge-map correspondence, closure maps, sector bounds.
    Poset,
    /// Absorption, distributivity, complements; + over meets and joins.
    Lattice,
    /// Partial commutative monoid and f_j partial homomorphisms.
    Monoid,
    /// Sector subtraction.
    Drl,
    /// Idempotence, deletion property, +-induced order.
    Band,
    /// Interior/closure, preservation and homomorphism propositions on small structures.
    Props3,
    /// Merge counting laws on seeded random layers.
    Layers,
    All,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckReport {
    pub suite: String,
    pub k: usize,
    pub seed: u64,
    pub laws: Vec<LawReport>,
    pub props: Vec<PropReport>,
    pub violations: u64,
    pub passed: bool,
}

impl CheckReport {
    fn new(suite: Suite, k: usize, seed: u64) -> Self {
        CheckReport {
            suite: format!("{suite:?}").to_lowercase(),
            k,
            seed,
            laws: Vec::new(),
            props: Vec::new(),
            violations: 0,
            passed: true,
        }
    }

    fn finish(mut self) -> Self {
        let counted_laws = self.laws.iter().filter(|l| !l.informational).map(|l| l.violations);
        let counted_props = self.props.iter().filter(|p| !p.informational).map(|p| p.violations);
        self.violations = counted_laws.chain(counted_props).sum();
        self.passed = self.laws.iter().all(LawReport::passed) && self.props.iter().all(PropReport::passed);
        self
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SuiteError {
    #[error("k = {k} exceeds the cap {cap} of suite {suite}")]
    Cap { suite: &'static str, k: usize, cap: usize },
    #[error("k must be at least 1")]
    ZeroK,
    #[error(transparent)]
    Core(#[from] multilayer_order::Error),
}

fn check_cap(suite: &'static str, k: usize, cap: usize) -> Result<(), SuiteError> {
    if k == 0 {
        return Err(SuiteError::ZeroK);
    }
    if k > cap {
        return Err(SuiteError::Cap { suite, k, cap });
    }
    Ok(())
}

/// Runs `suite` for `k` layers. `cap` overrides the default per-suite limit.
pub fn run(suite: Suite, k: usize, seed: u64, cap: Option<usize>) -> Result<CheckReport, SuiteError> {
    let mut report = CheckReport::new(suite, k, seed);
    let law_cap = cap.unwrap_or(DEFAULT_CAP);
    let lattice_cap = cap.unwrap_or(LATTICE_CAP);
    let needs = |s: Suite| suite == s || suite == Suite::All;

    if needs(Suite::Poset) {
        check_cap("poset", k, law_cap)?;
        let space = PatternSpace::new(k)?;
        report.laws.extend(pattern::poset_axioms(&space));
        report.laws.push(pattern::order_map_correspondence(&space));
        report.laws.extend(pattern::closure_suite(&space));
        report.laws.extend(pattern::sector_soundness(&space)?);
    }
    if needs(Suite::Lattice) {
        check_cap("lattice", k, lattice_cap)?;
        report.laws.extend(pattern::lattice_suite(k)?);
    }
    // the sector lattice suite alone may run above the algebra cap
    let lattice_algebra = needs(Suite::Lattice) && k <= law_cap;
    let wants_tables = lattice_algebra || [Suite::Monoid, Suite::Drl, Suite::Band].iter().any(|&s| needs(s));
    if wants_tables {
        check_cap("algebra", k, law_cap)?;
        let space = PatternSpace::new(k)?.with_tables();
        if lattice_algebra {
            report.laws.extend(algebra::check_lattice_ordered_partial_monoid(&space));
        }
        if needs(Suite::Monoid) {
            report.laws.extend(algebra::check_partial_monoid(&space));
            report.laws.extend(algebra::check_fj_partial_hom(&space)?);
        }
        if needs(Suite::Drl) {
            report.laws.extend(algebra::check_drl(&space)?);
        }
        if needs(Suite::Band) {
            report.laws.extend(algebra::check_left_regular_band(&space));
            report.laws.extend(algebra::induced_order_report(&space));
        }
    }
    if needs(Suite::Props3) {
        let scan = props::scan_map_props(SCAN_POSETS, SCAN_PAIRS);
        report.props.extend(scan.props);
        report.laws.extend(scan.laws);
        report.props.extend(props::scan_lattice_props(SCAN_LATTICES, SCAN_PAIRS));
        report.props.push(props::scan_monoid_props(SCAN_MONOIDS, SCAN_PAIRS));
    }
    if needs(Suite::Layers) {
        report.laws.extend(layer_laws(seed, LAYER_PAIRS)?);
    }
    Ok(report.finish())
}

/// Merge laws over `pairs` seeded random layer pairs.
pub fn layer_laws(seed: u64, pairs: usize) -> Result<Vec<LawReport>, SuiteError> {
    let mut rng = random::rng(seed);
    let universe = random::universe();
    let mut vertices = LawReport::new("merge_vertex_count", None);
    let mut colors = LawReport::new("merge_color_count", None);
    let mut additive = LawReport::new("merge_multiplicity_additive", None);
    let mut commutative = LawReport::new("merge_commutative", None);
    let mut valid = LawReport::new("merge_result_valid", None);
    for i in 0..pairs {
        let g = random::random_layer(&mut rng, &universe);
        let h = random::random_layer(&mut rng, &universe);
        let m = g.merge(&h)?;
        let w = || format!("seed={seed} pair={i}");
        let p = g.node_set().intersection(h.node_set()).count();
        vertices.check(m.node_set().len() == g.node_set().len() + h.node_set().len() - p, w);
        let (cg, ch): (BTreeSet<Color>, BTreeSet<Color>) = (g.colors(), h.colors());
        let r = cg.intersection(&ch).count();
        colors.check(m.color_count() == cg.len() + ch.len() - r, w);
        let sums = (1..=random::MAX_NODE)
            .flat_map(|u| (u..=random::MAX_NODE).map(move |v| (u, v)))
            .all(|(u, v)| m.multiplicity(u, v) == g.multiplicity(u, v) + h.multiplicity(u, v));
        additive.check(sums, w);
        commutative.check(m == h.merge(&g)?, w);
        valid.check(m.is_valid(), w);
    }
    Ok(vec![vertices, colors, additive, commutative, valid])
}
