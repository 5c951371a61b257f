//! Implications about exception maps, evaluated instance by instance and
//! aggregated over exhaustive catalogs of small posets, lattices and monoids.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::catalog::{exception_maps, lattices_up_to, monoids, posets_up_to};
use super::map::{cha_strictly_monotone, is_interior_adjoint, is_strictly_not_absorbing};
use super::{ExceptionMap, FiniteLattice, FiniteMonoid, FinitePoset, LatticeOp};
use crate::report::{LawReport, PropOutcome, PropReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prop {
    /// Lower-bounded poset, every `b_i` the bottom, `f` monotone ⇒ interior.
    BottomMonotoneInterior,
    /// Sources and targets disjoint, each `b_i` the greatest element below `a_i` ⇒ interior.
    GreatestBelowInterior,
    /// Upper-bounded poset, every `b_i` the top, `f` monotone ⇒ closure.
    TopMonotoneClosure,
    /// Sources and targets disjoint, each `b_i` the least element above `a_i` ⇒ closure.
    LeastAboveClosure,
    /// As [`Prop::GreatestBelowInterior`] with plain covering (`a_i` covers `b_i`).
    /// This weaker hypothesis is not sufficient; it is scanned for information.
    CoveringInterior,
    /// Disjoint, every `b_i` the bottom, sources strictly not absorbing for `∧` ⇒ `f` preserves meets.
    BottomSnaPreservesMeets,
    /// Disjoint, every `b_i` the top, sources strictly not absorbing for `∨` ⇒ `f` preserves joins.
    TopSnaPreservesJoins,
    /// Disjoint, every `b_i` absorbing, sources strictly not absorbing for `+` ⇒ homomorphism.
    AbsorbingSnaHomomorphism,
}

impl Prop {
    pub fn name(self) -> &'static str {
        match self {
            Prop::BottomMonotoneInterior => "bottom_monotone_implies_interior",
            Prop::GreatestBelowInterior => "disjoint_covered_implies_interior",
            Prop::TopMonotoneClosure => "top_monotone_implies_closure",
            Prop::LeastAboveClosure => "disjoint_covered_implies_closure",
            Prop::CoveringInterior => "disjoint_plain_cover_implies_interior",
            Prop::BottomSnaPreservesMeets => "bottom_sna_implies_meet_preservation",
            Prop::TopSnaPreservesJoins => "top_sna_implies_join_preservation",
            Prop::AbsorbingSnaHomomorphism => "absorbing_sna_implies_homomorphism",
        }
    }

    pub fn is_informational(self) -> bool {
        matches!(self, Prop::CoveringInterior)
    }
}

fn all_targets_are(f: &ExceptionMap, e: Option<usize>) -> bool {
    match e {
        Some(e) => f.pairs().iter().all(|&(_, b)| b == e),
        None => false,
    }
}

/// The four interior/closure implications (plus the plain-cover variant) on one instance.
pub fn check_map_props(p: &FinitePoset, f: &ExceptionMap) -> Vec<(Prop, PropOutcome)> {
    let table = f.table();
    let monotone = super::is_monotone(p, &table);
    let interior = super::is_interior(p, &table);
    let closure = super::is_closure(p, &table);
    let disjoint = f.is_disjoint();
    let pairs = f.pairs();
    alloc::vec![
        (
            Prop::BottomMonotoneInterior,
            PropOutcome {
                hypothesis: all_targets_are(f, p.bottom()) && monotone,
                conclusion: interior,
            },
        ),
        (
            Prop::GreatestBelowInterior,
            PropOutcome {
                hypothesis: disjoint && pairs.iter().all(|&(a, b)| p.is_greatest_below(b, a)),
                conclusion: interior,
            },
        ),
        (
            Prop::TopMonotoneClosure,
            PropOutcome {
                hypothesis: all_targets_are(f, p.top()) && monotone,
                conclusion: closure,
            },
        ),
        (
            Prop::LeastAboveClosure,
            PropOutcome {
                hypothesis: disjoint && pairs.iter().all(|&(a, b)| p.is_least_above(b, a)),
                conclusion: closure,
            },
        ),
        (
            Prop::CoveringInterior,
            PropOutcome {
                hypothesis: disjoint && pairs.iter().all(|&(a, b)| p.covers(b, a)),
                conclusion: interior,
            },
        ),
    ]
}

/// Meet and join preservation implications on one lattice instance.
pub fn check_lattice_props(l: &FiniteLattice, f: &ExceptionMap) -> Vec<(Prop, PropOutcome)> {
    let sources = f.sources();
    let disjoint = f.is_disjoint();
    alloc::vec![
        (
            Prop::BottomSnaPreservesMeets,
            PropOutcome {
                hypothesis: disjoint
                    && all_targets_or_empty(f, l.poset().bottom())
                    && is_strictly_not_absorbing(&sources, l, LatticeOp::Meet),
                conclusion: f.preserves_meets(l),
            },
        ),
        (
            Prop::TopSnaPreservesJoins,
            PropOutcome {
                hypothesis: disjoint
                    && all_targets_or_empty(f, l.poset().top())
                    && is_strictly_not_absorbing(&sources, l, LatticeOp::Join),
                conclusion: f.preserves_joins(l),
            },
        ),
    ]
}

fn all_targets_or_empty(f: &ExceptionMap, e: Option<usize>) -> bool {
    f.pairs().is_empty() || all_targets_are(f, e)
}

/// The absorbing-element homomorphism implication on one monoid instance.
pub fn check_absorbing_hom_prop(m: &FiniteMonoid, f: &ExceptionMap) -> PropOutcome {
    let hypothesis = f.is_disjoint()
        && all_targets_or_empty(f, m.absorbing_element())
        && m.is_strictly_not_absorbing(&f.sources());
    PropOutcome {
        hypothesis,
        conclusion: m.is_homomorphism(&f.table()),
    }
}

fn describe(p: &FinitePoset, f: &ExceptionMap) -> String {
    format!("n={} hasse={:?} pairs={:?}", p.len(), p.hasse_edges(), f.pairs())
}

/// Aggregated results of the poset scans.
#[derive(Debug, Clone)]
pub struct MapPropScan {
    pub props: Vec<PropReport>,
    pub laws: Vec<LawReport>,
}

/// Every non-isomorphic poset with at most `max_n` elements, every exception
/// map with at most `max_pairs` pairs.
pub fn scan_map_props(max_n: usize, max_pairs: usize) -> MapPropScan {
    let order = [
        Prop::BottomMonotoneInterior,
        Prop::GreatestBelowInterior,
        Prop::TopMonotoneClosure,
        Prop::LeastAboveClosure,
        Prop::CoveringInterior,
    ];
    let mut props: Vec<PropReport> = order
        .iter()
        .map(|p| {
            let r = PropReport::new(p.name());
            if p.is_informational() {
                r.informational()
            } else {
                r
            }
        })
        .collect();
    let mut converse = PropReport::new("interior_with_non_bottom_targets").informational();
    let mut adjoint = LawReport::new("interior_axioms_match_adjoint_form", None);
    let mut duality = LawReport::new("interior_iff_closure_on_dual", None);
    let mut cha = LawReport::new("strict_monotonicity_matches_cone_criterion", None).informational();
    let mut cha_single = LawReport::new("strict_monotonicity_matches_cone_criterion_single_pair", None);

    for p in posets_up_to(max_n) {
        let dual = p.dual();
        for f in exception_maps(p.len(), max_pairs) {
            for (i, (prop, outcome)) in check_map_props(&p, &f).into_iter().enumerate() {
                debug_assert_eq!(prop, order[i]);
                props[i].record(outcome, || describe(&p, &f));
            }
            let table = f.table();
            let interior = super::is_interior(&p, &table);
            converse.record(
                PropOutcome {
                    hypothesis: interior && !f.pairs().is_empty(),
                    conclusion: all_targets_are(&f, p.bottom()),
                },
                || describe(&p, &f),
            );
            adjoint.check(interior == is_interior_adjoint(&p, &table), || describe(&p, &f));
            duality.check(interior == super::is_closure(&dual, &table), || describe(&p, &f));
            let strict = super::is_strictly_monotone(&p, &table);
            let criterion = cha_strictly_monotone(&p, &f);
            if f.pairs().len() == 1 {
                cha_single.check(strict == criterion, || describe(&p, &f));
            } else if !f.pairs().is_empty() {
                cha.check(strict == criterion, || describe(&p, &f));
            }
        }
    }
    props.push(converse);
    MapPropScan {
        props,
        laws: alloc::vec![adjoint, duality, cha_single, cha],
    }
}

/// Meet/join preservation over every non-isomorphic lattice with at most `max_n` elements.
pub fn scan_lattice_props(max_n: usize, max_pairs: usize) -> Vec<PropReport> {
    let mut meets = PropReport::new(Prop::BottomSnaPreservesMeets.name());
    let mut joins = PropReport::new(Prop::TopSnaPreservesJoins.name());
    for l in lattices_up_to(max_n) {
        for f in exception_maps(l.len(), max_pairs) {
            let outcomes = check_lattice_props(&l, &f);
            meets.record(outcomes[0].1, || describe(l.poset(), &f));
            joins.record(outcomes[1].1, || describe(l.poset(), &f));
        }
    }
    alloc::vec![meets, joins]
}

/// The homomorphism implication over every monoid with at most `max_n` elements.
pub fn scan_monoid_props(max_n: usize, max_pairs: usize) -> PropReport {
    let mut report = PropReport::new(Prop::AbsorbingSnaHomomorphism.name());
    for n in 1..=max_n {
        for m in monoids(n) {
            for f in exception_maps(n, max_pairs) {
                report.record(check_absorbing_hom_prop(&m, &f), || {
                    format!("n={n} table={:?} pairs={:?}", (0..n * n).map(|i| m.op(i / n, i % n)).collect::<Vec<_>>(), f.pairs())
                });
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> FinitePoset {
        FinitePoset::from_leq(n, |i, j| i <= j).unwrap()
    }

    fn outcome(p: &FinitePoset, f: &ExceptionMap, prop: Prop) -> PropOutcome {
        check_map_props(p, f)
            .into_iter()
            .find(|(q, _)| *q == prop)
            .unwrap()
            .1
    }

    #[test]
    fn chain_top_to_middle_is_interior_without_bottom() {
        let p = chain(3);
        let f = ExceptionMap::new(3, alloc::vec![(2, 1)]).unwrap();
        let o = outcome(&p, &f, Prop::GreatestBelowInterior);
        assert!(o.hypothesis && o.conclusion);
        assert!(!outcome(&p, &f, Prop::BottomMonotoneInterior).hypothesis);
    }

    #[test]
    fn plain_cover_is_not_enough() {
        // diamond: 3 covers 1, but 2 < 3 is not below 1
        let p = FinitePoset::from_relation(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let f = ExceptionMap::new(4, alloc::vec![(3, 1)]).unwrap();
        let o = outcome(&p, &f, Prop::CoveringInterior);
        assert!(o.violated());
        assert!(!outcome(&p, &f, Prop::GreatestBelowInterior).hypothesis);
    }

    #[test]
    fn min_monoid_hypothesis_fails() {
        let table = (0..9).map(|i| (i / 3).min(i % 3)).collect();
        let m = FiniteMonoid::new(3, table, 2).unwrap();
        let f = ExceptionMap::new(3, alloc::vec![(1, 0)]).unwrap();
        let o = check_absorbing_hom_prop(&m, &f);
        assert!(!o.hypothesis);
    }

    #[test]
    fn small_scans_have_no_violations() {
        let scan = scan_map_props(4, 2);
        for r in &scan.props {
            assert!(r.passed(), "{r:?}");
        }
        for r in &scan.laws {
            assert!(r.passed(), "{r:?}");
        }
        for r in scan_lattice_props(4, 2) {
            assert_eq!(r.violations, 0);
        }
        assert_eq!(scan_monoid_props(3, 2).violations, 0);
    }
}
