//! Exhaustive law checks for the partial minimum, run on a [`PatternSpace`]
//! with meet/join tables.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::subtract;
use crate::error::Result;
use crate::pattern::{PatternSpace, Sector};
use crate::report::LawReport;

fn sum(s: &PatternSpace, x: usize, y: usize) -> Option<usize> {
    let p = s.poset();
    if p.leq(x, y) {
        Some(x)
    } else if p.leq(y, x) {
        Some(y)
    } else {
        None
    }
}

fn both<T>(a: Option<T>, b: Option<T>) -> Option<(T, T)> {
    a.zip(b)
}

/// Commutativity, two-sided identity and associativity on pairwise comparable triples.
pub fn check_partial_monoid(s: &PatternSpace) -> Vec<LawReport> {
    let k = Some(s.k());
    let n = s.len();
    let top = s.top_index();
    let name = |i: usize| s.pattern(i);
    let mut comm = LawReport::new("plus_commutative", k);
    let mut ident = LawReport::new("plus_top_identity", k);
    let mut assoc = LawReport::new("plus_associative", k);
    for x in 0..n {
        ident.check(sum(s, x, top) == Some(x) && sum(s, top, x) == Some(x), || {
            format!("x={}", name(x))
        });
        for y in 0..n {
            let xy = sum(s, x, y);
            comm.record(xy.is_some(), xy == sum(s, y, x), || format!("x={} y={}", name(x), name(y)));
            for z in 0..n {
                let lhs = xy.and_then(|xy| sum(s, xy, z));
                let rhs = sum(s, y, z).and_then(|yz| sum(s, x, yz));
                let defined = xy.is_some() && sum(s, y, z).is_some() && lhs.is_some() && rhs.is_some();
                assoc.record(defined, lhs == rhs, || {
                    format!("x={} y={} z={}", name(x), name(y), name(z))
                });
            }
        }
    }
    vec![comm, ident, assoc]
}

/// Translation invariance and distributivity of `+` over `∨` and `∧`, on both sides.
pub fn check_lattice_ordered_partial_monoid(s: &PatternSpace) -> Vec<LawReport> {
    assert!(s.has_tables(), "meet/join tables required");
    let k = Some(s.k());
    let n = s.len();
    let p = s.poset();
    let name = |i: usize| s.pattern(i);
    let mut translation = LawReport::new("plus_translation_invariant", k);
    let mut over_join = LawReport::new("plus_distributes_over_join", k);
    let mut over_meet = LawReport::new("plus_distributes_over_meet", k);
    for a in 0..n {
        for b in p.up_set(a).iter() {
            for x in 0..n {
                let right = both(sum(s, a, x), sum(s, b, x));
                let left = both(sum(s, x, a), sum(s, x, b));
                let holds = right.is_none_or(|(l, r)| p.leq(l, r)) && left.is_none_or(|(l, r)| p.leq(l, r));
                translation.record(right.is_some() || left.is_some(), holds, || {
                    format!("a={} b={} x={}", name(a), name(b), name(x))
                });
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = sum(s, x, y);
            for z in 0..n {
                let xz = sum(s, x, z);
                let w = || format!("x={} y={} z={}", name(x), name(y), name(z));
                for (law, op) in [(&mut over_join, 0), (&mut over_meet, 1)] {
                    let table = |a: usize, b: usize| if op == 0 { s.join_index(a, b) } else { s.meet_index(a, b) };
                    let lhs = table(y, z).and_then(|yz| sum(s, x, yz));
                    let lhs_r = table(y, z).and_then(|yz| sum(s, yz, x));
                    let rhs = both(xy, xz).and_then(|(a, b)| table(a, b));
                    let rhs_r = both(sum(s, y, x), sum(s, z, x)).and_then(|(a, b)| table(a, b));
                    let defined = lhs.is_some() && rhs.is_some() && lhs_r.is_some() && rhs_r.is_some();
                    law.record(defined, lhs == rhs && lhs_r == rhs_r, w);
                }
            }
        }
    }
    vec![translation, over_join, over_meet]
}

/// `f_j(x + y) = f_j(x) + f_j(y)` with the right side defined, and `f_j(top) = top`.
pub fn check_fj_partial_hom(s: &PatternSpace) -> Result<Vec<LawReport>> {
    let k = Some(s.k());
    let n = s.len();
    let name = |i: usize| s.pattern(i);
    let mut defined = LawReport::new("f_j_preserves_definedness", k);
    let mut hom = LawReport::new("f_j_partial_homomorphism", k);
    let mut top = LawReport::new("f_j_fixes_identity", k);
    for j in 1..s.k() {
        let f: Vec<usize> = s
            .patterns()
            .iter()
            .map(|x| s.index_of(&x.f_merge(j).expect("slot in range")).expect("closed"))
            .collect();
        top.check(f[s.top_index()] == s.top_index(), || format!("j={j}"));
        for x in 0..n {
            for y in 0..n {
                let Some(xy) = sum(s, x, y) else {
                    continue;
                };
                let rhs = sum(s, f[x], f[y]);
                let w = || format!("j={j} x={} y={}", name(x), name(y));
                defined.check(rhs.is_some(), w);
                hom.check(rhs == Some(f[xy]), w);
            }
        }
    }
    Ok(vec![defined, hom, top])
}

/// Dual residuation within every sector, with `0` read as the identity (top).
/// The axiom `x - x >= 0` and the least-solution reading of `y - x` are
/// recorded as informational entries.
pub fn check_drl(s: &PatternSpace) -> Result<Vec<LawReport>> {
    assert!(s.has_tables(), "meet/join tables required");
    let k = s.k();
    let kk = Some(k);
    let zero = s.top_index();
    let p = s.poset();
    let mut exists = LawReport::new("drl_subtraction_exists", kk);
    let mut left = LawReport::new("drl_left_residuation_bound", kk);
    let mut right = LawReport::new("drl_right_residuation_bound", kk);
    let mut axiom4 = LawReport::new("drl_self_difference_above_zero", kk).informational();
    let mut least = LawReport::new("drl_difference_is_least_solution", kk).informational();
    let size = 1u32 << (k - 1);
    for sector in Sector::all(k) {
        for am in 0..size {
            let a = sector.pattern(am);
            let ai = s.index_of(&a).expect("enumerated");
            for bm in 0..size {
                let b = sector.pattern(bm);
                let bi = s.index_of(&b).expect("enumerated");
                let w = || format!("sector={sector} a={a} b={b}");
                let d = subtract(&a, &b, &sector);
                exists.check(d.as_ref().is_ok_and(|d| sector.contains(d)), w);
                let Ok(d) = d else { continue };
                let di = s.index_of(&d).expect("enumerated");
                let a_or_b = s.join_index(ai, bi);
                let d_or_zero = s.join_index(di, zero);
                let l = d_or_zero.and_then(|e| sum(s, bi, e));
                let r = d_or_zero.and_then(|e| sum(s, e, bi));
                left.record(l.is_some() && a_or_b.is_some(), both(l, a_or_b).is_some_and(|(l, u)| p.leq(l, u)), w);
                right.record(r.is_some() && a_or_b.is_some(), both(r, a_or_b).is_some_and(|(r, u)| p.leq(r, u)), w);

                // least c with b + c >= a
                let solutions: Vec<usize> = (0..s.len())
                    .filter(|&c| sum(s, bi, c).is_some_and(|v| p.leq(ai, v)))
                    .collect();
                let smallest = solutions
                    .iter()
                    .copied()
                    .find(|&c| solutions.iter().all(|&o| p.leq(c, o)));
                least.record(smallest.is_some(), smallest == Some(di), w);
            }
            let dd = subtract(&a, &a, &sector)?;
            let ddi = s.index_of(&dd).expect("enumerated");
            axiom4.check(p.leq(zero, ddi), || format!("sector={sector} x={a} x-x={dd}"));
        }
    }
    Ok(vec![exists, left, right, axiom4, least])
}

/// Idempotence and the deletion property `x + y + x = x + y`.
pub fn check_left_regular_band(s: &PatternSpace) -> Vec<LawReport> {
    let k = Some(s.k());
    let n = s.len();
    let name = |i: usize| s.pattern(i);
    let mut idem = LawReport::new("plus_idempotent", k);
    let mut deletion = LawReport::new("deletion_property", k);
    for x in 0..n {
        idem.check(sum(s, x, x) == Some(x), || format!("x={}", name(x)));
        for y in 0..n {
            let xy = sum(s, x, y);
            let xyx = xy.and_then(|v| sum(s, v, x));
            let yx = sum(s, y, x);
            let yxy = yx.and_then(|v| sum(s, v, y));
            deletion.record(
                xyx.is_some() && yxy.is_some(),
                xyx == xy && yxy == xy,
                || format!("x={} y={}", name(x), name(y)),
            );
        }
    }
    vec![idem, deletion]
}

/// Compares `{(x, y) : x + y = y}` with the order and with its reverse.
pub fn induced_order_report(s: &PatternSpace) -> Vec<LawReport> {
    let k = Some(s.k());
    let n = s.len();
    let p = s.poset();
    let name = |i: usize| s.pattern(i);
    let mut forward = LawReport::new("plus_induced_order_matches_order", k).informational();
    let mut reverse = LawReport::new("plus_induced_order_matches_reverse_order", k).informational();
    for x in 0..n {
        for y in 0..n {
            let induced = sum(s, x, y) == Some(y);
            forward.check(induced == p.leq(x, y), || format!("x={} y={}", name(x), name(y)));
            reverse.check(induced == p.leq(y, x), || format!("x={} y={}", name(x), name(y)));
        }
    }
    vec![forward, reverse]
}

/// Every algebra check for `k` layers.
pub fn algebra_suite(k: usize) -> Result<Vec<LawReport>> {
    let s = PatternSpace::new(k)?.with_tables();
    let mut out = check_partial_monoid(&s);
    out.extend(check_lattice_ordered_partial_monoid(&s));
    out.extend(check_fj_partial_hom(&s)?);
    out.extend(check_drl(&s)?);
    out.extend(check_left_regular_band(&s));
    out.extend(induced_order_report(&s));
    Ok(out)
}
