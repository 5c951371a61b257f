//! Exhaustive law suites over the pattern poset.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{complement, join, meet, ConcatPattern, PatternSpace, Sector};
use crate::error::Result;
use crate::report::LawReport;

/// Ordered Bell numbers from `a(n) = Σ C(n, i) a(n - i)`.
pub fn ordered_bell(n: usize) -> u64 {
    let mut a = vec![1u64; n + 1];
    for m in 1..=n {
        let mut binom = 1u64;
        let mut sum = 0u64;
        for i in 1..=m {
            binom = binom * (m - i + 1) as u64 / i as u64;
            sum += binom * a[m - i];
        }
        a[m] = sum;
    }
    a[n]
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Pattern count, reflexivity, antisymmetry, transitivity, unique top and
/// `k!` minimal elements.
pub fn poset_axioms(space: &PatternSpace) -> Vec<LawReport> {
    let k = Some(space.k());
    let p = space.poset();
    let n = space.len();
    let pats = space.patterns();

    let mut count = LawReport::new("pattern_count_is_ordered_bell", k);
    count.check(n as u64 == ordered_bell(space.k()), || {
        format!("found {n}, expected {}", ordered_bell(space.k()))
    });

    let mut refl = LawReport::new("reflexivity", k);
    let mut anti = LawReport::new("antisymmetry", k);
    let mut trans = LawReport::new("transitivity", k);
    for i in 0..n {
        refl.check(pats[i].leq_unchecked(&pats[i]), || format!("x={}", pats[i]));
        for j in 0..n {
            if i == j {
                continue;
            }
            let le = p.leq(i, j);
            anti.check(!(le && p.leq(j, i)), || format!("x={} y={}", pats[i], pats[j]));
            if le {
                trans.check(p.up_set(j).is_subset(p.up_set(i)), || {
                    format!("x={} y={}", pats[i], pats[j])
                });
            }
        }
    }

    let mut top = LawReport::new("unique_top", k);
    let maximal = p.maximal_elements();
    top.check(maximal.len() == 1 && pats[maximal[0]].is_top(), || {
        format!("{} maximal elements", maximal.len())
    });
    let mut minimal = LawReport::new("k_factorial_minimal_elements", k);
    let mins = p.minimal_elements();
    minimal.check(
        mins.len() as u64 == factorial(space.k()) && mins.iter().all(|&i| pats[i].is_minimal()),
        || format!("{} minimal elements", mins.len()),
    );
    vec![count, refl, anti, trans, top, minimal]
}

fn reachable(x: &ConcatPattern) -> Vec<ConcatPattern> {
    let mut seen = vec![x.clone()];
    let mut frontier = vec![x.clone()];
    while let Some(y) = frontier.pop() {
        for j in 1..y.k() {
            let z = y.f_merge_unchecked(j);
            if !seen.contains(&z) {
                seen.push(z.clone());
                frontier.push(z);
            }
        }
    }
    seen
}

/// `x <= y` iff `y` is reachable from `x` by merge maps.
pub fn order_map_correspondence(space: &PatternSpace) -> LawReport {
    let mut r = LawReport::new("order_matches_merge_reachability", Some(space.k()));
    for (i, x) in space.patterns().iter().enumerate() {
        let reach = reachable(x);
        for (j, y) in space.patterns().iter().enumerate() {
            r.check(space.poset().leq(i, j) == reach.contains(y), || format!("x={x} y={y}"));
        }
    }
    r
}

/// Each `f_j` is monotone, increasing and idempotent, raises the level by one
/// when it acts, and preserves sector meets and joins; every order of the full
/// slot sweep reaches the top.
pub fn closure_suite(space: &PatternSpace) -> Vec<LawReport> {
    let k = space.k();
    let kk = Some(k);
    let pats = space.patterns();
    let mut monotone = LawReport::new("f_j_monotone", kk);
    let mut increasing = LawReport::new("f_j_increasing", kk);
    let mut idempotent = LawReport::new("f_j_idempotent", kk);
    let mut level = LawReport::new("f_j_level_shift", kk);
    let mut meets = LawReport::new("f_j_preserves_sector_meets", kk);
    let mut joins = LawReport::new("f_j_preserves_sector_joins", kk);
    let mut sweep = LawReport::new("full_merge_reaches_top", kk);

    for j in 1..k {
        let images: Vec<ConcatPattern> = pats.iter().map(|x| x.f_merge_unchecked(j)).collect();
        for (i, x) in pats.iter().enumerate() {
            let fx = &images[i];
            increasing.check(x.leq_unchecked(fx), || format!("j={j} x={x}"));
            idempotent.check(&fx.f_merge_unchecked(j) == fx, || format!("j={j} x={x}"));
            if fx != x {
                level.check(fx.level() == x.level() + 1, || format!("j={j} x={x}"));
            }
            for y in space.poset().up_set(i).iter() {
                monotone.check(fx.leq_unchecked(&images[y]), || format!("j={j} x={x} y={}", pats[y]));
            }
        }
        for s in Sector::all(k) {
            let slots = 1u32 << (k - 1);
            let in_sector: Vec<ConcatPattern> = (0..slots).map(|m| s.pattern(m)).collect();
            for x in &in_sector {
                for y in &in_sector {
                    let lhs = s.meet(x, y).map(|m| m.f_merge_unchecked(j));
                    let rhs = s.meet(&x.f_merge_unchecked(j), &y.f_merge_unchecked(j));
                    meets.check(lhs.is_ok() && lhs.ok() == rhs.ok(), || format!("j={j} sector={s} x={x} y={y}"));
                    let lhs = s.join(x, y).map(|m| m.f_merge_unchecked(j));
                    let rhs = s.join(&x.f_merge_unchecked(j), &y.f_merge_unchecked(j));
                    joins.check(lhs.is_ok() && lhs.ok() == rhs.ok(), || format!("j={j} sector={s} x={x} y={y}"));
                }
            }
        }
    }

    let mut slots: Vec<usize> = (1..k).collect();
    let orders = permutations(&mut slots);
    for x in pats {
        for order in &orders {
            let mut y = x.clone();
            for &j in order {
                y = y.f_merge_unchecked(j);
            }
            sweep.check(y.is_top(), || format!("x={x} order={order:?}"));
        }
    }
    vec![monotone, increasing, idempotent, level, meets, joins, sweep]
}

fn permutations(items: &mut Vec<usize>) -> Vec<Vec<usize>> {
    fn go(items: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
        if start + 1 >= items.len() {
            out.push(items.clone());
            return;
        }
        for i in start..items.len() {
            items.swap(start, i);
            go(items, start + 1, out);
            items.swap(start, i);
        }
    }
    let mut out = Vec::new();
    go(items, 0, &mut out);
    out
}

/// Absorption, distributivity and complement laws inside every sector of
/// `k` layers. Meets and joins come from [`meet`] and [`join`], so a result
/// computed in another common sector must land back in this one.
pub fn lattice_suite(k: usize) -> Result<Vec<LawReport>> {
    let kk = Some(k);
    let mut closed = LawReport::new("sector_closed_under_meet_join", kk);
    let mut absorb_join = LawReport::new("absorption_join_of_meet", kk);
    let mut absorb_meet = LawReport::new("absorption_meet_of_join", kk);
    let mut dist_meet = LawReport::new("distributivity_meet_over_join", kk);
    let mut dist_join = LawReport::new("distributivity_join_over_meet", kk);
    let mut comp_join = LawReport::new("complement_join_is_top", kk);
    let mut comp_meet = LawReport::new("complement_meet_is_sector_minimal", kk);
    let mut involution = LawReport::new("complement_involution", kk);

    let size = 1usize << (k - 1);
    let mut m = vec![0u32; size * size];
    let mut jn = vec![0u32; size * size];
    for s in Sector::all(k) {
        let pats: Vec<ConcatPattern> = (0..size as u32).map(|v| s.pattern(v)).collect();
        let mut ok = true;
        for a in 0..size {
            for b in 0..size {
                let mm = meet(&pats[a], &pats[b])?.and_then(|z| s.merge_mask(&z));
                let jj = join(&pats[a], &pats[b])?.and_then(|z| s.merge_mask(&z));
                closed.check(mm.is_some() && jj.is_some(), || {
                    format!("sector={s} x={} y={}", pats[a], pats[b])
                });
                ok &= mm.is_some() && jj.is_some();
                m[a * size + b] = mm.unwrap_or(0);
                jn[a * size + b] = jj.unwrap_or(0);
            }
        }
        if !ok {
            continue;
        }
        let mt = |a: u32, b: u32| m[a as usize * size + b as usize];
        let jt = |a: u32, b: u32| jn[a as usize * size + b as usize];
        let top = (size - 1) as u32;
        for x in 0..size as u32 {
            let c = complement(&pats[x as usize], &s)?;
            let cm = s.require(&c)?;
            comp_join.check(jt(x, cm) == top, || format!("sector={s} x={}", pats[x as usize]));
            comp_meet.check(mt(x, cm) == 0, || format!("sector={s} x={}", pats[x as usize]));
            involution.check(complement(&c, &s)? == pats[x as usize], || {
                format!("sector={s} x={}", pats[x as usize])
            });
            for y in 0..size as u32 {
                absorb_join.check(jt(x, mt(x, y)) == x, || {
                    format!("sector={s} x={} y={}", pats[x as usize], pats[y as usize])
                });
                absorb_meet.check(mt(x, jt(x, y)) == x, || {
                    format!("sector={s} x={} y={}", pats[x as usize], pats[y as usize])
                });
                for z in 0..size as u32 {
                    let w = || {
                        format!(
                            "sector={s} x={} y={} z={}",
                            pats[x as usize], pats[y as usize], pats[z as usize]
                        )
                    };
                    dist_meet.check(mt(x, jt(y, z)) == jt(mt(x, y), mt(x, z)), w);
                    dist_join.check(jt(x, mt(y, z)) == mt(jt(x, y), jt(x, z)), w);
                }
            }
        }
    }
    Ok(vec![
        closed,
        absorb_join,
        absorb_meet,
        dist_meet,
        dist_join,
        comp_join,
        comp_meet,
        involution,
    ])
}

/// Sector meets and joins agree across every common sector and equal the
/// greatest lower / least upper bounds of the explicit poset; cross-sector
/// pairs get the explicit bound or nothing.
pub fn sector_soundness(space: &PatternSpace) -> Result<Vec<LawReport>> {
    let kk = Some(space.k());
    let p = space.poset();
    let mut independent = LawReport::new("sector_meet_join_independent_of_sector", kk);
    let mut glb = LawReport::new("meet_is_glb", kk);
    let mut lub = LawReport::new("join_is_lub", kk);
    for (i, x) in space.patterns().iter().enumerate() {
        for (j, y) in space.patterns().iter().enumerate() {
            let sectors: Vec<Sector> = x.sectors().into_iter().filter(|s| s.contains(y)).collect();
            if let Some((first, rest)) = sectors.split_first() {
                let m0 = first.meet(x, y)?;
                let j0 = first.join(x, y)?;
                for s in rest {
                    independent.check(s.meet(x, y)? == m0 && s.join(x, y)? == j0, || {
                        format!("x={x} y={y} sectors={first},{s}")
                    });
                }
            }
            let m = meet(x, y)?.map(|z| space.index_of(&z));
            glb.check(m == p.glb(i, j).map(Some), || format!("x={x} y={y}"));
            let u = join(x, y)?.map(|z| space.index_of(&z));
            lub.check(u == p.lub(i, j).map(Some), || format!("x={x} y={y}"));
        }
    }
    Ok(vec![independent, glb, lub])
}

/// Every suite above for `k` layers; the lattice suite is included for any `k`.
pub fn pattern_suite(k: usize) -> Result<Vec<LawReport>> {
    let space = PatternSpace::new(k)?;
    let mut out = poset_axioms(&space);
    out.push(order_map_correspondence(&space));
    out.extend(closure_suite(&space));
    out.extend(sector_soundness(&space)?);
    out.extend(lattice_suite(k)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordered_bell_values() {
        let v: Vec<u64> = (0..=6).map(ordered_bell).collect();
        assert_eq!(v, [1, 1, 3, 13, 75, 541, 4683]);
    }

    #[test]
    fn suites_pass_for_small_k() {
        for k in 1..=4 {
            for r in pattern_suite(k).unwrap() {
                assert!(r.passed(), "{r:?}");
                if k > 1 {
                    assert!(r.defined_pairs > 0, "{r:?}");
                }
            }
        }
    }

    #[test]
    fn reachability_from_top_is_top() {
        let top = super::super::top_pattern(3).unwrap();
        assert_eq!(reachable(&top), [top]);
    }
}
