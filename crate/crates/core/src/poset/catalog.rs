//! Brute-force catalogs of small structures: all posets up to isomorphism,
//! the lattices among them, all monoids, and all exception maps.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{ExceptionMap, FiniteLattice, FiniteMonoid, FinitePoset};

/// Every partial order on `0..n` (labeled, so isomorphic copies repeat).
/// Each unordered pair `{i, j}` is unrelated, `i < j` or `j < i`; the candidates
/// that are transitive are kept.
pub fn labeled_posets(n: usize) -> Vec<FinitePoset> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let total = 3usize.pow(pairs.len() as u32);
    let mut out = Vec::new();
    let mut rel = alloc::vec![false; n * n];
    for code in 0..total {
        rel.iter_mut().for_each(|r| *r = false);
        for i in 0..n {
            rel[i * n + i] = true;
        }
        let mut c = code;
        for &(i, j) in &pairs {
            match c % 3 {
                1 => rel[i * n + j] = true,
                2 => rel[j * n + i] = true,
                _ => {}
            }
            c /= 3;
        }
        let transitive = (0..n).all(|a| {
            (0..n).all(|b| !rel[a * n + b] || (0..n).all(|c| !rel[b * n + c] || rel[a * n + c]))
        });
        if transitive {
            out.push(FinitePoset::from_leq_unchecked(n, |i, j| rel[i * n + j]));
        }
    }
    out
}

fn relabelings(n: usize) -> Vec<Vec<usize>> {
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
    go(&mut (0..n).collect(), 0, &mut out);
    out
}

/// Smallest bit encoding of the relation over all relabelings.
fn canonical_code(p: &FinitePoset, perms: &[Vec<usize>]) -> u64 {
    let n = p.len();
    perms
        .iter()
        .map(|perm| {
            let mut code = 0u64;
            for i in 0..n {
                for j in 0..n {
                    if p.leq(i, j) {
                        code |= 1 << (perm[i] * n + perm[j]);
                    }
                }
            }
            code
        })
        .min()
        .unwrap_or(0)
}

/// One representative per isomorphism class of posets with exactly `n` elements.
pub fn nonisomorphic_posets(n: usize) -> Vec<FinitePoset> {
    assert!(n <= 7, "canonical codes need n * n <= 64");
    let perms = relabelings(n);
    let mut seen = BTreeSet::new();
    labeled_posets(n)
        .into_iter()
        .filter(|p| seen.insert(canonical_code(p, &perms)))
        .collect()
}

/// Non-isomorphic posets with `1..=max_n` elements.
pub fn posets_up_to(max_n: usize) -> Vec<FinitePoset> {
    (1..=max_n).flat_map(nonisomorphic_posets).collect()
}

/// Non-isomorphic lattices with `1..=max_n` elements.
pub fn lattices_up_to(max_n: usize) -> Vec<FiniteLattice> {
    posets_up_to(max_n)
        .into_iter()
        .map(FiniteLattice::from_poset)
        .filter(FiniteLattice::is_total)
        .collect()
}

/// Every monoid on `0..n` whose identity is `0`. Up to relabeling this covers
/// all monoids of order `n`.
pub fn monoids(n: usize) -> Vec<FiniteMonoid> {
    if n == 0 {
        return Vec::new();
    }
    let free: Vec<(usize, usize)> = (1..n).flat_map(|x| (1..n).map(move |y| (x, y))).collect();
    let total = n.pow(free.len() as u32);
    let mut table = alloc::vec![0usize; n * n];
    for x in 0..n {
        table[x] = x;
        table[x * n] = x;
    }
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        for &(x, y) in &free {
            table[x * n + y] = c % n;
            c /= n;
        }
        if let Ok(m) = FiniteMonoid::new(n, table.clone(), 0) {
            out.push(m);
        }
    }
    out
}

/// Every exception map on an `n`-element carrier with at most `max_pairs`
/// pairs, listing sources in increasing order so each map appears once.
pub fn exception_maps(n: usize, max_pairs: usize) -> Vec<ExceptionMap> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(
        n: usize,
        max_pairs: usize,
        next_a: usize,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<ExceptionMap>,
    ) {
        out.push(ExceptionMap::new(n, current.clone()).expect("pairs are valid by construction"));
        if current.len() == max_pairs {
            return;
        }
        for a in next_a..n {
            for b in (0..n).filter(|&b| b != a) {
                current.push((a, b));
                go(n, max_pairs, a + 1, current, out);
                current.pop();
            }
        }
    }
    go(n, max_pairs, 0, &mut current, &mut out);
    out
}
