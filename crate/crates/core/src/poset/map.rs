use alloc::vec::Vec;

use super::{BitSet, FiniteLattice, FinitePoset, LatticeOp};
use crate::error::{Error, Result};

/// The map `f_{a,b}` sending each `a_i` to `b_i` and fixing every other element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionMap {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl ExceptionMap {
    /// `n` is the carrier size. Requires `a_i != b_i` and distinct `a_i`.
    pub fn new(n: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        for (idx, &(a, b)) in pairs.iter().enumerate() {
            if a >= n || b >= n {
                return Err(Error::InvalidExceptionMap("element outside the carrier"));
            }
            if a == b {
                return Err(Error::InvalidExceptionMap("a_i equals b_i"));
            }
            if pairs[..idx].iter().any(|&(a2, _)| a2 == a) {
                return Err(Error::InvalidExceptionMap("a_i repeated"));
            }
        }
        Ok(ExceptionMap { n, pairs })
    }

    pub fn identity(n: usize) -> Self {
        ExceptionMap {
            n,
            pairs: Vec::new(),
        }
    }

    pub fn carrier_len(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn apply(&self, x: usize) -> usize {
        self.pairs
            .iter()
            .find(|&&(a, _)| a == x)
            .map_or(x, |&(_, b)| b)
    }

    pub fn table(&self) -> Vec<usize> {
        let mut t: Vec<usize> = (0..self.n).collect();
        for &(a, b) in &self.pairs {
            t[a] = b;
        }
        t
    }

    /// `{a_1, .., a_n}`.
    pub fn sources(&self) -> Vec<usize> {
        self.pairs.iter().map(|&(a, _)| a).collect()
    }

    /// `{b_1, .., b_n}`, deduplicated.
    pub fn targets(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.pairs.iter().map(|&(_, b)| b).collect();
        t.sort_unstable();
        t.dedup();
        t
    }

    /// No `b_i` is also some `a_j`.
    pub fn is_disjoint(&self) -> bool {
        self.pairs
            .iter()
            .all(|&(_, b)| self.pairs.iter().all(|&(a, _)| a != b))
    }
}

pub fn is_monotone(p: &FinitePoset, f: &[usize]) -> bool {
    (0..p.len()).all(|x| p.up_set(x).iter().all(|y| p.leq(f[x], f[y])))
}

pub fn is_strictly_monotone(p: &FinitePoset, f: &[usize]) -> bool {
    (0..p.len()).all(|x| {
        p.up_set(x)
            .iter()
            .all(|y| x == y || p.lt(f[x], f[y]))
    })
}

/// Contraction, monotonicity and idempotence.
pub fn is_interior(p: &FinitePoset, f: &[usize]) -> bool {
    (0..p.len()).all(|x| p.leq(f[x], x) && f[f[x]] == f[x]) && is_monotone(p, f)
}

/// `f(x) <= y ⟺ f(x) <= f(y)` for all `x, y`.
pub fn is_interior_adjoint(p: &FinitePoset, f: &[usize]) -> bool {
    (0..p.len()).all(|x| (0..p.len()).all(|y| p.leq(f[x], y) == p.leq(f[x], f[y])))
}

/// Extension, monotonicity and idempotence.
pub fn is_closure(p: &FinitePoset, f: &[usize]) -> bool {
    (0..p.len()).all(|x| p.leq(x, f[x]) && f[f[x]] == f[x]) && is_monotone(p, f)
}

/// Per-pair strict-monotonicity criterion: each `a_i, b_i` incomparable, the
/// strict lower cone of `a_i` inside that of `b_i`, the strict upper cone of
/// `a_i` inside that of `b_i`. Exact for a single pair; with several pairs it
/// ignores interactions between them.
pub fn cha_strictly_monotone(p: &FinitePoset, f: &ExceptionMap) -> bool {
    f.pairs().iter().all(|&(a, b)| {
        if p.comparable(a, b) {
            return false;
        }
        let strict = |s: &BitSet, e: usize| {
            let mut s = s.clone();
            s.remove(e);
            s
        };
        strict(p.down_set(a), a).is_subset(&strict(p.down_set(b), b))
            && strict(p.up_set(a), a).is_subset(&strict(p.up_set(b), b))
    })
}

/// `(x ∉ A ∧ y ∉ A) ⟺ x op y ∉ A`, over the pairs where `op` is defined.
pub fn is_strictly_not_absorbing(set: &[usize], l: &FiniteLattice, op: LatticeOp) -> bool {
    let outside = |v: usize| !set.contains(&v);
    (0..l.len()).all(|x| {
        (0..l.len()).all(|y| match l.apply(op, x, y) {
            Some(v) => (outside(x) && outside(y)) == outside(v),
            None => true,
        })
    })
}

impl ExceptionMap {
    pub fn is_monotone(&self, p: &FinitePoset) -> bool {
        is_monotone(p, &self.table())
    }

    pub fn is_strictly_monotone(&self, p: &FinitePoset) -> bool {
        is_strictly_monotone(p, &self.table())
    }

    pub fn is_interior(&self, p: &FinitePoset) -> bool {
        is_interior(p, &self.table())
    }

    pub fn is_closure(&self, p: &FinitePoset) -> bool {
        is_closure(p, &self.table())
    }

    pub fn preserves_meets(&self, l: &FiniteLattice) -> bool {
        self.preserves(l, LatticeOp::Meet)
    }

    pub fn preserves_joins(&self, l: &FiniteLattice) -> bool {
        self.preserves(l, LatticeOp::Join)
    }

    fn preserves(&self, l: &FiniteLattice, op: LatticeOp) -> bool {
        let f = self.table();
        (0..l.len()).all(|x| {
            (0..l.len()).all(|y| match (l.apply(op, x, y), l.apply(op, f[x], f[y])) {
                (Some(v), Some(w)) => f[v] == w,
                (None, _) => true,
                (Some(_), None) => false,
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> FinitePoset {
        FinitePoset::from_leq(n, |i, j| i <= j).unwrap()
    }

    fn diamond() -> FinitePoset {
        FinitePoset::from_relation(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn construction() {
        assert!(ExceptionMap::new(3, alloc::vec![(0, 0)]).is_err());
        assert!(ExceptionMap::new(3, alloc::vec![(0, 1), (0, 2)]).is_err());
        assert!(ExceptionMap::new(3, alloc::vec![(0, 3)]).is_err());
        let f = ExceptionMap::new(3, alloc::vec![(0, 1), (2, 1)]).unwrap();
        assert_eq!(f.apply(0), 1);
        assert_eq!(f.apply(1), 1);
        assert_eq!(f.table(), [1, 1, 1]);
        assert_eq!(f.targets(), [1]);
        assert!(f.is_disjoint());
        assert!(!ExceptionMap::new(3, alloc::vec![(0, 1), (1, 2)]).unwrap().is_disjoint());
    }

    #[test]
    fn identity_is_everything() {
        let p = diamond();
        let id = ExceptionMap::identity(4);
        assert!(id.is_monotone(&p));
        assert!(id.is_strictly_monotone(&p));
        assert!(id.is_interior(&p));
        assert!(id.is_closure(&p));
        assert!(is_interior_adjoint(&p, &id.table()));
    }

    #[test]
    fn antichain_to_bottom_is_monotone() {
        // 2-element antichain; send 1 to 0
        let p = FinitePoset::from_leq(2, |i, j| i == j).unwrap();
        let f = ExceptionMap::new(2, alloc::vec![(1, 0)]).unwrap();
        assert!(f.is_monotone(&p));
        assert!(!f.is_strictly_monotone(&FinitePoset::from_leq(2, |i, j| i <= j).unwrap()));
    }

    #[test]
    fn atom_to_bottom_in_chain_is_interior() {
        let p = chain(3);
        let f = ExceptionMap::new(3, alloc::vec![(1, 0)]).unwrap();
        assert!(f.is_interior(&p));
        assert!(is_interior_adjoint(&p, &f.table()));
        assert!(!f.is_closure(&p));
        // the dual statement
        assert!(f.is_closure(&p.dual()));
    }

    #[test]
    fn cha_single_pair_matches_brute_force() {
        // in a 2+2 disjoint chain sum, swapping levels is strictly monotone
        let p = FinitePoset::from_relation(4, &[(0, 1), (2, 3)]).unwrap();
        let f = ExceptionMap::new(4, alloc::vec![(0, 2)]).unwrap();
        assert_eq!(cha_strictly_monotone(&p, &f), f.is_strictly_monotone(&p));
        let f = ExceptionMap::new(4, alloc::vec![(1, 0)]).unwrap();
        assert!(!cha_strictly_monotone(&p, &f));
        assert!(!f.is_strictly_monotone(&p));
    }

    #[test]
    fn strictly_not_absorbing_cases() {
        let d = FiniteLattice::from_poset(diamond());
        // atoms meet at the bottom
        assert!(!is_strictly_not_absorbing(&[0], &d, LatticeOp::Meet));
        assert!(is_strictly_not_absorbing(&[], &d, LatticeOp::Meet));
        let c = FiniteLattice::from_poset(chain(3));
        assert!(is_strictly_not_absorbing(&[2], &c, LatticeOp::Join));
        assert!(is_strictly_not_absorbing(&[0], &c, LatticeOp::Meet));
        // 2 ∈ A but 2 ∧ 0 = 0 ∉ A
        assert!(!is_strictly_not_absorbing(&[2], &c, LatticeOp::Meet));
    }
}
