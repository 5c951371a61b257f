//! Explicit finite posets, lattices and monoids, and the maps determined by
//! exception pairs.

mod bitset;
pub mod catalog;
mod lattice;
mod map;
mod monoid;
pub mod props;

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub use bitset::BitSet;
pub use lattice::{FiniteLattice, LatticeOp};
pub use map::{
    cha_strictly_monotone, is_closure, is_interior, is_interior_adjoint, is_monotone,
    is_strictly_monotone, is_strictly_not_absorbing, ExceptionMap,
};
pub use monoid::FiniteMonoid;

/// A partial order on `0..n`, stored as up-set and down-set bit rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    labels: Option<Vec<String>>,
}

impl FinitePoset {
    /// Builds the poset from a `leq` predicate and checks the axioms.
    pub fn from_leq<F: Fn(usize, usize) -> bool>(n: usize, leq: F) -> Result<Self> {
        let p = Self::from_leq_unchecked(n, leq);
        p.check_axioms()?;
        Ok(p)
    }

    /// Builds the poset without checking the axioms; see [`FinitePoset::check_axioms`].
    pub fn from_leq_unchecked<F: Fn(usize, usize) -> bool>(n: usize, leq: F) -> Self {
        let mut up = alloc::vec![BitSet::new(n); n];
        let mut down = alloc::vec![BitSet::new(n); n];
        for i in 0..n {
            for j in 0..n {
                if leq(i, j) {
                    up[i].insert(j);
                    down[j].insert(i);
                }
            }
        }
        FinitePoset {
            up,
            down,
            labels: None,
        }
    }

    /// Reflexive-transitive closure of `pairs` (each `(i, j)` meaning `i <= j`),
    /// then an antisymmetry check.
    pub fn from_relation(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut up = alloc::vec![BitSet::new(n); n];
        for (i, row) in up.iter_mut().enumerate() {
            row.insert(i);
        }
        for &(i, j) in pairs {
            if i >= n || j >= n {
                return Err(Error::NotAPoset("pair refers to a missing element"));
            }
            up[i].insert(j);
        }
        // Warshall: if i <= m then everything above m is above i
        for m in 0..n {
            let row_m = up[m].clone();
            for row in up.iter_mut() {
                if row.contains(m) {
                    row.union_with(&row_m);
                }
            }
        }
        let p = Self::from_leq_unchecked(n, |i, j| up[i].contains(j));
        p.check_axioms()?;
        Ok(p)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.len());
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn check_axioms(&self) -> Result<()> {
        let n = self.len();
        for i in 0..n {
            if !self.leq(i, i) {
                return Err(Error::NotAPoset("relation is not reflexive"));
            }
        }
        for i in 0..n {
            for j in self.up[i].iter() {
                if j != i && self.leq(j, i) {
                    return Err(Error::NotAPoset("relation is not antisymmetric"));
                }
                if !self.up[j].is_subset(&self.up[i]) {
                    return Err(Error::NotAPoset("relation is not transitive"));
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// `{j : i <= j}`.
    pub fn up_set(&self, i: usize) -> &BitSet {
        &self.up[i]
    }

    /// `{j : j <= i}`.
    pub fn down_set(&self, i: usize) -> &BitSet {
        &self.down[i]
    }

    /// Elements below every member of `set`; all elements when `set` is empty.
    pub fn lower_cone(&self, set: &[usize]) -> BitSet {
        let mut out = BitSet::full(self.len());
        for &a in set {
            out.intersect_with(&self.down[a]);
        }
        out
    }

    /// Elements above every member of `set`; all elements when `set` is empty.
    pub fn upper_cone(&self, set: &[usize]) -> BitSet {
        let mut out = BitSet::full(self.len());
        for &a in set {
            out.intersect_with(&self.up[a]);
        }
        out
    }

    /// `y` covers `x`: `x < y` with nothing strictly between.
    pub fn covers(&self, x: usize, y: usize) -> bool {
        if !self.lt(x, y) {
            return false;
        }
        let mut between = self.up[x].clone();
        between.intersect_with(&self.down[y]);
        between.len() == 2
    }

    /// `b` is the greatest element strictly below `a`: `b < a` and every
    /// `x < a` satisfies `x <= b`.
    pub fn is_greatest_below(&self, b: usize, a: usize) -> bool {
        self.lt(b, a) && self.down[a].iter().all(|x| x == a || self.leq(x, b))
    }

    /// `b` is the least element strictly above `a`.
    pub fn is_least_above(&self, b: usize, a: usize) -> bool {
        self.lt(a, b) && self.up[a].iter().all(|x| x == a || self.leq(b, x))
    }

    /// Covering pairs `(x, y)`, ordered by `x` then `y`.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in self.up[x].iter() {
                if self.covers(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn bottom(&self) -> Option<usize> {
        (0..self.len()).find(|&b| self.up[b].len() == self.len())
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.len()).find(|&t| self.down[t].len() == self.len())
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.down[i].len() == 1).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.up[i].len() == 1).collect()
    }

    /// Greatest lower bound computed from the relation, if it exists.
    pub fn glb(&self, x: usize, y: usize) -> Option<usize> {
        let mut lower = self.down[x].clone();
        lower.intersect_with(&self.down[y]);
        let found = lower.iter().find(|&c| lower.is_subset(&self.down[c]));
        found
    }

    /// Least upper bound computed from the relation, if it exists.
    pub fn lub(&self, x: usize, y: usize) -> Option<usize> {
        let mut upper = self.up[x].clone();
        upper.intersect_with(&self.up[y]);
        let found = upper.iter().find(|&c| upper.is_subset(&self.up[c]));
        found
    }

    /// The same elements with the order reversed.
    pub fn dual(&self) -> FinitePoset {
        FinitePoset {
            up: self.down.clone(),
            down: self.up.clone(),
            labels: self.labels.clone(),
        }
    }

    /// `P^n` with the componentwise order. Tuple `(t_0, .., t_{n-1})` is stored
    /// at index `Σ t_i · |P|^i`.
    pub fn power(&self, n: u32) -> FinitePoset {
        let base = self.len();
        let size = base.pow(n);
        FinitePoset::from_leq_unchecked(size, |i, j| {
            let (mut a, mut b) = (i, j);
            for _ in 0..n {
                if !self.leq(a % base, b % base) {
                    return false;
                }
                a /= base;
                b /= base;
            }
            true
        })
    }

    /// Index of the constant tuple `(e, .., e)` in [`FinitePoset::power`].
    pub fn diagonal_index(&self, e: usize, n: u32) -> usize {
        (0..n).fold(0, |acc, _| acc * self.len() + e)
    }
}
