use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A total associative operation with identity on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    n: usize,
    table: Vec<usize>,
    identity: usize,
}

impl FiniteMonoid {
    /// `table[x * n + y]` is `x + y`.
    pub fn new(n: usize, table: Vec<usize>, identity: usize) -> Result<Self> {
        if table.len() != n * n || table.iter().any(|&v| v >= n) {
            return Err(Error::NotAMonoid("table must be n*n entries in 0..n"));
        }
        if identity >= n {
            return Err(Error::NotAMonoid("identity outside the carrier"));
        }
        let m = FiniteMonoid { n, table, identity };
        if !(0..n).all(|x| m.op(identity, x) == x && m.op(x, identity) == x) {
            return Err(Error::NotAMonoid("identity law fails"));
        }
        if !m.is_associative() {
            return Err(Error::NotAMonoid("operation is not associative"));
        }
        Ok(m)
    }

    pub(crate) fn is_associative(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| {
            (0..n).all(|y| {
                let xy = self.op(x, y);
                (0..n).all(|z| self.op(xy, z) == self.op(x, self.op(y, z)))
            })
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    /// The element `z` with `z + x = x + z = z` for all `x`, if any.
    pub fn absorbing_element(&self) -> Option<usize> {
        (0..self.n).find(|&z| (0..self.n).all(|x| self.op(z, x) == z && self.op(x, z) == z))
    }

    /// `f(x + y) = f(x) + f(y)` for all pairs and `f(identity) = identity`.
    pub fn is_homomorphism(&self, f: &[usize]) -> bool {
        f[self.identity] == self.identity
            && (0..self.n).all(|x| (0..self.n).all(|y| f[self.op(x, y)] == self.op(f[x], f[y])))
    }

    /// `(x ∉ A ∧ y ∉ A) ⟺ x + y ∉ A` for all pairs.
    pub fn is_strictly_not_absorbing(&self, set: &[usize]) -> bool {
        let outside = |v: usize| !set.contains(&v);
        (0..self.n).all(|x| {
            (0..self.n).all(|y| (outside(x) && outside(y)) == outside(self.op(x, y)))
        })
    }
}
