use alloc::vec::Vec;

use super::FinitePoset;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeOp {
    Meet,
    Join,
}

/// A finite poset with its (possibly partial) meet and join tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    poset: FinitePoset,
    meet: Vec<Option<usize>>,
    join: Vec<Option<usize>>,
}

impl FiniteLattice {
    /// Tabulates glb/lub for every pair.
    pub fn from_poset(poset: FinitePoset) -> Self {
        let n = poset.len();
        let mut meet = Vec::with_capacity(n * n);
        let mut join = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                meet.push(poset.glb(x, y));
                join.push(poset.lub(x, y));
            }
        }
        FiniteLattice { poset, meet, join }
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    /// Every pair has a meet and a join.
    pub fn is_total(&self) -> bool {
        self.meet.iter().chain(&self.join).all(Option::is_some)
    }

    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        self.meet[x * self.len() + y]
    }

    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        self.join[x * self.len() + y]
    }

    pub fn apply(&self, op: LatticeOp, x: usize, y: usize) -> Option<usize> {
        match op {
            LatticeOp::Meet => self.meet(x, y),
            LatticeOp::Join => self.join(x, y),
        }
    }

    /// `L^n` with meet and join taken coordinatewise (same index layout as
    /// [`FinitePoset::power`]).
    pub fn power(&self, n: u32) -> FiniteLattice {
        let base = self.len();
        let poset = self.poset.power(n);
        let size = poset.len();
        let coordinatewise = |op: LatticeOp, i: usize, j: usize| -> Option<usize> {
            let (mut a, mut b) = (i, j);
            let mut out = 0;
            let mut scale = 1;
            for _ in 0..n {
                out += self.apply(op, a % base, b % base)? * scale;
                scale *= base;
                a /= base;
                b /= base;
            }
            Some(out)
        };
        let mut meet = Vec::with_capacity(size * size);
        let mut join = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                meet.push(coordinatewise(LatticeOp::Meet, i, j));
                join.push(coordinatewise(LatticeOp::Join, i, j));
            }
        }
        FiniteLattice { poset, meet, join }
    }
}
