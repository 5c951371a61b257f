use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{enumerate_patterns_capped, join, meet, ConcatPattern, ENUMERATION_CAP};
use crate::error::Result;
use crate::poset::{ExceptionMap, FinitePoset};

/// All patterns over `k` layers as an explicit [`FinitePoset`], indexed in
/// enumeration order, with optional meet/join tables.
#[derive(Debug, Clone)]
pub struct PatternSpace {
    k: usize,
    patterns: Vec<ConcatPattern>,
    index: BTreeMap<ConcatPattern, usize>,
    poset: FinitePoset,
    meet: Vec<Option<u32>>,
    join: Vec<Option<u32>>,
}

impl PatternSpace {
    pub fn new(k: usize) -> Result<Self> {
        Self::with_cap(k, ENUMERATION_CAP)
    }

    pub fn with_cap(k: usize, cap: usize) -> Result<Self> {
        let patterns = enumerate_patterns_capped(k, cap)?;
        let index = patterns
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let poset = FinitePoset::from_leq_unchecked(patterns.len(), |i, j| {
            patterns[i].leq_unchecked(&patterns[j])
        });
        Ok(PatternSpace {
            k,
            patterns,
            index,
            poset,
            meet: Vec::new(),
            join: Vec::new(),
        })
    }

    /// Fills the meet and join tables from [`meet`] and [`join`].
    pub fn with_tables(mut self) -> Self {
        let n = self.len();
        self.meet = Vec::with_capacity(n * n);
        self.join = Vec::with_capacity(n * n);
        for x in &self.patterns {
            for y in &self.patterns {
                let m = meet(x, y).expect("same k").map(|z| self.index[&z] as u32);
                let j = join(x, y).expect("same k").map(|z| self.index[&z] as u32);
                self.meet.push(m);
                self.join.push(j);
            }
        }
        self
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn patterns(&self) -> &[ConcatPattern] {
        &self.patterns
    }

    pub fn pattern(&self, i: usize) -> &ConcatPattern {
        &self.patterns[i]
    }

    pub fn index_of(&self, p: &ConcatPattern) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn has_tables(&self) -> bool {
        !self.meet.is_empty()
    }

    /// Tabulated meet; requires [`PatternSpace::with_tables`].
    pub fn meet_index(&self, x: usize, y: usize) -> Option<usize> {
        self.meet[x * self.len() + y].map(|v| v as usize)
    }

    /// Tabulated join; requires [`PatternSpace::with_tables`].
    pub fn join_index(&self, x: usize, y: usize) -> Option<usize> {
        self.join[x * self.len() + y].map(|v| v as usize)
    }

    /// Index of the top pattern.
    pub fn top_index(&self) -> usize {
        self.len() - 1
    }

    /// `f_j` as an exception map on this space: every pattern whose slot `j`
    /// holds `⊗` is sent to the same representative with that slot set to `⊙`.
    pub fn slot_exception_map(&self, j: usize) -> Result<ExceptionMap> {
        use super::{canonicalize, Op, OpSequence};
        let mut pairs = Vec::new();
        for (i, x) in self.patterns.iter().enumerate() {
            let rep = &x.representatives()[0];
            if x.op_at(j)? == Op::Tensor {
                let mut ops = rep.ops().to_vec();
                ops[j - 1] = Op::Merge;
                let y = canonicalize(&OpSequence::new(rep.order().to_vec(), ops)?);
                pairs.push((i, self.index[&y]));
            }
        }
        ExceptionMap::new(self.len(), pairs)
    }
}
