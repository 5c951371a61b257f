//! The poset of `⊗`/`⊙` concatenation patterns over a fixed list of `k` layers.
//!
//! A pattern is stored canonically as an ordered set partition of `{1..k}`:
//! each block is a group of layers merged with `⊙`, and blocks are juxtaposed
//! with `⊗` in order. Blocks are bitmasks (bit `i - 1` stands for layer `i`).
//!
//! Operator *slots* are numbered `1..k-1`: slot `j` sits between the `j`-th and
//! `(j+1)`-th layer of any representative sequence. Whether slot `j` holds `⊗`
//! does not depend on the representative, because `⊗` slots are exactly the
//! prefix sums of block sizes. The merge maps `f_j` act on slots.

mod ideal;
mod lattice;
pub mod laws;
mod parse;
mod sector;
mod space;

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::layer::Layer;

pub use ideal::{
    enumerate_ideals, ideal_witnesses, is_ideal_downdirected, is_ideal_joinclosed, IdealDefinition,
    IdealWitness, IDEAL_CAP,
};
pub use lattice::{complement, join, meet, minimal_patterns, top_pattern};
pub use parse::parse_pattern;
pub use sector::{common_sectors, Sector};
pub use space::PatternSpace;

/// Largest `k` a pattern can represent.
pub const MAX_K: usize = 32;

/// Default cap for [`enumerate_patterns`]; `|○G(7)| = 47293`.
pub const ENUMERATION_CAP: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Op {
    /// `⊗`, written `*`.
    Tensor,
    /// `⊙`, written `.`.
    Merge,
}

impl Op {
    pub fn symbol(self) -> char {
        match self {
            Op::Tensor => '*',
            Op::Merge => '.',
        }
    }

    pub fn flip(self) -> Op {
        match self {
            Op::Tensor => Op::Merge,
            Op::Merge => Op::Tensor,
        }
    }
}

/// Result of comparing two patterns in the concatenation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Comparison {
    Less,
    Greater,
    Equal,
    Incomparable,
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Comparison::Less => "LESS",
            Comparison::Greater => "GREATER",
            Comparison::Equal => "EQUAL",
            Comparison::Incomparable => "INCOMPARABLE",
        })
    }
}

/// A non-canonical representative: a layer ordering plus the `k - 1` operators
/// between consecutive layers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpSequence {
    order: Vec<u8>,
    ops: Vec<Op>,
}

impl OpSequence {
    pub fn new(order: Vec<u8>, ops: Vec<Op>) -> Result<Self> {
        let k = order.len();
        if k == 0 || k > MAX_K {
            return Err(Error::InvalidSequence("order must hold 1..=32 layers"));
        }
        if ops.len() != k - 1 {
            return Err(Error::InvalidSequence("expected exactly k - 1 operators"));
        }
        let mut seen = 0u32;
        for &i in &order {
            if i == 0 || i as usize > k || seen & bit(i) != 0 {
                return Err(Error::InvalidSequence("order is not a permutation of 1..k"));
            }
            seen |= bit(i);
        }
        Ok(OpSequence { order, ops })
    }

    pub fn order(&self) -> &[u8] {
        &self.order
    }

    pub fn ops(&self) -> &[Op] {
        &self.ops
    }

    pub fn k(&self) -> usize {
        self.order.len()
    }
}

impl fmt::Display for OpSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pos, i) in self.order.iter().enumerate() {
            if pos > 0 {
                write!(f, "{}", self.ops[pos - 1].symbol())?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

#[inline]
pub(crate) fn bit(i: u8) -> u32 {
    1u32 << (i - 1)
}

pub(crate) fn full_mask(k: usize) -> u32 {
    if k == 32 {
        u32::MAX
    } else {
        (1u32 << k) - 1
    }
}

/// Layer indices (1-based, ascending) contained in a block mask.
pub(crate) fn indices(mut mask: u32) -> impl Iterator<Item = u8> {
    core::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as u8;
            mask &= mask - 1;
            Some(i + 1)
        }
    })
}

/// Lexicographic comparison of two index sets read as ascending lists.
fn cmp_index_sets(a: u32, b: u32) -> Ordering {
    let mut ia = indices(a);
    let mut ib = indices(b);
    loop {
        match (ia.next(), ib.next()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(x), Some(y)) if x != y => return x.cmp(&y),
            _ => {}
        }
    }
}

/// Canonical element of the concatenation poset: an ordered set partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConcatPattern {
    k: u8,
    blocks: Vec<u32>,
}

impl ConcatPattern {
    /// Builds a pattern from bitmask blocks, checking that they partition `{1..k}`.
    pub fn from_masks(k: usize, blocks: Vec<u32>) -> Result<Self> {
        if k == 0 || k > MAX_K {
            return Err(Error::InvalidPattern("k must be in 1..=32"));
        }
        let mut seen = 0u32;
        for &b in &blocks {
            if b == 0 {
                return Err(Error::InvalidPattern("empty block"));
            }
            if seen & b != 0 {
                return Err(Error::InvalidPattern("blocks overlap"));
            }
            seen |= b;
        }
        if seen != full_mask(k) {
            return Err(Error::InvalidPattern("blocks do not cover 1..k"));
        }
        Ok(ConcatPattern { k: k as u8, blocks })
    }

    /// Builds a pattern from index lists, e.g. `[[1, 2], [3]]` for `1.2*3`.
    pub fn from_blocks<B, I>(k: usize, blocks: B) -> Result<Self>
    where
        B: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let mut masks = Vec::new();
        for block in blocks {
            let mut m = 0u32;
            for i in block {
                if i == 0 || i > k || i > MAX_K {
                    return Err(Error::InvalidPattern("index out of range"));
                }
                let b = bit(i as u8);
                if m & b != 0 {
                    return Err(Error::InvalidPattern("blocks overlap"));
                }
                m |= b;
            }
            masks.push(m);
        }
        Self::from_masks(k, masks)
    }

    pub(crate) fn from_masks_unchecked(k: usize, blocks: Vec<u32>) -> Self {
        debug_assert!(Self::from_masks(k, blocks.clone()).is_ok());
        ConcatPattern { k: k as u8, blocks }
    }

    pub fn k(&self) -> usize {
        self.k as usize
    }

    pub fn block_masks(&self) -> &[u32] {
        &self.blocks
    }

    /// Blocks as ascending index lists.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.blocks
            .iter()
            .map(|&m| indices(m).map(usize::from).collect())
            .collect()
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Number of `⊙` operators in any representative, `k - blocks`.
    pub fn level(&self) -> usize {
        self.k() - self.blocks.len()
    }

    pub fn is_top(&self) -> bool {
        self.blocks.len() == 1
    }

    pub fn is_minimal(&self) -> bool {
        self.blocks.len() == self.k()
    }

    /// Bit `j - 1` is set iff slot `j` holds `⊗`.
    pub fn tensor_slots(&self) -> u32 {
        let mut slots = 0u32;
        let mut seen = 0usize;
        for &b in &self.blocks[..self.blocks.len() - 1] {
            seen += b.count_ones() as usize;
            slots |= 1 << (seen - 1);
        }
        slots
    }

    pub fn op_at(&self, j: usize) -> Result<Op> {
        self.check_slot(j)?;
        Ok(if self.tensor_slots() & (1 << (j - 1)) != 0 {
            Op::Tensor
        } else {
            Op::Merge
        })
    }

    fn check_slot(&self, j: usize) -> Result<()> {
        if j == 0 || j >= self.k() {
            return Err(Error::PositionOutOfRange {
                j,
                max: self.k() - 1,
            });
        }
        Ok(())
    }

    fn check_same_k(&self, other: &Self) -> Result<()> {
        if self.k != other.k {
            return Err(Error::SizeMismatch(self.k(), other.k()));
        }
        Ok(())
    }

    /// Concatenation order: `self <= other` iff `other`'s blocks are unions of
    /// consecutive runs of `self`'s blocks.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check_same_k(other)?;
        Ok(self.leq_unchecked(other))
    }

    pub(crate) fn leq_unchecked(&self, other: &Self) -> bool {
        let mut acc = 0u32;
        let mut target = other.blocks.iter();
        let mut current = match target.next() {
            Some(&b) => b,
            None => return false,
        };
        for &b in &self.blocks {
            if b & !current != 0 {
                return false;
            }
            acc |= b;
            if acc == current {
                acc = 0;
                current = match target.next() {
                    Some(&b) => b,
                    None => 0,
                };
            }
        }
        acc == 0
    }

    pub fn compare(&self, other: &Self) -> Result<Comparison> {
        self.check_same_k(other)?;
        Ok(match (self.leq_unchecked(other), other.leq_unchecked(self)) {
            (true, true) => Comparison::Equal,
            (true, false) => Comparison::Less,
            (false, true) => Comparison::Greater,
            (false, false) => Comparison::Incomparable,
        })
    }

    /// The map `f_j`: turns a `⊗` in slot `j` into `⊙`, i.e. merges the two
    /// blocks meeting at that slot. Identity when slot `j` already holds `⊙`.
    pub fn f_merge(&self, j: usize) -> Result<ConcatPattern> {
        self.check_slot(j)?;
        Ok(self.f_merge_unchecked(j))
    }

    pub(crate) fn f_merge_unchecked(&self, j: usize) -> ConcatPattern {
        let mut seen = 0usize;
        for (pos, &b) in self.blocks.iter().enumerate() {
            seen += b.count_ones() as usize;
            if seen == j {
                let mut blocks = self.blocks.clone();
                let next = blocks.remove(pos + 1);
                blocks[pos] |= next;
                return ConcatPattern { k: self.k, blocks };
            }
            if seen > j {
                break;
            }
        }
        self.clone()
    }

    /// Left-to-right application of `f_j` for each `j` in `js`.
    pub fn f_compose(&self, js: &[usize]) -> Result<ConcatPattern> {
        let mut x = self.clone();
        for &j in js {
            x = x.f_merge(j)?;
        }
        Ok(x)
    }

    /// Every representative sequence of this pattern (`Π |block|!` of them).
    pub fn representatives(&self) -> Vec<OpSequence> {
        sector::block_orderings(&self.blocks)
            .into_iter()
            .map(|order| {
                let ops = self.ops_for_order();
                OpSequence { order, ops }
            })
            .collect()
    }

    fn ops_for_order(&self) -> Vec<Op> {
        let slots = self.tensor_slots();
        (1..self.k())
            .map(|j| {
                if slots & (1 << (j - 1)) != 0 {
                    Op::Tensor
                } else {
                    Op::Merge
                }
            })
            .collect()
    }

    /// Every ordered refinement (patterns `z` with `z <= self`).
    pub fn refinements(&self) -> Vec<ConcatPattern> {
        let mut out = vec![Vec::new()];
        for &b in &self.blocks {
            let splits = ordered_partitions_of(b);
            let mut next = Vec::with_capacity(out.len() * splits.len());
            for prefix in &out {
                for s in &splits {
                    let mut p: Vec<u32> = prefix.clone();
                    p.extend_from_slice(s);
                    next.push(p);
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|blocks| ConcatPattern { k: self.k, blocks })
            .collect()
    }

    /// Every coarsening (patterns `u` with `self <= u`).
    pub fn coarsenings(&self) -> Vec<ConcatPattern> {
        let gaps = self.blocks.len() - 1;
        (0u32..1 << gaps)
            .map(|merge| {
                let mut blocks = Vec::new();
                let mut cur = self.blocks[0];
                for g in 0..gaps {
                    if merge & (1 << g) != 0 {
                        cur |= self.blocks[g + 1];
                    } else {
                        blocks.push(cur);
                        cur = self.blocks[g + 1];
                    }
                }
                blocks.push(cur);
                ConcatPattern { k: self.k, blocks }
            })
            .collect()
    }
}

impl PartialOrd for ConcatPattern {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Textual order (blocks compared by their sorted contents). This is for
/// deterministic output only; the concatenation order is [`ConcatPattern::leq`].
impl Ord for ConcatPattern {
    fn cmp(&self, other: &Self) -> Ordering {
        self.k.cmp(&other.k).then_with(|| {
            for (a, b) in self.blocks.iter().zip(&other.blocks) {
                match cmp_index_sets(*a, *b) {
                    Ordering::Equal => {}
                    o => return o,
                }
            }
            self.blocks.len().cmp(&other.blocks.len())
        })
    }
}

/// Minimal-representative form: indices ascending inside blocks, `.` within,
/// `*` between blocks.
impl fmt::Display for ConcatPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (bi, &b) in self.blocks.iter().enumerate() {
            if bi > 0 {
                f.write_str("*")?;
            }
            for (ii, i) in indices(b).enumerate() {
                if ii > 0 {
                    f.write_str(".")?;
                }
                write!(f, "{i}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for ConcatPattern {
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        self.blocks().serialize(s)
    }
}

/// Collapses `⊙`-joined runs of a sequence into blocks.
pub fn canonicalize(seq: &OpSequence) -> ConcatPattern {
    let mut blocks = Vec::new();
    let mut cur = bit(seq.order[0]);
    for (pos, &op) in seq.ops.iter().enumerate() {
        let next = bit(seq.order[pos + 1]);
        match op {
            Op::Merge => cur |= next,
            Op::Tensor => {
                blocks.push(cur);
                cur = next;
            }
        }
    }
    blocks.push(cur);
    ConcatPattern::from_masks_unchecked(seq.k(), blocks)
}

/// All ordered set partitions of the index set `mask`.
pub(crate) fn ordered_partitions_of(mask: u32) -> Vec<Vec<u32>> {
    if mask == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    // every non-empty submask may come first
    let mut first = mask;
    while first != 0 {
        for mut rest in ordered_partitions_of(mask & !first) {
            rest.insert(0, first);
            out.push(rest);
        }
        first = (first - 1) & mask;
    }
    out
}

/// All patterns over `k` layers, ordered by level and then textually.
pub fn enumerate_patterns(k: usize) -> Result<Vec<ConcatPattern>> {
    enumerate_patterns_capped(k, ENUMERATION_CAP)
}

pub fn enumerate_patterns_capped(k: usize, cap: usize) -> Result<Vec<ConcatPattern>> {
    if k > cap || k > MAX_K {
        return Err(Error::CapacityExceeded { k, cap: cap.min(MAX_K) });
    }
    if k == 0 {
        return Err(Error::InvalidPattern("k must be positive"));
    }
    let mut out: Vec<ConcatPattern> = ordered_partitions_of(full_mask(k))
        .into_iter()
        .map(|blocks| ConcatPattern::from_masks_unchecked(k, blocks))
        .collect();
    out.sort_by(|a, b| a.level().cmp(&b.level()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// One layer per block, each the merge of the block's layers, in block order.
pub fn realize(pattern: &ConcatPattern, layers: &[Layer]) -> Result<Vec<Layer>> {
    if layers.len() != pattern.k() {
        return Err(Error::LayerCountMismatch {
            expected: pattern.k(),
            found: layers.len(),
        });
    }
    pattern
        .block_masks()
        .iter()
        .map(|&b| {
            let mut it = indices(b);
            let first = it.next().expect("blocks are non-empty");
            it.try_fold(layers[first as usize - 1].clone(), |acc, i| {
                acc.merge(&layers[i as usize - 1])
            })
        })
        .collect()
}

#[cfg(test)]
pub(crate) fn p(text: &str) -> ConcatPattern {
    parse_pattern(text, None).unwrap()
}
