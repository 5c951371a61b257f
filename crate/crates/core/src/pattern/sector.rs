use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{bit, indices, ConcatPattern, Op, OpSequence, MAX_K};
use crate::error::{Error, Result};

/// A fixed ordering of the `k` layers. A pattern lies in the sector when
/// reading the ordering left to right walks its blocks one after another;
/// inside a sector every pattern is an operator vector of length `k - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sector(Vec<u8>);

impl Sector {
    pub fn new(order: Vec<u8>) -> Result<Self> {
        let k = order.len();
        if k == 0 || k > MAX_K {
            return Err(Error::InvalidSector("length must be in 1..=32"));
        }
        let mut seen = 0u32;
        for &i in &order {
            if i == 0 || i as usize > k || seen & bit(i) != 0 {
                return Err(Error::InvalidSector("not a permutation of 1..k"));
            }
            seen |= bit(i);
        }
        Ok(Sector(order))
    }

    pub fn identity(k: usize) -> Self {
        Sector((1..=k as u8).collect())
    }

    /// All `k!` sectors, in lexicographic order.
    pub fn all(k: usize) -> Vec<Sector> {
        let mut out = Vec::new();
        let mut items: Vec<u8> = (1..=k as u8).collect();
        permutations(&mut items, 0, &mut out);
        out.sort();
        out.into_iter().map(Sector).collect()
    }

    pub fn order(&self) -> &[u8] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// Operator vector of `p` in this sector as a mask (bit `j - 1` set iff slot
    /// `j` holds `⊙`), or `None` if `p` is not in the sector.
    pub fn merge_mask(&self, p: &ConcatPattern) -> Option<u32> {
        if p.k() != self.k() {
            return None;
        }
        let mut mask = 0u32;
        let mut pos = 0usize;
        for &b in p.block_masks() {
            let size = b.count_ones() as usize;
            for (offset, &i) in self.0[pos..pos + size].iter().enumerate() {
                if b & bit(i) == 0 {
                    return None;
                }
                if offset > 0 {
                    mask |= 1 << (pos + offset - 1);
                }
            }
            pos += size;
        }
        Some(mask)
    }

    pub fn contains(&self, p: &ConcatPattern) -> bool {
        self.merge_mask(p).is_some()
    }

    pub fn ops(&self, p: &ConcatPattern) -> Result<Vec<Op>> {
        let mask = self.require(p)?;
        Ok((0..self.k() - 1)
            .map(|s| if mask & (1 << s) != 0 { Op::Merge } else { Op::Tensor })
            .collect())
    }

    /// The pattern with operator vector `merge_mask` in this sector.
    pub fn pattern(&self, merge_mask: u32) -> ConcatPattern {
        let mut blocks = Vec::new();
        let mut cur = bit(self.0[0]);
        for (s, &i) in self.0[1..].iter().enumerate() {
            if merge_mask & (1 << s) != 0 {
                cur |= bit(i);
            } else {
                blocks.push(cur);
                cur = bit(i);
            }
        }
        blocks.push(cur);
        ConcatPattern::from_masks_unchecked(self.k(), blocks)
    }

    pub fn pattern_from_ops(&self, ops: &[Op]) -> Result<ConcatPattern> {
        let seq = OpSequence::new(self.0.clone(), ops.to_vec())?;
        Ok(super::canonicalize(&seq))
    }

    /// The all-`⊗` pattern of this sector.
    pub fn minimal(&self) -> ConcatPattern {
        self.pattern(0)
    }

    pub(crate) fn slot_mask(&self) -> u32 {
        if self.k() == 1 {
            0
        } else {
            (1u32 << (self.k() - 1)) - 1
        }
    }

    pub(crate) fn require(&self, p: &ConcatPattern) -> Result<u32> {
        self.merge_mask(p).ok_or_else(|| Error::NotInSector {
            pattern: p.to_string(),
            sector: self.to_string(),
        })
    }

    /// Positionwise meet (`⊗` wins) of two patterns of this sector.
    pub fn meet(&self, x: &ConcatPattern, y: &ConcatPattern) -> Result<ConcatPattern> {
        Ok(self.pattern(self.require(x)? & self.require(y)?))
    }

    /// Positionwise join (`⊙` wins) of two patterns of this sector.
    pub fn join(&self, x: &ConcatPattern, y: &ConcatPattern) -> Result<ConcatPattern> {
        Ok(self.pattern(self.require(x)? | self.require(y)?))
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (n, i) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str(")")
    }
}

fn permutations(items: &mut Vec<u8>, start: usize, out: &mut Vec<Vec<u8>>) {
    if start + 1 >= items.len() {
        out.push(items.clone());
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permutations(items, start + 1, out);
        items.swap(start, i);
    }
}

/// Concatenations of one ordering per block: the orders of all representatives.
pub(crate) fn block_orderings(blocks: &[u32]) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for &b in blocks {
        let mut items: Vec<u8> = indices(b).collect();
        let mut perms = Vec::new();
        permutations(&mut items, 0, &mut perms);
        let mut next = Vec::with_capacity(out.len() * perms.len());
        for prefix in &out {
            for perm in &perms {
                let mut o = prefix.clone();
                o.extend_from_slice(perm);
                next.push(o);
            }
        }
        out = next;
    }
    out
}

impl ConcatPattern {
    /// Sectors containing this pattern.
    pub fn sectors(&self) -> Vec<Sector> {
        block_orderings(self.block_masks())
            .into_iter()
            .map(Sector)
            .collect()
    }

    pub(crate) fn first_common_sector(&self, other: &ConcatPattern) -> Option<Sector> {
        block_orderings(self.block_masks())
            .into_iter()
            .map(Sector)
            .find(|s| s.contains(other))
    }
}

/// Every sector in which both `x` and `y` are run patterns.
pub fn common_sectors(x: &ConcatPattern, y: &ConcatPattern) -> Result<Vec<Sector>> {
    if x.k() != y.k() {
        return Err(Error::SizeMismatch(x.k(), y.k()));
    }
    let mut out: Vec<Sector> = x.sectors().into_iter().filter(|s| s.contains(y)).collect();
    out.sort();
    Ok(out)
}
