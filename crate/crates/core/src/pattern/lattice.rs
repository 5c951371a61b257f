//! Meets, joins and complements of patterns.
//!
//! Inside a common sector the operations are positionwise on operator vectors.
//! Patterns with no common sector fall back to the greatest lower / least upper
//! bound in the concatenation order, which may not exist.

use alloc::vec::Vec;

use super::{full_mask, ConcatPattern, Sector};
use crate::error::{Error, Result};

pub fn top_pattern(k: usize) -> Result<ConcatPattern> {
    ConcatPattern::from_masks(k, alloc::vec![full_mask(k)])
}

/// The `k!` all-`⊗` patterns, one per sector.
pub fn minimal_patterns(k: usize) -> Result<Vec<ConcatPattern>> {
    if k == 0 || k > super::ENUMERATION_CAP {
        return Err(Error::CapacityExceeded {
            k,
            cap: super::ENUMERATION_CAP,
        });
    }
    Ok(Sector::all(k).iter().map(Sector::minimal).collect())
}

/// `x ∧ y`, or `None` when the pair has no greatest lower bound.
pub fn meet(x: &ConcatPattern, y: &ConcatPattern) -> Result<Option<ConcatPattern>> {
    if x.k() != y.k() {
        return Err(Error::SizeMismatch(x.k(), y.k()));
    }
    if let Some(s) = x.first_common_sector(y) {
        return s.meet(x, y).map(Some);
    }
    let lower: Vec<ConcatPattern> = x
        .refinements()
        .into_iter()
        .filter(|z| z.leq_unchecked(y))
        .collect();
    Ok(greatest(&lower))
}

/// `x ∨ y`, or `None` when the pair has no least upper bound.
pub fn join(x: &ConcatPattern, y: &ConcatPattern) -> Result<Option<ConcatPattern>> {
    if x.k() != y.k() {
        return Err(Error::SizeMismatch(x.k(), y.k()));
    }
    if let Some(s) = x.first_common_sector(y) {
        return s.join(x, y).map(Some);
    }
    let upper: Vec<ConcatPattern> = x
        .coarsenings()
        .into_iter()
        .filter(|u| y.leq_unchecked(u))
        .collect();
    Ok(least(&upper))
}

fn greatest(set: &[ConcatPattern]) -> Option<ConcatPattern> {
    set.iter()
        .find(|c| set.iter().all(|z| z.leq_unchecked(c)))
        .cloned()
}

fn least(set: &[ConcatPattern]) -> Option<ConcatPattern> {
    set.iter()
        .find(|c| set.iter().all(|z| c.leq_unchecked(z)))
        .cloned()
}

/// Flips every operator of `x` within `sector`.
pub fn complement(x: &ConcatPattern, sector: &Sector) -> Result<ConcatPattern> {
    let mask = sector.require(x)?;
    Ok(sector.pattern(!mask & sector.slot_mask()))
}
