//! Ordered algebra on multilayer networks.
//!
//! A *layer* is a colored multigraph over a fixed node universe. Layers are
//! composed in two ways: the commutative merge `⊙` (written `.` in text) and the
//! order-sensitive juxtaposition `⊗` (written `*`). Fixing a list of `k` layers,
//! the set of all `⊗`/`⊙` concatenations of that list, taken modulo the
//! commutativity of `⊙`, is the set of ordered set partitions of `{1..k}`.
//! This crate provides:
//!
//! * [`layer`]: layers and the merge operation with its vertex/color accounting;
//! * [`pattern`]: the concatenation poset, the merge maps `f_j`, levels,
//!   sector-wise meet/join/complement, ideals and the textual pattern grammar;
//! * [`poset`]: explicit finite posets, lattices and monoids, maps defined by
//!   exception pairs, interior/closure predicates and exhaustive scans;
//! * [`algebra`]: the partial-minimum monoid on patterns, sector subtraction
//!   and the law checkers that produce [`report`] entries.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod error;
pub mod layer;
pub mod pattern;
pub mod poset;
pub mod report;

pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use layer::{Color, ColorUniverse, EdgeKey, EdgeRecord, Layer, LayerStats, NodeId, Violation};
pub use pattern::{
    canonicalize, enumerate_patterns, parse_pattern, ConcatPattern, Op, OpSequence, Sector,
};
pub use poset::{ExceptionMap, FiniteLattice, FiniteMonoid, FinitePoset};
pub use report::{LawReport, PropReport};
