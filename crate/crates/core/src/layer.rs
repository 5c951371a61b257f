//! Colored multigraph layers and the merge operation `⊙`.
//!
//! A layer keeps one [`EdgeRecord`] per unordered endpoint pair, holding the
//! pair's multiplicity and its color set. Parallel edges are therefore encoded
//! by multiplicity, not stored individually. Self-loops are allowed.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Index into the fixed node universe. Valid ids start at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct NodeId(pub u32);

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Color(pub String);

impl From<&str> for Color {
    fn from(s: &str) -> Self {
        Color(String::from(s))
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// The finite color set `C` shared by all layers that may be merged.
///
/// Cloning is cheap; equality compares contents.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ColorUniverse(Arc<BTreeSet<Color>>);

impl ColorUniverse {
    pub fn new<I, C>(colors: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<Color>,
    {
        ColorUniverse(Arc::new(colors.into_iter().map(Into::into).collect()))
    }

    pub fn contains(&self, c: &Color) -> bool {
        self.0.contains(c)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Color> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Unordered endpoint pair, stored with `lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeKey {
    lo: NodeId,
    hi: NodeId,
}

impl EdgeKey {
    pub fn new(u: NodeId, v: NodeId) -> Self {
        if u <= v {
            EdgeKey { lo: u, hi: v }
        } else {
            EdgeKey { lo: v, hi: u }
        }
    }

    pub fn endpoints(&self) -> (NodeId, NodeId) {
        (self.lo, self.hi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeRecord {
    pub multiplicity: u64,
    pub colors: BTreeSet<Color>,
}

/// A single invariant violation found by [`Layer::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    ZeroNodeId,
    DanglingEndpoint { edge: EdgeKey, node: NodeId },
    ZeroMultiplicity(EdgeKey),
    EmptyColorSet(EdgeKey),
    UnknownColor { edge: EdgeKey, color: Color },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ZeroNodeId => f.write_str("node id 0 is not allowed"),
            Violation::DanglingEndpoint { edge, node } => {
                let (u, v) = edge.endpoints();
                write!(f, "dangling endpoint {} on edge {}-{}", node.0, u.0, v.0)
            }
            Violation::ZeroMultiplicity(e) => {
                write!(f, "edge {}-{} has multiplicity 0", e.lo.0, e.hi.0)
            }
            Violation::EmptyColorSet(e) => {
                write!(f, "edge {}-{} has no colors", e.lo.0, e.hi.0)
            }
            Violation::UnknownColor { edge, color } => write!(
                f,
                "edge {}-{} uses color {color} outside the universe",
                edge.lo.0, edge.hi.0
            ),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LayerStats {
    pub vertex_count: usize,
    pub edge_key_count: usize,
    pub total_multiplicity: u64,
    pub color_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Layer {
    nodes: BTreeSet<NodeId>,
    edges: BTreeMap<EdgeKey, EdgeRecord>,
    universe: ColorUniverse,
}

impl Layer {
    pub fn new(universe: ColorUniverse) -> Self {
        Layer {
            nodes: BTreeSet::new(),
            edges: BTreeMap::new(),
            universe,
        }
    }

    pub fn insert_node(&mut self, id: u32) -> &mut Self {
        self.nodes.insert(NodeId(id));
        self
    }

    pub fn with_nodes<I: IntoIterator<Item = u32>>(mut self, ids: I) -> Self {
        self.nodes.extend(ids.into_iter().map(NodeId));
        self
    }

    /// Adds the record for pair `u`-`v`. Only duplicate pairs are rejected here;
    /// everything else is left to [`Layer::validate`].
    pub fn insert_edge<I, C>(&mut self, u: u32, v: u32, multiplicity: u64, colors: I) -> Result<()>
    where
        I: IntoIterator<Item = C>,
        C: Into<Color>,
    {
        let key = EdgeKey::new(NodeId(u), NodeId(v));
        if self.edges.contains_key(&key) {
            return Err(Error::DuplicateEdge(key.lo.0, key.hi.0));
        }
        self.edges.insert(
            key,
            EdgeRecord {
                multiplicity,
                colors: colors.into_iter().map(Into::into).collect(),
            },
        );
        Ok(())
    }

    pub fn with_edge<I, C>(mut self, u: u32, v: u32, multiplicity: u64, colors: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: Into<Color>,
    {
        self.insert_edge(u, v, multiplicity, colors)?;
        Ok(self)
    }

    pub fn nodes(&self) -> impl ExactSizeIterator<Item = NodeId> + '_ {
        self.nodes.iter().copied()
    }

    pub fn node_set(&self) -> &BTreeSet<NodeId> {
        &self.nodes
    }

    /// Edge records in canonical order (by low endpoint, then high endpoint).
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (EdgeKey, &EdgeRecord)> + '_ {
        self.edges.iter().map(|(k, r)| (*k, r))
    }

    pub fn edge(&self, u: u32, v: u32) -> Option<&EdgeRecord> {
        self.edges.get(&EdgeKey::new(NodeId(u), NodeId(v)))
    }

    pub fn multiplicity(&self, u: u32, v: u32) -> u64 {
        self.edge(u, v).map_or(0, |r| r.multiplicity)
    }

    pub fn universe(&self) -> &ColorUniverse {
        &self.universe
    }

    /// Union of the color sets of all edges.
    pub fn colors(&self) -> BTreeSet<Color> {
        self.edges
            .values()
            .flat_map(|r| r.colors.iter().cloned())
            .collect()
    }

    /// The `s` for which the layer is `s`-colored.
    pub fn color_count(&self) -> usize {
        self.colors().len()
    }

    pub fn stats(&self) -> LayerStats {
        LayerStats {
            vertex_count: self.nodes.len(),
            edge_key_count: self.edges.len(),
            total_multiplicity: self.edges.values().map(|r| r.multiplicity).sum(),
            color_count: self.color_count(),
        }
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut report = Vec::new();
        if self.nodes.contains(&NodeId(0)) {
            report.push(Violation::ZeroNodeId);
        }
        for (key, rec) in &self.edges {
            for node in [key.lo, key.hi] {
                if !self.nodes.contains(&node) {
                    report.push(Violation::DanglingEndpoint { edge: *key, node });
                }
                if key.lo == key.hi {
                    break;
                }
            }
            if rec.multiplicity == 0 {
                report.push(Violation::ZeroMultiplicity(*key));
            }
            if rec.colors.is_empty() {
                report.push(Violation::EmptyColorSet(*key));
            }
            for c in &rec.colors {
                if !self.universe.contains(c) {
                    report.push(Violation::UnknownColor {
                        edge: *key,
                        color: c.clone(),
                    });
                }
            }
        }
        report
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// `self ⊙ other`: node union, summed multiplicities, united color sets.
    pub fn merge(&self, other: &Layer) -> Result<Layer> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch);
        }
        let mut out = self.clone();
        out.nodes.extend(other.nodes.iter().copied());
        for (key, rec) in &other.edges {
            out.edges
                .entry(*key)
                .and_modify(|r| {
                    r.multiplicity += rec.multiplicity;
                    r.colors.extend(rec.colors.iter().cloned());
                })
                .or_insert_with(|| rec.clone());
        }
        out.edges.retain(|_, r| r.multiplicity > 0);
        Ok(out)
    }
}

/// Free-function form of [`Layer::merge`].
pub fn merge_layers(g: &Layer, h: &Layer) -> Result<Layer> {
    g.merge(h)
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn universe() -> ColorUniverse {
        ColorUniverse::new(["blue", "green", "red", "yellow"])
    }

    /// Left operand of the merge figure: three nodes, two colors.
    pub fn figure_g() -> Layer {
        Layer::new(universe())
            .with_nodes([1, 2, 3])
            .with_edge(1, 2, 3, ["blue", "red"])
            .unwrap()
            .with_edge(2, 3, 1, ["blue"])
            .unwrap()
    }

    /// Right operand of the merge figure: four nodes, two colors.
    pub fn figure_h() -> Layer {
        Layer::new(universe())
            .with_nodes([1, 2, 3, 4])
            .with_edge(1, 2, 1, ["green"])
            .unwrap()
            .with_edge(1, 3, 1, ["yellow"])
            .unwrap()
            .with_edge(3, 4, 2, ["yellow", "green"])
            .unwrap()
    }
}
