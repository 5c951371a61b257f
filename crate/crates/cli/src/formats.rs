//! JSON file formats for layers, posets and pattern lists.

use std::collections::BTreeSet;

use multilayer_order::{ConcatPattern, ColorUniverse, FinitePoset, Layer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid layer: {0}")]
    Layer(#[from] multilayer_order::Error),
    #[error("invalid layer: {}", .0.join("; "))]
    Violations(Vec<String>),
    #[error("invalid poset: {0}")]
    Poset(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeEntry {
    pub u: u32,
    pub v: u32,
    pub mult: u64,
    pub colors: Vec<String>,
}

/// On-disk layer. Canonical output sorts nodes, edges and colors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct LayerFile {
    pub nodes: Vec<u32>,
    pub edges: Vec<EdgeEntry>,
    pub color_universe: Vec<String>,
}

impl LayerFile {
    pub fn from_layer(layer: &Layer) -> Self {
        LayerFile {
            nodes: layer.nodes().map(|n| n.0).collect(),
            edges: layer
                .edges()
                .map(|(key, rec)| {
                    let (u, v) = key.endpoints();
                    EdgeEntry {
                        u: u.0,
                        v: v.0,
                        mult: rec.multiplicity,
                        colors: rec.colors.iter().map(|c| c.0.clone()).collect(),
                    }
                })
                .collect(),
            color_universe: layer.universe().iter().map(|c| c.0.clone()).collect(),
        }
    }

    /// Builds and validates the layer.
    pub fn to_layer(&self) -> Result<Layer, FormatError> {
        let mut layer = Layer::new(ColorUniverse::new(self.color_universe.iter().map(String::as_str)))
            .with_nodes(self.nodes.iter().copied());
        for e in &self.edges {
            let colors: BTreeSet<&str> = e.colors.iter().map(String::as_str).collect();
            layer.insert_edge(e.u, e.v, e.mult, colors)?;
        }
        let violations = layer.validate();
        if !violations.is_empty() {
            return Err(FormatError::Violations(violations.iter().map(ToString::to_string).collect()));
        }
        Ok(layer)
    }
}

pub fn parse_layer(text: &str) -> Result<Layer, FormatError> {
    serde_json::from_str::<LayerFile>(text)?.to_layer()
}

/// Canonical pretty JSON with a trailing newline.
pub fn layer_to_json(layer: &Layer) -> String {
    let mut s = serde_json::to_string_pretty(&LayerFile::from_layer(layer)).expect("serializable");
    s.push('\n');
    s
}

pub fn layers_to_json(layers: &[Layer]) -> String {
    let files: Vec<LayerFile> = layers.iter().map(LayerFile::from_layer).collect();
    let mut s = serde_json::to_string_pretty(&files).expect("serializable");
    s.push('\n');
    s
}

/// `{"elements": [...], "leq": [[i, j], ...]}`; `[i, j]` means element `i` is below element `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetFile {
    pub elements: Vec<String>,
    pub leq: Vec<[usize; 2]>,
}

impl PosetFile {
    /// Takes the reflexive-transitive closure and checks antisymmetry.
    pub fn to_poset(&self) -> Result<FinitePoset, FormatError> {
        let pairs: Vec<(usize, usize)> = self.leq.iter().map(|&[i, j]| (i, j)).collect();
        FinitePoset::from_relation(self.elements.len(), &pairs)
            .map(|p| p.with_labels(self.elements.clone()))
            .map_err(|e| FormatError::Poset(e.to_string()))
    }

    /// Covering pairs only.
    pub fn from_poset(p: &FinitePoset, elements: Vec<String>) -> Self {
        PosetFile {
            elements,
            leq: p.hasse_edges().into_iter().map(|(i, j)| [i, j]).collect(),
        }
    }
}

pub fn parse_poset(text: &str) -> Result<FinitePoset, FormatError> {
    serde_json::from_str::<PosetFile>(text)?.to_poset()
}

/// Patterns as arrays of block arrays.
pub fn patterns_to_json(patterns: &[ConcatPattern]) -> String {
    let mut s = serde_json::to_string(patterns).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const G: &str = r#"{
  "nodes": [3, 1, 2],
  "edges": [
    {"u": 3, "v": 2, "mult": 1, "colors": ["blue"]},
    {"u": 1, "v": 2, "mult": 3, "colors": ["red", "blue"]}
  ],
  "colorUniverse": ["yellow", "red", "green", "blue"]
}"#;

    #[test]
    fn canonical_output_is_sorted_and_stable() {
        let layer = parse_layer(G).unwrap();
        let out = layer_to_json(&layer);
        let again = layer_to_json(&parse_layer(&out).unwrap());
        assert_eq!(out, again);
        let file: LayerFile = serde_json::from_str(&out).unwrap();
        assert_eq!(file.nodes, [1, 2, 3]);
        assert_eq!((file.edges[0].u, file.edges[0].v), (1, 2));
        assert_eq!(file.edges[0].colors, ["blue", "red"]);
        assert_eq!((file.edges[1].u, file.edges[1].v), (2, 3));
        assert_eq!(file.color_universe, ["blue", "green", "red", "yellow"]);
    }

    #[test]
    fn invalid_layers_are_rejected() {
        let dangling = r#"{"nodes":[1,2,3],"edges":[{"u":1,"v":5,"mult":1,"colors":["a"]}],"colorUniverse":["a"]}"#;
        let err = parse_layer(dangling).unwrap_err().to_string();
        assert!(err.contains("dangling endpoint"), "{err}");
        let dup = r#"{"nodes":[1,2],"edges":[{"u":1,"v":2,"mult":1,"colors":["a"]},{"u":2,"v":1,"mult":1,"colors":["a"]}],"colorUniverse":["a"]}"#;
        assert!(parse_layer(dup).is_err());
        let uncolored = r#"{"nodes":[1,2],"edges":[{"u":1,"v":2,"mult":1,"colors":[]}],"colorUniverse":["a"]}"#;
        assert!(parse_layer(uncolored).is_err());
        let unknown = r#"{"nodes":[1,2],"edges":[{"u":1,"v":2,"mult":1,"colors":["b"]}],"colorUniverse":["a"]}"#;
        assert!(parse_layer(unknown).is_err());
        assert!(parse_layer("{").is_err());
    }

    #[test]
    fn poset_file_closure() {
        let p = parse_poset(r#"{"elements":["a","b","c"],"leq":[[0,1],[1,2]]}"#).unwrap();
        assert!(p.leq(0, 2));
        assert_eq!(p.labels().unwrap()[2], "c");
        assert!(parse_poset(r#"{"elements":["a","b"],"leq":[[0,1],[1,0]]}"#).is_err());
        assert!(parse_poset(r#"{"elements":["a"],"leq":[[0,4]]}"#).is_err());
    }
}
