//! Hasse diagrams in DOT, one rank per level.

use std::fmt::Write;

use multilayer_order::pattern::PatternSpace;

pub fn hasse_dot(space: &PatternSpace) -> String {
    let mut out = String::new();
    writeln!(out, "digraph hasse_k{} {{", space.k()).unwrap();
    out.push_str("  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n");
    for level in 0..space.k() {
        let members: Vec<usize> = (0..space.len())
            .filter(|&i| space.pattern(i).level() == level)
            .collect();
        if members.is_empty() {
            continue;
        }
        writeln!(out, "  subgraph level_{level} {{\n    rank=same;").unwrap();
        for i in members {
            writeln!(out, "    n{i} [label=\"{}\"];", space.pattern(i)).unwrap();
        }
        out.push_str("  }\n");
    }
    for (lo, hi) in space.poset().hasse_edges() {
        writeln!(out, "  n{lo} -> n{hi};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_diagram() {
        let space = PatternSpace::new(3).unwrap();
        let dot = hasse_dot(&space);
        assert_eq!(dot.matches(" -> ").count(), 18);
        assert_eq!(dot.matches("rank=same").count(), 3);
        assert!(dot.contains("[label=\"1.2.3\"]"));
        assert_eq!(dot, hasse_dot(&PatternSpace::new(3).unwrap()));
    }
}
