use std::fmt::Write;

use super::{SimplifiedDiagram, StructureDigraph};

/// Graphviz output. Node order and edge order are deterministic.
pub trait DotExport {
    fn to_dot(&self, name: &str) -> String;
}

fn header(out: &mut String, name: &str) {
    let escaped = name.replace('\\', "\\\\").replace('"', "\\\"");
    writeln!(out, "digraph \"{escaped}\" {{").unwrap();
    out.push_str("  node [shape=box];\n");
}

impl DotExport for StructureDigraph {
    /// Panics if types have not been computed.
    fn to_dot(&self, name: &str) -> String {
        assert!(self.has_types(), "DOT export needs a typed structure digraph");
        let mut out = String::new();
        header(&mut out, name);
        for c in 0..self.class_count() {
            let ty = self.type_of(c);
            if Some(c) == self.terminal_index() {
                writeln!(out, "  c{c} [label=\"GEN-terminal {ty}\"];").unwrap();
            } else {
                let size = self.class_size(c);
                writeln!(out, "  c{c} [label=\"|I|={size} pty={} type={ty} ×1\"];", ty.parity)
                    .unwrap();
            }
        }
        for (a, b) in self.edges() {
            writeln!(out, "  c{a} -> c{b};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

impl DotExport for SimplifiedDiagram {
    fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        header(&mut out, name);
        for (i, node) in self.nodes().iter().enumerate() {
            let ty = node.ty;
            if node.terminal {
                writeln!(out, "  s{i} [label=\"GEN-terminal {ty}\"];").unwrap();
            } else {
                let style = if node.multiplicity() > 1 { ", style=bold" } else { "" };
                writeln!(
                    out,
                    "  s{i} [label=\"|I|={} pty={} type={ty} ×{}\"{style}];",
                    node.size,
                    ty.parity,
                    node.multiplicity()
                )
                .unwrap();
            }
        }
        for (a, b) in self.edges() {
            writeln!(out, "  s{a} -> s{b};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::builders::{build, parse_group_spec};
    use crate::engine::{analyze, GameKind};

    fn digraph(spec: &str, game: GameKind) -> StructureDigraph {
        let g = Arc::new(build(&parse_group_spec(spec).unwrap()).unwrap());
        analyze(g, game).unwrap()
    }

    #[test]
    fn z9_single_node() {
        let dot = digraph("Z9", GameKind::Avoid).to_dot("DNG(Z9)");
        assert_eq!(
            dot,
            "digraph \"DNG(Z9)\" {\n  node [shape=box];\n  c0 [label=\"|I|=3 pty=1 type=(1,1,0) ×1\"];\n}\n"
        );
    }

    #[test]
    fn z6_three_nodes_two_edges() {
        let dot = digraph("Z6", GameKind::Avoid).to_dot("DNG(Z6)");
        assert_eq!(dot.matches("[label=").count(), 3);
        assert_eq!(dot.matches(" -> ").count(), 2);
    }

    #[test]
    fn terminal_label_and_determinism() {
        let a = digraph("S4", GameKind::Achieve);
        let b = digraph("S4", GameKind::Achieve);
        assert_eq!(a.to_dot("x"), b.to_dot("x"));
        assert_eq!(a.simplify().to_dot("x"), b.simplify().to_dot("x"));
        assert!(a.to_dot("x").contains("GEN-terminal (0,0,0)"));
        assert!(a.simplify().to_dot("x").contains("GEN-terminal (0,0,0)"));
    }
}
