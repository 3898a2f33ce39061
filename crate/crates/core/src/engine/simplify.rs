use std::collections::{BTreeMap, BTreeSet};

use super::{GameKind, StructureDigraph, TypeTriple};

/// A set of type-equivalent structure classes merged into one node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplifiedNode {
    /// Class indices of the structure digraph, ascending.
    pub members: Vec<usize>,
    pub ty: TypeTriple,
    pub full_otype: BTreeSet<TypeTriple>,
    /// Subgroup size of the first member.
    pub size: usize,
    pub terminal: bool,
}

impl SimplifiedNode {
    pub fn multiplicity(&self) -> usize {
        self.members.len()
    }
}

/// Quotient of a typed structure digraph by type equivalence, with loops removed.
#[derive(Clone, Debug)]
pub struct SimplifiedDiagram {
    game: GameKind,
    nodes: Vec<SimplifiedNode>,
    edges: BTreeSet<(usize, usize)>,
    node_of_class: Vec<usize>,
    source: usize,
}

impl SimplifiedDiagram {
    /// Panics if `digraph` has no types.
    pub fn from_digraph(digraph: &StructureDigraph) -> Self {
        assert!(digraph.has_types(), "simplify needs a typed structure digraph");
        let n = digraph.class_count();
        let mut groups: BTreeMap<(TypeTriple, BTreeSet<TypeTriple>), usize> = BTreeMap::new();
        let mut nodes: Vec<SimplifiedNode> = Vec::new();
        let mut node_of_class = vec![0; n];
        for (c, slot) in node_of_class.iter_mut().enumerate() {
            let ty = digraph.type_of(c);
            let full = digraph.full_otype(c);
            let id = *groups.entry((ty, full.clone())).or_insert_with(|| {
                nodes.push(SimplifiedNode {
                    members: Vec::new(),
                    ty,
                    full_otype: full,
                    size: digraph.class_size(c),
                    terminal: Some(c) == digraph.terminal_index(),
                });
                nodes.len() - 1
            });
            nodes[id].members.push(c);
            *slot = id;
        }
        let edges = digraph
            .edges()
            .map(|(a, b)| (node_of_class[a], node_of_class[b]))
            .filter(|(a, b)| a != b)
            .collect();
        let source = node_of_class[digraph.lattice().frattini_index()];
        Self { game: digraph.game(), nodes, edges, node_of_class, source }
    }

    pub fn game(&self) -> GameKind {
        self.game
    }

    pub fn nodes(&self) -> &[SimplifiedNode] {
        &self.nodes
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn node_of_class(&self, class: usize) -> usize {
        self.node_of_class[class]
    }

    /// The node holding the Frattini class, where play starts.
    pub fn source(&self) -> usize {
        self.source
    }

    /// A directed cycle, if the quotient has one. Loops are already removed, so
    /// any cycle found here has length at least two.
    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        let n = self.nodes.len();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
        }
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut state = vec![0u8; n];
        let mut stack_path = Vec::new();
        for start in 0..n {
            if state[start] != 0 {
                continue;
            }
            let mut work = vec![(start, 0usize)];
            state[start] = 1;
            stack_path.push(start);
            while let Some(&mut (v, ref mut next)) = work.last_mut() {
                if let Some(&w) = adj[v].get(*next) {
                    *next += 1;
                    match state[w] {
                        0 => {
                            state[w] = 1;
                            stack_path.push(w);
                            work.push((w, 0));
                        }
                        1 => {
                            let pos = stack_path.iter().position(|&x| x == w).unwrap();
                            return Some(stack_path[pos..].to_vec());
                        }
                        _ => {}
                    }
                } else {
                    state[v] = 2;
                    stack_path.pop();
                    work.pop();
                }
            }
        }
        None
    }
}
