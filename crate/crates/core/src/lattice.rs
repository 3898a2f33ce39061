//! Intersection subgroups of the maximal subgroups and the structure classes they index.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::bitset::ElementSet;
use crate::error::Result;
use crate::group::{FiniteGroup, Subgroup};

/// `pty(n)`: 1 for odd `n`, 0 for even `n`.
#[inline]
pub fn parity(n: usize) -> u8 {
    (n % 2) as u8
}

/// A structure class: `X_I` for a lattice node, or the terminal class of
/// generating sets in the achievement game.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassRef {
    Lattice(usize),
    TerminalGen,
}

/// All intersections of non-empty families of maximal subgroups.
#[derive(Debug, Clone)]
pub struct IntersectionLattice {
    group: Arc<FiniteGroup>,
    nodes: Vec<Subgroup>,
    index: HashMap<ElementSet, usize>,
    /// `up[i]` holds every `j` with `nodes[i] ⊆ nodes[j]`, including `i`.
    up: Vec<ElementSet>,
    maximal: Vec<bool>,
}

impl IntersectionLattice {
    /// Closes the maximal subgroups under pairwise intersection.
    ///
    /// Fails with `TrivialGroup` for the group of order 1.
    pub fn new(group: Arc<FiniteGroup>) -> Result<Self> {
        let maximals: Vec<Subgroup> = group.maximal_subgroups()?.to_vec();
        let mut seen: HashSet<ElementSet> = maximals.iter().map(|m| m.as_set().clone()).collect();
        let mut found: Vec<ElementSet> = seen.iter().cloned().collect();
        found.sort();
        let mut next = 0;
        while next < found.len() {
            let current = found[next].clone();
            // intersect with everything discovered so far; later nodes pair with it on their turn
            for j in 0..next {
                let meet = current.intersection(&found[j]);
                if seen.insert(meet.clone()) {
                    found.push(meet);
                }
            }
            next += 1;
        }

        found.sort();
        let nodes: Vec<Subgroup> = found.into_iter().map(Subgroup::from_set_unchecked).collect();
        let index = nodes.iter().enumerate().map(|(i, s)| (s.as_set().clone(), i)).collect();
        let k = nodes.len();
        let up = (0..k)
            .map(|i| ElementSet::from_elements(k, (i..k).filter(|&j| nodes[i].is_subset(&nodes[j]))))
            .collect();
        let maximal_sets: HashSet<&ElementSet> = maximals.iter().map(|m| m.as_set()).collect();
        let maximal = nodes.iter().map(|n| maximal_sets.contains(n.as_set())).collect();
        Ok(Self { group, nodes, index, up, maximal })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Subgroup] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &Subgroup {
        &self.nodes[i]
    }

    pub fn index_of(&self, set: &ElementSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    /// `nodes[i] ⊆ nodes[j]`.
    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    /// Indices of nodes containing `nodes[i]`, including `i` itself.
    pub fn up_set(&self, i: usize) -> &ElementSet {
        &self.up[i]
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        self.maximal[i]
    }

    pub fn maximal_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(|&i| self.maximal[i])
    }

    pub fn parity(&self, i: usize) -> u8 {
        parity(self.nodes[i].order())
    }

    /// Index of the Frattini subgroup: the unique minimum node, always first in canonical order.
    pub fn frattini_index(&self) -> usize {
        0
    }

    pub fn frattini(&self) -> &Subgroup {
        &self.nodes[self.frattini_index()]
    }

    /// The structure class containing position `set`.
    ///
    /// This is the meet of every node containing `set`; when no node contains
    /// it, `set` generates the group and belongs to the terminal class.
    pub fn class_of(&self, set: &ElementSet) -> ClassRef {
        let mut meet: Option<ElementSet> = None;
        for node in &self.nodes {
            if set.is_subset(node) {
                match meet.as_mut() {
                    Some(m) => m.intersect_with(node),
                    None => meet = Some(node.as_set().clone()),
                }
            }
        }
        match meet {
            Some(m) => ClassRef::Lattice(
                self.index_of(&m).expect("intersection of lattice nodes is a lattice node"),
            ),
            None => ClassRef::TerminalGen,
        }
    }
}

/// Free-function form of [`IntersectionLattice::new`].
pub fn intersection_subgroups(group: Arc<FiniteGroup>) -> Result<IntersectionLattice> {
    IntersectionLattice::new(group)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build, parse_group_spec};
    use crate::error::Error;

    fn lattice(spec: &str) -> IntersectionLattice {
        let g = build(&parse_group_spec(spec).unwrap()).unwrap();
        IntersectionLattice::new(Arc::new(g)).unwrap()
    }

    fn node_sets(l: &IntersectionLattice) -> Vec<Vec<usize>> {
        l.nodes().iter().map(|s| s.iter().collect()).collect()
    }

    #[test]
    fn small_cyclic_lattices() {
        let z6 = lattice("Z6");
        assert_eq!(node_sets(&z6), vec![vec![0], vec![0, 3], vec![0, 2, 4]]);
        assert_eq!(z6.frattini().iter().collect::<Vec<_>>(), vec![0]);
        assert!(!z6.is_maximal(0) && z6.is_maximal(1) && z6.is_maximal(2));
        assert_eq!(node_sets(&lattice("Z4")), vec![vec![0, 2]]);
        assert_eq!(node_sets(&lattice("Z9")), vec![vec![0, 3, 6]]);
    }

    #[test]
    fn trivial_group_has_no_lattice() {
        let g = build(&parse_group_spec("Z1").unwrap()).unwrap();
        assert!(matches!(IntersectionLattice::new(Arc::new(g)), Err(Error::TrivialGroup)));
    }

    #[test]
    fn frattini_examples() {
        assert_eq!(lattice("Z12").frattini().order(), 2);
        assert_eq!(lattice("D6").frattini().order(), 1);
        assert_eq!(lattice("Z6xZ3").frattini().order(), 1);
        assert_eq!(lattice("Z8").frattini().order(), 4);
    }

    #[test]
    fn class_of_examples() {
        let z4 = lattice("Z4");
        assert_eq!(z4.class_of(&ElementSet::from_elements(4, [0])), ClassRef::Lattice(0));
        assert_eq!(z4.class_of(&ElementSet::from_elements(4, [1])), ClassRef::TerminalGen);
        let z6 = lattice("Z6");
        let i = z6.index_of(&ElementSet::from_elements(6, [0, 2, 4])).unwrap();
        assert_eq!(z6.class_of(&ElementSet::from_elements(6, [2])), ClassRef::Lattice(i));
        assert_eq!(z6.class_of(&ElementSet::empty(6)), ClassRef::Lattice(0));
    }

    #[test]
    fn lattice_is_intersection_closed_and_ordered() {
        for spec in ["Z2xZ2xZ2", "S4", "D12", "Z6xZ3", "A5"] {
            let l = lattice(spec);
            for i in 0..l.len() {
                assert!(l.frattini().is_subset(l.node(i)));
                for j in 0..l.len() {
                    assert!(l.index_of(&l.node(i).intersection(l.node(j))).is_some());
                    assert_eq!(l.leq(i, j), l.node(i).is_subset(l.node(j)));
                }
            }
            assert!(l.nodes().windows(2).all(|w| w[0] < w[1]));
            let m = l.group().maximal_subgroups().unwrap().len();
            assert_eq!(l.maximal_indices().count(), m);
            assert!(l.len() >= m);
        }
    }
}
