//! Structure digraphs of the avoidance and achievement games.
//!
//! Positions of a game are partitioned into structure classes `X_I`, one per
//! intersection subgroup `I` (plus a terminal class of generating sets in the
//! achievement game). Every position of a class with a given parity has the
//! same nim value, so a class is summarised by its type triple and the game
//! value is read off the class of the Frattini subgroup.

mod dot;
mod simplify;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

pub use dot::DotExport;
pub use simplify::{SimplifiedDiagram, SimplifiedNode};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::lattice::{parity, ClassRef, IntersectionLattice};
use crate::nimber::{mex, NimValue};

/// Nim components above this bound abort the computation.
pub const NIM_COMPONENT_CAP: u32 = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GameKind {
    /// `DNG`: do not generate.
    Avoid,
    /// `GEN`: generate.
    Achieve,
}

impl GameKind {
    pub fn tag(self) -> &'static str {
        match self {
            GameKind::Avoid => "dng",
            GameKind::Achieve => "gen",
        }
    }
}

impl fmt::Display for GameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GameKind::Avoid => "DNG",
            GameKind::Achieve => "GEN",
        })
    }
}

impl std::str::FromStr for GameKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dng" | "avoid" => Ok(GameKind::Avoid),
            "gen" | "achieve" => Ok(GameKind::Achieve),
            _ => Err(Error::InvalidParams(format!("unknown game '{s}', expected dng or gen"))),
        }
    }
}

/// `(pty(I), nim of even positions, nim of odd positions)` of a structure class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeTriple {
    pub parity: u8,
    pub even_nim: u32,
    pub odd_nim: u32,
}

impl TypeTriple {
    pub const fn new(parity: u8, even_nim: u32, odd_nim: u32) -> Self {
        Self { parity, even_nim, odd_nim }
    }

    /// The nim value shared by positions of the given size in this class.
    pub fn nim_for_size(&self, size: usize) -> u32 {
        if size % 2 == 0 {
            self.even_nim
        } else {
            self.odd_nim
        }
    }
}

impl fmt::Display for TypeTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.parity, self.even_nim, self.odd_nim)
    }
}

/// The only types a class of the avoidance game can have.
pub const DNG_TYPES: [TypeTriple; 4] = [
    TypeTriple::new(0, 0, 1),
    TypeTriple::new(1, 0, 1),
    TypeTriple::new(1, 1, 0),
    TypeTriple::new(1, 3, 2),
];

/// The only types a class of the achievement game on an odd-order group can have.
pub const ODD_GEN_TYPES: [TypeTriple; 4] = [
    TypeTriple::new(1, 0, 0),
    TypeTriple::new(1, 1, 0),
    TypeTriple::new(1, 2, 0),
    TypeTriple::new(1, 2, 1),
];

/// Whether `X_J` is an option of `X_I`: `I ⊆ J` and `J` is not covered by the
/// union of all nodes `K ⊇ I` that miss part of `J`.
///
/// Requires `i != j`.
pub fn has_arrow(lattice: &IntersectionLattice, i: usize, j: usize) -> bool {
    debug_assert_ne!(i, j, "structure digraphs have no loops");
    if i == j || !lattice.leq(i, j) {
        return false;
    }
    let target = lattice.node(j);
    let mut cover = ElementSet::empty(lattice.group().order());
    for k in lattice.up_set(i) {
        if !lattice.leq(j, k) {
            cover.union_with(lattice.node(k));
            if target.is_subset(&cover) {
                return false;
            }
        }
    }
    !target.is_subset(&cover)
}

/// Whether a single element extends node `i` to a generating set, i.e. the
/// terminal class is an option of `X_I` in the achievement game.
pub fn semi_terminal(lattice: &IntersectionLattice, i: usize) -> bool {
    let mut cover = ElementSet::empty(lattice.group().order());
    for k in lattice.up_set(i) {
        if lattice.is_maximal(k) {
            cover.union_with(lattice.node(k));
        }
    }
    cover.len() < lattice.group().order()
}

/// `(∃g)(∀M maximal) set ∪ {g} ⊄ M` for an arbitrary subset.
pub fn extends_to_generating(lattice: &IntersectionLattice, set: &ElementSet) -> bool {
    let mut cover = ElementSet::empty(lattice.group().order());
    for k in lattice.maximal_indices() {
        if set.is_subset(lattice.node(k)) {
            cover.union_with(lattice.node(k));
        }
    }
    cover.len() < lattice.group().order()
}

/// Structure classes with their option arrows and, once computed, their types.
///
/// Class indices `0..lattice.len()` are the lattice nodes in canonical order;
/// in the achievement game index `lattice.len()` is the terminal class.
#[derive(Debug, Clone)]
pub struct StructureDigraph {
    game: GameKind,
    lattice: IntersectionLattice,
    options: Vec<Vec<usize>>,
    types: Vec<TypeTriple>,
}

impl StructureDigraph {
    /// Finds all arrows. Types are left unset; see [`StructureDigraph::compute_types`].
    pub fn build(lattice: IntersectionLattice, game: GameKind) -> Self {
        let k = lattice.len();
        let total = match game {
            GameKind::Avoid => k,
            GameKind::Achieve => k + 1,
        };
        let mut options = vec![Vec::new(); total];
        for (i, opts) in options.iter_mut().enumerate().take(k) {
            for j in lattice.up_set(i) {
                if j != i && has_arrow(&lattice, i, j) {
                    opts.push(j);
                }
            }
            if game == GameKind::Achieve && semi_terminal(&lattice, i) {
                opts.push(k);
            }
        }
        Self { game, lattice, options, types: Vec::new() }
    }

    pub fn game(&self) -> GameKind {
        self.game
    }

    pub fn lattice(&self) -> &IntersectionLattice {
        &self.lattice
    }

    pub fn group(&self) -> &FiniteGroup {
        self.lattice.group()
    }

    pub fn class_count(&self) -> usize {
        self.options.len()
    }

    pub fn class_ref(&self, index: usize) -> ClassRef {
        if index < self.lattice.len() {
            ClassRef::Lattice(index)
        } else {
            ClassRef::TerminalGen
        }
    }

    pub fn class_index(&self, class: ClassRef) -> Option<usize> {
        match (class, self.game) {
            (ClassRef::Lattice(i), _) if i < self.lattice.len() => Some(i),
            (ClassRef::TerminalGen, GameKind::Achieve) => Some(self.lattice.len()),
            _ => None,
        }
    }

    pub fn terminal_index(&self) -> Option<usize> {
        self.class_index(ClassRef::TerminalGen)
    }

    /// Size of the subgroup indexing a class; the whole group for the terminal class.
    pub fn class_size(&self, index: usize) -> usize {
        match self.class_ref(index) {
            ClassRef::Lattice(i) => self.lattice.node(i).order(),
            ClassRef::TerminalGen => self.group().order(),
        }
    }

    pub fn options(&self, index: usize) -> &[usize] {
        &self.options[index]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.options
            .iter()
            .enumerate()
            .flat_map(|(i, opts)| opts.iter().map(move |&j| (i, j)))
    }

    pub fn edge_count(&self) -> usize {
        self.options.iter().map(Vec::len).sum()
    }

    pub fn has_types(&self) -> bool {
        !self.types.is_empty()
    }

    /// Panics if types have not been computed.
    pub fn type_of(&self, index: usize) -> TypeTriple {
        self.types[index]
    }

    pub fn types(&self) -> &[TypeTriple] {
        &self.types
    }

    /// `otype`: the set of types of the option classes.
    pub fn otype(&self, index: usize) -> BTreeSet<TypeTriple> {
        self.options[index].iter().map(|&j| self.types[j]).collect()
    }

    /// `Otype`: `otype` together with the class's own type.
    pub fn full_otype(&self, index: usize) -> BTreeSet<TypeTriple> {
        let mut set = self.otype(index);
        set.insert(self.types[index]);
        set
    }

    /// Kahn topological order (sources first); `Err(Cycle)` if the digraph has a cycle.
    pub fn topological_order(&self) -> Result<Vec<usize>> {
        let n = self.options.len();
        let mut indegree = vec![0usize; n];
        for (_, j) in self.edges() {
            indegree[j] += 1;
        }
        let mut ready: BTreeSet<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(i) = ready.pop_first() {
            order.push(i);
            for &j in &self.options[i] {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    ready.insert(j);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&i| indegree[i] > 0).unwrap_or(0);
            return Err(Error::Cycle(stuck));
        }
        Ok(order)
    }

    /// Lattice classes with no incoming arrow from another lattice class.
    pub fn lattice_sources(&self) -> Vec<usize> {
        let k = self.lattice.len();
        let mut has_in = vec![false; k];
        for (i, j) in self.edges() {
            if i < k && j < k {
                has_in[j] = true;
            }
        }
        (0..k).filter(|&i| !has_in[i]).collect()
    }

    /// Assigns a type to every class, options before the classes pointing at them.
    ///
    /// The terminal class gets `(pty(G), 0, 0)`. For a lattice class with option
    /// types `(a, b, c)`, the positions whose parity matches `pty(I)` include
    /// the subgroup `I` itself, whose options all leave the class; the other
    /// parity also reaches those positions inside the class. So for odd `I`
    /// `odd = mex{b}` and `even = mex({odd} ∪ {c})`, and symmetrically for even `I`.
    pub fn compute_types(mut self) -> Result<Self> {
        let order = self.topological_order()?;
        let n = self.options.len();
        let mut types: Vec<Option<TypeTriple>> = vec![None; n];
        for &idx in order.iter().rev() {
            let ty = match self.class_ref(idx) {
                ClassRef::TerminalGen => {
                    TypeTriple::new(parity(self.group().order()), 0, 0)
                }
                ClassRef::Lattice(i) => {
                    let opts: Vec<TypeTriple> = self.options[idx]
                        .iter()
                        .map(|&j| types[j].expect("options are typed first"))
                        .collect();
                    let evens = opts.iter().map(|t| t.even_nim);
                    let odds = opts.iter().map(|t| t.odd_nim);
                    let p = self.lattice.parity(i);
                    let (even_nim, odd_nim) = if p == 1 {
                        let odd = mex(evens);
                        (mex(odds.chain([odd])), odd)
                    } else {
                        let even = mex(odds);
                        (even, mex(evens.chain([even])))
                    };
                    for v in [even_nim, odd_nim] {
                        if v > NIM_COMPONENT_CAP {
                            return Err(Error::NimOverflow(v));
                        }
                    }
                    TypeTriple::new(p, even_nim, odd_nim)
                }
            };
            types[idx] = Some(ty);
        }
        self.types = types.into_iter().map(|t| t.expect("every class visited")).collect();
        if self.game == GameKind::Avoid {
            if let Some((i, t)) =
                self.types.iter().enumerate().find(|(_, t)| !DNG_TYPES.contains(t))
            {
                return Err(Error::InvariantViolation(format!(
                    "avoidance class {i} has type {t}, outside the four possible types"
                )));
            }
        }
        Ok(self)
    }

    /// The type of the class containing position `set`.
    pub fn type_of_position(&self, set: &ElementSet) -> Option<TypeTriple> {
        let idx = self.class_index(self.lattice.class_of(set))?;
        self.types.get(idx).copied()
    }

    /// The game value: even-position nim of the Frattini class, which holds the empty start.
    pub fn game_nim(&self) -> NimValue {
        NimValue(self.types[self.lattice.frattini_index()].even_nim)
    }

    pub fn simplify(&self) -> SimplifiedDiagram {
        SimplifiedDiagram::from_digraph(self)
    }
}

/// Builds and types the structure digraph of `game` on `group`.
pub fn analyze(group: Arc<FiniteGroup>, game: GameKind) -> Result<StructureDigraph> {
    let lattice = IntersectionLattice::new(group)?;
    StructureDigraph::build(lattice, game).compute_types()
}

/// Nim value of the game on `group`.
///
/// The trivial group is special: generating is immediate, so the achievement
/// game is `*0`, and the avoidance game has no legal position at all.
pub fn game_nim(group: Arc<FiniteGroup>, game: GameKind) -> Result<NimValue> {
    if group.order() == 1 {
        return match game {
            GameKind::Achieve => Ok(NimValue(0)),
            GameKind::Avoid => Err(Error::UnplayableGame),
        };
    }
    Ok(analyze(group, game)?.game_nim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build, parse_group_spec};

    fn group(spec: &str) -> Arc<FiniteGroup> {
        Arc::new(build(&parse_group_spec(spec).unwrap()).unwrap())
    }

    fn lattice(spec: &str) -> IntersectionLattice {
        IntersectionLattice::new(group(spec)).unwrap()
    }

    fn nim(spec: &str, game: GameKind) -> u32 {
        game_nim(group(spec), game).unwrap().0
    }

    fn node(l: &IntersectionLattice, elems: &[usize]) -> usize {
        l.index_of(&ElementSet::from_elements(l.group().order(), elems.iter().copied()))
            .unwrap()
    }

    #[test]
    fn arrows_in_z6() {
        let l = lattice("Z6");
        let (phi, two, three) = (node(&l, &[0]), node(&l, &[0, 2, 4]), node(&l, &[0, 3]));
        assert!(has_arrow(&l, phi, two));
        assert!(has_arrow(&l, phi, three));
        assert!(!has_arrow(&l, two, three));
        assert!(!has_arrow(&l, three, two));
    }

    #[test]
    fn maximal_subgroups_are_semi_terminal() {
        for spec in ["D6", "S4", "Z12", "Z3xZ3"] {
            let l = lattice(spec);
            for m in l.maximal_indices() {
                assert!(semi_terminal(&l, m), "{spec}");
            }
        }
    }

    #[test]
    fn z8_four_is_semi_terminal() {
        // <4> is not an intersection subgroup of Z8 (the lattice is just <2>)
        let l = lattice("Z8");
        assert_eq!(l.len(), 1);
        let four = ElementSet::from_elements(8, [0, 4]);
        assert!(extends_to_generating(&l, &four));
        assert!(semi_terminal(&l, 0));
        assert!(!l.group().is_generating(&four));
    }

    #[test]
    fn d6_rotation_by_three_is_not_semi_terminal() {
        let l = lattice("D6");
        // r^3 has index 3; {e, r^3} is the intersection of two maximal dihedral subgroups
        let i = node(&l, &[0, 3]);
        assert!(!semi_terminal(&l, i));
    }

    #[test]
    fn digraph_shapes() {
        let d = StructureDigraph::build(lattice("Z6"), GameKind::Avoid);
        assert_eq!((d.class_count(), d.edge_count()), (3, 2));
        assert!(d.options(0).len() == 2);
        let d = StructureDigraph::build(lattice("Z9"), GameKind::Avoid);
        assert_eq!((d.class_count(), d.edge_count()), (1, 0));
        let d = StructureDigraph::build(lattice("Z9"), GameKind::Achieve);
        assert_eq!((d.class_count(), d.edge_count()), (2, 1));
        assert_eq!(d.options(0), &[1]);
    }

    #[test]
    fn small_game_values() {
        assert_eq!(nim("Z4", GameKind::Avoid), 0);
        assert_eq!(nim("Z4", GameKind::Achieve), 1);
        assert_eq!(nim("Z9", GameKind::Avoid), 1);
        assert_eq!(nim("D3", GameKind::Achieve), 3);
        assert_eq!(nim("Z6xZ3", GameKind::Avoid), 0);
        assert_eq!(nim("Z6xZ3", GameKind::Achieve), 0);
        assert_eq!(nim("Z2", GameKind::Avoid), 1);
        assert_eq!(nim("Z2", GameKind::Achieve), 2);
        assert_eq!(nim("Z1", GameKind::Achieve), 0);
        assert!(matches!(game_nim(group("Z1"), GameKind::Avoid), Err(Error::UnplayableGame)));
    }

    #[test]
    fn z9_types() {
        let d = analyze(group("Z9"), GameKind::Avoid).unwrap();
        assert_eq!(d.types(), &[TypeTriple::new(1, 1, 0)]);
    }

    #[test]
    fn z6_z3_frattini_class() {
        let d = analyze(group("Z6xZ3"), GameKind::Avoid).unwrap();
        let phi = d.lattice().frattini_index();
        assert_eq!(d.type_of(phi), TypeTriple::new(1, 0, 1));
        let expected: BTreeSet<_> = [TypeTriple::new(0, 0, 1), TypeTriple::new(1, 3, 2)].into();
        assert_eq!(d.otype(phi), expected);
    }

    #[test]
    fn type_rule_reproduces_table_rows() {
        // a single odd class whose only option has type t4 = (1,3,2) becomes t3
        let t = |p: u8, opts: &[TypeTriple]| {
            let evens = opts.iter().map(|t| t.even_nim);
            let odds = opts.iter().map(|t| t.odd_nim);
            if p == 1 {
                let odd = mex(evens);
                TypeTriple::new(1, mex(odds.chain([odd])), odd)
            } else {
                let even = mex(odds);
                TypeTriple::new(0, even, mex(evens.chain([even])))
            }
        };
        let [t1, t2, t3, t4] = DNG_TYPES;
        assert_eq!(t(1, &[t4]), t3);
        assert_eq!(t(1, &[t1]), t2);
        assert_eq!(t(0, &[t1]), t1);
        assert_eq!(t(1, &[t1, t4]), t2);
        assert_eq!(t(1, &[t1, t3]), t4);
        assert_eq!(t(1, &[]), t3);
        assert_eq!(t(0, &[]), t1);
        assert_eq!(t(1, &[TypeTriple::new(1, 0, 0)]), TypeTriple::new(1, 2, 1));
    }

    #[test]
    fn achievement_digraph_has_terminal() {
        let d = analyze(group("D4"), GameKind::Achieve).unwrap();
        let term = d.terminal_index().unwrap();
        assert_eq!(d.type_of(term), TypeTriple::new(0, 0, 0));
        assert!(d.options(term).is_empty());
        assert_eq!(d.lattice_sources(), vec![d.lattice().frattini_index()]);
    }

    #[test]
    fn game_kind_parsing() {
        assert_eq!("DNG".parse::<GameKind>().unwrap(), GameKind::Avoid);
        assert_eq!("gen".parse::<GameKind>().unwrap(), GameKind::Achieve);
        assert!("nim".parse::<GameKind>().is_err());
    }
}
