//! Finite groups given by Cayley tables, and their subgroups.

use std::collections::HashSet;
use std::ops::Deref;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};

/// Groups up to this order get an exhaustive associativity check.
pub const FULL_ASSOCIATIVITY_BOUND: usize = 256;

/// Default cap on the number of subgroups [`FiniteGroup::all_subgroups`] will enumerate.
pub const DEFAULT_SUBGROUP_CAP: usize = 100_000;

/// A finite group stored as an explicit multiplication table.
///
/// Element `i` times element `j` is `table[i * n + j]`. Instances are
/// immutable once built and can be shared between threads.
#[derive(Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverses: Vec<usize>,
    labels: Vec<String>,
    maximal: OnceLock<Vec<Subgroup>>,
}

impl Clone for FiniteGroup {
    fn clone(&self) -> Self {
        Self {
            order: self.order,
            table: self.table.clone(),
            identity: self.identity,
            inverses: self.inverses.clone(),
            labels: self.labels.clone(),
            maximal: self.maximal.clone(),
        }
    }
}

impl FiniteGroup {
    /// Validates a Cayley table and builds the group.
    ///
    /// Checks that the table is a Latin square with a two-sided identity and
    /// that it is associative: exhaustively when `n <= FULL_ASSOCIATIVITY_BOUND`,
    /// otherwise on `10 n^2` seeded random triples.
    pub fn from_table(rows: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if n > u32::MAX as usize {
            return Err(Error::ResourceLimit(format!("group order {n}")));
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::InvalidGroup(format!("entry {x} in row {i} is out of range")));
                }
                table.push(x as u32);
            }
        }
        let labels = match labels {
            Some(l) if l.len() != n => {
                return Err(Error::InvalidGroup(format!("{} labels for {n} elements", l.len())))
            }
            Some(l) => l,
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        Self::from_flat(n, table, labels)
    }

    pub(crate) fn from_flat(n: usize, table: Vec<u32>, labels: Vec<String>) -> Result<Self> {
        debug_assert_eq!(table.len(), n * n);
        let at = |i: usize, j: usize| table[i * n + j] as usize;

        let mut seen = vec![false; n];
        for i in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let x = at(i, j);
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidGroup(format!("row {i} repeats element {x}")));
                }
            }
        }
        for j in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for i in 0..n {
                let x = at(i, j);
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidGroup(format!("column {j} repeats element {x}")));
                }
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;

        let mut inverses = vec![0; n];
        for (x, inv) in inverses.iter_mut().enumerate() {
            // Latin rows guarantee exactly one right inverse.
            let y = (0..n).find(|&y| at(x, y) == identity).expect("latin square row");
            if at(y, x) != identity {
                return Err(Error::InvalidGroup(format!("element {x} has no two-sided inverse")));
            }
            *inv = y;
        }

        let assoc = |a: usize, b: usize, c: usize| at(at(a, b), c) == at(a, at(b, c));
        if n <= FULL_ASSOCIATIVITY_BOUND {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(Error::InvalidGroup(format!(
                                "associativity fails for ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            for _ in 0..10 * n * n {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(a, b, c) {
                    return Err(Error::InvalidGroup(format!(
                        "associativity fails for ({a}, {b}, {c})"
                    )));
                }
            }
        }

        Ok(Self {
            order: n,
            table,
            identity,
            inverses,
            labels,
            maximal: OnceLock::new(),
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.table.chunks(self.order)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.order)
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup(self.full_set())
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup(ElementSet::singleton(self.order, self.identity))
    }

    /// The subgroup generated by `generators`; the empty set generates the trivial subgroup.
    pub fn closure(&self, generators: &ElementSet) -> Subgroup {
        let mut members = vec![self.identity];
        let mut set = ElementSet::singleton(self.order, self.identity);
        let mut gens = Vec::new();
        for g in generators {
            if !set.contains(g) {
                gens.push(g);
                self.saturate(&mut set, &mut members, &gens);
            }
        }
        Subgroup(set)
    }

    /// Closes `members` (already a subgroup or a generating prefix) under right
    /// multiplication by `gens`. In a finite group this yields the generated subgroup.
    fn saturate(&self, set: &mut ElementSet, members: &mut Vec<usize>, gens: &[usize]) {
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    members.push(y);
                }
            }
            i += 1;
        }
    }

    /// Checks that `set` is a subgroup and wraps it.
    pub fn subgroup(&self, set: ElementSet) -> Result<Subgroup> {
        if set.universe() != self.order {
            return Err(Error::InvalidGroup("element set universe differs from group order".into()));
        }
        if !set.contains(self.identity) {
            return Err(Error::InvalidGroup("subset does not contain the identity".into()));
        }
        for a in &set {
            if !set.contains(self.inverse(a)) {
                return Err(Error::InvalidGroup(format!("subset is not closed under inverse of {a}")));
            }
            for b in &set {
                if !set.contains(self.mul(a, b)) {
                    return Err(Error::InvalidGroup(format!(
                        "subset is not closed under product of {a} and {b}"
                    )));
                }
            }
        }
        Ok(Subgroup(set))
    }

    /// Every subgroup, canonically ordered, using the default cap.
    pub fn all_subgroups(&self) -> Result<Vec<Subgroup>> {
        self.all_subgroups_capped(DEFAULT_SUBGROUP_CAP)
    }

    /// Every subgroup of the group, ordered by size then bit-pattern.
    ///
    /// Seeds with the cyclic subgroups and repeatedly joins each known subgroup
    /// with one cyclic subgroup until nothing new appears.
    pub fn all_subgroups_capped(&self, cap: usize) -> Result<Vec<Subgroup>> {
        let n = self.order;
        let mut cyclic_gens: Vec<usize> = Vec::new();
        let mut seen: HashSet<ElementSet> = HashSet::new();
        // (members, generators) of every subgroup found so far, in discovery order
        let mut found: Vec<(ElementSet, Vec<usize>)> = Vec::new();

        let over_cap = |count: usize| {
            Error::ResourceLimit(format!("more than {cap} subgroups (reached {count})"))
        };

        for g in 0..n {
            let c = self.closure(&ElementSet::singleton(n, g)).0;
            if seen.insert(c.clone()) {
                cyclic_gens.push(g);
                found.push((c, if g == self.identity { vec![] } else { vec![g] }));
                if found.len() > cap {
                    return Err(over_cap(found.len()));
                }
            }
        }

        let mut next = 0;
        while next < found.len() {
            let (base, base_gens) = found[next].clone();
            let base_members: Vec<usize> = base.iter().collect();
            for &c in &cyclic_gens {
                if base.contains(c) {
                    continue;
                }
                let mut gens = base_gens.clone();
                gens.push(c);
                let mut set = base.clone();
                let mut members = base_members.clone();
                self.saturate(&mut set, &mut members, &gens);
                if seen.insert(set.clone()) {
                    found.push((set, gens));
                    if found.len() > cap {
                        return Err(over_cap(found.len()));
                    }
                }
            }
            next += 1;
        }

        let mut out: Vec<Subgroup> = found.into_iter().map(|(s, _)| Subgroup(s)).collect();
        out.sort();
        Ok(out)
    }

    /// Maximal proper subgroups in canonical order; cached after the first call.
    pub fn maximal_subgroups(&self) -> Result<&[Subgroup]> {
        if let Some(m) = self.maximal.get() {
            return Ok(m);
        }
        if self.order == 1 {
            return Err(Error::TrivialGroup);
        }
        let all = self.all_subgroups()?;
        let max = maximal_among(&all[..all.len() - 1]);
        Ok(self.maximal.get_or_init(|| max))
    }

    /// True iff `set` generates the group, i.e. lies in no maximal subgroup.
    ///
    /// Uses the cached maximal subgroups when present and a closure otherwise.
    /// For the trivial group every subset, including the empty set, generates.
    pub fn is_generating(&self, set: &ElementSet) -> bool {
        if self.order == 1 {
            return true;
        }
        match self.maximal.get() {
            Some(max) => !max.iter().any(|m| set.is_subset(m)),
            None => self.closure(set).len() == self.order,
        }
    }
}

/// Elements of `proper` (proper subgroups, sorted ascending by size) not
/// strictly contained in another element.
fn maximal_among(proper: &[Subgroup]) -> Vec<Subgroup> {
    proper
        .iter()
        .enumerate()
        .filter(|(i, h)| {
            !proper[i + 1..]
                .iter()
                .any(|k| k.len() > h.len() && h.is_subset(k))
        })
        .map(|(_, h)| h.clone())
        .collect()
}

/// An element set that is closed under the group operation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup(ElementSet);

impl Subgroup {
    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn as_set(&self) -> &ElementSet {
        &self.0
    }

    pub fn into_set(self) -> ElementSet {
        self.0
    }

    pub(crate) fn from_set_unchecked(set: ElementSet) -> Self {
        Subgroup(set)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup(self.0.intersection(&other.0))
    }
}

impl Deref for Subgroup {
    type Target = ElementSet;

    fn deref(&self) -> &ElementSet {
        &self.0
    }
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup{:?}", self.0)
    }
}
