//! Constructors for the group families and the textual group-spec language.
//!
//! Grammar (case-insensitive):
//!
//! ```text
//! spec    := factor ('x' factor)*
//! factor  := 'Z' n | 'D' n | 'S' n | 'A' n | 'perm:' gens | 'cayley:' path
//! gens    := gen (',' gen)*
//! gen     := cycle+
//! cycle   := '(' point* ')'          points are 1-based, space separated
//! ```
//!
//! A `cayley:` factor consumes the rest of the input. Whitespace between
//! tokens is ignored.

use std::collections::HashMap;
use std::fmt;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Largest group order any constructor will build.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// Permutation generators may move at most this many points.
pub const MAX_PERM_POINTS: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Product(Vec<GroupSpec>),
    /// Each generator is a list of 1-based cycles.
    Perm(Vec<Vec<Vec<usize>>>),
    CayleyFile(PathBuf),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "Z{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::Product(factors) => {
                for (i, g) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
            GroupSpec::Perm(gens) => {
                f.write_str("perm:")?;
                for (i, gen) in gens.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    for cycle in gen {
                        let pts: Vec<String> = cycle.iter().map(|p| p.to_string()).collect();
                        write!(f, "({})", pts.join(" "))?;
                    }
                }
                Ok(())
            }
            GroupSpec::CayleyFile(p) => write!(f, "cayley:{}", p.display()),
        }
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_group_spec(s)
    }
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0 };
    let mut factors = vec![p.factor()?];
    loop {
        p.skip_ws();
        if p.at_end() {
            break;
        }
        p.expect_char('x', "'x' or end of input")?;
        factors.push(p.factor()?);
    }
    Ok(if factors.len() == 1 { factors.pop().unwrap() } else { GroupSpec::Product(factors) })
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.to_ascii_lowercase())
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn error<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Parse { position: self.pos, expected: expected.to_string() })
    }

    fn expect_char(&mut self, c: char, expected: &str) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.error(expected)
        }
    }

    fn keyword(&mut self, word: &str) -> bool {
        let end = self.pos + word.len();
        if end > self.chars.len() {
            return false;
        }
        let got: String = self.chars[self.pos..end].iter().map(|c| c.to_ascii_lowercase()).collect();
        if got == word {
            self.pos = end;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("a decimal number");
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().or_else(|_| {
            self.pos = start;
            self.error("a number that fits in a machine word")
        })
    }

    fn factor(&mut self) -> Result<GroupSpec> {
        self.skip_ws();
        if self.keyword("perm:") {
            return self.perm();
        }
        if self.keyword("cayley:") {
            let path: String = self.chars[self.pos..].iter().collect();
            let path = path.trim();
            if path.is_empty() {
                return self.error("a file path");
            }
            self.pos = self.chars.len();
            return Ok(GroupSpec::CayleyFile(PathBuf::from(path)));
        }
        let ctor: fn(usize) -> GroupSpec = match self.peek() {
            Some('z') => GroupSpec::Cyclic,
            Some('d') => GroupSpec::Dihedral,
            Some('s') => GroupSpec::Symmetric,
            Some('a') => GroupSpec::Alternating,
            _ => return self.error("one of Z<n>, D<n>, S<n>, A<n>, perm:, cayley:"),
        };
        self.pos += 1;
        let n = self.number()?;
        Ok(ctor(n))
    }

    fn perm(&mut self) -> Result<GroupSpec> {
        let mut gens = vec![self.perm_generator()?];
        loop {
            self.skip_ws();
            if self.peek() == Some(',') {
                self.pos += 1;
                gens.push(self.perm_generator()?);
            } else {
                break;
            }
        }
        Ok(GroupSpec::Perm(gens))
    }

    fn perm_generator(&mut self) -> Result<Vec<Vec<usize>>> {
        let mut cycles = Vec::new();
        loop {
            self.skip_ws();
            if self.peek() != Some('(') {
                break;
            }
            self.pos += 1;
            let mut cycle = Vec::new();
            loop {
                self.skip_ws();
                match self.peek() {
                    Some(')') => {
                        self.pos += 1;
                        break;
                    }
                    Some(c) if c.is_ascii_digit() => {
                        let start = self.pos;
                        let point = self.number()?;
                        if point == 0 {
                            self.pos = start;
                            return self.error("a 1-based point");
                        }
                        cycle.push(point);
                    }
                    _ => return self.error("a point or ')'"),
                }
            }
            cycles.push(cycle);
        }
        if cycles.is_empty() {
            return self.error("'(' starting a cycle");
        }
        Ok(cycles)
    }
}

/// Builds a group from a spec with the default order cap.
pub fn build(spec: &GroupSpec) -> Result<FiniteGroup> {
    build_capped(spec, DEFAULT_ORDER_CAP)
}

pub fn build_capped(spec: &GroupSpec, cap: usize) -> Result<FiniteGroup> {
    let out_of_range = |what: &str| Err(Error::InvalidParams(what.to_string()));
    match spec {
        GroupSpec::Cyclic(n) => {
            if *n == 0 {
                return out_of_range("Z<n> needs n >= 1");
            }
            check_order(*n, cap)?;
            cyclic(*n)
        }
        GroupSpec::Dihedral(n) => {
            if *n < 2 {
                return out_of_range("D<n> needs n >= 2");
            }
            check_order(n.saturating_mul(2), cap)?;
            dihedral(*n)
        }
        GroupSpec::Symmetric(n) => {
            if *n == 0 {
                return out_of_range("S<n> needs n >= 1");
            }
            check_order(factorial(*n), cap)?;
            symmetric(*n, false)
        }
        GroupSpec::Alternating(n) => {
            if *n < 3 {
                return out_of_range("A<n> needs n >= 3");
            }
            check_order(factorial(*n) / 2, cap)?;
            symmetric(*n, true)
        }
        GroupSpec::Product(factors) => {
            if factors.is_empty() {
                return out_of_range("empty product");
            }
            let groups = factors
                .iter()
                .map(|f| build_capped(f, cap))
                .collect::<Result<Vec<_>>>()?;
            product(&groups, cap)
        }
        GroupSpec::Perm(gens) => perm_group(gens, cap),
        GroupSpec::CayleyFile(path) => load_cayley(path),
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).fold(1usize, |acc, k| acc.saturating_mul(k))
}

fn check_order(order: usize, cap: usize) -> Result<()> {
    if order > cap {
        Err(Error::ResourceLimit(format!("group order {order} exceeds cap {cap}")))
    } else {
        Ok(())
    }
}

fn cyclic(n: usize) -> Result<FiniteGroup> {
    let table = (0..n).flat_map(|i| (0..n).map(move |j| ((i + j) % n) as u32)).collect();
    FiniteGroup::from_flat(n, table, (0..n).map(|i| i.to_string()).collect())
}

/// `D_n = <r, f | r^n = f^2 = e, rf = fr^{n-1}>`; `r^i f^j` has index `i + n j`.
fn dihedral(n: usize) -> Result<FiniteGroup> {
    let order = 2 * n;
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let (i, fa) = (a % n, a / n);
        for b in 0..order {
            let (k, fb) = (b % n, b / n);
            // f r^k = r^{-k} f
            let rot = if fa == 0 { (i + k) % n } else { (i + n - k) % n };
            table.push((rot + n * ((fa + fb) % 2)) as u32);
        }
    }
    let labels = (0..order).map(|a| dihedral_label(a % n, a / n)).collect();
    FiniteGroup::from_flat(order, table, labels)
}

fn dihedral_label(i: usize, j: usize) -> String {
    let r = match i {
        0 => String::new(),
        1 => "r".to_string(),
        _ => format!("r^{i}"),
    };
    match (r.is_empty(), j) {
        (true, 0) => "e".to_string(),
        (_, 0) => r,
        _ => format!("{r}f"),
    }
}

type Perm = Vec<u8>;

/// `(a * b)(x) = b(a(x))`: apply `a` first.
fn compose(a: &Perm, b: &Perm) -> Perm {
    a.iter().map(|&x| b[x as usize]).collect()
}

fn is_even(p: &Perm) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for start in 0..p.len() {
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    transpositions % 2 == 0
}

/// Cycle notation with 1-based points; the identity is `()`.
pub fn cycle_notation(p: &[u8]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut pts = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            pts.push((x + 1).to_string());
            x = p[x] as usize;
        }
        out.push('(');
        out.push_str(&pts.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

fn next_permutation(p: &mut [u8]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

fn symmetric(n: usize, even_only: bool) -> Result<FiniteGroup> {
    let mut elements = Vec::new();
    let mut p: Perm = (0..n as u8).collect();
    loop {
        if !even_only || is_even(&p) {
            elements.push(p.clone());
        }
        if !next_permutation(&mut p) {
            break;
        }
    }
    perm_table(elements)
}

/// Elements must be sorted with the identity first.
fn perm_table(elements: Vec<Perm>) -> Result<FiniteGroup> {
    let n = elements.len();
    let index: HashMap<&Perm, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut table = Vec::with_capacity(n * n);
    for a in &elements {
        for b in &elements {
            let c = compose(a, b);
            let idx = *index
                .get(&c)
                .ok_or_else(|| Error::InvalidGroup("permutation set is not closed".into()))?;
            table.push(idx as u32);
        }
    }
    let labels = elements.iter().map(|p| cycle_notation(p)).collect();
    FiniteGroup::from_flat(n, table, labels)
}

fn perm_group(gens: &[Vec<Vec<usize>>], cap: usize) -> Result<FiniteGroup> {
    let degree = gens.iter().flatten().flatten().copied().max().unwrap_or(1).max(1);
    if degree > MAX_PERM_POINTS {
        return Err(Error::InvalidParams(format!(
            "permutation generators move point {degree}; at most {MAX_PERM_POINTS} points are supported"
        )));
    }
    let mut perms = Vec::new();
    for gen in gens {
        let mut p: Perm = (0..degree as u8).collect();
        for cycle in gen {
            let mut seen = std::collections::HashSet::new();
            if !cycle.iter().all(|x| seen.insert(x)) {
                return Err(Error::InvalidParams(format!("cycle {cycle:?} repeats a point")));
            }
            // compose the cycle after what has been built so far
            let mut c: Perm = (0..degree as u8).collect();
            for (k, &x) in cycle.iter().enumerate() {
                c[x - 1] = (cycle[(k + 1) % cycle.len()] - 1) as u8;
            }
            p = compose(&p, &c);
        }
        perms.push(p);
    }

    let identity: Perm = (0..degree as u8).collect();
    let mut seen = std::collections::HashSet::from([identity.clone()]);
    let mut elements = vec![identity];
    let mut i = 0;
    while i < elements.len() {
        for g in &perms {
            let y = compose(&elements[i], g);
            if seen.insert(y.clone()) {
                elements.push(y);
                if elements.len() > cap {
                    return Err(Error::ResourceLimit(format!(
                        "permutation group exceeds order cap {cap}"
                    )));
                }
            }
        }
        i += 1;
    }
    elements.sort();
    perm_table(elements)
}

/// Direct product with the default order cap.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    direct_product_capped(g, h, DEFAULT_ORDER_CAP)
}

/// Componentwise product; the pair `(i, j)` has index `i * |H| + j`.
pub fn direct_product_capped(g: &FiniteGroup, h: &FiniteGroup, cap: usize) -> Result<FiniteGroup> {
    product(&[g, h], cap)
}

fn product<G: std::borrow::Borrow<FiniteGroup>>(factors: &[G], cap: usize) -> Result<FiniteGroup> {
    let orders: Vec<usize> = factors.iter().map(|f| f.borrow().order()).collect();
    let n = orders.iter().try_fold(1usize, |acc, &o| acc.checked_mul(o)).unwrap_or(usize::MAX);
    check_order(n, cap)?;

    // decompose flat index into per-factor indices, row-major
    let digits = |mut x: usize| -> Vec<usize> {
        let mut d = vec![0; orders.len()];
        for k in (0..orders.len()).rev() {
            d[k] = x % orders[k];
            x /= orders[k];
        }
        d
    };
    let decomposed: Vec<Vec<usize>> = (0..n).map(digits).collect();

    let mut table = Vec::with_capacity(n * n);
    for a in &decomposed {
        for b in &decomposed {
            let mut idx = 0;
            for (k, f) in factors.iter().enumerate() {
                idx = idx * orders[k] + f.borrow().mul(a[k], b[k]);
            }
            table.push(idx as u32);
        }
    }
    let labels = decomposed
        .iter()
        .map(|d| {
            let parts: Vec<&str> =
                d.iter().zip(factors).map(|(&i, f)| f.borrow().label(i)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let group = FiniteGroup::from_flat(n, table, labels)?;
    debug_assert_eq!(group.identity(), {
        let mut idx = 0;
        for (k, f) in factors.iter().enumerate() {
            idx = idx * orders[k] + f.borrow().identity();
        }
        idx
    });
    Ok(group)
}

#[derive(Deserialize)]
struct CayleyFile {
    order: usize,
    table: Vec<Vec<usize>>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

/// Loads `{"order": n, "table": [[..]], "labels": [..]}` and relabels so the identity is 0.
pub fn load_cayley(path: &Path) -> Result<FiniteGroup> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| Error::CayleyIo { path: path.to_path_buf(), source })?;
    parse_cayley_json(&text).map_err(|e| match e {
        Error::CayleyJson { source, .. } => Error::CayleyJson { path: path.to_path_buf(), source },
        other => other,
    })
}

pub fn parse_cayley_json(text: &str) -> Result<FiniteGroup> {
    let file: CayleyFile = serde_json::from_str(text)
        .map_err(|source| Error::CayleyJson { path: PathBuf::new(), source })?;
    if file.order != file.table.len() {
        return Err(Error::InvalidGroup(format!(
            "declared order {} but table has {} rows",
            file.order,
            file.table.len()
        )));
    }
    let group = FiniteGroup::from_table(file.table, file.labels)?;
    let e = group.identity();
    if e == 0 {
        return Ok(group);
    }
    let swap = |x: usize| if x == 0 { e } else if x == e { 0 } else { x };
    let n = group.order();
    let rows = (0..n)
        .map(|i| (0..n).map(|j| swap(group.mul(swap(i), swap(j)))).collect())
        .collect();
    let labels = (0..n).map(|i| group.label(swap(i)).to_string()).collect();
    FiniteGroup::from_table(rows, Some(labels))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn element_orders(g: &FiniteGroup) -> Vec<usize> {
        let mut v: Vec<usize> = (0..g.order()).map(|a| g.element_order(a)).collect();
        v.sort();
        v
    }

    #[test]
    fn parses_simple_specs() {
        assert_eq!(parse_group_spec("Z4").unwrap(), GroupSpec::Cyclic(4));
        assert_eq!(parse_group_spec(" z 4 ").unwrap(), GroupSpec::Cyclic(4));
        assert_eq!(
            parse_group_spec("Z6xZ3").unwrap(),
            GroupSpec::Product(vec![GroupSpec::Cyclic(6), GroupSpec::Cyclic(3)])
        );
        assert_eq!(
            parse_group_spec("perm:(1 2 3),(1 2)").unwrap(),
            GroupSpec::Perm(vec![vec![vec![1, 2, 3]], vec![vec![1, 2]]])
        );
        assert_eq!(
            parse_group_spec("PERM:(1 2)(3 4), (1 3) x d5").unwrap(),
            GroupSpec::Product(vec![
                GroupSpec::Perm(vec![vec![vec![1, 2], vec![3, 4]], vec![vec![1, 3]]]),
                GroupSpec::Dihedral(5)
            ])
        );
        assert_eq!(
            parse_group_spec("Z2 x cayley: /tmp/some x file.json").unwrap(),
            GroupSpec::Product(vec![
                GroupSpec::Cyclic(2),
                GroupSpec::CayleyFile("/tmp/some x file.json".into())
            ])
        );
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_group_spec("Z4xQ8") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("{other:?}"),
        }
        match parse_group_spec("Z") {
            Err(Error::Parse { position, expected }) => {
                assert_eq!(position, 1);
                assert!(expected.contains("number"));
            }
            other => panic!("{other:?}"),
        }
        assert!(parse_group_spec("perm:(1 0)").is_err());
        assert!(parse_group_spec("perm:").is_err());
        assert!(parse_group_spec("Z4 Z2").is_err());
        assert!(parse_group_spec("").is_err());
    }

    #[test]
    fn display_round_trips() {
        for text in ["Z4", "D6", "S4", "A5", "Z2xZ2xZ3", "perm:(1 2 3),(1 2)(4 5)"] {
            let spec = parse_group_spec(text).unwrap();
            assert_eq!(spec.to_string(), text);
            assert_eq!(parse_group_spec(&spec.to_string()).unwrap(), spec);
        }
    }

    #[test]
    fn family_orders() {
        assert_eq!(element_orders(&build(&GroupSpec::Cyclic(4)).unwrap()), vec![1, 2, 4, 4]);
        for n in 2..=8 {
            assert_eq!(build(&GroupSpec::Dihedral(n)).unwrap().order(), 2 * n);
        }
        let expect = [1, 2, 6, 24, 120];
        for n in 1..=5 {
            assert_eq!(build(&GroupSpec::Symmetric(n)).unwrap().order(), expect[n - 1]);
        }
        for n in 3..=5 {
            assert_eq!(build(&GroupSpec::Alternating(n)).unwrap().order(), expect[n - 1] / 2);
        }
        let z6z3 = build(&parse_group_spec("Z6xZ3").unwrap()).unwrap();
        assert_eq!(z6z3.order(), 18);
    }

    #[test]
    fn dihedral_presentation_holds() {
        let n = 6;
        let g = build(&GroupSpec::Dihedral(n)).unwrap();
        let (r, f) = (1, n);
        assert_eq!(g.element_order(r), n);
        assert_eq!(g.element_order(f), 2);
        // rf = f r^{n-1}
        let r_pow = |k: usize| (0..k).fold(0, |acc, _| g.mul(acc, r));
        assert_eq!(g.mul(r, f), g.mul(f, r_pow(n - 1)));
        assert!(!g.is_abelian());
        assert_eq!(g.label(0), "e");
        assert_eq!(g.label(2), "r^2");
        assert_eq!(g.label(n + 1), "rf");
    }

    #[test]
    fn identity_is_index_zero() {
        for text in ["Z5", "D4", "S4", "A4", "Z2xD3", "perm:(1 2 3 4),(1 3)"] {
            let g = build(&parse_group_spec(text).unwrap()).unwrap();
            assert_eq!(g.identity(), 0, "{text}");
        }
    }

    #[test]
    fn labels_reparse_to_their_element() {
        // Z: residues
        let z = build(&GroupSpec::Cyclic(7)).unwrap();
        for a in 0..7 {
            assert_eq!(z.label(a).parse::<usize>().unwrap(), a);
        }
        // D: words r^i f^j evaluated in the group
        let n = 5;
        let d = build(&GroupSpec::Dihedral(n)).unwrap();
        for a in 0..2 * n {
            let word = d.label(a);
            let mut x = 0;
            let body = word.strip_suffix('f');
            let rot = body.unwrap_or(word);
            let i = match rot {
                "e" | "" => 0,
                "r" => 1,
                s => s.strip_prefix("r^").unwrap().parse().unwrap(),
            };
            for _ in 0..i {
                x = d.mul(x, 1);
            }
            if body.is_some() {
                x = d.mul(x, n);
            }
            assert_eq!(x, a, "{word}");
        }
        // S and A: cycle notation back through the perm parser
        for spec in [GroupSpec::Symmetric(4), GroupSpec::Alternating(4)] {
            let g = build(&spec).unwrap();
            for a in 0..g.order() {
                let label = g.label(a);
                if label == "()" {
                    assert_eq!(a, 0);
                    continue;
                }
                let p = parse_group_spec(&format!("perm:{label}(4)")).unwrap();
                let GroupSpec::Perm(gens) = p else { unreachable!() };
                let mut perm: Perm = (0..4).collect();
                for cycle in gens[0].iter().filter(|c| c.len() > 1) {
                    let mut c: Perm = (0..4).collect();
                    for (k, &x) in cycle.iter().enumerate() {
                        c[x - 1] = (cycle[(k + 1) % cycle.len()] - 1) as u8;
                    }
                    perm = compose(&perm, &c);
                }
                assert_eq!(cycle_notation(&perm), label);
            }
        }
    }

    #[test]
    fn alternating_is_index_two_in_symmetric() {
        for n in 3..=5 {
            let s = build(&GroupSpec::Symmetric(n)).unwrap();
            let a = build(&GroupSpec::Alternating(n)).unwrap();
            let even: std::collections::BTreeSet<&str> = a.labels().iter().map(|s| s.as_str()).collect();
            let members = crate::ElementSet::from_elements(
                s.order(),
                (0..s.order()).filter(|&i| even.contains(s.label(i))),
            );
            assert_eq!(members.len() * 2, s.order());
            assert!(s.subgroup(members).is_ok());
        }
    }

    #[test]
    fn small_products() {
        let z2 = build(&GroupSpec::Cyclic(2)).unwrap();
        let z3 = build(&GroupSpec::Cyclic(3)).unwrap();
        let klein = direct_product(&z2, &z2).unwrap();
        assert_eq!(element_orders(&klein), vec![1, 2, 2, 2]);
        let z6 = direct_product(&z2, &z3).unwrap();
        assert!(element_orders(&z6).contains(&6));
        assert_eq!(z6.label(4), "(1,1)");
        assert!(matches!(direct_product_capped(&z2, &z3, 5), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn perm_specs() {
        let s3 = build(&parse_group_spec("perm:(1 2 3),(1 2)").unwrap()).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        let q8 = build(&parse_group_spec("perm:(1 2 4 7)(3 6 8 5),(1 3 4 8)(2 5 7 6)").unwrap()).unwrap();
        assert_eq!(q8.order(), 8);
        assert_eq!(element_orders(&q8), vec![1, 2, 4, 4, 4, 4, 4, 4]);
        assert!(matches!(
            build(&parse_group_spec("perm:(1 17)").unwrap()),
            Err(Error::InvalidParams(_))
        ));
        assert!(build(&parse_group_spec("perm:(1 2 1)").unwrap()).is_err());
    }

    #[test]
    fn out_of_range_parameters() {
        for bad in ["Z0", "D1", "S0", "A2"] {
            assert!(build(&parse_group_spec(bad).unwrap()).is_err(), "{bad}");
        }
        assert!(matches!(build(&GroupSpec::Symmetric(8)), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn cayley_relabels_identity() {
        // Z3 with the identity stored at index 2
        let json = r#"{"order": 3, "table": [[1,2,0],[2,0,1],[0,1,2]], "labels": ["a","b","e"]}"#;
        let g = parse_cayley_json(json).unwrap();
        assert_eq!(g.identity(), 0);
        assert_eq!(g.label(0), "e");
        assert_eq!(g.element_order(1), 3);

        assert!(parse_cayley_json(r#"{"order": 2, "table": [[0,1],[1,1]]}"#).is_err());
        assert!(parse_cayley_json(r#"{"order": 3, "table": [[0,1],[1,0]]}"#).is_err());
        assert!(parse_cayley_json("not json").is_err());
    }

    #[test]
    fn cayley_file_from_disk() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("z2.json");
        std::fs::write(&path, r#"{"order": 2, "table": [[0,1],[1,0]]}"#).unwrap();
        let spec = parse_group_spec(&format!("cayley:{}", path.display())).unwrap();
        assert_eq!(build(&spec).unwrap().order(), 2);
        assert!(matches!(
            load_cayley(&dir.path().join("missing.json")),
            Err(Error::CayleyIo { .. })
        ));
    }
}
