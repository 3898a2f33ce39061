//! Closed-form nim values for the group families that have them.

use std::collections::BTreeMap;
use std::fmt;

use crate::builders::GroupSpec;
use crate::engine::GameKind;
use crate::error::{Error, Result};
use crate::nimber::NimValue;

/// Prime factorization as `(prime, exponent)` pairs, ascending.
pub fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Product of the distinct prime divisors of `n`.
pub fn radical(n: usize) -> usize {
    factorize(n).iter().map(|&(p, _)| p).product()
}

/// `Some(p)` if `q = p^k` for a prime `p` and `k >= 1`.
pub fn prime_power_base(q: usize) -> Option<usize> {
    match factorize(q).as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

/// Maximum, over primes `p`, of the number of entries that are powers of `p`.
///
/// `divisors` must be elementary divisors (prime powers); this equals the
/// number of invariant factors of the group.
pub fn spread(divisors: &[usize]) -> Result<usize> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &d in divisors {
        let p = prime_power_base(d)
            .ok_or_else(|| Error::InvalidParams(format!("{d} is not a prime power")))?;
        *counts.entry(p).or_default() += 1;
    }
    Ok(counts.values().copied().max().unwrap_or(0))
}

/// Elementary divisors of `Z_{d1} x ... x Z_{dk}`, sorted by prime then size.
///
/// Accepts invariant-factor lists (each entry divides the next) and
/// prime-power lists; anything else is rejected.
pub fn elementary_divisors(divisors: &[usize]) -> Result<Vec<usize>> {
    if divisors.iter().any(|&d| d < 2) {
        return Err(Error::InvalidParams("cyclic factors must have order at least 2".into()));
    }
    let invariant_form = divisors.windows(2).all(|w| w[1] % w[0] == 0);
    let prime_power_form = divisors.iter().all(|&d| prime_power_base(d).is_some());
    if !invariant_form && !prime_power_form {
        return Err(Error::InvalidParams(format!(
            "{divisors:?} is neither an invariant-factor list nor a list of prime powers"
        )));
    }
    let mut out: Vec<(usize, usize)> = divisors
        .iter()
        .flat_map(|&d| factorize(d).into_iter().map(|(p, e)| (p, p.pow(e))))
        .collect();
    out.sort();
    Ok(out.into_iter().map(|(_, q)| q).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Cyclic(usize),
    Dihedral(usize),
    /// Orders of the cyclic factors, in either invariant-factor or prime-power form.
    Abelian(Vec<usize>),
    Symmetric(usize),
    Alternating(usize),
}

impl Family {
    pub fn group_spec(&self) -> Result<GroupSpec> {
        Ok(match self {
            Family::Cyclic(n) => GroupSpec::Cyclic(*n),
            Family::Dihedral(n) => GroupSpec::Dihedral(*n),
            Family::Symmetric(n) => GroupSpec::Symmetric(*n),
            Family::Alternating(n) => GroupSpec::Alternating(*n),
            Family::Abelian(d) => {
                let el = elementary_divisors(d)?;
                match el.len() {
                    0 => GroupSpec::Cyclic(1),
                    1 => GroupSpec::Cyclic(el[0]),
                    _ => GroupSpec::Product(el.into_iter().map(GroupSpec::Cyclic).collect()),
                }
            }
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cyclic(n) => write!(f, "cyclic:{n}"),
            Family::Dihedral(n) => write!(f, "dihedral:{n}"),
            Family::Symmetric(n) => write!(f, "symmetric:{n}"),
            Family::Alternating(n) => write!(f, "alternating:{n}"),
            Family::Abelian(d) => {
                let parts: Vec<String> = d.iter().map(|x| x.to_string()).collect();
                write!(f, "abelian:{}", parts.join(","))
            }
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    /// `cyclic:10`, `dihedral:12`, `abelian:3,9`, `symmetric:5`, `alternating:5`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParams(format!("cannot parse family '{s}'"));
        let (tag, rest) = s.split_once(':').ok_or_else(bad)?;
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        Ok(match tag.trim().to_ascii_lowercase().as_str() {
            "cyclic" | "z" => Family::Cyclic(num(rest)?),
            "dihedral" | "d" => Family::Dihedral(num(rest)?),
            "symmetric" | "s" => Family::Symmetric(num(rest)?),
            "alternating" | "a" => Family::Alternating(num(rest)?),
            "abelian" => {
                let rest = rest.trim();
                if rest.is_empty() {
                    Family::Abelian(Vec::new())
                } else {
                    Family::Abelian(rest.split(',').map(num).collect::<Result<_>>()?)
                }
            }
            _ => return Err(bad()),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub family: Family,
    pub game: GameKind,
}

impl FamilyParams {
    pub fn new(family: Family, game: GameKind) -> Self {
        Self { family, game }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Prediction {
    Known(NimValue),
    /// Only conjectured, or not covered by any closed form.
    Unknown,
}

impl Prediction {
    pub fn value(self) -> Option<NimValue> {
        match self {
            Prediction::Known(v) => Some(v),
            Prediction::Unknown => None,
        }
    }
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prediction::Known(v) => write!(f, "{v}"),
            Prediction::Unknown => f.write_str("unknown"),
        }
    }
}

fn known(v: u32) -> Result<Prediction> {
    Ok(Prediction::Known(NimValue(v)))
}

/// The closed-form value for a family, `Unknown` where only a conjecture exists.
pub fn predict_nim(params: &FamilyParams) -> Result<Prediction> {
    use GameKind::*;
    let invalid = |msg: &str| Err(Error::InvalidParams(msg.to_string()));
    match (&params.family, params.game) {
        (Family::Cyclic(0), _) => invalid("Z<n> needs n >= 1"),
        (Family::Cyclic(n), game) => {
            let n = *n;
            match (game, n) {
                (Avoid, 1) => Err(Error::UnplayableGame),
                (Achieve, 1) => known(0),
                (Avoid, 2) => known(1),
                (Achieve, 2) => known(2),
                (Avoid, _) if n % 2 == 1 => known(1),
                (Avoid, _) if n % 4 == 0 => known(0),
                (Avoid, _) => known(3),
                (Achieve, _) if n % 2 == 1 => known(2),
                (Achieve, _) if n % 4 == 0 => known(1),
                (Achieve, _) => known(4),
            }
        }
        (Family::Dihedral(n), _) if *n < 2 => invalid("D<n> needs n >= 2"),
        (Family::Dihedral(n), Avoid) => known(if n % 2 == 1 { 3 } else { 0 }),
        // D2 is the Klein group Z2 x Z2
        (Family::Dihedral(2), Achieve) => {
            predict_nim(&FamilyParams::new(Family::Abelian(vec![2, 2]), Achieve))
        }
        (Family::Dihedral(n), Achieve) => known(match n % 4 {
            0 => 0,
            2 => 1,
            _ => 3,
        }),
        (Family::Abelian(d), game) => predict_abelian(d, game),
        (Family::Symmetric(0), _) => invalid("S<n> needs n >= 1"),
        (Family::Symmetric(n), Avoid) => match n {
            1 => Err(Error::UnplayableGame),
            2 => known(1),
            3 => known(3),
            _ => known(0),
        },
        (Family::Symmetric(n), Achieve) => match n {
            1 => known(0),
            2 => known(2),
            3 => known(3),
            4 => known(0),
            5..=8 => known(1),
            _ => Ok(Prediction::Unknown),
        },
        (Family::Alternating(n), _) if *n < 3 => invalid("A<n> needs n >= 3"),
        (Family::Alternating(n), Avoid) => match n {
            // A3 is cyclic of odd order
            3 => known(1),
            4 => known(3),
            5..=8 => known(0),
            _ => Ok(Prediction::Unknown),
        },
        (Family::Alternating(n), Achieve) => match n {
            3 => known(2),
            4 => known(3),
            5..=8 => known(1),
            _ => Ok(Prediction::Unknown),
        },
    }
}

fn predict_abelian(divisors: &[usize], game: GameKind) -> Result<Prediction> {
    let el = elementary_divisors(divisors)?;
    let order: usize = el.iter().product();
    let twos: Vec<usize> = el.iter().copied().filter(|d| d % 2 == 0).collect();
    let odd: Vec<usize> = el.iter().copied().filter(|d| d % 2 == 1).collect();
    let odd_spread = spread(&odd)?;
    let is_z2 = el == [2];

    match game {
        GameKind::Avoid => {
            if order == 1 {
                return Err(Error::UnplayableGame);
            }
            if order % 2 == 1 || is_z2 {
                return known(1);
            }
            // Z2 x Z_{2k+1}, k >= 1
            if twos == [2] && odd_spread == 1 {
                return known(3);
            }
            known(0)
        }
        GameKind::Achieve => {
            if order == 1 {
                return known(0);
            }
            if order % 2 == 1 {
                return known(if odd_spread <= 2 { 2 } else { 1 });
            }
            if is_z2 {
                return known(2);
            }
            let cyclic = spread(&el)? == 1;
            if cyclic {
                return known(if order % 4 == 0 { 1 } else { 4 });
            }
            // Z2 x Z2 x Z_m x Z_k with m, k odd
            if twos == [2, 2] && odd_spread <= 2 {
                return known(1);
            }
            known(0)
        }
    }
}
