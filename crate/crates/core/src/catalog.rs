//! Family sweeps: enumerate groups, compute both game values, compare with
//! the closed forms and write a CSV table.

use std::fmt;
use std::io::Write;
use std::path::Path;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

use crate::builders::{build, parse_group_spec, GroupSpec};
use crate::engine::{game_nim, GameKind};
use crate::error::{Error, Result};
use crate::predict::{factorize, predict_nim, Family, FamilyParams, Prediction};

pub const CSV_HEADER: [&str; 7] =
    ["group_spec", "order", "game", "nim", "predicted", "match_flag", "wall_ms"];

/// Quaternion group of order 8 as a regular permutation representation.
pub const Q8_SPEC: &str = "perm:(1 2 4 7)(3 6 8 5),(1 3 4 8)(2 5 7 6)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    Cyclic,
    Dihedral,
    Abelian,
    Symmetric,
    Alternating,
    /// Direct products of a cyclic group with a non-abelian family member,
    /// plus the quaternion group. No closed form.
    Mixed,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 6] = [
        FamilyKind::Cyclic,
        FamilyKind::Dihedral,
        FamilyKind::Abelian,
        FamilyKind::Symmetric,
        FamilyKind::Alternating,
        FamilyKind::Mixed,
    ];
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::Cyclic => "cyclic",
            FamilyKind::Dihedral => "dihedral",
            FamilyKind::Abelian => "abelian",
            FamilyKind::Symmetric => "symmetric",
            FamilyKind::Alternating => "alternating",
            FamilyKind::Mixed => "mixed",
        })
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.to_string() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::InvalidParams(format!("unknown family '{s}'")))
    }
}

/// One group of a sweep: its spec and, when it has a closed form, its family.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub spec: GroupSpec,
    pub order: usize,
    pub family: Option<Family>,
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Partitions of `n` as non-increasing exponent lists.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            go(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Elementary-divisor lists of every abelian group of order `n`, in a fixed order.
pub fn abelian_groups_of_order(n: usize) -> Vec<Vec<usize>> {
    let mut lists: Vec<Vec<usize>> = vec![Vec::new()];
    for (p, e) in factorize(n) {
        let mut next = Vec::new();
        for prefix in &lists {
            // ascending prime powers within each prime
            for part in partitions(e).iter().rev() {
                let mut l = prefix.clone();
                let mut qs: Vec<usize> = part.iter().map(|&k| p.pow(k)).collect();
                qs.sort();
                l.extend(qs);
                next.push(l);
            }
        }
        lists = next;
    }
    lists
}

/// Groups of `kind` with `2 <= order <= max_order`, in deterministic order.
pub fn family_members(kind: FamilyKind, max_order: usize) -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    match kind {
        FamilyKind::Cyclic => {
            for n in 2..=max_order {
                out.push(entry(Family::Cyclic(n)));
            }
        }
        FamilyKind::Dihedral => {
            for n in 2..=max_order / 2 {
                out.push(entry(Family::Dihedral(n)));
            }
        }
        FamilyKind::Abelian => {
            for n in 2..=max_order {
                for d in abelian_groups_of_order(n) {
                    out.push(entry(Family::Abelian(d)));
                }
            }
        }
        FamilyKind::Symmetric => {
            for n in (2..).take_while(|&n| factorial(n) <= max_order) {
                out.push(entry(Family::Symmetric(n)));
            }
        }
        FamilyKind::Alternating => {
            for n in (3..).take_while(|&n| factorial(n) / 2 <= max_order) {
                out.push(entry(Family::Alternating(n)));
            }
        }
        FamilyKind::Mixed => {
            let mut bases: Vec<(GroupSpec, usize)> = Vec::new();
            for n in 3..=max_order / 2 {
                bases.push((GroupSpec::Dihedral(n), 2 * n));
            }
            for n in (4..).take_while(|&n| factorial(n) / 2 <= max_order) {
                bases.push((GroupSpec::Alternating(n), factorial(n) / 2));
            }
            for n in (4..).take_while(|&n| factorial(n) <= max_order) {
                bases.push((GroupSpec::Symmetric(n), factorial(n)));
            }
            let q8 = parse_group_spec(Q8_SPEC).expect("valid quaternion spec");
            if max_order >= 8 {
                out.push(CatalogEntry { spec: q8.clone(), order: 8, family: None });
            }
            bases.push((q8, 8));
            for (base, order) in bases {
                for m in 2..=max_order / order {
                    out.push(CatalogEntry {
                        spec: GroupSpec::Product(vec![GroupSpec::Cyclic(m), base.clone()]),
                        order: order * m,
                        family: None,
                    });
                }
            }
            out.sort_by_key(|e| e.order);
        }
    }
    out
}

fn entry(family: Family) -> CatalogEntry {
    let spec = family.group_spec().expect("enumerated families are valid");
    let order = match &family {
        Family::Cyclic(n) => *n,
        Family::Dihedral(n) => 2 * n,
        Family::Symmetric(n) => factorial(*n),
        Family::Alternating(n) => factorial(*n) / 2,
        Family::Abelian(d) => d.iter().product(),
    };
    CatalogEntry { spec, order, family: Some(family) }
}

/// Every enumerated group of order at most `max_order`, deduplicated by spec text.
pub fn verification_set(max_order: usize) -> Vec<CatalogEntry> {
    let mut seen = std::collections::HashSet::new();
    let mut out: Vec<CatalogEntry> = FamilyKind::ALL
        .into_iter()
        .flat_map(|k| family_members(k, max_order))
        .filter(|e| seen.insert(e.spec.to_string()))
        .collect();
    out.sort_by_key(|e| e.order);
    out
}

#[derive(Clone, Debug)]
pub struct CatalogRow {
    pub group_spec: String,
    pub order: usize,
    pub game: GameKind,
    pub nim: std::result::Result<u32, String>,
    pub predicted: Option<Prediction>,
    pub wall_ms: u128,
}

impl CatalogRow {
    /// `Some(true/false)` when a prediction exists and the value was computed.
    pub fn matches(&self) -> Option<bool> {
        match (&self.nim, self.predicted) {
            (Ok(v), Some(Prediction::Known(p))) => Some(*v == p.0),
            (Err(_), _) => Some(false),
            _ => None,
        }
    }

    fn csv_record(&self) -> [String; 7] {
        let nim = match &self.nim {
            Ok(v) => v.to_string(),
            Err(e) => format!("error: {e}"),
        };
        let predicted = match self.predicted {
            Some(Prediction::Known(v)) => v.0.to_string(),
            _ => "unknown".to_string(),
        };
        let flag = match self.matches() {
            Some(true) => "true",
            Some(false) => "false",
            None => "na",
        };
        [
            self.group_spec.clone(),
            self.order.to_string(),
            self.game.tag().to_string(),
            nim,
            predicted,
            flag.to_string(),
            self.wall_ms.to_string(),
        ]
    }
}

/// Computes both games for every entry, in parallel, keeping input order.
pub fn evaluate(entries: &[CatalogEntry], games: &[GameKind]) -> Vec<CatalogRow> {
    let jobs: Vec<(&CatalogEntry, GameKind)> =
        entries.iter().flat_map(|e| games.iter().map(move |&g| (e, g))).collect();
    jobs.into_par_iter()
        .map(|(e, game)| {
            let start = Instant::now();
            let nim = build(&e.spec)
                .and_then(|g| game_nim(Arc::new(g), game))
                .map(|v| v.0)
                .map_err(|err| err.to_string());
            let wall_ms = start.elapsed().as_millis();
            let predicted = e
                .family
                .as_ref()
                .map(|f| predict_nim(&FamilyParams::new(f.clone(), game)).unwrap_or(Prediction::Unknown));
            CatalogRow {
                group_spec: e.spec.to_string(),
                order: e.order,
                game,
                nim,
                predicted,
                wall_ms,
            }
        })
        .collect()
}

pub fn write_csv<W: Write>(rows: &[CatalogRow], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        w.write_record(row.csv_record())?;
    }
    w.flush()?;
    Ok(())
}

/// Values outside the known or conjectured spectrum of each game.
#[derive(Clone, Debug, Default)]
pub struct SpectrumFindings {
    /// Avoidance values outside `{0, 1, 3}`.
    pub dng_outside: Vec<(String, u32)>,
    /// Achievement values outside `{0, 1, 2, 3, 4}`.
    pub gen_outside: Vec<(String, u32)>,
}

#[derive(Clone, Debug)]
pub struct CatalogSummary {
    pub rows: Vec<CatalogRow>,
    pub mismatches: Vec<CatalogRow>,
    pub errors: usize,
    pub spectrum: SpectrumFindings,
}

impl CatalogSummary {
    pub fn from_rows(rows: Vec<CatalogRow>) -> Self {
        let mismatches = rows.iter().filter(|r| r.matches() == Some(false)).cloned().collect();
        let errors = rows.iter().filter(|r| r.nim.is_err()).count();
        let mut spectrum = SpectrumFindings::default();
        for r in &rows {
            if let Ok(v) = r.nim {
                match r.game {
                    GameKind::Avoid if ![0, 1, 3].contains(&v) => {
                        spectrum.dng_outside.push((r.group_spec.clone(), v))
                    }
                    GameKind::Achieve if v > 4 => spectrum.gen_outside.push((r.group_spec.clone(), v)),
                    _ => {}
                }
            }
        }
        Self { rows, mismatches, errors, spectrum }
    }
}

/// Sweeps `families` up to `max_order` and writes the CSV to `out_path`.
///
/// Per-group failures become rows; only I/O problems abort.
pub fn run_catalog(
    max_order: usize,
    families: &[FamilyKind],
    out_path: &Path,
) -> Result<CatalogSummary> {
    if max_order > crate::builders::DEFAULT_ORDER_CAP {
        return Err(Error::InvalidParams(format!(
            "max order {max_order} exceeds {}",
            crate::builders::DEFAULT_ORDER_CAP
        )));
    }
    let entries: Vec<CatalogEntry> =
        families.iter().flat_map(|&k| family_members(k, max_order)).collect();
    let rows = evaluate(&entries, &[GameKind::Avoid, GameKind::Achieve]);
    let file = std::fs::File::create(out_path)?;
    write_csv(&rows, std::io::BufWriter::new(file))?;
    Ok(CatalogSummary::from_rows(rows))
}
