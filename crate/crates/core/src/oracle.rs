//! Brute-force Sprague-Grundy evaluation over actual game positions.
//!
//! Independent of the structure digraph: positions are raw element bit-masks
//! and options are single-element extensions. Used to cross-check the engine.

use std::fmt;
use std::sync::Arc;

use crate::bitset::ElementSet;
use crate::engine::{analyze, GameKind};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::nimber::mex;

/// Default largest group order the oracle accepts.
pub const DEFAULT_ORACLE_CAP: usize = 16;

/// The oracle refuses groups above this order regardless of configuration.
pub const HARD_ORACLE_CAP: usize = 24;

pub const ORACLE_CAP_ENV: &str = "NIMGEN_ORACLE_CAP";

const UNKNOWN: u8 = u8::MAX;

/// Oracle cap from `NIMGEN_ORACLE_CAP`, or the default when unset.
pub fn oracle_cap_from_env() -> Result<usize> {
    match std::env::var(ORACLE_CAP_ENV) {
        Ok(v) => {
            let cap: usize = v.trim().parse().map_err(|_| {
                Error::InvalidParams(format!("{ORACLE_CAP_ENV}={v} is not a number"))
            })?;
            if cap > HARD_ORACLE_CAP {
                return Err(Error::InvalidParams(format!(
                    "{ORACLE_CAP_ENV}={cap} exceeds the hard limit {HARD_ORACLE_CAP}"
                )));
            }
            Ok(cap)
        }
        Err(_) => Ok(DEFAULT_ORACLE_CAP),
    }
}

/// Memoized nim values of positions of one game on one group.
pub struct PositionTable {
    game: GameKind,
    order: usize,
    maximal: Vec<u32>,
    memo: Vec<u8>,
}

impl PositionTable {
    pub fn new(group: &FiniteGroup, game: GameKind, cap: usize) -> Result<Self> {
        let n = group.order();
        let cap = cap.min(HARD_ORACLE_CAP);
        if n > cap {
            return Err(Error::ResourceLimit(format!(
                "oracle limited to groups of order {cap}, got {n}"
            )));
        }
        if n == 1 && game == GameKind::Avoid {
            return Err(Error::UnplayableGame);
        }
        let maximal = if n == 1 {
            Vec::new()
        } else {
            group.maximal_subgroups()?.iter().map(|m| m.to_mask() as u32).collect()
        };
        Ok(Self { game, order: n, maximal, memo: vec![UNKNOWN; 1 << n] })
    }

    pub fn game(&self) -> GameKind {
        self.game
    }

    fn non_generating(&self, mask: u32) -> bool {
        self.maximal.iter().any(|&m| mask & !m == 0)
    }

    /// Whether `mask` is a position of the game at all.
    pub fn is_position(&self, mask: u32) -> bool {
        match self.game {
            GameKind::Avoid => self.non_generating(mask),
            GameKind::Achieve => true,
        }
    }

    pub fn nim(&mut self, mask: u32) -> Result<u32> {
        if mask >> self.order != 0 {
            return Err(Error::InvalidParams("position has elements outside the group".into()));
        }
        if !self.is_position(mask) {
            return Err(Error::InvalidParams(
                "generating sets are not positions of the avoidance game".into(),
            ));
        }
        Ok(self.eval(mask))
    }

    fn eval(&mut self, mask: u32) -> u32 {
        let cached = self.memo[mask as usize];
        if cached != UNKNOWN {
            return cached as u32;
        }
        let terminal_gen = self.game == GameKind::Achieve && !self.non_generating(mask);
        let value = if terminal_gen {
            0
        } else {
            let mut opts = Vec::new();
            for g in 0..self.order {
                let bit = 1u32 << g;
                if mask & bit != 0 {
                    continue;
                }
                let next = mask | bit;
                debug_assert_eq!(next.count_ones(), mask.count_ones() + 1);
                if self.is_position(next) {
                    opts.push(self.eval(next));
                }
            }
            mex(opts)
        };
        self.memo[mask as usize] = value as u8;
        value
    }

    /// All evaluated positions with their values, ascending by mask.
    pub fn memoized(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.memo
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != UNKNOWN)
            .map(|(m, &v)| (m as u32, v as u32))
    }

    pub fn memoized_count(&self) -> usize {
        self.memo.iter().filter(|&&v| v != UNKNOWN).count()
    }
}

/// Nim value of position `set` by exhaustive recursion.
pub fn oracle_nim(group: &FiniteGroup, game: GameKind, set: &ElementSet, cap: usize) -> Result<u32> {
    let mut table = PositionTable::new(group, game, cap)?;
    table.nim(set.to_mask() as u32)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub position: Vec<usize>,
    pub oracle: u32,
    pub engine: u32,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub order: usize,
    pub game: GameKind,
    pub oracle_start: u32,
    pub engine_start: u32,
    pub positions_checked: usize,
    pub mismatches: usize,
    pub first_counterexample: Option<Counterexample>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.oracle_start == self.engine_start && self.mismatches == 0
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} order={} oracle=*{} engine=*{} positions={} mismatches={}",
            self.game, self.order, self.oracle_start, self.engine_start, self.positions_checked,
            self.mismatches
        )?;
        if let Some(c) = &self.first_counterexample {
            write!(f, " first={:?} oracle=*{} engine=*{}", c.position, c.oracle, c.engine)?;
        }
        Ok(())
    }
}

/// Compares the oracle with the structure engine at the start position and at
/// every position the oracle evaluated.
pub fn verify_group(group: Arc<FiniteGroup>, game: GameKind, cap: usize) -> Result<VerifyReport> {
    let n = group.order();
    let mut table = PositionTable::new(&group, game, cap)?;
    let oracle_start = table.nim(0)?;

    if n == 1 {
        // only the achievement game reaches here; its start is terminal
        return Ok(VerifyReport {
            order: n,
            game,
            oracle_start,
            engine_start: 0,
            positions_checked: 1,
            mismatches: usize::from(oracle_start != 0),
            first_counterexample: None,
        });
    }

    let digraph = analyze(group, game)?;
    let engine_start = digraph.game_nim().0;
    let mut mismatches = 0;
    let mut first = None;
    let mut checked = 0;
    for (mask, value) in table.memoized() {
        let set = ElementSet::from_mask(n, mask as u64);
        let engine = digraph
            .type_of_position(&set)
            .map(|t| t.nim_for_size(set.len()))
            .ok_or_else(|| Error::InvariantViolation(format!("position {set:?} has no class")))?;
        checked += 1;
        if engine != value {
            mismatches += 1;
            first.get_or_insert(Counterexample { position: set.iter().collect(), oracle: value, engine });
        }
    }
    Ok(VerifyReport {
        order: n,
        game,
        oracle_start,
        engine_start,
        positions_checked: checked,
        mismatches,
        first_counterexample: first,
    })
}
