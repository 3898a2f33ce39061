//! Nim-numbers of the impartial games `DNG(G)` (avoid generating the group)
//! and `GEN(G)` (generate the group) on finite groups.
//!
//! The engine groups game positions into structure classes indexed by
//! intersections of maximal subgroups and evaluates the game on that small
//! digraph instead of on the exponential game tree. A brute-force oracle over
//! real positions is included to cross-check it on small groups.
//!
//! ```
//! use std::sync::Arc;
//! use nimgen_core::{build, game_nim, parse_group_spec, GameKind};
//!
//! let g = Arc::new(build(&parse_group_spec("Z6xZ3").unwrap()).unwrap());
//! assert_eq!(game_nim(g.clone(), GameKind::Avoid).unwrap().to_string(), "*0");
//! assert_eq!(game_nim(g, GameKind::Achieve).unwrap().0, 0);
//! ```

pub mod bitset;
pub mod builders;
pub mod catalog;
pub mod engine;
pub mod error;
pub mod group;
pub mod lattice;
pub mod nimber;
pub mod oracle;
pub mod predict;

pub use bitset::ElementSet;
pub use builders::{build, direct_product, parse_group_spec, GroupSpec};
pub use engine::{
    analyze, game_nim, has_arrow, semi_terminal, DotExport, GameKind, SimplifiedDiagram,
    StructureDigraph, TypeTriple,
};
pub use error::{Error, Result};
pub use group::{FiniteGroup, Subgroup};
pub use lattice::{ClassRef, IntersectionLattice};
pub use nimber::{mex, nim_sum, NimValue};
pub use oracle::{oracle_nim, verify_group, PositionTable, VerifyReport};
pub use predict::{predict_nim, spread, Family, FamilyParams, Prediction};
