//! Fixtures shared by the criterion benchmarks.

use std::sync::Arc;

use nimgen_core::{build, parse_group_spec, FiniteGroup};

pub fn group(spec: &str) -> Arc<FiniteGroup> {
    Arc::new(build(&parse_group_spec(spec).expect("bench spec parses")).expect("bench group builds"))
}
