//! Nim values, the minimum excludant and nim addition.

use std::fmt;

/// A Sprague-Grundy value, displayed in nimber notation `*n`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NimValue(pub u32);

impl NimValue {
    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for NimValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "*{}", self.0)
    }
}

impl From<u32> for NimValue {
    fn from(v: u32) -> Self {
        NimValue(v)
    }
}

/// Carry-free binary addition.
pub fn nim_sum(a: NimValue, b: NimValue) -> NimValue {
    NimValue(a.0 ^ b.0)
}

/// Least non-negative integer not produced by `values`.
pub fn mex<I: IntoIterator<Item = u32>>(values: I) -> u32 {
    let mut present: Vec<bool> = Vec::new();
    for v in values {
        let v = v as usize;
        // only values below the count seen so far can affect the answer, but the
        // sets here are tiny so a dense table is fine
        if v >= present.len() {
            present.resize(v + 1, false);
        }
        present[v] = true;
    }
    present.iter().position(|&p| !p).unwrap_or(present.len()) as u32
}
