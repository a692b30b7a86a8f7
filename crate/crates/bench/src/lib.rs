//! Shared fixtures for the criterion benches.

use eqschub::{restriction_table, RestrictionTable, RootSystem};

pub fn system(name: &str) -> RootSystem {
    RootSystem::builtin(name).expect("built-in type")
}

/// Full restriction table of a finite type, or a truncation of a general one.
pub fn table(name: &str, bound: usize) -> RestrictionTable {
    restriction_table(&system(name), bound).expect("table builds")
}
