//! Catalog, golden fixtures, verification reports and size guards.

pub mod catalog;
pub mod fixtures;
pub mod report;
pub mod verify;

pub use catalog::{all_classes, basis_table, centro_table, sum_closed_examples, union_table, x_class, Generator};
pub use fixtures::{golden, Fixture, Fixtures, Provenance};
pub use report::{Check, CheckKind, Report, Status};
pub use verify::{
    class_counts, conjecture_scan, verify_section5, verify_table1, verify_table2, verify_table3,
    DECIMAL_TOLERANCE, RESIDUAL_TOLERANCE,
};

use crate::error::{Error, Result};

/// Default limits, chosen so that every command finishes in minutes.
pub const MAX_CLASS_N: usize = 10;
pub const MAX_CENTRO_SIZE: usize = 14;
pub const MAX_GRID_N: usize = 8;

/// Refuses `n > limit` unless `force` is set.
pub fn guard(what: &str, n: usize, limit: usize, force: bool) -> Result<()> {
    if n > limit && !force {
        return Err(Error::Capability(format!(
            "{what} size {n} exceeds the default limit {limit}; pass --force to run anyway"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guards() {
        assert!(guard("class", 10, MAX_CLASS_N, false).is_ok());
        assert!(guard("class", 11, MAX_CLASS_N, false).is_err());
        assert!(guard("class", 11, MAX_CLASS_N, true).is_ok());
    }
}
