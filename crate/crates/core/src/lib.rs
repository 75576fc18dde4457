//! Exact-arithmetic statistics, bijections, and continued-fraction machinery
//! for partial permutations (Laguerre words, digraphs, and 0-1 matrices).
//!
//! Everything is computed in the polynomial ring of [`polyring::Poly`]:
//! identity checks are exact polynomial equalities established by brute-force
//! enumeration at desk scale. The `mahonian` binary exposes enumeration,
//! per-object statistics, distribution polynomials, and the verification
//! harness (`mahonian verify --all`).

pub mod carlitz;
pub mod cli;
pub mod digraphs;
pub mod error;
pub mod jacobi_rogers;
pub mod permstats;
pub mod polyring;
pub mod report;
pub mod verify;

pub use error::{Error, Result};

/// Hard ceiling on the ground-set size accepted by enumeration sweeps,
/// configurable through the `MAHONIAN_MAX_N` environment variable.
pub fn max_n() -> usize {
    use std::sync::OnceLock;
    static MAX_N: OnceLock<usize> = OnceLock::new();
    *MAX_N.get_or_init(|| {
        std::env::var("MAHONIAN_MAX_N")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(9)
    })
}

pub(crate) fn check_ground_set(n: usize) -> Result<()> {
    if n > max_n() {
        return Err(Error::BoundExceeded(format!(
            "n = {n} exceeds the ceiling {} (set MAHONIAN_MAX_N to raise it)",
            max_n()
        )));
    }
    Ok(())
}
