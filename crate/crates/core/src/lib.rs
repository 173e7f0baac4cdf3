//! Exact computation of edge-induced and vertex-induced subhypergraph
//! polynomials, the Stanley-Reisner invariants of the independence complex,
//! multigraded Betti numbers via Hochster's formula, and deck reconstruction.
//!
//! Everything here is pure and allocation-only; file formats, the CLI and the
//! parallel drivers live in the `hgpoly` crate.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod betti;
pub mod enumerate;
pub mod error;
pub mod homology;
pub mod hypergraph;
pub mod poly;
pub mod reconstruct;
pub mod stanley_reisner;

pub use error::{Error, Result};
pub use hypergraph::{Deck, Hypergraph, VertexSet};
pub use poly::{BiPoly, UniPoly};

/// Size limits for the exponential-time computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum vertex count (for vertex sweeps) and edge count (for edge sweeps).
    pub enumerate_max: usize,
    /// Maximum vertex count for Hochster/homology computations.
    pub homology_max: usize,
}

impl Limits {
    pub const DEFAULT_ENUMERATE_MAX: usize = 24;
    pub const DEFAULT_HOMOLOGY_MAX: usize = 14;

    pub fn check_enumerate(&self, what: &'static str, actual: usize) -> Result<()> {
        // bitmask sweeps index subsets with u64
        let limit = self.enumerate_max.min(63);
        if actual > limit {
            return Err(Error::LimitExceeded { what, limit, actual });
        }
        Ok(())
    }

    pub fn check_homology(&self, actual: usize) -> Result<()> {
        let limit = self.homology_max.min(63);
        if actual > limit {
            return Err(Error::LimitExceeded { what: "vertices (homology)", limit, actual });
        }
        Ok(())
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits { enumerate_max: Self::DEFAULT_ENUMERATE_MAX, homology_max: Self::DEFAULT_HOMOLOGY_MAX }
    }
}
