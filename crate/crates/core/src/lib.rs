//! Exact degree-assortativity toolkit for neutral graphs.
//!
//! A graph is *neutral* when its degree assortativity coefficient is zero
//! while the coefficient is defined, i.e. the graph is not regular. Everything
//! here works on exact integers: [`assort::stats`] returns the scaled
//! numerator and denominator of the coefficient, the [`constructions`]
//! module provides the graph operations that preserve or scale them,
//! [`generators`] produces certified neutral graphs of a requested order, and
//! [`claims`] checks a registry of statements about these operations on
//! finite instance families.

pub mod assort;
pub mod claims;
pub mod constructions;
pub mod corpus;
pub mod enumeration;
pub mod formats;
pub mod generators;
pub mod graph;

use std::num::NonZeroU64;

pub use assort::{classify, stats, AssortStats, Classification, Tag};
pub use claims::{verify, verify_all, ClaimId, ClaimResult, Report, Verdict, VerifyConfig};
pub use constructions::{
    leaf_connect, ominus, oplus, single_edge_division, subdivide, triangle_op, OplusSpec,
};
pub use formats::{graph6_decode, graph6_encode};
pub use generators::{coverage_table, neutral_nontree, neutral_tree, Family, RecipePlan};
pub use graph::{EdgeRef, Graph, GraphError};

/// Work allowance for searches and sweeps, counted in candidates examined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Budget(NonZeroU64);

impl Budget {
    pub const DEFAULT: Budget = Budget(match NonZeroU64::new(5_000_000) {
        Some(b) => b,
        None => unreachable!(),
    });

    pub fn new(n: u64) -> Option<Self> {
        NonZeroU64::new(n).map(Budget)
    }

    pub fn get(self) -> u64 {
        self.0.get()
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}
