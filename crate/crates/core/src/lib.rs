//! Exact combinatorics of m-th roots of permutations.
//!
//! The crate decides whether a permutation has an m-th root, counts the
//! roots exactly, constructs them one by one, and expands the associated
//! exponential generating functions over exact rationals. A brute-force
//! scan of small symmetric groups serves as an independent oracle.

pub mod counting;
pub mod egf;
pub mod error;
pub mod gsets;
pub mod numtheory;
pub mod perm;
pub mod series;

pub use counting::{homogeneous_count, root_count, RootCount};
pub use error::{Error, Result};
pub use gsets::{epsilon_set, g_set, g_set_bounded, is_solvable, GSet, SolutionVector};
pub use perm::{
    brute_force_roots, enumerate_roots, has_mth_root, CycleType, OracleConfig, Permutation,
};
