//! Exact combinatorics of the nilpotent cone for the split symmetric pair
//! (SL(N), SO(N)).
//!
//! Everything here is exact integer arithmetic: partition enumeration and
//! statistics, truncated formal power series over big integers, the census
//! of nilpotent K-orbits with their equivariant local-system counts, the
//! dual parameter set of triples (nu; mu1, mu2), the explicit orbit-to-triple
//! matching with its distinguished element, resolution-fiber dimension
//! bookkeeping with the smallness inequality, and the braid-orbit character
//! combinatorics that feeds the full-support slice.
//!
//! The modules cross-verify each other: orbit censuses are computed three
//! independent ways, the triple construction is checked to partition the
//! parameter set, and every closed-form dimension is compared against a
//! brute-force scan.

pub mod census;
pub mod characters;
pub mod error;
pub mod geometry;
pub mod matching;
pub mod partition;
pub mod schema;
pub mod series;
pub mod sigma;
pub mod verify;

pub use census::{
    census_count, d_of, e_of, enumerate_orbits, verify_census, Form, OrbitLabel, OrbitRecord,
};
pub use error::Error;
pub use matching::{
    distinguished_triple, full_support_count, sigma_lambda, verify_partition_of_sigma,
};
pub use partition::{
    count_p, count_plk, count_q, partitions, two_regular_partitions, Partition, PartitionStats,
};
pub use sigma::{enumerate_sigma, sigma_count, support_level, SupportLevel, Triple};
