//! Error type shared across the crate.

use crate::sigma::Triple;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A part sequence that is not weakly decreasing or contains a zero.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// Dominance comparison of partitions with different weights.
    #[error("incomparable weights: {left} vs {right}")]
    WeightMismatch { left: u32, right: u32 },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("invalid orbit label: {0}")]
    InvalidOrbitLabel(String),

    #[error("invalid triple: {0}")]
    InvalidTriple(String),

    /// The stratum 2^j 1^(N-2j) is not dominated by the image partition.
    #[error("stratum 2^{j}1^{{N-2j}} not contained in the image for m={m}, N={n}")]
    StratumNotContained { m: u32, j: u32, n: u32 },

    #[error("k={k} outside the nonempty stratum range for m={m}, j={j}, N={n}")]
    KOutOfRange { m: u32, j: u32, n: u32, k: i64 },

    /// The brute-force fiber dimension disagrees with the piecewise closed
    /// form; either would falsify the other, so we refuse to pick a side.
    #[error(
        "fiber dimension mismatch for m={m}, j={j}, N={n}: brute-force {brute} vs closed form {closed}"
    )]
    FiberDimMismatch {
        m: u32,
        j: u32,
        n: u32,
        brute: i64,
        closed: i64,
    },

    /// The induced-orbit formula produced a non-monotone sequence.
    #[error("induction formula domain exceeded: {0}")]
    FormulaDomainExceeded(String),

    /// The distinguished-triple criteria selected zero or several candidates.
    #[error(
        "conjectured uniqueness fails for orbit {orbit}: {} candidate triples",
        candidates.len()
    )]
    UniquenessViolation {
        orbit: String,
        candidates: Vec<Triple>,
    },

    #[error("invalid label indices: {0}")]
    InvalidIndices(String),
}
