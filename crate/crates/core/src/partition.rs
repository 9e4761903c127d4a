//! Integer partitions and their exact statistics.
//!
//! A `Partition` is a weakly decreasing sequence of positive integers; the
//! empty partition is allowed and has weight 0. Partitions of equal weight
//! compare in reverse-lexicographic order, with `(4) > (3,1) > (2,2) >
//! (2,1,1) > (1,1,1,1)`; enumeration emits that order, largest first.
//!
//! Conventions used throughout the crate:
//! - `stats().g` counts indices i with `lambda_i - lambda_{i+1} == 2`,
//!   including the trailing gap against `lambda_{len+1} = 0`;
//! - partitions built from unsorted part multisets are normalized by
//!   sorting descending (`from_unsorted`).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A weakly decreasing sequence of positive integers.
///
/// Serializes as a JSON array of descending integers; the empty partition
/// serializes as `[]`. The derived `Ord` is lexicographic on the part
/// sequence, which restricted to fixed weight is reverse-lexicographic
/// order on partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

/// Distinct-size and gap-two counts of a partition.
///
/// `f` is the number of different part sizes; `g` is the number of indices
/// i with `lambda_i - lambda_{i+1} = 2` (trailing part compared against 0).
/// Equivalently, `g` is the number of part sizes of the transpose with
/// multiplicity exactly 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionStats {
    pub f: u32,
    pub g: u32,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing with positive entries.
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        for window in parts.windows(2) {
            if window[0] < window[1] {
                return Err(Error::InvalidPartition(format!(
                    "parts not weakly decreasing: {:?}",
                    parts
                )));
            }
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "parts must be positive: {:?}",
                parts
            )));
        }
        Ok(Self { parts })
    }

    /// Normalizes an arbitrary multiset of parts: sorts descending and
    /// drops zeros.
    pub fn from_unsorted(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transpose partition: part i (1-based) counts the parts of `self`
    /// that are >= i. An involution.
    pub fn transpose(&self) -> Partition {
        let largest = self.part(0);
        let parts = (1..=largest)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Gaps `lambda_i - lambda_{i+1}` for i = 1..=len, the last one taken
    /// against 0. Empty partition has no gaps.
    pub fn gaps(&self) -> Vec<u32> {
        (0..self.parts.len())
            .map(|i| self.part(i) - self.part(i + 1))
            .collect()
    }

    pub fn stats(&self) -> PartitionStats {
        let gaps = self.gaps();
        let f = gaps.iter().filter(|&&d| d > 0).count() as u32;
        let g = gaps.iter().filter(|&&d| d == 2).count() as u32;
        PartitionStats { f, g }
    }

    /// Number of different part sizes.
    pub fn distinct_sizes(&self) -> usize {
        self.stats().f as usize
    }

    /// (size, multiplicity) pairs, sizes descending.
    pub fn size_multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((size, mult)) if *size == p => *mult += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// All parts distinct.
    pub fn is_two_regular(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn all_parts_even(&self) -> bool {
        self.parts.iter().all(|&p| p % 2 == 0)
    }

    pub fn has_odd_part(&self) -> bool {
        self.parts.iter().any(|&p| p % 2 == 1)
    }

    /// Largest gap, including the trailing part against 0; 0 for the empty
    /// partition.
    pub fn max_gap(&self) -> u32 {
        self.gaps().into_iter().max().unwrap_or(0)
    }

    /// Dominance order: true iff every partial sum of `self` is >= the
    /// corresponding partial sum of `other`. Errors when the weights differ.
    pub fn dominates(&self, other: &Partition) -> Result<bool, Error> {
        let (w1, w2) = (self.weight(), other.weight());
        if w1 != w2 {
            return Err(Error::WeightMismatch {
                left: w1,
                right: w2,
            });
        }
        let len = self.len().max(other.len());
        let mut sum_self = 0u32;
        let mut sum_other = 0u32;
        for i in 0..len {
            sum_self += self.part(i);
            sum_other += other.part(i);
            if sum_self < sum_other {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self, Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `n` in reverse-lexicographic order (largest first).
/// `partitions(0)` is the singleton list holding the empty partition.
pub fn partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    extend_partitions(n, n, false, &mut prefix, &mut out);
    out
}

/// All partitions of `n` with strictly decreasing parts, reverse-lex order.
pub fn two_regular_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    extend_partitions(n, n, true, &mut prefix, &mut out);
    out
}

fn extend_partitions(
    remaining: u32,
    max_part: u32,
    strict: bool,
    prefix: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    for next in (1..=max_part.min(remaining)).rev() {
        prefix.push(next);
        let bound = if strict { next - 1 } else { next };
        extend_partitions(remaining - next, bound, strict, prefix, out);
        prefix.pop();
    }
}

/// Number of partitions of `n`.
pub fn count_p(n: u32) -> u64 {
    let n = n as usize;
    let mut table = vec![0u64; n + 1];
    table[0] = 1;
    // Unbounded knapsack over part sizes: ascending pass allows repeats.
    for size in 1..=n {
        for weight in size..=n {
            table[weight] += table[weight - size];
        }
    }
    table[n]
}

/// Number of 2-regular (distinct-part) partitions of `n`.
pub fn count_q(n: u32) -> u64 {
    let n = n as usize;
    let mut table = vec![0u64; n + 1];
    table[0] = 1;
    // 0/1 knapsack: descending pass uses each size at most once.
    for size in 1..=n {
        for weight in (size..=n).rev() {
            table[weight] += table[weight - size];
        }
    }
    table[n]
}

/// p(l, k): partitions of `l` whose parts have exactly `k` different sizes.
pub fn count_plk(l: u32, k: u32) -> u64 {
    let (l, k) = (l as usize, k as usize);
    if k > l {
        return if l == 0 && k == 0 { 1 } else { 0 };
    }
    // table[w][c] = partitions of w using c distinct sizes drawn from the
    // sizes processed so far (each chosen size used with multiplicity >= 1).
    let mut table = vec![vec![0u64; k + 1]; l + 1];
    table[0][0] = 1;
    for size in 1..=l {
        for weight in (size..=l).rev() {
            for used in 1..=k {
                let mut acc = 0u64;
                let mut taken = size;
                while taken <= weight {
                    acc += table[weight - taken][used - 1];
                    taken += size;
                }
                table[weight][used] += acc;
            }
        }
    }
    table[l][k]
}
