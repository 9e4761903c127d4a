//! Dimension bookkeeping for the two-step isotropic-flag resolutions and
//! the induced-orbit formula.
//!
//! For 1 <= m <= N/2 the image of the resolution is the closure of the
//! orbit 3^m 1^(N-3m) (N >= 3m) or 3^(N-2m) 2^(3m-N) (N < 3m). Over a
//! point of the stratum 2^j 1^(N-2j) the fiber is partitioned by the
//! intersection dimension k, with
//!
//!   dim = -2k^2 + (-N+3j+2m+1)k + mN - mj - (j^2 + 3m^2 + j + m)/2
//!
//! on the nonempty range max(m+j-N/2, j/2) <= k <= min(j, m). The fiber
//! dimension is computed both as the brute-force maximum over k and by the
//! piecewise closed form; `fiber_dim` refuses to answer if they disagree,
//! since a mismatch would falsify one of the formulas. `smallness_report`
//! certifies the strict inequality fiber < codim/2 over every proper
//! stratum.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partition::Partition;

/// Image partition of the resolution indexed by m: 3^m 1^(N-3m) when
/// N >= 3m, else 3^(N-2m) 2^(3m-N).
pub fn image_of_tau(m: u32, n: u32) -> Result<Partition, Error> {
    check_m(m, n)?;
    let parts = if n >= 3 * m {
        build_parts(&[(3, m), (1, n - 3 * m)])
    } else {
        build_parts(&[(3, n - 2 * m), (2, 3 * m - n)])
    };
    Ok(Partition::new(parts).expect("image parts are descending"))
}

fn build_parts(blocks: &[(u32, u32)]) -> Vec<u32> {
    let mut parts = Vec::new();
    for &(part, count) in blocks {
        parts.extend(std::iter::repeat_n(part, count as usize));
    }
    parts
}

fn check_m(m: u32, n: u32) -> Result<(), Error> {
    if m < 1 || 2 * m > n {
        return Err(Error::OutOfRange(format!(
            "m = {m} must satisfy 1 <= m <= N/2 for N = {n}"
        )));
    }
    Ok(())
}

/// The two-row stratum 2^j 1^(N-2j).
pub fn two_row_stratum(j: u32, n: u32) -> Result<Partition, Error> {
    if 2 * j > n {
        return Err(Error::OutOfRange(format!(
            "stratum 2^{j}1^{{N-2j}} needs 2j <= N = {n}"
        )));
    }
    Ok(Partition::new(build_parts(&[(2, j), (1, n - 2 * j)])).expect("descending"))
}

fn check_stratum_contained(m: u32, j: u32, n: u32) -> Result<(), Error> {
    let stratum = two_row_stratum(j, n).map_err(|_| Error::StratumNotContained { m, j, n })?;
    let image = image_of_tau(m, n)?;
    if !image.dominates(&stratum).expect("equal weights") {
        return Err(Error::StratumNotContained { m, j, n });
    }
    Ok(())
}

/// Codimension of the stratum 2^j 1^(N-2j) inside the image:
/// m(2N - 3m) - j(N - j). Errors when the stratum is not contained.
pub fn codim_a(m: u32, j: u32, n: u32) -> Result<i64, Error> {
    check_stratum_contained(m, j, n)?;
    let (m, j, n) = (m as i64, j as i64, n as i64);
    let a = m * (2 * n - 3 * m) - j * (n - j);
    debug_assert!(a >= 0);
    Ok(a)
}

/// Nonempty range of intersection dimensions k over the stratum, or `None`
/// when empty: max(m+j-N/2, j/2) <= k <= min(j, m), the lower bound taken
/// as a ceiling.
pub fn omega_k_range(m: u32, j: u32, n: u32) -> Option<(i64, i64)> {
    let (m, j, n) = (m as i64, j as i64, n as i64);
    let lower = ceil_half(2 * (m + j) - n).max(ceil_half(j));
    let upper = j.min(m);
    (lower <= upper).then_some((lower, upper))
}

fn ceil_half(a: i64) -> i64 {
    (a + 1).div_euclid(2)
}

/// Dimension of the closed fiber stratum at intersection dimension k; the
/// half-integer terms cancel. Errors when k is outside the nonempty range.
pub fn omega_dim(m: u32, j: u32, n: u32, k: i64) -> Result<i64, Error> {
    match omega_k_range(m, j, n) {
        Some((lo, hi)) if (lo..=hi).contains(&k) => {}
        _ => return Err(Error::KOutOfRange { m, j, n, k }),
    }
    let (m, j, n) = (m as i64, j as i64, n as i64);
    let half_term = (j * j + 3 * m * m + j + m) / 2;
    debug_assert_eq!((j * j + 3 * m * m + j + m) % 2, 0);
    Ok(-2 * k * k + (-n + 3 * j + 2 * m + 1) * k + m * n - m * j - half_term)
}

/// Fiber dimension over the stratum 2^j 1^(N-2j), computed both as the
/// brute-force maximum of `omega_dim` over the k-range and by the
/// piecewise closed form; errors if the two disagree.
pub fn fiber_dim(m: u32, j: u32, n: u32) -> Result<i64, Error> {
    check_stratum_contained(m, j, n)?;
    let (lo, hi) = omega_k_range(m, j, n).ok_or(Error::KOutOfRange {
        m,
        j,
        n,
        k: i64::from(j.min(m)),
    })?;
    let brute = (lo..=hi)
        .map(|k| omega_dim(m, j, n, k))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .max()
        .expect("nonempty range");

    let a = codim_a(m, j, n)?;
    let (mi, ji, ni) = (m as i64, j as i64, n as i64);
    let closed = if ji >= ni - 2 * mi {
        if ni % 2 == 0 {
            (a + ji + mi - ni) / 2
        } else {
            (a - mi) / 2
        }
    } else if ji % 2 == 1 {
        (a + ji + mi - ni) / 2
    } else {
        (a - mi) / 2
    };

    if brute != closed {
        return Err(Error::FiberDimMismatch {
            m,
            j,
            n,
            brute,
            closed,
        });
    }
    Ok(brute)
}

/// One stratum line of a smallness certificate. `half_codim_times_two`
/// avoids fractions: the strict inequality is 2*fiber_dim < codim.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct SmallnessRow {
    pub j: u32,
    pub fiber_dim: i64,
    pub codim: i64,
    pub pass: bool,
}

/// Smallness certificate for one resolution index m: every applicable
/// stratum must satisfy fiber_dim < codim/2 strictly.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SmallnessReport {
    pub m: u32,
    pub n: u32,
    pub rows: Vec<SmallnessRow>,
    pub all_pass: bool,
}

/// Scans every stratum 2^j 1^(N-2j) that is dominated by the image, is not
/// the open stratum, and has m + j < N, asserting the strict smallness
/// inequality on each.
pub fn smallness_report(m: u32, n: u32) -> Result<SmallnessReport, Error> {
    check_m(m, n)?;
    let image = image_of_tau(m, n)?;
    let mut rows = Vec::new();
    for j in 0..=(n / 2) {
        let stratum = two_row_stratum(j, n)?;
        if stratum == image || !image.dominates(&stratum).expect("equal weights") {
            continue;
        }
        if m + j >= n {
            continue;
        }
        if omega_k_range(m, j, n).is_none() {
            continue;
        }
        let fiber = fiber_dim(m, j, n)?;
        let codim = codim_a(m, j, n)?;
        rows.push(SmallnessRow {
            j,
            fiber_dim: fiber,
            codim,
            pass: 2 * fiber < codim,
        });
    }
    let all_pass = rows.iter().all(|r| r.pass);
    Ok(SmallnessReport {
        m,
        n,
        rows,
        all_pass,
    })
}

/// Induced orbit of a pair (alpha, beta) with 2|alpha| + |beta| = N:
/// parts beta_i + 2 alpha_i, zero-padded. Errors when the weights do not
/// add up or the componentwise sums fail to be weakly decreasing.
pub fn induce_orbit(alpha: &Partition, beta: &Partition, n: u32) -> Result<Partition, Error> {
    let total = 2 * alpha.weight() + beta.weight();
    if total != n {
        return Err(Error::WeightMismatch {
            left: total,
            right: n,
        });
    }
    let len = alpha.len().max(beta.len());
    let parts: Vec<u32> = (0..len).map(|i| beta.part(i) + 2 * alpha.part(i)).collect();
    Partition::new(parts).map_err(|_| {
        Error::FormulaDomainExceeded(format!(
            "componentwise sums of {beta} + 2*{alpha} are not weakly decreasing"
        ))
    })
}
