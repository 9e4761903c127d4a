//! One-command verification: runs every cross-module identity at its
//! standard range and collects pass/fail lines.

use serde::{Deserialize, Serialize};

use crate::census::{census_count, d_of, e_of, enumerate_orbits, verify_census};
use crate::characters::{composition_factors, orbit_count_on_characters};
use crate::error::Error;
use crate::geometry::smallness_report;
use crate::matching::{full_support_count, verify_partition_of_sigma};
use crate::partition::Partition;
use crate::series::verify_partition_product_identities;
use crate::sigma::{enumerate_sigma, sigma_count, Triple};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

impl VerifyReport {
    fn from_checks(checks: Vec<CheckResult>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        Self { checks, pass }
    }
}

fn check(name: impl Into<String>, outcome: Result<(bool, String), Error>) -> CheckResult {
    let name = name.into();
    match outcome {
        Ok((pass, detail)) => CheckResult { name, pass, detail },
        Err(err) => CheckResult {
            name,
            pass: false,
            detail: err.to_string(),
        },
    }
}

/// Census, parametrization count, and cover checks for a single N.
pub fn verify_single(n: u32) -> Result<VerifyReport, Error> {
    let mut checks = Vec::new();

    let census = verify_census(n)?;
    checks.push(CheckResult {
        name: format!("census-identity N={n}"),
        pass: census.pass,
        detail: format!(
            "orbit sum {}, formula {}, series {}",
            census.orbit_sum, census.formula_sum, census.series_value
        ),
    });

    let (a, b) = (sigma_count(n)?, census_count(n)?);
    checks.push(CheckResult {
        name: format!("parametrization-count N={n}"),
        pass: a == b,
        detail: format!("|Sigma| = {a}, |A| = {b}"),
    });

    let cover = verify_partition_of_sigma(n)?;
    checks.push(CheckResult {
        name: format!("sigma-cover N={n}"),
        pass: cover.pass,
        detail: if cover.pass {
            format!(
                "{} orbits cover {} parameters{}",
                cover.orbit_count,
                cover.sigma_size,
                if cover.balanced_classes.is_empty() {
                    String::new()
                } else {
                    format!(
                        " ({} balanced classes folded)",
                        cover.balanced_classes.len()
                    )
                }
            )
        } else {
            cover.failures.join("; ")
        },
    });

    Ok(VerifyReport::from_checks(checks))
}

/// The full default suite. `cap` optionally lowers every N range, for
/// quick runs on constrained machines.
pub fn default_suite(cap: Option<u32>) -> VerifyReport {
    let limit = |default: u32| cap.map_or(default, |c| c.min(default));
    let mut checks = Vec::new();

    checks.push(check(
        "census-identity N=1..24",
        scan(1, limit(24), |n| {
            let report = verify_census(n)?;
            Ok((
                report.pass,
                format!(
                    "N={n}: {} / {} / {}",
                    report.orbit_sum, report.formula_sum, report.series_value
                ),
            ))
        }),
    ));

    checks.push(check(
        "parametrization-count N=1..24",
        scan(1, limit(24), |n| {
            let (a, b) = (sigma_count(n)?, census_count(n)?);
            Ok((a == b, format!("N={n}: {a} vs {b}")))
        }),
    ));

    checks.push(check("sigma-cover N=1..14", {
        let mut balanced = 0usize;
        let outcome = scan(1, limit(14), |n| {
            let report = verify_partition_of_sigma(n)?;
            balanced += report.balanced_classes.len();
            Ok((
                report.pass,
                if report.pass {
                    format!("N={n}: {} parameters", report.sigma_size)
                } else {
                    format!("N={n}: {}", report.failures.join("; "))
                },
            ))
        });
        outcome.map(|(pass, detail)| {
            (pass, format!("{detail}, {balanced} balanced classes folded"))
        })
    }));

    checks.push(check(
        "full-support-sum N=1..20",
        scan(1, limit(20), |n| {
            let total: u64 = enumerate_orbits(n)?
                .iter()
                .map(|r| full_support_count(&r.label))
                .sum();
            let expected = if n % 2 == 1 { d_of(n / 2) } else { e_of(n / 2) };
            Ok((total == expected, format!("N={n}: {total} vs {expected}")))
        }),
    ));

    checks.push(check(
        "smallness N=2..40",
        scan(2, limit(40), |n| {
            for m in 1..=(n / 2) {
                let report = smallness_report(m, n)?;
                if !report.all_pass {
                    return Ok((false, format!("fails at m={m}, N={n}")));
                }
            }
            Ok((true, format!("N={n}: all m strict")))
        }),
    ));

    checks.push(check(
        "character-orbits N=2..12",
        scan(2, limit(12), |n| {
            let orbits = orbit_count_on_characters(n)?;
            let expected = (n / 2 + 1) as u64;
            Ok((orbits == expected, format!("N={n}: {orbits} vs {expected}")))
        }),
    ));

    checks.push(check(
        "factor-slice N=1..14",
        scan(1, limit(14), |n| {
            let mut from_factors: Vec<Triple> = Vec::new();
            for m in 0..=(n / 2) {
                for f in composition_factors(m, n)? {
                    from_factors.push(Triple::new(Partition::empty(), f.mu1, f.mu2, f.split)?);
                }
            }
            from_factors.sort_by_key(|t| t.to_string());
            from_factors.dedup();
            let mut slice: Vec<Triple> = enumerate_sigma(n)?
                .into_iter()
                .filter(|t| t.nu().is_empty())
                .collect();
            slice.sort_by_key(|t| t.to_string());
            Ok((
                from_factors == slice,
                format!("N={n}: {} labels", slice.len()),
            ))
        }),
    ));

    checks.push(check("series-identities deg=40", {
        let deg = limit(40) as usize;
        Ok((
            verify_partition_product_identities(deg),
            format!("coefficientwise through degree {deg}"),
        ))
    }));

    VerifyReport::from_checks(checks)
}

/// Runs `body` for each N in the range, reporting the first failure or the
/// last success line.
fn scan(
    from: u32,
    to: u32,
    mut body: impl FnMut(u32) -> Result<(bool, String), Error>,
) -> Result<(bool, String), Error> {
    let mut last = String::new();
    for n in from..=to {
        let (pass, detail) = body(n)?;
        if !pass {
            return Ok((false, detail));
        }
        last = detail;
    }
    Ok((true, last))
}
