//! The explicit orbit-to-triple matching.
//!
//! For a nilpotent orbit labeled by lambda, the transpose partition is
//! split into sizes of even multiplicity 2m_i (the even block, indices
//! 1..=l) and sizes of odd multiplicity 2m_j - 1 (the odd block, indices
//! l+1..=k; all k sizes distinct). A choice vector delta in {0,1}^l and a
//! subset J of the odd block then produce a triple
//!
//!   nu(delta)  = product of sizes with exponents m_i - delta_i (even
//!                block) and m_j - 1 (odd block),
//!   mu1(delta; J) = delta-selected sizes together with the J sizes,
//!   mu2(delta; J) = delta-selected sizes together with the complement,
//!
//! where J must carry less than half the odd-block weight. When the split
//! is exactly balanced we keep the unordered {J, complement} class once,
//! which restores the count 2^(k-1) and matches the swap identification of
//! the parameter set; such classes are flagged so verification reports can
//! surface them. For all-even lambda (empty odd block) the construction
//! runs per form tag over delta alone, giving 2^l diagonal triples.
//!
//! `distinguished_triple` picks the conjectural partner of the trivial
//! local system: maximal |nu| with opposite-parity mu parts, or the unique
//! top-level triple in the all-even case. `full_support_count` is the
//! closed-form count of triples with empty nu, and
//! `verify_partition_of_sigma` checks that the per-orbit sets partition
//! the whole parameter set.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::census::{enumerate_orbits, Form, OrbitLabel};
use crate::error::Error;
use crate::partition::Partition;
use crate::sigma::{enumerate_sigma, Triple};

/// Transpose partition split into even- and odd-multiplicity sizes.
/// Entries are (size, m) pairs: multiplicity 2m in the even block,
/// 2m - 1 in the odd block. Sizes decrease within each block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransposeDecomposition {
    even_block: Vec<(u32, u32)>,
    odd_block: Vec<(u32, u32)>,
}

impl TransposeDecomposition {
    pub fn even_block(&self) -> &[(u32, u32)] {
        &self.even_block
    }

    pub fn odd_block(&self) -> &[(u32, u32)] {
        &self.odd_block
    }

    /// Number of even-multiplicity sizes.
    pub fn l(&self) -> usize {
        self.even_block.len()
    }

    /// Total number of distinct sizes of the transpose.
    pub fn k(&self) -> usize {
        self.even_block.len() + self.odd_block.len()
    }
}

/// Splits the transpose of `lambda` by multiplicity parity.
pub fn decompose(lambda: &Partition) -> Result<TransposeDecomposition, Error> {
    if lambda.is_empty() {
        return Err(Error::InvalidPartition(
            "decomposition needs a nonempty partition".into(),
        ));
    }
    let mut even_block = Vec::new();
    let mut odd_block = Vec::new();
    for (size, mult) in lambda.transpose().size_multiplicities() {
        if mult % 2 == 0 {
            even_block.push((size, mult / 2));
        } else {
            odd_block.push((size, mult.div_ceil(2)));
        }
    }
    Ok(TransposeDecomposition {
        even_block,
        odd_block,
    })
}

/// The triple set of one orbit, with the balanced-split classes that were
/// folded into it (empty unless the odd-block weight splits evenly).
#[derive(Clone, Debug)]
pub struct SigmaLambda {
    pub triples: Vec<Triple>,
    pub balanced: Vec<Triple>,
}

/// All triples attached to the orbit; length 2^(k-1) for an orbit with an
/// odd part, 2^l for each form of an all-even orbit.
pub fn sigma_lambda(orbit: &OrbitLabel) -> Vec<Triple> {
    sigma_lambda_detail(orbit).triples
}

pub fn sigma_lambda_detail(orbit: &OrbitLabel) -> SigmaLambda {
    let dec = decompose(orbit.lambda()).expect("orbit labels are nonempty");
    match orbit.form() {
        None => sigma_from_splits(&dec),
        Some(form) => SigmaLambda {
            triples: sigma_diagonal(&dec, form),
            balanced: Vec::new(),
        },
    }
}

fn nu_of_delta(dec: &TransposeDecomposition, delta: usize) -> Partition {
    let mut parts = Vec::new();
    for (i, &(size, m)) in dec.even_block.iter().enumerate() {
        let taken = (delta >> i) & 1;
        parts.extend(std::iter::repeat_n(size, (m - taken as u32) as usize));
    }
    for &(size, m) in &dec.odd_block {
        parts.extend(std::iter::repeat_n(size, (m - 1) as usize));
    }
    Partition::from_unsorted(parts)
}

fn delta_sizes(dec: &TransposeDecomposition, delta: usize) -> Vec<u32> {
    dec.even_block
        .iter()
        .enumerate()
        .filter(|(i, _)| (delta >> i) & 1 == 1)
        .map(|(_, &(size, _))| size)
        .collect()
}

fn sigma_from_splits(dec: &TransposeDecomposition) -> SigmaLambda {
    let l = dec.l();
    let odd: Vec<u32> = dec.odd_block.iter().map(|&(size, _)| size).collect();
    let odd_total: u32 = odd.iter().sum();
    let mut triples = Vec::new();
    let mut balanced = Vec::new();
    for delta in 0..(1usize << l) {
        let nu = nu_of_delta(dec, delta);
        let common = delta_sizes(dec, delta);
        for subset in 0..(1usize << odd.len()) {
            let sum: u32 = odd
                .iter()
                .enumerate()
                .filter(|(j, _)| (subset >> j) & 1 == 1)
                .map(|(_, &s)| s)
                .sum();
            let complement_sum = odd_total - sum;
            let is_balanced = 2 * sum == odd_total;
            // Keep subsets lighter than their complement; a balanced split
            // is kept once, from whichever side enumerates first.
            let keep = sum < complement_sum
                || (is_balanced && subset < (!subset & ((1 << odd.len()) - 1)));
            if !keep {
                continue;
            }
            let mut mu1_parts = common.clone();
            let mut mu2_parts = common.clone();
            for (j, &size) in odd.iter().enumerate() {
                if (subset >> j) & 1 == 1 {
                    mu1_parts.push(size);
                } else {
                    mu2_parts.push(size);
                }
            }
            let triple = Triple::new(
                nu.clone(),
                Partition::from_unsorted(mu1_parts),
                Partition::from_unsorted(mu2_parts),
                None,
            )
            .expect("split mus are 2-regular and distinct");
            if is_balanced {
                balanced.push(triple.clone());
            }
            triples.push(triple);
        }
    }
    SigmaLambda { triples, balanced }
}

fn sigma_diagonal(dec: &TransposeDecomposition, form: Form) -> Vec<Triple> {
    debug_assert!(
        dec.odd_block.is_empty(),
        "all-even orbits have even multiplicities"
    );
    let l = dec.l();
    (0..(1usize << l))
        .map(|delta| {
            let nu = nu_of_delta(dec, delta);
            let mu = Partition::from_unsorted(delta_sizes(dec, delta));
            Triple::new(nu, mu.clone(), mu, Some(form))
                .expect("diagonal triples carry the form tag")
        })
        .collect()
}

fn uniform_parity(p: &Partition) -> Option<u32> {
    let first = p.parts().first()? % 2;
    p.parts().iter().all(|&x| x % 2 == first).then_some(first)
}

fn opposite_parity(a: &Partition, b: &Partition) -> bool {
    match (a.is_empty(), b.is_empty()) {
        (true, true) => true,
        (true, false) => uniform_parity(b).is_some(),
        (false, true) => uniform_parity(a).is_some(),
        (false, false) => match (uniform_parity(a), uniform_parity(b)) {
            (Some(x), Some(y)) => x != y,
            _ => false,
        },
    }
}

/// The unique triple conjecturally matched to the trivial local system:
/// maximal |nu| with the two mu-parities opposite (orbit with an odd
/// part), or the unique triple with |nu| = N/2 (all-even orbit). Errors
/// with the full candidate list when uniqueness fails.
pub fn distinguished_triple(orbit: &OrbitLabel) -> Result<Triple, Error> {
    let triples = sigma_lambda(orbit);
    let candidates: Vec<Triple> = match orbit.form() {
        None => {
            let max_nu = triples
                .iter()
                .map(|t| t.nu().weight())
                .max()
                .expect("orbit triple sets are nonempty");
            triples
                .into_iter()
                .filter(|t| t.nu().weight() == max_nu && opposite_parity(t.mu1(), t.mu2()))
                .collect()
        }
        Some(_) => {
            let n = orbit.lambda().weight();
            triples
                .into_iter()
                .filter(|t| 2 * t.nu().weight() == n)
                .collect()
        }
    };
    match <[Triple; 1]>::try_from(candidates) {
        Ok([unique]) => Ok(unique),
        Err(candidates) => Err(Error::UniquenessViolation {
            orbit: orbit.to_string(),
            candidates,
        }),
    }
}

/// Number of triples of the orbit with empty nu: zero when some gap is 3
/// or more (the trailing part counts as a gap against 0), else
/// 2^(f - 1 - g) for an orbit with an odd part and 1 per all-even form.
pub fn full_support_count(orbit: &OrbitLabel) -> u64 {
    let lambda = orbit.lambda();
    if lambda.max_gap() >= 3 {
        return 0;
    }
    match orbit.form() {
        Some(_) => 1,
        None => {
            let stats = lambda.stats();
            1u64 << (stats.f - 1 - stats.g)
        }
    }
}

/// Outcome of checking that the per-orbit triple sets partition the
/// parameter set, with one line per failure.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SigmaCoverReport {
    pub n: u32,
    pub orbit_count: usize,
    pub sigma_size: usize,
    pub union_size: usize,
    /// Balanced odd-block splits that were folded; flagged, not failed.
    pub balanced_classes: Vec<String>,
    pub failures: Vec<String>,
    pub pass: bool,
}

/// Checks, for every orbit of N: the triple-set size against the orbit's
/// local-system count, the empty-nu count against `full_support_count`,
/// existence and uniqueness of the distinguished triple, pairwise
/// disjointness across orbits, and that the union is the whole parameter
/// set.
pub fn verify_partition_of_sigma(n: u32) -> Result<SigmaCoverReport, Error> {
    let orbits = enumerate_orbits(n)?;
    let sigma: Vec<Triple> = enumerate_sigma(n)?;
    let mut failures = Vec::new();
    let mut balanced_classes = Vec::new();
    let mut owner: HashMap<Triple, String> = HashMap::new();

    for record in &orbits {
        let orbit = &record.label;
        let detail = sigma_lambda_detail(orbit);
        for t in &detail.balanced {
            balanced_classes.push(format!("{orbit} uses balanced class {t}"));
        }
        if detail.triples.len() as u64 != record.local_system_count {
            failures.push(format!(
                "{orbit}: {} triples vs {} local systems",
                detail.triples.len(),
                record.local_system_count
            ));
        }
        let empty_nu = detail.triples.iter().filter(|t| t.nu().is_empty()).count() as u64;
        let expected = full_support_count(orbit);
        if empty_nu != expected {
            failures.push(format!(
                "{orbit}: {empty_nu} empty-nu triples vs full-support count {expected}"
            ));
        }
        if let Err(err) = distinguished_triple(orbit) {
            failures.push(format!("{orbit}: {err}"));
        }
        for t in &detail.triples {
            if t.total_weight() != n {
                failures.push(format!("{orbit}: triple {t} has wrong total weight"));
            }
            if let Some(previous) = owner.insert(t.clone(), orbit.to_string()) {
                failures.push(format!("triple {t} claimed by both {previous} and {orbit}"));
            }
        }
    }

    let union_size = owner.len();
    for t in &sigma {
        if !owner.contains_key(t) {
            failures.push(format!("parameter {t} not covered by any orbit"));
        }
    }
    if union_size != sigma.len() {
        failures.push(format!(
            "union has {union_size} triples, parameter set has {}",
            sigma.len()
        ));
    }

    Ok(SigmaCoverReport {
        n,
        orbit_count: orbits.len(),
        sigma_size: sigma.len(),
        union_size,
        balanced_classes,
        failures: failures.clone(),
        pass: failures.is_empty(),
    })
}

/// Local-system label (2i-j, j), (2n+1-2i) on the full space; defined when
/// 0 <= j < i <= n.
pub fn e_label(n: u32, i: u32, j: u32) -> Result<Triple, Error> {
    if i > n {
        return Err(Error::InvalidIndices(format!(
            "i = {i} exceeds n = {n}, second component 2n+1-2i would not be positive"
        )));
    }
    if 2 * i < j || 2 * i - j <= j {
        return Err(Error::InvalidIndices(format!(
            "parts 2i-j = {} and j = {j} must be distinct and decreasing",
            2 * i as i64 - j as i64
        )));
    }
    Triple::new(
        Partition::empty(),
        Partition::from_unsorted([2 * i - j, j]),
        Partition::from_unsorted([2 * n + 1 - 2 * i]),
        None,
    )
}

/// Local-system label (2i-1-j, j), (2n+2-2i) on the full space; defined
/// when 0 <= j < i <= n.
pub fn tilde_e_label(n: u32, i: u32, j: u32) -> Result<Triple, Error> {
    if i == 0 || i > n {
        return Err(Error::InvalidIndices(format!(
            "i = {i} must satisfy 1 <= i <= n = {n}"
        )));
    }
    if 2 * i - 1 < j || 2 * i - 1 - j <= j {
        return Err(Error::InvalidIndices(format!(
            "parts 2i-1-j = {} and j = {j} must be distinct and decreasing",
            2 * i as i64 - 1 - j as i64
        )));
    }
    Triple::new(
        Partition::empty(),
        Partition::from_unsorted([2 * i - 1 - j, j]),
        Partition::from_unsorted([2 * n + 2 - 2 * i]),
        None,
    )
}

/// Predicted support partition of weight 2n+1 for the tilde label at
/// (n, i, j), by the three-case exponent table.
pub fn tilde_e_support(n: u32, i: u32, j: u32) -> Result<Partition, Error> {
    tilde_e_label(n, i, j)?;
    let (n, i, j) = (n as i64, i as i64, j as i64);
    let cases: [(bool, [i64; 3]); 3] = [
        (
            4 * i - j <= 2 * n + 3,
            [j, 2 * i - 2 * j - 1, 2 * n + 3 - 4 * i + j],
        ),
        (
            2 * i + j <= 2 * n + 2 && 4 * i - j >= 2 * n + 3,
            [j, 2 * n + 2 - 2 * i - j, 4 * i - j - 2 * n - 3],
        ),
        (
            2 * i + j >= 2 * n + 2,
            [2 * n - 2 * i + 2, 2 * i + j - 2 * n - 2, 2 * i - 2 * j - 1],
        ),
    ];
    for (applies, exponents) in cases {
        if !applies {
            continue;
        }
        if exponents.iter().any(|&e| e < 0) {
            return Err(Error::InvalidIndices(format!(
                "negative exponent in support for (n,i,j) = ({n},{i},{j}): {exponents:?}"
            )));
        }
        let mut parts = Vec::new();
        for (part, &count) in [3u32, 2, 1].iter().zip(&exponents) {
            parts.extend(std::iter::repeat_n(*part, count as usize));
        }
        return Ok(Partition::from_unsorted(parts));
    }
    Err(Error::InvalidIndices(format!(
        "no support case applies for (n,i,j) = ({n},{i},{j})"
    )))
}

/// One predicted support with its indices.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TildeSupportRow {
    pub i: u32,
    pub j: u32,
    pub support: Partition,
}

/// Support predictions over every valid (i, j) for a fixed n, with the
/// multiplicity of each support partition. Whether every support appears
/// exactly twice is reported, not asserted.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TildeSupportReport {
    pub n: u32,
    pub rows: Vec<TildeSupportRow>,
    pub support_counts: Vec<(Partition, u32)>,
    pub each_support_twice: bool,
}

pub fn tilde_support_report(n: u32) -> Result<TildeSupportReport, Error> {
    let mut rows = Vec::new();
    for i in 1..=n {
        for j in 0..i {
            rows.push(TildeSupportRow {
                i,
                j,
                support: tilde_e_support(n, i, j)?,
            });
        }
    }
    let mut counts: Vec<(Partition, u32)> = Vec::new();
    for row in &rows {
        match counts.iter_mut().find(|(p, _)| p == &row.support) {
            Some((_, c)) => *c += 1,
            None => counts.push((row.support.clone(), 1)),
        }
    }
    counts.sort_by(|a, b| b.0.cmp(&a.0));
    let each_support_twice = !counts.is_empty() && counts.iter().all(|&(_, c)| c == 2);
    Ok(TildeSupportReport {
        n,
        rows,
        support_counts: counts,
        each_support_twice,
    })
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::census::{census_count, d_of, e_of};

    fn orbit(parts: &[u32], form: Option<Form>) -> OrbitLabel {
        OrbitLabel::new(Partition::new(parts.to_vec()).unwrap(), form).unwrap()
    }

    fn show(triples: &[Triple]) -> HashSet<String> {
        triples.iter().map(|t| t.to_string()).collect()
    }

    #[test]
    fn decompose_fixed_cases() {
        let d = decompose(&Partition::new(vec![2, 1, 1]).unwrap()).unwrap();
        assert!(d.even_block().is_empty());
        assert_eq!(d.odd_block(), &[(3, 1), (1, 1)]);
        assert_eq!((d.l(), d.k()), (0, 2));

        let d = decompose(&Partition::new(vec![2, 2]).unwrap()).unwrap();
        assert_eq!(d.even_block(), &[(2, 1)]);
        assert!(d.odd_block().is_empty());

        let d = decompose(&Partition::new(vec![3, 1]).unwrap()).unwrap();
        assert_eq!(d.even_block(), &[(1, 1)]);
        assert_eq!(d.odd_block(), &[(2, 1)]);

        assert!(decompose(&Partition::empty()).is_err());
    }

    #[test]
    fn decomposition_reassembles_transpose() {
        for n in 1..=16 {
            for lambda in crate::partition::partitions(n) {
                let dec = decompose(&lambda).unwrap();
                let mut parts = Vec::new();
                for &(size, m) in dec.even_block() {
                    parts.extend(std::iter::repeat_n(size, 2 * m as usize));
                }
                for &(size, m) in dec.odd_block() {
                    parts.extend(std::iter::repeat_n(size, 2 * m as usize - 1));
                }
                assert_eq!(Partition::from_unsorted(parts), lambda.transpose());
                assert_eq!(dec.k(), lambda.distinct_sizes(), "k of {lambda}");
            }
        }
    }

    #[test]
    fn sigma_lambda_fixed_cases() {
        assert_eq!(
            show(&sigma_lambda(&orbit(&[2, 1, 1], None))),
            HashSet::from(["(();(),(3,1))".to_string(), "(();(1),(3))".to_string()])
        );
        assert_eq!(
            show(&sigma_lambda(&orbit(&[2, 2], Some(Form::I)))),
            HashSet::from(["((2);(),())^I".to_string(), "(();(2),(2))^I".to_string()])
        );
        assert_eq!(
            show(&sigma_lambda(&orbit(&[1, 1, 1], None))),
            HashSet::from(["(();(),(3))".to_string()])
        );
        // A 3-gap partition keeps a nonempty nu in its only triple.
        assert_eq!(
            show(&sigma_lambda(&orbit(&[3], None))),
            HashSet::from(["((1);(),(1))".to_string()])
        );
    }

    #[test]
    fn sigma_lambda_sizes_match_local_system_counts() {
        for n in 1..=16 {
            for record in enumerate_orbits(n).unwrap() {
                let triples = sigma_lambda(&record.label);
                assert_eq!(
                    triples.len() as u64,
                    record.local_system_count,
                    "size of triple set for {}",
                    record.label
                );
                for t in &triples {
                    assert_eq!(t.total_weight(), n, "{t} for {}", record.label);
                }
            }
        }
    }

    #[test]
    fn balanced_splits_are_folded_once() {
        // Odd-block sizes {3,2,1} admit the balanced split {3} vs {2,1}.
        let detail = sigma_lambda_detail(&orbit(&[3, 2, 1], None));
        assert_eq!(detail.triples.len(), 4);
        assert_eq!(detail.balanced.len(), 1);
        assert_eq!(detail.balanced[0].to_string(), "(();(2,1),(3))");
    }

    #[test]
    fn distinguished_fixed_cases() {
        assert_eq!(
            distinguished_triple(&orbit(&[2, 1, 1], None))
                .unwrap()
                .to_string(),
            "(();(),(3,1))"
        );
        assert_eq!(
            distinguished_triple(&orbit(&[2, 2], Some(Form::I)))
                .unwrap()
                .to_string(),
            "((2);(),())^I"
        );
        assert_eq!(
            distinguished_triple(&orbit(&[1, 1, 1], None))
                .unwrap()
                .to_string(),
            "(();(),(3))"
        );
        // Opposite parity rules out the mixed-parity alternative.
        assert_eq!(
            distinguished_triple(&orbit(&[2, 2, 1], None))
                .unwrap()
                .to_string(),
            "(();(2),(3))"
        );
    }

    #[test]
    fn distinguished_exists_uniquely_everywhere() {
        for n in 1..=16 {
            for record in enumerate_orbits(n).unwrap() {
                let t = distinguished_triple(&record.label)
                    .unwrap_or_else(|e| panic!("{}: {e}", record.label));
                assert!(
                    sigma_lambda(&record.label).contains(&t),
                    "distinguished triple of {} inside its set",
                    record.label
                );
            }
        }
    }

    #[test]
    fn full_support_fixed_cases() {
        assert_eq!(full_support_count(&orbit(&[4, 1], None)), 0);
        assert_eq!(full_support_count(&orbit(&[2, 1, 1], None)), 2);
        assert_eq!(full_support_count(&orbit(&[2, 2], Some(Form::I))), 1);
        assert_eq!(full_support_count(&orbit(&[3], None)), 0);
    }

    #[test]
    fn full_support_sums_to_d_or_e() {
        for n in 1..=20u32 {
            let total: u64 = enumerate_orbits(n)
                .unwrap()
                .iter()
                .map(|r| full_support_count(&r.label))
                .sum();
            let expected = if n % 2 == 1 { d_of(n / 2) } else { e_of(n / 2) };
            assert_eq!(total, expected, "full-support sum at N={n}");
        }
    }

    #[test]
    fn cover_reports_pass() {
        for n in 1..=14 {
            let report = verify_partition_of_sigma(n).unwrap();
            assert!(report.pass, "N={n}: {:?}", report.failures);
            assert_eq!(report.sigma_size as u64, census_count(n).unwrap());
        }
        let r4 = verify_partition_of_sigma(4).unwrap();
        assert_eq!(r4.sigma_size, 13);
        assert_eq!(r4.orbit_count, 7);
    }

    #[test]
    fn label_fixed_cases() {
        assert_eq!(e_label(2, 1, 0).unwrap().to_string(), "(();(2),(3))");
        assert_eq!(tilde_e_label(1, 1, 0).unwrap().to_string(), "(();(1),(2))");
        assert!(e_label(1, 1, 1).is_err());
        assert!(e_label(2, 3, 0).is_err());
        assert!(tilde_e_label(2, 0, 0).is_err());
    }

    #[test]
    fn tilde_support_fixed_cases() {
        assert_eq!(tilde_e_support(2, 1, 0).unwrap().parts(), &[2, 1, 1, 1]);
        assert_eq!(tilde_e_support(2, 2, 1).unwrap().parts(), &[3, 2]);
        assert_eq!(tilde_e_support(1, 1, 0).unwrap().parts(), &[2, 1]);
    }

    #[test]
    fn tilde_supports_have_weight_2n_plus_1() {
        for n in 1..=20 {
            let report = tilde_support_report(n).unwrap();
            assert_eq!(report.rows.len() as u32, n * (n + 1) / 2);
            for row in &report.rows {
                assert_eq!(
                    row.support.weight(),
                    2 * n + 1,
                    "weight at (n,i,j)=({n},{},{})",
                    row.i,
                    row.j
                );
            }
        }
    }

    /// Each tilde label is a full-support triple of the orbit its support
    /// table predicts, and labels landing on the same orbit are distinct.
    /// This ties the three-case exponent table to the independently built
    /// triple sets.
    #[test]
    fn tilde_labels_lie_in_their_predicted_orbit_sets() {
        for n in 1..=12u32 {
            let mut per_orbit: HashMap<Partition, Vec<Triple>> = HashMap::new();
            for i in 1..=n {
                for j in 0..i {
                    let label = tilde_e_label(n, i, j).unwrap();
                    assert!(label.nu().is_empty());
                    let support = tilde_e_support(n, i, j).unwrap();
                    // A weight-(2n+1) support always has an odd part.
                    let orbit = OrbitLabel::new(support.clone(), None).unwrap();
                    assert!(
                        sigma_lambda(&orbit).contains(&label),
                        "label {label} outside the set of {orbit} at (n,i,j)=({n},{i},{j})"
                    );
                    per_orbit.entry(support).or_default().push(label);
                }
            }
            for (support, labels) in per_orbit {
                let mut dedup = labels.clone();
                dedup.sort_by_key(|t| t.to_string());
                dedup.dedup();
                assert_eq!(
                    dedup.len(),
                    labels.len(),
                    "repeated label on orbit {support} at n={n}"
                );
            }
        }
    }
}
