//! Census of nilpotent K-orbits on the (-1)-eigenspace and of their
//! irreducible equivariant local systems.
//!
//! Orbits are labeled by partitions of N. A partition with at least one odd
//! part names a single K-orbit; a partition with only even parts (forcing N
//! even) splits into two K-orbits tagged I and II. An orbit whose partition
//! has k distinct part sizes carries 2^(k-1) irreducible equivariant local
//! systems in the un-split case and 2^k on each split orbit.
//!
//! `verify_census` checks the total count three independent ways: summing
//! over enumerated orbits, the convolution formulas through d(k)/e(k), and
//! the halved generating-function coefficient.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partition::{count_p, count_q, partitions, Partition};
use crate::series::product_ratio;

/// Formal tag distinguishing the two K-orbits over an all-even partition.
/// Generated in the fixed order I before II and treated symmetrically.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Form {
    I,
    II,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Form::I => write!(f, "I"),
            Form::II => write!(f, "II"),
        }
    }
}

/// A nilpotent K-orbit: a partition of N plus a form tag, the tag present
/// exactly when every part is even. Deserialization re-validates.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawOrbitLabel")]
pub struct OrbitLabel {
    lambda: Partition,
    form: Option<Form>,
}

#[derive(Deserialize)]
struct RawOrbitLabel {
    lambda: Partition,
    form: Option<Form>,
}

impl TryFrom<RawOrbitLabel> for OrbitLabel {
    type Error = Error;

    fn try_from(raw: RawOrbitLabel) -> Result<Self, Error> {
        OrbitLabel::new(raw.lambda, raw.form)
    }
}

impl OrbitLabel {
    pub fn new(lambda: Partition, form: Option<Form>) -> Result<Self, Error> {
        if lambda.is_empty() {
            return Err(Error::InvalidOrbitLabel(
                "orbit partition must be nonempty".into(),
            ));
        }
        let splits = lambda.all_parts_even();
        match (splits, form.is_some()) {
            (true, false) => Err(Error::InvalidOrbitLabel(format!(
                "{lambda} has only even parts and needs a form tag I or II"
            ))),
            (false, true) => Err(Error::InvalidOrbitLabel(format!(
                "{lambda} has an odd part and admits no form tag"
            ))),
            _ => Ok(Self { lambda, form }),
        }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn form(&self) -> Option<Form> {
        self.form
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.form {
            Some(form) => write!(f, "{}^{}", self.lambda, form),
            None => write!(f, "{}", self.lambda),
        }
    }
}

/// An orbit together with its local-system count.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub label: OrbitLabel,
    pub distinct_sizes: u32,
    pub local_system_count: u64,
}

/// All K-orbits for the given N, one record per orbit. Partitions are
/// listed in reverse-lexicographic order; all-even partitions contribute
/// two records (I before II).
pub fn enumerate_orbits(n: u32) -> Result<Vec<OrbitRecord>, Error> {
    if n == 0 {
        return Err(Error::OutOfRange("N must be >= 1".into()));
    }
    let mut out = Vec::new();
    for lambda in partitions(n) {
        let k = lambda.distinct_sizes() as u32;
        if lambda.all_parts_even() {
            for form in [Form::I, Form::II] {
                out.push(OrbitRecord {
                    label: OrbitLabel::new(lambda.clone(), Some(form))?,
                    distinct_sizes: k,
                    local_system_count: 1u64 << k,
                });
            }
        } else {
            out.push(OrbitRecord {
                label: OrbitLabel::new(lambda.clone(), None)?,
                distinct_sizes: k,
                local_system_count: 1u64 << (k - 1),
            });
        }
    }
    Ok(out)
}

/// Total number of (orbit, local system) pairs for the given N.
pub fn census_count(n: u32) -> Result<u64, Error> {
    Ok(enumerate_orbits(n)?
        .iter()
        .map(|rec| rec.local_system_count)
        .sum())
}

/// d(k) = sum_{s=0}^{k} q(s) q(2k+1-s).
pub fn d_of(k: u32) -> u64 {
    (0..=k).map(|s| count_q(s) * count_q(2 * k + 1 - s)).sum()
}

/// e(k) = sum_{s=0}^{k-1} q(s) q(2k-s) + (q(k)^2 + 3 q(k)) / 2.
pub fn e_of(k: u32) -> u64 {
    let cross: u64 = (0..k).map(|s| count_q(s) * count_q(2 * k - s)).sum();
    let qk = count_q(k);
    cross + (qk * qk + 3 * qk) / 2
}

/// The three independent census computations and whether they agree.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CensusReport {
    pub n: u32,
    /// Sum of local-system counts over enumerated orbits.
    pub orbit_sum: u64,
    /// sum p(n-k) d(k) for N = 2n+1, sum p(n-k) e(k) for N = 2n.
    pub formula_sum: u64,
    /// Half the coefficient of x^N in prod (1+x^s)/(1-x^s), plus for even N
    /// three halves of the coefficient of x^(N/2).
    pub series_value: u64,
    pub pass: bool,
}

pub fn verify_census(n: u32) -> Result<CensusReport, Error> {
    let orbit_sum = census_count(n)?;

    let half = n / 2;
    let formula_sum: u64 = if n % 2 == 1 {
        (0..=half).map(|k| count_p(half - k) * d_of(k)).sum()
    } else {
        (0..=half).map(|k| count_p(half - k) * e_of(k)).sum()
    };

    let ratio = product_ratio(n as usize);
    let series_value = {
        let main = half_coefficient(ratio.coeff(n as usize));
        if n.is_multiple_of(2) {
            // 2^k local systems on each of the two split orbits contribute
            // 3 * 2^(k-1) beyond the generic 2^(k-1), indexed by the halved
            // partition: three halves of the coefficient at x^(N/2).
            main + 3 * half_coefficient(ratio.coeff((n / 2) as usize))
        } else {
            main
        }
    };

    let pass = orbit_sum == formula_sum && formula_sum == series_value;
    Ok(CensusReport {
        n,
        orbit_sum,
        formula_sum,
        series_value,
        pass,
    })
}

fn half_coefficient(c: &BigInt) -> u64 {
    let two = BigInt::from(2);
    assert!(
        (c % &two).is_zero(),
        "generating-function coefficient {c} is odd"
    );
    u64::try_from(c / &two).expect("census count fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_enumeration_fixed_cases() {
        let n3 = enumerate_orbits(3).unwrap();
        assert_eq!(n3.len(), 3);
        assert!(n3.iter().all(|r| r.label.form().is_none()));

        let n2 = enumerate_orbits(2).unwrap();
        let shown: Vec<String> = n2.iter().map(|r| r.label.to_string()).collect();
        assert_eq!(shown, vec!["(2)^I", "(2)^II", "(1,1)"]);

        let n1 = enumerate_orbits(1).unwrap();
        assert_eq!(n1.len(), 1);
        assert_eq!(n1[0].local_system_count, 1);

        assert!(enumerate_orbits(0).is_err());
    }

    #[test]
    fn split_orbits_come_in_equal_pairs() {
        for n in 1..=16 {
            let records = enumerate_orbits(n).unwrap();
            for rec in &records {
                if rec.label.lambda().all_parts_even() {
                    let twins: Vec<_> = records
                        .iter()
                        .filter(|r| r.label.lambda() == rec.label.lambda())
                        .collect();
                    assert_eq!(twins.len(), 2, "{}", rec.label);
                    assert_eq!(
                        twins[0].local_system_count, twins[1].local_system_count,
                        "{}",
                        rec.label
                    );
                    assert_eq!(rec.local_system_count, 1 << rec.distinct_sizes);
                } else {
                    assert_eq!(rec.local_system_count, 1 << (rec.distinct_sizes - 1));
                }
            }
        }
    }

    #[test]
    fn census_fixed_values() {
        assert_eq!(census_count(1).unwrap(), 1);
        assert_eq!(census_count(2).unwrap(), 5);
        assert_eq!(census_count(3).unwrap(), 4);
        assert_eq!(census_count(4).unwrap(), 13);
    }

    #[test]
    fn d_and_e_fixed_values() {
        assert_eq!(d_of(0), 1);
        assert_eq!(d_of(1), 3);
        assert_eq!(e_of(0), 2);
        assert_eq!(e_of(1), 3);
    }

    /// d and e against the squared distinct-part product: d(k) is half the
    /// coefficient of x^(2k+1) in prod (1+x^s)^2, and 2e(k) - 3q(k) is the
    /// coefficient of x^(2k).
    #[test]
    fn d_and_e_match_squared_product() {
        let deg = 41;
        let q = crate::series::product_one_plus(deg);
        let squared = q.mul(&q);
        for k in 0..=20u32 {
            let odd = u64::try_from(squared.coeff(2 * k as usize + 1).clone()).unwrap();
            assert_eq!(2 * d_of(k), odd, "d({k})");
            let even = u64::try_from(squared.coeff(2 * k as usize).clone()).unwrap();
            assert_eq!(2 * e_of(k), even + 3 * count_q(k), "e({k})");
        }
    }

    #[test]
    fn three_way_census_agreement() {
        for n in 1..=24 {
            let report = verify_census(n).unwrap();
            assert!(
                report.pass,
                "census disagreement at N={n}: {} / {} / {}",
                report.orbit_sum, report.formula_sum, report.series_value
            );
        }
        let r3 = verify_census(3).unwrap();
        assert_eq!((r3.orbit_sum, r3.formula_sum, r3.series_value), (4, 4, 4));
        let r2 = verify_census(2).unwrap();
        assert_eq!((r2.orbit_sum, r2.formula_sum, r2.series_value), (5, 5, 5));
    }

    #[test]
    fn label_deserialization_validates() {
        let ok: OrbitLabel = serde_json::from_str(r#"{"lambda":[2,2],"form":"II"}"#).unwrap();
        assert_eq!(ok.to_string(), "(2,2)^II");
        assert!(serde_json::from_str::<OrbitLabel>(r#"{"lambda":[2,2],"form":null}"#).is_err());
        assert!(serde_json::from_str::<OrbitLabel>(r#"{"lambda":[2,1],"form":"I"}"#).is_err());
    }

    #[test]
    fn label_validation() {
        let even = Partition::new(vec![2, 2]).unwrap();
        assert!(OrbitLabel::new(even.clone(), None).is_err());
        assert!(OrbitLabel::new(even, Some(Form::I)).is_ok());
        let odd = Partition::new(vec![2, 1]).unwrap();
        assert!(OrbitLabel::new(odd.clone(), Some(Form::II)).is_err());
        assert!(OrbitLabel::new(odd, None).is_ok());
        assert!(OrbitLabel::new(Partition::empty(), None).is_err());
    }
}
