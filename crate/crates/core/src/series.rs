//! Truncated formal power series over exact big integers.
//!
//! A `FormalSeries` holds coefficients 0..=truncation_degree; all arithmetic
//! is exact, and binary operations truncate to the smaller degree. Infinite
//! products are truncated at factor index s <= deg, since factors with
//! s > deg contribute only 1 modulo x^(deg+1).
//!
//! The generators here realize the partition generating functions
//!   sum p(k) x^k   = prod 1/(1-x^s),
//!   sum q(k) x^k   = prod (1+x^s),
//!   prod (1+x^s)/(1-x^s),
//!   sum p(l,k) x^l y^k = prod (1 + y x^s/(1-x^s)),
//! and `verify_partition_product_identities` checks the two factorizations
//!   prod (1+x^s)/(1-x^s) = (sum p(k) x^{2k}) (sum q(k) x^k)^2
//!                        = (sum p(k) x^k) (sum q(k) x^k)
//! coefficientwise.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Dense truncated power series; `coeffs[k]` is the coefficient of x^k and
/// `coeffs.len() == truncation_degree + 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormalSeries {
    coeffs: Vec<BigInt>,
}

impl FormalSeries {
    pub fn zero(truncation_degree: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); truncation_degree + 1],
        }
    }

    pub fn one(truncation_degree: usize) -> Self {
        let mut s = Self::zero(truncation_degree);
        s.coeffs[0] = BigInt::one();
        s
    }

    pub fn truncation_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of x^k. Panics beyond the truncation degree, where the
    /// coefficient is unknown.
    pub fn coeff(&self, k: usize) -> &BigInt {
        assert!(
            k < self.coeffs.len(),
            "coefficient of x^{k} requested, series truncated at degree {}",
            self.truncation_degree()
        );
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn mul(&self, other: &FormalSeries) -> FormalSeries {
        let deg = self.truncation_degree().min(other.truncation_degree());
        let mut out = FormalSeries::zero(deg);
        for (i, a) in self.coeffs.iter().enumerate().take(deg + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(deg + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    /// Substitutes x -> x^factor, keeping the same truncation degree.
    pub fn stretch(&self, factor: usize) -> FormalSeries {
        assert!(factor >= 1);
        let deg = self.truncation_degree();
        let mut out = FormalSeries::zero(deg);
        for (k, c) in self.coeffs.iter().enumerate() {
            if k * factor > deg {
                break;
            }
            out.coeffs[k * factor] = c.clone();
        }
        out
    }

    /// Exact division by 2; `None` if any coefficient is odd.
    pub fn halved(&self) -> Option<FormalSeries> {
        let two = BigInt::from(2);
        let mut out = FormalSeries::zero(self.truncation_degree());
        for (k, c) in self.coeffs.iter().enumerate() {
            if (c % &two) != BigInt::zero() {
                return None;
            }
            out.coeffs[k] = c / &two;
        }
        Some(out)
    }

    /// In-place multiplication by (1 + x^s); descending pass keeps it exact.
    fn mul_one_plus_power(&mut self, s: usize) {
        let deg = self.truncation_degree();
        for k in (s..=deg).rev() {
            let lower = self.coeffs[k - s].clone();
            self.coeffs[k] += lower;
        }
    }

    /// In-place multiplication by 1/(1 - x^s) = 1 + x^s + x^{2s} + ...;
    /// ascending pass accumulates the geometric series.
    fn mul_inv_one_minus_power(&mut self, s: usize) {
        let deg = self.truncation_degree();
        for k in s..=deg {
            let lower = self.coeffs[k - s].clone();
            self.coeffs[k] += lower;
        }
    }
}

/// prod_{s>=1} (1 + x^s), truncated; coefficient of x^k is q(k).
pub fn product_one_plus(deg: usize) -> FormalSeries {
    let mut out = FormalSeries::one(deg);
    for s in 1..=deg {
        out.mul_one_plus_power(s);
    }
    out
}

/// prod_{s>=1} 1/(1 - x^s), truncated; coefficient of x^k is p(k).
pub fn product_inv_one_minus(deg: usize) -> FormalSeries {
    let mut out = FormalSeries::one(deg);
    for s in 1..=deg {
        out.mul_inv_one_minus_power(s);
    }
    out
}

/// prod_{s>=1} (1 + x^s)/(1 - x^s), truncated. Every coefficient at degree
/// >= 1 is even, so halving is exact.
pub fn product_ratio(deg: usize) -> FormalSeries {
    let mut out = FormalSeries::one(deg);
    for s in 1..=deg {
        out.mul_one_plus_power(s);
        out.mul_inv_one_minus_power(s);
    }
    out
}

/// Truncated bivariate series; `rows[l]` is the coefficient of x^l as a
/// polynomial in y, whose degree is at most l.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BivariateSeries {
    rows: Vec<Vec<BigInt>>,
}

impl BivariateSeries {
    pub fn truncation_degree(&self) -> usize {
        self.rows.len() - 1
    }

    /// Coefficient of x^l y^k.
    pub fn coeff(&self, l: usize, k: usize) -> BigInt {
        assert!(
            l < self.rows.len(),
            "coefficient of x^{l} requested, series truncated at degree {}",
            self.truncation_degree()
        );
        self.rows[l].get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Substitutes a concrete integer for y, producing a univariate series
    /// in x.
    pub fn eval_y(&self, y: &BigInt) -> FormalSeries {
        let mut out = FormalSeries::zero(self.truncation_degree());
        for (l, row) in self.rows.iter().enumerate() {
            let mut acc = BigInt::zero();
            for c in row.iter().rev() {
                acc = acc * y + c;
            }
            out.coeffs[l] = acc;
        }
        out
    }

    /// Sets y = 1, producing a univariate series in x.
    pub fn eval_y_one(&self) -> FormalSeries {
        self.eval_y(&BigInt::one())
    }
}

/// prod_{s>=1} (1 + y x^s/(1-x^s)), truncated in x at `deg`; the
/// coefficient of x^l y^k is p(l,k).
pub fn bivariate_plk(deg: usize) -> BivariateSeries {
    let mut rows: Vec<Vec<BigInt>> = vec![Vec::new(); deg + 1];
    rows[0].push(BigInt::one());
    for s in 1..=deg {
        // Multiply by 1 + y (x^s + x^{2s} + ...): each row picks up the
        // y-shifted contributions of rows at x-degree l - t*s.
        for l in (s..=deg).rev() {
            let mut add: Vec<BigInt> = Vec::new();
            let mut taken = s;
            while taken <= l {
                for (k, c) in rows[l - taken].clone().into_iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    if add.len() < k + 2 {
                        add.resize(k + 2, BigInt::zero());
                    }
                    add[k + 1] += c;
                }
                taken += s;
            }
            if rows[l].len() < add.len() {
                rows[l].resize(add.len(), BigInt::zero());
            }
            for (k, c) in add.into_iter().enumerate() {
                rows[l][k] += c;
            }
        }
    }
    BivariateSeries { rows }
}

/// Checks prod (1+x^s)/(1-x^s) against both partition-product
/// factorizations, coefficientwise through `deg`.
pub fn verify_partition_product_identities(deg: usize) -> bool {
    let ratio = product_ratio(deg);
    let p = product_inv_one_minus(deg);
    let q = product_one_plus(deg);
    let even_case = p.stretch(2).mul(&q.mul(&q));
    let odd_case = p.mul(&q);
    ratio == even_case && ratio == odd_case
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{count_p, count_plk, count_q, two_regular_partitions};

    fn as_u64(x: &BigInt) -> u64 {
        u64::try_from(x.clone()).expect("coefficient fits in u64")
    }

    #[test]
    fn generators_match_partition_counts() {
        let deg = 60;
        let q = product_one_plus(deg);
        let p = product_inv_one_minus(deg);
        let plk = bivariate_plk(40);
        for k in 0..=deg {
            assert_eq!(as_u64(q.coeff(k)), count_q(k as u32), "q({k})");
            assert_eq!(as_u64(p.coeff(k)), count_p(k as u32), "p({k})");
            assert_eq!(
                as_u64(q.coeff(k)) as usize,
                two_regular_partitions(k as u32).len(),
                "q({k}) against enumeration"
            );
        }
        for k in 0..=40 {
            for c in 0..=k {
                assert_eq!(as_u64(&plk.coeff(k, c)), count_plk(k as u32, c as u32));
            }
        }
    }

    #[test]
    fn generator_fixed_values() {
        assert_eq!(product_one_plus(0).coeff(0), &BigInt::from(1));
        assert_eq!(product_one_plus(9).coeff(5), &BigInt::from(3));
        assert_eq!(
            as_u64(product_one_plus(9).coeff(9)) as usize,
            two_regular_partitions(9).len()
        );
        assert_eq!(product_inv_one_minus(10).coeff(4), &BigInt::from(5));
        assert_eq!(product_inv_one_minus(10).coeff(0), &BigInt::from(1));
        assert_eq!(product_inv_one_minus(10).coeff(10), &BigInt::from(42));
        let ratio = product_ratio(3);
        let expect: Vec<BigInt> = [1, 2, 4, 8].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(ratio.coeffs(), &expect[..]);
        assert_eq!(bivariate_plk(5).coeff(4, 2), BigInt::from(2));
        assert_eq!(bivariate_plk(5).coeff(0, 0), BigInt::from(1));
        assert_eq!(bivariate_plk(5).coeff(5, 1), BigInt::from(2));
    }

    #[test]
    fn ratio_coefficients_are_even_past_degree_zero() {
        let ratio = product_ratio(40);
        let halved = ratio.halved();
        // Degree 0 coefficient is 1, so full halving must fail...
        assert!(halved.is_none());
        // ...but all higher coefficients are even.
        let two = BigInt::from(2);
        for k in 1..=40 {
            assert_eq!(ratio.coeff(k) % &two, BigInt::zero(), "x^{k}");
        }
    }

    #[test]
    fn product_identities_hold() {
        assert!(verify_partition_product_identities(0));
        assert!(verify_partition_product_identities(20));
        assert!(verify_partition_product_identities(40));
    }

    #[test]
    fn bivariate_at_y_one_recovers_partition_series() {
        let deg = 30;
        assert_eq!(bivariate_plk(deg).eval_y_one(), product_inv_one_minus(deg));
    }

    /// Setting y = 2 weights each partition by 2^(distinct sizes), which is
    /// exactly the ratio product. This is the step that turns the local
    /// system census into a generating-function coefficient.
    #[test]
    fn bivariate_at_y_two_recovers_ratio_product() {
        let deg = 30;
        assert_eq!(
            bivariate_plk(deg).eval_y(&BigInt::from(2)),
            product_ratio(deg)
        );
    }

    #[test]
    fn bivariate_y_degree_bounded_by_x_degree() {
        let plk = bivariate_plk(25);
        for l in 0..=25 {
            assert!(plk.rows[l].len() <= l + 1, "y-degree at x^{l}");
        }
    }

    #[test]
    fn mul_truncates_to_minimum_degree() {
        let a = product_one_plus(10);
        let b = product_inv_one_minus(6);
        let prod = a.mul(&b);
        assert_eq!(prod.truncation_degree(), 6);
        let full = product_one_plus(6).mul(&product_inv_one_minus(6));
        assert_eq!(prod, full);
    }
}
