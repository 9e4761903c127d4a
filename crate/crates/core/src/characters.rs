//! Character combinatorics of the component group I_N = (Z/2Z)^(N-1) and
//! its braid-orbit bookkeeping.
//!
//! Characters of I_N are sign vectors on the generators tau_1..tau_(N-1),
//! where tau_i = e_i + e_(i+1) inside the sum-zero subgroup of (Z/2Z)^N.
//! The braid group acts through the symmetric group, so orbits on the
//! character group are counted by a brute-force scan over sign vectors
//! modulo the global flip. The braid group itself is never materialized:
//! every statement used here is about its image in S_N or about subgroup
//! indices, which are binomial coefficients.
//!
//! `composition_factors` lists the factor labels of the induced module at
//! level m: all pairs of 2-regular partitions of m and N-m with unequal
//! entries, the diagonal pairs at m = N/2 each replaced by a pair of
//! formal splits I and II. `jacobian_factors` is the two-row factor list
//! of the hyperelliptic Jacobian example.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::census::Form;
use crate::error::Error;
use crate::partition::{two_regular_partitions, Partition};

/// A character of I_N as its values on the generators tau_1..tau_(N-1).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CharacterLabel {
    values: Vec<i8>,
}

impl CharacterLabel {
    /// Values on tau_1..tau_(N-1), each +1 or -1.
    pub fn values(&self) -> &[i8] {
        &self.values
    }

    /// Evaluates on a sum-zero vector of (Z/2Z)^N by expanding it in the
    /// tau basis via prefix sums.
    pub fn eval(&self, v: &[bool]) -> Result<i8, Error> {
        if v.len() != self.values.len() + 1 {
            return Err(Error::OutOfRange(format!(
                "vector length {} does not match N = {}",
                v.len(),
                self.values.len() + 1
            )));
        }
        if v.iter().filter(|&&b| b).count() % 2 != 0 {
            return Err(Error::OutOfRange(
                "vector is not in the sum-zero subgroup".into(),
            ));
        }
        let mut prefix = false;
        let mut sign = 1i8;
        for (i, &bit) in v.iter().take(self.values.len()).enumerate() {
            prefix ^= bit;
            if prefix {
                sign *= self.values[i];
            }
        }
        Ok(sign)
    }
}

/// The orbit representative chi_m: value -1 on tau_m and +1 elsewhere
/// (chi_0 is trivial). Requires 0 <= m <= N/2.
pub fn chi(m: u32, n: u32) -> Result<CharacterLabel, Error> {
    if n < 1 || m > n / 2 {
        return Err(Error::OutOfRange(format!(
            "chi_{m} needs 0 <= m <= N/2 with N = {n}"
        )));
    }
    let values = (1..n).map(|i| if i == m { -1 } else { 1 }).collect();
    Ok(CharacterLabel { values })
}

/// Counts braid-group orbits on the character group of I_N by brute force:
/// characters are sign vectors of length N modulo the global flip, acted on
/// by adjacent transpositions; orbits are collected by breadth-first scan.
pub fn orbit_count_on_characters(n: u32) -> Result<u64, Error> {
    if !(2..=24).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "brute-force orbit count supports 2 <= N <= 24, got {n}"
        )));
    }
    let full: u32 = (1u32 << n) - 1;
    let canon = |mask: u32| mask.min(!mask & full);
    let mut seen: HashSet<u32> = HashSet::new();
    let mut orbits = 0u64;
    for start in 0..=full {
        let start = canon(start);
        if !seen.insert(start) {
            continue;
        }
        orbits += 1;
        let mut frontier = vec![start];
        while let Some(mask) = frontier.pop() {
            for i in 0..(n - 1) {
                let bits = (mask >> i) & 0b11;
                if bits == 0b01 || bits == 0b10 {
                    let neighbor = canon(mask ^ (0b11 << i));
                    if seen.insert(neighbor) {
                        frontier.push(neighbor);
                    }
                }
            }
        }
    }
    Ok(orbits)
}

/// Index bookkeeping for the stabilizer of chi_m in the braid group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizerFlags {
    /// Index of the two-block parabolic in the full braid group, equal to
    /// the index of S_m x S_(N-m) in S_N.
    pub index_in_braid_group: u64,
    /// Whether the stabilizer of chi_m equals that parabolic; false exactly
    /// at m = N/2, where the parabolic sits inside with index 2.
    pub stabilizer_equals_parabolic: bool,
}

pub fn stabilizer_flags(m: u32, n: u32) -> Result<StabilizerFlags, Error> {
    if n < 1 || m > n / 2 {
        return Err(Error::OutOfRange(format!(
            "stabilizer flags need 0 <= m <= N/2 with N = {n}"
        )));
    }
    Ok(StabilizerFlags {
        index_in_braid_group: binomial(n, m),
        stabilizer_equals_parabolic: 2 * m != n,
    })
}

fn binomial(n: u32, k: u32) -> u64 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 - i) / (i + 1);
    }
    u64::try_from(acc).expect("binomial fits in u64")
}

/// A composition-factor label: a pair of 2-regular partitions, with a
/// formal split tag replacing each diagonal pair at m = N/2.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct FactorLabel {
    pub mu1: Partition,
    pub mu2: Partition,
    pub split: Option<Form>,
}

/// Composition factors of the level-m induced module: pairs over the
/// 2-regular partitions of m and N-m with mu1 != mu2, plus both splits of
/// each diagonal pair when N = 2m.
pub fn composition_factors(m: u32, n: u32) -> Result<Vec<FactorLabel>, Error> {
    if n < 1 || m > n / 2 {
        return Err(Error::OutOfRange(format!(
            "composition factors need 0 <= m <= N/2 with N = {n}"
        )));
    }
    let mut out = Vec::new();
    for mu1 in two_regular_partitions(m) {
        for mu2 in two_regular_partitions(n - m) {
            if mu1 == mu2 {
                for split in [Form::I, Form::II] {
                    out.push(FactorLabel {
                        mu1: mu1.clone(),
                        mu2: mu2.clone(),
                        split: Some(split),
                    });
                }
            } else {
                out.push(FactorLabel {
                    mu1: mu1.clone(),
                    mu2,
                    split: None,
                });
            }
        }
    }
    Ok(out)
}

/// Factor labels of degree-i cohomology of the hyperelliptic Jacobian on
/// N branch points (N = 2n+2 even, 0 <= i <= n): the two-row partitions
/// (N-k, k) for k = i, i-2, ... down to 0 or 1.
pub fn jacobian_factors(n: u32, i: u32) -> Result<Vec<Partition>, Error> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::OutOfRange(format!(
            "Jacobian factors need even N >= 2, got {n}"
        )));
    }
    let genus_bound = (n - 2) / 2;
    if i > genus_bound {
        return Err(Error::OutOfRange(format!(
            "degree i = {i} exceeds n = {genus_bound} for N = {n}"
        )));
    }
    let mut out = Vec::new();
    let mut k = i as i64;
    while k >= 0 {
        let mu = Partition::from_unsorted([n - k as u32, k as u32]);
        if !mu.is_two_regular() {
            return Err(Error::InvalidIndices(format!(
                "factor ({}, {k}) is not 2-regular",
                n - k as u32
            )));
        }
        out.push(mu);
        k -= 2;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::partition::count_q;
    use crate::sigma::{enumerate_sigma, Triple};

    #[test]
    fn chi_fixed_cases() {
        assert_eq!(chi(2, 5).unwrap().values(), &[1, -1, 1, 1]);
        assert_eq!(chi(0, 4).unwrap().values(), &[1, 1, 1]);
        assert_eq!(chi(2, 4).unwrap().values(), &[1, -1, 1]);
        assert!(chi(3, 5).is_err());
    }

    #[test]
    fn orbit_counts_match_closed_form() {
        for n in 2..=12 {
            assert_eq!(
                orbit_count_on_characters(n).unwrap(),
                (n / 2 + 1) as u64,
                "orbits at N={n}"
            );
        }
        assert!(orbit_count_on_characters(1).is_err());
    }

    #[test]
    fn stabilizer_fixed_cases() {
        assert_eq!(
            stabilizer_flags(2, 5).unwrap(),
            StabilizerFlags {
                index_in_braid_group: 10,
                stabilizer_equals_parabolic: true
            }
        );
        assert_eq!(
            stabilizer_flags(2, 4).unwrap(),
            StabilizerFlags {
                index_in_braid_group: 6,
                stabilizer_equals_parabolic: false
            }
        );
        assert_eq!(
            stabilizer_flags(0, 3).unwrap(),
            StabilizerFlags {
                index_in_braid_group: 1,
                stabilizer_equals_parabolic: true
            }
        );
    }

    /// Orbit of one character class (sign-vector masks modulo the global
    /// flip) under adjacent transpositions. Test-side oracle.
    fn character_orbit(start: u32, n: u32) -> HashSet<u32> {
        let full = (1u32 << n) - 1;
        let canon = |mask: u32| mask.min(!mask & full);
        let mut seen = HashSet::from([canon(start)]);
        let mut frontier = vec![canon(start)];
        while let Some(mask) = frontier.pop() {
            for i in 0..(n - 1) {
                let bits = (mask >> i) & 0b11;
                if bits == 0b01 || bits == 0b10 {
                    let neighbor = canon(mask ^ (0b11 << i));
                    if seen.insert(neighbor) {
                        frontier.push(neighbor);
                    }
                }
            }
        }
        seen
    }

    /// Sign-vector mask of chi_m: coordinates m+1..N carry the minus sign,
    /// so the generator values epsilon_i * epsilon_(i+1) flip exactly at m.
    fn chi_mask(m: u32, n: u32) -> u32 {
        (1u32 << n) - (1u32 << m)
    }

    /// The chi_m are a complete, irredundant set of orbit representatives,
    /// and the orbit sizes give back the stabilizer indices: the full
    /// binomial for m < N/2, half of it when the global flip already
    /// identifies a mask with its complement at m = N/2.
    #[test]
    fn chi_representatives_and_orbit_sizes() {
        for n in 2..=10u32 {
            let mut covered: HashSet<u32> = HashSet::new();
            for m in 0..=(n / 2) {
                let orbit = character_orbit(chi_mask(m, n), n);
                assert!(
                    covered.is_disjoint(&orbit),
                    "chi_{m} lies in an already-seen orbit at N={n}"
                );
                covered.extend(&orbit);
                let index = stabilizer_flags(m, n).unwrap().index_in_braid_group;
                let expected_size = if 2 * m == n { index / 2 } else { index };
                assert_eq!(orbit.len() as u64, expected_size, "orbit size at ({m},{n})");
            }
            assert_eq!(covered.len() as u64, 1 << (n - 1), "orbits cover at N={n}");
        }
    }

    /// The generator-value vector of chi_m agrees with the sign-vector
    /// picture: evaluating on v multiplies the signs at the support of v.
    #[test]
    fn chi_agrees_with_sign_vector_evaluation() {
        for n in 2..=8u32 {
            for m in 0..=(n / 2) {
                let character = chi(m, n).unwrap();
                let mask = chi_mask(m, n);
                for v in 0u32..(1 << n) {
                    if v.count_ones() % 2 != 0 {
                        continue;
                    }
                    let direct: i8 = if (v & mask).count_ones() % 2 == 0 {
                        1
                    } else {
                        -1
                    };
                    let vector: Vec<bool> = (0..n).map(|i| (v >> i) & 1 == 1).collect();
                    assert_eq!(
                        character.eval(&vector).unwrap(),
                        direct,
                        "evaluation at N={n}, m={m}, v={v:b}"
                    );
                }
            }
        }
    }

    fn show(factors: &[FactorLabel]) -> Vec<String> {
        factors
            .iter()
            .map(|f| match f.split {
                Some(s) => format!("V[{},{}]^{s}", f.mu1, f.mu2),
                None => format!("V[{},{}]", f.mu1, f.mu2),
            })
            .collect()
    }

    #[test]
    fn factor_fixed_cases() {
        assert_eq!(
            show(&composition_factors(1, 3).unwrap()),
            vec!["V[(1),(2)]"]
        );
        assert_eq!(
            show(&composition_factors(2, 4).unwrap()),
            vec!["V[(2),(2)]^I", "V[(2),(2)]^II"]
        );
        assert_eq!(show(&composition_factors(0, 2).unwrap()), vec!["V[(),(2)]"]);
    }

    #[test]
    fn factor_counts() {
        for n in 1..=16u32 {
            for m in 0..=(n / 2) {
                let count = composition_factors(m, n).unwrap().len() as u64;
                let expected = if 2 * m == n {
                    count_q(m) * count_q(n - m) + count_q(m)
                } else {
                    count_q(m) * count_q(n - m)
                };
                assert_eq!(count, expected, "factor count at ({m},{n})");
                for f in composition_factors(m, n).unwrap() {
                    assert_eq!(f.split.is_some(), f.mu1 == f.mu2);
                }
            }
        }
    }

    /// The union over m of the factor labels, canonicalized as triples with
    /// empty nu, is exactly the full-support slice of the parameter set.
    #[test]
    fn factors_cover_the_full_support_slice() {
        for n in 1..=14u32 {
            let mut from_factors: HashSet<Triple> = HashSet::new();
            for m in 0..=(n / 2) {
                for f in composition_factors(m, n).unwrap() {
                    from_factors
                        .insert(Triple::new(Partition::empty(), f.mu1, f.mu2, f.split).unwrap());
                }
            }
            let slice: HashSet<Triple> = enumerate_sigma(n)
                .unwrap()
                .into_iter()
                .filter(|t| t.nu().is_empty())
                .collect();
            assert_eq!(from_factors, slice, "slice at N={n}");
        }
    }

    #[test]
    fn jacobian_fixed_cases() {
        let show =
            |v: Vec<Partition>| -> Vec<String> { v.into_iter().map(|p| p.to_string()).collect() };
        assert_eq!(show(jacobian_factors(6, 2).unwrap()), vec!["(4,2)", "(6)"]);
        assert_eq!(show(jacobian_factors(4, 0).unwrap()), vec!["(4)"]);
        assert_eq!(show(jacobian_factors(6, 1).unwrap()), vec!["(5,1)"]);
        assert!(jacobian_factors(6, 3).is_err());
        assert!(jacobian_factors(5, 1).is_err());
    }

    #[test]
    fn characters_are_well_defined_on_the_sum_zero_subgroup() {
        for n in 2..=8u32 {
            for m in 0..=(n / 2) {
                let character = chi(m, n).unwrap();
                let vectors: Vec<Vec<bool>> = (0u32..(1 << n))
                    .filter(|mask| mask.count_ones() % 2 == 0)
                    .map(|mask| (0..n).map(|i| (mask >> i) & 1 == 1).collect())
                    .collect();
                for u in &vectors {
                    for v in &vectors {
                        let sum: Vec<bool> = u.iter().zip(v).map(|(&a, &b)| a ^ b).collect();
                        assert_eq!(
                            character.eval(&sum).unwrap(),
                            character.eval(u).unwrap() * character.eval(v).unwrap(),
                            "homomorphism at N={n}, m={m}"
                        );
                    }
                }
                // The generator values themselves are recovered.
                for i in 0..(n - 1) as usize {
                    let mut tau = vec![false; n as usize];
                    tau[i] = true;
                    tau[i + 1] = true;
                    assert_eq!(
                        character.eval(&tau).unwrap(),
                        character.values()[i],
                        "tau_{} at N={n}, m={m}",
                        i + 1
                    );
                }
            }
        }
    }
}
