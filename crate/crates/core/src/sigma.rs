//! The dual parameter set: triples (nu; mu1, mu2) of total weight N.
//!
//! A triple consists of a partition nu of some m <= N/2 and two 2-regular
//! partitions mu1, mu2 with 2|nu| + |mu1| + |mu2| = N. For N even, a triple
//! is identified with its mu-swap when |mu1| = |mu2| and mu1 != mu2, and
//! diagonal triples (nu; mu, mu) carry two labels I and II. The canonical
//! representative orders the pair so that |mu1| <= |mu2|, breaking weight
//! ties by reverse-lexicographic comparison.
//!
//! The cardinality of this set equals the orbit census count; that identity
//! is the parametrization check exercised by the verification suite.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::census::Form;
use crate::error::Error;
use crate::partition::{partitions, two_regular_partitions, Partition};

/// A canonical parameter triple. `omega` is present exactly when
/// `mu1 == mu2` (covering both the diagonal case and the empty-mu case).
/// Deserialization re-validates and re-canonicalizes.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTriple")]
pub struct Triple {
    nu: Partition,
    mu1: Partition,
    mu2: Partition,
    omega: Option<Form>,
}

#[derive(Deserialize)]
struct RawTriple {
    nu: Partition,
    mu1: Partition,
    mu2: Partition,
    omega: Option<Form>,
}

impl TryFrom<RawTriple> for Triple {
    type Error = Error;

    fn try_from(raw: RawTriple) -> Result<Self, Error> {
        Triple::new(raw.nu, raw.mu1, raw.mu2, raw.omega)
    }
}

impl Triple {
    /// Builds the canonical representative, swapping (mu1, mu2) if needed.
    /// Errors when a mu is not 2-regular or when the omega tag disagrees
    /// with the diagonal condition mu1 == mu2.
    pub fn new(
        nu: Partition,
        mu1: Partition,
        mu2: Partition,
        omega: Option<Form>,
    ) -> Result<Self, Error> {
        if !mu1.is_two_regular() || !mu2.is_two_regular() {
            return Err(Error::InvalidTriple(format!(
                "mu components must have distinct parts: {mu1}, {mu2}"
            )));
        }
        let swap = match mu1.weight().cmp(&mu2.weight()) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Equal => mu1 > mu2,
            std::cmp::Ordering::Less => false,
        };
        let (mu1, mu2) = if swap { (mu2, mu1) } else { (mu1, mu2) };
        if (mu1 == mu2) != omega.is_some() {
            return Err(Error::InvalidTriple(format!(
                "omega tag must be present iff mu1 = mu2; got ({nu}; {mu1}, {mu2}) with omega {omega:?}"
            )));
        }
        Ok(Self {
            nu,
            mu1,
            mu2,
            omega,
        })
    }

    pub fn nu(&self) -> &Partition {
        &self.nu
    }

    pub fn mu1(&self) -> &Partition {
        &self.mu1
    }

    pub fn mu2(&self) -> &Partition {
        &self.mu2
    }

    pub fn omega(&self) -> Option<Form> {
        self.omega
    }

    /// 2|nu| + |mu1| + |mu2|, the N this triple belongs to.
    pub fn total_weight(&self) -> u32 {
        2 * self.nu.weight() + self.mu1.weight() + self.mu2.weight()
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{},{})", self.nu, self.mu1, self.mu2)?;
        if let Some(form) = self.omega {
            write!(f, "^{form}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The support stratum a triple's matched complex lives on: the level m,
/// plus a form tag only at the top level m = N/2.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SupportLevel {
    pub m: u32,
    pub omega: Option<Form>,
}

/// Support level of a triple inside the parameter set for `n`. The omega
/// tag propagates to the support exactly when |nu| = N/2 (empty mus); a
/// diagonal triple with nonempty mu lives on the untagged level.
pub fn support_level(triple: &Triple, n: u32) -> Result<SupportLevel, Error> {
    if triple.total_weight() != n {
        return Err(Error::InvalidTriple(format!(
            "triple {triple} has total weight {}, not {n}",
            triple.total_weight()
        )));
    }
    let m = triple.nu().weight();
    let omega = if 2 * m == n { triple.omega() } else { None };
    Ok(SupportLevel { m, omega })
}

/// Enumerates the full parameter set for `n`, one canonical representative
/// per identification class, diagonal triples appearing once per label.
/// Ordered by ascending |nu| level, then nu, then ascending |mu1|.
pub fn enumerate_sigma(n: u32) -> Result<Vec<Triple>, Error> {
    if n == 0 {
        return Err(Error::OutOfRange("N must be >= 1".into()));
    }
    let half = n / 2;
    let mut out = Vec::new();
    for m in 0..=half {
        for nu in partitions(m) {
            for k in 0..=(half - m) {
                let k2 = n - 2 * m - k;
                let firsts = two_regular_partitions(k);
                if k < k2 {
                    for mu1 in &firsts {
                        for mu2 in two_regular_partitions(k2) {
                            out.push(Triple::new(nu.clone(), mu1.clone(), mu2, None)?);
                        }
                    }
                } else {
                    // Equal mu weights (N even): unordered pairs once,
                    // diagonal pairs replaced by their two labels.
                    for i in 0..firsts.len() {
                        for j in i..firsts.len() {
                            if i == j {
                                for form in [Form::I, Form::II] {
                                    out.push(Triple::new(
                                        nu.clone(),
                                        firsts[i].clone(),
                                        firsts[j].clone(),
                                        Some(form),
                                    )?);
                                }
                            } else {
                                out.push(Triple::new(
                                    nu.clone(),
                                    firsts[i].clone(),
                                    firsts[j].clone(),
                                    None,
                                )?);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// |Sigma_N|; must equal the orbit census count.
pub fn sigma_count(n: u32) -> Result<u64, Error> {
    Ok(enumerate_sigma(n)?.len() as u64)
}
