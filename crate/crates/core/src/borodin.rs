//! Product formula for `F_c(q)`.
//!
//! For a profile `c` with modulus `t = k + ℓ`, the generating function of
//! cylindric partitions of profile `c` is
//!
//! ```text
//! 1/(q^t;q^t)_∞ · ∏_{1≤i≤j≤k} ∏_{m=1}^{c_i} 1/(q^{m + d(i+1,j) + j - i}; q^t)_∞
//!               · ∏_{2≤j≤i≤k} ∏_{m=1}^{c_i} 1/(q^{t - (m + d(j,i-1) + i - j)}; q^t)_∞
//! ```
//!
//! where `d(a,b) = c_a + … + c_b`, and `d(a,b) = 0` when `a > b`.
//!
//! Both products include the diagonal `j = i`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::cylindric::Profile;
use crate::scalar::Coefficient;
use crate::series::{reciprocal_product, Series};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BorodinError {
    #[error("index {index} outside 1..={rank}")]
    Index { index: usize, rank: usize },
    #[error("profile {0} has level 0")]
    ZeroLevel(Profile),
}

/// The exponent multiset of a product `∏_e 1/(q^e; q^t)_∞`, together with
/// the implicit `1/(q^t;q^t)_∞` factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductSpec {
    modulus: usize,
    // exponent -> multiplicity, each exponent in 1..modulus
    exponents: BTreeMap<usize, usize>,
}

impl ProductSpec {
    /// # Panics
    /// If an exponent lies outside `1..modulus`.
    pub fn new(modulus: usize, exps: impl IntoIterator<Item = usize>) -> Self {
        let mut exponents = BTreeMap::new();
        for e in exps {
            assert!((1..modulus).contains(&e), "exponent {e} outside 1..{modulus}");
            *exponents.entry(e).or_insert(0) += 1;
        }
        Self { modulus, exponents }
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    /// `(exponent, multiplicity)` pairs in increasing exponent order.
    pub fn multiplicities(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.exponents.iter().map(|(&e, &m)| (e, m))
    }

    /// The exponents with repetition, sorted.
    pub fn exponent_list(&self) -> Vec<usize> {
        self.multiplicities().flat_map(|(e, m)| std::iter::repeat_n(e, m)).collect()
    }

    /// Expansion of the product (including `1/(q^t;q^t)_∞`) to `order`.
    pub fn expand<T: Coefficient>(&self, order: usize) -> Series<T> {
        let mut exps = self.exponent_list();
        exps.push(self.modulus);
        reciprocal_product(&exps, self.modulus, order)
    }
}

/// `d(i,j) = c_i + … + c_j` with 1-based indices, `0` when `i > j`.
pub fn dsum(profile: &Profile, i: usize, j: usize) -> Result<usize, BorodinError> {
    let k = profile.rank();
    for index in [i, j] {
        if !(1..=k).contains(&index) {
            return Err(BorodinError::Index { index, rank: k });
        }
    }
    Ok(d(profile, i, j))
}

// Unchecked variant; `i` may be `k + 1` (empty sum).
fn d(profile: &Profile, i: usize, j: usize) -> usize {
    if i > j {
        0
    } else {
        profile.parts()[i - 1..j].iter().sum()
    }
}

/// Exponents of the first family: `m + d(i+1,j) + j - i` for `1 ≤ i ≤ j ≤ k`.
pub fn first_family(profile: &Profile) -> Vec<usize> {
    let k = profile.rank();
    let mut out = Vec::new();
    for i in 1..=k {
        for j in i..=k {
            for m in 1..=profile.part(i) {
                out.push(m + d(profile, i + 1, j) + j - i);
            }
        }
    }
    out
}

/// Exponents of the second family: `t - (m + d(j,i-1) + i - j)` for `2 ≤ j ≤ i ≤ k`.
pub fn second_family(profile: &Profile) -> Vec<usize> {
    let k = profile.rank();
    let t = profile.modulus();
    let mut out = Vec::new();
    for i in 2..=k {
        for j in 2..=i {
            for m in 1..=profile.part(i) {
                out.push(t - (m + d(profile, j, i - 1) + i - j));
            }
        }
    }
    out
}

pub fn exponents(profile: &Profile) -> Result<ProductSpec, BorodinError> {
    if profile.level() == 0 {
        return Err(BorodinError::ZeroLevel(profile.clone()));
    }
    let mut all = first_family(profile);
    all.extend(second_family(profile));
    Ok(ProductSpec::new(profile.modulus(), all))
}

/// `F_c(q)` from the product formula, truncated to `order`.
pub fn product_series<T: Coefficient>(profile: &Profile, order: usize) -> Result<Series<T>, BorodinError> {
    Ok(exponents(profile)?.expand(order))
}
