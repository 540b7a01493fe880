//! Double-sum formulas for the level-4, rank-3 family and the five A2
//! Rogers–Ramanujan identities.
//!
//! All sums share the quadratic form `Q(n1, n2) = n1² + n2² - n1·n2`, which
//! is at least `3·n1²/4`. Blocks whose minimal exponent exceeds the
//! truncation order contribute nothing and are skipped.

use std::fmt;
use std::time::Instant;

use thiserror::Error;

use crate::borodin::product_series;
use crate::cylindric::Profile;
use crate::report::VerificationReport;
use crate::scalar::Coefficient;
use crate::series::{compare, inv_q_factorial, Factors, GaussianTable, Series};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClosedFormError {
    #[error("no closed form for profile {0}; expected one of (4,0,0), (3,1,0), (3,0,1), (2,2,0), (2,1,1)")]
    NotCanonical(Profile),
    #[error("identity index {0} outside 1..=5")]
    Identity(u8),
}

/// One of the five identities, numbered as they are usually displayed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IdentityId(u8);

impl IdentityId {
    pub const ALL: [IdentityId; 5] = [IdentityId(1), IdentityId(2), IdentityId(3), IdentityId(4), IdentityId(5)];

    pub fn new(index: u8) -> Result<Self, ClosedFormError> {
        if (1..=5).contains(&index) {
            Ok(Self(index))
        } else {
            Err(ClosedFormError::Identity(index))
        }
    }

    pub fn index(self) -> u8 {
        self.0
    }

    /// Exponents `e` of the reciprocal product `1/∏ (q^e; q^7)_∞`.
    pub fn product_exponents(self) -> [usize; 6] {
        match self.0 {
            1 => [2, 3, 3, 4, 4, 5],
            2 | 3 => [1, 2, 3, 4, 5, 6],
            4 => [1, 2, 2, 5, 5, 6],
            5 => [1, 1, 3, 4, 6, 6],
            _ => unreachable!(),
        }
    }

    /// The profile whose generating function is this identity's product
    /// divided by `(q;q)_∞`.
    pub fn profile(self) -> Profile {
        Profile::of(match self.0 {
            1 => &[4, 0, 0],
            2 => &[3, 1, 0],
            3 => &[3, 0, 1],
            4 => &[2, 2, 0],
            5 => &[2, 1, 1],
            _ => unreachable!(),
        })
    }

    /// Inverse of [`IdentityId::profile`], up to rotation.
    pub fn for_profile(profile: &Profile) -> Result<Self, ClosedFormError> {
        let canon = profile.canonical();
        Self::ALL
            .into_iter()
            .find(|id| id.profile() == canon)
            .ok_or_else(|| ClosedFormError::NotCanonical(profile.clone()))
    }

    // (exponent correction, top of the Gaussian, upper n2 bound)
    fn sum_shape(self, n1: i64, n2: i64) -> (i64, i64, i64) {
        match self.0 {
            1 => (n1 + n2, 2 * n1, 2 * n1),
            2 => (n2, 2 * n1, 2 * n1),
            3 => (n1, 2 * n1 + 1, 2 * n1 + 1),
            4 => (n2, 2 * n1 + 1, 2 * n1 + 1),
            5 => (0, 2 * n1, 2 * n1),
            _ => unreachable!(),
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    FourZeroZero,
    ThreeOneZero,
    ThreeZeroOne,
    TwoTwoZero,
    TwoOneOne,
}

impl Shape {
    fn of(profile: &Profile) -> Result<Self, ClosedFormError> {
        Ok(match profile.parts() {
            [4, 0, 0] => Shape::FourZeroZero,
            [3, 1, 0] => Shape::ThreeOneZero,
            [3, 0, 1] => Shape::ThreeZeroOne,
            [2, 2, 0] => Shape::TwoTwoZero,
            [2, 1, 1] => Shape::TwoOneOne,
            _ => return Err(ClosedFormError::NotCanonical(profile.clone())),
        })
    }
}

fn quad(n1: i64, n2: i64) -> i64 {
    n1 * n1 + n2 * n2 - n1 * n2
}

/// Largest `n1` whose block can reach exponents `≤ order`: `3·n1²/4 ≤ order`.
fn block_bound(order: usize) -> usize {
    let mut n = 0;
    while 3 * (n + 1) * (n + 1) <= 4 * order {
        n += 1;
    }
    n
}

/// `n1` cutoff for the infinite sums: `2·isqrt(order) + 3`, comfortably
/// above [`block_bound`].
pub fn default_cutoff(order: usize) -> usize {
    2 * order.isqrt() + 3
}

/// Shared tables for evaluating many sum terms at one truncation order.
struct Kernel<T> {
    order: usize,
    gauss: GaussianTable<T>,
    inv_fact: Vec<Series<T>>,
}

impl<T: Coefficient> Kernel<T> {
    fn new(order: usize, max_n1: usize) -> Self {
        let gauss = GaussianTable::truncated(2 * max_n1 + 1, order);
        let inv_fact = (0..=(max_n1 + 1).min(order)).map(|i| inv_q_factorial(Factors::Finite(i), order)).collect();
        Self { order, gauss, inv_fact }
    }

    /// `1/(q;q)_i`; factors above the order are trivial.
    fn inv_fact(&self, i: usize) -> Series<T> {
        let i = i.min(self.order);
        match self.inv_fact.get(i) {
            Some(s) => s.clone(),
            None => inv_q_factorial(Factors::Finite(i), self.order),
        }
    }

    /// `acc += c·q^exp·[top, bottom]`, ignoring exponents beyond the order.
    fn add_gauss(&self, acc: &mut Series<T>, exp: i64, top: i64, bottom: i64, c: &T) {
        debug_assert!(exp >= 0);
        if exp as usize > self.order {
            return;
        }
        self.gauss.add_term_to(acc, top, bottom, c, exp as usize);
    }

    /// Coefficient of `y^{n1}` in `G_c(y,q)`.
    fn g(&self, shape: Shape, n1: usize) -> Series<T> {
        let order = self.order;
        if 3 * n1 * n1 > 4 * order {
            return Series::zero(order);
        }
        let one = T::one();
        let m = n1 as i64;

        let mut main = Series::zero(order);
        for n2 in 0..=2 * m {
            let corr = match shape {
                Shape::FourZeroZero => m + n2,
                Shape::ThreeOneZero => n2,
                Shape::ThreeZeroOne | Shape::TwoTwoZero => m,
                Shape::TwoOneOne => 0,
            };
            self.add_gauss(&mut main, quad(m, n2) + corr, 2 * m, n2, &one);
        }
        let mut out = &main * &self.inv_fact(n1);

        if matches!(shape, Shape::ThreeZeroOne | Shape::TwoTwoZero) && n1 >= 1 {
            let mut second = Series::zero(order);
            for n2 in 0..=2 * m - 2 {
                let q = quad(m, n2);
                match shape {
                    Shape::ThreeZeroOne => self.add_gauss(&mut second, q + 2 * n2, 2 * m - 2, n2, &one),
                    _ => {
                        self.add_gauss(&mut second, q + n2, 2 * m - 2, n2, &one);
                        self.add_gauss(&mut second, q + n2 + m + n2, 2 * m - 2, n2, &one);
                    }
                }
            }
            out = &out + &(&second * &self.inv_fact(n1 - 1));
        }
        out
    }

    /// Left side of identity `id`, summing `n1` up to `cutoff`.
    fn sum_side(&self, id: IdentityId, cutoff: usize) -> Series<T> {
        let one = T::one();
        let mut total = Series::zero(self.order);
        for n1 in 0..=cutoff as i64 {
            let mut block = Series::zero(self.order);
            let (_, _, hi) = id.sum_shape(n1, 0);
            for n2 in 0..=hi {
                let (corr, top, _) = id.sum_shape(n1, n2);
                self.add_gauss(&mut block, quad(n1, n2) + corr, top, n2, &one);
            }
            if !block.is_zero() {
                total = &total + &(&block * &self.inv_fact(n1 as usize));
            }
        }
        total
    }
}

/// Coefficient of `y^{n1}` in the closed form for `G_c(y,q)`, for one of the
/// five canonical level-4 profiles.
pub fn g_closed<T: Coefficient>(profile: &Profile, n1: usize, order: usize) -> Result<Series<T>, ClosedFormError> {
    let shape = Shape::of(profile)?;
    Ok(Kernel::new(order, n1.min(block_bound(order))).g(shape, n1))
}

/// `G_c(y,q)` from the closed forms, truncated to `(order, ydeg)`.
pub fn g_closed_series<T: Coefficient>(
    profile: &Profile,
    order: usize,
    ydeg: usize,
) -> Result<crate::series::BiSeries<T>, ClosedFormError> {
    let shape = Shape::of(profile)?;
    let kernel = Kernel::new(order, ydeg.min(block_bound(order)));
    Ok(crate::series::BiSeries::from_terms((0..=ydeg).map(|n1| kernel.g(shape, n1)).collect()))
}

/// `F_{c,n}(q) = Σ_{n1=0}^{n} g_c(n1) / (q;q)_{n-n1}`: cylindric partitions of
/// profile `c` with every entry at most `n`.
pub fn f_finite<T: Coefficient>(profile: &Profile, n: usize, order: usize) -> Result<Series<T>, ClosedFormError> {
    let shape = Shape::of(profile)?;
    let top = n.min(block_bound(order));
    let kernel = Kernel::new(order, top);
    let mut total = Series::zero(order);
    for n1 in 0..=top {
        let g = kernel.g(shape, n1);
        if g.is_zero() {
            continue;
        }
        total = &total + &(&g * &kernel.inv_fact(n - n1));
    }
    Ok(total)
}

/// The finite forms for `(3,0,1)` and `(2,2,0)` with both sums merged over a
/// common `1/((q;q)_{n-n1} (q;q)_{n1})`, using `(1 - q^{n1})/(q;q)_{n1} = 1/(q;q)_{n1-1}`.
pub fn f_finite_combined<T: Coefficient>(
    profile: &Profile,
    n: usize,
    order: usize,
) -> Result<Series<T>, ClosedFormError> {
    let shape = Shape::of(profile)?;
    if !matches!(shape, Shape::ThreeZeroOne | Shape::TwoTwoZero) {
        return f_finite(profile, n, order);
    }
    let top = n.min(block_bound(order));
    let kernel = Kernel::new(order, top);
    let one = T::one();
    let mut total = Series::zero(order);
    for n1 in 0..=top {
        let m = n1 as i64;
        let mut block = Series::zero(order);
        let mut second = Series::zero(order);
        for n2 in 0..=2 * m {
            let q = quad(m, n2);
            kernel.add_gauss(&mut block, q + m, 2 * m, n2, &one);
            match shape {
                Shape::ThreeZeroOne => kernel.add_gauss(&mut second, q + 2 * n2, 2 * m - 2, n2, &one),
                _ => {
                    kernel.add_gauss(&mut second, q + n2, 2 * m - 2, n2, &one);
                    kernel.add_gauss(&mut second, q + m + 2 * n2, 2 * m - 2, n2, &one);
                }
            }
        }
        if n1 >= 1 {
            second.mul_one_minus_q_pow(n1);
        } else {
            // [-2, n2] vanishes
            debug_assert!(second.is_zero());
        }
        let block = &block + &second;
        total = &total + &(&(&block * &kernel.inv_fact(n1)) * &kernel.inv_fact(n - n1));
    }
    Ok(total)
}

/// Left side of identity `id` to `order`.
pub fn sum_side<T: Coefficient>(id: IdentityId, order: usize) -> Series<T> {
    sum_side_with_cutoff(id, order, default_cutoff(order))
}

/// As [`sum_side`] with an explicit `n1` cutoff.
pub fn sum_side_with_cutoff<T: Coefficient>(id: IdentityId, order: usize, cutoff: usize) -> Series<T> {
    Kernel::new(order, cutoff).sum_side(id, cutoff)
}

/// Right side of identity `id`: `1/∏ (q^e; q^7)_∞` over its exponent list.
pub fn product_side<T: Coefficient>(id: IdentityId, order: usize) -> Series<T> {
    crate::series::reciprocal_product(&id.product_exponents(), 7, order)
}

/// `F_c(q)` as the matching identity's product divided by `(q;q)_∞`.
pub fn corollary_product<T: Coefficient>(profile: &Profile, order: usize) -> Result<Series<T>, ClosedFormError> {
    let id = IdentityId::for_profile(profile)?;
    Ok(&product_side::<T>(id, order) * &inv_q_factorial(Factors::Infinite, order))
}

/// Compares both sides of identity `id` to `order`.
pub fn verify_main<T: Coefficient>(id: IdentityId, order: usize) -> VerificationReport {
    let start = Instant::now();
    let lhs = sum_side::<T>(id, order);
    let rhs = product_side::<T>(id, order);
    compare(&lhs, &rhs).named(format!("main-identity-{id}")).with_elapsed_since(start)
}

/// Checks that the product formula for `F_c(q)` agrees with the matching
/// identity's product over `(q;q)_∞` and with the `n → ∞` limit of the
/// finite closed form.
///
/// The limit is read off `F_{c,order}`: the coefficient of `q^w` in
/// `F_{c,n}` is stable once `n ≥ w`.
pub fn verify_corollary<T: Coefficient>(
    profile: &Profile,
    order: usize,
) -> Result<VerificationReport, ClosedFormError> {
    let start = Instant::now();
    let canon = profile.canonical();
    let borodin = product_series::<T>(&canon, order).expect("level 4");
    let explicit = corollary_product::<T>(&canon, order)?;
    let limit = f_finite::<T>(&canon, order, order)?;
    let parts = [compare(&borodin, &explicit), compare(&borodin, &limit)];
    Ok(VerificationReport::all(format!("corollary-{canon}"), order, &parts).with_elapsed_since(start))
}

/// The third identity's sum side from the `(3,0,1)` limit form, in three steps:
///
/// 1. `Σ g_301(n1)` (the `n → ∞` limit of `F_{(3,0,1),n}` times `(q;q)_∞`),
/// 2. the same with the second sum re-indexed by `(n1, n2) → (n1+1, n2-1)`,
/// 3. both merged by the Gaussian recurrence into `[2n1+1, n2]`.
///
/// Both 1 and 2 are compared against 3.
pub fn verify_transform3<T: Coefficient>(order: usize) -> VerificationReport {
    let start = Instant::now();
    let cutoff = default_cutoff(order);
    let kernel = Kernel::<T>::new(order, cutoff + 1);
    let one = T::one();

    let mut limit_form = Series::zero(order);
    for n1 in 0..=cutoff + 1 {
        limit_form = &limit_form + &kernel.g(Shape::ThreeZeroOne, n1);
    }

    let mut shifted = Series::zero(order);
    for n1 in 0..=cutoff as i64 {
        let mut block = Series::zero(order);
        for n2 in 0..=2 * n1 + 1 {
            let e = quad(n1, n2) + n1;
            kernel.add_gauss(&mut block, e, 2 * n1, n2, &one);
            kernel.add_gauss(&mut block, e + 2 * n1 - n2 + 1, 2 * n1, n2 - 1, &one);
        }
        shifted = &shifted + &(&block * &kernel.inv_fact(n1 as usize));
    }

    let target = kernel.sum_side(IdentityId(3), cutoff);
    let parts = [compare(&limit_form, &target), compare(&shifted, &target)];
    VerificationReport::all("transform-3", order, &parts).with_elapsed_since(start)
}

/// The fourth identity's sum side against the `(2,2,0)` limit form
///
/// ```text
/// Σ q^Q/(q;q)_{n1} (q^{n1}[2n1, n2] + q^{n2}(1 + q^{n1+n2})(1 - q^{n1})[2n1-2, n2])
/// ```
pub fn verify_transform4<T: Coefficient>(order: usize) -> VerificationReport {
    let start = Instant::now();
    let cutoff = default_cutoff(order);
    let kernel = Kernel::<T>::new(order, cutoff);
    let one = T::one();

    let mut combined = Series::zero(order);
    for n1 in 0..=cutoff as i64 {
        let mut first = Series::zero(order);
        let mut second = Series::zero(order);
        for n2 in 0..=2 * n1 {
            let q = quad(n1, n2);
            kernel.add_gauss(&mut first, q + n1, 2 * n1, n2, &one);
            kernel.add_gauss(&mut second, q + n2, 2 * n1 - 2, n2, &one);
            kernel.add_gauss(&mut second, q + n1 + 2 * n2, 2 * n1 - 2, n2, &one);
        }
        if n1 >= 1 {
            second.mul_one_minus_q_pow(n1 as usize);
        }
        combined = &combined + &(&(&first + &second) * &kernel.inv_fact(n1 as usize));
    }

    let target = kernel.sum_side(IdentityId(4), cutoff);
    compare(&combined, &target).named("transform-4").with_elapsed_since(start)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type S = Series<BigInt>;

    fn canon() -> Vec<Profile> {
        IdentityId::ALL.iter().map(|id| id.profile()).collect()
    }

    #[test]
    fn degree_zero_is_one() {
        for p in canon() {
            assert_eq!(g_closed::<BigInt>(&p, 0, 12).unwrap(), S::one(12));
        }
    }

    #[test]
    fn g211_first_coefficients() {
        let g = g_closed::<BigInt>(&Profile::of(&[2, 1, 1]), 1, 3).unwrap();
        assert_eq!(g, S::from_i64s(&[0, 2, 3, 4], 3));
    }

    #[test]
    fn four_zero_zero_shift() {
        for n in 0..=6 {
            let a = g_closed::<BigInt>(&Profile::of(&[4, 0, 0]), n, 40).unwrap();
            let b = g_closed::<BigInt>(&Profile::of(&[3, 1, 0]), n, 40).unwrap().shift(n);
            assert_eq!(a, b, "n = {n}");
        }
    }

    #[test]
    fn non_canonical_rejected() {
        assert!(matches!(g_closed::<BigInt>(&Profile::of(&[0, 1, 3]), 1, 5), Err(ClosedFormError::NotCanonical(_))));
        assert!(f_finite::<BigInt>(&Profile::of(&[1, 1, 1]), 1, 5).is_err());
    }

    #[test]
    fn finite_at_zero_is_one() {
        for p in canon() {
            assert_eq!(f_finite::<BigInt>(&p, 0, 10).unwrap(), S::one(10));
        }
    }

    #[test]
    fn combined_forms_agree() {
        for p in [Profile::of(&[3, 0, 1]), Profile::of(&[2, 2, 0])] {
            for n in 0..=3 {
                assert_eq!(
                    f_finite::<BigInt>(&p, n, 10).unwrap(),
                    f_finite_combined::<BigInt>(&p, n, 10).unwrap(),
                    "{p} n={n}"
                );
            }
        }
    }

    #[test]
    fn constant_terms() {
        for id in IdentityId::ALL {
            assert_eq!(sum_side::<BigInt>(id, 5).coeff(0), &BigInt::from(1));
            assert_eq!(product_side::<BigInt>(id, 5).coeff(0), &BigInt::from(1));
        }
    }

    #[test]
    fn q_one_coefficients() {
        let five = IdentityId::new(5).unwrap();
        assert_eq!(sum_side::<BigInt>(five, 3).coeff(1), &BigInt::from(2));
        assert_eq!(product_side::<BigInt>(five, 3).coeff(1), &BigInt::from(2));
        assert_eq!(product_side::<BigInt>(IdentityId::new(4).unwrap(), 3).coeff(1), &BigInt::from(1));
    }

    #[test]
    fn identity_index_range() {
        assert!(IdentityId::new(0).is_err());
        assert!(IdentityId::new(6).is_err());
        assert_eq!(IdentityId::for_profile(&Profile::of(&[0, 2, 2])).unwrap().index(), 4);
    }

    #[test]
    fn order_zero_checks() {
        for id in IdentityId::ALL {
            assert!(verify_main::<BigInt>(id, 0).is_match());
        }
        assert!(verify_transform3::<BigInt>(0).is_match());
        assert!(verify_transform4::<BigInt>(0).is_match());
    }

    #[test]
    fn block_bound_is_tight() {
        for order in 0..200 {
            let b = block_bound(order);
            assert!(3 * b * b <= 4 * order);
            assert!(3 * (b + 1) * (b + 1) > 4 * order);
            assert!(default_cutoff(order) >= b);
        }
    }
}
