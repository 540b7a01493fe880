use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::report::VerificationReport;
use crate::scalar::Coefficient;

use super::SeriesError;

/// A power series in `q` known exactly up to and including `q^order`.
///
/// Binary operations truncate to the smaller of the two orders, so a result
/// never claims coefficients that one of its operands did not determine.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series<T> {
    // len == order + 1, never empty
    coeffs: Vec<T>,
}

impl<T: Coefficient> Series<T> {
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![T::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, T::one(), order)
    }

    /// `c·q^exp`, which is the zero series when `exp > order`.
    pub fn monomial(exp: usize, c: T, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c;
        }
        s
    }

    /// Takes ownership of `coeffs`; the order is `coeffs.len() - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least its constant term");
        Self { coeffs }
    }

    /// Builds a series of the given order from small integers, zero-padding.
    pub fn from_i64s(values: &[i64], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (c, v) in s.coeffs.iter_mut().zip(values) {
            *c = T::from_i64(*v).expect("small integer fits the coefficient type");
        }
        s
    }

    /// The polynomial `Σ_{e in exps} q^e` (with multiplicity), truncated.
    pub fn from_exponents(exps: impl IntoIterator<Item = usize>, order: usize) -> Self {
        let mut s = Self::zero(order);
        for e in exps {
            if e <= order {
                s.coeffs[e] += T::one();
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub(crate) fn coeffs_mut(&mut self) -> &mut [T] {
        &mut self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `q^exp`, or `None` beyond the truncation order.
    pub fn get(&self, exp: usize) -> Option<&T> {
        self.coeffs.get(exp)
    }

    /// Coefficient of `q^exp`.
    ///
    /// # Panics
    /// If `exp` exceeds the order.
    pub fn coeff(&self, exp: usize) -> &T {
        &self.coeffs[exp]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Drops coefficients above `order`. Orders above the current one are
    /// clamped: truncation never invents coefficients.
    pub fn truncated(&self, order: usize) -> Self {
        let keep = order.min(self.order()) + 1;
        Self { coeffs: self.coeffs[..keep].to_vec() }
    }

    /// Reinterprets an exact polynomial at a new order, zero-padding or
    /// truncating as needed. Only sound when every coefficient above the
    /// current order is known to vanish (Gaussian polynomials, finite products).
    pub fn polynomial_at(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, T::zero());
        Self { coeffs }
    }

    /// Value at `q = 1` of the truncated polynomial.
    pub fn sum_coeffs(&self) -> T {
        let mut acc = T::zero();
        for c in &self.coeffs {
            acc += c;
        }
        acc
    }

    pub fn scale(&self, c: &T) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x.clone() * c).collect() }
    }

    /// Multiplies by `q^shift`, keeping the order.
    pub fn shift(&self, shift: usize) -> Self {
        let mut out = Self::zero(self.order());
        if shift <= self.order() {
            for (i, c) in self.coeffs[..=self.order() - shift].iter().enumerate() {
                out.coeffs[i + shift] = c.clone();
            }
        }
        out
    }

    /// `self += c·q^shift·other`, truncated to `self`'s order.
    ///
    /// # Panics
    /// If `other` is known to a lower order than the part of `self` it touches.
    pub fn add_scaled_shifted(&mut self, other: &Self, c: &T, shift: usize) {
        let order = self.order();
        if shift > order {
            return;
        }
        let span = order - shift;
        assert!(
            other.order() >= span,
            "operand order {} cannot determine exponents up to {}",
            other.order() + shift,
            order
        );
        for (i, x) in other.coeffs[..=span].iter().enumerate() {
            if !x.is_zero() {
                self.coeffs[i + shift] += x.clone() * c;
            }
        }
    }

    /// Multiplies by `1 - q^a` in place.
    pub fn mul_one_minus_q_pow(&mut self, a: usize) {
        assert!(a >= 1, "factor 1 - q^0 annihilates");
        for i in (a..self.coeffs.len()).rev() {
            let prev = self.coeffs[i - a].clone();
            self.coeffs[i] -= prev;
        }
    }

    /// Divides by `1 - q^a` in place (multiplication by `Σ q^{ar}`).
    pub fn div_one_minus_q_pow(&mut self, a: usize) {
        assert!(a >= 1, "1 - q^0 is not invertible");
        for i in a..self.coeffs.len() {
            let prev = self.coeffs[i - a].clone();
            self.coeffs[i] += prev;
        }
    }

    /// Multiplicative inverse in the truncated ring.
    ///
    /// Requires the constant term to be a unit of the coefficient ring
    /// (`±1` over the integers).
    pub fn inv(&self) -> Result<Self, SeriesError> {
        let c0_inv = self.coeffs[0]
            .unit_inverse()
            .ok_or_else(|| SeriesError::NotInvertible { constant: self.coeffs[0].to_string() })?;
        let n = self.order();
        let mut out = Vec::with_capacity(n + 1);
        out.push(c0_inv.clone());
        for m in 1..=n {
            let mut acc = T::zero();
            for k in 1..=m {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc += a.clone() * &out[m - k];
                }
            }
            out.push(-(acc * &c0_inv));
        }
        Ok(Self { coeffs: out })
    }

    pub(crate) fn mul_ref(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![T::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a.clone() * b;
                }
            }
        }
        Self { coeffs: out }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        let order = self.order().min(other.order());
        Self { coeffs: self.coeffs[..=order].iter().zip(&other.coeffs[..=order]).map(|(a, b)| f(a, b)).collect() }
    }
}

/// Compares `a` and `b` coefficientwise on exponents `0..=order`.
pub fn eq_upto<T: Coefficient>(a: &Series<T>, b: &Series<T>, order: usize) -> Result<VerificationReport, SeriesError> {
    let available = a.order().min(b.order());
    if order > available {
        return Err(SeriesError::OrderExceeded { requested: order, available });
    }
    let first = (0..=order).find(|&i| a.coeffs[i] != b.coeffs[i]);
    Ok(VerificationReport::new("", order, first))
}

/// Compares `a` and `b` on every exponent both of them determine.
pub fn compare<T: Coefficient>(a: &Series<T>, b: &Series<T>) -> VerificationReport {
    let order = a.order().min(b.order());
    eq_upto(a, b, order).expect("order is within both operands")
}

impl<T: Coefficient> Add for &Series<T> {
    type Output = Series<T>;
    fn add(self, rhs: Self) -> Series<T> {
        self.zip_with(rhs, |a, b| a.clone() + b)
    }
}

impl<T: Coefficient> Sub for &Series<T> {
    type Output = Series<T>;
    fn sub(self, rhs: Self) -> Series<T> {
        self.zip_with(rhs, |a, b| a.clone() - b)
    }
}

impl<T: Coefficient> Mul for &Series<T> {
    type Output = Series<T>;
    fn mul(self, rhs: Self) -> Series<T> {
        self.mul_ref(rhs)
    }
}

impl<T: Coefficient> Neg for &Series<T> {
    type Output = Series<T>;
    fn neg(self) -> Series<T> {
        Series { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl<T: Coefficient> $tr for Series<T> {
            type Output = Series<T>;
            fn $m(self, rhs: Self) -> Series<T> {
                (&self).$m(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<T: Coefficient> fmt::Display for Series<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})q")?,
                _ => write!(f, "({c})q^{e}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}
