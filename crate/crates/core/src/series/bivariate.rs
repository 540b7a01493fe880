use std::ops::{Add, Sub};

use crate::scalar::{sign, Coefficient};

use super::{inv_q_factorial, Factors, Series};

/// A polynomial in `y` of degree at most `ydeg` whose coefficients are
/// [`Series`] in `q`, all sharing one truncation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries<T> {
    // len == ydeg + 1; every term has the same order
    terms: Vec<Series<T>>,
}

impl<T: Coefficient> BiSeries<T> {
    pub fn zero(order: usize, ydeg: usize) -> Self {
        Self { terms: vec![Series::zero(order); ydeg + 1] }
    }

    pub fn one(order: usize, ydeg: usize) -> Self {
        let mut s = Self::zero(order, ydeg);
        s.terms[0] = Series::one(order);
        s
    }

    /// # Panics
    /// If `terms` is empty or the terms disagree on their order.
    pub fn from_terms(terms: Vec<Series<T>>) -> Self {
        assert!(!terms.is_empty(), "need at least the y^0 term");
        let order = terms[0].order();
        assert!(terms.iter().all(|t| t.order() == order), "all terms must share one q-order");
        Self { terms }
    }

    pub fn order(&self) -> usize {
        self.terms[0].order()
    }

    pub fn ydeg(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn terms(&self) -> &[Series<T>] {
        &self.terms
    }

    /// Coefficient of `y^m`.
    pub fn term(&self, m: usize) -> &Series<T> {
        &self.terms[m]
    }

    pub(crate) fn term_mut(&mut self, m: usize) -> &mut Series<T> {
        &mut self.terms[m]
    }

    pub fn truncated(&self, order: usize, ydeg: usize) -> Self {
        let keep = ydeg.min(self.ydeg()) + 1;
        Self { terms: self.terms[..keep].iter().map(|t| t.truncated(order)).collect() }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self { terms: self.terms.iter().map(|t| t.scale(c)).collect() }
    }

    /// Substitutes `y -> y·q^j`: the `y^m` term is multiplied by `q^{jm}`.
    pub fn ysubst(&self, j: usize) -> Self {
        Self { terms: self.terms.iter().enumerate().map(|(m, t)| t.shift(j * m)).collect() }
    }

    /// Multiplies by `∏_{i=1}^{m} (1 - y q^i)`, dropping powers of `y` above `ydeg`.
    pub fn ymul_poch(&self, m: usize) -> Self {
        let mut out = self.clone();
        let minus_one = -T::one();
        for i in 1..=m {
            for d in (1..=out.ydeg()).rev() {
                let (lo, hi) = out.terms.split_at_mut(d);
                hi[0].add_scaled_shifted(&lo[d - 1], &minus_one, i);
            }
        }
        out
    }

    /// Multiplies by `1/(1 - y q^j) = Σ_r y^r q^{jr}`, dropping powers of `y` above `ydeg`.
    pub fn ymul_geom(&self, j: usize) -> Self {
        let mut out = self.clone();
        let one = T::one();
        for d in 1..=out.ydeg() {
            let (lo, hi) = out.terms.split_at_mut(d);
            hi[0].add_scaled_shifted(&lo[d - 1], &one, j);
        }
        out
    }

    /// Product as polynomials in `y`, truncated to the smaller order and y-degree.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let ydeg = self.ydeg().min(other.ydeg());
        let mut out = Self::zero(order, ydeg);
        for (a, ta) in self.terms[..=ydeg].iter().enumerate() {
            if ta.is_zero() {
                continue;
            }
            for (b, tb) in other.terms[..=ydeg - a].iter().enumerate() {
                let prod = ta * tb;
                out.terms[a + b] = &out.terms[a + b] + &prod;
            }
        }
        out
    }

    /// Sets `y = 1` (sums all terms).
    pub fn at_y_one(&self) -> Series<T> {
        self.prefix_sum(self.ydeg())
    }

    /// `Σ_{m=0}^{n} [y^m]`, i.e. the part with `y`-degree at most `n`, at `y = 1`.
    pub fn prefix_sum(&self, n: usize) -> Series<T> {
        let mut acc = Series::zero(self.order());
        for t in &self.terms[..=n.min(self.ydeg())] {
            acc = &acc + t;
        }
        acc
    }

    /// Expansion of `(yq;q)_∞ = Σ_r (-1)^r q^{r(r+1)/2} y^r / (q;q)_r`.
    pub fn yq_poch_infinite(order: usize, ydeg: usize) -> Self {
        let terms = (0..=ydeg)
            .map(|r| inv_q_factorial::<T>(Factors::Finite(r), order).shift(r * (r + 1) / 2).scale(&sign(r)))
            .collect();
        Self { terms }
    }

    /// Expansion of `1/(yq;q)_∞ = Σ_r y^r q^r / (q;q)_r`.
    pub fn yq_poch_infinite_inverse(order: usize, ydeg: usize) -> Self {
        let terms = (0..=ydeg).map(|r| inv_q_factorial::<T>(Factors::Finite(r), order).shift(r)).collect();
        Self { terms }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Series<T>, &Series<T>) -> Series<T>) -> Self {
        let ydeg = self.ydeg().min(other.ydeg());
        Self { terms: self.terms[..=ydeg].iter().zip(&other.terms[..=ydeg]).map(|(a, b)| f(a, b)).collect() }
    }
}

impl<T: Coefficient> Add for &BiSeries<T> {
    type Output = BiSeries<T>;
    fn add(self, rhs: Self) -> BiSeries<T> {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<T: Coefficient> Sub for &BiSeries<T> {
    type Output = BiSeries<T>;
    fn sub(self, rhs: Self) -> BiSeries<T> {
        self.zip_with(rhs, |a, b| a - b)
    }
}
