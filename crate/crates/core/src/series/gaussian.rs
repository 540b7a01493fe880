use crate::scalar::Coefficient;

use super::Series;

/// Rows of Gaussian polynomials `[n, k]` for `0 ≤ k ≤ n ≤ max_n`, built by
/// `[n, k] = [n-1, k] + q^{n-k} [n-1, k-1]`.
///
/// With a truncation order every entry is cut at that order; without one the
/// entries are exact polynomials of degree `k(n-k)`.
#[derive(Clone, Debug)]
pub struct GaussianTable<T> {
    rows: Vec<Vec<Vec<T>>>,
    order: Option<usize>,
}

impl<T: Coefficient> GaussianTable<T> {
    pub fn exact(max_n: usize) -> Self {
        Self::build(max_n, None)
    }

    pub fn truncated(max_n: usize, order: usize) -> Self {
        Self::build(max_n, Some(order))
    }

    fn build(max_n: usize, order: Option<usize>) -> Self {
        let cap = |len: usize| order.map_or(len, |o| len.min(o + 1));
        let mut rows: Vec<Vec<Vec<T>>> = vec![vec![vec![T::one()]]];
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            for k in 0..=n {
                let len = cap(k * (n - k) + 1);
                let mut poly = vec![T::zero(); len];
                if k < n {
                    for (i, c) in prev[k].iter().enumerate().take(len) {
                        poly[i] += c;
                    }
                }
                if k > 0 {
                    let shift = n - k;
                    for (i, c) in prev[k - 1].iter().enumerate() {
                        if i + shift >= len {
                            break;
                        }
                        poly[i + shift] += c;
                    }
                }
                row.push(poly);
            }
            rows.push(row);
        }
        Self { rows, order }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Raw coefficients of `[n, k]`; empty when out of range.
    pub fn coeffs(&self, n: i64, k: i64) -> &[T] {
        if n < 0 || k < 0 || k > n {
            return &[];
        }
        let (n, k) = (n as usize, k as usize);
        assert!(n <= self.max_n(), "table built only up to n = {}", self.max_n());
        &self.rows[n][k]
    }

    /// `target += c · q^shift · [n, k]`, truncated to `target`'s order.
    pub fn add_term_to(&self, target: &mut Series<T>, n: i64, k: i64, c: &T, shift: usize) {
        let poly = self.coeffs(n, k);
        let order = target.order();
        if shift > order || poly.is_empty() {
            return;
        }
        if let Some(o) = self.order {
            assert!(o >= order - shift, "table truncation {o} too low for target order {order}");
        }
        let limit = (order - shift + 1).min(poly.len());
        let out = target.coeffs_mut();
        for (i, x) in poly[..limit].iter().enumerate() {
            if !x.is_zero() {
                out[i + shift] += x.clone() * c;
            }
        }
    }

    /// `[n, k]` as a series of the given order.
    pub fn series(&self, n: i64, k: i64, order: usize) -> Series<T> {
        let mut out = Series::zero(order);
        self.add_term_to(&mut out, n, k, &T::one(), 0);
        out
    }
}

/// The Gaussian polynomial `[n, k]_q` as an exact polynomial whose order is
/// its degree `k(n-k)`. Out-of-range arguments give the zero polynomial.
pub fn gaussian<T: Coefficient>(n: i64, k: i64) -> Series<T> {
    if n < 0 || k < 0 || k > n {
        return Series::zero(0);
    }
    let table = GaussianTable::exact(n as usize);
    Series::from_coeffs(table.coeffs(n, k).to_vec())
}
