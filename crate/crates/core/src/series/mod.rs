//! Exact truncated power series in `q`, q-Pochhammer products, Gaussian
//! polynomials, and series graded by a second variable `y`.

mod bivariate;
mod gaussian;
mod univariate;

pub use bivariate::BiSeries;
pub use gaussian::{gaussian, GaussianTable};
pub use univariate::{compare, eq_upto, Series};

use thiserror::Error;

use crate::scalar::Coefficient;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series with constant term {constant} is not invertible in the truncated ring")]
    NotInvertible { constant: String },
    #[error("comparison requested to order {requested}, but operands are only known to order {available}")]
    OrderExceeded { requested: usize, available: usize },
    #[error("q-Pochhammer parameters must be positive (got start {start}, step {step})")]
    Domain { start: i64, step: i64 },
}

/// Number of factors in a q-Pochhammer product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factors {
    Finite(usize),
    Infinite,
}

/// `∏_{i=0}^{n-1} (1 - q^{start + i·step})` truncated to `order`.
///
/// The infinite product stops at the first factor whose exponent exceeds
/// `order`, since every later factor is `1` modulo `q^{order+1}`.
pub fn poch<T: Coefficient>(start: i64, step: i64, n: Factors, order: usize) -> Result<Series<T>, SeriesError> {
    if start <= 0 || step <= 0 {
        return Err(SeriesError::Domain { start, step });
    }
    let (start, step) = (start as usize, step as usize);
    let mut out = Series::one(order);
    let mut i = 0usize;
    loop {
        if let Factors::Finite(n) = n {
            if i >= n {
                break;
            }
        }
        let e = start + i * step;
        if e > order {
            break;
        }
        out.mul_one_minus_q_pow(e);
        i += 1;
    }
    Ok(out)
}

/// `(q;q)_n`, or `(q;q)_∞` for [`Factors::Infinite`].
pub fn q_factorial<T: Coefficient>(n: Factors, order: usize) -> Series<T> {
    poch(1, 1, n, order).expect("positive parameters")
}

/// `1/(q;q)_n` computed by repeated division by `1 - q^i`.
pub fn inv_q_factorial<T: Coefficient>(n: Factors, order: usize) -> Series<T> {
    let mut out = Series::one(order);
    let last = match n {
        Factors::Finite(n) => n.min(order),
        Factors::Infinite => order,
    };
    for i in 1..=last {
        out.div_one_minus_q_pow(i);
    }
    out
}

/// `1 / ∏_{e in exps} (q^e; q^modulus)_∞` truncated to `order`.
///
/// Exponents are taken with multiplicity.
pub fn reciprocal_product<T: Coefficient>(exps: &[usize], modulus: usize, order: usize) -> Series<T> {
    assert!(modulus >= 1);
    let mut out = Series::one(order);
    for &e in exps {
        assert!(e >= 1, "exponent 0 makes the product vanish");
        let mut a = e;
        while a <= order {
            out.div_one_minus_q_pow(a);
            a += modulus;
        }
    }
    out
}
