//! Exact q-series toolkit for cylindric partitions.
//!
//! The crate enumerates cylindric partitions, expands the product formula
//! for their generating functions, solves the inclusion–exclusion
//! functional equations they satisfy, and checks the five A2
//! Rogers–Ramanujan identities (and their finite forms) coefficient by
//! coefficient.
//!
//! Series types are generic over a [`Coefficient`] ring. The aliases below
//! fix the arbitrary-precision integer instance used for verification.

pub mod borodin;
pub mod cli;
pub mod closedforms;
pub mod cylindric;
pub mod funceq;
pub mod report;
pub mod scalar;
pub mod series;

pub use cylindric::{CylindricPartition, Profile};
pub use report::VerificationReport;
pub use scalar::Coefficient;

/// Truncated power series in `q` with big-integer coefficients.
pub type QSeries = series::Series<num_bigint::BigInt>;

/// Polynomial in `y` with [`QSeries`] coefficients.
pub type YSeries = series::BiSeries<num_bigint::BigInt>;

/// Machine-integer series; overflows past a few hundred terms of the
/// products used here.
pub type QSeries64 = series::Series<i64>;

/// Series over the rationals.
pub type RationalSeries = series::Series<num_rational::BigRational>;

/// Solved `g_c(n)` table with big-integer coefficients.
pub type GTable = funceq::GTable<num_bigint::BigInt>;
