//! Naive reference implementations shared by the integration tests.
//!
//! Everything here works on plain `Vec<i128>` coefficient lists and avoids
//! the library's series code, so agreement is meaningful.
#![allow(dead_code)]

use cylrr::QSeries;
use num_traits::ToPrimitive;

pub type Poly = Vec<i128>;

pub fn to_vec(s: &QSeries) -> Poly {
    s.coeffs().iter().map(|c| c.to_i128().expect("fits in i128")).collect()
}

pub fn one(order: usize) -> Poly {
    let mut p = vec![0; order + 1];
    p[0] = 1;
    p
}

/// Schoolbook product truncated to `order`.
pub fn mul(a: &[i128], b: &[i128], order: usize) -> Poly {
    let mut out = vec![0; order + 1];
    for (i, x) in a.iter().enumerate().take(order + 1) {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `1/(1 - q^e)` written out as `1 + q^e + q^{2e} + …`.
pub fn geometric(e: usize, order: usize) -> Poly {
    assert!(e > 0);
    let mut p = vec![0; order + 1];
    for k in (0..=order).step_by(e) {
        p[k] = 1;
    }
    p
}

/// `∏ 1/(q^e; q^t)_∞` over `exps`, one geometric factor at a time.
pub fn reciprocal_product(exps: &[usize], t: usize, order: usize) -> Poly {
    let mut acc = one(order);
    for &e in exps {
        let mut f = e;
        while f <= order {
            acc = mul(&acc, &geometric(f, order), order);
            f += t;
        }
    }
    acc
}

/// `(q;q)_n` as an exact polynomial.
pub fn qfact(n: usize) -> Poly {
    let mut acc = vec![1];
    for i in 1..=n {
        let mut factor = vec![0; i + 1];
        factor[0] = 1;
        factor[i] = -1;
        acc = mul(&acc, &factor, acc.len() + i - 1);
    }
    acc
}

/// Exact polynomial division; panics on a nonzero remainder.
pub fn div_exact(num: &[i128], den: &[i128]) -> Poly {
    let den = trim(den);
    let mut rem = trim(num);
    assert_eq!(den[0].abs(), 1, "monic-at-zero divisor");
    if rem.len() < den.len() {
        assert!(rem.iter().all(|&c| c == 0));
        return vec![0];
    }
    let mut quot = vec![0; rem.len() - den.len() + 1];
    for i in 0..quot.len() {
        let c = rem[i] / den[0];
        quot[i] = c;
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "division left a remainder");
    quot
}

fn trim(p: &[i128]) -> Poly {
    let mut v = p.to_vec();
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

/// `[n, k]` as `(q;q)_n / ((q;q)_k (q;q)_{n-k})`, zero outside `0 ≤ k ≤ n`.
pub fn gauss(n: i64, k: i64) -> Poly {
    if n < 0 || k < 0 || k > n {
        return vec![0];
    }
    let (n, k) = (n as usize, k as usize);
    let den = mul(&qfact(k), &qfact(n - k), n * n);
    trim(&div_exact(&qfact(n), &den))
}

/// `1/(q;q)_n` to `order` via geometric factors.
pub fn inv_qfact(n: usize, order: usize) -> Poly {
    let mut acc = one(order);
    for i in 1..=n.min(order) {
        acc = mul(&acc, &geometric(i, order), order);
    }
    acc
}

pub fn add_shifted(acc: &mut [i128], p: &[i128], shift: usize) {
    for (i, c) in p.iter().enumerate() {
        if let Some(slot) = acc.get_mut(shift + i) {
            *slot += c;
        }
    }
}

/// Number of partitions of `n` with parts at most `max`, by direct recursion.
pub fn partitions_bounded(n: usize, max: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    (1..=max.min(n)).map(|part| partitions_bounded(n - part, part)).sum()
}

/// Sum side of an identity given as `(exponent correction, Gaussian top)`
/// per `(n1, n2)`, summing `n2` over `0..=n2_max(n1)`.
pub fn double_sum(order: usize, corr_top: impl Fn(i64, i64) -> (i64, i64), n2_max: impl Fn(i64) -> i64) -> Poly {
    let mut total = vec![0; order + 1];
    let mut n1 = 0i64;
    // Q(n1, n2) ≥ 3n1²/4, so later blocks cannot reach the order.
    while 3 * n1 * n1 <= 4 * order as i64 {
        let mut block = vec![0; order + 1];
        for n2 in 0..=n2_max(n1) {
            let (corr, top) = corr_top(n1, n2);
            let e = n1 * n1 + n2 * n2 - n1 * n2 + corr;
            if e <= order as i64 {
                add_shifted(&mut block, &gauss(top, n2), e as usize);
            }
        }
        let term = mul(&block, &inv_qfact(n1 as usize, order), order);
        add_shifted(&mut total, &term, 0);
        n1 += 1;
    }
    total
}

/// `(exponent correction, Gaussian top)` for identity `id` in `1..=5`.
pub fn identity_shape(id: u8) -> impl Fn(i64, i64) -> (i64, i64) {
    move |n1, n2| match id {
        1 => (n1 + n2, 2 * n1),
        2 => (n2, 2 * n1),
        3 => (n1, 2 * n1 + 1),
        4 => (n2, 2 * n1 + 1),
        5 => (0, 2 * n1),
        _ => panic!("identity {id}"),
    }
}

pub const IDENTITY_PRODUCTS: [[usize; 6]; 5] =
    [[2, 3, 3, 4, 4, 5], [1, 2, 3, 4, 5, 6], [1, 2, 3, 4, 5, 6], [1, 2, 2, 5, 5, 6], [1, 1, 3, 4, 6, 6]];

/// Profiles in the same order as [`IDENTITY_PRODUCTS`].
pub const IDENTITY_PROFILES: [[usize; 3]; 5] = [[4, 0, 0], [3, 1, 0], [3, 0, 1], [2, 2, 0], [2, 1, 1]];

/// Checks the cylindric conditions directly from the definition: with
/// `λ^{(k+1)} = λ^{(1)}`, `λ^{(i)}_j ≥ λ^{(i+1)}_{j + c_{i+1}}` for all `j`.
pub fn is_cylindric(profile: &[usize], rows: &[Vec<u32>]) -> bool {
    let k = profile.len();
    let at = |row: &Vec<u32>, j: usize| row.get(j).copied().unwrap_or(0);
    for row in rows {
        if row.windows(2).any(|w| w[0] < w[1]) || row.contains(&0) {
            return false;
        }
    }
    for i in 0..k {
        let next = (i + 1) % k;
        let shift = profile[next];
        let len = rows[i].len().max(rows[next].len()) + shift + 1;
        for j in 0..len {
            if at(&rows[i], j) < at(&rows[next], j + shift) {
                return false;
            }
        }
    }
    true
}
