//! Inclusion–exclusion functional equations for `F_c(y,q)` and
//! `G_c(y,q) = (yq;q)_∞ F_c(y,q)`, and the degree-by-degree solver for the
//! level-4, rank-3 system.
//!
//! Peeling the largest entry off every row indexed by a nonempty
//! `J ⊆ I_c = {i : c_i > 0}` relates profile `c` to the profile `c(J)`:
//!
//! ```text
//! F_c(y)  = Σ_J (-1)^{|J|-1} F_{c(J)}(y q^{|J|}) / (1 - y q^{|J|})
//! G_c(y)  = Σ_J (-1)^{|J|-1} (yq;q)_{|J|-1} G_{c(J)}(y q^{|J|})
//! ```
//!
//! Profiles reached through `c(J)` are looked up by their canonical rotation.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::cylindric::Profile;
use crate::scalar::{sign, Coefficient};
use crate::series::{BiSeries, Series};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FuncEqError {
    #[error("no series available for profile {0}")]
    MissingProfile(Profile),
    #[error(
        "series for profile {profile} is known to (order {order}, y-degree {ydeg}), need ({need_order}, {need_ydeg})"
    )]
    Insufficient { profile: Profile, order: usize, ydeg: usize, need_order: usize, need_ydeg: usize },
    #[error("the subset J must be nonempty")]
    EmptySubset,
    #[error("index {index} is not in the support of {profile}")]
    NotInSupport { index: usize, profile: Profile },
}

/// `I_c`: the 1-based positions of the positive parts of a profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportSet(Vec<usize>);

impl SupportSet {
    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    /// All nonempty subsets, each sorted, ordered by bitmask.
    pub fn nonempty_subsets(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        (1u64..1 << n).map(|mask| (0..n).filter(|b| mask >> b & 1 == 1).map(|b| self.0[b]).collect()).collect()
    }
}

pub fn support(profile: &Profile) -> SupportSet {
    SupportSet((1..=profile.rank()).filter(|&i| profile.part(i) > 0).collect())
}

/// The profile `c(J)`: a part loses one when its row is in `J` and the
/// cyclically previous row is not, and gains one in the opposite case.
pub fn transform(profile: &Profile, subset: &[usize]) -> Result<Profile, FuncEqError> {
    if subset.is_empty() {
        return Err(FuncEqError::EmptySubset);
    }
    let supp = support(profile);
    if let Some(&index) = subset.iter().find(|&&i| !supp.contains(i)) {
        return Err(FuncEqError::NotInSupport { index, profile: profile.clone() });
    }
    let k = profile.rank();
    let in_j = |i: usize| subset.contains(&i);
    let parts = (1..=k)
        .map(|i| {
            let prev = if i == 1 { k } else { i - 1 };
            match (in_j(i), in_j(prev)) {
                (true, false) => profile.part(i) - 1,
                (false, true) => profile.part(i) + 1,
                _ => profile.part(i),
            }
        })
        .collect();
    Ok(Profile::new(parts).expect("same rank"))
}

/// Source of `F` or `G` series keyed by canonical profile.
pub trait Provider<T> {
    fn lookup(&self, canonical: &Profile) -> Option<&BiSeries<T>>;
}

impl<T> Provider<T> for HashMap<Profile, BiSeries<T>> {
    fn lookup(&self, canonical: &Profile) -> Option<&BiSeries<T>> {
        self.get(canonical)
    }
}

impl<T> Provider<T> for BTreeMap<Profile, BiSeries<T>> {
    fn lookup(&self, canonical: &Profile) -> Option<&BiSeries<T>> {
        self.get(canonical)
    }
}

fn fetch<T: Coefficient>(
    provider: &impl Provider<T>,
    profile: &Profile,
    order: usize,
    ydeg: usize,
) -> Result<BiSeries<T>, FuncEqError> {
    let canon = profile.canonical();
    let s = provider.lookup(&canon).ok_or_else(|| FuncEqError::MissingProfile(canon.clone()))?;
    if s.order() < order || s.ydeg() < ydeg {
        return Err(FuncEqError::Insufficient {
            profile: canon,
            order: s.order(),
            ydeg: s.ydeg(),
            need_order: order,
            need_ydeg: ydeg,
        });
    }
    Ok(s.truncated(order, ydeg))
}

fn alternating_sum<T: Coefficient>(
    profile: &Profile,
    provider: &impl Provider<T>,
    order: usize,
    ydeg: usize,
    term: impl Fn(BiSeries<T>, usize) -> BiSeries<T>,
) -> Result<BiSeries<T>, FuncEqError> {
    let mut acc = BiSeries::zero(order, ydeg);
    for subset in support(profile).nonempty_subsets() {
        let size = subset.len();
        let reduced = transform(profile, &subset)?;
        let s = fetch(provider, &reduced, order, ydeg)?.ysubst(size);
        acc = &acc + &term(s, size).scale(&sign::<T>(size - 1));
    }
    Ok(acc)
}

/// Right-hand side of the inclusion–exclusion equation for `F_c(y,q)`.
pub fn inex_rhs<T: Coefficient>(
    profile: &Profile,
    provider: &impl Provider<T>,
    order: usize,
    ydeg: usize,
) -> Result<BiSeries<T>, FuncEqError> {
    alternating_sum(profile, provider, order, ydeg, |s, size| s.ymul_geom(size))
}

/// Right-hand side of the same equation rewritten for `G_c(y,q)`.
pub fn gb_rhs<T: Coefficient>(
    profile: &Profile,
    provider: &impl Provider<T>,
    order: usize,
    ydeg: usize,
) -> Result<BiSeries<T>, FuncEqError> {
    alternating_sum(profile, provider, order, ydeg, |s, size| s.ymul_poch(size - 1))
}

/// `F = G / (yq;q)_∞`.
pub fn g_to_f<T: Coefficient>(g: &BiSeries<T>, order: usize, ydeg: usize) -> BiSeries<T> {
    g.truncated(order, ydeg).mul(&BiSeries::yq_poch_infinite_inverse(order, ydeg))
}

/// `G = (yq;q)_∞ · F`.
pub fn f_to_g<T: Coefficient>(f: &BiSeries<T>, order: usize, ydeg: usize) -> BiSeries<T> {
    f.truncated(order, ydeg).mul(&BiSeries::yq_poch_infinite(order, ydeg))
}

/// The five canonical level-4, rank-3 profiles in the solver's elimination order.
pub fn solver_profiles() -> [Profile; 5] {
    [
        Profile::of(&[2, 1, 1]),
        Profile::of(&[2, 2, 0]),
        Profile::of(&[3, 0, 1]),
        Profile::of(&[3, 1, 0]),
        Profile::of(&[4, 0, 0]),
    ]
}

/// Coefficients `g_c(n)` of `G_c(y,q) = Σ_n g_c(n) y^n` for the five
/// canonical profiles of level 4 and rank 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GTable<T> {
    series: BTreeMap<Profile, BiSeries<T>>,
    order: usize,
    max_degree: usize,
}

impl<T: Coefficient> GTable<T> {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// `g_c(n)`, looking `c` up by canonical rotation.
    pub fn g(&self, profile: &Profile, n: usize) -> Option<&Series<T>> {
        self.series.get(&profile.canonical()).filter(|_| n <= self.max_degree).map(|s| s.term(n))
    }

    /// `G_c(y,q)` truncated to the table's order and degree.
    pub fn generating(&self, profile: &Profile) -> Option<&BiSeries<T>> {
        self.series.get(&profile.canonical())
    }

    /// Replaces one entry; used to build negative controls.
    pub fn with_entry(mut self, profile: &Profile, n: usize, value: Series<T>) -> Self {
        assert_eq!(value.order(), self.order, "entry must have the table's order");
        let s = self.series.get_mut(&profile.canonical()).expect("profile in table");
        *s.term_mut(n) = value;
        self
    }
}

impl<T: Coefficient> Provider<T> for GTable<T> {
    fn lookup(&self, canonical: &Profile) -> Option<&BiSeries<T>> {
        self.series.get(canonical)
    }
}

/// Solves the reduced level-4 system for `g_c(n)`, `n ≤ max_degree`, to
/// order `order`, starting from `g_c(0) = 1`.
///
/// At y-degree `n` the `(2,1,1)` equation reads
///
/// ```text
/// (1 - q^n) g_211(n) = (q^n + q^{2n-1}) g_220(n-1) + q^{4n-1} g_310(n-1) + q^{3n-1} g_211(n-1)
/// ```
///
/// and `1 - q^n` is a unit, so `g_211(n)` is determined. The other four
/// profiles then follow from their own equations in the order
/// `(2,2,0)`, `(3,0,1)`, `(3,1,0)`, `(4,0,0)`.
pub fn solve_g<T: Coefficient>(order: usize, max_degree: usize) -> GTable<T> {
    let mut g211 = vec![Series::one(order)];
    let mut g220 = vec![Series::one(order)];
    let mut g301 = vec![Series::one(order)];
    let mut g310 = vec![Series::one(order)];
    let mut g400 = vec![Series::one(order)];
    let one = T::one();

    for n in 1..=max_degree {
        let (p211, p220, p310) = (&g211[n - 1], &g220[n - 1], &g310[n - 1]);

        let mut a = Series::zero(order);
        a.add_scaled_shifted(p220, &one, n);
        a.add_scaled_shifted(p220, &one, 2 * n - 1);
        a.add_scaled_shifted(p310, &one, 4 * n - 1);
        a.add_scaled_shifted(p211, &one, 3 * n - 1);
        a.div_one_minus_q_pow(n);

        let mut b = a.shift(n);
        b.add_scaled_shifted(p211, &one, 2 * n - 1);
        b.add_scaled_shifted(p310, &one, 3 * n - 1);

        let mut c = a.shift(n);
        c.add_scaled_shifted(p310, &one, 2 * n - 1);

        let mut d = b.shift(n);
        d.add_scaled_shifted(p310, &one, 3 * n - 1);
        d.add_scaled_shifted(p211, &one, 2 * n - 1);

        let e = d.shift(n);

        g211.push(a);
        g220.push(b);
        g301.push(c);
        g310.push(d);
        g400.push(e);
    }

    let [p211, p220, p301, p310, p400] = solver_profiles();
    let series = BTreeMap::from([
        (p211, BiSeries::from_terms(g211)),
        (p220, BiSeries::from_terms(g220)),
        (p301, BiSeries::from_terms(g301)),
        (p310, BiSeries::from_terms(g310)),
        (p400, BiSeries::from_terms(g400)),
    ]);
    GTable { series, order, max_degree }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cylindric::compositions;
    use num_bigint::BigInt;

    #[test]
    fn support_sets() {
        assert_eq!(support(&Profile::of(&[2, 2, 0])).indices(), [1, 2]);
        assert_eq!(support(&Profile::of(&[4, 0, 0])).indices(), [1]);
        assert_eq!(support(&Profile::of(&[2, 1, 1])).indices(), [1, 2, 3]);
    }

    #[test]
    fn transforms() {
        let p = Profile::of(&[2, 2, 0]);
        assert_eq!(transform(&p, &[2]).unwrap(), Profile::of(&[2, 1, 1]));
        let both = transform(&p, &[1, 2]).unwrap();
        assert_eq!(both, Profile::of(&[1, 2, 1]));
        assert_eq!(both.canonical(), Profile::of(&[2, 1, 1]));
        assert_eq!(transform(&Profile::of(&[4, 0, 0]), &[1]).unwrap(), Profile::of(&[3, 1, 0]));
    }

    #[test]
    fn transform_errors() {
        let p = Profile::of(&[2, 2, 0]);
        assert_eq!(transform(&p, &[]), Err(FuncEqError::EmptySubset));
        assert!(matches!(transform(&p, &[3]), Err(FuncEqError::NotInSupport { index: 3, .. })));
    }

    #[test]
    fn transform_preserves_level() {
        for level in 1..=4 {
            for rank in 1..=3 {
                for p in compositions(level, rank) {
                    for j in support(&p).nonempty_subsets() {
                        let t = transform(&p, &j).unwrap();
                        assert_eq!(t.level(), p.level(), "{p} {j:?}");
                        assert_eq!(t.rank(), p.rank());
                    }
                }
            }
        }
    }

    #[test]
    fn unreduced_system_subsets() {
        // (3,0,1): J = {1}, {3}, {1,3} give (2,1,1), (4,0,0), (3,1,0)
        let p = Profile::of(&[3, 0, 1]);
        let got: Vec<Profile> =
            support(&p).nonempty_subsets().iter().map(|j| transform(&p, j).unwrap().canonical()).collect();
        assert_eq!(got, [Profile::of(&[2, 1, 1]), Profile::of(&[4, 0, 0]), Profile::of(&[3, 1, 0])]);
    }

    #[test]
    fn missing_profile_is_named() {
        let empty: HashMap<Profile, BiSeries<BigInt>> = HashMap::new();
        let err = gb_rhs(&Profile::of(&[4, 0, 0]), &empty, 4, 2).unwrap_err();
        assert_eq!(err, FuncEqError::MissingProfile(Profile::of(&[3, 1, 0])));
    }

    #[test]
    fn insufficient_provider_is_rejected() {
        let mut m = HashMap::new();
        m.insert(Profile::of(&[3, 1, 0]), BiSeries::<BigInt>::one(3, 2));
        assert!(matches!(gb_rhs(&Profile::of(&[4, 0, 0]), &m, 4, 2), Err(FuncEqError::Insufficient { .. })));
    }

    #[test]
    fn boundary_values() {
        let t = solve_g::<BigInt>(20, 5);
        for p in solver_profiles() {
            assert_eq!(t.g(&p, 0).unwrap(), &Series::one(20));
            for n in 1..=5 {
                assert!(t.g(&p, n).unwrap().coeff(0) == &BigInt::from(0), "{p} {n}");
            }
        }
    }

    #[test]
    fn g211_degree_one() {
        let t = solve_g::<BigInt>(3, 1);
        assert_eq!(t.g(&Profile::of(&[2, 1, 1]), 1).unwrap(), &Series::from_i64s(&[0, 2, 3, 4], 3));
    }

    #[test]
    fn four_zero_zero_is_shifted_three_one_zero() {
        let t = solve_g::<BigInt>(40, 8);
        for n in 0..=8 {
            let a = t.g(&Profile::of(&[4, 0, 0]), n).unwrap();
            let b = t.g(&Profile::of(&[3, 1, 0]), n).unwrap().shift(n);
            assert_eq!(a, &b);
        }
    }

    #[test]
    fn g_f_roundtrip() {
        let g = solve_g::<BigInt>(15, 5).generating(&Profile::of(&[2, 2, 0])).unwrap().clone();
        assert_eq!(f_to_g(&g_to_f(&g, 15, 5), 15, 5), g);
        assert_eq!(g_to_f(&f_to_g(&g, 15, 5), 15, 5), g);
    }
}
