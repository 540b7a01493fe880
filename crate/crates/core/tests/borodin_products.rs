mod common;

use cylrr::borodin::{exponents, first_family, product_series, second_family};
use cylrr::closedforms::{corollary_product, verify_corollary};
use cylrr::cylindric::{canonical_profiles, compositions, oracle_f};
use cylrr::{Profile, QSeries};
use num_bigint::BigInt;

#[test]
fn explicit_products_at_200() {
    for (parts, exps) in common::IDENTITY_PROFILES.iter().zip(common::IDENTITY_PRODUCTS) {
        let p = Profile::of(parts);
        let mut all = exps.to_vec();
        all.extend(1..=7);
        let want = common::reciprocal_product(&all, 7, 200);
        let got: QSeries = product_series(&p, 200).unwrap();
        assert_eq!(common::to_vec(&got), want, "{p}");
        assert_eq!(got, corollary_product(&p, 200).unwrap(), "{p}");
    }
}

#[test]
fn corollary_reports() {
    for p in canonical_profiles(4, 3) {
        let r = verify_corollary::<BigInt>(&p, 80).unwrap();
        assert!(r.is_match(), "{r:?}");
        assert_eq!(r.subject(), format!("corollary-{p}"));
    }
}

#[test]
fn three_one_zero_and_three_zero_one_agree() {
    let a: QSeries = product_series(&Profile::of(&[3, 1, 0]), 200).unwrap();
    let b: QSeries = product_series(&Profile::of(&[3, 0, 1]), 200).unwrap();
    assert_eq!(a, b);
}

#[test]
fn multisets_are_rotation_invariant() {
    for (level, rank) in [(4, 3), (3, 3), (5, 3), (3, 4), (2, 2), (6, 2)] {
        for p in compositions(level, rank) {
            assert_eq!(exponents(&p).unwrap(), exponents(&p.rotate()).unwrap(), "{p}");
        }
    }
}

#[test]
fn family_sizes() {
    // The first family has Σ_i (k - i + 1) c_i factors and the second Σ_i (i - 1) c_i.
    for p in compositions(4, 3) {
        let k = p.rank();
        let first: usize = (1..=k).map(|i| (k - i + 1) * p.part(i)).sum();
        let second: usize = (1..=k).map(|i| (i - 1) * p.part(i)).sum();
        assert_eq!(first_family(&p).len(), first, "{p}");
        assert_eq!(second_family(&p).len(), second, "{p}");
        assert_eq!(first + second, k * p.level());
    }
}

#[test]
fn oracle_agreement_beyond_level_four() {
    for (level, rank) in [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3), (3, 3), (1, 4), (2, 4)] {
        for p in compositions(level, rank) {
            let o: QSeries = oracle_f(&p, 9);
            assert_eq!(o, product_series(&p, 9).unwrap(), "{p}");
        }
    }
}

#[test]
fn rank_two_level_one() {
    // 1/((q;q^3)_∞ (q^2;q^3)_∞ (q^3;q^3)_∞) = 1/(q;q)_∞
    let p = Profile::of(&[1, 0]);
    assert_eq!(exponents(&p).unwrap().exponent_list(), [1, 2]);
    let f: QSeries = product_series(&p, 30).unwrap();
    for n in 0..=30 {
        assert_eq!(f.coeff(n), &BigInt::from(common::partitions_bounded(n, n)));
    }
}
