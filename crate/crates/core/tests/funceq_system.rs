use std::collections::{BTreeMap, HashMap};

use cylrr::closedforms::{g_closed, g_closed_series};
use cylrr::cylindric::{canonical_profiles, compositions, oracle_f_y};
use cylrr::funceq::{f_to_g, g_to_f, gb_rhs, inex_rhs, solve_g, solver_profiles, Provider};
use cylrr::series::{compare, BiSeries};
use cylrr::{GTable, Profile, QSeries, VerificationReport, YSeries};
use num_bigint::BigInt;
use num_traits::One;

fn oracle_provider(level: usize, rank: usize, m: usize) -> HashMap<Profile, YSeries> {
    canonical_profiles(level, rank).into_iter().map(|p| (p.clone(), oracle_f_y(&p, m))).collect()
}

/// Checks the G-equations of every solver profile against `table` itself.
fn check_table(table: &GTable) -> VerificationReport {
    let (order, ydeg) = (table.order(), table.max_degree());
    let parts: Vec<_> = solver_profiles()
        .iter()
        .flat_map(|p| {
            let rhs = gb_rhs(p, table, order, ydeg).unwrap();
            let lhs = table.generating(p).unwrap();
            lhs.terms().iter().zip(rhs.terms()).map(|(a, b)| compare(a, b)).collect::<Vec<_>>()
        })
        .collect();
    VerificationReport::all("table", order, &parts)
}

#[test]
fn solver_table_satisfies_every_equation() {
    assert!(check_table(&solve_g(40, 8)).is_match());
}

#[test]
fn perturbed_table_is_detected() {
    let table = solve_g::<BigInt>(30, 6);
    let p = Profile::of(&[2, 1, 1]);
    let mut bumped = table.g(&p, 3).unwrap().clone();
    bumped.add_scaled_shifted(&QSeries::one(30), &BigInt::one(), 20);
    let bad = table.with_entry(&p, 3, bumped);
    let r = check_table(&bad);
    assert!(!r.is_match());
    assert_eq!(r.first_mismatch(), Some(20));
}

#[test]
fn solver_matches_closed_forms() {
    let table = solve_g::<BigInt>(60, 10);
    for p in solver_profiles() {
        for n in 0..=10 {
            assert_eq!(table.g(&p, n).unwrap(), &g_closed(&p, n, 60).unwrap(), "{p} n={n}");
        }
    }
}

#[test]
fn closed_forms_satisfy_the_g_equations() {
    let provider: BTreeMap<Profile, YSeries> =
        solver_profiles().into_iter().map(|p| (p.clone(), g_closed_series(&p, 30, 8).unwrap())).collect();
    for p in compositions(4, 3) {
        assert_eq!(gb_rhs(&p, &provider, 30, 8).unwrap(), provider[&p.canonical()], "{p}");
    }
}

#[test]
fn inclusion_exclusion_level_four() {
    let provider = oracle_provider(4, 3, 8);
    for p in compositions(4, 3) {
        assert_eq!(inex_rhs(&p, &provider, 8, 8).unwrap(), provider[&p.canonical()], "{p}");
    }
}

#[test]
fn inclusion_exclusion_other_levels() {
    for (level, rank) in [(3, 2), (2, 2), (1, 2), (2, 3), (3, 3)] {
        let provider = oracle_provider(level, rank, 8);
        for p in compositions(level, rank) {
            assert_eq!(inex_rhs(&p, &provider, 8, 8).unwrap(), provider[&p.canonical()], "{p}");
        }
    }
}

#[test]
fn oracle_f_equals_transformed_closed_form() {
    for p in solver_profiles() {
        let g = g_closed_series::<BigInt>(&p, 10, 10).unwrap();
        assert_eq!(g_to_f(&g, 10, 10), oracle_f_y(&p, 10), "{p}");
    }
}

#[test]
fn f_to_g_degree_one() {
    let p = Profile::of(&[2, 1, 1]);
    let g = f_to_g(&oracle_f_y::<BigInt>(&p, 12), 12, 12);
    assert_eq!(g.term(1), &g_closed(&p, 1, 12).unwrap());
    assert_eq!(g.term(0), &QSeries::one(12));
}

#[test]
fn ysubst_scales_solver_terms() {
    let table = solve_g::<BigInt>(40, 8);
    let p = Profile::of(&[2, 1, 1]);
    let shifted = table.generating(&p).unwrap().ysubst(1);
    for m in 0..=8 {
        assert_eq!(shifted.term(m), &table.g(&p, m).unwrap().shift(m), "m={m}");
    }
}

#[test]
fn table_lookup_is_rotation_aware() {
    let table = solve_g::<BigInt>(10, 3);
    assert_eq!(table.g(&Profile::of(&[1, 1, 2]), 2), table.g(&Profile::of(&[2, 1, 1]), 2));
    assert!(table.lookup(&Profile::of(&[1, 1, 2])).is_none());
    assert!(table.g(&Profile::of(&[2, 1, 1]), 4).is_none());
}

#[test]
fn bi_series_identity_pair() {
    let (order, ydeg) = (25, 6);
    let prod = BiSeries::<BigInt>::yq_poch_infinite(order, ydeg).mul(&BiSeries::yq_poch_infinite_inverse(order, ydeg));
    assert_eq!(prod, BiSeries::one(order, ydeg));
}
