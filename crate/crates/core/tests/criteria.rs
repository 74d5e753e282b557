mod common;

use common::*;
use kyfan_sep::criteria::{self, CriterionParams, ParamGrid};
use kyfan_sep::reproduce::chessboard_example_state;
use kyfan_sep::states;
use kyfan_sep::{linalg, BipartiteDensityMatrix, Criterion};
use proptest::prelude::*;

fn p(a: f64, b: f64) -> CriterionParams {
    CriterionParams::new(a, b).unwrap()
}

#[test]
fn ppt_on_bell_tiles_and_chessboard() {
    let v = criteria::ppt_test(&states::bell_state()).unwrap();
    assert_eq!(v.criterion, Criterion::Ppt);
    assert!((v.margin - 0.5).abs() < 1e-12 && v.detected);
    assert!(!criteria::ppt_test(&states::tiles_ppt_state()).unwrap().detected);
    assert!(!criteria::ppt_test(&chessboard_example_state().unwrap()).unwrap().detected);
}

#[test]
fn ccnr_cases() {
    let product = states::random_separable(2, 3, 1, 9).unwrap();
    let v = criteria::ccnr_test(&product).unwrap();
    assert!(v.margin.abs() < 1e-12 && !v.detected);

    let v = criteria::ccnr_test(&states::bell_state()).unwrap();
    assert!((v.margin - 1.0).abs() < 1e-12 && v.detected);

    let v = criteria::ccnr_test(&chessboard_example_state().unwrap()).unwrap();
    assert!(v.margin <= 1e-9, "chessboard mixture CCNR margin {}", v.margin);
}

#[test]
fn enhanced_realignment_cases() {
    // Bell: rho - I/4 realigns to singular values 1/2 (x3) and 0, so lhs 3/2; rhs = sqrt(1/2)^2.
    let v = criteria::enhanced_realignment_test(&states::bell_state()).unwrap();
    assert!((v.lhs - 1.5).abs() < 1e-12);
    assert!((v.rhs - 0.5).abs() < 1e-12);
    assert!((v.margin - 1.0).abs() < 1e-12 && v.detected);

    let mut r = rng(4);
    let rho_a = random_real_density(2, 2, &mut r);
    let rho_b = random_real_density(3, 2, &mut r);
    let product = BipartiteDensityMatrix::product(&rho_a, &rho_b).unwrap();
    let v = criteria::enhanced_realignment_test(&product).unwrap();
    let expected = -((1.0 - linalg::purity(&rho_a).unwrap()) * (1.0 - linalg::purity(&rho_b).unwrap())).sqrt();
    assert!((v.margin - expected).abs() < 1e-9);
    assert!(v.margin <= 0.0);
}

#[test]
fn build_m_layout_and_shape() {
    let rho = states::random_density(2, 3, 5).unwrap();
    let (a, b) = (1.5, 0.25);
    let m = criteria::build_m(&rho, p(a, b));
    assert_eq!(m.shape(), (5, 10));
    assert_eq!(m[(0, 0)], c(a * b));
    let vec_a = linalg::vectorize(&rho.reduced_a());
    let vec_b = linalg::vectorize(&rho.reduced_b());
    for j in 0..9 {
        assert_eq!(m[(0, j + 1)], vec_b[j] * a);
    }
    for i in 0..4 {
        assert_eq!(m[(i + 1, 0)], vec_a[i] * b);
    }
    let inner = m.view((1, 1), (4, 9)).into_owned();
    assert_eq!(inner, realign_by_blocks(rho.matrix(), 2, 3));

    let zero = criteria::build_m(&states::bell_state(), CriterionParams::ZERO);
    assert!((trace_norm_oracle(&zero) - 2.0).abs() < 1e-9);
}

#[test]
fn pure_product_reaches_separable_bound() {
    let rho = states::random_separable(3, 3, 1, 17).unwrap();
    for (a, b) in [(0.0, 0.0), (1.0, 2.0), (7.5, 0.3), (40.0, 40.0)] {
        let m = criteria::build_m(&rho, p(a, b));
        let expected = ((a * a + 1.0) * (b * b + 1.0)).sqrt();
        let oracle = trace_norm_oracle(&m);
        assert!((oracle - expected).abs() < 1e-9 * expected.max(1.0), "oracle {oracle} vs {expected}");
        let v = criteria::kyfan_criterion_test(&rho, p(a, b)).unwrap();
        assert!((v.lhs - expected).abs() < 1e-9 * expected.max(1.0));
        assert!(!v.detected);
    }
}

#[test]
fn kyfan_bell_at_origin_is_ccnr() {
    let v = criteria::kyfan_criterion_test(&states::bell_state(), CriterionParams::ZERO).unwrap();
    assert!((v.margin - 1.0).abs() < 1e-12 && v.detected);
}

#[test]
fn kyfan_chessboard_example_margin() {
    let rho = chessboard_example_state().unwrap();
    let v = criteria::kyfan_criterion_test(&rho, p(250.0, 240.0)).unwrap();
    assert!((v.margin - 0.0027).abs() <= 5e-4, "margin {}", v.margin);
    assert!(v.detected);
}

#[test]
fn optimizer_on_bell_dominates_origin() {
    let grid = ParamGrid::standard().chain(ParamGrid::new(vec![CriterionParams::ZERO]).unwrap());
    let (_, v) = criteria::optimize_params(&states::bell_state(), &grid).unwrap();
    assert!(v.margin >= 1.0 - 1e-12);
}

#[test]
fn optimizer_finds_chessboard_witness() {
    let rho = chessboard_example_state().unwrap();
    let (best, v) = criteria::optimize_params(&rho, &ParamGrid::standard()).unwrap();
    assert!(v.detected);
    assert!(v.margin >= 0.0027 - 5e-4, "best {best}: margin {}", v.margin);
}

#[test]
fn optimizer_does_not_certify_separable() {
    let rho = states::random_separable(3, 3, 6, 123).unwrap();
    let (_, v) = criteria::optimize_params(&rho, &ParamGrid::standard()).unwrap();
    assert!(!v.detected, "margin {} tol {}", v.margin, v.tolerance);
}

#[test]
fn optimizer_tie_break_prefers_smaller_parameters() {
    let rho = states::bell_state();
    let small = p(1.0, 1.0);
    let large = p(3.0, 3.0);
    // Identical margins arise only for identical points, so duplicate one entry on purpose.
    let grid = ParamGrid::new(vec![large, small, large]).unwrap();
    let (best, _) = criteria::optimize_params(&rho, &grid).unwrap();
    let m_small = criteria::kyfan_criterion_test(&rho, small).unwrap().margin;
    let m_large = criteria::kyfan_criterion_test(&rho, large).unwrap().margin;
    assert_eq!(best, if m_large > m_small { large } else { small });
}

#[test]
fn hierarchy_on_real_states_satisfying_enhanced_realignment() {
    let mut r = rng(2024);
    let mut checked = 0;
    for trial in 0..400 {
        let (da, db) = [(2, 2), (2, 3), (3, 3)][trial % 3];
        let n = da * db;
        let rank = 1 + trial % n;
        let m = random_real_density(n, rank, &mut r);
        let rho = BipartiteDensityMatrix::new(da, db, m).unwrap();
        if criteria::enhanced_realignment_test(&rho).unwrap().margin > 0.0 {
            continue;
        }
        checked += 1;
        for i in 0..5 {
            for j in 0..5 {
                let params = p(2.5 * i as f64, 2.5 * j as f64);
                let v = criteria::kyfan_criterion_test(&rho, params).unwrap();
                assert!(v.margin <= v.tolerance, "trial {trial} {params}: margin {}", v.margin);
            }
        }
    }
    assert!(checked >= 50, "only {checked} states satisfied enhanced realignment");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kyfan_at_origin_reduces_to_ccnr(da in 2usize..4, db in 2usize..4, seed in any::<u64>()) {
        let rho = states::random_density(da, db, seed).unwrap();
        let kyfan = criteria::kyfan_criterion_test(&rho, CriterionParams::ZERO).unwrap().margin;
        let ccnr = criteria::ccnr_test(&rho).unwrap().margin;
        prop_assert!((kyfan - ccnr).abs() <= 1e-10);
    }

    #[test]
    fn swapping_subsystems_and_parameters_keeps_margin(
        da in 2usize..4, db in 2usize..4, seed in any::<u64>(), a in 0.0f64..20.0, b in 0.0f64..20.0,
    ) {
        let rho = states::random_density(da, db, seed).unwrap();
        let params = p(a, b);
        let m1 = criteria::kyfan_criterion_test(&rho, params).unwrap().margin;
        let m2 = criteria::kyfan_criterion_test(&rho.swap_subsystems(), params.swapped()).unwrap().margin;
        prop_assert!((m1 - m2).abs() <= 1e-9);
    }

    #[test]
    fn detection_flag_matches_margin(seed in any::<u64>(), a in 0.0f64..50.0, b in 0.0f64..50.0) {
        let rho = states::random_density(3, 3, seed).unwrap();
        let v = criteria::kyfan_criterion_test(&rho, p(a, b)).unwrap();
        prop_assert_eq!(v.detected, v.margin > criteria::kyfan_tolerance(p(a, b)));
        prop_assert!((v.margin - (v.lhs - v.rhs)).abs() == 0.0);
    }
}
