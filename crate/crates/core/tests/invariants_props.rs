mod common;

use common::{random_state, random_su2, rng};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::Rng;
use tanglekit::gfamily::{build_state, GParams};
use tanglekit::invariants::{self, f_invariants};
use tanglekit::qcore::PureState;
use tanglekit::Error;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn special_local_unitaries_leave_f_unchanged(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = random_state(&mut r, 4);
        let before = f_invariants(&s).unwrap().as_array();
        let rotated = (0..4).fold(s, |acc, q| acc.apply_single(&random_su2(&mut r), q).unwrap());
        let after = f_invariants(&rotated).unwrap().as_array();
        for (x, y) in before.iter().zip(&after) {
            prop_assert!((x - y).abs() <= 1e-8 * x.abs().max(1e-6));
        }
    }

    #[test]
    fn one_three_products_have_no_four_way_part(seed in any::<u64>(), lone in 0usize..4) {
        let mut r = rng(seed);
        let product = random_state(&mut r, 1).tensor(&random_state(&mut r, 3));
        let mut perm: Vec<usize> = (1..4).collect();
        perm.insert(lone, 0);
        let f = f_invariants(&product.permute(&perm).unwrap()).unwrap();
        prop_assert!(f.as_array().iter().all(|x| x.abs() < 1e-10));
    }
}

#[test]
fn bilinear_form_examples() {
    let zero = PureState::basis(4, 0);
    assert_eq!(invariants::bilinear_form(&zero, [2, 2, 2, 2]).unwrap(), Complex64::new(0.0, 0.0));
    let bb = PureState::bell().tensor(&PureState::bell());
    let v = invariants::bilinear_form(&bb, [2, 2, 2, 2]).unwrap();
    assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-15);

    let s = random_state(&mut rng(5), 4);
    let alpha = Complex64::new(0.3, -1.1);
    let scaled = PureState::new(s.amplitudes().iter().map(|x| x * alpha).collect()).unwrap();
    for ops in [[0, 1, 2, 3], [3, 3, 1, 0], [2, 2, 0, 1]] {
        let lhs = invariants::bilinear_form(&scaled, ops).unwrap();
        let rhs = invariants::bilinear_form(&s, ops).unwrap() * alpha * alpha;
        assert!((lhs - rhs).norm() < 1e-14);
    }
    assert!(matches!(invariants::bilinear_form(&zero, [0, 4, 0, 0]), Err(Error::BadIndex { .. })));
}

#[test]
fn case1_curves_match_closed_forms_and_increase() {
    let mut previous = [0.0; 3];
    for k in 1..=1000 {
        let a = k as f64 * 0.005;
        let engine = f_invariants(&build_state(&GParams::case1(a)).unwrap()).unwrap().as_array();
        let closed = invariants::f_closed_forms_case1(a).as_array();
        for j in 0..3 {
            assert!((engine[j] - closed[j]).abs() < 1e-10);
            assert!(engine[j] > previous[j], "F{} not increasing at a={a}", j + 1);
        }
        previous = engine;
    }
}

#[test]
fn least_squares_matches_svd_solution() {
    let mut r = rng(6);
    let design: Vec<[f64; 3]> = (0..50).map(|_| [r.gen(), r.gen(), r.gen()]).collect();
    let target: Vec<f64> = (0..50).map(|_| r.gen()).collect();
    let ours = invariants::least_squares(&design, &target).unwrap();
    let x = DMatrix::from_fn(50, 3, |i, j| design[i][j]);
    let oracle = x.svd(true, true).solve(&DVector::from_vec(target), 1e-14).unwrap();
    for j in 0..3 {
        assert!((ours[j] - oracle[j]).abs() < 1e-8);
    }
}

#[test]
fn fit_on_a_wide_grid_lands_near_reference_coefficients() {
    // a in (0, 10], 1000 uniform points.
    let grid: Vec<f64> = (1..=1000).map(|k| k as f64 * 0.01).collect();
    let fit = invariants::fit_delta_vs_invariants(&grid, 3.0).unwrap();
    let reference = [10.117, -30.8143, 5.7116];
    for (c, p) in fit.coefficients.iter().zip(&reference) {
        assert!((c - p).abs() < 0.01 * p.abs(), "{:?}", fit.coefficients);
    }
    assert!(fit.rms_residual > 1e-3);
    assert!((fit.recompute_rms().unwrap() - fit.rms_residual).abs() < 1e-14);
}

#[test]
fn rank_deficient_fits() {
    assert!(matches!(
        invariants::fit_delta_vs_invariants(&[0.5, 1.0, 1.5], 3.0),
        Err(Error::SingularDesign)
    ));
    assert!(matches!(
        invariants::fit_delta_vs_invariants(&[1.0; 10], 3.0),
        Err(Error::SingularDesign)
    ));
}
