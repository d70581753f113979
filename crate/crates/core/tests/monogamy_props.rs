mod common;

use common::{random_params, random_state, rng};
use proptest::prelude::*;
use tanglekit::gfamily::GParams;
use tanglekit::monogamy::{self, MonogamyProfile};
use tanglekit::qcore::PureState;
use tanglekit::tangles::{self, RoofKind};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn ckw_residual_is_the_three_tangle(seed in any::<u64>()) {
        let s = random_state(&mut rng(seed), 3);
        let ckw = monogamy::ckw_residual(&s).unwrap();
        prop_assert!((ckw - tangles::three_tangle_pure(&s).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn nqubit_gap_is_nonnegative(seed in any::<u64>(), n in 3usize..=5) {
        let mut r = rng(seed);
        let s = random_state(&mut r, n);
        for focus in 0..n {
            prop_assert!(monogamy::nqubit_monogamy_gap(&s, focus).unwrap() >= -1e-10);
        }
    }
}

#[test]
fn reports_are_self_consistent() {
    let mut r = rng(20);
    for _ in 0..300 {
        let params = random_params(&mut r, 3.0);
        for kind in RoofKind::ALL {
            let rep = monogamy::delta(&params, kind, 2.5).unwrap();
            assert!((rep.recompute() - rep.delta).abs() < 1e-15);
            assert!(rep.triple_tangles.iter().all(|&t| t == rep.triple_tangles[0]));
            assert_eq!(rep.j, kind.index());
        }
        assert!(MonogamyProfile::new(&params).unwrap().gap() >= -1e-12);
    }
}

#[test]
fn delta_grows_with_power() {
    let mut r = rng(21);
    for _ in 0..300 {
        let params = random_params(&mut r, 3.0);
        let prof = MonogamyProfile::new(&params).unwrap();
        for kind in RoofKind::ALL {
            if prof.roof.base(kind) > 1.0 {
                continue;
            }
            let d: Vec<f64> = [1.0, 2.0, 2.5, 4.0].iter().map(|&x| prof.delta(kind, x)).collect();
            assert!(d.windows(2).all(|w| w[1] >= w[0] - 1e-15), "{kind}: {d:?}");
        }
    }
}

#[test]
fn case1_closed_form_matches_general_path() {
    for k in 1..=400 {
        let a = k as f64 * 0.0125;
        for kind in RoofKind::ALL {
            for power in [1.0, 2.152, 3.0] {
                let general = monogamy::delta(&GParams::case1(a), kind, power).unwrap().delta;
                let closed = monogamy::case1_delta(a, kind, power);
                assert!((general - closed).abs() < 1e-12, "a={a} {kind} {power}: {general} vs {closed}");
            }
        }
    }
}

#[test]
fn case1_f_is_continuous() {
    for edge in [2f64.sqrt() / 3.0, (2.0f64 / 3.0).sqrt(), 1.0] {
        let below = monogamy::case1_f(edge - 1e-12);
        assert!((below - monogamy::case1_f(edge)).abs() < 1e-9, "edge {edge}");
    }
}

#[test]
fn theta_average_reference_states() {
    let product = PureState::basis(4, 0b0101);
    assert!(monogamy::theta_average(&product).unwrap().abs() < 1e-14);
    assert!((monogamy::theta_average(&PureState::ghz(4)).unwrap() - 1.0).abs() < 1e-12);
    assert!(monogamy::theta_average(&PureState::ghz(3)).is_err());
}
