mod common;

use common::{random_params, rng};
use num_complex::Complex64;
use tanglekit::gfamily::{self, GParams, Pair};
use tanglekit::qcore::{density_of, partial_trace};
use tanglekit::tangles;
use tanglekit::Error;

#[test]
fn marginals_match_partial_traces() {
    let mut r = rng(1);
    for _ in 0..1000 {
        let params = random_params(&mut r, 3.0);
        let rho = density_of(&gfamily::build_state(&params).unwrap()).unwrap();
        for pair in Pair::ALL {
            let brute = partial_trace(&rho, &pair.qubits()).unwrap();
            assert!((brute.matrix() - gfamily::reduced_two(&params, pair).matrix()).camax() < 1e-12);
        }
        let one = partial_trace(&rho, &[0]).unwrap();
        assert!((one.matrix() - gfamily::reduced_one(&params).matrix()).camax() < 1e-12);
    }
}

#[test]
fn every_qubit_has_the_same_one_tangle() {
    let mut r = rng(2);
    for _ in 0..200 {
        let params = random_params(&mut r, 3.0);
        let g = gfamily::build_state(&params).unwrap();
        let closed = tangles::one_tangle_closed_form(&params);
        for q in 0..4 {
            assert!((tangles::one_tangle(&g, q).unwrap() - closed).abs() < 1e-12);
        }
    }
}

#[test]
fn norm_identities() {
    let mut r = rng(3);
    for _ in 0..200 {
        let params = random_params(&mut r, 3.0);
        let n = gfamily::norms(&params).unwrap();
        let s = params.weight();
        assert!((n.n.powi(2) - 1.0 / (1.0 + s)).abs() < 1e-14);
        assert!(n.identity_defect() < 1e-12);
        assert!((gfamily::build_state(&params).unwrap().norm() - 1.0).abs() < 1e-13);
    }
}

#[test]
fn rank2_decomposition_rebuilds_rho123() {
    let mut r = rng(4);
    for _ in 0..200 {
        let params = random_params(&mut r, 3.0);
        let rho = density_of(&gfamily::build_state(&params).unwrap()).unwrap();
        let rho123 = partial_trace(&rho, &[0, 1, 2]).unwrap();
        let dec = gfamily::rank2_decomposition(&params).unwrap();
        let rebuilt = density_of(&dec.psi1)
            .unwrap()
            .mix(&density_of(&dec.psi2).unwrap(), dec.p)
            .unwrap();
        assert!((rebuilt.matrix() - rho123.matrix()).camax() < 1e-12);
        assert!(dec.psi1.inner(&dec.psi2).norm() < 1e-12);
        assert!(tangles::three_tangle_pure(&dec.psi1).unwrap() < 1e-12);
        let s = params.weight();
        assert!((dec.p - s / (2.0 * (1.0 + s))).abs() < 1e-14);
    }
}

#[test]
fn degenerate_and_invalid_parameters() {
    let zero = Complex64::new(0.0, 0.0);
    let p = GParams { a: zero, b: zero, c: zero };
    assert!(p.is_degenerate());
    assert!(matches!(gfamily::norms(&p), Err(Error::DegenerateFamily(_))));
    // All-zero parameters still give the normalized |0110>.
    let g = gfamily::build_state(&p).unwrap();
    assert!((g.amplitudes()[0b0110].norm() - 1.0).abs() < 1e-15);
    assert!(GParams::new(Complex64::new(f64::NAN, 0.0), zero, zero).is_err());
    assert!(GParams::new(Complex64::new(2e6, 0.0), zero, zero).is_err());
}

#[test]
fn pair_names() {
    assert_eq!("14".parse::<Pair>().unwrap(), Pair::P14);
    assert_eq!(Pair::P13.to_string(), "13");
    assert!(matches!("23".parse::<Pair>(), Err(Error::BadPair(_))));
}
