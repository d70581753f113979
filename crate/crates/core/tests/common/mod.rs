#![allow(dead_code)]

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tanglekit::gfamily::GParams;
use tanglekit::qcore::{Mat2, PureState};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform on the disc `|z| <= radius`.
pub fn complex_in_disc(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    let r = radius * rng.gen::<f64>().sqrt();
    Complex64::from_polar(r, rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI))
}

pub fn random_params(rng: &mut ChaCha8Rng, radius: f64) -> GParams {
    loop {
        let p = GParams {
            a: complex_in_disc(rng, radius),
            b: complex_in_disc(rng, radius),
            c: complex_in_disc(rng, radius),
        };
        if !p.is_degenerate() {
            return p;
        }
    }
}

pub fn random_state(rng: &mut ChaCha8Rng, n_qubits: usize) -> PureState {
    let amps = (0..1 << n_qubits)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    PureState::new(amps).unwrap().normalize().unwrap()
}

/// Haar-ish element of SU(2) from a random unit quaternion.
pub fn random_su2(rng: &mut ChaCha8Rng) -> Mat2 {
    let mut q = [0.0f64; 4];
    loop {
        for x in &mut q {
            *x = rng.gen_range(-1.0..1.0);
        }
        let n = q.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-3 && n <= 1.0 {
            q.iter_mut().for_each(|x| *x /= n);
            break;
        }
    }
    let alpha = Complex64::new(q[0], q[1]);
    let beta = Complex64::new(q[2], q[3]);
    [[alpha, -beta.conj()], [beta, alpha.conj()]]
}

pub fn max_abs_diff(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
}
