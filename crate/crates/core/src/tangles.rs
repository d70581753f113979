//! One-, two- and three-way tangles.
//!
//! The convex-roof three-way tangles of `rho_123` are evaluated through the
//! analytic optimal decompositions of `|G>`; the generic routines here
//! (`one_tangle`, `concurrence`, `three_tangle_pure`) work for arbitrary
//! states and serve as oracles for the closed forms.

use crate::gfamily::{self, GParams, Pair, DEGENERACY_TOL};
use crate::qcore::{clamp_psd, hermitian_eigen, CMat, DensityMatrix, PureState};
use crate::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

/// Branch conditions closer than this are treated as ties.
pub const BRANCH_TIE_TOL: f64 = 1e-12;

/// `4 det rho_focus` for a single qubit of a pure state.
pub fn one_tangle(state: &PureState, focus: usize) -> Result<f64> {
    if focus >= state.n_qubits() {
        return Err(Error::BadIndex {
            index: focus,
            n_qubits: state.n_qubits(),
        });
    }
    let m = state.reduced_matrix(&[focus])?;
    let det = (m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]).re;
    Ok((4.0 * det).clamp(0.0, 1.0))
}

/// One-tangle of `|G>`, identical for all four qubits:
/// `N^4 / (4 N1^2 N2^2) = s (2 + s) / (1 + s)^2` with `s = |a|^2+|b|^2+2|c|^2`.
pub fn one_tangle_closed_form(params: &GParams) -> f64 {
    let s = params.weight();
    s * (2.0 + s) / (1.0 + s).powi(2)
}

/// Wootters concurrence of a two-qubit density matrix.
///
/// The `lambda_i` are square roots of the eigenvalues of the Hermitian
/// matrix `sqrt(rho) rho~ sqrt(rho)`, which shares its spectrum with
/// `rho rho~`.
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::NotDensityMatrix(format!(
            "concurrence needs a 4x4 matrix, got {}x{}",
            rho.dim(),
            rho.dim()
        )));
    }
    concurrence_matrix(rho.matrix())
}

/// With `rho = W W^dag`, the Wootters `lambda_i` are the singular values of
/// `T = W^T (sigma_y x sigma_y) W`; this avoids taking square roots of the
/// spectrum of `sqrt(rho) rho~ sqrt(rho)`, which turns roundoff of order
/// 1e-17 into errors of order 1e-8 for rank-deficient `rho`.
pub(crate) fn concurrence_matrix(m: &CMat) -> Result<f64> {
    let eig = hermitian_eigen(m)?;
    let w = CMat::from_fn(4, 4, |i, j| {
        eig.vectors[(i, j)] * clamp_psd(eig.values[j]).max(0.0).sqrt()
    });
    // sigma_y x sigma_y maps |k> to sign[k] |3-k>.
    let sign = [-1.0, 1.0, 1.0, -1.0];
    let t = CMat::from_fn(4, 4, |i, j| {
        (0..4)
            .map(|k| w[(k, i)] * w[(3 - k, j)] * sign[k])
            .sum::<Complex64>()
    });
    let mut lambda: Vec<f64> = t.singular_values().iter().copied().collect();
    lambda.sort_by(|x, y| y.total_cmp(x));
    Ok((lambda[0] - lambda[1] - lambda[2] - lambda[3]).clamp(0.0, 1.0))
}

/// The three closed-form concurrence branches of one reduced pair.
///
/// Branch `k` applies when `conditions[k]` is the largest of the three
/// condition values; its formula is `values[k]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchEvaluation {
    pub conditions: [f64; 3],
    pub values: [f64; 3],
}

impl BranchEvaluation {
    /// Branches whose condition holds, allowing ties within
    /// [`BRANCH_TIE_TOL`].
    pub fn applicable(&self) -> Vec<usize> {
        let top = self.conditions.iter().cloned().fold(f64::MIN, f64::max);
        (0..3)
            .filter(|&k| self.conditions[k] >= top - BRANCH_TIE_TOL)
            .collect()
    }

    /// The branch value, or `None` when tied branches disagree.
    pub fn resolve(&self) -> Option<f64> {
        let app = self.applicable();
        let first = self.values[app[0]];
        app.iter()
            .all(|&k| (self.values[k] - first).abs() <= BRANCH_TIE_TOL)
            .then_some(first)
    }
}

pub fn concurrence_branches(params: &GParams, pair: Pair) -> BranchEvaluation {
    let n2 = 1.0 / (1.0 + params.weight());
    match pair {
        Pair::P12 => {
            let (a2, b2) = (params.a.norm_sqr(), params.b.norm_sqr());
            let c = params.c.norm();
            let root = (1.0 + c * c).sqrt();
            BranchEvaluation {
                conditions: [c * (root + 1.0), a2, b2],
                values: [
                    n2 * (2.0 * c - (a2 + b2)).max(0.0),
                    n2 * (a2 - b2 - 2.0 * c * root).max(0.0),
                    n2 * (b2 - a2 - 2.0 * c * root).max(0.0),
                ],
            }
        }
        Pair::P13 | Pair::P14 => {
            let g = gfamily::greek(params);
            let (alpha, beta, gamma, delta) = if pair == Pair::P13 {
                (g.alpha, g.beta, g.gamma, g.delta.norm())
            } else {
                (g.alpha_p, g.beta_p, g.gamma_p, g.delta_p.norm())
            };
            let root = (gamma * (gamma + 1.0)).sqrt();
            BranchEvaluation {
                conditions: [root + delta, beta + alpha, beta - alpha],
                values: [
                    2.0 * n2 * (delta - beta).max(0.0),
                    2.0 * n2 * (alpha - root).max(0.0),
                    2.0 * n2 * (-alpha - root).max(0.0),
                ],
            }
        }
    }
}

/// Closed-form concurrence of `rho_1j` for `|G>`.
///
/// Falls back to the Wootters routine on the closed-form marginal when tied
/// branch conditions give different values.
pub fn concurrence_closed_form(params: &GParams, pair: Pair) -> f64 {
    match concurrence_branches(params, pair).resolve() {
        Some(v) => v,
        None => concurrence(&gfamily::reduced_two(params, pair))
            .expect("closed-form marginal is a valid 4x4 density matrix"),
    }
}

/// Residual entanglement of a three-qubit pure state, computed as the
/// epsilon contraction
/// `|2 e_{i1 i2} e_{i3 i4} e_{j1 j2} e_{j3 j4} e_{k1 k3} e_{k2 k4} psi psi psi psi|`.
pub fn three_tangle_pure(state: &PureState) -> Result<f64> {
    state.require_qubits(3)?;
    let psi = state.amplitudes();
    let amp = |i: usize, j: usize, k: usize| psi[(i << 2) | (j << 1) | k];
    // e_{x, 1-x}: +1 for x = 0, -1 for x = 1
    let eps = |x: usize| if x == 0 { 1.0 } else { -1.0 };
    let mut acc = Complex64::new(0.0, 0.0);
    for i1 in 0..2 {
        for i3 in 0..2 {
            for j1 in 0..2 {
                for j3 in 0..2 {
                    for k1 in 0..2 {
                        for k2 in 0..2 {
                            let (i2, i4, j2, j4, k3, k4) =
                                (1 - i1, 1 - i3, 1 - j1, 1 - j3, 1 - k1, 1 - k2);
                            let sign = eps(i1) * eps(i3) * eps(j1) * eps(j3) * eps(k1) * eps(k2);
                            acc += amp(i1, j1, k1)
                                * amp(i2, j2, k2)
                                * amp(i3, j3, k3)
                                * amp(i4, j4, k4)
                                * sign;
                        }
                    }
                }
            }
        }
    }
    Ok(2.0 * acc.norm())
}

/// Shape of `tau_3(Psi(p, phi_pm))` along the mixing probability.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MixingCurveParams {
    /// Nonpositive; `f64::NEG_INFINITY` when `(a^2-c^2)(b^2-c^2)` vanishes
    /// but `(a^2-b^2)c` does not.
    pub z: f64,
    pub z_infinite: bool,
    pub p0: f64,
    pub theta1: f64,
    pub theta2: f64,
    /// `64 N1^2 N2^2 (1-z) |(a^2-c^2)(b^2-c^2)|`, taken as its finite limit
    /// `64 N2^4 |(a^2-b^2)c|` when `z` is infinite.
    pub prefactor: f64,
}

impl MixingCurveParams {
    pub fn z_is_infinite(&self) -> bool {
        self.z_infinite
    }
}

/// `|(a^2-b^2) c|` and `|(a^2-c^2)(b^2-c^2)|`.
fn mixing_moduli(params: &GParams) -> (Complex64, Complex64) {
    let GParams { a, b, c } = *params;
    let (a2, b2, c2) = (a * a, b * b, c * c);
    ((a2 - b2) * c, (a2 - c2) * (b2 - c2))
}

fn principal_arg(z: Complex64) -> f64 {
    let t = z.arg();
    if t <= -PI {
        t + 2.0 * PI
    } else {
        t
    }
}

pub fn mixing_curve_params(params: &GParams) -> Result<MixingCurveParams> {
    let norms = gfamily::norms(params)?;
    let (num, den) = mixing_moduli(params);
    let (x, d) = (num.norm(), den.norm());
    let (n1s, n2s) = (norms.n1.powi(2), norms.n2.powi(2));
    let (z, p0, prefactor) = if d < DEGENERACY_TOL && x > 0.0 {
        (f64::NEG_INFINITY, 1.0, 64.0 * n2s * n2s * x)
    } else if d < DEGENERACY_TOL {
        (0.0, 0.0, 64.0 * n1s * n2s * d)
    } else {
        let z = -(n2s / n1s) * x / d;
        (z, z / (z - 1.0), 64.0 * n1s * n2s * (1.0 - z) * d)
    };
    Ok(MixingCurveParams {
        z,
        z_infinite: z == f64::NEG_INFINITY,
        p0,
        theta1: principal_arg(num),
        theta2: principal_arg(den),
        prefactor,
    })
}

/// `Psi(p, phi_pm) = sqrt(p) psi1 + e^{i phi_pm} sqrt(1-p) psi2` with
/// `phi_pm = -(theta1 - theta2)/2 +- pi/2`.
pub fn superposition(params: &GParams, p: f64, plus: bool) -> Result<PureState> {
    check_probability(p)?;
    let dec = gfamily::rank2_decomposition(params)?;
    let mc = mixing_curve_params(params)?;
    let half_pi = if plus { PI / 2.0 } else { -PI / 2.0 };
    let phase = Complex64::from_polar(1.0, -(mc.theta1 - mc.theta2) / 2.0 + half_pi);
    let (w1, w2) = (p.sqrt(), (1.0 - p).sqrt());
    let amps = dec
        .psi1
        .amplitudes()
        .iter()
        .zip(dec.psi2.amplitudes())
        .map(|(x, y)| x * w1 + phase * y * w2)
        .collect();
    PureState::new(amps)
}

/// `tau_3(Psi(p, phi_pm)) = 64 N1^2 N2^2 (1-z) |(a^2-c^2)(b^2-c^2)| (1-p) |p-p0|`.
///
/// Evaluated as `64 (1-p) |N1^2 N2^2 D p - N2^4 X (1-p)|`, which is the
/// same expression with `z` eliminated and stays finite when `z = -inf`.
pub fn tau3_mixing(params: &GParams, p: f64) -> Result<f64> {
    check_probability(p)?;
    let norms = gfamily::norms(params)?;
    let (num, den) = mixing_moduli(params);
    let (n1s, n2s) = (norms.n1.powi(2), norms.n2.powi(2));
    Ok(64.0 * (1.0 - p) * (n1s * n2s * den.norm() * p - n2s * n2s * num.norm() * (1.0 - p)).abs())
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("probability {p} outside [0, 1]")))
    }
}

/// Which convex-roof three-way tangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RoofKind {
    /// `[min sum p_n sqrt(tau)]^mu1`
    T1,
    /// `[min sum p_n tau]^mu2`
    T2,
    /// `[min sum p_n tau^(1/q)]^q`
    T3,
}

impl RoofKind {
    pub const ALL: [RoofKind; 3] = [RoofKind::T1, RoofKind::T2, RoofKind::T3];

    pub fn index(self) -> u8 {
        match self {
            RoofKind::T1 => 1,
            RoofKind::T2 => 2,
            RoofKind::T3 => 3,
        }
    }

    pub fn from_index(j: u8) -> Result<Self> {
        match j {
            1 => Ok(RoofKind::T1),
            2 => Ok(RoofKind::T2),
            3 => Ok(RoofKind::T3),
            _ => Err(Error::InvalidArgument(format!("j must be 1, 2 or 3, got {j}"))),
        }
    }

    /// Conventional name of the power factor.
    pub fn power_name(self) -> &'static str {
        match self {
            RoofKind::T1 => "mu1",
            RoofKind::T2 => "mu2",
            RoofKind::T3 => "q",
        }
    }
}

impl FromStr for RoofKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim_start_matches('t')
            .parse::<u8>()
            .map_err(|_| Error::InvalidArgument(format!("bad roof kind {s}")))
            .and_then(Self::from_index)
    }
}

impl fmt::Display for RoofKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{}", self.index())
    }
}

/// Power-independent pieces of the three roof values of `rho_123`.
///
/// With `u = 1 - p/p0` (clamped at zero) and `tau2 = tau_3(psi2)`:
/// `t1 = (sqrt(tau2) u)^mu1`, `t2 = (tau2 (1-p) u)^mu2`, `t3 = tau2 u^q`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RoofBases {
    pub p: f64,
    pub u: f64,
    pub tau_psi2: f64,
}

impl RoofBases {
    pub fn new(params: &GParams) -> Self {
        let s = params.weight();
        let (num, den) = mixing_moduli(params);
        let (x, d) = (num.norm(), den.norm());
        let p = s / (2.0 * (1.0 + s));
        let n2s = 1.0 / (2.0 * (2.0 + s));
        let tau_psi2 = 64.0 * n2s * n2s * x;
        if x == 0.0 || s < DEGENERACY_TOL {
            return Self { p, u: 0.0, tau_psi2 };
        }
        // p/p0 = p + p N1^2 D / (N2^2 X) and p N1^2 = 1 / (4 (1+s))
        let d = if d < DEGENERACY_TOL { 0.0 } else { d };
        let u = (1.0 - p - d * (2.0 + s) / (2.0 * (1.0 + s) * x)).max(0.0);
        Self { p, u, tau_psi2 }
    }

    /// The quantity raised to the power factor (for `T3`, the factor `u`).
    pub fn base(&self, kind: RoofKind) -> f64 {
        match kind {
            RoofKind::T1 => self.tau_psi2.sqrt() * self.u,
            RoofKind::T2 => self.tau_psi2 * (1.0 - self.p) * self.u,
            RoofKind::T3 => self.u,
        }
    }

    pub fn value(&self, kind: RoofKind, power: f64) -> f64 {
        if self.u <= 0.0 {
            return 0.0;
        }
        match kind {
            RoofKind::T1 | RoofKind::T2 => self.base(kind).powf(power),
            RoofKind::T3 => self.tau_psi2 * self.u.powf(power),
        }
    }
}

/// A convex-roof three-way tangle at a given power factor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RoofValue {
    pub kind: RoofKind,
    pub power: f64,
    pub value: f64,
}

pub fn check_power(power: f64) -> Result<()> {
    if power > 0.0 && power.is_finite() {
        Ok(())
    } else {
        Err(Error::BadPower(power))
    }
}

/// `t^(kind)_{1|2|3}` of `|G(params)>`; identical for the other three
/// triples containing qubit 1.
pub fn roof_t(params: &GParams, kind: RoofKind, power: f64) -> Result<RoofValue> {
    check_power(power)?;
    Ok(RoofValue {
        kind,
        power,
        value: RoofBases::new(params).value(kind, power),
    })
}
