//! The second-class four-qubit family `|G(a, b, c)>` with its
//! normalizations and closed-form reduced states.

use crate::qcore::{CMat, DensityMatrix, PureState};
use crate::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Squared-norm floor below which `N1` is considered divergent.
pub const DEGENERACY_TOL: f64 = 1e-28;
const PARAM_BOUND: f64 = 1e6;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Complex parameters `(a, b, c)` of `|G>`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GParams {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
}

impl GParams {
    pub fn new(a: Complex64, b: Complex64, c: Complex64) -> Result<Self> {
        let ok = |z: Complex64| z.re.is_finite() && z.im.is_finite() && z.norm() <= PARAM_BOUND;
        if ok(a) && ok(b) && ok(c) {
            Ok(Self { a, b, c })
        } else {
            Err(Error::InvalidParams)
        }
    }

    /// `b = c = i a` with real `a`.
    pub fn case1(a: f64) -> Self {
        let ia = Complex64::new(0.0, a);
        Self {
            a: Complex64::new(a, 0.0),
            b: ia,
            c: ia,
        }
    }

    /// Real `a` and `b = c`.
    pub fn case2(a: f64, b: f64) -> Self {
        Self {
            a: Complex64::new(a, 0.0),
            b: Complex64::new(b, 0.0),
            c: Complex64::new(b, 0.0),
        }
    }

    /// `|a|^2 + |b|^2 + 2|c|^2`.
    pub fn weight(&self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr() + 2.0 * self.c.norm_sqr()
    }

    pub fn is_degenerate(&self) -> bool {
        self.weight() < DEGENERACY_TOL
    }
}

impl fmt::Display for GParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={} b={} c={}", self.a, self.b, self.c)
    }
}

/// Normalization constants `N`, `N1`, `N2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GNorms {
    pub n: f64,
    pub n1: f64,
    pub n2: f64,
}

impl GNorms {
    /// The identity `1/N1^2 + 1/N2^2 - 4/N^2`, zero up to rounding.
    pub fn identity_defect(&self) -> f64 {
        1.0 / self.n1.powi(2) + 1.0 / self.n2.powi(2) - 4.0 / self.n.powi(2)
    }
}

/// Entries of the closed-form two-qubit marginals `rho_13`, `rho_14`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GreekParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: Complex64,
    pub alpha_p: f64,
    pub beta_p: f64,
    pub gamma_p: f64,
    pub delta_p: Complex64,
}

/// Pairs of qubits that include qubit 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pair {
    P12,
    P13,
    P14,
}

impl Pair {
    pub const ALL: [Pair; 3] = [Pair::P12, Pair::P13, Pair::P14];

    /// Zero-based qubit indices.
    pub fn qubits(self) -> [usize; 2] {
        match self {
            Pair::P12 => [0, 1],
            Pair::P13 => [0, 2],
            Pair::P14 => [0, 3],
        }
    }
}

impl FromStr for Pair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "12" => Ok(Pair::P12),
            "13" => Ok(Pair::P13),
            "14" => Ok(Pair::P14),
            other => Err(Error::BadPair(other.to_string())),
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Pair::P12 => "12",
            Pair::P13 => "13",
            Pair::P14 => "14",
        };
        f.write_str(s)
    }
}

/// `rho_123 = p |psi1><psi1| + (1-p) |psi2><psi2|`.
#[derive(Debug, Clone, PartialEq)]
pub struct Rank2Decomposition {
    pub p: f64,
    pub psi1: PureState,
    pub psi2: PureState,
}

/// Builds the normalized 16-amplitude state.
pub fn build_state(params: &GParams) -> Result<PureState> {
    let GParams { a, b, c } = *params;
    let mut amps = vec![ZERO; 16];
    let plus = (a + b) / 2.0;
    let minus = (a - b) / 2.0;
    amps[0b0000] = plus;
    amps[0b1111] = plus;
    amps[0b0011] = minus;
    amps[0b1100] = minus;
    amps[0b0101] = c;
    amps[0b1010] = c;
    amps[0b0110] = Complex64::new(1.0, 0.0);
    PureState::new(amps)?.normalize()
}

pub fn norms(params: &GParams) -> Result<GNorms> {
    let s = params.weight();
    if s < DEGENERACY_TOL {
        return Err(Error::DegenerateFamily(s));
    }
    Ok(GNorms {
        n: 1.0 / (1.0 + s).sqrt(),
        n1: 1.0 / (2.0 * s).sqrt(),
        n2: 1.0 / (2.0 * (2.0 + s)).sqrt(),
    })
}

pub fn greek(params: &GParams) -> GreekParams {
    let GParams { a, b, c } = *params;
    let sum = a + b;
    let diff = a - b;
    let c2 = c.norm_sqr();
    GreekParams {
        alpha: (sum * c.conj()).re,
        beta: sum.norm_sqr() / 4.0 + c2,
        gamma: diff.norm_sqr() / 4.0,
        delta: diff / 2.0,
        alpha_p: (diff * c.conj()).re,
        beta_p: diff.norm_sqr() / 4.0 + c2,
        gamma_p: sum.norm_sqr() / 4.0,
        delta_p: sum / 2.0,
    }
}

/// Closed-form single-qubit marginal, `diag(N^2/(4 N2^2), N^2/(4 N1^2))`.
///
/// Written as `diag((1 + s/2), s/2) / (1 + s)` so it stays finite for the
/// degenerate point `a = b = c = 0`.
pub fn reduced_one(params: &GParams) -> DensityMatrix {
    let s = params.weight();
    let n2 = 1.0 / (1.0 + s);
    let mut m = CMat::zeros(2, 2);
    m[(0, 0)] = Complex64::new(n2 * (1.0 + s / 2.0), 0.0);
    m[(1, 1)] = Complex64::new(n2 * s / 2.0, 0.0);
    DensityMatrix::trusted(m)
}

/// Closed-form two-qubit marginal of qubit 1 with qubit 2, 3 or 4.
pub fn reduced_two(params: &GParams, pair: Pair) -> DensityMatrix {
    let n2 = 1.0 / (1.0 + params.weight());
    let r = |x: f64| Complex64::new(x, 0.0);
    let m = match pair {
        Pair::P12 => {
            let (a2, b2) = (params.a.norm_sqr(), params.b.norm_sqr());
            let c = params.c;
            let c2 = c.norm_sqr();
            let d = r((a2 + b2) / 2.0);
            let o = r((a2 - b2) / 2.0);
            CMat::from_row_slice(
                4,
                4,
                &[
                    d, ZERO, ZERO, o, //
                    ZERO, r(1.0 + c2), c.conj(), ZERO, //
                    ZERO, c, r(c2), ZERO, //
                    o, ZERO, ZERO, d,
                ],
            )
        }
        Pair::P13 => {
            let g = greek(params);
            CMat::from_row_slice(
                4,
                4,
                &[
                    r(g.beta), ZERO, ZERO, r(g.alpha), //
                    ZERO, r(g.gamma + 1.0), g.delta.conj(), ZERO, //
                    ZERO, g.delta, r(g.gamma), ZERO, //
                    r(g.alpha), ZERO, ZERO, r(g.beta),
                ],
            )
        }
        Pair::P14 => {
            let g = greek(params);
            CMat::from_row_slice(
                4,
                4,
                &[
                    r(g.gamma_p + 1.0), ZERO, ZERO, g.delta_p.conj(), //
                    ZERO, r(g.beta_p), r(g.alpha_p), ZERO, //
                    ZERO, r(g.alpha_p), r(g.beta_p), ZERO, //
                    g.delta_p, ZERO, ZERO, r(g.gamma_p),
                ],
            )
        }
    };
    DensityMatrix::trusted(m.map(|z| z * n2))
}

/// Splits `rho_123 = tr_4 |G><G|` into its two orthogonal pure components.
///
/// At the degenerate point `a = b = c = 0` the marginal is the pure state
/// `|011>`: `p` is `0`, `psi2 = |011>` and `psi1` is the placeholder `|001>`.
pub fn rank2_decomposition(params: &GParams) -> Result<Rank2Decomposition> {
    if params.is_degenerate() {
        return Ok(Rank2Decomposition {
            p: 0.0,
            psi1: PureState::basis(3, 0b001),
            psi2: PureState::basis(3, 0b011),
        });
    }
    let GNorms { n, n1, n2 } = norms(params)?;
    let GParams { a, b, c } = *params;
    let mut v1 = vec![ZERO; 8];
    v1[0b001] = (a - b) * n1;
    v1[0b010] = c * 2.0 * n1;
    v1[0b111] = (a + b) * n1;
    let mut v2 = vec![ZERO; 8];
    v2[0b000] = (a + b) * n2;
    v2[0b011] = Complex64::new(2.0 * n2, 0.0);
    v2[0b101] = c * 2.0 * n2;
    v2[0b110] = (a - b) * n2;
    Ok(Rank2Decomposition {
        p: n * n / (4.0 * n1 * n1),
        psi1: PureState::new(v1)?,
        psi2: PureState::new(v2)?,
    })
}
