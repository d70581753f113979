//! Monogamy leftovers: the CKW residual, the n-qubit monogamy gap, the
//! average leftover `theta` and the weighted four-qubit leftovers
//! `Delta_j = t_{1|234} - sum t_{1|k} - sum t^(j)_{1|k|l}`.

use crate::gfamily::{self, GParams, Pair};
use crate::qcore::PureState;
use crate::tangles::{self, check_power, RoofBases, RoofKind};
use crate::{Error, Result};
use serde::Serialize;

/// `C^2_{A|BC} - C^2_{A|B} - C^2_{A|C}` of a three-qubit pure state.
pub fn ckw_residual(state: &PureState) -> Result<f64> {
    state.require_qubits(3)?;
    nqubit_monogamy_gap(state, 0)
}

/// `C^2_{focus|rest} - sum_j C^2_{focus|j}` for three to five qubits.
pub fn nqubit_monogamy_gap(state: &PureState, focus: usize) -> Result<f64> {
    let n = state.n_qubits();
    if !(3..=5).contains(&n) {
        return Err(Error::WrongQubitCount {
            expected: "3..=5".into(),
            actual: n,
        });
    }
    let mut gap = tangles::one_tangle(state, focus)?;
    for other in (0..n).filter(|&q| q != focus) {
        let rho = state.reduced_matrix(&[focus, other])?;
        gap -= tangles::concurrence_matrix(&rho)?.powi(2);
    }
    Ok(gap)
}

/// Average of the four single-focus gaps of a four-qubit state.
pub fn theta_average(state: &PureState) -> Result<f64> {
    state.require_qubits(4)?;
    let mut sum = 0.0;
    for focus in 0..4 {
        sum += nqubit_monogamy_gap(state, focus)?;
    }
    Ok(sum / 4.0)
}

/// Every term of one `Delta_j` evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DeltaReport {
    pub j: u8,
    pub power: f64,
    pub one_tangle: f64,
    pub pair_tangles: [f64; 3],
    pub triple_tangles: [f64; 3],
    pub delta: f64,
}

impl DeltaReport {
    /// Recomputes `delta` from the stored terms.
    pub fn recompute(&self) -> f64 {
        leftover(self.one_tangle, &self.pair_tangles, &self.triple_tangles)
    }
}

fn leftover(one: f64, pairs: &[f64; 3], triples: &[f64; 3]) -> f64 {
    one - pairs.iter().sum::<f64>() - triples.iter().sum::<f64>()
}

/// Power-independent ingredients of `Delta_j` for one `|G>`; evaluating a
/// leftover at a new power costs a single `powf`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MonogamyProfile {
    pub one_tangle: f64,
    pub pair_tangles: [f64; 3],
    pub roof: RoofBases,
}

impl MonogamyProfile {
    pub fn new(params: &GParams) -> Result<Self> {
        if params.is_degenerate() {
            return Err(Error::DegenerateFamily(params.weight()));
        }
        let pair_tangles = Pair::ALL.map(|pair| tangles::concurrence_closed_form(params, pair).powi(2));
        Ok(Self {
            one_tangle: tangles::one_tangle_closed_form(params),
            pair_tangles,
            roof: RoofBases::new(params),
        })
    }

    /// `t_{1|234} - sum t_{1|k}`, the leftover without three-way terms.
    pub fn gap(&self) -> f64 {
        leftover(self.one_tangle, &self.pair_tangles, &[0.0; 3])
    }

    pub fn delta(&self, kind: RoofKind, power: f64) -> f64 {
        let t = self.roof.value(kind, power);
        leftover(self.one_tangle, &self.pair_tangles, &[t; 3])
    }

    pub fn report(&self, kind: RoofKind, power: f64) -> DeltaReport {
        let t = self.roof.value(kind, power);
        let triple_tangles = [t; 3];
        DeltaReport {
            j: kind.index(),
            power,
            one_tangle: self.one_tangle,
            pair_tangles: self.pair_tangles,
            triple_tangles,
            delta: leftover(self.one_tangle, &self.pair_tangles, &triple_tangles),
        }
    }
}

/// `Delta_j` of `|G(params)>` at the given power factor.
pub fn delta(params: &GParams, kind: RoofKind, power: f64) -> Result<DeltaReport> {
    check_power(power)?;
    gfamily::norms(params)?;
    Ok(MonogamyProfile::new(params)?.report(kind, power))
}

/// Piecewise `f(a)` of the `b = c = ia` slice, with half-open pieces
/// `[0, sqrt2/3)`, `[sqrt2/3, sqrt(2/3))`, `[sqrt(2/3), 1)`, `[1, inf)`.
pub fn case1_f(a: f64) -> f64 {
    let s2 = std::f64::consts::SQRT_2;
    if a < s2 / 3.0 {
        a * (4.0 + 6.0 * s2 - 3.0 * a)
    } else if a < (2.0f64 / 3.0).sqrt() {
        2.0 * (1.0 + 2.0 * a + 3.0 * a * a)
    } else if a < 1.0 {
        a * (4.0 + a + 4.0 * (2.0 + a * a).sqrt())
    } else {
        2.0 + 3.0 * a * a + 4.0 * a * (2.0 + a * a).sqrt()
    }
}

/// Closed-form `Delta_j` on the `b = c = ia` slice:
/// `-3 t^(j) + 2 a^2 f(a) / (1 + 4a^2)^2`.
pub fn case1_delta(a: f64, kind: RoofKind, power: f64) -> f64 {
    let d = 1.0 + 4.0 * a * a;
    let a3 = a.powi(3);
    let t = match kind {
        RoofKind::T1 => ((8.0 * a3).sqrt() / d).powf(power),
        RoofKind::T2 => (8.0 * a3 / (d * d)).powf(power),
        RoofKind::T3 => 8.0 * a3 * (1.0 + 2.0 * a * a).powf(power - 2.0) / d.powf(power),
    };
    -3.0 * t + 2.0 * a * a * case1_f(a) / (d * d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ckw_examples() {
        assert!(ckw_residual(&PureState::w3()).unwrap().abs() < 1e-10);
        assert!((ckw_residual(&PureState::ghz(3)).unwrap() - 1.0).abs() < 1e-12);
        assert!(ckw_residual(&PureState::basis(3, 0)).unwrap().abs() < 1e-15);
        assert!(ckw_residual(&PureState::ghz(4)).is_err());
    }

    #[test]
    fn gap_examples() {
        assert!(nqubit_monogamy_gap(&PureState::w3(), 0).unwrap().abs() < 1e-10);
        let g3 = PureState::ghz(3).tensor(&PureState::basis(1, 0));
        assert!(nqubit_monogamy_gap(&g3, 3).unwrap().abs() < 1e-15);
        assert!(nqubit_monogamy_gap(&PureState::bell(), 0).is_err());
    }

    #[test]
    fn theta_examples() {
        let g3 = PureState::ghz(3).tensor(&PureState::basis(1, 0));
        assert!((theta_average(&g3).unwrap() - 0.75).abs() < 1e-12);
        assert_eq!(theta_average(&PureState::basis(4, 0)).unwrap(), 0.0);
        assert!((theta_average(&PureState::ghz(4)).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn case1_a1_mu3() {
        let r = delta(&GParams::case1(1.0), RoofKind::T1, 3.0).unwrap();
        let f1 = 5.0 + 4.0 * 3f64.sqrt();
        let expect = -3.0 * (8f64.sqrt() / 5.0).powi(3) + 2.0 * f1 / 25.0;
        assert!((r.delta - expect).abs() < 1e-12);
        assert_eq!(r.delta, r.recompute());
    }

    #[test]
    fn f_is_continuous_at_boundaries() {
        for x in [2f64.sqrt() / 3.0, (2.0f64 / 3.0).sqrt(), 1.0] {
            let (lo, hi) = (case1_f(x - 1e-12), case1_f(x));
            assert!((lo - hi).abs() < 1e-10, "jump at {x}: {lo} vs {hi}");
        }
    }

    #[test]
    fn degenerate_and_bad_power() {
        assert!(matches!(delta(&GParams::case1(0.0), RoofKind::T1, 2.0), Err(Error::DegenerateFamily(_))));
        assert!(matches!(delta(&GParams::case1(1.0), RoofKind::T1, 0.0), Err(Error::BadPower(_))));
    }
}
