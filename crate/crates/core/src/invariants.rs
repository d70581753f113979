//! SLOCC-invariant four-way measures built from Pauli bilinear forms
//! `<psi*| s_mu (x) s_nu (x) s_la (x) s_ta |psi>`, contracted with the metric
//! `diag(-1, 1, 0, 1)`, and the least-squares comparison of `Delta_1`
//! against them.

use crate::gfamily::{build_state, GParams};
use crate::monogamy;
use crate::qcore::{PauliBasis, PureState, PAULI_METRIC};
use crate::tangles::{check_power, RoofKind};
use crate::{Error, Result};
use nalgebra::{DMatrix, DVector, Matrix3, Vector3};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

const Y: usize = 2;
/// Diagonal regularization added to the normal equations.
pub const FIT_RIDGE: f64 = 1e-12;
/// Smallest accepted ratio of design singular values.
const RANK_TOL: f64 = 1e-10;

/// `(F1, F2, F3)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InvariantTriple {
    pub f1: f64,
    pub f2: f64,
    pub f3: f64,
}

impl InvariantTriple {
    pub fn as_array(&self) -> [f64; 3] {
        [self.f1, self.f2, self.f3]
    }
}

/// Bilinear (not sesquilinear) form `psi^T (s_i (x) s_j (x) s_k (x) s_l) psi`.
pub fn bilinear_form(state: &PureState, ops: [usize; 4]) -> Result<Complex64> {
    state.require_qubits(4)?;
    if let Some(&bad) = ops.iter().find(|&&k| k > 3) {
        return Err(Error::BadIndex {
            index: bad,
            n_qubits: 4,
        });
    }
    let mut phi = state.clone();
    for (qubit, &k) in ops.iter().enumerate() {
        if k != 0 {
            phi = phi.apply_single(PauliBasis::op(k), qubit)?;
        }
    }
    Ok(state
        .amplitudes()
        .iter()
        .zip(phi.amplitudes())
        .map(|(x, y)| x * y)
        .sum())
}

/// All 256 bilinear forms of one state.
struct FormTable([Complex64; 256]);

impl FormTable {
    fn new(state: &PureState) -> Result<Self> {
        let mut t = [Complex64::new(0.0, 0.0); 256];
        for (idx, slot) in t.iter_mut().enumerate() {
            *slot = bilinear_form(state, [idx >> 6, (idx >> 4) & 3, (idx >> 2) & 3, idx & 3])?;
        }
        Ok(Self(t))
    }

    fn get(&self, i: usize, j: usize, k: usize, l: usize) -> Complex64 {
        self.0[(i << 6) | (j << 4) | (k << 2) | l]
    }
}

/// Indices with nonzero metric weight, paired with the weight.
fn contracted() -> impl Iterator<Item = (usize, f64)> + Clone {
    (0..4).filter(|&k| PAULI_METRIC[k] != 0.0).map(|k| (k, PAULI_METRIC[k]))
}

pub fn f_invariants(state: &PureState) -> Result<InvariantTriple> {
    state.require_qubits(4)?;
    let b = FormTable::new(state)?;
    let zero = Complex64::new(0.0, 0.0);

    let mut f1 = zero;
    for (mu, gm) in contracted() {
        for (nu, gn) in contracted() {
            for (la, gl) in contracted() {
                f1 += b.get(mu, nu, Y, Y) * b.get(mu, Y, la, Y) * b.get(Y, nu, la, Y) * (gm * gn * gl);
            }
        }
    }

    let mut f2 = zero;
    for (mu, gm) in contracted() {
        for (nu, gn) in contracted() {
            for (la, gl) in contracted() {
                for (ta, gt) in contracted() {
                    f2 += b.get(mu, nu, Y, Y)
                        * b.get(mu, Y, la, Y)
                        * b.get(Y, nu, Y, ta)
                        * b.get(Y, Y, la, ta)
                        * (gm * gn * gl * gt);
                }
            }
        }
    }

    let square_sum = |form: &dyn Fn(usize, usize) -> Complex64| {
        let mut s = zero;
        for (i, gi) in contracted() {
            for (j, gj) in contracted() {
                s += form(i, j).powi(2) * (gi * gj);
            }
        }
        s
    };
    let x = square_sum(&|i, j| b.get(i, j, Y, Y));
    let y = square_sum(&|i, j| b.get(i, Y, j, Y));
    let z = square_sum(&|i, j| b.get(i, Y, Y, j));

    Ok(InvariantTriple {
        f1: f1.norm(),
        f2: f2.norm(),
        f3: 0.5 * (x * y * z).norm(),
    })
}

/// `F_j` on the `b = c = ia` slice:
/// `48a^6/(1+4a^2)^3`, `96a^8/(1+4a^2)^4`, `3456a^12/(1+4a^2)^6`.
pub fn f_closed_forms_case1(a: f64) -> InvariantTriple {
    let d = 1.0 + 4.0 * a * a;
    InvariantTriple {
        f1: 48.0 * a.powi(6) / d.powi(3),
        f2: 96.0 * a.powi(8) / d.powi(4),
        f3: 3456.0 * a.powi(12) / d.powi(6),
    }
}

/// Ordinary least squares of `target` on three basis columns.
///
/// Solved through the normal equations with a [`FIT_RIDGE`] diagonal
/// shift; rank deficiency is detected on the design matrix itself.
pub fn least_squares(design: &[[f64; 3]], target: &[f64]) -> Result<[f64; 3]> {
    if design.len() != target.len() {
        return Err(Error::InvalidArgument("design and target lengths differ".into()));
    }
    if design.len() < 3 {
        return Err(Error::SingularDesign);
    }
    let x = DMatrix::from_fn(design.len(), 3, |i, j| design[i][j]);
    let sv = x.clone().singular_values();
    let (smax, smin) = (sv.max(), sv.min());
    if !(smax > 0.0) || smin / smax < RANK_TOL {
        return Err(Error::SingularDesign);
    }
    let y = DVector::from_column_slice(target);
    let gram: Matrix3<f64> = (x.transpose() * &x).fixed_view::<3, 3>(0, 0).into_owned()
        + Matrix3::identity() * FIT_RIDGE;
    let rhs: Vector3<f64> = (x.transpose() * y).fixed_rows::<3>(0).into_owned();
    let c = gram.cholesky().ok_or(Error::SingularDesign)?.solve(&rhs);
    Ok([c[0], c[1], c[2]])
}

/// `sqrt(mean(r^2)) / sqrt(mean(y^2))`.
pub fn normalized_rms(design: &[[f64; 3]], target: &[f64], coeffs: &[f64; 3]) -> f64 {
    let (mut num, mut den) = (0.0, 0.0);
    for (row, &y) in design.iter().zip(target) {
        let fit: f64 = row.iter().zip(coeffs).map(|(x, c)| x * c).sum();
        num += (y - fit).powi(2);
        den += y * y;
    }
    if den == 0.0 {
        num.sqrt()
    } else {
        (num / den).sqrt()
    }
}

/// One point of the `Delta_1` versus `F` comparison on the `b = c = ia` slice.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FitSample {
    pub a: f64,
    pub delta1: f64,
    pub invariants: InvariantTriple,
}

/// Evaluates `Delta_1(mu1)` and `F_j` (through the contraction engine) on
/// each grid value of `a`.
pub fn fit_samples(a_grid: &[f64], mu1: f64) -> Result<Vec<FitSample>> {
    check_power(mu1)?;
    a_grid
        .par_iter()
        .map(|&a| {
            let params = GParams::case1(a);
            Ok(FitSample {
                a,
                delta1: monogamy::delta(&params, RoofKind::T1, mu1)?.delta,
                invariants: f_invariants(&build_state(&params)?)?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FitResult {
    pub mu1: f64,
    pub coefficients: [f64; 3],
    pub rms_residual: f64,
    pub grid: Vec<f64>,
}

impl FitResult {
    /// `sum_j c_j F_j` at one sample.
    pub fn predict(&self, f: &InvariantTriple) -> f64 {
        f.as_array().iter().zip(&self.coefficients).map(|(x, c)| x * c).sum()
    }

    /// Re-evaluates the residual from the stored grid and coefficients.
    pub fn recompute_rms(&self) -> Result<f64> {
        let samples = fit_samples(&self.grid, self.mu1)?;
        let (design, target) = split(&samples);
        Ok(normalized_rms(&design, &target, &self.coefficients))
    }
}

fn split(samples: &[FitSample]) -> (Vec<[f64; 3]>, Vec<f64>) {
    samples
        .iter()
        .map(|s| (s.invariants.as_array(), s.delta1))
        .unzip()
}

/// Least-squares fit `Delta_1(mu1) ~ c1 F1 + c2 F2 + c3 F3` on the
/// `b = c = ia` slice.
pub fn fit_delta_vs_invariants(a_grid: &[f64], mu1: f64) -> Result<FitResult> {
    check_power(mu1)?;
    let mut distinct = a_grid.to_vec();
    distinct.sort_by(f64::total_cmp);
    distinct.dedup();
    if distinct.len() < 4 {
        return Err(Error::SingularDesign);
    }
    let samples = fit_samples(a_grid, mu1)?;
    let (design, target) = split(&samples);
    let coefficients = least_squares(&design, &target)?;
    Ok(FitResult {
        mu1,
        coefficients,
        rms_residual: normalized_rms(&design, &target, &coefficients),
        grid: a_grid.to_vec(),
    })
}
