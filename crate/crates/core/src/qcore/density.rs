use super::eigen::hermitian_eigenvalues;
use super::state::{complement, scatter};
use super::{hermitian_deviation, CMat, PureState, HERM_TOL, PSD_TOL};
use crate::{Error, Result};
use num_complex::Complex64;

/// Hermitian, unit-trace, positive semidefinite matrix on `n` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    n_qubits: usize,
    m: CMat,
}

impl DensityMatrix {
    /// Validates Hermiticity, trace and positivity.
    pub fn new(m: CMat) -> Result<Self> {
        let dim = m.nrows();
        if m.ncols() != dim || dim < 2 || !dim.is_power_of_two() {
            return Err(Error::NotDensityMatrix(format!(
                "shape {}x{} is not a square power of two",
                m.nrows(),
                m.ncols()
            )));
        }
        let dev = hermitian_deviation(&m);
        if dev > HERM_TOL {
            return Err(Error::NotDensityMatrix(format!(
                "Hermiticity deviation {dev:e}"
            )));
        }
        let tr = m.trace();
        if (tr - Complex64::new(1.0, 0.0)).norm() > HERM_TOL {
            return Err(Error::NotDensityMatrix(format!("trace {tr}")));
        }
        let lowest = *hermitian_eigenvalues(&m)?.last().unwrap();
        if lowest < -PSD_TOL {
            return Err(Error::NotDensityMatrix(format!(
                "negative eigenvalue {lowest:e}"
            )));
        }
        Ok(Self::trusted(m))
    }

    /// Wraps a matrix that is a density matrix by construction.
    pub(crate) fn trusted(m: CMat) -> Self {
        Self {
            n_qubits: m.nrows().trailing_zeros() as usize,
            m,
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &CMat {
        &self.m
    }

    pub fn into_matrix(self) -> CMat {
        self.m
    }

    pub fn trace(&self) -> Complex64 {
        self.m.trace()
    }

    pub fn determinant(&self) -> Complex64 {
        self.m.determinant()
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        hermitian_eigenvalues(&self.m)
    }

    pub fn mix(&self, other: &DensityMatrix, weight: f64) -> Result<DensityMatrix> {
        if self.dim() != other.dim() {
            return Err(Error::WrongDim {
                expected: self.dim(),
                actual: other.dim(),
            });
        }
        let w = Complex64::new(weight, 0.0);
        let v = Complex64::new(1.0 - weight, 0.0);
        Ok(Self::trusted(self.m.map(|x| x * w) + other.m.map(|x| x * v)))
    }
}

/// `|psi><psi|` for a normalized state.
pub fn density_of(state: &PureState) -> Result<DensityMatrix> {
    state.require_normalized()?;
    let a = state.amplitudes();
    let n = a.len();
    Ok(DensityMatrix::trusted(CMat::from_fn(n, n, |i, j| {
        a[i] * a[j].conj()
    })))
}

/// Traces out every qubit not listed in `keep`. The kept qubits appear in
/// the order given.
pub fn partial_trace(rho: &DensityMatrix, keep: &[usize]) -> Result<DensityMatrix> {
    let n = rho.n_qubits();
    let traced = complement(keep, n)?;
    let dk = 1 << keep.len();
    let dt = 1 << traced.len();
    let m = rho.matrix();
    let mut out = CMat::zeros(dk, dk);
    for r in 0..dk {
        let row = scatter(r, keep, n);
        for c in 0..dk {
            let col = scatter(c, keep, n);
            let mut acc = Complex64::new(0.0, 0.0);
            for t in 0..dt {
                let base = scatter(t, &traced, n);
                acc += m[(row | base, col | base)];
            }
            out[(r, c)] = acc;
        }
    }
    Ok(DensityMatrix::trusted(out))
}

/// `(sigma_y (x) sigma_y) rho^* (sigma_y (x) sigma_y)` in the computational
/// basis.
pub fn spin_flip(rho: &DensityMatrix) -> Result<CMat> {
    if rho.dim() != 4 {
        return Err(Error::WrongDim {
            expected: 4,
            actual: rho.dim(),
        });
    }
    Ok(spin_flip_matrix(rho.matrix()))
}

/// `sigma_y (x) sigma_y` is real and antidiagonal `(-1, 1, 1, -1)`, so the
/// flip reduces to `m~_ij = s_i s_j conj(m_{3-i,3-j})`.
fn spin_flip_matrix(m: &CMat) -> CMat {
    const SIGN: [f64; 4] = [-1.0, 1.0, 1.0, -1.0];
    CMat::from_fn(4, 4, |i, j| m[(3 - i, 3 - j)].conj() * (SIGN[i] * SIGN[j]))
}
