//! Complex linear-algebra substrate: pure states, density matrices, partial
//! traces, Pauli operators and a Jacobi eigensolver for small Hermitian
//! matrices.

mod density;
mod eigen;
mod pauli;
mod state;

pub use density::{density_of, partial_trace, spin_flip, DensityMatrix};
pub use eigen::{hermitian_eigen, hermitian_eigenvalues, HermitianEigen};
pub use pauli::{Mat2, PauliBasis, PAULI_METRIC};
pub use state::PureState;

use nalgebra::DMatrix;
use num_complex::Complex64;

/// Dense complex matrix used throughout the crate.
pub type CMat = DMatrix<Complex64>;

/// Entrywise Hermiticity and trace tolerance for density matrices.
pub const HERM_TOL: f64 = 1e-12;
/// Hermiticity tolerance accepted by the eigensolver.
pub const EIG_TOL: f64 = 1e-10;
/// Eigenvalues down to `-PSD_TOL` count as zero.
pub const PSD_TOL: f64 = 1e-10;
/// Allowed deviation of `<psi|psi>` from one for a normalized state.
pub const NORM_TOL: f64 = 1e-12;
/// Norms below this are treated as the zero vector.
pub const ZERO_NORM: f64 = 1e-14;

/// Largest entrywise deviation `|m_ij - conj(m_ji)|`.
pub fn hermitian_deviation(m: &CMat) -> f64 {
    let n = m.nrows();
    let mut dev = 0.0_f64;
    for i in 0..n {
        for j in i..n {
            dev = dev.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    dev
}

/// Clamp an eigenvalue that is negative only through rounding.
pub fn clamp_psd(x: f64) -> f64 {
    if (-PSD_TOL..0.0).contains(&x) {
        0.0
    } else {
        x
    }
}
