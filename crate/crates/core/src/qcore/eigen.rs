use super::{hermitian_deviation, CMat, EIG_TOL};
use crate::{Error, Result};
use num_complex::Complex64;

const MAX_SWEEPS: usize = 50;
const OFF_DIAG_TOL: f64 = 1e-14;

/// Eigen-decomposition of a Hermitian matrix, eigenvalues in descending
/// order with matching eigenvector columns.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: CMat,
}

impl HermitianEigen {
    /// `V f(Lambda) V^dagger`.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> CMat {
        let n = self.values.len();
        let mut scaled = self.vectors.clone();
        for (j, &lambda) in self.values.iter().enumerate() {
            let w = f(lambda);
            for i in 0..n {
                scaled[(i, j)] *= w;
            }
        }
        scaled * self.vectors.adjoint()
    }

    pub fn reconstruct(&self) -> CMat {
        self.map(|x| x)
    }
}

/// Cyclic complex Jacobi rotations.
///
/// Each rotation first removes the phase of the pivot `a_pq` and then
/// applies the real symmetric Jacobi rotation that zeroes it.
pub fn hermitian_eigen(m: &CMat) -> Result<HermitianEigen> {
    let n = m.nrows();
    if m.ncols() != n {
        return Err(Error::WrongDim {
            expected: n,
            actual: m.ncols(),
        });
    }
    let dev = hermitian_deviation(m);
    if dev > EIG_TOL {
        return Err(Error::NotHermitian(dev));
    }

    let mut a = (m + m.adjoint()).map(|x| x * 0.5);
    let mut v = CMat::identity(n, n);
    let scale = a.norm();

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= OFF_DIAG_TOL * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let r = apq.norm();
                if r == 0.0 {
                    continue;
                }
                let phase = apq / r;
                let phase_conj = phase.conj();
                let theta = 0.5 * (2.0 * r).atan2(a[(q, q)].re - a[(p, p)].re);
                let (s, c) = theta.sin_cos();

                // U: column p = (c, -s e^{-i phi}), column q = (s, c e^{-i phi})
                for k in 0..n {
                    let (akp, akq) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = akp * c - akq * phase_conj * s;
                    a[(k, q)] = akp * s + akq * phase_conj * c;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = apk * c - aqk * phase * s;
                    a[(q, k)] = apk * s + aqk * phase * c;
                }
                a[(p, q)] = Complex64::new(0.0, 0.0);
                a[(q, p)] = Complex64::new(0.0, 0.0);
                for k in 0..n {
                    let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = vkp * c - vkq * phase_conj * s;
                    v[(k, q)] = vkp * s + vkq * phase_conj * c;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = CMat::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok(HermitianEigen { values, vectors })
}

/// Eigenvalues of a Hermitian matrix in descending order.
pub fn hermitian_eigenvalues(m: &CMat) -> Result<Vec<f64>> {
    hermitian_eigen(m).map(|e| e.values)
}

fn off_diagonal_norm(a: &CMat) -> f64 {
    let n = a.nrows();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[(i, j)].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn diagonal_sorted_descending() {
        let m = CMat::from_diagonal(&nalgebra::DVector::from_vec(vec![
            c(3.0, 0.0),
            c(1.0, 0.0),
            c(2.0, 0.0),
            c(0.0, 0.0),
        ]));
        assert_eq!(hermitian_eigenvalues(&m).unwrap(), vec![3.0, 2.0, 1.0, 0.0]);
    }

    #[test]
    fn pauli_x() {
        let m = CMat::from_row_slice(2, 2, &[c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)]);
        let ev = hermitian_eigenvalues(&m).unwrap();
        assert!((ev[0] - 1.0).abs() < 1e-14);
        assert!((ev[1] + 1.0).abs() < 1e-14);
    }

    #[test]
    fn complex_pivot_reconstructs() {
        let m = CMat::from_row_slice(
            3,
            3,
            &[
                c(2.0, 0.0),
                c(0.5, -1.0),
                c(0.0, 0.3),
                c(0.5, 1.0),
                c(-1.0, 0.0),
                c(0.2, 0.2),
                c(0.0, -0.3),
                c(0.2, -0.2),
                c(0.7, 0.0),
            ],
        );
        let eig = hermitian_eigen(&m).unwrap();
        assert!((eig.reconstruct() - &m).norm() < 1e-12);
        let unit = eig.vectors.adjoint() * &eig.vectors;
        assert!((unit - CMat::identity(3, 3)).norm() < 1e-12);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = CMat::from_row_slice(2, 2, &[c(0., 0.), c(1., 0.), c(0., 0.), c(0., 0.)]);
        assert!(matches!(hermitian_eigen(&m), Err(Error::NotHermitian(_))));
    }
}
