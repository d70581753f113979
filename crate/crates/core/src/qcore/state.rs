use super::{CMat, Mat2, NORM_TOL, ZERO_NORM};
use crate::{Error, Result};
use num_complex::Complex64;

/// Amplitude vector of an `n`-qubit pure state.
///
/// Qubit `0` is the leftmost tensor factor, so basis label
/// `|i_0 i_1 ... i_{n-1}>` sits at index `sum_k i_k 2^(n-1-k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    n_qubits: usize,
    amps: Vec<Complex64>,
}

impl PureState {
    /// Wraps an amplitude vector without normalizing it.
    pub fn new(amps: Vec<Complex64>) -> Result<Self> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(len));
        }
        Ok(Self {
            n_qubits: len.trailing_zeros() as usize,
            amps,
        })
    }

    pub fn from_real(amps: &[f64]) -> Result<Self> {
        Self::new(amps.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Computational basis state `|index>`.
    pub fn basis(n_qubits: usize, index: usize) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        amps[index] = Complex64::new(1.0, 0.0);
        Self { n_qubits, amps }
    }

    /// `(|0...0> + |1...1>)/sqrt(2)`.
    pub fn ghz(n_qubits: usize) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        let h = std::f64::consts::FRAC_1_SQRT_2;
        amps[0] = Complex64::new(h, 0.0);
        amps[(1 << n_qubits) - 1] = Complex64::new(h, 0.0);
        Self { n_qubits, amps }
    }

    /// `(|001> + |010> + |100>)/sqrt(3)`.
    pub fn w3() -> Self {
        let w = 1.0 / 3f64.sqrt();
        let mut amps = vec![Complex64::new(0.0, 0.0); 8];
        for idx in [1, 2, 4] {
            amps[idx] = Complex64::new(w, 0.0);
        }
        Self { n_qubits: 3, amps }
    }

    /// `(|00> + |11>)/sqrt(2)`.
    pub fn bell() -> Self {
        Self::ghz(2)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm().powi(2) - 1.0).abs() <= NORM_TOL
    }

    pub fn normalize(&self) -> Result<Self> {
        let norm = self.norm();
        if !(norm >= ZERO_NORM) {
            return Err(Error::ZeroState);
        }
        Ok(Self {
            n_qubits: self.n_qubits,
            amps: self.amps.iter().map(|z| z / norm).collect(),
        })
    }

    pub(crate) fn require_normalized(&self) -> Result<()> {
        if self.is_normalized() {
            Ok(())
        } else {
            Err(Error::NotDensityMatrix(format!(
                "state norm^2 = {} is not 1",
                self.norm().powi(2)
            )))
        }
    }

    pub(crate) fn require_qubits(&self, n: usize) -> Result<()> {
        if self.n_qubits == n {
            Ok(())
        } else {
            Err(Error::WrongQubitCount {
                expected: n.to_string(),
                actual: self.n_qubits,
            })
        }
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &PureState) -> Complex64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(x, y)| x.conj() * y)
            .sum()
    }

    /// `|self> (x) |other>`.
    pub fn tensor(&self, other: &PureState) -> Self {
        let mut amps = Vec::with_capacity(self.dim() * other.dim());
        for x in &self.amps {
            for y in &other.amps {
                amps.push(x * y);
            }
        }
        Self {
            n_qubits: self.n_qubits + other.n_qubits,
            amps,
        }
    }

    /// Applies a 2x2 operator to one qubit.
    pub fn apply_single(&self, op: &Mat2, qubit: usize) -> Result<Self> {
        self.check_index(qubit)?;
        let bit = 1 << (self.n_qubits - 1 - qubit);
        let mut amps = self.amps.clone();
        for i in 0..self.dim() {
            if i & bit == 0 {
                let (x0, x1) = (self.amps[i], self.amps[i | bit]);
                amps[i] = op[0][0] * x0 + op[0][1] * x1;
                amps[i | bit] = op[1][0] * x0 + op[1][1] * x1;
            }
        }
        Ok(Self {
            n_qubits: self.n_qubits,
            amps,
        })
    }

    /// Reorders tensor factors: qubit `k` of the result is qubit `perm[k]`
    /// of `self`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        let n = self.n_qubits;
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::BadSubset {
                keep: perm.to_vec(),
                n_qubits: n,
            });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); self.dim()];
        for (new_idx, slot) in amps.iter_mut().enumerate() {
            let mut old_idx = 0;
            for (k, &p) in perm.iter().enumerate() {
                let b = (new_idx >> (n - 1 - k)) & 1;
                old_idx |= b << (n - 1 - p);
            }
            *slot = self.amps[old_idx];
        }
        Ok(Self { n_qubits: n, amps })
    }

    /// Reduced density matrix on the ordered qubit list `keep`, computed
    /// straight from the amplitudes. The result is not validated; see
    /// [`super::partial_trace`] for the checked route.
    pub fn reduced_matrix(&self, keep: &[usize]) -> Result<CMat> {
        let n = self.n_qubits;
        let traced = complement(keep, n)?;
        let k = keep.len();
        let dk = 1 << k;
        let dt = 1 << traced.len();
        let mut m = CMat::zeros(dk, dk);
        for t in 0..dt {
            let base = scatter(t, &traced, n);
            for r in 0..dk {
                let ar = self.amps[base | scatter(r, keep, n)];
                if ar == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for c in 0..dk {
                    m[(r, c)] += ar * self.amps[base | scatter(c, keep, n)].conj();
                }
            }
        }
        Ok(m)
    }

    fn check_index(&self, q: usize) -> Result<()> {
        if q < self.n_qubits {
            Ok(())
        } else {
            Err(Error::BadIndex {
                index: q,
                n_qubits: self.n_qubits,
            })
        }
    }
}

/// Validates `keep` (nonempty, distinct, in range, not every qubit) and
/// returns the traced-out qubits in ascending order.
pub(crate) fn complement(keep: &[usize], n: usize) -> Result<Vec<usize>> {
    let bad = || Error::BadSubset {
        keep: keep.to_vec(),
        n_qubits: n,
    };
    if keep.is_empty() || keep.len() >= n {
        return Err(bad());
    }
    let mut seen = vec![false; n];
    for &q in keep {
        if q >= n || seen[q] {
            return Err(bad());
        }
        seen[q] = true;
    }
    Ok((0..n).filter(|&q| !seen[q]).collect())
}

/// Spreads the bits of `value` (most significant first) onto the listed
/// qubit positions of an `n`-qubit basis index.
pub(crate) fn scatter(value: usize, qubits: &[usize], n: usize) -> usize {
    let k = qubits.len();
    let mut idx = 0;
    for (pos, &q) in qubits.iter().enumerate() {
        let b = (value >> (k - 1 - pos)) & 1;
        idx |= b << (n - 1 - q);
    }
    idx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_uniform() {
        let s = PureState::from_real(&[1.0, 1.0]).unwrap().normalize().unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        for z in s.amplitudes() {
            assert!((z.re - h).abs() < 1e-15 && z.im == 0.0);
        }
    }

    #[test]
    fn normalize_is_idempotent() {
        let b = PureState::bell();
        let again = b.normalize().unwrap();
        for (x, y) in b.amplitudes().iter().zip(again.amplitudes()) {
            assert!((x - y).norm() < 1e-15);
        }
    }

    #[test]
    fn zero_vector_rejected() {
        let z = PureState::from_real(&[0.0; 4]).unwrap();
        assert!(matches!(z.normalize(), Err(Error::ZeroState)));
    }

    #[test]
    fn non_power_of_two_rejected() {
        assert!(PureState::from_real(&[1.0, 0.0, 0.0]).is_err());
    }

    #[test]
    fn permute_moves_factors() {
        // |01> -> |10>
        let s = PureState::basis(2, 0b01);
        assert_eq!(s.permute(&[1, 0]).unwrap(), PureState::basis(2, 0b10));
        let s = PureState::basis(3, 0b011);
        assert_eq!(s.permute(&[2, 0, 1]).unwrap(), PureState::basis(3, 0b101));
        assert!(s.permute(&[0, 0, 1]).is_err());
    }

    #[test]
    fn apply_x_flips_qubit() {
        let x = super::super::PauliBasis::op(1);
        let s = PureState::basis(3, 0).apply_single(x, 0).unwrap();
        assert_eq!(s, PureState::basis(3, 0b100));
        assert!(PureState::basis(3, 0).apply_single(x, 3).is_err());
    }
}
