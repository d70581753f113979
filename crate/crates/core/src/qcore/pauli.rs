use num_complex::Complex64;

/// A 2x2 complex matrix, row major.
pub type Mat2 = [[Complex64; 2]; 2];

/// Diagonal metric used to contract Pauli indices: `diag(-1, 1, 0, 1)`.
pub const PAULI_METRIC: [f64; 4] = [-1.0, 1.0, 0.0, 1.0];

const O: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);
const NEG_I: Complex64 = Complex64::new(0.0, -1.0);
const NEG_ONE: Complex64 = Complex64::new(-1.0, 0.0);

/// `sigma_0 = 1`, `sigma_1 = X`, `sigma_2 = Y`, `sigma_3 = Z` together with
/// the contraction metric.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliBasis {
    pub ops: [Mat2; 4],
    pub metric: [f64; 4],
}

impl PauliBasis {
    pub const STANDARD: PauliBasis = PauliBasis {
        ops: [
            [[ONE, O], [O, ONE]],
            [[O, ONE], [ONE, O]],
            [[O, NEG_I], [I, O]],
            [[ONE, O], [O, NEG_ONE]],
        ],
        metric: PAULI_METRIC,
    };

    pub fn op(index: usize) -> &'static Mat2 {
        &Self::STANDARD.ops[index]
    }
}

impl Default for PauliBasis {
    fn default() -> Self {
        Self::STANDARD
    }
}

#[cfg(test)]
pub(crate) fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[O; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}
