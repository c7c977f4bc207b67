//! Dense complex matrices for the 2-, 4- and 8-dimensional objects used
//! throughout the crate. Row-major storage, `f64` precision.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use super::QcoreError;

pub(crate) const ALLOWED_DIMS: [usize; 3] = [2, 4, 8];

/// Square complex matrix of dimension 2, 4 or 8.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    fn check_dim(dim: usize) {
        assert!(
            ALLOWED_DIMS.contains(&dim),
            "unsupported matrix dimension {dim} (expected 2, 4 or 8)"
        );
    }

    pub fn zeros(dim: usize) -> Self {
        Self::check_dim(dim);
        Self {
            dim,
            data: vec![Complex64::ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::ONE;
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds a matrix from rows, checking shape and entry finiteness.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self, QcoreError> {
        let dim = rows.len();
        if !ALLOWED_DIMS.contains(&dim) || rows.iter().any(|r| r.len() != dim) {
            return Err(QcoreError::DimensionMismatch {
                what: format!("{}x? rows", dim),
            });
        }
        let data: Vec<Complex64> = rows.iter().flatten().copied().collect();
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(QcoreError::NonFiniteEntry);
        }
        Ok(Self { dim, data })
    }

    /// Real diagonal matrix.
    pub fn diag(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = Complex64::new(v, 0.0);
        }
        m
    }

    /// Outer product `|v><v|` of a (not necessarily normalized) vector.
    pub fn projector(v: &[Complex64]) -> Self {
        Self::from_fn(v.len(), |i, j| v[i] * v[j].conj())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conj(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(i, j)].conj())
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::from_fn(self.dim, |i, j| self[(i, j)] * s)
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    /// `<u| M |u>` for a vector `u`.
    pub fn expectation(&self, u: &[Complex64]) -> Complex64 {
        let mu = self.mul_vec(u);
        u.iter().zip(&mu).map(|(a, b)| a.conj() * b).sum()
    }

    /// `Tr(self * other)` without forming the product.
    pub fn trace_product(&self, other: &Self) -> Complex64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut acc = Complex64::ZERO;
        for i in 0..self.dim {
            for j in 0..self.dim {
                acc += self[(i, j)] * other[(j, i)];
            }
        }
        acc
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest `|m_ij - conj(m_ji)|`; zero for exactly Hermitian input.
    pub fn hermiticity_residual(&self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..self.dim {
            for j in i..self.dim {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// `(M + M^dag) / 2`.
    pub(crate) fn symmetrize(&self) -> Self {
        Self::from_fn(self.dim, |i, j| {
            (self[(i, j)] + self[(j, i)].conj()) * 0.5
        })
    }
}

/// Kronecker product in the fixed computational-basis order:
/// `(a ⊗ b)[di*i + k][di*j + l] = a[i][j] * b[k][l]` with `di = b.dim()`.
/// The result dimension must again be 2, 4 or 8.
pub(crate) fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (da, db) = (a.dim(), b.dim());
    ComplexMatrix::check_dim(da * db);
    let mut out = ComplexMatrix::zeros(da * db);
    for i in 0..da {
        for j in 0..da {
            for k in 0..db {
                for l in 0..db {
                    out[(db * i + k, db * j + l)] = a[(i, j)] * b[(k, l)];
                }
            }
        }
    }
    out
}

/// Tensor (Kronecker) product of two single-qubit operators.
///
/// Contract: both operands must be 2x2; use it to assemble the two-qubit
/// operators `sigma_n ⊗ sigma_m`.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    assert_eq!(a.dim(), 2, "tensor: left operand must be 2x2");
    assert_eq!(b.dim(), 2, "tensor: right operand must be 2x2");
    kron(a, b)
}

pub fn sigma_x() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(2);
    m[(0, 1)] = Complex64::ONE;
    m[(1, 0)] = Complex64::ONE;
    m
}

pub fn sigma_y() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(2);
    m[(0, 1)] = Complex64::new(0.0, -1.0);
    m[(1, 0)] = Complex64::new(0.0, 1.0);
    m
}

pub fn sigma_z() -> ComplexMatrix {
    ComplexMatrix::diag(&[1.0, -1.0])
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        ComplexMatrix::from_fn(self.dim, |i, j| self[(i, j)] + rhs[(i, j)])
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        ComplexMatrix::from_fn(self.dim, |i, j| self[(i, j)] - rhs[(i, j)])
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == Complex64::ZERO {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  ")?;
            for j in 0..self.dim {
                let z = self[(i, j)];
                write!(f, "{:+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn tensor_identity_is_identity() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(tensor(&i2, &i2), ComplexMatrix::identity(4));
    }

    #[test]
    fn tensor_zz_is_diagonal() {
        let zz = tensor(&sigma_z(), &sigma_z());
        assert_eq!(zz, ComplexMatrix::diag(&[1.0, -1.0, -1.0, 1.0]));
    }

    #[test]
    fn psi_plus_fixed_by_xx() {
        // sigma_x ⊗ sigma_x |psi+> = |psi+>, eigenvalue +1
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let psi = [c(0.0, 0.0), c(s, 0.0), c(s, 0.0), c(0.0, 0.0)];
        let xx = tensor(&sigma_x(), &sigma_x());
        let out = xx.mul_vec(&psi);
        for (a, b) in out.iter().zip(&psi) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn trace_product_matches_full_product() {
        let a = ComplexMatrix::from_fn(4, |i, j| c((i + 2 * j) as f64, (i as f64) - 1.0));
        let b = ComplexMatrix::from_fn(4, |i, j| c((3 * i) as f64 - 2.0, (j as f64) * 0.5));
        let direct = (&a * &b).trace();
        let lazy = a.trace_product(&b);
        assert!((direct - lazy).norm() < 1e-12);
    }

    #[test]
    fn from_rows_rejects_non_finite() {
        let rows = vec![
            vec![c(f64::NAN, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(1.0, 0.0)],
        ];
        assert!(matches!(
            ComplexMatrix::from_rows(&rows),
            Err(QcoreError::NonFiniteEntry)
        ));
    }

    #[test]
    fn hermiticity_residual_detects_asymmetry() {
        let mut m = ComplexMatrix::identity(2);
        m[(0, 1)] = c(0.0, 0.5);
        m[(1, 0)] = c(0.0, 0.5); // conj would be -0.5i
        assert!((m.hermiticity_residual() - 1.0).abs() < 1e-15);
        assert!(m.symmetrize().hermiticity_residual() < 1e-15);
    }
}
