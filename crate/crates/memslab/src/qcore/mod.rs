//! Linear-algebra core: complex matrices, a Hermitian Jacobi eigensolver,
//! and the validated quantum-state types everything else consumes.
//!
//! Conventions, used everywhere without exception:
//! * two-qubit basis order `|00>, |01>, |10>, |11>`;
//! * three-qubit basis order `|q1 q2 q3>` with `q1` the most significant bit;
//! * Pauli matrices with `sigma_y = [[0, -i], [i, 0]]`.
//!
//! All operations are pure functions of their inputs and safe to call from
//! any number of threads.

mod eigen;
mod matrix;

pub use eigen::{hermitian_eigen, hermitian_eigenvalues, EigenDecomposition, HERMITICITY_TOL};
pub(crate) use eigen::sym3_eigenvalues;
pub use matrix::{sigma_x, sigma_y, sigma_z, tensor, ComplexMatrix};
pub(crate) use matrix::kron;

use num_complex::Complex64;
use thiserror::Error;

/// Hermiticity / unit-trace tolerance for density matrices.
pub const DENSITY_TOL: f64 = 1e-12;
/// Eigenvalues above this count towards the rank; more negative values than
/// `-PSD_TOL` mean the matrix is not a state.
pub const PSD_TOL: f64 = 1e-10;
/// Rank threshold (absolute; spectra here are O(1)).
pub const RANK_TOL: f64 = 1e-10;

#[derive(Debug, Error)]
pub enum QcoreError {
    #[error("not hermitian (residual {residual:.3e})")]
    NotHermitian { residual: f64 },
    #[error("trace != 1 (residual {residual:.3e})")]
    TraceNotOne { residual: f64 },
    #[error("not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },
    #[error("matrix entries must be finite")]
    NonFiniteEntry,
    #[error("dimension mismatch: {what}")]
    DimensionMismatch { what: String },
    #[error("state vector is not normalized (|norm - 1| = {residual:.3e})")]
    NotNormalized { residual: f64 },
    #[error("eigenvalues do not sum to one (residual {residual:.3e})")]
    BadSpectrumSum { residual: f64 },
}

/// Which qubit of a two-qubit system an operation acts on. Qubit A is the
/// most significant bit of the basis index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// A validated two-qubit density matrix: Hermitian, unit trace, positive
/// semidefinite (within [`DENSITY_TOL`] / [`PSD_TOL`]).
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    m: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates a 4x4 matrix as a two-qubit state. Reports the first
    /// violated property (hermiticity, trace, then positivity) with the
    /// measured residual.
    pub fn new(m: ComplexMatrix) -> Result<Self, QcoreError> {
        if m.dim() != 4 {
            return Err(QcoreError::DimensionMismatch {
                what: format!("density matrix must be 4x4, got {0}x{0}", m.dim()),
            });
        }
        let residual = m.hermiticity_residual();
        if residual > DENSITY_TOL {
            return Err(QcoreError::NotHermitian { residual });
        }
        let tr = m.trace();
        let tr_residual = (tr - Complex64::ONE).norm();
        if tr_residual > DENSITY_TOL {
            return Err(QcoreError::TraceNotOne {
                residual: tr_residual,
            });
        }
        let vals = hermitian_eigenvalues(&m)?;
        let min = vals[vals.len() - 1];
        if min < -PSD_TOL {
            return Err(QcoreError::NotPositiveSemidefinite {
                min_eigenvalue: min,
            });
        }
        Ok(Self { m })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.m[(i, j)]
    }

    /// Eigenvalues as a validated [`Spectrum`].
    pub fn spectrum(&self) -> Spectrum {
        let vals = hermitian_eigenvalues(&self.m).expect("validated state is hermitian");
        Spectrum::new([vals[0], vals[1], vals[2], vals[3]])
            .expect("validated state has a unit-sum spectrum")
    }

    /// Number of eigenvalues above [`RANK_TOL`].
    pub fn rank(&self) -> u8 {
        self.spectrum().rank()
    }

    /// Convex mixture `(1-w) a + w b`.
    pub fn mix(a: &DensityMatrix, b: &DensityMatrix, w: f64) -> DensityMatrix {
        let m = &a.m.scale(1.0 - w) + &b.m.scale(w);
        DensityMatrix::new(m).expect("mixture of states is a state")
    }
}

/// Validates a 4x4 matrix as a two-qubit density matrix.
pub fn validate_density(m: ComplexMatrix) -> Result<DensityMatrix, QcoreError> {
    DensityMatrix::new(m)
}

/// Number of eigenvalues of `rho` above [`RANK_TOL`].
pub fn rank_of(rho: &DensityMatrix) -> u8 {
    rho.rank()
}

/// Partial transpose of a two-qubit state over one subsystem. The result is
/// Hermitian with unit trace but in general not positive, so it is returned
/// as a plain matrix.
pub fn partial_transpose(rho: &DensityMatrix, subsystem: Subsystem) -> ComplexMatrix {
    let m = rho.matrix();
    ComplexMatrix::from_fn(4, |row, col| {
        let (i, k) = (row / 2, row % 2);
        let (j, l) = (col / 2, col % 2);
        match subsystem {
            // transpose the A index: (i,j) -> (j,i)
            Subsystem::A => m[(2 * j + k, 2 * i + l)],
            // transpose within each 2x2 block: (k,l) -> (l,k)
            Subsystem::B => m[(2 * i + l, 2 * j + k)],
        }
    })
}

/// Pure state of three qubits, `|q1 q2 q3>` amplitude order.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState3Q {
    amplitudes: [Complex64; 8],
}

impl PureState3Q {
    pub fn new(amplitudes: [Complex64; 8]) -> Result<Self, QcoreError> {
        if amplitudes
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(QcoreError::NonFiniteEntry);
        }
        let norm_sq: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        let residual = (norm_sq - 1.0).abs();
        if residual > DENSITY_TOL {
            return Err(QcoreError::NotNormalized { residual });
        }
        Ok(Self { amplitudes })
    }

    /// Builds the state from unnormalized amplitudes, rescaling to unit norm.
    pub fn normalized(amplitudes: [Complex64; 8]) -> Result<Self, QcoreError> {
        let norm_sq: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if !norm_sq.is_finite() || norm_sq == 0.0 {
            return Err(QcoreError::NonFiniteEntry);
        }
        let s = norm_sq.sqrt();
        let mut a = amplitudes;
        for z in &mut a {
            *z /= s;
        }
        Self::new(a)
    }

    pub fn amplitudes(&self) -> &[Complex64; 8] {
        &self.amplitudes
    }
}

/// Qubit index for [`partial_trace`], numbered 1..=3 as in `|q1 q2 q3>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TracedQubit {
    Q1,
    Q2,
    Q3,
}

/// Reduced state of the two qubits left after tracing one qubit out of a
/// three-qubit pure state; the survivors keep their original order.
pub fn partial_trace(psi: &PureState3Q, traced: TracedQubit) -> DensityMatrix {
    let a = psi.amplitudes();
    // full index of |q1 q2 q3> given the traced qubit value t and the two
    // surviving bits (hi, lo)
    let idx = |t: usize, hi: usize, lo: usize| -> usize {
        match traced {
            TracedQubit::Q1 => 4 * t + 2 * hi + lo,
            TracedQubit::Q2 => 4 * hi + 2 * t + lo,
            TracedQubit::Q3 => 4 * hi + 2 * lo + t,
        }
    };
    let m = ComplexMatrix::from_fn(4, |row, col| {
        let (rh, rl) = (row / 2, row % 2);
        let (ch, cl) = (col / 2, col % 2);
        (0..2)
            .map(|t| a[idx(t, rh, rl)] * a[idx(t, ch, cl)].conj())
            .sum()
    });
    DensityMatrix::new(m).expect("partial trace of a pure state is a state")
}

/// Trace over the first two qubits of an 8x8 operator (basis
/// `|q0 q1 q2>`), leaving a 2x2 operator on the last qubit.
pub(crate) fn trace_out_first_two(m: &ComplexMatrix) -> ComplexMatrix {
    assert_eq!(m.dim(), 8, "expected an 8x8 operator");
    ComplexMatrix::from_fn(2, |i, j| {
        (0..4).map(|ab| m[(2 * ab + i, 2 * ab + j)]).sum()
    })
}

/// Two-qubit spectrum: four eigenvalues sorted descending, summing to one.
/// Values in `[-PSD_TOL, 0)` are clamped to zero on construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spectrum {
    lambda: [f64; 4],
}

impl Spectrum {
    pub fn new(values: [f64; 4]) -> Result<Self, QcoreError> {
        if values.iter().any(|v| !v.is_finite()) {
            return Err(QcoreError::NonFiniteEntry);
        }
        let mut lambda = values;
        for v in &mut lambda {
            if *v < 0.0 {
                if *v < -PSD_TOL {
                    return Err(QcoreError::NotPositiveSemidefinite {
                        min_eigenvalue: *v,
                    });
                }
                *v = 0.0;
            }
        }
        lambda.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let residual = (lambda.iter().sum::<f64>() - 1.0).abs();
        if residual > DENSITY_TOL {
            return Err(QcoreError::BadSpectrumSum { residual });
        }
        Ok(Self { lambda })
    }

    pub fn lambda(&self) -> &[f64; 4] {
        &self.lambda
    }

    pub fn rank(&self) -> u8 {
        self.lambda.iter().filter(|&&v| v > RANK_TOL).count() as u8
    }
}
