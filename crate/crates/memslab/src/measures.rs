//! Scalar functionals of a two-qubit state: linear entropy, concurrence
//! (X-state closed form and the general Wootters formula), the PPT
//! entanglement test, Pauli correlation matrix, optimal teleportation
//! fidelity, CHSH Bell function, the spectrum bound `C*`, and the
//! maximally-entangled-mixed-state predicate.
//!
//! Two functionals are implemented twice on purpose: concurrence and the
//! Bell function each have an X-state closed form and a basis-independent
//! general route, and the pair is cross-checked in the tests. Keep both
//! routes independent.

use num_complex::Complex64;
use thiserror::Error;

use crate::qcore::{
    hermitian_eigen, hermitian_eigenvalues, partial_transpose, sigma_x, sigma_y, sigma_z,
    sym3_eigenvalues, tensor, ComplexMatrix, DensityMatrix, Spectrum, Subsystem,
};

/// Entries outside the X pattern larger than this disqualify a state from
/// the X-state view.
pub const X_STATE_TOL: f64 = 1e-10;
/// Tolerance of the `C = C*` equality in [`is_mems`].
pub const MEMS_TOL: f64 = 1e-9;
/// PPT threshold: minimum partial-transpose eigenvalue below `-PPT_TOL`
/// means entangled.
pub const PPT_TOL: f64 = 1e-10;

#[derive(Debug, Error)]
pub enum MeasuresError {
    #[error("not an X state (max off-pattern modulus {max_offending:.3e})")]
    NotXState { max_offending: f64 },
}

/// Linear entropy `S_L = (4/3)(1 - Tr rho^2)`: 0 for pure states, 1 for the
/// maximally mixed state.
pub fn linear_entropy(rho: &DensityMatrix) -> f64 {
    let purity = rho.matrix().trace_product(rho.matrix()).re;
    4.0 / 3.0 * (1.0 - purity)
}

/// View of an X state: nonzero entries on the diagonal and antidiagonal only.
#[derive(Debug, Clone, Copy)]
pub struct XStateView {
    pub rho11: f64,
    pub rho22: f64,
    pub rho33: f64,
    pub rho44: f64,
    pub rho14: Complex64,
    pub rho23: Complex64,
}

/// Extracts the X-state view, or reports the largest off-pattern modulus.
pub fn as_x_state(rho: &DensityMatrix) -> Result<XStateView, MeasuresError> {
    let m = rho.matrix();
    let off_pattern = [
        (0, 1),
        (0, 2),
        (1, 0),
        (1, 3),
        (2, 0),
        (2, 3),
        (3, 1),
        (3, 2),
    ];
    let max_offending = off_pattern
        .iter()
        .map(|&(i, j)| m[(i, j)].norm())
        .fold(0.0, f64::max);
    if max_offending > X_STATE_TOL {
        return Err(MeasuresError::NotXState { max_offending });
    }
    Ok(XStateView {
        rho11: m[(0, 0)].re,
        rho22: m[(1, 1)].re,
        rho33: m[(2, 2)].re,
        rho44: m[(3, 3)].re,
        rho14: m[(0, 3)],
        rho23: m[(1, 2)],
    })
}

/// X-state concurrence `C = 2 max{0, K1, K2}` with
/// `K1 = |rho14| - sqrt(rho22 rho33)` and `K2 = |rho23| - sqrt(rho11 rho44)`.
pub fn concurrence_x(v: &XStateView) -> f64 {
    let pos = |x: f64| x.max(0.0);
    let k1 = v.rho14.norm() - (pos(v.rho22) * pos(v.rho33)).sqrt();
    let k2 = v.rho23.norm() - (pos(v.rho11) * pos(v.rho44)).sqrt();
    2.0 * k1.max(k2).max(0.0)
}

/// Wootters concurrence for arbitrary two-qubit states:
/// `C = max{0, sqrt(mu1) - sqrt(mu2) - sqrt(mu3) - sqrt(mu4)}` where the
/// `mu_i` are the descending eigenvalues of
/// `rho (sigma_y ⊗ sigma_y) rho* (sigma_y ⊗ sigma_y)`.
///
/// Computed through the Hermitian equivalent
/// `sqrt(rho) rho~ sqrt(rho)` (same spectrum) so the Jacobi solver applies.
pub fn concurrence_general(rho: &DensityMatrix) -> f64 {
    let eig = hermitian_eigen(rho.matrix()).expect("validated state is hermitian");
    let sqrt_vals: Vec<f64> = eig.values.iter().map(|&v| v.max(0.0).sqrt()).collect();
    let sqrt_rho = &(&eig.vectors * &ComplexMatrix::diag(&sqrt_vals)) * &eig.vectors.adjoint();

    let yy = tensor(&sigma_y(), &sigma_y());
    let rho_tilde = &(&yy * &rho.matrix().conj()) * &yy;
    let m = &(&sqrt_rho * &rho_tilde) * &sqrt_rho;

    let mu = hermitian_eigenvalues(&m.symmetrize()).expect("product is hermitian");
    let roots: Vec<f64> = mu.iter().map(|&v| v.max(0.0).sqrt()).collect();
    (roots[0] - roots[1] - roots[2] - roots[3]).max(0.0)
}

/// PPT test: true iff the partial transpose has an eigenvalue below
/// `-PPT_TOL`. Necessary and sufficient for two-qubit entanglement.
pub fn is_entangled(rho: &DensityMatrix) -> bool {
    let pt = partial_transpose(rho, Subsystem::B);
    let vals = hermitian_eigenvalues(&pt).expect("partial transpose is hermitian");
    vals[3] < -PPT_TOL
}

/// 3x3 real matrix of Pauli correlations `T[n][m] = Tr(rho sigma_n ⊗ sigma_m)`.
#[derive(Debug, Clone, Copy)]
pub struct CorrelationMatrix {
    pub t: [[f64; 3]; 3],
}

pub fn correlation_matrix(rho: &DensityMatrix) -> CorrelationMatrix {
    let paulis = [sigma_x(), sigma_y(), sigma_z()];
    let mut t = [[0.0; 3]; 3];
    for (n, sn) in paulis.iter().enumerate() {
        for (m, sm) in paulis.iter().enumerate() {
            let val = rho.matrix().trace_product(&tensor(sn, sm));
            assert!(
                val.im.abs() <= 1e-10,
                "correlation T[{n}][{m}] has imaginary residue {:.3e}",
                val.im
            );
            t[n][m] = val.re;
        }
    }
    CorrelationMatrix { t }
}

impl CorrelationMatrix {
    /// Eigenvalues of the Gram matrix `T^T T`, descending and clamped at 0.
    fn gram_eigenvalues(&self) -> [f64; 3] {
        let t = &self.t;
        let mut g = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                g[i][j] = (0..3).map(|k| t[k][i] * t[k][j]).sum();
            }
        }
        let mut v = sym3_eigenvalues(g);
        for x in &mut v {
            *x = x.max(0.0);
        }
        v
    }
}

/// `N(rho)`: sum of the singular values of the correlation matrix.
pub fn n_value(t: &CorrelationMatrix) -> f64 {
    t.gram_eigenvalues().iter().map(|v| v.sqrt()).sum()
}

/// Optimal teleportation fidelity `F = (1 + N(rho)/3) / 2`.
///
/// The raw formula value is returned even when it falls below the classical
/// threshold 2/3; thresholding is the classifier's job, not this function's.
pub fn opt_fidelity(rho: &DensityMatrix) -> f64 {
    0.5 * (1.0 + n_value(&correlation_matrix(rho)) / 3.0)
}

/// X-state CHSH maximum: `B = max(2 sqrt(u1+u2), 2 sqrt(u1+u3))` with
/// `u1 = 4(|rho14|+|rho23|)^2`, `u2 = (rho11+rho44-rho22-rho33)^2`,
/// `u3 = 4(|rho14|-|rho23|)^2`.
pub fn bell_x(v: &XStateView) -> f64 {
    let u1 = 4.0 * (v.rho14.norm() + v.rho23.norm()).powi(2);
    let u2 = (v.rho11 + v.rho44 - v.rho22 - v.rho33).powi(2);
    let u3 = 4.0 * (v.rho14.norm() - v.rho23.norm()).powi(2);
    (2.0 * (u1 + u2).sqrt()).max(2.0 * (u1 + u3).sqrt())
}

/// Horodecki CHSH maximum for arbitrary states: `2 sqrt(v1 + v2)` with
/// `v1, v2` the two largest eigenvalues of `T^T T`. Coincides with
/// [`bell_x`] on X states.
pub fn bell_generic(rho: &DensityMatrix) -> f64 {
    let v = correlation_matrix(rho).gram_eigenvalues();
    2.0 * (v[0] + v[1]).sqrt()
}

/// Spectrum bound `C* = lambda1 - lambda3 - 2 sqrt(lambda2 lambda4)`:
/// the largest concurrence any state with this spectrum can have. Signed;
/// negative means no state with this spectrum is entangled.
pub fn c_star(spec: &Spectrum) -> f64 {
    let l = spec.lambda();
    l[0] - l[2] - 2.0 * (l[1] * l[3]).sqrt()
}

/// A state is a maximally entangled mixed state when it is entangled and its
/// concurrence saturates the spectrum bound `C*`.
pub fn is_mems(rho: &DensityMatrix) -> bool {
    let c = concurrence_general(rho);
    c > 0.0 && (c - c_star(&rho.spectrum())).abs() <= MEMS_TOL
}

/// All scalar measures of one state, evaluated through the general
/// (basis-independent) routes.
#[derive(Debug, Clone, Copy)]
pub struct MeasureBundle {
    pub s_l: f64,
    pub c: f64,
    pub c_star: f64,
    pub f: f64,
    pub b: f64,
}

pub fn bundle(rho: &DensityMatrix) -> MeasureBundle {
    let v = correlation_matrix(rho).gram_eigenvalues();
    let n: f64 = v.iter().map(|x| x.sqrt()).sum();
    MeasureBundle {
        s_l: linear_entropy(rho),
        c: concurrence_general(rho),
        c_star: c_star(&rho.spectrum()),
        f: 0.5 * (1.0 + n / 3.0),
        b: 2.0 * (v[0] + v[1]).sqrt(),
    }
}
