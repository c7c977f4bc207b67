//! Hermitian eigensolver: cyclic complex Jacobi rotations.
//!
//! At the sizes this crate works with (dim <= 8) a Jacobi scheme is simple,
//! accurate and deterministic: pairs are swept in fixed lexicographic order
//! and iteration stops once the off-diagonal Frobenius norm drops below
//! `OFF_NORM_TOL`, so repeated runs on the same input are bit-identical.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use super::QcoreError;

/// Inputs farther than this from Hermitian are rejected.
pub const HERMITICITY_TOL: f64 = 1e-10;
/// Convergence threshold on the off-diagonal Frobenius norm.
const OFF_NORM_TOL: f64 = 1e-13;
/// Jacobi converges quadratically; ~10 sweeps suffice at dim 8.
const MAX_SWEEPS: usize = 64;

/// Eigenvalues (descending) with the unitary of column eigenvectors:
/// `m = V diag(values) V^dag`.
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

/// Eigenvalues of a Hermitian matrix, sorted descending.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>, QcoreError> {
    let (values, _) = jacobi(m, false)?;
    Ok(values)
}

/// Full eigendecomposition of a Hermitian matrix, eigenvalues descending.
pub fn hermitian_eigen(m: &ComplexMatrix) -> Result<EigenDecomposition, QcoreError> {
    let (values, vectors) = jacobi(m, true)?;
    Ok(EigenDecomposition {
        values,
        vectors: vectors.expect("vectors requested"),
    })
}

fn off_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

fn jacobi(
    m: &ComplexMatrix,
    want_vectors: bool,
) -> Result<(Vec<f64>, Option<ComplexMatrix>), QcoreError> {
    let residual = m.hermiticity_residual();
    if residual > HERMITICITY_TOL {
        return Err(QcoreError::NotHermitian { residual });
    }
    let n = m.dim();
    let mut a = m.symmetrize();
    let mut v = ComplexMatrix::identity(n);

    let mut sweeps = 0;
    while off_norm(&a) > OFF_NORM_TOL {
        sweeps += 1;
        assert!(sweeps <= MAX_SWEEPS, "jacobi iteration failed to converge");
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    // stable sort keeps degenerate eigenvalues in sweep order
    order.sort_by(|&i, &j| a[(j, j)].re.partial_cmp(&a[(i, i)].re).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = want_vectors.then(|| {
        ComplexMatrix::from_fn(n, |row, col| v[(row, order[col])])
    });
    Ok((values, vectors))
}

/// One plane rotation annihilating `a[p][q]`.
///
/// With `a[p][q] = r e^{i phi}`, conjugating by `diag(1, e^{-i phi})` on the
/// (p,q) plane gives a real symmetric 2x2 block, which the classical
/// Rutishauser rotation then diagonalizes. The combined unitary acting on
/// the plane is
///
/// ```text
/// V = | c            s          |
///     | -s e^{-i phi}  c e^{-i phi} |
/// ```
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let beta = a[(p, q)];
    let r = beta.norm();
    if r <= 1e-300 {
        return;
    }
    let phase = beta / r; // e^{i phi}
    let alpha = a[(p, p)].re;
    let gamma = a[(q, q)].re;

    let tau = (gamma - alpha) / (2.0 * r);
    let t = if tau == 0.0 {
        1.0
    } else {
        tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    let vpp = Complex64::new(c, 0.0);
    let vpq = Complex64::new(s, 0.0);
    let vqp = -s * phase.conj();
    let vqq = c * phase.conj();

    let n = a.dim();
    // A <- V^dag A V : columns first, then rows.
    for i in 0..n {
        let aip = a[(i, p)];
        let aiq = a[(i, q)];
        a[(i, p)] = aip * vpp + aiq * vqp;
        a[(i, q)] = aip * vpq + aiq * vqq;
    }
    for j in 0..n {
        let apj = a[(p, j)];
        let aqj = a[(q, j)];
        a[(p, j)] = vpp.conj() * apj + vqp.conj() * aqj;
        a[(q, j)] = vpq.conj() * apj + vqq.conj() * aqj;
    }
    // exact zero keeps the off-diagonal norm honest
    a[(p, q)] = Complex64::ZERO;
    a[(q, p)] = Complex64::ZERO;
    let dpp = a[(p, p)];
    let dqq = a[(q, q)];
    a[(p, p)] = Complex64::new(dpp.re, 0.0);
    a[(q, q)] = Complex64::new(dqq.re, 0.0);

    for i in 0..n {
        let vip = v[(i, p)];
        let viq = v[(i, q)];
        v[(i, p)] = vip * vpp + viq * vqp;
        v[(i, q)] = vip * vpq + viq * vqq;
    }
}

/// Eigenvalues of a real symmetric 3x3 matrix, descending. Same cyclic
/// Jacobi scheme in real arithmetic; used for the Gram matrix T^T T of the
/// 3x3 correlation matrix.
pub(crate) fn sym3_eigenvalues(m: [[f64; 3]; 3]) -> [f64; 3] {
    let mut a = m;
    // enforce exact symmetry
    for i in 0..3 {
        for j in (i + 1)..3 {
            let avg = 0.5 * (a[i][j] + a[j][i]);
            a[i][j] = avg;
            a[j][i] = avg;
        }
    }
    let off = |a: &[[f64; 3]; 3]| -> f64 {
        (2.0 * (a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2])).sqrt()
    };
    let mut sweeps = 0;
    while off(&a) > OFF_NORM_TOL {
        sweeps += 1;
        assert!(sweeps <= MAX_SWEEPS, "sym3 jacobi failed to converge");
        for p in 0..3 {
            for q in (p + 1)..3 {
                let apq = a[p][q];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let tau = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = if tau == 0.0 {
                    1.0
                } else {
                    tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for i in 0..3 {
                    let aip = a[i][p];
                    let aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for j in 0..3 {
                    let apj = a[p][j];
                    let aqj = a[q][j];
                    a[p][j] = c * apj - s * aqj;
                    a[q][j] = s * apj + c * aqj;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
            }
        }
    }
    let mut vals = [a[0][0], a[1][1], a[2][2]];
    vals.sort_by(|x, y| y.partial_cmp(x).unwrap());
    vals
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::matrix::{sigma_x, sigma_y, tensor, ComplexMatrix};
    use crate::rng::SplitMix64;

    fn random_hermitian(dim: usize, rng: &mut SplitMix64) -> ComplexMatrix {
        let g = ComplexMatrix::from_fn(dim, |_, _| {
            Complex64::new(rng.next_range(-1.0, 1.0), rng.next_range(-1.0, 1.0))
        });
        g.symmetrize()
    }

    #[test]
    fn maximally_mixed_spectrum() {
        let m = ComplexMatrix::identity(4).scale(0.25);
        let vals = hermitian_eigenvalues(&m).unwrap();
        for v in vals {
            assert!((v - 0.25).abs() < 1e-14);
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut m = ComplexMatrix::identity(4);
        m[(0, 1)] = Complex64::new(0.3, 0.0);
        let err = hermitian_eigenvalues(&m).unwrap_err();
        assert!(err.to_string().contains("not hermitian"));
    }

    #[test]
    fn reconstruction_residual_small() {
        let mut rng = SplitMix64::new(314159);
        for dim in [2usize, 4, 8] {
            for _ in 0..20 {
                let m = random_hermitian(dim, &mut rng);
                let eig = hermitian_eigen(&m).unwrap();
                let lam = ComplexMatrix::diag(&eig.values);
                let rebuilt = &(&eig.vectors * &lam) * &eig.vectors.adjoint();
                assert!(
                    rebuilt.max_abs_diff(&m) < 1e-10,
                    "residual {} at dim {}",
                    rebuilt.max_abs_diff(&m),
                    dim
                );
                // unitarity of the eigenvector matrix
                let vtv = &eig.vectors.adjoint() * &eig.vectors;
                assert!(vtv.max_abs_diff(&ComplexMatrix::identity(dim)) < 1e-12);
            }
        }
    }

    #[test]
    fn eigenvalue_sum_equals_trace() {
        let mut rng = SplitMix64::new(271828);
        for _ in 0..50 {
            let m = random_hermitian(4, &mut rng);
            let vals = hermitian_eigenvalues(&m).unwrap();
            let sum: f64 = vals.iter().sum();
            assert!((sum - m.trace().re).abs() < 1e-10);
        }
    }

    #[test]
    fn descending_order() {
        let mut rng = SplitMix64::new(5150);
        for _ in 0..50 {
            let m = random_hermitian(8, &mut rng);
            let vals = hermitian_eigenvalues(&m).unwrap();
            for w in vals.windows(2) {
                assert!(w[0] >= w[1]);
            }
        }
    }

    #[test]
    fn complex_offdiagonals_handled() {
        // sigma_y ⊗ sigma_y has purely imaginary off-diagonal entries and
        // eigenvalues {1, 1, -1, -1}.
        let yy = tensor(&sigma_y(), &sigma_y());
        let vals = hermitian_eigenvalues(&yy).unwrap();
        assert!((vals[0] - 1.0).abs() < 1e-13);
        assert!((vals[1] - 1.0).abs() < 1e-13);
        assert!((vals[2] + 1.0).abs() < 1e-13);
        assert!((vals[3] + 1.0).abs() < 1e-13);
    }

    #[test]
    fn bit_stable_across_runs() {
        let mut rng = SplitMix64::new(17);
        let m = random_hermitian(4, &mut rng);
        let a = hermitian_eigenvalues(&m).unwrap();
        let b = hermitian_eigenvalues(&m).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn sym3_matches_known() {
        let vals = sym3_eigenvalues([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);
        assert_eq!(vals, [1.0, 1.0, 1.0]);
        // T = diag(1,1,-1): Gram matrix is identity
        let g = sym3_eigenvalues([[2.0, 1.0, 0.0], [1.0, 2.0, 0.0], [0.0, 0.0, 5.0]]);
        assert!((g[0] - 5.0).abs() < 1e-12);
        assert!((g[1] - 3.0).abs() < 1e-12);
        assert!((g[2] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sym3_reconstruction_via_invariants() {
        let mut rng = SplitMix64::new(90210);
        for _ in 0..100 {
            let mut m = [[0.0; 3]; 3];
            for i in 0..3 {
                for j in i..3 {
                    let x = rng.next_range(-2.0, 2.0);
                    m[i][j] = x;
                    m[j][i] = x;
                }
            }
            let v = sym3_eigenvalues(m);
            let tr = m[0][0] + m[1][1] + m[2][2];
            let fro: f64 = m.iter().flatten().map(|x| x * x).sum();
            assert!((v[0] + v[1] + v[2] - tr).abs() < 1e-10);
            assert!((v[0] * v[0] + v[1] * v[1] + v[2] * v[2] - fro).abs() < 1e-9);
        }
    }

    #[test]
    fn xx_spectrum() {
        let xx = tensor(&sigma_x(), &sigma_x());
        let vals = hermitian_eigenvalues(&xx).unwrap();
        assert!((vals[0] - 1.0).abs() < 1e-13 && (vals[3] + 1.0).abs() < 1e-13);
    }
}
