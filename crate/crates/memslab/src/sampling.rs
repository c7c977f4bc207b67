//! Seeded test-state generators used by the cross-validation checks
//! (random X states, Ginibre-distributed full states). Internal: these back
//! the verification suite and unit tests, not the public API.

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::qcore::{ComplexMatrix, DensityMatrix};
use crate::rng::SplitMix64;

/// Flat Dirichlet sample on the (k-1)-simplex: spacings of sorted uniforms.
pub(crate) fn dirichlet_flat(k: usize, rng: &mut SplitMix64) -> Vec<f64> {
    debug_assert!((1..=4).contains(&k));
    let mut cuts: Vec<f64> = (0..k - 1).map(|_| rng.next_f64()).collect();
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut out = Vec::with_capacity(k);
    let mut prev = 0.0;
    for &c in &cuts {
        out.push(c - prev);
        prev = c;
    }
    out.push(1.0 - prev);
    out
}

/// Random X state: flat-Dirichlet diagonal, antidiagonal entries drawn with
/// modulus uniform inside the positivity disc and uniform phase.
pub(crate) fn random_x_state(rng: &mut SplitMix64) -> DensityMatrix {
    let d = dirichlet_flat(4, rng);
    let offdiag = |cap: f64, rng: &mut SplitMix64| -> Complex64 {
        let r = rng.next_f64() * cap;
        let phi = rng.next_f64() * TAU;
        Complex64::from_polar(r, phi)
    };
    let rho14 = offdiag((d[0] * d[3]).sqrt(), rng);
    let rho23 = offdiag((d[1] * d[2]).sqrt(), rng);
    let mut m = ComplexMatrix::diag(&d);
    m[(0, 3)] = rho14;
    m[(3, 0)] = rho14.conj();
    m[(1, 2)] = rho23;
    m[(2, 1)] = rho23.conj();
    DensityMatrix::new(m).expect("X construction is a valid state")
}

fn normal_pair(rng: &mut SplitMix64) -> (f64, f64) {
    // Box-Muller; u1 in (0,1]
    let u1 = 1.0 - rng.next_f64();
    let u2 = rng.next_f64();
    let r = (-2.0 * u1.ln()).sqrt();
    (r * (TAU * u2).cos(), r * (TAU * u2).sin())
}

/// Full-rank random state `G G^dag / Tr(G G^dag)` with Ginibre `G`.
pub(crate) fn random_density(rng: &mut SplitMix64) -> DensityMatrix {
    let g = ComplexMatrix::from_fn(4, |_, _| {
        let (re, im) = normal_pair(rng);
        Complex64::new(re, im)
    });
    let gg = &g * &g.adjoint();
    let tr = gg.trace().re;
    DensityMatrix::new(gg.scale(1.0 / tr).symmetrize()).expect("Ginibre product is a state")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dirichlet_sums_to_one() {
        let mut rng = SplitMix64::new(1);
        for k in 1..=4 {
            for _ in 0..100 {
                let v = dirichlet_flat(k, &mut rng);
                assert_eq!(v.len(), k);
                assert!((v.iter().sum::<f64>() - 1.0).abs() < 1e-12);
                assert!(v.iter().all(|&x| x >= 0.0));
            }
        }
    }

    #[test]
    fn generators_produce_valid_states() {
        let mut rng = SplitMix64::new(2);
        for _ in 0..200 {
            let _ = random_x_state(&mut rng);
            let _ = random_density(&mut rng);
        }
    }
}
