use rand::Rng;
use rustfft::num_complex::Complex64;
use rustfft::FftPlanner;

use super::normals;
use crate::analytic::ln_gamma;
use crate::{Error, Result};

/// `ψ_0 = 1`, `ψ_j = ψ_{j−1} (j − 1 + d) / j`, for `j ≤ max_lag`.
pub fn ma_weights(d: f64, max_lag: usize) -> Vec<f64> {
    let mut psi = Vec::with_capacity(max_lag + 1);
    psi.push(1.0);
    for j in 1..=max_lag {
        let prev = psi[j - 1];
        psi.push(prev * (j as f64 - 1.0 + d) / j as f64);
    }
    psi
}

/// Innovation variance giving process variance `σ²`:
/// `σ² Γ(1 − d)² / Γ(1 − 2d)`.
pub fn arfima_innovation_variance(d: f64, sigma2: f64) -> f64 {
    sigma2 * (2.0 * ln_gamma(1.0 - d) - ln_gamma(1.0 - 2.0 * d)).exp()
}

/// Truncation lag and discarded burn-in: `max(10N, 10⁴)`.
pub(super) fn truncation(n: usize) -> usize {
    (10 * n).max(10_000)
}

pub(super) fn sample<R: Rng>(n: usize, d: f64, sigma2: f64, rng: &mut R) -> Result<Vec<f64>> {
    if d.is_nan() || d.abs() >= 0.5 {
        return Err(Error::param("d", format!("fractional order must satisfy |d| < 1/2, got {d}")));
    }
    let sd = arfima_innovation_variance(d, sigma2).sqrt();
    if d == 0.0 {
        return Ok(normals(rng, n, sd));
    }
    let m = truncation(n);
    let psi = ma_weights(d, m);
    let eps = normals(rng, n + m, sd);

    // X_t = Σ_{j=0}^{M} ψ_j ε_{t+M−j}, i.e. entries M..M+N of the full convolution
    let size = (n + 2 * m).next_power_of_two();
    let mut planner = FftPlanner::new();
    let forward = planner.plan_fft_forward(size);
    let inverse = planner.plan_fft_inverse(size);
    let mut a: Vec<Complex64> = pad(&psi, size);
    let mut b: Vec<Complex64> = pad(&eps, size);
    forward.process(&mut a);
    forward.process(&mut b);
    for (x, y) in a.iter_mut().zip(&b) {
        *x *= y;
    }
    inverse.process(&mut a);
    let scale = 1.0 / size as f64;
    Ok(a[m..m + n].iter().map(|z| z.re * scale).collect())
}

fn pad(x: &[f64], size: usize) -> Vec<Complex64> {
    let mut v: Vec<Complex64> = x.iter().map(|&r| Complex64::new(r, 0.0)).collect();
    v.resize(size, Complex64::new(0.0, 0.0));
    v
}
