use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use rustfft::num_complex::Complex64;
use rustfft::FftPlanner;

use crate::{Error, Result};

/// `γ(k) = σ²/2 (|k+1|^{2H} − 2|k|^{2H} + |k−1|^{2H})`.
pub fn fgn_autocovariance(lag: usize, hurst: f64, sigma2: f64) -> f64 {
    let k = lag as f64;
    let e = 2.0 * hurst;
    0.5 * sigma2 * ((k + 1.0).powf(e) - 2.0 * k.powf(e) + (k - 1.0).abs().powf(e))
}

/// Eigenvalues of the `2N × 2N` circulant whose first row is
/// `γ(0), …, γ(N), γ(N−1), …, γ(1)`.
pub(super) fn circulant_eigenvalues(n: usize, hurst: f64, sigma2: f64) -> Result<Vec<f64>> {
    let m = 2 * n;
    let mut row: Vec<Complex64> = (0..m)
        .map(|k| {
            let lag = if k <= n { k } else { m - k };
            Complex64::new(fgn_autocovariance(lag, hurst, sigma2), 0.0)
        })
        .collect();
    FftPlanner::new().plan_fft_forward(m).process(&mut row);
    let scale = row.iter().map(|z| z.re.abs()).fold(0.0, f64::max);
    row.iter()
        .enumerate()
        .map(|(index, z)| {
            if z.re < -1e-10 * scale {
                Err(Error::NegativeEigenvalue { index, value: z.re })
            } else {
                Ok(z.re.max(0.0))
            }
        })
        .collect()
}

/// Davies–Harte: `Re FFT(√(λ/2N) ⊙ (a + ib))`, first `N` entries, has
/// covariance `γ(|i − j|)` exactly.
pub(super) fn circulant_sample<R: Rng>(n: usize, hurst: f64, sigma2: f64, rng: &mut R) -> Result<Vec<f64>> {
    if n == 1 {
        let z: f64 = StandardNormal.sample(rng);
        return Ok(vec![sigma2.sqrt() * z]);
    }
    let eig = circulant_eigenvalues(n, hurst, sigma2)?;
    let m = eig.len();
    let mut w: Vec<Complex64> = eig
        .iter()
        .map(|&l| {
            let s = (l / m as f64).sqrt();
            let a: f64 = StandardNormal.sample(rng);
            let b: f64 = StandardNormal.sample(rng);
            Complex64::new(s * a, s * b)
        })
        .collect();
    FftPlanner::new().plan_fft_forward(m).process(&mut w);
    Ok(w[..n].iter().map(|z| z.re).collect())
}

/// Exact sampling through the Cholesky factor of the Toeplitz covariance,
/// `O(N³)`. Small-`N` reference for the circulant path.
#[cfg(test)]
pub(super) fn cholesky_sample<R: Rng>(n: usize, hurst: f64, sigma2: f64, rng: &mut R) -> Vec<f64> {
    let cov = |i: usize, j: usize| fgn_autocovariance(i.abs_diff(j), hurst, sigma2);
    let mut l = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let s: f64 = (0..j).map(|k| l[i][k] * l[j][k]).sum();
            if i == j {
                l[i][j] = (cov(i, i) - s).sqrt();
            } else {
                l[i][j] = (cov(i, j) - s) / l[j][j];
            }
        }
    }
    let z: Vec<f64> = (0..n).map(|_| StandardNormal.sample(rng)).collect();
    (0..n).map(|i| (0..=i).map(|k| l[i][k] * z[k]).sum()).collect()
}
