//! Closed-form and numerical entropy rates of Gaussian LRD processes.
//!
//! For a stationary Gaussian process with spectral density `f` normalised so
//! that `γ(k) = ∫_{−π}^{π} f(λ) e^{ikλ} dλ`, the differential entropy rate is
//! `½ ln(2πe) + (1/4π) ∫_{−π}^{π} ln(2π f(λ)) dλ`, which is `½ ln(2πe σ_ε²)`
//! with `σ_ε²` the one-step prediction error variance.

mod gamma;
mod quadrature;

pub use gamma::ln_gamma;

use crate::{EntropyValue, Error, Real, Result};

/// Largest omitted relative tail tolerated when tail correction is off.
const MAX_UNCORRECTED_TAIL: f64 = 1e-3;

/// Geometric panels `[0, π/2^{P−1}], …, [π/4, π/2], [π/2, π]`.
const PANELS: usize = 8;

/// Truncation and quadrature settings for the fractional Gaussian noise rate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpectralConfig {
    j_max: usize,
    quad_points: usize,
    tail_correction: bool,
}

impl SpectralConfig {
    /// `j_max ≥ 100`, `quad_points ≥ 64`.
    pub fn new(j_max: usize, quad_points: usize, tail_correction: bool) -> Result<Self> {
        if j_max < 100 {
            return Err(Error::param("j_max", format!("must be at least 100, got {j_max}")));
        }
        if quad_points < 64 {
            return Err(Error::param("quad_points", format!("must be at least 64, got {quad_points}")));
        }
        Ok(Self { j_max, quad_points, tail_correction })
    }

    pub fn j_max(&self) -> usize {
        self.j_max
    }

    pub fn quad_points(&self) -> usize {
        self.quad_points
    }

    pub fn tail_correction(&self) -> bool {
        self.tail_correction
    }
}

impl Default for SpectralConfig {
    fn default() -> Self {
        Self { j_max: 1000, quad_points: 512, tail_correction: true }
    }
}

fn check_hurst<T: Real>(hurst: T) -> Result<()> {
    if !(hurst > T::zero() && hurst < T::one()) {
        return Err(Error::param("hurst", format!("must lie in (0, 1), got {hurst}")));
    }
    Ok(())
}

fn check_sigma2<T: Real>(sigma2: T) -> Result<()> {
    if sigma2 <= T::zero() || !sigma2.is_finite() {
        return Err(Error::param("sigma2", format!("must be positive and finite, got {sigma2}")));
    }
    Ok(())
}

/// `½ ln(2πe σ²) + ln Γ(3/2 − H) − ½ ln Γ(2 − 2H)` for ARFIMA(0, H − ½, 0)
/// with process variance `σ²`.
pub fn arfima_entropy_rate<T: Real>(hurst: T, sigma2: T) -> Result<EntropyValue<T>> {
    check_hurst(hurst)?;
    check_sigma2(sigma2)?;
    let half = T::lit(0.5);
    let white = half * (T::lit(2.0) * T::PI() * T::E() * sigma2).ln();
    let h = white + ln_gamma(T::lit(1.5) - hurst) - half * ln_gamma(T::lit(2.0) - T::lit(2.0) * hurst);
    Ok(EntropyValue::from_nats(h))
}

/// `c_f = σ²/(2π) · sin(πH) · Γ(2H + 1)`.
fn fgn_scale<T: Real>(hurst: T, sigma2: T) -> T {
    let two = T::lit(2.0);
    sigma2 / (two * T::PI()) * (T::PI() * hurst).sin() * ln_gamma(two * hurst + T::one()).exp()
}

/// Truncated aliasing sum `Σ_{|j| ≤ J} |2πj + λ|^{−a}` and the integral
/// estimate of what lies beyond, `∫_{J+½}^∞ (2πx ± λ)^{−a} dx` for each side.
fn aliasing_sum<T: Real>(lambda: T, a: T, j_max: usize) -> (T, T) {
    let two_pi = T::lit(2.0) * T::PI();
    let mut sum = lambda.abs().powf(-a);
    // smallest terms first
    for j in (1..=j_max).rev() {
        let base = two_pi * T::from_count(j);
        sum = sum + (base + lambda).powf(-a) + (base - lambda).powf(-a);
    }
    let edge = two_pi * (T::from_count(j_max) + T::lit(0.5));
    let tail = ((edge + lambda).powf(T::one() - a) + (edge - lambda).powf(T::one() - a)) / (two_pi * (a - T::one()));
    (sum, tail)
}

/// FGN spectral density `2 c_f (1 − cos λ) Σ_j |2πj + λ|^{−2H−1}` at `λ ≠ 0`,
/// `λ ∈ (−π, π]`.
pub fn fgn_spectral_density<T: Real>(lambda: T, hurst: T, sigma2: T, cfg: &SpectralConfig) -> Result<T> {
    check_hurst(hurst)?;
    check_sigma2(sigma2)?;
    if lambda == T::zero() || !(lambda > -T::PI() && lambda <= T::PI()) {
        return Err(Error::param("lambda", format!("must be in (−π, π] and nonzero, got {lambda}")));
    }
    let a = T::lit(2.0) * hurst + T::one();
    let (sum, tail) = aliasing_sum(lambda, a, cfg.j_max);
    let total = if cfg.tail_correction {
        sum + tail
    } else {
        let relative = (tail / sum).as_f64();
        if relative > MAX_UNCORRECTED_TAIL {
            return Err(Error::SpectralTail { hurst: hurst.as_f64(), j_max: cfg.j_max, relative_tail: relative });
        }
        sum
    };
    // 1 − cos λ = 2 sin²(λ/2), stable near 0
    let s = (lambda * T::lit(0.5)).sin();
    Ok(T::lit(4.0) * fgn_scale(hurst, sigma2) * s * s * total)
}

/// Differential entropy rate of FGN with Hurst `H` and variance `σ²`.
///
/// `∫_0^π ln(2π f)` is evaluated by Gauss–Legendre on geometrically shrinking
/// panels toward 0, where `ln f ~ (1 − 2H) ln λ`.
pub fn fgn_entropy_rate<T: Real>(hurst: T, sigma2: T, cfg: &SpectralConfig) -> Result<EntropyValue<T>> {
    check_hurst(hurst)?;
    check_sigma2(sigma2)?;
    let per_panel = (cfg.quad_points / PANELS).max(8);
    let rule = quadrature::gauss_legendre(per_panel);
    let two_pi = T::lit(2.0) * T::PI();

    let mut integral = T::zero();
    let mut hi = T::PI();
    for panel in 0..PANELS {
        let lo = if panel + 1 == PANELS { T::zero() } else { hi * T::lit(0.5) };
        let half = (hi - lo) * T::lit(0.5);
        let mid = (hi + lo) * T::lit(0.5);
        let mut part = T::zero();
        for &(x, w) in &rule {
            let lambda = mid + half * T::lit(x);
            part = part + T::lit(w) * (two_pi * fgn_spectral_density(lambda, hurst, sigma2, cfg)?).ln();
        }
        integral = integral + part * half;
        hi = lo;
    }
    let base = T::lit(0.5) * (two_pi * T::E()).ln();
    Ok(EntropyValue::from_nats(base + integral / two_pi))
}

/// `½ ln(2πe σ²)`: the rate of i.i.d. `N(0, σ²)` and of the mean-shift and
/// Gaussian-walk processes driven by it.
pub fn white_noise_entropy_rate<T: Real>(sigma2: T) -> Result<EntropyValue<T>> {
    check_sigma2(sigma2)?;
    Ok(EntropyValue::from_nats(T::lit(0.5) * (T::lit(2.0) * T::PI() * T::E() * sigma2).ln()))
}
