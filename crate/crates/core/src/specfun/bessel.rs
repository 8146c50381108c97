//! Bessel functions of the first kind `J_ν(x)` for real order `ν > -1`
//! and `x ≥ 0`.
//!
//! Three evaluation paths:
//! * ascending power series for small `x`;
//! * Hankel's asymptotic expansion once `x ≥ 20 + ν²/2`;
//! * Miller's backward recurrence in between, normalised by
//!   `(x/2)^μ = Σ_k (μ+2k) Γ(μ+k)/k! · J_{μ+2k}(x)`.

use std::f64::consts::{FRAC_PI_4, PI};

use super::gamma::log_gamma;
use super::roots::refine_root;

/// `J_ν(x)` for `ν > -1`, `x ≥ 0`. Negative `ν` is used by the Airy function.
pub fn bessel_j(nu: f64, x: f64) -> f64 {
    debug_assert!(nu > -1.0, "order must exceed -1");
    if x.is_nan() || x < 0.0 {
        return f64::NAN;
    }
    if x == 0.0 {
        return if nu == 0.0 {
            1.0
        } else if nu > 0.0 {
            0.0
        } else {
            f64::INFINITY
        };
    }
    if x <= 2.0 || x * x <= 4.0 * (nu + 1.0) {
        series(nu, x)
    } else if x >= 20.0 + 0.5 * nu * nu {
        hankel(nu, x)
    } else {
        miller(nu, x)
    }
}

fn series(nu: f64, x: f64) -> f64 {
    let half = 0.5 * x;
    let ln_lead = nu * half.ln() - log_gamma(nu + 1.0).unwrap_or(f64::NAN);
    let q = -half * half;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..300 {
        let kf = k as f64;
        term *= q / (kf * (kf + nu));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    sum * ln_lead.exp()
}

fn hankel(nu: f64, x: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0;
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let kf = k as f64;
        let odd = 2.0 * kf - 1.0;
        term *= (mu - odd * odd) / (kf * 8.0 * x);
        if term.abs() > last && k > 2 {
            break;
        }
        last = term.abs();
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if term.abs() < 1e-17 {
            break;
        }
    }
    let chi = phase_reduced(x, nu);
    (2.0 / (PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
}

/// `x - (ν/2 + 1/4)π` reduced modulo `2π` with a split `2π` constant.
fn phase_reduced(x: f64, nu: f64) -> f64 {
    const TWO_PI_HI: f64 = std::f64::consts::TAU;
    const TWO_PI_LO: f64 = 2.449_293_598_294_706_4e-16;
    let turns = (x / TWO_PI_HI).floor();
    let r = (x - turns * TWO_PI_HI) - turns * TWO_PI_LO;
    r - (0.5 * nu * PI + FRAC_PI_4)
}

fn miller(nu: f64, x: f64) -> f64 {
    // base order μ in (-1, 1): J_ν = J_{μ+m}
    let mu = if nu >= 0.0 { nu - nu.floor() } else { nu };
    let m = (nu - mu).round() as usize;
    let start = m.max(x as usize) + 30 + (12.0 * x.cbrt()) as usize;
    let start = start + (start & 1);
    let ln_c = |k: usize| -> f64 {
        if k == 0 {
            log_gamma(mu + 1.0).unwrap_or(f64::NAN)
        } else {
            let kf = k as f64;
            (mu + 2.0 * kf).ln() + log_gamma(mu + kf).unwrap_or(f64::NAN) - log_gamma(kf + 1.0).unwrap_or(f64::NAN)
        }
    };
    let mut above = 0.0;
    let mut cur = 1e-300;
    let mut target = if start == m { cur } else { 0.0 };
    let mut norm = 0.0;
    if start % 2 == 0 {
        norm += ln_c(start / 2).exp() * cur;
    }
    for k in (1..=start).rev() {
        let below = 2.0 * (mu + k as f64) / x * cur - above;
        above = cur;
        cur = below;
        let idx = k - 1;
        if idx == m {
            target = cur;
        }
        if idx % 2 == 0 {
            norm += ln_c(idx / 2).exp() * cur;
        }
        if cur.abs() > 1e250 {
            cur *= 1e-250;
            above *= 1e-250;
            target *= 1e-250;
            norm *= 1e-250;
        }
    }
    target * (mu * (0.5 * x).ln()).exp() / norm
}

/// McMahon-type estimate of the `s`-th positive zero of `J_ν` (`s ≥ 1`).
pub fn bessel_j_zero_estimate(nu: f64, s: usize) -> f64 {
    let b = (s as f64 + 0.5 * nu - 0.25) * PI;
    let mu = 4.0 * nu * nu;
    b - (mu - 1.0) / (8.0 * b) - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * (8.0 * b).powi(3))
}

/// Positive zeros of `J_ν` in `(0, upto]`, ascending.
///
/// Zeros are located by scanning for sign changes on a grid of spacing
/// `π/8` starting just below `ν` (no zero of `J_ν` lies below `ν` for
/// `ν ≥ 0`), then refined to full precision.
pub fn bessel_j_zeros(nu: f64, upto: f64) -> Vec<f64> {
    bessel_j_zeros_between(nu, 0.0, upto)
}

/// Zeros of `J_ν` in `(lo, hi]`, ascending.
pub fn bessel_j_zeros_between(nu: f64, lo: f64, hi: f64) -> Vec<f64> {
    let step = PI / 8.0;
    let mut zeros = Vec::new();
    // no zeros below ν
    let mut a = lo.max((nu.max(0.0) - 1.0).max(1e-3));
    let mut fa = bessel_j(nu, a);
    while a < hi {
        let b = a + step;
        let fb = bessel_j(nu, b);
        if fa == 0.0 {
            if a > lo {
                zeros.push(a);
            }
        } else if fa.signum() != fb.signum() && fb != 0.0 {
            let guess = a - fa * (b - a) / (fb - fa);
            let z = refine_root(|t| bessel_j(nu, t), guess, 0.25 * step).unwrap_or(guess);
            if z > lo && z <= hi {
                zeros.push(z);
            }
        }
        a = b;
        fa = fb;
    }
    zeros
}
