//! Airy function `Ai(x)`.
//!
//! * `x < 0`: `Ai(-y) = (√y/3)[J_{1/3}(ζ) + J_{-1/3}(ζ)]`, `ζ = (2/3) y^{3/2}`;
//! * `0 ≤ x ≤ 1`: Maclaurin series;
//! * `x > 1`: `Ai(x) = (1/π)√(x/3) K_{1/3}(ζ)` with
//!   `K_ν(ζ) = ∫₀^∞ e^{-ζ cosh u} cosh(νu) du` by the trapezoidal rule,
//!   which converges geometrically for this entire integrand.

use std::f64::consts::PI;

use super::bessel::bessel_j;
use super::gamma::gamma_positive;
use super::roots::refine_root;

/// `Ai(0) = 1 / (3^{2/3} Γ(2/3))`.
fn ai0() -> f64 {
    1.0 / (3f64.powf(2.0 / 3.0) * gamma_positive(2.0 / 3.0).unwrap())
}

/// `-Ai'(0) = 1 / (3^{1/3} Γ(1/3))`.
fn neg_aip0() -> f64 {
    1.0 / (3f64.cbrt() * gamma_positive(1.0 / 3.0).unwrap())
}

pub fn airy_ai(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x == 0.0 {
        return ai0();
    }
    if x < 0.0 {
        let y = -x;
        let zeta = 2.0 / 3.0 * y * y.sqrt();
        return y.sqrt() / 3.0 * (bessel_j(1.0 / 3.0, zeta) + bessel_j(-1.0 / 3.0, zeta));
    }
    if x <= 1.0 {
        return maclaurin(x);
    }
    if x > 105.0 {
        // exp(-ζ) underflows
        return 0.0;
    }
    let zeta = 2.0 / 3.0 * x * x.sqrt();
    (x / 3.0).sqrt() / PI * bessel_k_third_scaled(zeta) * (-zeta).exp()
}

/// Moduli `|a_s|` of the zeros of `Ai` with `lo < |a_s| ≤ hi`, ascending.
pub fn airy_ai_zeros_between(lo: f64, hi: f64) -> Vec<f64> {
    let estimate = |s: usize| {
        let t = 3.0 * PI * (4.0 * s as f64 - 1.0) / 8.0;
        t.powf(2.0 / 3.0) * (1.0 + 5.0 / (48.0 * t * t))
    };
    let lo = lo.max(0.0);
    let phase = 2.0 / 3.0 * lo * lo.sqrt();
    let mut s = ((phase * 8.0 / (3.0 * PI) + 1.0) / 4.0).floor().max(3.0) as usize - 2;
    let mut zeros = Vec::new();
    loop {
        let guess = estimate(s);
        if guess > hi + 1.0 {
            break;
        }
        let step = 0.05 * PI / guess.sqrt();
        let z = refine_root(|y| airy_ai(-y), guess, step).unwrap_or(guess);
        if z > lo && z <= hi {
            zeros.push(z);
        }
        s += 1;
    }
    zeros
}

fn maclaurin(x: f64) -> f64 {
    // Ai = c1 f - c2 g, f = Σ 3^k (1/3)_k x^{3k}/(3k)!, g = Σ 3^k (2/3)_k x^{3k+1}/(3k+1)!
    let x3 = x * x * x;
    let mut f_term = 1.0;
    let mut g_term = x;
    let mut f = f_term;
    let mut g = g_term;
    for k in 1..60 {
        let kf = k as f64;
        f_term *= x3 / ((3.0 * kf - 1.0) * (3.0 * kf));
        g_term *= x3 / ((3.0 * kf) * (3.0 * kf + 1.0));
        f += f_term;
        g += g_term;
        if f_term < 1e-18 * f && g_term < 1e-18 * g.abs() {
            break;
        }
    }
    ai0() * f - neg_aip0() * g
}

/// `e^{ζ} K_{1/3}(ζ)` for `ζ > 0`.
fn bessel_k_third_scaled(zeta: f64) -> f64 {
    let h = 0.05;
    let mut sum = 0.5;
    let mut k = 1;
    loop {
        let u = k as f64 * h;
        let term = (-zeta * (u.cosh() - 1.0)).exp() * (u / 3.0).cosh();
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
        k += 1;
    }
    sum * h
}
