//! Weighted orthonormal Laguerre functions `φ_k(x) = L̂_k^{(α)}(x)·√(x^α e^{-x})`.
//!
//! The orthonormal polynomials obey
//! `√b_{j+1} q_{j+1} = (x - a_j) q_j - √b_j q_{j-1}` with `a_j = 2j + α + 1`,
//! `b_j = j (j + α)` and `q_0 = 1/√Γ(α+1)`. The recurrence runs on a rescaled
//! pair whose scale is accumulated in log form, and the square-root weight is
//! folded in as `½(α ln x - x)`, so `φ_k` is available as a [`SignedLog`]
//! for every degree and argument we care about.

use std::sync::OnceLock;

use super::gamma::log_gamma;
use super::tridiag::jacobi_eigen;
use super::SignedLog;
use crate::error::{Error, Result};

const RESCALE_HI: f64 = 1e150;
const RESCALE_LO: f64 = 1e-150;

/// Evaluator for `φ_k` at fixed degree and `α`; zeros are computed on first use.
#[derive(Debug)]
pub struct WeightedLaguerre {
    degree: usize,
    alpha: f64,
    ln_q0: f64,
    zeros: OnceLock<Vec<f64>>,
}

impl Clone for WeightedLaguerre {
    fn clone(&self) -> Self {
        let zeros = OnceLock::new();
        if let Some(z) = self.zeros.get() {
            let _ = zeros.set(z.clone());
        }
        WeightedLaguerre { degree: self.degree, alpha: self.alpha, ln_q0: self.ln_q0, zeros }
    }
}

impl WeightedLaguerre {
    pub fn new(degree: usize, alpha: f64) -> Result<Self> {
        if !(alpha > -1.0) || !alpha.is_finite() {
            return Err(Error::Domain(format!("Laguerre parameter alpha must exceed -1, got {alpha}")));
        }
        let ln_q0 = -0.5 * log_gamma(alpha + 1.0)?;
        Ok(WeightedLaguerre { degree, alpha, ln_q0, zeros: OnceLock::new() })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `φ_k(x)` as sign and log-magnitude. Negative `x` is outside the
    /// support and yields zero.
    pub fn log_eval(&self, x: f64) -> SignedLog {
        if !(x >= 0.0) {
            return SignedLog::ZERO;
        }
        let ln_weight = if x == 0.0 {
            if self.alpha > 0.0 {
                return SignedLog::ZERO;
            } else if self.alpha == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            0.5 * (self.alpha * x.ln() - x)
        };
        let (q, ln_scale) = self.poly_scaled(x);
        if q == 0.0 {
            return SignedLog::ZERO;
        }
        SignedLog { sign: if q > 0.0 { 1 } else { -1 }, ln_abs: q.abs().ln() + ln_scale + ln_weight }
    }

    /// The orthonormal polynomial `L̂_k^{(α)}(x)` without the weight.
    pub fn log_poly(&self, x: f64) -> SignedLog {
        let (q, ln_scale) = self.poly_scaled(x);
        if q == 0.0 {
            return SignedLog::ZERO;
        }
        SignedLog { sign: if q > 0.0 { 1 } else { -1 }, ln_abs: q.abs().ln() + ln_scale }
    }

    /// `φ_k(x)`; returns exactly `0.0` where the weight underflows.
    pub fn eval(&self, x: f64) -> f64 {
        self.log_eval(x).to_f64()
    }

    /// Orthonormal polynomial `q_k(x)` as `(mantissa, ln scale)`.
    fn poly_scaled(&self, x: f64) -> (f64, f64) {
        let a = self.alpha;
        let mut prev = 0.0;
        let mut cur = 1.0;
        let mut ln_scale = self.ln_q0;
        for j in 0..self.degree {
            let jf = j as f64;
            let b_j = (jf * (jf + a)).sqrt();
            let b_next = ((jf + 1.0) * (jf + 1.0 + a)).sqrt();
            let next = ((x - (2.0 * jf + a + 1.0)) * cur - b_j * prev) / b_next;
            prev = cur;
            cur = next;
            let m = cur.abs().max(prev.abs());
            if m > RESCALE_HI || (m < RESCALE_LO && m > 0.0) {
                cur /= m;
                prev /= m;
                ln_scale += m.ln();
            }
        }
        (cur, ln_scale)
    }

    /// Newton step `q_k(x) / q_k'(x)` (scale-free).
    fn newton_step(&self, x: f64) -> f64 {
        let a = self.alpha;
        let (mut p0, mut p1) = (0.0, 1.0);
        let (mut d0, mut d1) = (0.0, 0.0);
        for j in 0..self.degree {
            let jf = j as f64;
            let b_j = (jf * (jf + a)).sqrt();
            let b_next = ((jf + 1.0) * (jf + 1.0 + a)).sqrt();
            let shift = x - (2.0 * jf + a + 1.0);
            let p2 = (shift * p1 - b_j * p0) / b_next;
            let d2 = (shift * d1 + p1 - b_j * d0) / b_next;
            p0 = p1;
            p1 = p2;
            d0 = d1;
            d1 = d2;
            let m = p1.abs().max(p0.abs()).max(d1.abs()).max(d0.abs());
            if m > RESCALE_HI || (m < RESCALE_LO && m > 0.0) {
                p0 /= m;
                p1 /= m;
                d0 /= m;
                d1 /= m;
            }
        }
        p1 / d1
    }

    /// The `k` zeros of `L_k^{(α)}`, ascending.
    pub fn zeros(&self) -> &[f64] {
        self.zeros.get_or_init(|| self.compute_zeros())
    }

    fn compute_zeros(&self) -> Vec<f64> {
        let k = self.degree;
        let a = self.alpha;
        let diag: Vec<f64> = (0..k).map(|j| 2.0 * j as f64 + a + 1.0).collect();
        let off: Vec<f64> = (1..k).map(|j| (j as f64 * (j as f64 + a)).sqrt()).collect();
        let mut zeros = jacobi_eigen(&diag, &off).values;
        // eigenvalues carry absolute error ~ eps·‖J‖; Newton restores relative accuracy at the small end
        for z in zeros.iter_mut() {
            let mut x = *z;
            for _ in 0..8 {
                let dx = self.newton_step(x);
                if !dx.is_finite() {
                    break;
                }
                x -= dx;
                if dx.abs() <= 1e-16 * x.abs() {
                    break;
                }
            }
            if x.is_finite() && (x - *z).abs() <= 1e-6 * z.abs().max(1e-3) {
                *z = x;
            }
        }
        zeros
    }
}

/// `φ_k(x) = L̂_k^{(α)}(x) √(x^α e^{-x})`.
pub fn laguerre_weighted(k: usize, alpha: f64, x: f64) -> Result<f64> {
    Ok(WeightedLaguerre::new(k, alpha)?.eval(x))
}

/// Zeros of the degree-`k` Laguerre polynomial `L_k^{(α)}`, ascending.
pub fn laguerre_zeros(k: usize, alpha: f64) -> Result<Vec<f64>> {
    Ok(WeightedLaguerre::new(k, alpha)?.zeros().to_vec())
}
