//! Gegenbauer polynomials and squared spherical harmonics built on them.

use std::f64::consts::{LN_2, PI};

use super::gamma::log_gamma;
use super::tridiag::jacobi_eigen;
use crate::error::{Error, Result};

/// `C_k^{(λ)}(x)` by the three-term recurrence.
pub fn gegenbauer(k: usize, lambda: f64, x: f64) -> f64 {
    let (v, ln_scale) = gegenbauer_scaled(k, lambda, x);
    if ln_scale == 0.0 {
        v
    } else {
        v * ln_scale.exp()
    }
}

/// Recurrence with periodic rescaling; returns `(mantissa, ln scale)`.
fn gegenbauer_scaled(k: usize, lambda: f64, x: f64) -> (f64, f64) {
    if k == 0 {
        return (1.0, 0.0);
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * lambda * x;
    let mut ln_scale = 0.0;
    for n in 1..k {
        let nf = n as f64;
        let next = (2.0 * x * (nf + lambda) * cur - (nf + 2.0 * lambda - 1.0) * prev) / (nf + 1.0);
        prev = cur;
        cur = next;
        let m = cur.abs().max(prev.abs());
        if m > 1e150 {
            cur /= m;
            prev /= m;
            ln_scale += m.ln();
        }
    }
    (cur, ln_scale)
}

fn gegenbauer_newton_step(k: usize, lambda: f64, x: f64) -> f64 {
    let (mut p0, mut p1) = (1.0, 2.0 * lambda * x);
    let (mut d0, mut d1) = (0.0, 2.0 * lambda);
    for n in 1..k {
        let nf = n as f64;
        let c = 2.0 * (nf + lambda);
        let e = nf + 2.0 * lambda - 1.0;
        let p2 = (c * x * p1 - e * p0) / (nf + 1.0);
        let d2 = (c * p1 + c * x * d1 - e * d0) / (nf + 1.0);
        p0 = p1;
        p1 = p2;
        d0 = d1;
        d1 = d2;
        let m = p1.abs().max(d1.abs());
        if m > 1e150 {
            p0 /= m;
            p1 /= m;
            d0 /= m;
            d1 /= m;
        }
    }
    p1 / d1
}

/// Zeros of `C_k^{(λ)}` in `(-1, 1)`, ascending (`λ > -1/2`, `λ ≠ 0`).
pub fn gegenbauer_zeros(k: usize, lambda: f64) -> Vec<f64> {
    let off: Vec<f64> = (1..k)
        .map(|j| {
            let j = j as f64;
            (j * (j + 2.0 * lambda - 1.0) / (4.0 * (j + lambda) * (j + lambda - 1.0))).sqrt()
        })
        .collect();
    let mut zeros = jacobi_eigen(&vec![0.0; k], &off).values;
    for z in zeros.iter_mut() {
        let mut x = *z;
        for _ in 0..6 {
            let dx = gegenbauer_newton_step(k, lambda, x);
            if !dx.is_finite() {
                break;
            }
            x -= dx;
            if dx.abs() <= 1e-16 {
                break;
            }
        }
        if (x - *z).abs() < 1e-6 {
            *z = x;
        }
    }
    // exact antisymmetry keeps the split points of even integrands symmetric
    for i in 0..k / 2 {
        let s = 0.5 * (zeros[k - 1 - i] - zeros[i]);
        zeros[i] = -s;
        zeros[k - 1 - i] = s;
    }
    if k % 2 == 1 {
        zeros[k / 2] = 0.0;
    }
    zeros
}

/// Squared modulus of `Y_{l,m}` as a function of `u = cos θ`.
///
/// `|Y_{l,m}|² = N_{l,|m|} (1-u²)^{|m|} [C_{l-|m|}^{(|m|+1/2)}(u)]²` with
/// `N = (l+½)(l-|m|)! Γ(|m|+½)² / (2^{1-2|m|} π² (l+|m|)!)`. Only `|m|`
/// enters, so the sign of `m` is irrelevant.
#[derive(Debug, Clone)]
pub struct SphericalHarmonicSq {
    l: usize,
    m_abs: usize,
    lambda: f64,
    ln_norm: f64,
}

impl SphericalHarmonicSq {
    pub fn new(l: u32, m: i32) -> Result<Self> {
        let m_abs = m.unsigned_abs();
        if m_abs > l {
            return Err(Error::Domain(format!("|m| must not exceed l (l = {l}, m = {m})")));
        }
        let (lf, mf) = (f64::from(l), f64::from(m_abs));
        let ln_norm = (lf + 0.5).ln() + log_gamma(lf - mf + 1.0)? + 2.0 * log_gamma(mf + 0.5)?
            - (1.0 - 2.0 * mf) * LN_2
            - 2.0 * PI.ln()
            - log_gamma(lf + mf + 1.0)?;
        Ok(SphericalHarmonicSq { l: l as usize, m_abs: m_abs as usize, lambda: mf + 0.5, ln_norm })
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn m_abs(&self) -> usize {
        self.m_abs
    }

    /// `ln |Y|²` at `u = cos θ`; `-inf` on nodal lines.
    pub fn ln_at(&self, u: f64) -> f64 {
        let (c, ln_scale) = gegenbauer_scaled(self.l - self.m_abs, self.lambda, u);
        if c == 0.0 {
            return f64::NEG_INFINITY;
        }
        let sin_part = if self.m_abs == 0 {
            0.0
        } else {
            let s2 = (1.0 - u) * (1.0 + u);
            if s2 <= 0.0 {
                return f64::NEG_INFINITY;
            }
            self.m_abs as f64 * s2.ln()
        };
        self.ln_norm + sin_part + 2.0 * (c.abs().ln() + ln_scale)
    }

    pub fn at(&self, u: f64) -> f64 {
        self.ln_at(u).exp()
    }

    /// Nodal points in `u` from the Gegenbauer factor (excluding `u = ±1`).
    pub fn nodes(&self) -> Vec<f64> {
        gegenbauer_zeros(self.l - self.m_abs, self.lambda)
    }
}

/// `|Y_{l,m}(θ, φ)|²`, independent of `φ`.
pub fn spherical_harmonic_sq(l: u32, m: i32, theta: f64) -> Result<f64> {
    Ok(SphericalHarmonicSq::new(l, m)?.at(theta.cos()))
}

/// `ln |Y_{l,m}(θ)|²`.
pub fn spherical_harmonic_sq_ln(l: u32, m: i32, theta: f64) -> Result<f64> {
    Ok(SphericalHarmonicSq::new(l, m)?.ln_at(theta.cos()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn gegenbauer_low_degrees() {
        assert_eq!(gegenbauer(0, 0.7, 0.3), 1.0);
        assert!((gegenbauer(1, 1.5, 0.5) - 1.5).abs() < 1e-15);
        for &x in &[-1.0, -0.4, 0.0, 0.25, 0.9] {
            let p2 = 0.5 * (3.0 * x * x - 1.0);
            assert!((gegenbauer(2, 0.5, x) - p2).abs() < 1e-15);
        }
    }

    #[test]
    fn gegenbauer_at_one() {
        // C_k^λ(1) = Γ(k+2λ) / (k! Γ(2λ))
        for k in 0..30usize {
            for &lam in &[0.5, 1.5, 3.5] {
                let want = (log_gamma(k as f64 + 2.0 * lam).unwrap()
                    - log_gamma(k as f64 + 1.0).unwrap()
                    - log_gamma(2.0 * lam).unwrap())
                .exp();
                assert!(((gegenbauer(k, lam, 1.0) - want) / want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn textbook_harmonics() {
        for &th in &[0.0, 0.3, 1.0, FRAC_PI_2, 2.5, PI] {
            let y00 = spherical_harmonic_sq(0, 0, th).unwrap();
            assert!((y00 - 1.0 / (4.0 * PI)).abs() < 1e-15);
            let y10 = spherical_harmonic_sq(1, 0, th).unwrap();
            assert!((y10 - 3.0 / (4.0 * PI) * th.cos().powi(2)).abs() < 1e-15);
            let y11 = spherical_harmonic_sq(1, -1, th).unwrap();
            assert!((y11 - 3.0 / (8.0 * PI) * th.sin().powi(2)).abs() < 1e-15);
        }
        assert!((spherical_harmonic_sq(1, 1, FRAC_PI_2).unwrap() - 3.0 / (8.0 * PI)).abs() < 1e-15);
    }

    #[test]
    fn addition_theorem() {
        for l in 0..=10u32 {
            for &th in &[0.01, 0.4, 1.2, 2.0, 3.1] {
                let total: f64 = (-(l as i32)..=l as i32).map(|m| spherical_harmonic_sq(l, m, th).unwrap()).sum();
                let want = (2.0 * l as f64 + 1.0) / (4.0 * PI);
                assert!((total - want).abs() < 1e-10 * want, "l={l} th={th}");
            }
        }
    }

    #[test]
    fn sign_of_m_is_irrelevant() {
        for l in 0..6u32 {
            for m in 0..=l as i32 {
                assert_eq!(spherical_harmonic_sq(l, m, 0.77).unwrap(), spherical_harmonic_sq(l, -m, 0.77).unwrap());
            }
        }
    }

    #[test]
    fn rejects_large_m() {
        assert!(spherical_harmonic_sq(2, 3, 0.1).is_err());
    }

    #[test]
    fn zeros_are_nodes() {
        for k in 1..12usize {
            for &lam in &[0.5, 2.5] {
                let z = gegenbauer_zeros(k, lam);
                assert_eq!(z.len(), k);
                for &x in &z {
                    let scale = gegenbauer(k, lam, 1.0);
                    assert!(gegenbauer(k, lam, x).abs() < 1e-12 * scale, "k={k} lam={lam} x={x}");
                }
            }
        }
    }
}
