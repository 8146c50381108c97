//! Special functions used by the entropy integrands.
//!
//! Everything here is a pure function of its arguments. Values that span
//! many orders of magnitude (weighted Laguerre functions, spherical harmonic
//! normalisations) are carried as [`SignedLog`] so that `|f|^p` can be
//! formed as `exp(p·ln|f|)` without overflow.

mod airy;
mod bessel;
mod gamma;
mod gegenbauer;
mod laguerre;
mod roots;
mod tridiag;

pub use airy::{airy_ai, airy_ai_zeros_between};
pub use bessel::{bessel_j, bessel_j_zero_estimate, bessel_j_zeros, bessel_j_zeros_between};
pub use gamma::{gamma_positive, log_gamma};
pub use gegenbauer::{gegenbauer, gegenbauer_zeros, spherical_harmonic_sq, spherical_harmonic_sq_ln, SphericalHarmonicSq};
pub use laguerre::{laguerre_weighted, laguerre_zeros, WeightedLaguerre};
pub use roots::refine_root;
pub use tridiag::{jacobi_eigen, JacobiEigen};

/// A real number stored as sign and natural log of its magnitude.
///
/// `sign == 0` encodes an exact zero (and `ln_abs == -inf`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLog {
    pub sign: i8,
    pub ln_abs: f64,
}

impl SignedLog {
    pub const ZERO: SignedLog = SignedLog { sign: 0, ln_abs: f64::NEG_INFINITY };

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else {
            SignedLog { sign: if x > 0.0 { 1 } else { -1 }, ln_abs: x.abs().ln() }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// True when the value is nonzero but too small to be represented as an
    /// `f64`; `to_f64` then returns exactly `0.0`.
    pub fn underflows(&self) -> bool {
        self.sign != 0 && self.ln_abs < -745.2
    }

    pub fn to_f64(&self) -> f64 {
        if self.sign == 0 {
            0.0
        } else {
            f64::from(self.sign) * self.ln_abs.exp()
        }
    }
}
