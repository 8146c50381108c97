//! Globally adaptive Gauss quadrature on finite and semi-infinite ranges.
//!
//! Each panel is integrated with an `order`-point Gauss–Legendre rule and
//! its error estimated by the difference against the `order/2`-point rule.
//! The panel with the largest estimate is bisected until the summed
//! estimate meets `max(rel_tol·|I|, abs_tol)`. Caller-supplied breakpoints
//! seed the initial partition so that sign changes and kinks of the
//! integrand (polynomial or Bessel zeros) sit on panel edges.

mod adaptive;
mod gauss;
mod tail;

pub use adaptive::{integrate, integrate_zero_split};
pub use gauss::{gauss_nodes, GaussRule};
pub use tail::{integrate_tail, integrate_tail_split};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Points of the primary Gauss rule.
    pub panel_order: usize,
    /// Maximum bisection depth of a panel; for tails, the maximum number of
    /// geometric panels.
    pub max_depth: usize,
    /// Ratio between successive tail panel widths.
    pub tail_growth: f64,
    /// A tail stops once two consecutive panels each contribute less than
    /// this fraction of the accumulated value.
    pub tail_stop: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            panel_order: 31,
            max_depth: 40,
            tail_growth: 2.0,
            tail_stop: 1e-16,
        }
    }
}

impl QuadratureConfig {
    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    /// Same configuration with `abs_tol` multiplied by `scale`, for
    /// integrals whose natural magnitude is far from one.
    pub fn scaled_abs(mut self, scale: f64) -> Self {
        if scale.is_finite() && scale > 0.0 {
            self.abs_tol *= scale;
        }
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(msg));
        if !(self.rel_tol > 0.0) {
            return bad(format!("rel_tol must be positive, got {}", self.rel_tol));
        }
        if !(self.abs_tol > 0.0) {
            return bad(format!("abs_tol must be positive, got {}", self.abs_tol));
        }
        if self.panel_order < 2 {
            return bad(format!("panel_order must be at least 2, got {}", self.panel_order));
        }
        if self.max_depth < 1 {
            return bad("max_depth must be at least 1".into());
        }
        if !(self.tail_growth > 1.0) {
            return bad(format!("tail_growth must exceed 1, got {}", self.tail_growth));
        }
        if !(self.tail_stop > 0.0) {
            return bad(format!("tail_stop must be positive, got {}", self.tail_stop));
        }
        Ok(())
    }

    pub(crate) fn tolerance_for(&self, value: f64) -> f64 {
        (self.rel_tol * value.abs()).max(self.abs_tol)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub panels_used: usize,
    pub converged: bool,
}

impl IntegralResult {
    pub const ZERO: IntegralResult =
        IntegralResult { value: 0.0, abs_error_estimate: 0.0, panels_used: 0, converged: true };

    /// Sum of two independent integrals; errors add.
    pub fn combine(self, other: IntegralResult) -> IntegralResult {
        IntegralResult {
            value: self.value + other.value,
            abs_error_estimate: self.abs_error_estimate + other.abs_error_estimate,
            panels_used: self.panels_used + other.panels_used,
            converged: self.converged && other.converged,
        }
    }

    pub fn scale(self, factor: f64) -> IntegralResult {
        IntegralResult {
            value: self.value * factor,
            abs_error_estimate: self.abs_error_estimate * factor.abs(),
            ..self
        }
    }

    pub fn relative_error(&self) -> f64 {
        if self.value == 0.0 {
            if self.abs_error_estimate == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            self.abs_error_estimate / self.value.abs()
        }
    }
}
