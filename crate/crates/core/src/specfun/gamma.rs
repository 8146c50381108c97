use crate::error::{Error, Result};

/// `ln Γ(x)` for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("log_gamma requires x > 0, got {x}")));
    }
    Ok(statrs::function::gamma::ln_gamma(x))
}

/// `Γ(x)` for `x > 0`, through the log to survive large arguments
/// up to the `f64` overflow threshold.
pub fn gamma_positive(x: f64) -> Result<f64> {
    log_gamma(x).map(f64::exp)
}
