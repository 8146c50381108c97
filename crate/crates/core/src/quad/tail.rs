use super::adaptive::adapt;
use super::{IntegralResult, QuadratureConfig};
use crate::error::{Error, Result};

/// `∫_a^∞ f(x) dx` for an absolutely integrable `f`.
///
/// Panels grow geometrically: `[a, a·g], [a·g, a·g²], …` for `a > 0`, and
/// `[a, a+1], [a+1, a+1+g], …` otherwise. Integration stops once two
/// consecutive panels each contribute less than `tail_stop` of the running
/// total; if that has not happened after `max_depth` panels the result is
/// flagged as not converged.
pub fn integrate_tail<F: Fn(f64) -> f64>(f: F, a: f64, cfg: &QuadratureConfig) -> Result<IntegralResult> {
    integrate_tail_split(f, a, |_, _| Vec::new(), cfg)
}

/// [`integrate_tail`] with each geometric panel pre-split at the points
/// returned by `splits(lo, hi)` (e.g. zero estimates of an oscillatory
/// factor), so every cell holds at most a half-oscillation.
pub fn integrate_tail_split<F, Z>(f: F, a: f64, splits: Z, cfg: &QuadratureConfig) -> Result<IntegralResult>
where
    F: Fn(f64) -> f64,
    Z: Fn(f64, f64) -> Vec<f64>,
{
    cfg.validate()?;
    if !a.is_finite() {
        return Err(Error::Domain(format!("tail start must be finite, got {a}")));
    }
    let g = cfg.tail_growth;
    let mut width = if a > 0.0 { a * (g - 1.0) } else { 1.0 };
    let mut lo = a;
    let mut total = IntegralResult::ZERO;
    let mut quiet_panels = 0;
    for _ in 0..cfg.max_depth {
        let hi = lo + width;
        let mut edges = vec![lo];
        let mut inner = splits(lo, hi);
        inner.retain(|&x| x > lo && x < hi);
        inner.sort_by(f64::total_cmp);
        edges.extend(inner);
        edges.push(hi);
        // panel accuracy is judged against what has been accumulated so far
        let panel_cfg = QuadratureConfig { abs_tol: cfg.abs_tol.max(0.25 * cfg.rel_tol * total.value.abs()), ..*cfg };
        let panel = adapt(&f, &edges, &panel_cfg)?;
        total = total.combine(panel);
        if !total.value.is_finite() {
            return Ok(IntegralResult { converged: false, ..total });
        }
        if panel.value.abs() <= cfg.tail_stop * total.value.abs() {
            quiet_panels += 1;
            if quiet_panels >= 2 {
                total.converged = total.converged && total.abs_error_estimate <= cfg.tolerance_for(total.value);
                return Ok(total);
            }
        } else {
            quiet_panels = 0;
        }
        lo = hi;
        width *= g;
    }
    Ok(IntegralResult { converged: false, ..total })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_tail() {
        let r = integrate_tail(|x: f64| (-x).exp(), 1.0, &QuadratureConfig::default()).unwrap();
        assert!((r.value - (-1f64).exp()).abs() < 1e-14, "{r:?}");
        assert!(r.converged);
    }

    #[test]
    fn gamma_moment_from_zero() {
        let r = integrate_tail(|x: f64| x * x * (-2.0 * x).exp(), 0.0, &QuadratureConfig::default()).unwrap();
        assert!((r.value - 0.25).abs() < 1e-14, "{r:?}");
        assert!(r.converged);
    }

    #[test]
    fn slowly_decaying_tail_is_flagged() {
        let cfg = QuadratureConfig { max_depth: 10, ..Default::default() };
        let r = integrate_tail(|x: f64| 1.0 / (1.0 + x * x), 0.0, &cfg).unwrap();
        assert!(!r.converged);
    }
}
