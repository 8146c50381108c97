//! Rydberg (`n → ∞`) asymptotics of the entropic quantities.
//!
//! The Laguerre norm `N_k(α, p, β)` is dominated by one of three regions of
//! the polynomial, which sets a power law in `k`:
//!
//! ```text
//! 0 < p < 2   cosine      N ≈ C(p, β)·(2k)^{β+1-p/2}·...  (hydrogenic: (2k)^{3-2p})
//! p = 2       transition  N ≈ ln k / (π² k)
//! p > 2       Bessel      N ≈ C_B(α, p, β)·k^{p-3}
//! ```
//!
//! Only dominant terms are kept; every additive `O(1)` or `o(1)` correction
//! is taken to be zero. The Airy constant is provided for completeness and is
//! not used when assembling entropies.

use std::collections::HashMap;
use std::f64::consts::{LN_2, PI};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::hydrogenic::{
    angular_renyi, ln_radial_prefactor, shannon_angular, tsallis_from_renyi, EntropyKind, EntropyResult, Method,
    QuantumState,
};
use crate::quad::{integrate, integrate_zero_split, IntegralResult, QuadratureConfig};
use crate::specfun::{airy_ai, airy_ai_zeros_between, bessel_j, bessel_j_zeros_between, log_gamma};

/// `|p - 2|` at or below this is treated as the `p = 2` transition.
pub const P_EQUAL_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Regime {
    /// `0 < p < 2`.
    Cosine,
    /// `p = 2`.
    CosineBessel,
    /// `p > 2`.
    Bessel,
    /// Exact results carry no regime.
    NotApplicable,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::Cosine => "cosine",
            Regime::CosineBessel => "cosine-bessel",
            Regime::Bessel => "bessel",
            Regime::NotApplicable => "none",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn regime_of(p: f64) -> Result<Regime> {
    if !(p > 0.0) || !p.is_finite() {
        return Err(Error::Domain(format!("p must be positive, got {p}")));
    }
    if p == 1.0 {
        return Err(Error::Domain("p = 1 has no Rényi regime; use the Shannon entropy".into()));
    }
    Ok(if (p - 2.0).abs() <= P_EQUAL_TOLERANCE {
        Regime::CosineBessel
    } else if p < 2.0 {
        Regime::Cosine
    } else {
        Regime::Bessel
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstantKind {
    CosineC,
    BesselCB,
    AiryCA,
}

/// A numerically evaluated regime constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegimeConstant {
    pub kind: ConstantKind,
    pub alpha: Option<f64>,
    pub p: f64,
    pub beta: Option<f64>,
    pub value: f64,
    pub error_estimate: f64,
    pub converged: bool,
}

fn ln_gamma_checked(factor: &'static str, argument: f64) -> Result<f64> {
    if argument <= 0.0 {
        return Err(Error::GammaPole { factor, argument });
    }
    log_gamma(argument)
}

/// `ln C(p, β)` of the cosine regime.
pub fn ln_cosine_constant(p: f64, beta: f64) -> Result<f64> {
    if !(p > 0.0) || !p.is_finite() || !beta.is_finite() {
        return Err(Error::Domain(format!("cosine constant needs finite p > 0 and β, got p = {p}, β = {beta}")));
    }
    Ok((beta + 1.0) * LN_2 - (p + 0.5) * PI.ln()
        + ln_gamma_checked("Γ(β+1−p/2)", beta + 1.0 - 0.5 * p)?
        + ln_gamma_checked("Γ(1−p/2)", 1.0 - 0.5 * p)?
        + ln_gamma_checked("Γ(p+1/2)", p + 0.5)?
        - ln_gamma_checked("Γ(β+2−p)", beta + 2.0 - p)?
        - ln_gamma_checked("Γ(1+p)", 1.0 + p)?)
}

/// `C(p, β) = 2^{β+1} π^{-p-1/2} Γ(β+1-p/2) Γ(1-p/2) Γ(p+1/2) / (Γ(β+2-p) Γ(1+p))`.
pub fn cosine_constant(p: f64, beta: f64) -> Result<f64> {
    Ok(ln_cosine_constant(p, beta)?.exp())
}

/// Mean of `|cos θ|^{2p}` over a period.
fn cos_power_mean(p: f64) -> Result<f64> {
    Ok((log_gamma(p + 0.5)? - log_gamma(p + 1.0)? - 0.5 * PI.ln()).exp())
}

const CACHE_CAPACITY: usize = 4096;

type CacheKey = (ConstantKind, u64, u64, u64, u64);

fn cache() -> &'static Mutex<HashMap<CacheKey, RegimeConstant>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, RegimeConstant>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The computation is deterministic, so a racing duplicate insert stores the
/// same value; once full the cache stops growing.
fn cached(key: CacheKey, compute: impl FnOnce() -> Result<RegimeConstant>) -> Result<RegimeConstant> {
    if let Some(hit) = cache().lock().unwrap_or_else(|e| e.into_inner()).get(&key) {
        return Ok(*hit);
    }
    let value = compute()?;
    let mut map = cache().lock().unwrap_or_else(|e| e.into_inner());
    if map.len() < CACHE_CAPACITY {
        map.entry(key).or_insert(value);
    }
    Ok(value)
}

/// Largest number of window doublings for the oscillatory constants.
const MAX_DOUBLINGS: usize = 14;

/// Integrates an oscillatory integrand over `[0, ∞)` whose local mean is
/// known: numeric quadrature over `[0, T]`, with `T` a zero of the
/// oscillation, plus the analytic mean remainder `tail(T)`. `T` doubles
/// until two successive totals agree to `rel_tol`.
fn oscillatory_total<F, Z, R>(f: F, zeros_between: Z, tail: R, first: f64, scale: f64, cfg: &QuadratureConfig) -> Result<IntegralResult>
where
    F: Fn(f64) -> f64,
    Z: Fn(f64, f64) -> Vec<f64>,
    R: Fn(f64) -> f64,
{
    let cfg = cfg.scaled_abs(scale);
    let mut body = IntegralResult::ZERO;
    let mut end = 0.0;
    let mut window = first;
    let mut previous: Option<f64> = None;
    for _ in 0..=MAX_DOUBLINGS {
        let zeros = zeros_between(end, window);
        if let Some(&last) = zeros.last() {
            body = body.combine(integrate_zero_split(&f, &zeros[..zeros.len() - 1], end, last, &cfg)?);
            end = last;
        }
        if end > 0.0 {
            let total = body.value + tail(end);
            if let Some(prev) = previous {
                let diff = (total - prev).abs();
                if diff <= cfg.rel_tol * total.abs() {
                    return Ok(IntegralResult {
                        value: total,
                        abs_error_estimate: body.abs_error_estimate + diff,
                        ..body
                    });
                }
            }
            previous = Some(total);
        }
        window *= 2.0;
    }
    let value = body.value + tail(end);
    let diff = previous.map_or(value.abs(), |p| (value - p).abs());
    Ok(IntegralResult { value, abs_error_estimate: body.abs_error_estimate + diff, converged: false, ..body })
}

/// `C_B(α, p, β) = 2 ∫₀^∞ t^{2β+1} |J_α(2t)|^{2p} dt`.
///
/// The remainder beyond the last resolved zero uses the envelope
/// `J² + Y² ≈ (2/πx)(1 + (4α²-1)/(8x²))`.
pub fn bessel_constant(alpha: f64, p: f64, beta: f64, cfg: &QuadratureConfig) -> Result<RegimeConstant> {
    if !(alpha > -1.0) || !alpha.is_finite() {
        return Err(Error::Domain(format!("Bessel order must exceed -1, got {alpha}")));
    }
    if !(p > 0.0) || !p.is_finite() || !beta.is_finite() {
        return Err(Error::Domain(format!("Bessel constant needs finite p > 0 and β, got p = {p}, β = {beta}")));
    }
    if !(2.0 * beta + 2.0 + 2.0 * p * alpha > 0.0) {
        return Err(Error::Divergent {
            endpoint: "origin",
            reason: format!("2β+2+2pα = {} must be positive", 2.0 * beta + 2.0 + 2.0 * p * alpha),
        });
    }
    let s = 2.0 * beta + 1.0 - p;
    if !(s < -1.0) {
        return Err(Error::Divergent { endpoint: "infinity", reason: format!("2β+1−p = {s} must be below -1") });
    }
    cfg.validate()?;
    let key = (ConstantKind::BesselCB, alpha.to_bits(), p.to_bits(), beta.to_bits(), cfg.rel_tol.to_bits());
    cached(key, || {
        let f = |t: f64| {
            let j = bessel_j(alpha, 2.0 * t);
            if t <= 0.0 || j == 0.0 {
                0.0
            } else {
                2.0 * ((2.0 * beta + 1.0) * t.ln() + 2.0 * p * j.abs().ln()).exp()
            }
        };
        let zeros = |lo: f64, hi: f64| -> Vec<f64> {
            bessel_j_zeros_between(alpha, 2.0 * lo, 2.0 * hi).into_iter().map(|z| 0.5 * z).collect()
        };
        let mean = 2.0 * PI.powf(-p) * cos_power_mean(p)?;
        let envelope = p * (4.0 * alpha * alpha - 1.0) / 32.0;
        let tail = |t: f64| mean * (t.powf(s + 1.0) / (-s - 1.0) + envelope * t.powf(s - 1.0) / (1.0 - s));
        let first = 40.0 + alpha;
        // integrand peaks near the turning point t ≈ α/2
        let peak = 0.5 * alpha.max(1.0);
        let scale = f(peak).max(f(peak + 1.0)).clamp(f64::MIN_POSITIVE, 1.0);
        let r = oscillatory_total(f, zeros, tail, first, scale, cfg)?;
        Ok(RegimeConstant {
            kind: ConstantKind::BesselCB,
            alpha: Some(alpha),
            p,
            beta: Some(beta),
            value: r.value,
            error_estimate: r.abs_error_estimate,
            converged: r.converged,
        })
    })
}

/// `C_A(p) = ∫_{-∞}^{∞} [2π 2^{-1/3} Ai²(-t 2^{-2/3})]^p dt`, `p > 2`.
pub fn airy_constant(p: f64, cfg: &QuadratureConfig) -> Result<RegimeConstant> {
    if !(p > 2.0) || !p.is_finite() {
        return Err(Error::Domain(format!("Airy constant needs p > 2, got {p}")));
    }
    cfg.validate()?;
    let key = (ConstantKind::AiryCA, 0, p.to_bits(), 0, cfg.rel_tol.to_bits());
    cached(key, || {
        let c = 2f64.powf(-2.0 / 3.0);
        let amp = 2.0 * PI * 2f64.powf(-1.0 / 3.0);
        let f = |t: f64| {
            let a = airy_ai(-t * c);
            let v = amp * a * a;
            if v < 1e-300 {
                0.0
            } else {
                v.powf(p)
            }
        };
        // decay side: (2/3)x^{3/2}·2p beyond ~800 underflows
        let x_max = (600.0 / p).powf(2.0 / 3.0) + 1.0;
        let left = integrate(f, -x_max / c, 0.0, cfg)?;
        let zeros = |lo: f64, hi: f64| -> Vec<f64> {
            airy_ai_zeros_between(lo * c, hi * c).into_iter().map(|z| z / c).collect()
        };
        let mean = 2f64.powf(p) * cos_power_mean(p)?;
        let tail = |t: f64| mean * t.powf(1.0 - 0.5 * p) / (0.5 * p - 1.0);
        let right = oscillatory_total(f, zeros, tail, 40.0, 1.0, cfg)?;
        let r = left.combine(right);
        Ok(RegimeConstant {
            kind: ConstantKind::AiryCA,
            alpha: None,
            p,
            beta: None,
            value: r.value,
            error_estimate: r.abs_error_estimate,
            converged: r.converged,
        })
    })
}

fn reject_p(p: f64) -> Result<Regime> {
    regime_of(p)
}

fn asymptotic(kind: EntropyKind, p: Option<f64>, regime: Regime, value: f64, error_estimate: f64, converged: bool) -> EntropyResult {
    EntropyResult { value, kind, p, method: Method::Asymptotic, regime, error_estimate, converged }
}

/// Radial Rényi entropy from the three-branch power law in `k = n - l - 1`.
pub fn radial_renyi_asymptotic(state: &QuantumState, p: f64, cfg: &QuadratureConfig) -> Result<EntropyResult> {
    let regime = reject_p(p)?;
    let k = state.radial_degree() as f64;
    let min_k = if regime == Regime::CosineBessel { 2.0 } else { 1.0 };
    if k < min_k {
        return Err(Error::Domain(format!(
            "the power law in n−l−1 needs n−l−1 ≥ {min_k} (got {k} for {state})"
        )));
    }
    let prefactor = ln_radial_prefactor(f64::from(state.n()), state.charge(), p);
    let (ln_norm, rel_err, converged) = match regime {
        Regime::Cosine => (ln_cosine_constant(p, 2.0 - p)? + (3.0 - 2.0 * p) * (2.0 * k).ln(), 0.0, true),
        Regime::CosineBessel => (k.ln().ln() - 2.0 * PI.ln() - k.ln(), 0.0, true),
        _ => {
            let cb = bessel_constant(state.laguerre_alpha(), p, 2.0 - p, cfg)?;
            (cb.value.ln() - (3.0 - p) * k.ln(), cb.error_estimate / cb.value, cb.converged)
        }
    };
    Ok(asymptotic(
        EntropyKind::Renyi,
        Some(p),
        regime,
        (prefactor + ln_norm) / (1.0 - p),
        rel_err / (1.0 - p).abs(),
        converged,
    ))
}

/// Radial Rényi entropy from the simplified `l ≪ n` power law in `n`.
pub fn radial_renyi_asymptotic_large_n(n: u32, l: u32, z: f64, p: f64, cfg: &QuadratureConfig) -> Result<EntropyResult> {
    let state = QuantumState::new(n, l, 0, z)?;
    let regime = reject_p(p)?;
    let nf = f64::from(n);
    if regime == Regime::CosineBessel && n < 2 {
        return Err(Error::Domain(format!("the p = 2 law needs n ≥ 2 (got n = {n})")));
    }
    let charge = -3.0 * (1.0 - p) * z.ln();
    let (ln_w, rel_err, converged) = match regime {
        Regime::Cosine => (ln_cosine_constant(p, 2.0 - p)? + 6.0 * (1.0 - p) * nf.ln() + charge, 0.0, true),
        Regime::CosineBessel => (
            (2.0 - 4.0 * p) * nf.ln() - (3.0 - 2.0 * p) * LN_2 + charge + nf.ln().ln() - 2.0 * PI.ln(),
            0.0,
            true,
        ),
        _ => {
            let cb = bessel_constant(state.laguerre_alpha(), p, 2.0 - p, cfg)?;
            (
                cb.value.ln() - 3.0 * p * nf.ln() - (3.0 - 2.0 * p) * LN_2 + charge,
                cb.error_estimate / cb.value,
                cb.converged,
            )
        }
    };
    Ok(asymptotic(EntropyKind::Renyi, Some(p), regime, ln_w / (1.0 - p), rel_err / (1.0 - p).abs(), converged))
}

/// Default radial asymptotic: the `l ≪ n` law for `l = 0`, the general law otherwise.
pub fn radial_renyi_asymptotic_default(state: &QuantumState, p: f64, cfg: &QuadratureConfig) -> Result<EntropyResult> {
    if state.l() == 0 {
        radial_renyi_asymptotic_large_n(state.n(), 0, state.charge(), p, cfg)
    } else {
        radial_renyi_asymptotic(state, p, cfg)
    }
}

/// `S ≈ 6 ln n - ln 2 + ln π - 3 ln Z + S[Y_{l,m}]`.
pub fn shannon_asymptotic(state: &QuantumState, cfg: &QuadratureConfig) -> Result<EntropyResult> {
    let angular = shannon_angular(state.l(), state.m(), cfg)?;
    let radial = 6.0 * f64::from(state.n()).ln() - LN_2 + PI.ln() - 3.0 * state.charge().ln();
    Ok(asymptotic(
        EntropyKind::Shannon,
        None,
        Regime::NotApplicable,
        radial + angular.value,
        angular.error_estimate,
        angular.converged,
    ))
}

/// Asymptotic radial part plus the exact angular part.
pub fn renyi_total_asymptotic(state: &QuantumState, p: f64, cfg: &QuadratureConfig) -> Result<EntropyResult> {
    let radial = radial_renyi_asymptotic_default(state, p, cfg)?;
    let angular = angular_renyi(state.l(), state.m(), p, cfg)?;
    Ok(EntropyResult {
        value: radial.value + angular.value,
        error_estimate: radial.error_estimate + angular.error_estimate,
        converged: radial.converged && angular.converged,
        ..radial
    })
}

/// Tsallis entropy implied by [`renyi_total_asymptotic`].
pub fn tsallis_total_asymptotic(state: &QuantumState, p: f64, cfg: &QuadratureConfig) -> Result<EntropyResult> {
    let r = renyi_total_asymptotic(state, p, cfg)?;
    let w = ((1.0 - p) * r.value).exp();
    Ok(EntropyResult {
        kind: EntropyKind::Tsallis,
        value: tsallis_from_renyi(r.value, p),
        error_estimate: w * r.error_estimate,
        ..r
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn regimes() {
        assert_eq!(regime_of(0.75).unwrap(), Regime::Cosine);
        assert_eq!(regime_of(2.0).unwrap(), Regime::CosineBessel);
        assert_eq!(regime_of(2.0 + 1e-13).unwrap(), Regime::CosineBessel);
        assert_eq!(regime_of(2.0 + 1e-9).unwrap(), Regime::Bessel);
        assert_eq!(regime_of(3.5).unwrap(), Regime::Bessel);
        assert!(regime_of(1.0).is_err());
        assert!(regime_of(0.0).is_err());
    }

    #[test]
    fn cosine_constant_values() {
        assert!((cosine_constant(1.0, 1.0).unwrap() - 1.0).abs() < 1e-13);
        // mpmath, 30 digits
        let c = cosine_constant(0.75, 1.25).unwrap();
        assert!((c - 1.154_043_685_586_548_9).abs() < 1e-13);
    }

    #[test]
    fn cosine_constant_poles_name_the_factor() {
        match cosine_constant(2.0, 0.0) {
            Err(Error::GammaPole { factor, .. }) => assert_eq!(factor, "Γ(β+1−p/2)"),
            other => panic!("{other:?}"),
        }
        match cosine_constant(2.0, 1.0) {
            Err(Error::GammaPole { factor, .. }) => assert_eq!(factor, "Γ(1−p/2)"),
            other => panic!("{other:?}"),
        }
        let near = cosine_constant(2.0 - 1e-9, 1e-9).unwrap();
        let far = cosine_constant(1.9, 0.1).unwrap();
        assert!(near > 1e7 * far);
    }

    #[test]
    fn bessel_constant_domain() {
        assert!(matches!(bessel_constant(1.0, 2.0, 0.0, &cfg()), Err(Error::Divergent { endpoint: "infinity", .. })));
        assert!(matches!(bessel_constant(0.0, 3.0, -1.0, &cfg()), Err(Error::Divergent { endpoint: "origin", .. })));
        assert!(bessel_constant(-1.0, 3.0, 0.0, &cfg()).is_err());
    }

    #[test]
    fn bessel_constant_reference_values() {
        // mpmath: 1600 half-oscillation panels, power-law extrapolated remainder
        for &(a, p, b, want) in &[
            (1.0, 3.0, -1.0, 0.053_512_296_895_202_691),
            (3.0, 4.0, -2.0, 0.000_191_384_636_264_513_26),
            (1.0, 3.5, -1.5, 0.034_956_796_364_865_634),
        ] {
            let c = bessel_constant(a, p, b, &cfg()).unwrap();
            assert!(c.converged);
            assert!(((c.value - want) / want).abs() < 1e-9, "C_B({a},{p},{b}) = {} vs {want}", c.value);
        }
    }

    #[test]
    fn airy_constant_reference_value() {
        assert!(airy_constant(2.0, &cfg()).is_err());
        let c = airy_constant(3.0, &cfg()).unwrap();
        assert!(c.converged);
        // mpmath, same construction as the Bessel reference values
        let want = 7.207_133_529_899_214_6;
        assert!(((c.value - want) / want).abs() < 1e-8, "{}", c.value);
    }

    #[test]
    fn shannon_limit_of_the_large_n_law() {
        let c = cfg();
        let n = 40;
        let lim = 6.0 * 40f64.ln() - LN_2 + PI.ln();
        for &eps in &[1e-3, -1e-3] {
            let r = radial_renyi_asymptotic_large_n(n, 0, 1.0, 1.0 + eps, &c).unwrap().value;
            assert!((r - lim).abs() < 5e-3, "{r} vs {lim}");
        }
    }

    #[test]
    fn large_n_exponents_and_charge() {
        let c = cfg();
        for &p in &[0.5, 1.5] {
            let a = radial_renyi_asymptotic_large_n(30, 0, 1.0, p, &c).unwrap().value * (1.0 - p);
            let b = radial_renyi_asymptotic_large_n(60, 0, 1.0, p, &c).unwrap().value * (1.0 - p);
            assert!((b - a - 6.0 * (1.0 - p) * LN_2).abs() < 1e-12);
        }
        let p = 3.5;
        let a = radial_renyi_asymptotic_large_n(30, 0, 1.0, p, &c).unwrap().value * (1.0 - p);
        let b = radial_renyi_asymptotic_large_n(60, 0, 1.0, p, &c).unwrap().value * (1.0 - p);
        assert!((b - a + 3.0 * p * LN_2).abs() < 1e-12);
        for &p in &[0.5, 2.0, 3.5] {
            let a = radial_renyi_asymptotic_large_n(50, 0, 1.0, p, &c).unwrap().value;
            let b = radial_renyi_asymptotic_large_n(50, 0, 7.0, p, &c).unwrap().value;
            assert!((b - a + 3.0 * 7f64.ln()).abs() < 1e-12);
        }
    }

    #[test]
    fn general_and_large_n_laws_agree_for_s_states() {
        let c = cfg();
        let s = QuantumState::new(50, 0, 0, 1.0).unwrap();
        for &p in &[0.75, 2.0, 3.5] {
            let a = radial_renyi_asymptotic(&s, p, &c).unwrap().value;
            let b = radial_renyi_asymptotic_large_n(50, 0, 1.0, p, &c).unwrap().value;
            assert!(((a - b) / b).abs() < 0.02, "p={p}: {a} vs {b}");
        }
    }

    #[test]
    fn transition_branch_uses_log_k_over_k() {
        let s = QuantumState::new(50, 0, 0, 1.0).unwrap();
        let r = radial_renyi_asymptotic(&s, 2.0, &cfg()).unwrap();
        assert_eq!(r.regime, Regime::CosineBessel);
        let want = -(ln_radial_prefactor(50.0, 1.0, 2.0) + (49f64.ln() / (PI * PI * 49.0)).ln());
        assert!((r.value - want).abs() < 1e-13);
    }

    #[test]
    fn shannon_asymptotics() {
        let c = cfg();
        let s = QuantumState::new(30, 0, 0, 2.0).unwrap();
        let v = shannon_asymptotic(&s, &c).unwrap().value;
        let want = 6.0 * 30f64.ln() + LN_2 + 2.0 * PI.ln() - 3.0 * 2f64.ln();
        assert!((v - want).abs() < 1e-12);
        let s = QuantumState::new(30, 1, 0, 1.0).unwrap();
        let v = shannon_asymptotic(&s, &c).unwrap().value;
        let want = 6.0 * 30f64.ln() - LN_2 + PI.ln() + (4.0 * PI / 3.0).ln() + 2.0 / 3.0;
        assert!((v - want).abs() < 1e-9);
    }

    #[test]
    fn totals() {
        let c = cfg();
        let s = QuantumState::new(40, 0, 0, 1.0).unwrap();
        for &p in &[0.5, 2.0, 4.0] {
            let r = renyi_total_asymptotic(&s, p, &c).unwrap();
            let radial = radial_renyi_asymptotic_default(&s, p, &c).unwrap();
            assert!((r.value - radial.value - (4.0 * PI).ln()).abs() < 1e-12);
            let t = tsallis_total_asymptotic(&s, p, &c).unwrap();
            assert_eq!(t.kind, EntropyKind::Tsallis);
            assert!((t.value - tsallis_from_renyi(r.value, p)).abs() < 1e-15 * t.value.abs().max(1.0));
        }
        let t = tsallis_total_asymptotic(&QuantumState::new(200, 0, 0, 1.0).unwrap(), 3.0, &c).unwrap();
        assert!((t.value - 0.5).abs() < 1e-6);
    }
}
