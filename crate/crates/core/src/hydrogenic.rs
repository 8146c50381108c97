//! Exact entropic quantities of hydrogenic bound states.
//!
//! The density factorises as `ρ_{n,l,m}(r) = ρ_{n,l}(r)·|Y_{l,m}|²` with
//! `ρ_{n,l}(r) = (4Z³/n⁴)·φ_k(r̃)²/r̃`, `r̃ = 2Zr/n`, `k = n-l-1` and `φ_k` the
//! weighted orthonormal Laguerre function of parameter `α = 2l+1`. Hence
//!
//! ```text
//! W_p = ∫ρ^p d³r = n^{3-4p} 2^{2p-3} Z^{3(p-1)} · N_k(α, p, 2-p) · Ω_{l,m}(p)
//! N_k(α, p, β)   = ∫₀^∞ (φ_k(x)²)^p x^β dx
//! Ω_{l,m}(p)     = ∫ |Y_{l,m}|^{2p} dΩ
//! ```
//!
//! and every Rényi entropy splits into a radial and an angular part. Shannon
//! entropies use the standard sign `S = -∫ρ ln ρ`.

use std::f64::consts::{LN_2, PI};
use std::fmt;

use crate::asympt::Regime;
use crate::error::{Error, Result};
use crate::quad::{integrate_tail, integrate_zero_split, IntegralResult, QuadratureConfig};
use crate::specfun::{SignedLog, SphericalHarmonicSq, WeightedLaguerre};

/// Labels `(n, l, m)` and nuclear charge `Z` of a bound state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumState {
    n: u32,
    l: u32,
    m: i32,
    z: f64,
}

impl QuantumState {
    pub fn new(n: u32, l: u32, m: i32, z: f64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidState(format!("n must satisfy n ≥ 1 (got n = {n})")));
        }
        if l >= n {
            return Err(Error::InvalidState(format!("l must satisfy l ≤ n−1 (got l = {l}, n = {n})")));
        }
        if m.unsigned_abs() > l {
            return Err(Error::InvalidState(format!("m must satisfy |m| ≤ l (got m = {m}, l = {l})")));
        }
        if !(z > 0.0) || !z.is_finite() {
            return Err(Error::InvalidState(format!("Z must satisfy Z > 0 (got Z = {z})")));
        }
        Ok(QuantumState { n, l, m, z })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn m(&self) -> i32 {
        self.m
    }

    /// Nuclear charge `Z`.
    pub fn charge(&self) -> f64 {
        self.z
    }

    /// `E = -Z²/(2n²)` in hartree.
    pub fn energy(&self) -> f64 {
        -self.z * self.z / (2.0 * f64::from(self.n).powi(2))
    }

    /// `r̃ = 2Zr/n`.
    pub fn scaled_radius(&self, r: f64) -> f64 {
        2.0 * self.z * r / f64::from(self.n)
    }

    /// Degree `n - l - 1` of the radial Laguerre polynomial.
    pub fn radial_degree(&self) -> usize {
        (self.n - self.l - 1) as usize
    }

    /// Laguerre parameter `2l + 1`.
    pub fn laguerre_alpha(&self) -> f64 {
        2.0 * f64::from(self.l) + 1.0
    }

    pub fn with_charge(&self, z: f64) -> Result<Self> {
        QuantumState::new(self.n, self.l, self.m, z)
    }
}

impl fmt::Display for QuantumState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, l={}, m={}, Z={})", self.n, self.l, self.m, self.z)
    }
}

/// Parameters of one Laguerre norm `N_k(α, p, β)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaguerreNormSpec {
    pub degree: usize,
    pub alpha: f64,
    pub p: f64,
    pub beta: f64,
}

impl LaguerreNormSpec {
    /// General parameters; requires `α > -1`, `p > 0` and `β + pα > -1`.
    pub fn new(degree: usize, alpha: f64, p: f64, beta: f64) -> Result<Self> {
        if !(alpha > -1.0) {
            return Err(Error::Domain(format!("alpha must exceed -1, got {alpha}")));
        }
        if !(p > 0.0) || !p.is_finite() {
            return Err(Error::Domain(format!("p must be positive, got {p}")));
        }
        if !(beta + p * alpha > -1.0) {
            return Err(Error::Divergent {
                endpoint: "origin",
                reason: format!("β + pα = {} must exceed -1", beta + p * alpha),
            });
        }
        Ok(LaguerreNormSpec { degree, alpha, p, beta })
    }

    /// The hydrogenic map `k = n-l-1`, `α = 2l+1`, `β = 2-p`.
    pub fn hydrogenic(state: &QuantumState, p: f64) -> Result<Self> {
        LaguerreNormSpec::new(state.radial_degree(), state.laguerre_alpha(), p, 2.0 - p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EntropyKind {
    Renyi,
    Shannon,
    Tsallis,
}

impl EntropyKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            EntropyKind::Renyi => "renyi",
            EntropyKind::Shannon => "shannon",
            EntropyKind::Tsallis => "tsallis",
        }
    }
}

impl fmt::Display for EntropyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    ExactQuadrature,
    Asymptotic,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ExactQuadrature => "exact",
            Method::Asymptotic => "asympt",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An entropy value in nats. `p` is `None` for Shannon entropies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyResult {
    pub value: f64,
    pub kind: EntropyKind,
    pub p: Option<f64>,
    pub method: Method,
    pub regime: Regime,
    pub error_estimate: f64,
    /// False when an underlying quadrature missed its tolerance.
    pub converged: bool,
}

impl EntropyResult {
    pub(crate) fn exact(kind: EntropyKind, p: Option<f64>, value: f64, error_estimate: f64, converged: bool) -> Self {
        EntropyResult {
            value,
            kind,
            p,
            method: Method::ExactQuadrature,
            regime: Regime::NotApplicable,
            error_estimate,
            converged,
        }
    }

    /// Sum of two parts of the same entropy (radial + angular).
    pub(crate) fn plus(self, other: EntropyResult) -> EntropyResult {
        EntropyResult {
            value: self.value + other.value,
            error_estimate: self.error_estimate + other.error_estimate,
            converged: self.converged && other.converged,
            ..self
        }
    }
}

fn reject_unit_p(p: f64, what: &str) -> Result<()> {
    if !(p > 0.0) || !p.is_finite() {
        return Err(Error::Domain(format!("p must be positive, got {p}")));
    }
    if p == 1.0 {
        return Err(Error::Domain(format!("p = 1 is the Shannon limit; use the Shannon {what} entropy instead")));
    }
    Ok(())
}

/// End of the finite part of radial integrals, past the largest zero of
/// `L_k^{(α)}` (bounded by `4k + 2α + 2`).
pub fn radial_cutoff(degree: usize, alpha: f64) -> f64 {
    (4.0 * degree as f64 + 2.0 * alpha + 2.0) * 1.25 + 50.0
}

/// Integrates a radial integrand over `[0, ∞)` split at the Laguerre zeros.
/// `abs_tol` is scaled by a midpoint-rule estimate of the integral so that
/// very small or very large norms are still resolved to `rel_tol`.
fn radial_integral<F: Fn(f64) -> f64>(f: F, zeros: &[f64], cutoff: f64, cfg: &QuadratureConfig) -> Result<IntegralResult> {
    let mut edges = Vec::with_capacity(zeros.len() + 2);
    edges.push(0.0);
    edges.extend_from_slice(zeros);
    edges.push(cutoff);
    let crude: f64 = edges.windows(2).map(|w| (w[1] - w[0]) * f(0.5 * (w[0] + w[1])).abs()).sum();
    let cfg = cfg.scaled_abs(crude.clamp(f64::MIN_POSITIVE, 1.0));
    let body = integrate_zero_split(&f, zeros, 0.0, cutoff, &cfg)?;
    let tail = integrate_tail(&f, cutoff, &cfg.scaled_abs(body.value.abs().clamp(f64::MIN_POSITIVE, 1.0)))?;
    Ok(body.combine(tail))
}

/// `ρ_{n,l}(r)`, the radial factor of the density (so `∫ρ_{n,l} r² dr = 1`).
pub fn radial_density(state: &QuantumState, r: f64) -> f64 {
    if !(r >= 0.0) {
        return 0.0;
    }
    let n = f64::from(state.n);
    let ln_pref = LN_2 * 2.0 + 3.0 * state.z.ln() - 4.0 * n.ln();
    let ev = WeightedLaguerre::new(state.radial_degree(), state.laguerre_alpha()).expect("alpha = 2l+1 > -1");
    let x = state.scaled_radius(r);
    if x == 0.0 {
        if state.l > 0 {
            return 0.0;
        }
        let q = ev.log_poly(0.0);
        return (ln_pref + 2.0 * q.ln_abs).exp();
    }
    let phi = ev.log_eval(x);
    if phi.is_zero() {
        return 0.0;
    }
    (ln_pref + 2.0 * phi.ln_abs - x.ln()).exp()
}

/// `N_k(α, p, β) = ∫₀^∞ (φ_k(x)²)^p x^β dx`.
pub fn laguerre_norm(spec: &LaguerreNormSpec, cfg: &QuadratureConfig) -> Result<IntegralResult> {
    let spec = LaguerreNormSpec::new(spec.degree, spec.alpha, spec.p, spec.beta)?;
    let ev = WeightedLaguerre::new(spec.degree, spec.alpha)?;
    let (two_p, beta) = (2.0 * spec.p, spec.beta);
    let integrand = |x: f64| {
        let phi: SignedLog = ev.log_eval(x);
        if phi.is_zero() {
            0.0
        } else {
            (two_p * phi.ln_abs + beta * x.ln()).exp()
        }
    };
    radial_integral(integrand, ev.zeros(), radial_cutoff(spec.degree, spec.alpha), cfg)
}

/// `ln` of the factor `n^{3-4p} 2^{2p-3} Z^{3(p-1)}` that turns `N` into
/// the radial entropic moment.
pub(crate) fn ln_radial_prefactor(n: f64, z: f64, p: f64) -> f64 {
    (3.0 - 4.0 * p) * n.ln() - (3.0 - 2.0 * p) * LN_2 - 3.0 * (1.0 - p) * z.ln()
}

/// Radial entropic moment `∫₀^∞ ρ_{n,l}(r)^p r² dr`.
pub fn radial_moment(state: &QuantumState, p: f64, cfg: &QuadratureConfig) -> Result<IntegralResult> {
    let norm = laguerre_norm(&LaguerreNormSpec::hydrogenic(state, p)?, cfg)?;
    Ok(norm.scale(ln_radial_prefactor(f64::from(state.n), state.z, p).exp()))
}

/// Radial Rényi entropy `R_p[ρ_{n,l}]` from the Laguerre norm.
pub fn radial_renyi_exact(state: &QuantumState, p: f64, cfg: &QuadratureConfig) -> Result<EntropyResult> {
    reject_unit_p(p, "radial")?;
    let norm = laguerre_norm(&LaguerreNormSpec::hydrogenic(state, p)?, cfg)?;
    let ln_w = ln_radial_prefactor(f64::from(state.n), state.z, p) + norm.value.ln();
    Ok(EntropyResult::exact(
        EntropyKind::Renyi,
        Some(p),
        ln_w / (1.0 - p),
        norm.relative_error() / (1.0 - p).abs(),
        norm.converged,
    ))
}

/// `Ω_{l,m}(p) = ∫ |Y_{l,m}|^{2p} dΩ = 2π ∫_{-1}^{1} |Y_{l,m}(u)|^{2p} du`.
pub fn angular_moment(l: u32, m: i32, p: f64, cfg: &QuadratureConfig) -> Result<IntegralResult> {
    if !(p > 0.0) || !p.is_finite() {
        return Err(Error::Domain(format!("p must be positive, got {p}")));
    }
    let y = SphericalHarmonicSq::new(l, m)?;
    if l == 0 {
        // constant harmonic: (4π)^{1-p} exactly
        return Ok(IntegralResult { value: ((1.0 - p) * (4.0 * PI).ln()).exp(), ..IntegralResult::ZERO });
    }
    let integrand = |u: f64| {
        let ln_y = y.ln_at(u);
        if ln_y == f64::NEG_INFINITY {
            0.0
        } else {
            (p * ln_y).exp()
        }
    };
    let nodes = y.nodes();
    let crude = ((1.0 - p) * (4.0 * PI).ln()).exp();
    let cfg = cfg.scaled_abs(crude.min(1.0) / (2.0 * PI));
    Ok(integrate_zero_split(integrand, &nodes, -1.0, 1.0, &cfg)?.scale(2.0 * PI))
}

/// Angular Rényi entropy `R_p[Y_{l,m}] = ln Ω / (1-p)`.
pub fn angular_renyi(l: u32, m: i32, p: f64, cfg: &QuadratureConfig) -> Result<EntropyResult> {
    reject_unit_p(p, "angular")?;
    let omega = angular_moment(l, m, p, cfg)?;
    Ok(EntropyResult::exact(
        EntropyKind::Renyi,
        Some(p),
        omega.value.ln() / (1.0 - p),
        omega.relative_error() / (1.0 - p).abs(),
        omega.converged,
    ))
}

/// Radial Shannon entropy `-∫ρ_{n,l} ln ρ_{n,l} r² dr`.
///
/// With `x = r̃`, `S = -ln(4Z³/n⁴) - (1/2n) ∫ φ² x ln(φ²/x) dx`.
pub fn shannon_radial_exact(state: &QuantumState, cfg: &QuadratureConfig) -> Result<EntropyResult> {
    let n = f64::from(state.n);
    let ev = WeightedLaguerre::new(state.radial_degree(), state.laguerre_alpha())?;
    let integrand = |x: f64| {
        let phi = ev.log_eval(x);
        if phi.is_zero() {
            // 0·ln 0 := 0
            return 0.0;
        }
        let ln_phi2 = 2.0 * phi.ln_abs;
        let ln_x = x.ln();
        (ln_phi2 + ln_x).exp() * (ln_phi2 - ln_x)
    };
    let integral = radial_integral(integrand, ev.zeros(), radial_cutoff(state.radial_degree(), state.laguerre_alpha()), cfg)?;
    let ln_pref = 2.0 * LN_2 + 3.0 * state.z.ln() - 4.0 * n.ln();
    Ok(EntropyResult::exact(
        EntropyKind::Shannon,
        None,
        -ln_pref - integral.value / (2.0 * n),
        integral.abs_error_estimate / (2.0 * n),
        integral.converged,
    ))
}

/// Shannon entropy of the spherical harmonic, `-∫|Y|² ln|Y|² dΩ`.
pub fn shannon_angular(l: u32, m: i32, cfg: &QuadratureConfig) -> Result<EntropyResult> {
    let y = SphericalHarmonicSq::new(l, m)?;
    if l == 0 {
        return Ok(EntropyResult::exact(EntropyKind::Shannon, None, (4.0 * PI).ln(), 0.0, true));
    }
    let integrand = |u: f64| {
        let ln_y = y.ln_at(u);
        if ln_y == f64::NEG_INFINITY {
            0.0
        } else {
            ln_y.exp() * ln_y
        }
    };
    let r = integrate_zero_split(integrand, &y.nodes(), -1.0, 1.0, cfg)?.scale(-2.0 * PI);
    Ok(EntropyResult::exact(EntropyKind::Shannon, None, r.value, r.abs_error_estimate, r.converged))
}

/// Total Rényi entropy, radial plus angular part.
pub fn renyi_total(state: &QuantumState, p: f64, cfg: &QuadratureConfig) -> Result<EntropyResult> {
    let radial = radial_renyi_exact(state, p, cfg)?;
    let angular = angular_renyi(state.l, state.m, p, cfg)?;
    Ok(radial.plus(angular))
}

/// Total entropic moment `W_p`, the product of the radial and angular factors.
pub fn entropic_moment_total(state: &QuantumState, p: f64, cfg: &QuadratureConfig) -> Result<IntegralResult> {
    let radial = radial_moment(state, p, cfg)?;
    let angular = angular_moment(state.l, state.m, p, cfg)?;
    let value = radial.value * angular.value;
    Ok(IntegralResult {
        value,
        abs_error_estimate: value.abs() * (radial.relative_error() + angular.relative_error()),
        panels_used: radial.panels_used + angular.panels_used,
        converged: radial.converged && angular.converged,
    })
}

/// Total Tsallis entropy `T_p = (1 - W_p)/(p - 1)`.
pub fn tsallis_total(state: &QuantumState, p: f64, cfg: &QuadratureConfig) -> Result<EntropyResult> {
    reject_unit_p(p, "total")?;
    let w = entropic_moment_total(state, p, cfg)?;
    Ok(EntropyResult::exact(
        EntropyKind::Tsallis,
        Some(p),
        (1.0 - w.value) / (p - 1.0),
        w.abs_error_estimate / (p - 1.0).abs(),
        w.converged,
    ))
}

/// Total Shannon entropy, radial plus angular part.
pub fn shannon_total(state: &QuantumState, cfg: &QuadratureConfig) -> Result<EntropyResult> {
    let radial = shannon_radial_exact(state, cfg)?;
    let angular = shannon_angular(state.l, state.m, cfg)?;
    Ok(radial.plus(angular))
}

/// Tsallis entropy implied by a Rényi value: `(e^{(1-p)R} - 1)/(1 - p)`.
pub fn tsallis_from_renyi(renyi: f64, p: f64) -> f64 {
    ((1.0 - p) * renyi).exp_m1() / (1.0 - p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    fn ground(z: f64) -> QuantumState {
        QuantumState::new(1, 0, 0, z).unwrap()
    }

    #[test]
    fn state_validation_names_the_constraint() {
        let e = QuantumState::new(2, 2, 0, 1.0).unwrap_err();
        assert!(e.to_string().contains("l ≤ n−1"), "{e}");
        assert!(QuantumState::new(3, 1, 2, 1.0).unwrap_err().to_string().contains("|m| ≤ l"));
        assert!(QuantumState::new(3, 1, 0, 0.0).unwrap_err().to_string().contains("Z > 0"));
        assert!(QuantumState::new(0, 0, 0, 1.0).is_err());
        let s = QuantumState::new(3, 1, -1, 2.0).unwrap();
        assert!((s.energy() + 4.0 / 18.0).abs() < 1e-15);
        assert!((s.scaled_radius(1.5) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn ground_state_density() {
        for &r in &[0.0, 0.3, 1.0, 4.0] {
            let want = 4.0 * (-2.0 * r as f64).exp();
            assert!((radial_density(&ground(1.0), r) - want).abs() < 1e-14 * want.max(1.0));
        }
        // 2p: nodeless, ∝ r² e^{-r}; (1/24) r² e^{-r} with Z = 1
        let s = QuantumState::new(2, 1, 0, 1.0).unwrap();
        for &r in &[0.01, 0.5, 2.0] {
            let want = r * r * (-r as f64).exp() / 24.0;
            assert!((radial_density(&s, r) - want).abs() < 1e-14);
        }
        assert_eq!(radial_density(&s, 0.0), 0.0);
    }

    #[test]
    fn density_normalisation() {
        let s = QuantumState::new(5, 2, 0, 1.0).unwrap();
        let ev = WeightedLaguerre::new(s.radial_degree(), s.laguerre_alpha()).unwrap();
        let breaks: Vec<f64> = ev.zeros().iter().map(|x| x * 5.0 / 2.0).collect();
        let r = integrate_zero_split(|r| radial_density(&s, r) * r * r, &breaks, 0.0, 200.0, &cfg()).unwrap();
        assert!((r.value - 1.0).abs() < 1e-10);
    }

    #[test]
    fn closed_form_norms() {
        let r = laguerre_norm(&LaguerreNormSpec::new(0, 1.0, 1.0, 1.0).unwrap(), &cfg()).unwrap();
        assert!((r.value - 2.0).abs() < 1e-12);
        let r = laguerre_norm(&LaguerreNormSpec::new(0, 1.0, 2.0, 0.0).unwrap(), &cfg()).unwrap();
        assert!((r.value - 0.25).abs() < 1e-13);
        for n in [1usize, 2, 7, 30] {
            let r = laguerre_norm(&LaguerreNormSpec::new(n - 1, 1.0, 1.0, 1.0).unwrap(), &cfg()).unwrap();
            assert!((r.value - 2.0 * n as f64).abs() < 1e-9 * n as f64, "n={n}: {r:?}");
        }
    }

    #[test]
    fn norm_rejects_divergence_at_origin() {
        assert!(matches!(LaguerreNormSpec::new(2, 0.0, 1.0, -1.0), Err(Error::Divergent { .. })));
    }

    #[test]
    fn ground_state_radial_renyi() {
        let r = radial_renyi_exact(&ground(1.0), 2.0, &cfg()).unwrap();
        assert!((r.value - LN_2).abs() < 1e-12);
        for &p in &[0.5, 3.0] {
            let a = radial_renyi_exact(&ground(1.0), p, &cfg()).unwrap().value;
            let b = radial_renyi_exact(&ground(3.0), p, &cfg()).unwrap().value;
            assert!((b - a + 3.0 * 3f64.ln()).abs() < 1e-12);
        }
        assert!(radial_renyi_exact(&ground(1.0), 1.0, &cfg()).is_err());
    }

    #[test]
    fn angular_moments() {
        let four_pi = 4.0 * PI;
        for &p in &[0.3, 2.0, 7.0] {
            let w = angular_moment(0, 0, p, &cfg()).unwrap().value;
            assert!((w - four_pi.powf(1.0 - p)).abs() < 1e-14 * w);
        }
        let w = angular_moment(1, 0, 2.0, &cfg()).unwrap().value;
        assert!((w - 9.0 / (20.0 * PI)).abs() < 1e-13);
        for l in 0..=10u32 {
            for m in -(l as i32)..=l as i32 {
                let w = angular_moment(l, m, 1.0, &cfg()).unwrap().value;
                assert!((w - 1.0).abs() < 1e-10, "l={l} m={m}: {w}");
            }
        }
    }

    #[test]
    fn angular_entropies() {
        let c = cfg();
        let r = angular_renyi(0, 0, 2.5, &c).unwrap().value;
        assert!((r - (4.0 * PI).ln()).abs() < 1e-13);
        let r = angular_renyi(1, 0, 2.0, &c).unwrap().value;
        assert!((r + (9.0 / (20.0 * PI)).ln()).abs() < 1e-12);
        let s = shannon_angular(0, 0, &c).unwrap().value;
        assert!((s - (4.0 * PI).ln()).abs() < 1e-15);
        // -∫(3/4π)cos²θ ln((3/4π)cos²θ) dΩ = ln(4π/3) + 2/3
        let s = shannon_angular(1, 0, &c).unwrap().value;
        assert!((s - ((4.0 * PI / 3.0).ln() + 2.0 / 3.0)).abs() < 1e-10, "{s}");
        for l in 0..6u32 {
            for m in 0..=l as i32 {
                assert!(shannon_angular(l, m, &c).unwrap().value <= (4.0 * PI).ln() + 1e-12);
                for &p in &[0.5, 3.0] {
                    assert!(angular_renyi(l, m, p, &c).unwrap().value <= (4.0 * PI).ln() + 1e-12);
                }
            }
        }
    }

    #[test]
    fn ground_state_shannon() {
        let r = shannon_radial_exact(&ground(1.0), &cfg()).unwrap().value;
        assert!((r - (3.0 - 4f64.ln())).abs() < 1e-12, "{r}");
        let s = shannon_total(&ground(1.0), &cfg()).unwrap().value;
        assert!((s - (3.0 + PI.ln())).abs() < 1e-12);
        let s2 = shannon_total(&ground(2.0), &cfg()).unwrap().value;
        assert!((s2 - (3.0 + PI.ln() - 3.0 * LN_2)).abs() < 1e-12);
    }

    #[test]
    fn ground_state_totals() {
        for &p in &[0.5, 0.75, 2.0, 3.0, 5.0] {
            let r = renyi_total(&ground(1.0), p, &cfg()).unwrap();
            let want = PI.ln() + 3.0 * p.ln() / (p - 1.0);
            assert!((r.value - want).abs() < 1e-9, "p={p}");
            let w = entropic_moment_total(&ground(1.0), p, &cfg()).unwrap().value;
            assert!((w - PI.powf(1.0 - p) / p.powi(3)).abs() < 1e-12 * w);
        }
        let t = tsallis_total(&ground(1.0), 2.0, &cfg()).unwrap().value;
        assert!((t - (1.0 - 1.0 / (8.0 * PI))).abs() < 1e-12);
        let w = entropic_moment_total(&ground(2.0), 2.0, &cfg()).unwrap().value;
        assert!((w - 8.0 / (8.0 * PI)).abs() < 1e-12);
    }

    #[test]
    fn renyi_tsallis_identity() {
        let s = QuantumState::new(4, 2, -1, 1.3).unwrap();
        for &p in &[0.4, 1.7, 3.0] {
            let r = renyi_total(&s, p, &cfg()).unwrap().value;
            let t = tsallis_total(&s, p, &cfg()).unwrap().value;
            assert!((t - tsallis_from_renyi(r, p)).abs() < 1e-10);
        }
    }
}
