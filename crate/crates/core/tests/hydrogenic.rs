use std::f64::consts::PI;

use approx::assert_relative_eq;
use proptest::prelude::*;
use rydberg_core::hydrogenic::{
    angular_renyi, entropic_moment_total, radial_density, renyi_total, shannon_angular, shannon_total, tsallis_from_renyi,
    tsallis_total,
};
use rydberg_core::quad::integrate_tail;
use rydberg_core::{Error, QuadratureConfig, QuantumState};

fn cfg() -> QuadratureConfig {
    QuadratureConfig::default()
}

fn state(n: u32, l: u32, m: i32, z: f64) -> QuantumState {
    QuantumState::new(n, l, m, z).unwrap()
}

#[test]
fn invalid_quantum_numbers_are_rejected() {
    for (n, l, m, z) in [(0, 0, 0, 1.0), (2, 2, 0, 1.0), (3, 1, 2, 1.0), (1, 0, 0, 0.0), (1, 0, 0, f64::NAN)] {
        assert!(matches!(QuantumState::new(n, l, m, z), Err(Error::InvalidState(_))), "{n} {l} {m} {z}");
    }
}

#[test]
fn ground_state_closed_forms() {
    for z in [1.0f64, 3.0] {
        let g = state(1, 0, 0, z);
        for p in [0.5f64, 2.0, 4.0] {
            let want = PI.ln() - 3.0 * z.ln() + 3.0 * p.ln() / (p - 1.0);
            assert!((renyi_total(&g, p, &cfg()).unwrap().value - want).abs() < 1e-10);
        }
        let s = shannon_total(&g, &cfg()).unwrap().value;
        assert!((s - (3.0 + PI.ln() - 3.0 * z.ln())).abs() < 1e-10);
    }
}

#[test]
fn angular_shannon_of_y10() {
    let s = shannon_angular(1, 0, &cfg()).unwrap().value;
    assert_relative_eq!(s, (4.0 * PI / 3.0).ln() + 2.0 / 3.0, max_relative = 1e-10);
    assert_relative_eq!(shannon_angular(0, 0, &cfg()).unwrap().value, (4.0 * PI).ln(), max_relative = 1e-14);
}

#[test]
fn radial_density_is_normalised() {
    for (n, l) in [(1, 0), (3, 1), (7, 4), (12, 0)] {
        let s = state(n, l, 0, 1.0);
        let r = integrate_tail(|r| radial_density(&s, r) * r * r, 0.0, &cfg()).unwrap();
        assert!((r.value - 1.0).abs() < 1e-10, "n={n} l={l}: {}", r.value);
    }
}

#[test]
fn tsallis_matches_renyi() {
    let s = state(6, 2, -1, 2.0);
    for p in [0.4, 1.7, 3.0] {
        let r = renyi_total(&s, p, &cfg()).unwrap().value;
        let t = tsallis_total(&s, p, &cfg()).unwrap().value;
        assert!((t - tsallis_from_renyi(r, p)).abs() <= 1e-10 * t.abs().max(1.0));
    }
}

fn any_state() -> impl Strategy<Value = QuantumState> {
    (1u32..16)
        .prop_flat_map(|n| (Just(n), 0..n))
        .prop_flat_map(|(n, l)| (Just(n), Just(l), -(l as i32)..=(l as i32)))
        .prop_map(|(n, l, m)| state(n, l, m, 1.0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn charge_scaling(s in any_state(), p in 0.3f64..4.0, z in 1.5f64..20.0) {
        let scaled = s.with_charge(z).unwrap();
        let d = renyi_total(&scaled, p, &cfg()).unwrap().value - renyi_total(&s, p, &cfg()).unwrap().value;
        prop_assert!((d + 3.0 * z.ln()).abs() < 1e-9);
        let d = shannon_total(&scaled, &cfg()).unwrap().value - shannon_total(&s, &cfg()).unwrap().value;
        prop_assert!((d + 3.0 * z.ln()).abs() < 1e-9);
    }

    #[test]
    fn renyi_is_nonincreasing_in_p(s in any_state(), p in 0.2f64..3.0, dp in 0.05f64..1.0) {
        let lo = renyi_total(&s, p, &cfg()).unwrap().value;
        let hi = renyi_total(&s, p + dp, &cfg()).unwrap().value;
        prop_assert!(hi <= lo + 1e-9);
    }

    #[test]
    fn first_moment_is_one(s in any_state()) {
        let w = entropic_moment_total(&s, 1.0, &cfg()).unwrap().value;
        prop_assert!((w - 1.0).abs() < 1e-9);
    }

    #[test]
    fn angular_entropies_are_bounded_by_the_uniform_sphere(l in 0u32..12, m in 0i32..12, p in 0.3f64..5.0) {
        prop_assume!(m as u32 <= l);
        let bound = (4.0 * PI).ln() + 1e-12;
        prop_assert!(shannon_angular(l, m, &cfg()).unwrap().value <= bound);
        if (p - 1.0).abs() > 1e-3 {
            prop_assert!(angular_renyi(l, m, p, &cfg()).unwrap().value <= bound);
        }
    }
}
