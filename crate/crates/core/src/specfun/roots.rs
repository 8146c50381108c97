/// Refines a simple root of `f` near `guess`.
///
/// A sign change is searched for in `guess ± k·step` (k = 1, 2, 4, ...,
/// at most 16 steps away), then narrowed by Illinois regula falsi. Returns
/// `None` when no bracket is found.
pub fn refine_root<F: Fn(f64) -> f64>(f: F, guess: f64, step: f64) -> Option<f64> {
    let f0 = f(guess);
    if f0 == 0.0 {
        return Some(guess);
    }
    let mut bracket = None;
    let mut k = 1.0;
    while k <= 16.0 {
        for x in [guess - k * step, guess + k * step] {
            let fx = f(x);
            if fx == 0.0 {
                return Some(x);
            }
            if fx.signum() != f0.signum() {
                bracket = Some(if x < guess { (x, fx, guess, f0) } else { (guess, f0, x, fx) });
                break;
            }
        }
        if bracket.is_some() {
            break;
        }
        k *= 2.0;
    }
    let (mut a, mut fa, mut b, mut fb) = bracket?;
    let mut side = 0;
    for _ in 0..200 {
        let c = (a * fb - b * fa) / (fb - fa);
        let c = if c > a && c < b { c } else { 0.5 * (a + b) };
        let fc = f(c);
        if fc == 0.0 || (b - a) <= 4.0 * f64::EPSILON * c.abs().max(f64::MIN_POSITIVE) {
            return Some(c);
        }
        if fc.signum() == fb.signum() {
            b = c;
            fb = fc;
            if side == -1 {
                fa *= 0.5;
            }
            side = -1;
        } else {
            a = c;
            fa = fc;
            if side == 1 {
                fb *= 0.5;
            }
            side = 1;
        }
        if (b - a) <= 2.0 * f64::EPSILON * a.abs().max(b.abs()) {
            break;
        }
    }
    Some(0.5 * (a + b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_sqrt_two() {
        let r = refine_root(|x| x * x - 2.0, 1.3, 0.05).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn no_bracket() {
        assert!(refine_root(|x| x * x + 1.0, 0.0, 0.1).is_none());
    }
}
