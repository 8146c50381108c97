use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::gauss::{rule_pair, GaussRule};
use super::{IntegralResult, QuadratureConfig};
use crate::error::{Error, Result};

/// Hard cap on live panels per integral.
const MAX_PANELS: usize = 400_000;

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    depth: usize,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    // largest error first; ties broken by position for a deterministic order
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error).then_with(|| other.a.total_cmp(&self.a))
    }
}

fn evaluate<F: Fn(f64) -> f64>(f: &F, rules: &(GaussRule, GaussRule), a: f64, b: f64, depth: usize) -> Panel {
    let hi = rules.0.apply(f, a, b);
    let lo = rules.1.apply(f, a, b);
    let error = if hi.is_finite() && lo.is_finite() { (hi - lo).abs() } else { f64::INFINITY };
    Panel { a, b, value: hi, error, depth }
}

/// Adapts over the partition given by `edges` (strictly increasing, at
/// least two entries).
pub(crate) fn adapt<F: Fn(f64) -> f64>(f: &F, edges: &[f64], cfg: &QuadratureConfig) -> Result<IntegralResult> {
    cfg.validate()?;
    let rules = rule_pair(cfg.panel_order)?;
    let mut heap: BinaryHeap<Panel> = edges
        .windows(2)
        .filter(|w| w[1] > w[0])
        .map(|w| evaluate(f, &rules, w[0], w[1], 0))
        .collect();
    let mut frozen: Vec<Panel> = Vec::new();
    let mut evaluated = heap.len();

    let totals = |heap: &BinaryHeap<Panel>, frozen: &[Panel]| {
        heap.iter().chain(frozen).fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.error))
    };
    let (mut value, mut error) = totals(&heap, &frozen);
    let mut frozen_error = 0.0;
    let mut steps = 0usize;
    while error > cfg.tolerance_for(value) && value.is_finite() {
        let Some(worst) = heap.pop() else { break };
        let mid = 0.5 * (worst.a + worst.b);
        if worst.depth >= cfg.max_depth || !(mid > worst.a && mid < worst.b) || heap.len() + frozen.len() >= MAX_PANELS {
            frozen_error += worst.error;
            frozen.push(worst);
            // panels that can no longer be split already exceed the budget
            if frozen_error > cfg.tolerance_for(value) {
                heap.push(frozen.pop().unwrap());
                break;
            }
            continue;
        }
        let left = evaluate(f, &rules, worst.a, mid, worst.depth + 1);
        let right = evaluate(f, &rules, mid, worst.b, worst.depth + 1);
        evaluated += 2;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        steps += 1;
        // the running sums drift; refresh them periodically
        if steps % 1024 == 0 {
            (value, error) = totals(&heap, &frozen);
        }
    }

    // fixed left-to-right summation for bit-reproducible output
    let mut panels: Vec<Panel> = heap.into_vec();
    panels.extend(frozen);
    panels.sort_by(|x, y| x.a.total_cmp(&y.a));
    let value: f64 = panels.iter().map(|p| p.value).sum();
    let error: f64 = panels.iter().map(|p| p.error).sum();
    let converged = value.is_finite() && error <= cfg.tolerance_for(value);
    Ok(IntegralResult { value, abs_error_estimate: error, panels_used: evaluated, converged })
}

/// `∫_a^b f(x) dx` by globally adaptive bisection.
///
/// When the depth limit is hit the best value is returned with
/// `converged == false`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<IntegralResult> {
    integrate_zero_split(f, &[], a, b, cfg)
}

/// Like [`integrate`], with the initial partition split at `breakpoints`
/// (sorted, inside `(a, b)`).
pub fn integrate_zero_split<F: Fn(f64) -> f64>(
    f: F,
    breakpoints: &[f64],
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> Result<IntegralResult> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Domain(format!("integration limits must be finite, got [{a}, {b}]")));
    }
    if a == b {
        return Ok(IntegralResult::ZERO);
    }
    if a > b {
        return Err(Error::Domain(format!("integration limits must satisfy a < b, got [{a}, {b}]")));
    }
    if breakpoints.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::Domain("breakpoints must be sorted".into()));
    }
    let mut edges = Vec::with_capacity(breakpoints.len() + 2);
    edges.push(a);
    edges.extend(breakpoints.iter().copied().filter(|&x| x > a && x < b));
    edges.push(b);
    adapt(&f, &edges, cfg)
}
