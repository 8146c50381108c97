//! Gauss–Legendre rules from the Golub–Welsch eigenproblem.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::specfun::jacobi_eigen;

/// Nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussRule {
    /// Applies the rule on `[a, b]`.
    pub fn apply<F: Fn(f64) -> f64>(&self, f: &F, a: f64, b: f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut sum = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            sum += w * f(mid + half * x);
        }
        sum * half
    }
}

/// `(P_n(x), P_n'(x))` by the Bonnet recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 1..n {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Gauss–Legendre nodes and weights of the given order (`order ≥ 2`).
///
/// The Jacobi-matrix eigenvalues are polished by Newton on `P_n`, and the
/// weights are taken as `2 / ((1 - x²) P_n'(x)²)` at the polished nodes.
pub fn gauss_nodes(order: usize) -> Result<GaussRule> {
    if order < 2 {
        return Err(Error::Config(format!("Gauss order must be at least 2, got {order}")));
    }
    let off: Vec<f64> = (1..order)
        .map(|j| {
            let j = j as f64;
            j / (4.0 * j * j - 1.0).sqrt()
        })
        .collect();
    let eig = jacobi_eigen(&vec![0.0; order], &off);
    let mut nodes = eig.values;
    for x in nodes.iter_mut() {
        for _ in 0..4 {
            let (p, dp) = legendre_with_derivative(order, *x);
            let dx = p / dp;
            *x -= dx;
            if dx.abs() < 1e-17 {
                break;
            }
        }
    }
    for i in 0..order / 2 {
        let s = 0.5 * (nodes[order - 1 - i] - nodes[i]);
        nodes[i] = -s;
        nodes[order - 1 - i] = s;
    }
    if order % 2 == 1 {
        nodes[order / 2] = 0.0;
    }
    let weights = nodes
        .iter()
        .map(|&x| {
            let (_, dp) = legendre_with_derivative(order, x);
            2.0 / ((1.0 - x * x) * dp * dp)
        })
        .collect();
    Ok(GaussRule { nodes, weights })
}

/// The `(order, order / 2)` rule pair used for embedded error estimates,
/// built once per order and shared.
pub(crate) fn rule_pair(order: usize) -> Result<Arc<(GaussRule, GaussRule)>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<(GaussRule, GaussRule)>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(pair) = cache.lock().unwrap().get(&order) {
        return Ok(Arc::clone(pair));
    }
    let pair = Arc::new((gauss_nodes(order)?, gauss_nodes((order / 2).max(2))?));
    cache.lock().unwrap().entry(order).or_insert_with(|| Arc::clone(&pair));
    Ok(pair)
}
