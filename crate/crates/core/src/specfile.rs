//! Plain-text sweep specifications.
//!
//! One `key = value` per line; `#` starts a comment. Grids are comma lists
//! whose items are numbers or inclusive ranges `a..b` (unit step) and
//! `a..b:step`.
//!
//! ```text
//! # Rydberg convergence at p = 3/4
//! n = 20, 50, 100, 200
//! l = 0
//! m = 0
//! Z = 1
//! p = 0.75
//! kind = renyi          # renyi | shannon | tsallis
//! method = both         # exact | asympt | both
//! rel_tol = 1e-8
//! ```
//!
//! Recognised keys: `n`, `l`, `m`, `Z` (or `z`), `p`, `kind`, `method`,
//! `rel_tol`, `abs_tol`, `panel_order`, `max_depth`. Only `n` is required;
//! `p` is required unless `kind = shannon`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::sweep::SweepSpec;

/// Largest number of values a single range may expand to.
const MAX_RANGE_LEN: usize = 1_000_000;

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::SpecParse { line, message: message.into() }
}

/// Expands a comma list of numbers and ranges.
pub fn parse_grid(text: &str) -> std::result::Result<Vec<f64>, String> {
    let mut out = Vec::new();
    for item in text.split(',') {
        let item = item.trim();
        if item.is_empty() {
            return Err("empty list item".into());
        }
        let num = |s: &str| s.trim().parse::<f64>().map_err(|_| format!("'{}' is not a number", s.trim()));
        match item.split_once("..") {
            None => out.push(num(item)?),
            Some((a, rest)) => {
                let (b, step) = match rest.split_once(':') {
                    Some((b, s)) => (b, num(s)?),
                    None => (rest, 1.0),
                };
                let (a, b) = (num(a)?, num(b)?);
                if !(step > 0.0) || !step.is_finite() {
                    return Err(format!("range step must be positive, got {step}"));
                }
                if b < a {
                    return Err(format!("range {a}..{b} is empty"));
                }
                // tolerate rounding in the step count, e.g. 0.1..1.9:0.1
                let count = ((b - a) / step + 1e-9).floor() as usize + 1;
                if count > MAX_RANGE_LEN {
                    return Err(format!("range {item} has more than {MAX_RANGE_LEN} values"));
                }
                out.extend((0..count).map(|i| a + i as f64 * step));
            }
        }
    }
    Ok(out)
}

fn integers<T: TryFrom<i64>>(values: &[f64], key: &str) -> std::result::Result<Vec<T>, String> {
    values
        .iter()
        .map(|&v| {
            if v.fract() != 0.0 || !v.is_finite() {
                return Err(format!("{key} values must be integers, got {v}"));
            }
            T::try_from(v as i64).map_err(|_| format!("{key} value {v} is out of range"))
        })
        .collect()
}

/// Parses a spec file into a [`SweepSpec`].
pub fn parse_spec(text: &str) -> Result<SweepSpec> {
    let mut spec = SweepSpec::default();
    let mut seen = HashSet::new();
    let mut have_p = false;
    let mut first_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if first_line == 0 {
            first_line = line;
        }
        let (key, value) = body.split_once('=').ok_or_else(|| err(line, format!("expected key = value, found '{body}'")))?;
        let key = key.trim();
        let value = value.trim();
        let canonical = if key == "z" { "Z" } else { key };
        if !seen.insert(canonical.to_string()) {
            return Err(err(line, format!("key '{key}' given twice")));
        }
        let grid = || parse_grid(value).map_err(|m| err(line, format!("{key}: {m}")));
        let number = || value.parse::<f64>().map_err(|_| err(line, format!("{key}: '{value}' is not a number")));
        match canonical {
            "n" => spec.n = integers(&grid()?, "n").map_err(|m| err(line, m))?,
            "l" => spec.l = integers(&grid()?, "l").map_err(|m| err(line, m))?,
            "m" => spec.m = integers(&grid()?, "m").map_err(|m| err(line, m))?,
            "Z" => spec.z = grid()?,
            "p" => {
                spec.p = grid()?;
                have_p = true;
            }
            "kind" => spec.kind = value.parse().map_err(|e: Error| err(line, e.to_string()))?,
            "method" => spec.methods = value.parse().map_err(|e: Error| err(line, e.to_string()))?,
            "rel_tol" => spec.cfg.rel_tol = number()?,
            "abs_tol" => spec.cfg.abs_tol = number()?,
            "panel_order" => {
                spec.cfg.panel_order = value.parse().map_err(|_| err(line, format!("panel_order: '{value}' is not an integer")))?
            }
            "max_depth" => {
                spec.cfg.max_depth = value.parse().map_err(|_| err(line, format!("max_depth: '{value}' is not an integer")))?
            }
            _ => return Err(err(line, format!("unknown key '{key}'"))),
        }
        if matches!(canonical, "rel_tol" | "abs_tol" | "panel_order" | "max_depth") {
            spec.cfg.validate().map_err(|e| err(line, e.to_string()))?;
        }
        if let Some(bad) = (canonical == "Z").then(|| spec.z.iter().find(|z| !(**z > 0.0))).flatten() {
            return Err(err(line, format!("Z must satisfy Z > 0 (got {bad})")));
        }
        if let Some(bad) = (canonical == "p").then(|| spec.p.iter().find(|p| !(**p > 0.0))).flatten() {
            return Err(err(line, format!("p must satisfy p > 0 (got {bad})")));
        }
    }
    let at = first_line.max(1);
    if spec.n.is_empty() {
        return Err(err(at, "missing required key 'n'"));
    }
    if !have_p && spec.kind != crate::hydrogenic::EntropyKind::Shannon {
        return Err(err(at, "missing key 'p' (required unless kind = shannon)"));
    }
    Ok(spec)
}
