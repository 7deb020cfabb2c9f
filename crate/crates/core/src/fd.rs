//! Fourth-order central finite differences and grid validation.

use crate::error::{Error, Result};

/// Default step for residual checks; `O(h⁴)` truncation sits far below `1e-7`.
pub const DEFAULT_STEP: f64 = 1e-3;

pub fn derivative<F: Fn(f64) -> f64>(f: &F, x: f64, h: f64) -> f64 {
    (-f(x + 2.0 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2.0 * h)) / (12.0 * h)
}

pub fn second_derivative<F: Fn(f64) -> f64>(f: &F, x: f64, h: f64) -> f64 {
    (-f(x + 2.0 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2.0 * h)) / (12.0 * h * h)
}

/// A residual grid must be strictly increasing, at least `5h` away from the
/// origin, and no finer than the stencil step.
pub fn validate_grid(grid: &[f64], h: f64) -> Result<()> {
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::InvalidGrid(format!("step must be positive, got {h}")));
    }
    let Some(&first) = grid.first() else {
        return Err(Error::InvalidGrid("grid is empty".into()));
    };
    if grid.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidGrid("grid contains non-finite points".into()));
    }
    if first < 5.0 * h {
        return Err(Error::InvalidGrid(format!(
            "first point {first} is closer than 5h = {} to the origin",
            5.0 * h
        )));
    }
    for w in grid.windows(2) {
        let spacing = w[1] - w[0];
        if spacing <= 0.0 {
            return Err(Error::InvalidGrid("grid is not strictly increasing".into()));
        }
        if h > spacing {
            return Err(Error::InvalidGrid(format!("step {h} exceeds grid spacing {spacing}")));
        }
    }
    Ok(())
}

/// `count` evenly spaced points on `[lo, hi]`.
pub fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..count)
            .map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64)
            .collect(),
    }
}
