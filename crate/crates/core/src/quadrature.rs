//! Gauss-Laguerre quadrature for integrals over the half line.
//!
//! Nodes come from the Golub-Welsch eigenproblem and are polished by Newton
//! steps on `L_m`; weights use `w_i = x_i / ((m+1)² L_{m+1}(x_i)²)`, which stays
//! accurate for the tiny weights at large nodes.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct GaussLaguerre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

/// `(L_m(x), L_{m-1}(x))` for `α = 0`.
fn laguerre_pair(m: usize, x: f64) -> (f64, f64) {
    let mut prev = 1.0;
    if m == 0 {
        return (prev, 0.0);
    }
    let mut cur = 1.0 - x;
    for j in 1..m {
        let j = j as f64;
        let next = ((2.0 * j + 1.0 - x) * cur - j * prev) / (j + 1.0);
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

impl GaussLaguerre {
    pub fn new(order: usize) -> Self {
        assert!(order >= 1, "quadrature order must be positive");
        let mut jacobi = DMatrix::<f64>::zeros(order, order);
        for i in 0..order {
            jacobi[(i, i)] = 2.0 * i as f64 + 1.0;
            if i + 1 < order {
                jacobi[(i, i + 1)] = (i + 1) as f64;
                jacobi[(i + 1, i)] = (i + 1) as f64;
            }
        }
        let mut nodes: Vec<f64> = jacobi.symmetric_eigenvalues().iter().copied().collect();
        nodes.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));

        let m = order as f64;
        for x in nodes.iter_mut() {
            for _ in 0..8 {
                let (lm, lm1) = laguerre_pair(order, *x);
                let dl = m * (lm - lm1) / *x;
                let step = lm / dl;
                *x -= step;
                if step.abs() <= 1e-15 * x.abs() {
                    break;
                }
            }
        }
        let weights = nodes
            .iter()
            .map(|&x| {
                let (next, _) = laguerre_pair(order + 1, x);
                x / ((m + 1.0) * (m + 1.0) * next * next)
            })
            .collect();
        GaussLaguerre { nodes, weights }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `∫₀^∞ e^{-x} g(x) dx`.
    pub fn integrate_weighted<G: Fn(f64) -> f64>(&self, g: G) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * g(x)).sum()
    }

    /// `∫₀^∞ f(t) dt` for `f` decaying like `e^{-βt}`.
    pub fn integrate_scaled<F: Fn(f64) -> f64>(&self, f: F, beta: f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| {
                let t = x / beta;
                (w.ln() + x).exp() * f(t) / beta
            })
            .sum()
    }
}

const ORDERS: [usize; 6] = [16, 24, 32, 48, 64, 80];

/// `∫₀^∞ f(t) dt` with increasing Gauss-Laguerre order until two successive
/// orders agree to `tol · max(|value|, scale)`.
///
/// Integrands of the form polynomial × `e^{-βt}` are integrated exactly once
/// the order exceeds half the polynomial degree.
pub fn integrate_half_line<F: Fn(f64) -> f64>(f: F, beta: f64, scale: f64, tol: f64) -> Result<f64> {
    if !(beta.is_finite() && beta > 0.0) {
        return Err(Error::QuadratureDiverged(format!(
            "decay rate must be positive, got {beta}"
        )));
    }
    let mut previous: Option<f64> = None;
    for order in ORDERS {
        let value = GaussLaguerre::new(order).integrate_scaled(&f, beta);
        if !value.is_finite() {
            return Err(Error::QuadratureDiverged(format!("non-finite value at order {order}")));
        }
        if let Some(prev) = previous {
            if (value - prev).abs() <= tol * value.abs().max(scale) {
                return Ok(value);
            }
        }
        previous = Some(value);
    }
    Err(Error::QuadratureDiverged(format!(
        "orders {} and {} disagree beyond tolerance {tol}",
        ORDERS[ORDERS.len() - 2],
        ORDERS[ORDERS.len() - 1]
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_rule() {
        // nodes 2 ∓ √2, weights (2 ± √2)/4
        let q = GaussLaguerre::new(2);
        let s = 2f64.sqrt();
        assert!((q.nodes()[0] - (2.0 - s)).abs() < 1e-14);
        assert!((q.nodes()[1] - (2.0 + s)).abs() < 1e-14);
        assert!((q.weights()[0] - (2.0 + s) / 4.0).abs() < 1e-14);
        assert!((q.weights()[1] - (2.0 - s) / 4.0).abs() < 1e-14);
    }

    #[test]
    fn exact_on_moments() {
        // ∫ x^j e^{-x} = j!
        let q = GaussLaguerre::new(20);
        let mut fact = 1.0;
        for j in 0..40 {
            if j > 0 {
                fact *= j as f64;
            }
            let got = q.integrate_weighted(|x| x.powi(j));
            assert!((got - fact).abs() <= 1e-11 * fact, "moment {j}: {got} vs {fact}");
        }
    }

    #[test]
    fn weights_sum_to_one() {
        for order in ORDERS {
            let q = GaussLaguerre::new(order);
            let total: f64 = q.weights().iter().sum();
            assert!((total - 1.0).abs() < 1e-12, "order {order}");
        }
    }

    #[test]
    fn scaled_integral() {
        // ∫ t³ e^{-2t} dt = 3!/2⁴
        let v = integrate_half_line(|t| t.powi(3) * (-2.0 * t).exp(), 2.0, 1.0, 1e-13).unwrap();
        assert!((v - 6.0 / 16.0).abs() < 1e-14);
    }

    #[test]
    fn non_convergence_is_reported() {
        // decays far slower than the assumed rate
        let r = integrate_half_line(|t| 1.0 / (1.0 + t * t), 1.0, 1.0, 1e-12);
        assert!(matches!(r, Err(Error::QuadratureDiverged(_))));
    }
}
