//! Gauss-Legendre quadrature on [-1, 1].
//!
//! Nodes are the roots of the Legendre polynomial P_n, found by Newton's method
//! on the three-term recurrence from Chebyshev-angle initial guesses. Weights
//! are `2 / ((1 - t²) P_n'(t)²)`. Only the non-negative half of the nodes is
//! computed; the other half is mirrored so the rule is exactly symmetric.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;

use crate::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 10_000;

const NEWTON_TOL: f64 = 1e-15;
const NEWTON_MAX_ITER: usize = 100;

/// An n-point Gauss-Legendre rule with ascending nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Iterate over `(node, weight)` pairs in ascending node order.
    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }

    /// `Σ_j w_j f(t_j)` for a complex-valued integrand.
    pub fn integrate<F>(&self, mut f: F) -> Complex64
    where
        F: FnMut(f64) -> Complex64,
    {
        self.iter()
            .fold(Complex64::new(0.0, 0.0), |acc, (t, w)| acc + f(t) * w)
    }

    /// Like [`integrate`](Self::integrate), for integrands that can fail.
    pub fn try_integrate<F, E>(&self, mut f: F) -> std::result::Result<Complex64, E>
    where
        F: FnMut(f64) -> std::result::Result<Complex64, E>,
    {
        let mut acc = Complex64::new(0.0, 0.0);
        for (t, w) in self.iter() {
            acc += f(t)? * w;
        }
        Ok(acc)
    }

    /// Real-valued convenience wrapper around [`integrate`](Self::integrate).
    pub fn integrate_real<F>(&self, mut f: F) -> f64
    where
        F: FnMut(f64) -> f64,
    {
        self.iter().map(|(t, w)| w * f(t)).sum()
    }
}

/// Evaluate `(P_n(x), P_n'(x))` with the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 2..=n {
        let k = k as f64;
        let next = ((2.0 * k - 1.0) * x * p - (k - 1.0) * p_prev) / k;
        p_prev = p;
        p = next;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let n = n as f64;
    let dp = n * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

/// Build the n-point rule. Use [`rule`] for the cached variant.
pub fn build_rule(n: usize) -> Result<QuadratureRule> {
    if n == 0 {
        return Err(Error::invalid("n", "quadrature order must be at least 1"));
    }
    if n > MAX_ORDER {
        return Err(Error::invalid(
            "n",
            format!("quadrature order {n} exceeds {MAX_ORDER}"),
        ));
    }

    let half = n / 2;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;

    // i-th largest root, i = 1..=half
    for i in 1..=half {
        let theta = PI * (4.0 * i as f64 - 1.0) / (4.0 * nf + 2.0);
        let mut x = (1.0 - (nf - 1.0) / (8.0 * nf * nf * nf)) * theta.cos();
        let mut converged = false;
        for _ in 0..NEWTON_MAX_ITER {
            let (p, dp) = legendre_with_derivative(n, x);
            let step = p / dp;
            x -= step;
            if step.abs() <= NEWTON_TOL {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NoConvergence {
                method: "Gauss-Legendre Newton iteration",
                iterations: NEWTON_MAX_ITER,
            });
        }
        let (_, dp) = legendre_with_derivative(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[n - i] = x;
        nodes[i - 1] = -x;
        weights[n - i] = w;
        weights[i - 1] = w;
    }
    if n % 2 == 1 {
        let (_, dp) = legendre_with_derivative(n, 0.0);
        nodes[half] = 0.0;
        weights[half] = 2.0 / (dp * dp);
    }

    Ok(QuadratureRule { nodes, weights })
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<QuadratureRule>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<QuadratureRule>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Cached n-point rule, shared across the process.
pub fn rule(n: usize) -> Result<Arc<QuadratureRule>> {
    if let Some(r) = cache().lock().expect("rule cache poisoned").get(&n) {
        return Ok(Arc::clone(r));
    }
    let built = Arc::new(build_rule(n)?);
    let mut guard = cache().lock().expect("rule cache poisoned");
    Ok(Arc::clone(guard.entry(n).or_insert(built)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn moment(k: usize) -> f64 {
        if k % 2 == 1 {
            0.0
        } else {
            2.0 / (k as f64 + 1.0)
        }
    }

    #[test]
    fn rejects_zero_order() {
        assert!(build_rule(0).is_err());
        assert!(build_rule(MAX_ORDER + 1).is_err());
    }

    #[test]
    fn one_point_rule() {
        let r = build_rule(1).unwrap();
        assert_eq!(r.nodes(), &[0.0]);
        assert!((r.weights()[0] - 2.0).abs() < 1e-15);
    }

    #[test]
    fn two_point_rule() {
        let r = build_rule(2).unwrap();
        let x = 1.0 / 3f64.sqrt();
        assert!((r.nodes()[0] + x).abs() < 1e-15);
        assert!((r.nodes()[1] - x).abs() < 1e-15);
        assert!((r.weights()[0] - 1.0).abs() < 1e-15);
        assert!((r.weights()[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn sixteen_point_exactness_boundary() {
        let r = build_rule(16).unwrap();
        for k in 0..=31 {
            let err = (r.integrate_real(|t| t.powi(k as i32)) - moment(k)).abs();
            assert!(err < 1e-13, "k={k} err={err}");
        }
        let err32 = (r.integrate_real(|t| t.powi(32)) - moment(32)).abs();
        assert!(err32 > 1e-13, "degree 32 should not be exact, err={err32}");
    }

    #[test]
    fn structure_invariants() {
        for n in [1, 2, 3, 7, 20, 64, 101, 500] {
            let r = build_rule(n).unwrap();
            let t = r.nodes();
            let w = r.weights();
            assert!(t.windows(2).all(|p| p[0] < p[1]));
            assert!(t.iter().all(|&x| x > -1.0 && x < 1.0));
            assert!(w.iter().all(|&x| x > 0.0));
            for j in 0..n {
                assert!((t[j] + t[n - 1 - j]).abs() < 1e-14);
                assert!((w[j] - w[n - 1 - j]).abs() <= 1e-14 * w[j]);
            }
            let sum: f64 = w.iter().sum();
            assert!((sum - 2.0).abs() < 1e-14, "n={n} sum={sum}");
        }
    }

    #[test]
    fn integrate_examples() {
        let r = build_rule(5).unwrap();
        assert!((r.integrate(|_| Complex64::new(1.0, 0.0)) - 2.0).norm() < 1e-15);
        assert!(r.integrate(|t| Complex64::new(t.powi(7), 0.0)).norm() < 1e-15);
    }

    #[test]
    fn try_integrate_propagates_failure() {
        let r = build_rule(4).unwrap();
        let out: std::result::Result<Complex64, &str> =
            r.try_integrate(|t| if t > 0.5 { Err("boom") } else { Ok(t.into()) });
        assert_eq!(out, Err("boom"));
    }

    #[test]
    fn cached_rule_is_shared_and_identical() {
        let a = rule(37).unwrap();
        let b = rule(37).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(*a, build_rule(37).unwrap());
    }

    #[test]
    fn large_order_is_accurate() {
        let r = build_rule(1000).unwrap();
        let sum: f64 = r.weights().iter().sum();
        assert!((sum - 2.0).abs() < 1e-13);
        // ∫ cos(3t) = 2 sin(3)/3
        let v = r.integrate_real(|t| (3.0 * t).cos());
        assert!((v - 2.0 * 3f64.sin() / 3.0).abs() < 1e-13);
    }
}
