//! Pole-based scalar error model.
//!
//! Each of the two integrands `1/(4τ + λ(t+1)²)` and `1/(τ(t+1)² + 4λ)` has a
//! conjugate pair of simple poles. The Gauss-Legendre error for such an
//! integrand behaves like `4π |r| S^{-2n}`, where `r` is the residue at the
//! dominant pole `t0` and `S = |t0 + √(t0² - 1)| > 1` is the radius of the
//! Joukowsky circle whose image ellipse passes through `t0`.
//!
//! These are asymptotic estimates, not guaranteed bounds. Callers making
//! stopping decisions should multiply by [`DEFAULT_SAFETY_FACTOR`].

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::rational::on_branch_cut;
use crate::{Error, Result};

pub const DEFAULT_SAFETY_FACTOR: f64 = 10.0;

/// Which integrand: `First` is `1/(4τ + λ(t+1)²)`, `Second` is
/// `1/(τ(t+1)² + 4λ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleData {
    /// Dominant pole, reflected into the upper half-plane.
    pub t0: Complex64,
    /// Ellipse parameter S > 1.
    pub growth: f64,
    pub residue_modulus: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarErrorEstimate {
    pub e1: f64,
    pub e2: f64,
    pub total: f64,
}

fn check_inputs(lambda: Complex64, tau: f64) -> Result<()> {
    if !(tau > 0.0 && tau.is_finite()) {
        return Err(Error::invalid(
            "tau",
            format!("must be positive, got {tau}"),
        ));
    }
    if on_branch_cut(lambda) || !lambda.is_finite() {
        return Err(Error::BranchCut {
            re: lambda.re,
            im: lambda.im,
        });
    }
    Ok(())
}

/// `|t0 ± √(t0² - 1)|`, whichever exceeds 1.
pub fn joukowsky_radius(t0: Complex64) -> f64 {
    let w = (t0 * t0 - 1.0).sqrt();
    (t0 + w).norm().max((t0 - w).norm())
}

pub fn pole_pair(family: Family, lambda: Complex64, tau: f64) -> Result<PoleData> {
    check_inputs(lambda, tau)?;
    let ratio = match family {
        Family::First => Complex64::new(tau, 0.0) / lambda,
        Family::Second => lambda / tau,
    };
    // the poles are -1 ± 2i√ratio; the one on the smaller ellipse dominates
    let s = Complex64::i() * ratio.sqrt() * 2.0;
    let (up, down) = (s - 1.0, -s - 1.0);
    let (gu, gd) = (joukowsky_radius(up), joukowsky_radius(down));
    let (t0, growth) = if gd < gu { (down, gd) } else { (up, gu) };
    let t0 = if t0.im < 0.0 { t0.conj() } else { t0 };
    Ok(PoleData {
        t0,
        growth,
        residue_modulus: 1.0 / (4.0 * tau.sqrt() * lambda.norm().sqrt()),
    })
}

/// `Φ = (π/√τ) |λ|^{-1/2} S^{-2n}`, the modulus estimate of one quadrature's
/// error.
pub fn phi(family: Family, tau: f64, lambda: Complex64, n: usize) -> Result<f64> {
    let pole = pole_pair(family, lambda, tau)?;
    Ok(4.0 * PI * pole.residue_modulus * decay(pole.growth, n))
}

fn decay(growth: f64, n: usize) -> f64 {
    (-2.0 * n as f64 * growth.ln()).exp()
}

/// `|E_n(λ)| ≈ 4 |λ|^{-1/2} (S₁^{-2n} + S₂^{-2n})`.
pub fn total_estimate(lambda: Complex64, tau: f64, n: usize) -> Result<ScalarErrorEstimate> {
    let p1 = pole_pair(Family::First, lambda, tau)?;
    let p2 = pole_pair(Family::Second, lambda, tau)?;
    let d1 = decay(p1.growth, n);
    let d2 = decay(p2.growth, n);
    Ok(ScalarErrorEstimate {
        e1: 4.0 * PI * p1.residue_modulus * d1,
        e2: 4.0 * PI * p2.residue_modulus * d2,
        total: 4.0 / lambda.norm().sqrt() * (d1 + d2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pole_at_four_tau() {
        for tau in [1.0, 2.0, 37.0] {
            let p = pole_pair(Family::First, c(4.0 * tau, 0.0), tau).unwrap();
            assert!((p.t0 - c(-1.0, 1.0)).norm() < 1e-15);
            let q = pole_pair(Family::Second, c(tau / 4.0, 0.0), tau).unwrap();
            assert!((q.t0 - c(-1.0, 1.0)).norm() < 1e-15);
            assert!((p.growth - q.growth).abs() < 1e-15);
            let w = (p.t0 * p.t0 - 1.0).sqrt();
            let expected = [(p.t0 + w).norm(), (p.t0 - w).norm()]
                .into_iter()
                .fold(0.0, f64::max);
            assert!((p.growth - expected).abs() < 1e-15);
        }
    }

    #[test]
    fn rejects_branch_cut() {
        assert!(pole_pair(Family::First, c(-1.0, 0.0), 1.0).is_err());
        assert!(pole_pair(Family::Second, c(0.0, 0.0), 1.0).is_err());
        assert!(phi(Family::First, 0.0, c(1.0, 0.0), 3).is_err());
        assert!(total_estimate(c(-3.0, 0.0), 2.0, 4).is_err());
        assert!(pole_pair(Family::First, c(-1.0, 1e-300), 1.0).is_ok());
    }

    #[test]
    fn phi_decreases_in_n() {
        for l in [c(10.0, 0.0), c(5.0, 5.0), c(-5.0, 10.0)] {
            let mut prev = f64::INFINITY;
            for n in 1..40 {
                let v = phi(Family::First, 2.0, l, n).unwrap();
                assert!(v < prev);
                prev = v;
            }
        }
    }

    #[test]
    fn estimate_definition_chain() {
        let l = c(10.0, 0.0);
        let tau = 2.0;
        let n = 10;
        let est = total_estimate(l, tau, n).unwrap();
        let p1 = phi(Family::First, tau, l, n).unwrap();
        let p2 = phi(Family::Second, tau, l, n).unwrap();
        let chain = 4.0 * tau.sqrt() / PI * (p1 + p2);
        assert!((est.total - chain).abs() <= 1e-12 * est.total);
        assert!((est.e1 - p1).abs() <= 1e-15 * p1);
    }

    #[test]
    fn symmetric_point() {
        let tau = 3.0;
        let l = c(tau, 0.0);
        let p1 = pole_pair(Family::First, l, tau).unwrap();
        let p2 = pole_pair(Family::Second, l, tau).unwrap();
        assert_eq!(p1.t0, p2.t0);
        let est = total_estimate(l, tau, 6).unwrap();
        let expected = 8.0 / tau.sqrt() * p1.growth.powi(-12);
        assert!((est.total - expected).abs() <= 1e-12 * expected);
    }

    #[test]
    fn growth_decreases_along_real_axis() {
        let tau = 5.0;
        let mut prev = f64::INFINITY;
        for k in 0..200 {
            let x = 10f64.powf(k as f64 * 0.05);
            let s = pole_pair(Family::First, c(x, 0.0), tau).unwrap().growth;
            assert!(s < prev, "x={x}");
            prev = s;
        }
    }

    #[test]
    fn lower_half_plane_uses_nearer_pole() {
        let lambda = c(-0.5, -2.0);
        for family in [Family::First, Family::Second] {
            let p = pole_pair(family, lambda, 3.0).unwrap();
            let q = pole_pair(family, lambda.conj(), 3.0).unwrap();
            assert!((p.t0 - q.t0).norm() < 1e-15);
            assert_eq!(p.growth, q.growth);
            let ratio = match family {
                Family::First => c(3.0, 0.0) / lambda,
                Family::Second => lambda / 3.0,
            };
            let s = Complex64::i() * ratio.sqrt() * 2.0;
            let nearer = joukowsky_radius(s - 1.0).min(joukowsky_radius(-s - 1.0));
            assert_eq!(p.growth, nearer);
        }
    }
}
