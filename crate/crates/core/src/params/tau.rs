use std::f64::consts::{E, PI, SQRT_2};

use super::lambert::lambert_w;
use super::sector::SectorGeometry;
use crate::{Error, Result};

/// Relative mismatch of the bounded balance above which the closed-form τ̂
/// is replaced by a numerical root.
pub const BISECTION_FALLBACK_THRESHOLD: f64 = 0.5;

const BISECTION_ITERS: usize = 200;

/// How a τ value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TauSource {
    UnboundedClosedForm,
    BoundedClosedForm,
    BoundedBisection,
    Override,
}

fn require_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::invalid(
            "n",
            format!("quadrature order must be at least {min}, got {n}"),
        ));
    }
    Ok(())
}

fn require_tau(tau: f64) -> Result<()> {
    if !(tau > 0.0 && tau.is_finite()) {
        return Err(Error::invalid(
            "tau",
            format!("must be positive, got {tau}"),
        ));
    }
    Ok(())
}

/// `4 W(H n (n-1))`, the exponent shared by τ̄ and ρ̂.
fn w_exponent(n: usize, geom: &SectorGeometry) -> Result<f64> {
    let nf = n as f64;
    Ok(4.0 * lambert_w(geom.h * nf * (nf - 1.0))?)
}

/// τ̄ for the unbounded sector.
pub fn tau_unbounded(n: usize, geom: &SectorGeometry) -> Result<f64> {
    require_n(n, 2)?;
    let c = geom.c;
    let m1 = n as f64 - 1.0;
    let scale = geom.d * geom.d / (4.0 * c.powi(4) * E.powi(4) * m1.powi(4));
    Ok(scale * w_exponent(n, geom)?.exp())
}

/// ρ̂, the modulus at which the first error profile peaks for τ = τ̄.
pub fn rho_hat(n: usize, geom: &SectorGeometry) -> Result<f64> {
    require_n(n, 2)?;
    Ok(geom.d * geom.d / E.powi(4) * w_exponent(n, geom)?.exp())
}

pub fn bound_unbounded(n: usize, geom: &SectorGeometry, k: f64) -> Result<f64> {
    require_n(n, 2)?;
    if !(k >= 1.0 && k.is_finite()) {
        return Err(Error::invalid(
            "K",
            format!("Crouzeix constant must be at least 1, got {k}"),
        ));
    }
    let nf = n as f64;
    let l = (geom.h * nf * nf).ln() / (2.0 * E * geom.c * geom.g);
    Ok(4.0 * k * l * l / nf.powi(4))
}

/// Closed-form asymptotic root of the bounded balance.
pub fn tau_bounded_closed_form(n: usize, geom: &SectorGeometry) -> Result<f64> {
    require_n(n, 1)?;
    let rho_n = geom.require_radius()?;
    let r4 = rho_n.powf(0.25);
    let q = r4 / (8.0 * SQRT_2 * geom.c * n as f64) * (rho_n.sqrt() / geom.d).ln();
    let root = -q + (q * q + geom.g / geom.c * r4).sqrt();
    Ok(root.powi(4))
}

/// `ln(lhs) - ln(rhs)` of the bounded balance
/// `ρ_N^{-1/2}(1+√2C(τ/ρ_N)^{1/4})^{-2n} = D^{-1}(1+√2Gτ^{-1/4})^{-2n}`.
pub fn bounded_balance_log_ratio(tau: f64, n: usize, geom: &SectorGeometry) -> Result<f64> {
    require_tau(tau)?;
    let rho_n = geom.require_radius()?;
    let two_n = 2.0 * n as f64;
    let lhs = -0.5 * rho_n.ln() - two_n * (SQRT_2 * geom.c * (tau / rho_n).powf(0.25)).ln_1p();
    let rhs = -geom.d.ln() - two_n * (SQRT_2 * geom.g * tau.powf(-0.25)).ln_1p();
    Ok(lhs - rhs)
}

/// `|l - r| / max(l, r)` for positive sides, from their log ratio.
pub fn relative_mismatch(log_ratio: f64) -> f64 {
    -(-log_ratio.abs()).exp_m1()
}

pub fn bounded_balance_residual(tau: f64, n: usize, geom: &SectorGeometry) -> Result<f64> {
    Ok(relative_mismatch(bounded_balance_log_ratio(tau, n, geom)?))
}

fn bisect_bounded(n: usize, geom: &SectorGeometry, rho_n: f64) -> Result<f64> {
    let f = |lt: f64| bounded_balance_log_ratio(lt.exp(), n, geom);
    let (mut lo, mut hi) = (0.0, rho_n.ln());
    if f(lo)? <= 0.0 {
        return Ok(1.0);
    }
    if f(hi)? >= 0.0 {
        return Ok(rho_n);
    }
    for _ in 0..BISECTION_ITERS {
        let mid = 0.5 * (lo + hi);
        if f(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-14 * hi.abs().max(1.0) {
            break;
        }
    }
    Ok((0.5 * (lo + hi)).exp())
}

/// τ̂ for the bounded sector, with the numerical fallback when the closed
/// form misses the balance by more than [`BISECTION_FALLBACK_THRESHOLD`].
pub fn tau_bounded_with_source(n: usize, geom: &SectorGeometry) -> Result<(f64, TauSource)> {
    let closed = tau_bounded_closed_form(n, geom)?;
    let rho_n = geom.require_radius()?;
    if bounded_balance_residual(closed, n, geom)? <= BISECTION_FALLBACK_THRESHOLD {
        return Ok((closed, TauSource::BoundedClosedForm));
    }
    Ok((bisect_bounded(n, geom, rho_n)?, TauSource::BoundedBisection))
}

pub fn tau_bounded(n: usize, geom: &SectorGeometry) -> Result<f64> {
    Ok(tau_bounded_with_source(n, geom)?.0)
}

pub fn bound_bounded(n: usize, geom: &SectorGeometry) -> Result<f64> {
    require_n(n, 1)?;
    let rho_n = geom.require_radius()?;
    let rate = 2.0 * SQRT_2 * (geom.g * geom.c).sqrt() * rho_n.powf(-0.125);
    Ok(4.0 * rho_n.powf(-0.25) / geom.d.sqrt() * (-rate * n as f64).exp())
}

/// Estimated order at which ρ̂ reaches ρ_N.
pub fn n_bar(geom: &SectorGeometry) -> Result<f64> {
    let rho_n = geom.require_radius()?;
    Ok(rho_n.powf(0.125) * rho_n.ln().sqrt() / (2.0 * (2.0 * geom.c).sqrt()))
}

/// First error profile at modulus ρ.
pub fn g1(tau: f64, rho: f64, n: usize, geom: &SectorGeometry) -> f64 {
    let base = SQRT_2 * geom.c * (tau / rho).powf(0.25);
    PI / tau.sqrt() / rho.sqrt() * (-2.0 * n as f64 * base.ln_1p()).exp()
}

/// Second error profile at ρ₀.
pub fn g2(tau: f64, n: usize, geom: &SectorGeometry) -> f64 {
    let base = SQRT_2 * geom.g * tau.powf(-0.25);
    PI / (tau.sqrt() * geom.d) * (-2.0 * n as f64 * base.ln_1p()).exp()
}

/// Mismatch of `g1(τ̄, ρ̂)` and `g2(τ̄)`.
pub fn unbounded_balance_residual(n: usize, geom: &SectorGeometry) -> Result<f64> {
    let tau = tau_unbounded(n, geom)?;
    let rho = rho_hat(n, geom)?;
    let l = g1(tau, rho, n, geom);
    let r = g2(tau, n, geom);
    Ok(relative_mismatch(l.ln() - r.ln()))
}
