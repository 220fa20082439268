use std::f64::consts::PI;

use crate::{Error, Result};

/// Point `s₀ e^{iφ₀}` whose Joukowsky image is `2i/√τ − 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipsePoint {
    pub s0: f64,
    pub sin_phi0: f64,
    pub cos_phi0: f64,
}

pub fn ellipse_s0(tau: f64) -> Result<EllipsePoint> {
    if !(tau > 0.0 && tau.is_finite()) {
        return Err(Error::invalid(
            "tau",
            format!("must be positive, got {tau}"),
        ));
    }
    // √(1+τ) − 1 without cancellation for small τ
    let q = tau / ((1.0 + tau).sqrt() + 1.0);
    let radicand = 1.0 - 2.0 * q / tau;
    if radicand <= 0.0 || radicand.is_nan() {
        return Err(Error::invalid(
            "tau",
            format!("ellipse point undefined for tau = {tau}"),
        ));
    }
    let s0 = (2.0 / q).sqrt() + 1.0 / radicand.sqrt();
    let sin_phi0 = (2.0 / tau).sqrt() * q.sqrt();
    let cos_phi0 = -(1.0 - sin_phi0 * sin_phi0).max(0.0).sqrt();
    Ok(EllipsePoint {
        s0,
        sin_phi0,
        cos_phi0,
    })
}

/// Slope `m` of the sector boundary tangent to the level ellipse through `s₀`.
pub fn tangent_slope(tau: f64) -> Result<f64> {
    let p = ellipse_s0(tau)?;
    let delta = 0.5 * (p.s0 - 1.0 / p.s0);
    let d2 = delta * delta;
    Ok(d2 / (d2 + 1.0) * tau.sqrt() / 2.0)
}

/// Semiangle (÷π) at which the sector boundary is tangent to the ellipse.
pub fn beta_star(tau: f64) -> Result<f64> {
    Ok(0.5 - tangent_slope(tau)?.atan() / PI)
}
