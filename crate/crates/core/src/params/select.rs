use std::f64::consts::SQRT_2;

use super::sector::{sector_constants, SectorGeometry};
use super::tau::{
    bound_bounded, bound_unbounded, n_bar, rho_hat, tau_bounded_with_source, tau_unbounded,
    TauSource,
};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Unbounded,
    Bounded,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Regime::Unbounded => "unbounded",
            Regime::Bounded => "bounded",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParamSelection {
    pub n: usize,
    pub tau: f64,
    pub regime: Regime,
    pub rho_hat: f64,
    pub n_bar: Option<f64>,
    pub predicted_error: f64,
    pub crouzeix_k: f64,
    pub tau_source: TauSource,
    pub geometry: SectorGeometry,
}

/// 1 for a self-adjoint operator (β = 0), 1+√2 otherwise.
pub fn default_crouzeix(beta: f64) -> f64 {
    if beta == 0.0 {
        1.0
    } else {
        1.0 + SQRT_2
    }
}

/// Choose τ and predict the error for order `n` on the sector with
/// semiangle `beta·π`, unit vertex and optional radius `rho_n`.
pub fn select_params(
    n: usize,
    beta: f64,
    rho_n: Option<f64>,
    k: Option<f64>,
) -> Result<ParamSelection> {
    let mut geom = sector_constants(beta)?;
    let k = k.unwrap_or_else(|| default_crouzeix(beta));
    let mut nb = None;
    if let Some(r) = rho_n {
        geom = geom.with_radius(r)?;
        geom.require_radius()?;
        nb = Some(n_bar(&geom)?);
    }
    let rho = rho_hat(n, &geom)?;
    match rho_n {
        Some(r) if rho > r => {
            let (tau, tau_source) = tau_bounded_with_source(n, &geom)?;
            Ok(ParamSelection {
                n,
                tau,
                regime: Regime::Bounded,
                rho_hat: rho,
                n_bar: nb,
                predicted_error: bound_bounded(n, &geom)?,
                crouzeix_k: k,
                tau_source,
                geometry: geom,
            })
        }
        _ => Ok(ParamSelection {
            n,
            tau: tau_unbounded(n, &geom)?,
            regime: Regime::Unbounded,
            rho_hat: rho,
            n_bar: nb,
            predicted_error: bound_unbounded(n, &geom, k)?,
            crouzeix_k: k,
            tau_source: TauSource::UnboundedClosedForm,
            geometry: geom,
        }),
    }
}
