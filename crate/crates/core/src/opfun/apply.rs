use num_complex::Complex64;

use super::norm2;
use super::operator::OperatorRep;
use super::solve::solve_shifted;
use crate::params::{select_params, ParamSelection, Regime, SectorGeometry};
use crate::rational::{build_general_alpha, build_half, FractionalApprox};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct ApplyReport {
    pub result: Vec<Complex64>,
    pub n: usize,
    pub tau: f64,
    pub regime: Regime,
    /// A priori bound on `‖A^{-1/2}v − result‖/‖v‖`, already scaled by
    /// `vertex^{-1/2}`.
    pub predicted_error: f64,
    pub solve_count: usize,
    pub selection: ParamSelection,
}

fn check_vertex(vertex: f64) -> Result<()> {
    if !(vertex > 0.0 && vertex.is_finite()) {
        return Err(Error::invalid(
            "vertex",
            format!("must be positive, got {vertex}"),
        ));
    }
    Ok(())
}

/// `vertex^{-α} R(A/vertex) v`, one shifted solve per partial fraction,
/// summed in ascending order of the shifts.
pub fn apply_approx<R: FractionalApprox + ?Sized>(
    a: &OperatorRep,
    v: &[Complex64],
    approx: &R,
    vertex: f64,
) -> Result<Vec<Complex64>> {
    check_vertex(vertex)?;
    a.check_len(v.len())?;
    let scale = vertex.powf(1.0 - approx.alpha());
    let mut acc = vec![Complex64::new(0.0, 0.0); v.len()];
    for (gamma, delta) in approx.partial_fractions().terms() {
        let x = solve_shifted(a, vertex * delta, v)?;
        for (s, xi) in acc.iter_mut().zip(x) {
            *s += xi * gamma;
        }
    }
    for s in &mut acc {
        *s *= scale;
    }
    Ok(acc)
}

/// Approximate `A^{-1/2} v` with τ chosen for the sector `geom`.
pub fn apply_half_power(
    a: &OperatorRep,
    v: &[Complex64],
    n: usize,
    geom: &SectorGeometry,
    k: Option<f64>,
) -> Result<ApplyReport> {
    if norm2(v) == 0.0 {
        return Err(Error::invalid("v", "zero vector"));
    }
    let selection = select_params(n, geom.beta, geom.rho_n, k)?;
    let approx = build_half(n, selection.tau)?;
    let result = apply_approx(a, v, &approx, geom.vertex)?;
    Ok(ApplyReport {
        result,
        n,
        tau: selection.tau,
        regime: selection.regime,
        predicted_error: selection.predicted_error / geom.vertex.sqrt(),
        solve_count: approx.partial_fractions().len(),
        selection,
    })
}

/// Approximate `A^{-α} v`, 0 < α < 1, with an explicit τ.
pub fn apply_general_alpha(
    a: &OperatorRep,
    v: &[Complex64],
    n: usize,
    tau: f64,
    alpha: f64,
    vertex: f64,
) -> Result<Vec<Complex64>> {
    let approx = build_general_alpha(n, tau, alpha)?;
    apply_approx(a, v, &approx, vertex)
}
