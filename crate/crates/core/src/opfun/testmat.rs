use std::f64::consts::PI;

use num_complex::Complex64;

use super::operator::{OperatorRep, SectorClaim};
use crate::{Error, Result};

/// `(0, step, 2·step, …, max)`, computed as `i·step` to avoid drift.
pub fn exponent_grid(max: f64, step: f64) -> Vec<f64> {
    let count = (max / step).round() as usize;
    (0..=count).map(|i| i as f64 * step).collect()
}

/// `diag(1, 1+10^{x₁}e^{iβπ}, 1+10^{x₁}e^{-iβπ}, …)`, with conjugate pairs
/// stored next to each other.
pub fn make_diag_sector(beta: f64, exponents: &[f64]) -> Result<OperatorRep> {
    if !(0.0..0.5).contains(&beta) {
        return Err(Error::invalid(
            "beta",
            format!("must lie in [0, 1/2), got {beta}"),
        ));
    }
    if let Some(x) = exponents.iter().find(|x| !x.is_finite()) {
        return Err(Error::invalid(
            "exponents",
            format!("non-finite exponent {x}"),
        ));
    }
    let dir = Complex64::from_polar(1.0, beta * PI);
    let mut entries = Vec::with_capacity(2 * exponents.len() + 1);
    entries.push(Complex64::new(1.0, 0.0));
    for &x in exponents {
        let z = dir * 10f64.powf(x) + 1.0;
        entries.push(z);
        entries.push(z.conj());
    }
    let rho_n = exponents
        .iter()
        .copied()
        .fold(None, |m: Option<f64>, x| Some(m.map_or(x, |m| m.max(x))))
        .map(|x| 10f64.powf(x));
    Ok(OperatorRep::diagonal(entries)?.with_sector(SectorClaim {
        beta: Some(beta),
        vertex: 1.0,
        rho_n,
    }))
}

/// Sector angle (÷π) reported for the convection-diffusion matrix at the
/// convection speeds used in the experiments.
pub fn reported_convection_beta(c: f64) -> Option<f64> {
    if c == 0.0 {
        Some(0.0)
    } else if c == 30.0 {
        Some(0.44)
    } else if c == 200.0 {
        Some(0.49)
    } else {
        None
    }
}

/// Vertex and normalized radius of a sector containing the numerical range
/// of the central-difference discretization of `-u'' + c u'`.
///
/// The vertex is the smallest eigenvalue of the Hermitian part; the radius
/// reaches the corner given by the largest Hermitian eigenvalue and the
/// largest skew-Hermitian eigenvalue.
pub fn convection_diffusion_sector(n: usize, c: f64) -> SectorClaim {
    let h = 1.0 / (n as f64 + 1.0);
    let vertex = 4.0 / (h * h) * (PI * h / 2.0).sin().powi(2);
    let top = Complex64::new(
        4.0 / (h * h) * (PI * h / 2.0).cos().powi(2),
        c / h * (PI * h).cos(),
    );
    SectorClaim {
        beta: reported_convection_beta(c),
        vertex,
        rho_n: Some((top - vertex).norm() / vertex),
    }
}

/// Central differences for `-u'' + c u'` on [0, 1] with Dirichlet boundary
/// conditions and `n` interior points.
pub fn make_convection_diffusion(n: usize, c: f64) -> Result<OperatorRep> {
    if n < 2 {
        return Err(Error::invalid(
            "N",
            format!("need at least 2 points, got {n}"),
        ));
    }
    if !(c >= 0.0 && c.is_finite()) {
        return Err(Error::invalid("c", format!("must be nonnegative, got {c}")));
    }
    let h = 1.0 / (n as f64 + 1.0);
    let h2 = h * h;
    let sub = Complex64::new(-1.0 / h2 - c / (2.0 * h), 0.0);
    let diag = Complex64::new(2.0 / h2, 0.0);
    let sup = Complex64::new(-1.0 / h2 + c / (2.0 * h), 0.0);
    Ok(
        OperatorRep::tridiagonal(vec![sub; n - 1], vec![diag; n], vec![sup; n - 1])?
            .with_sector(convection_diffusion_sector(n, c)),
    )
}
