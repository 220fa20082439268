use std::f64::consts::{E, PI, SQRT_2};

use crate::{Error, Result};

/// Constants of the sector `{1 + ρ e^{iθπ} : |θ| ≤ β}` used by the error
/// model and the choice of τ.
///
/// - `c`: asymptotic slope of the first error profile, `√2 cos(π(β+1)/4)`.
/// - `rho0`: approximate maximizer of the second profile, `tan²(βπ/2)`.
/// - `d`, `a_minus`, `a_plus`, `g`: constants of the second profile at ρ₀.
/// - `h`: `2e·C·G/√D`, the Lambert-W argument scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectorGeometry {
    pub beta: f64,
    pub vertex: f64,
    pub rho_n: Option<f64>,
    pub c: f64,
    pub rho0: f64,
    pub a_minus: f64,
    pub a_plus: f64,
    pub d: f64,
    pub g: f64,
    pub h: f64,
}

pub fn sector_constants(beta: f64) -> Result<SectorGeometry> {
    if !(0.0..0.5).contains(&beta) {
        return Err(Error::invalid(
            "beta",
            format!("sector semiangle/π must lie in [0, 1/2), got {beta}"),
        ));
    }
    let c = SQRT_2 * (PI / 4.0 * (beta + 1.0)).cos();
    let rho0 = (beta * PI / 2.0).tan().powi(2);
    let cb = (beta * PI).cos();
    let modulus = (1.0 + 2.0 * rho0 * cb + rho0 * rho0).sqrt();
    let d = modulus.sqrt();
    let a_minus = ((-1.0 - rho0 * cb + modulus) / 2.0).max(0.0);
    let a_plus = (1.0 + rho0 * cb + modulus) / 2.0;
    let g = (d - a_minus.sqrt()).sqrt();
    let h = 2.0 * E * c * g / d.sqrt();
    Ok(SectorGeometry {
        beta,
        vertex: 1.0,
        rho_n: None,
        c,
        rho0,
        a_minus,
        a_plus,
        d,
        g,
        h,
    })
}

impl SectorGeometry {
    pub fn new(beta: f64) -> Result<Self> {
        sector_constants(beta)
    }

    /// Truncate the sector at radius `rho_n` (in units of the vertex).
    pub fn with_radius(mut self, rho_n: f64) -> Result<Self> {
        if !(rho_n > 0.0 && rho_n.is_finite()) {
            return Err(Error::invalid(
                "rho_n",
                format!("sector radius must be positive, got {rho_n}"),
            ));
        }
        self.rho_n = Some(rho_n);
        Ok(self)
    }

    pub fn with_vertex(mut self, vertex: f64) -> Result<Self> {
        if !(vertex > 0.0 && vertex.is_finite()) {
            return Err(Error::invalid(
                "vertex",
                format!("sector vertex must be positive, got {vertex}"),
            ));
        }
        self.vertex = vertex;
        Ok(self)
    }

    pub(crate) fn require_radius(&self) -> Result<f64> {
        match self.rho_n {
            Some(r) if r > 1.0 => Ok(r),
            Some(r) => Err(Error::invalid(
                "rho_n",
                format!("bounded-sector formulas need rho_n > 1, got {r}"),
            )),
            None => Err(Error::invalid("rho_n", "sector radius not provided")),
        }
    }
}
