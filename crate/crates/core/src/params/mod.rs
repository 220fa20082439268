//! Sector geometry, choice of τ and a priori error bounds.
//!
//! All formulas are normalized to a sector with vertex 1,
//! `Σ = {1 + ρ e^{iθπ} : |θ| ≤ β}`, optionally truncated at `ρ ≤ ρ_N`.
//! An operator whose numerical range has vertex `a ≠ 1` is divided by `a`
//! first; see [`crate::opfun::apply_half_power`].

mod ellipse;
mod lambert;
mod sector;
mod select;
mod tau;

pub use ellipse::{beta_star, ellipse_s0, tangent_slope, EllipsePoint};
pub use lambert::lambert_w;
pub use sector::{sector_constants, SectorGeometry};
pub use select::{default_crouzeix, select_params, ParamSelection, Regime};
pub use tau::{
    bound_bounded, bound_unbounded, bounded_balance_log_ratio, bounded_balance_residual, g1, g2,
    n_bar, relative_mismatch, rho_hat, tau_bounded, tau_bounded_closed_form,
    tau_bounded_with_source, tau_unbounded, unbounded_balance_residual, TauSource,
    BISECTION_FALLBACK_THRESHOLD,
};
