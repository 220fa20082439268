//! The rational approximant of λ^{-1/2} and its general-α counterpart.
//!
//! Both approximants are stored as partial fractions `Σ_k γ_k / (λ + δ_k)`
//! with positive residues γ_k and positive shifts δ_k, sorted by ascending
//! shift. That is the form `opfun` needs: each term is one shifted solve.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;

use crate::gauss::{self, QuadratureRule};
use crate::{Error, Result};

/// True when `λ` lies on the closed negative real axis, where the principal
/// power is undefined.
pub fn on_branch_cut(lambda: Complex64) -> bool {
    lambda.im == 0.0 && lambda.re <= 0.0
}

/// A scalar approximation of `λ^{-α}` that can be evaluated pointwise and
/// exposes its partial-fraction terms.
pub trait FractionalApprox {
    /// Exponent α of the target function λ^{-α}.
    fn alpha(&self) -> f64;
    fn partial_fractions(&self) -> &PartialFractions;

    fn eval(&self, lambda: Complex64) -> Result<Complex64> {
        self.partial_fractions().eval(lambda)
    }
}

/// `Σ_k γ_k / (λ + δ_k)` with terms in ascending order of δ_k.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialFractions {
    residues: Vec<f64>,
    shifts: Vec<f64>,
}

impl PartialFractions {
    fn from_terms(mut terms: Vec<(f64, f64)>) -> Self {
        terms.sort_by(|a, b| a.1.total_cmp(&b.1));
        let (residues, shifts) = terms.into_iter().unzip();
        Self { residues, shifts }
    }

    pub fn residues(&self) -> &[f64] {
        &self.residues
    }

    pub fn shifts(&self) -> &[f64] {
        &self.shifts
    }

    pub fn len(&self) -> usize {
        self.shifts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shifts.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.residues
            .iter()
            .copied()
            .zip(self.shifts.iter().copied())
    }

    /// Evaluate the sum. Uses `z.inv()` so that the value at `conj(λ)` is the
    /// exact conjugate of the value at `λ`.
    pub fn eval(&self, lambda: Complex64) -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for (gamma, delta) in self.terms() {
            let z = lambda + delta;
            if z.re == 0.0 && z.im == 0.0 {
                return Err(Error::PoleHit {
                    lambda: lambda.re,
                    shift: delta,
                });
            }
            acc += z.inv() * gamma;
        }
        Ok(acc)
    }
}

/// Result of [`RationalHalfPower::eval_flagged`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPowerValue {
    pub value: Complex64,
    /// λ is on (-∞, 0]; the value is the rational function, not λ^{-1/2}.
    pub off_principal_domain: bool,
}

/// The approximant R_{2n-1,2n}(λ) ≈ λ^{-1/2} for quadrature order n and
/// balancing parameter τ.
#[derive(Debug, Clone)]
pub struct RationalHalfPower {
    n: usize,
    tau: f64,
    rule: Arc<QuadratureRule>,
    fractions: PartialFractions,
}

impl RationalHalfPower {
    pub fn new(n: usize, tau: f64) -> Result<Self> {
        if !(tau > 0.0 && tau.is_finite()) {
            return Err(Error::invalid(
                "tau",
                format!("must be positive, got {tau}"),
            ));
        }
        let rule = gauss::rule(n)?;
        let scale = 4.0 * tau.sqrt() / PI;
        let mut terms = Vec::with_capacity(2 * n);
        for (t, w) in rule.iter() {
            let s = (t + 1.0) * (t + 1.0);
            // ω/(4τ + λ s)  =  (ω/s) / (λ + 4τ/s)
            terms.push((scale * w / s, 4.0 * tau / s));
            // ω/(τ s + 4λ)  =  (ω/4) / (λ + τ s/4)
            terms.push((scale * w / 4.0, tau * s / 4.0));
        }
        Ok(Self {
            n,
            tau,
            rule,
            fractions: PartialFractions::from_terms(terms),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn rule(&self) -> &QuadratureRule {
        &self.rule
    }

    /// τ below 1 is outside the range the integral splitting was derived
    /// for; the formula itself still holds.
    pub fn tau_below_one(&self) -> bool {
        self.tau < 1.0
    }

    pub fn eval_flagged(&self, lambda: Complex64) -> Result<HalfPowerValue> {
        Ok(HalfPowerValue {
            value: self.fractions.eval(lambda)?,
            off_principal_domain: on_branch_cut(lambda),
        })
    }

    /// Evaluate through the two quadrature sums directly,
    /// `(4√τ/π)(Σ ω_j/(4τ + λ(t_j+1)²) + Σ ω_j/(τ(t_j+1)² + 4λ))`.
    /// Kept for cross-checking the partial-fraction form.
    pub fn eval_sum_form(&self, lambda: Complex64) -> Complex64 {
        let tau = self.tau;
        let first = self
            .rule
            .integrate(|t| (lambda * (t + 1.0) * (t + 1.0) + 4.0 * tau).inv());
        let second = self
            .rule
            .integrate(|t| (lambda * 4.0 + tau * (t + 1.0) * (t + 1.0)).inv());
        (first + second) * (4.0 * tau.sqrt() / PI)
    }
}

impl FractionalApprox for RationalHalfPower {
    fn alpha(&self) -> f64 {
        0.5
    }

    fn partial_fractions(&self) -> &PartialFractions {
        &self.fractions
    }
}

/// Build R_{2n-1,2n} for order `n` and balancing parameter `tau`.
pub fn build_half(n: usize, tau: f64) -> Result<RationalHalfPower> {
    RationalHalfPower::new(n, tau)
}

/// Quadrature of
///
/// ```text
/// λ^{-α} = (sin απ / π) τ^{1-α} [ (1/α) ∫₀¹ dy/(τ + λ y^{1/α}) + (1/(1-α)) ∫₀¹ dy/(τ y^{1/(1-α)} + λ) ]
/// ```
///
/// with both integrals mapped to [-1, 1] by `y = (t+1)/2`. For α ≠ 1/2 the
/// second integrand is not analytic at y = 0 and no convergence rate is
/// attached.
#[derive(Debug, Clone)]
pub struct GeneralAlphaApprox {
    alpha: f64,
    n: usize,
    tau: f64,
    rule: Arc<QuadratureRule>,
    fractions: PartialFractions,
}

impl GeneralAlphaApprox {
    pub fn new(n: usize, tau: f64, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::invalid(
                "alpha",
                format!("must lie in (0, 1), got {alpha}"),
            ));
        }
        if !(tau > 0.0 && tau.is_finite()) {
            return Err(Error::invalid(
                "tau",
                format!("must be positive, got {tau}"),
            ));
        }
        let rule = gauss::rule(n)?;
        let c = (alpha * PI).sin() / PI * tau.powf(1.0 - alpha);
        let p1 = 1.0 / alpha;
        let p2 = 1.0 / (1.0 - alpha);
        let mut terms = Vec::with_capacity(2 * n);
        for (t, w) in rule.iter() {
            let y = 0.5 * (t + 1.0);
            let wy = 0.5 * w;
            let y1 = y.powf(p1);
            let y2 = y.powf(p2);
            // (wy/α) / (τ + λ y1)  =  (wy/(α y1)) / (λ + τ/y1)
            terms.push((c * wy * p1 / y1, tau / y1));
            // (wy/(1-α)) / (λ + τ y2)
            terms.push((c * wy * p2, tau * y2));
        }
        Ok(Self {
            alpha,
            n,
            tau,
            rule,
            fractions: PartialFractions::from_terms(terms),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn rule(&self) -> &QuadratureRule {
        &self.rule
    }
}

impl FractionalApprox for GeneralAlphaApprox {
    fn alpha(&self) -> f64 {
        self.alpha
    }

    fn partial_fractions(&self) -> &PartialFractions {
        &self.fractions
    }
}

pub fn build_general_alpha(n: usize, tau: f64, alpha: f64) -> Result<GeneralAlphaApprox> {
    GeneralAlphaApprox::new(n, tau, alpha)
}

pub fn eval_general_alpha(approx: &GeneralAlphaApprox, lambda: Complex64) -> Result<Complex64> {
    approx.eval(lambda)
}

pub fn eval_half(approx: &RationalHalfPower, lambda: Complex64) -> Result<Complex64> {
    approx.eval(lambda)
}
