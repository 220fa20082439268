use std::f64::consts::E;

use crate::{Error, Result};

const MAX_ITER: usize = 50;

/// Principal branch W₀(x) for x ≥ 0, by Halley iteration.
pub fn lambert_w(x: f64) -> Result<f64> {
    if x.is_nan() || x < 0.0 || x.is_infinite() {
        return Err(Error::invalid(
            "x",
            format!("Lambert-W is only provided for finite x ≥ 0, got {x}"),
        ));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let mut w = if x < E {
        x.ln_1p()
    } else {
        let l = x.ln();
        l - l.ln()
    };
    for _ in 0..MAX_ITER {
        let ew = w.exp();
        let f = w * ew - x;
        let wp1 = w + 1.0;
        let step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= step;
        if step.abs() <= 4.0 * f64::EPSILON * w.abs().max(f64::MIN_POSITIVE) {
            return Ok(w);
        }
    }
    Err(Error::NoConvergence {
        method: "Lambert-W Halley iteration",
        iterations: MAX_ITER,
    })
}
