use num_complex::Complex64;

use super::norm2;
use super::operator::{DenseMatrix, OperatorRep, Storage, Tridiagonal};
use crate::{Error, Result};

const RESIDUAL_TOL: f64 = 1e-10;

/// Solve `(A + shift·I) x = rhs`.
pub fn solve_shifted(a: &OperatorRep, shift: f64, rhs: &[Complex64]) -> Result<Vec<Complex64>> {
    if !(shift >= 0.0 && shift.is_finite()) {
        return Err(Error::invalid(
            "shift",
            format!("must be nonnegative, got {shift}"),
        ));
    }
    a.check_len(rhs.len())?;
    let x = match a.storage() {
        Storage::Diagonal(d) => solve_diagonal(d, shift, rhs)?,
        Storage::Tridiagonal(t) => match thomas(t, shift, rhs) {
            Some(x) => x,
            None => solve_dense(&a.to_dense(), shift, rhs)?,
        },
        Storage::Dense(m) => solve_dense(m, shift, rhs)?,
    };
    if cfg!(debug_assertions) {
        check_residual(a, shift, rhs, &x);
    }
    Ok(x)
}

fn check_residual(a: &OperatorRep, shift: f64, rhs: &[Complex64], x: &[Complex64]) {
    let Ok(ax) = a.matvec(x) else { return };
    let r: Vec<Complex64> = ax
        .iter()
        .zip(x)
        .zip(rhs)
        .map(|((ax, x), b)| ax + x * shift - b)
        .collect();
    let scale = norm2(rhs).max(64.0 * f64::EPSILON * (a.norm_inf() + shift) * norm2(x));
    let res = norm2(&r);
    debug_assert!(
        res <= RESIDUAL_TOL * scale,
        "shifted solve residual {res:e} exceeds {RESIDUAL_TOL:e}·{scale:e}"
    );
}

fn solve_diagonal(d: &[Complex64], shift: f64, rhs: &[Complex64]) -> Result<Vec<Complex64>> {
    d.iter()
        .zip(rhs)
        .enumerate()
        .map(|(i, (&a, &b))| {
            let p = a + shift;
            if p.re == 0.0 && p.im == 0.0 {
                return Err(Error::Singular(format!(
                    "diagonal entry {i} equals -{shift}"
                )));
            }
            Ok(b * p.inv())
        })
        .collect()
}

/// Thomas elimination; `None` on a zero or non-finite pivot.
fn thomas(t: &Tridiagonal, shift: f64, rhs: &[Complex64]) -> Option<Vec<Complex64>> {
    let n = t.dim();
    let (sub, diag, sup) = (t.sub(), t.diag(), t.sup());
    let mut cp = vec![Complex64::new(0.0, 0.0); n];
    let mut dp = vec![Complex64::new(0.0, 0.0); n];
    let mut piv = diag[0] + shift;
    if piv.norm() == 0.0 {
        return None;
    }
    if n > 1 {
        cp[0] = sup[0] / piv;
    }
    dp[0] = rhs[0] / piv;
    for i in 1..n {
        piv = diag[i] + shift - sub[i - 1] * cp[i - 1];
        let m = piv.norm();
        if m == 0.0 || !m.is_finite() {
            return None;
        }
        if i + 1 < n {
            cp[i] = sup[i] / piv;
        }
        dp[i] = (rhs[i] - sub[i - 1] * dp[i - 1]) / piv;
    }
    for i in (0..n - 1).rev() {
        let next = dp[i + 1];
        dp[i] -= cp[i] * next;
    }
    Some(dp)
}

/// LU with partial pivoting on `A + shift·I`.
pub fn solve_dense(m: &DenseMatrix, shift: f64, rhs: &[Complex64]) -> Result<Vec<Complex64>> {
    let n = m.dim();
    if rhs.len() != n {
        return Err(Error::Dimension {
            expected: n,
            got: rhs.len(),
        });
    }
    let mut a = m.data().to_vec();
    for i in 0..n {
        a[i * n + i] += shift;
    }
    let mut b = rhs.to_vec();
    for k in 0..n {
        let p = (k..n)
            .max_by(|&i, &j| a[i * n + k].norm().total_cmp(&a[j * n + k].norm()))
            .unwrap_or(k);
        let pivot = a[p * n + k];
        if pivot.norm() == 0.0 || !pivot.norm().is_finite() {
            return Err(Error::Singular(format!("zero pivot in column {k}")));
        }
        if p != k {
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            b.swap(k, p);
        }
        let inv = pivot.inv();
        for i in k + 1..n {
            let f = a[i * n + k] * inv;
            if f.norm() == 0.0 {
                continue;
            }
            a[i * n + k] = f;
            for j in k + 1..n {
                let akj = a[k * n + j];
                a[i * n + j] -= f * akj;
            }
            let bk = b[k];
            b[i] -= f * bk;
        }
    }
    for i in (0..n).rev() {
        let mut s = b[i];
        for j in i + 1..n {
            s -= a[i * n + j] * b[j];
        }
        b[i] = s / a[i * n + i];
    }
    Ok(b)
}
