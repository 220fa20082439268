use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_complex::Complex64;

use super::operator::{OperatorRep, Storage};
use crate::rational::{on_branch_cut, FractionalApprox};
use crate::{Error, Result};

const RM: RoundingMode = RoundingMode::ToEven;

fn check_alpha(alpha: f64) -> Result<()> {
    if !alpha.is_finite() {
        return Err(Error::invalid(
            "alpha",
            format!("must be finite, got {alpha}"),
        ));
    }
    Ok(())
}

fn diagonal_entries(a: &OperatorRep) -> Result<&[Complex64]> {
    match a.storage() {
        Storage::Diagonal(d) => Ok(d),
        _ => Err(Error::invalid("A", "expected a diagonal operator")),
    }
}

/// Principal-branch `λ^{-α}` of every diagonal entry.
pub fn oracle_diag(a: &OperatorRep, alpha: f64) -> Result<Vec<Complex64>> {
    check_alpha(alpha)?;
    diagonal_entries(a)?
        .iter()
        .map(|&z| {
            if on_branch_cut(z) {
                return Err(Error::BranchCut { re: z.re, im: z.im });
            }
            Ok(z.powf(-alpha))
        })
        .collect()
}

/// `A^{-α} v` for diagonal `A`.
pub fn oracle_apply_diag(a: &OperatorRep, v: &[Complex64], alpha: f64) -> Result<Vec<Complex64>> {
    a.check_len(v.len())?;
    Ok(oracle_diag(a, alpha)?
        .into_iter()
        .zip(v)
        .map(|(p, x)| p * x)
        .collect())
}

/// `max_i |λ_i^{-α} − R(λ_i)|`, the operator-norm error for diagonal `A`.
pub fn spectral_error<R: FractionalApprox + ?Sized>(a: &OperatorRep, approx: &R) -> Result<f64> {
    let exact = oracle_diag(a, approx.alpha())?;
    let mut worst: f64 = 0.0;
    for (&z, e) in diagonal_entries(a)?.iter().zip(exact) {
        worst = worst.max((e - approx.eval(z)?).norm());
    }
    Ok(worst)
}

fn to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    match x.as_raw_parts() {
        Some((m, _, s, e, _)) => {
            let top = m[m.len() - 1] as f64;
            let v = top * 2f64.powi(e - 64);
            if s == Sign::Neg {
                -v
            } else {
                v
            }
        }
        None => f64::NAN,
    }
}

fn constant(values: &[Complex64], what: &'static str) -> Result<f64> {
    let first = values[0];
    if first.im != 0.0 || values.iter().any(|&z| z != first) {
        return Err(Error::invalid(
            what,
            "expected a constant real band (Toeplitz)",
        ));
    }
    Ok(first.re)
}

/// `A^{-α} v` for a real tridiagonal Toeplitz matrix with sub-diagonal `b`,
/// diagonal `a` and super-diagonal `c`, `bc > 0`.
///
/// `A = D T D⁻¹` with `D = diag(r^j)`, `r = √(b/c)`, and `T` symmetric
/// Toeplitz with off-diagonal `sign(b)√(bc)`, whose eigenvectors are the
/// discrete sine modes. The similarity is badly conditioned (`r^N`), so the
/// whole transform runs in multiprecision and only the result is rounded.
pub fn oracle_tridiag_toeplitz(
    a: &OperatorRep,
    v: &[Complex64],
    alpha: f64,
) -> Result<Vec<Complex64>> {
    check_alpha(alpha)?;
    a.check_len(v.len())?;
    let Storage::Tridiagonal(t) = a.storage() else {
        return Err(Error::invalid("A", "expected a tridiagonal operator"));
    };
    let n = t.dim();
    if n < 2 {
        return Err(Error::invalid("A", "need dimension at least 2"));
    }
    let b = constant(t.sub(), "sub")?;
    let d = constant(t.diag(), "diag")?;
    let c = constant(t.sup(), "sup")?;
    if b * c <= 0.0 || (b * c).is_nan() {
        return Err(Error::invalid(
            "A",
            format!("off-diagonal product must be positive, got {}", b * c),
        ));
    }
    let log2_r = 0.5 * (b / c).log2().abs();
    let bits = 64 * ((224.0 + n as f64 * log2_r) / 64.0).ceil() as usize;
    let mut cc = Consts::new().map_err(|e| Error::Singular(format!("{e:?}")))?;
    let mp = |x: f64| BigFloat::from_f64(x, bits);

    let (bm, dm, cm) = (mp(b), mp(d), mp(c));
    let r = bm.div(&cm, bits, RM).sqrt(bits, RM);
    let mut e = bm.mul(&cm, bits, RM).sqrt(bits, RM);
    if b < 0.0 {
        e = e.neg();
    }
    let n1 = n + 1;
    let pi = cc.pi(bits, RM);
    let step = pi.div(&BigFloat::from_u64(n1 as u64, bits), bits, RM);
    let sines: Vec<BigFloat> = (0..2 * n1)
        .map(|m| {
            step.mul(&BigFloat::from_u64(m as u64, bits), bits, RM)
                .sin(bits, RM, &mut cc)
        })
        .collect();
    let sine = |j: usize, k: usize| &sines[((j + 1) * k) % (2 * n1)];

    let neg_alpha = mp(-alpha);
    let two = mp(2.0);
    let norm = two.div(&BigFloat::from_u64(n1 as u64, bits), bits, RM);
    let mut spectral = Vec::with_capacity(n);
    for k in 1..=n {
        let cosk = step
            .mul(&BigFloat::from_u64(k as u64, bits), bits, RM)
            .cos(bits, RM, &mut cc);
        let lam = dm.add(&two.mul(&e, bits, RM).mul(&cosk, bits, RM), bits, RM);
        if !lam.is_positive() || lam.is_zero() {
            let re = to_f64(&lam);
            return Err(Error::BranchCut { re, im: 0.0 });
        }
        spectral.push(lam.pow(&neg_alpha, bits, RM, &mut cc).mul(&norm, bits, RM));
    }

    let mut powers = Vec::with_capacity(n);
    let mut rp = r.clone();
    for _ in 0..n {
        powers.push(rp.clone());
        rp = rp.mul(&r, bits, RM);
    }

    let transform = |part: &[f64]| -> Vec<f64> {
        let w: Vec<BigFloat> = part
            .iter()
            .zip(&powers)
            .map(|(&x, p)| mp(x).div(p, bits, RM))
            .collect();
        let coef: Vec<BigFloat> = (1..=n)
            .map(|k| {
                let mut s = mp(0.0);
                for (j, wj) in w.iter().enumerate() {
                    s = s.add(&sine(j, k).mul(wj, bits, RM), bits, RM);
                }
                s.mul(&spectral[k - 1], bits, RM)
            })
            .collect();
        (0..n)
            .map(|j| {
                let mut s = mp(0.0);
                for (k, ck) in coef.iter().enumerate() {
                    s = s.add(&sine(j, k + 1).mul(ck, bits, RM), bits, RM);
                }
                to_f64(&s.mul(&powers[j], bits, RM))
            })
            .collect()
    };

    let re: Vec<f64> = v.iter().map(|z| z.re).collect();
    let im: Vec<f64> = v.iter().map(|z| z.im).collect();
    let out_re = transform(&re);
    let out_im = if im.iter().all(|&x| x == 0.0) {
        vec![0.0; n]
    } else {
        transform(&im)
    };
    Ok(out_re
        .into_iter()
        .zip(out_im)
        .map(|(r, i)| Complex64::new(r, i))
        .collect())
}
