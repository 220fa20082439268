use proptest::prelude::*;
use sectsqrt::errmodel::{phi, Family};
use sectsqrt::gauss::{build_rule, rule};
use sectsqrt::Complex64;

fn moment(k: u32) -> f64 {
    if k % 2 == 1 {
        0.0
    } else {
        2.0 / (k as f64 + 1.0)
    }
}

/// Adaptive Simpson with Richardson correction.
fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    fn rec<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        b: f64,
        [fa, fm, fb]: [f64; 3],
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let diff = left + right - whole;
        if depth == 0 || diff.abs() <= 15.0 * tol {
            return left + right + diff / 15.0;
        }
        rec(f, a, m, [fa, flm, fm], left, tol / 2.0, depth - 1)
            + rec(f, m, b, [fm, frm, fb], right, tol / 2.0, depth - 1)
    }
    let (fa, fb, fm) = (f(a), f(b), f(0.5 * (a + b)));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    rec(f, a, b, [fa, fm, fb], whole, tol, 60)
}

#[test]
fn first_integral_against_adaptive_oracle() {
    let (tau, lambda, n) = (2.0, 10.0, 20);
    let f = |t: f64| 1.0 / (4.0 * tau + lambda * (t + 1.0) * (t + 1.0));
    let exact = simpson(&f, -1.0, 1.0, 1e-16);
    // closed form: ∫ dt/(a + b(t+1)²) = atan(2√(b/a))/√(ab)
    let closed = (2.0 * (lambda / (4.0 * tau)).sqrt()).atan() / (4.0 * tau * lambda).sqrt();
    assert!((exact - closed).abs() < 1e-14);
    let q = rule(n).unwrap().integrate_real(f);
    let err = (q - exact).abs();
    let model = phi(Family::First, tau, Complex64::new(lambda, 0.0), n).unwrap();
    assert!(err <= 10.0 * model, "err {err:e} model {model:e}");
    assert!(err > 0.0);
}

#[test]
fn sixteen_point_exactness_boundary() {
    let r = build_rule(16).unwrap();
    for k in 0..=31u32 {
        let q = r.integrate_real(|t| t.powi(k as i32));
        assert!((q - moment(k)).abs() < 1e-13, "k={k}");
    }
    let q = r.integrate_real(|t| t.powi(32));
    assert!((q - moment(32)).abs() > 1e-12);
}

#[test]
fn small_examples() {
    let r = rule(5).unwrap();
    assert!((r.integrate(|_| Complex64::new(1.0, 0.0)) - 2.0).norm() < 1e-15);
    assert!(r.integrate(|t| Complex64::new(t.powi(7), 0.0)).norm() < 1e-15);
}

#[test]
fn interlacing() {
    for n in 1..=120 {
        let a = build_rule(n).unwrap();
        let b = build_rule(n + 1).unwrap();
        for (j, &x) in a.nodes().iter().enumerate() {
            assert!(b.nodes()[j] < x && x < b.nodes()[j + 1], "n={n} j={j}");
        }
    }
}

#[test]
fn deterministic_and_symmetric() {
    for n in [1, 7, 64, 333] {
        let a = build_rule(n).unwrap();
        let b = build_rule(n).unwrap();
        assert_eq!(a, b);
        let sum: f64 = a.weights().iter().sum();
        assert!((sum - 2.0).abs() < 1e-14);
        for j in 0..n {
            assert!((a.nodes()[j] + a.nodes()[n - 1 - j]).abs() < 1e-14);
            let (w, v) = (a.weights()[j], a.weights()[n - 1 - j]);
            assert!((w - v).abs() <= 1e-14 * w);
            assert!(w > 0.0 && a.nodes()[j].abs() < 1.0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn exact_up_to_degree_2n_minus_1(n in 1usize..=64, frac in 0.0f64..1.0) {
        let k = ((2 * n - 1) as f64 * frac).floor() as u32;
        let q = rule(n).unwrap().integrate_real(|t| t.powi(k as i32));
        prop_assert!((q - moment(k)).abs() < 1e-12, "n={} k={}", n, k);
    }
}
