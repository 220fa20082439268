use std::f64::consts::PI;

use proptest::prelude::*;
use sectsqrt::opfun::*;
use sectsqrt::params::{bound_bounded, bound_unbounded, sector_constants, tau_unbounded};
use sectsqrt::rational::{build_half, eval_half};
use sectsqrt::Complex64;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm_sqr())
        .sum::<f64>()
        .sqrt()
}

fn ones(n: usize) -> Vec<Complex64> {
    vec![c(1.0 / (n as f64).sqrt()); n]
}

fn complex_vec(max: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), max)
        .prop_map(|v| v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn thomas_matches_dense_lu(
        n in 2usize..40,
        seed in complex_vec(120),
        shift in 0.1f64..100.0,
    ) {
        let sub: Vec<_> = seed[..n - 1].to_vec();
        let sup: Vec<_> = seed[40..40 + n - 1].to_vec();
        let diag: Vec<_> = seed[80..80 + n].iter().map(|z| z + 3.0).collect();
        let a = OperatorRep::tridiagonal(sub, diag, sup).unwrap();
        let rhs: Vec<_> = seed[..n].iter().map(|z| z * 2.0 + 1.0).collect();
        let x = solve_shifted(&a, shift, &rhs).unwrap();
        let y = solve_dense(&a.to_dense(), shift, &rhs).unwrap();
        prop_assert!(diff(&x, &y) <= 1e-12 * norm(&y));
    }

    #[test]
    fn application_is_linear(u in complex_vec(43), v in complex_vec(43), n in 4usize..30) {
        let a = make_diag_sector(1.0 / 3.0, &exponent_grid(2.0, 0.1)).unwrap();
        prop_assume!(norm(&u) > 1e-3 && norm(&v) > 1e-3);
        let g = a.sector().unwrap().geometry().unwrap();
        let sum: Vec<_> = u.iter().zip(&v).map(|(x, y)| x + y).collect();
        let ru = apply_half_power(&a, &u, n, &g, None).unwrap().result;
        let rv = apply_half_power(&a, &v, n, &g, None).unwrap().result;
        let rs = apply_half_power(&a, &sum, n, &g, None).unwrap().result;
        let combined: Vec<_> = ru.iter().zip(&rv).map(|(x, y)| x + y).collect();
        prop_assert!(diff(&rs, &combined) <= 1e-11 * norm(&rs));
    }
}

#[test]
fn tridiagonal_solve_against_dense_oracle() {
    let a = make_convection_diffusion(5, 0.0).unwrap();
    let rhs = vec![c(1.0), c(-1.0), Complex64::new(0.0, 2.0), c(0.5), c(3.0)];
    let x = solve_shifted(&a, 1.0, &rhs).unwrap();
    let y = solve_dense(&a.to_dense(), 1.0, &rhs).unwrap();
    assert!(diff(&x, &y) <= 1e-12 * norm(&y));
}

#[test]
fn toeplitz_oracle_alpha_one_is_inverse() {
    let n = 200;
    let v = ones(n);
    for cval in [0.0, 30.0, 200.0] {
        let a = make_convection_diffusion(n, cval).unwrap();
        let x = oracle_tridiag_toeplitz(&a, &v, 1.0).unwrap();
        let y = solve_shifted(&a, 0.0, &v).unwrap();
        assert!(diff(&x, &y) <= 1e-9 * norm(&y), "c={cval}");
    }
}

#[test]
fn half_power_squared_is_inverse() {
    let n = 50;
    let v = ones(n);
    for cval in [0.0, 30.0, 100.0] {
        let a = make_convection_diffusion(n, cval).unwrap();
        let once = oracle_tridiag_toeplitz(&a, &v, 0.5).unwrap();
        let twice = oracle_tridiag_toeplitz(&a, &once, 0.5).unwrap();
        let inv = solve_shifted(&a, 0.0, &v).unwrap();
        assert!(diff(&twice, &inv) <= 1e-8 * norm(&inv), "c={cval}");
    }
}

#[test]
fn convection_eigenvalues_move_away_from_zero() {
    let n = 200;
    let h = 1.0 / (n as f64 + 1.0);
    let smallest = |cval: f64| {
        let b = -1.0 / (h * h) - cval / (2.0 * h);
        let u = -1.0 / (h * h) + cval / (2.0 * h);
        let e = b.signum() * (b * u).sqrt();
        (1..=n)
            .map(|k| 2.0 / (h * h) + 2.0 * e * (k as f64 * PI * h).cos())
            .fold(f64::INFINITY, f64::min)
    };
    let (l0, l200) = (smallest(0.0), smallest(200.0));
    assert!(l0 > 0.0 && l200 > l0);
    // c = 0 matches the second-difference spectrum
    assert!((l0 - 4.0 / (h * h) * (PI * h / 2.0).sin().powi(2)).abs() < 1e-9);
}

#[test]
fn convection_diffusion_application_tracks_oracle() {
    let n = 200;
    let v = ones(n);
    for cval in [0.0, 30.0, 200.0] {
        let a = make_convection_diffusion(n, cval).unwrap();
        let exact = oracle_tridiag_toeplitz(&a, &v, 0.5).unwrap();
        let g = a.sector().unwrap().geometry().unwrap();
        for order in [10, 20, 40] {
            let rep = apply_half_power(&a, &v, order, &g, None).unwrap();
            assert_eq!(rep.solve_count, 2 * order);
            let err = diff(&rep.result, &exact);
            assert!(
                err <= 10.0 * rep.predicted_error + 1e-13,
                "c={cval} n={order} {err:e}"
            );
        }
    }
}

#[test]
fn identity_and_four() {
    let g = sector_constants(0.0).unwrap();
    let v = vec![c(1.0), Complex64::new(0.0, -2.0), c(0.25)];
    let rep = apply_half_power(&OperatorRep::identity(3).unwrap(), &v, 30, &g, None).unwrap();
    assert!(diff(&rep.result, &v) <= rep.predicted_error * norm(&v));
    let four = OperatorRep::diagonal(vec![c(4.0)]).unwrap();
    let rep = apply_half_power(&four, &[c(1.0)], 30, &g.with_vertex(4.0).unwrap(), None).unwrap();
    assert!((rep.result[0] - 0.5).norm() <= rep.predicted_error);
}

#[test]
fn conjugate_pairs_stay_conjugate() {
    let a = make_diag_sector(5.0 / 12.0, &exponent_grid(16.0, 0.1)).unwrap();
    let v = vec![c(1.0); a.dim()];
    let g = a.sector().unwrap().geometry().unwrap();
    let r = apply_half_power(&a, &v, 25, &g, None).unwrap().result;
    assert_eq!(r[0].im, 0.0);
    for k in 0..161 {
        assert_eq!(r[2 * k + 1], r[2 * k + 2].conj());
    }
}

#[test]
fn unit_vectors_reproduce_scalar_values() {
    let a = make_diag_sector(1.0 / 3.0, &exponent_grid(16.0, 0.5)).unwrap();
    let Storage::Diagonal(d) = a.storage() else {
        panic!("diagonal expected")
    };
    let g = a.sector().unwrap().geometry().unwrap();
    let tau = tau_unbounded(20, &g).unwrap();
    let approx = build_half(20, tau).unwrap();
    for i in (0..a.dim()).step_by(7) {
        let mut e = vec![c(0.0); a.dim()];
        e[i] = c(1.0);
        let x = apply_approx(&a, &e, &approx, 1.0).unwrap();
        let want = eval_half(&approx, d[i]).unwrap();
        assert!((x[i] - want).norm() <= 1e-12 * want.norm());
    }
}

fn slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let num: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    num / den
}

#[test]
fn self_adjoint_spectrum_decays_algebraically() {
    let a = make_diag_sector(0.0, &exponent_grid(16.0, 0.1)).unwrap();
    let g = sector_constants(0.0).unwrap();
    let (mut xs, mut ys) = (Vec::new(), Vec::new());
    for n in (20..=100).step_by(10) {
        let approx = build_half(n, tau_unbounded(n, &g).unwrap()).unwrap();
        let err = spectral_error(&a, &approx).unwrap();
        assert!(err <= bound_unbounded(n, &g, 1.0).unwrap() * 10.0);
        xs.push((n as f64).ln());
        ys.push(err.ln());
    }
    let s = slope(&xs, &ys);
    assert!((-4.6..=-3.4).contains(&s), "slope {s}");
}

#[test]
fn truncated_spectrum_decays_exponentially() {
    let a = make_diag_sector(1.0 / 6.0, &exponent_grid(4.0, 0.1)).unwrap();
    let g = a.sector().unwrap().geometry().unwrap();
    let nb = sectsqrt::params::n_bar(&g).unwrap();
    let (mut xs, mut ys) = (Vec::new(), Vec::new());
    for n in (nb.ceil() as usize + 1)..=40 {
        let s = sectsqrt::params::select_params(n, g.beta, g.rho_n, None).unwrap();
        let approx = build_half(n, s.tau).unwrap();
        let err = spectral_error(&a, &approx).unwrap();
        if err < 1e-13 {
            break;
        }
        assert!(err <= 10.0 * bound_bounded(n, &g).unwrap(), "n={n}");
        xs.push(n as f64);
        ys.push(err.ln());
    }
    assert!(xs.len() >= 5);
    let predicted = -2.0 * 2f64.sqrt() * (g.g * g.c).sqrt() * 1e4f64.powf(-0.125);
    let s = slope(&xs, &ys);
    assert!(
        s < 0.0 && (s / predicted - 1.0).abs() <= 0.4,
        "slope {s} vs {predicted}"
    );
}

#[test]
fn single_unit_entry_below_bound() {
    let a = OperatorRep::identity(1).unwrap();
    let g = sector_constants(0.0).unwrap();
    let n = 80;
    let approx = build_half(n, tau_unbounded(n, &g).unwrap()).unwrap();
    assert!(spectral_error(&a, &approx).unwrap() < bound_unbounded(n, &g, 1.0).unwrap());
}

#[test]
fn matrix_market_roundtrip_on_disk() {
    let a = make_convection_diffusion(8, 30.0).unwrap();
    let dir = std::env::temp_dir().join(format!("sectsqrt-mm-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a.mtx");
    write_matrix_market(&a, std::fs::File::create(&path).unwrap()).unwrap();
    let back =
        read_matrix_market(std::io::BufReader::new(std::fs::File::open(&path).unwrap())).unwrap();
    assert_eq!(back.to_dense(), a.to_dense());
    std::fs::remove_dir_all(&dir).unwrap();
}
