mod common;

use std::f64::consts::PI;

use fracwave::differint::frac_derivative;
use fracwave::spectral::{
    analyze, delta_series_partial, frac_coeffs, pair_delta_series, periodic_grid, synthesize,
    FourierSpectrum,
};
use fracwave::{GridFunction, Order};
use num_complex::Complex64;
use proptest::prelude::*;

fn ord(a: f64) -> Order {
    Order::new(a).unwrap()
}

fn real(f: impl Fn(f64) -> f64) -> impl Fn(f64) -> Complex64 {
    move |x| Complex64::new(f(x), 0.0)
}

#[test]
fn square_wave_coefficients_match_quadrature() {
    // square wave: 1 on (0, π), -1 on (π, 2π). Sampling at half-step offsets
    // keeps the jumps between nodes.
    let m = 4096;
    let h = 2.0 * PI / m as f64;
    let sq = |x: f64| if x.rem_euclid(2.0 * PI) < PI { 1.0 } else { -1.0 };
    let f = GridFunction::from_fn(0.5 * h, h, m, real(sq)).unwrap();
    let s = analyze(&f, 9).unwrap().value;
    for n in 1..=9i64 {
        // (1/2π)∫ sq(x) e^{-inx} dx, split at the jump
        let g = |x: f64| Complex64::from_polar(1.0, -(n as f64) * x);
        let oracle = (common::simpson(&g, 0.0, PI, 1e-13) - common::simpson(&g, PI, 2.0 * PI, 1e-13))
            / (2.0 * PI);
        assert!((s.get(n) - oracle).norm() < 1e-3, "n = {n}");
        if n % 2 == 0 {
            assert!(s.get(n).norm() < 1e-3);
        } else {
            // 2/(iπn)
            assert!((s.get(n).norm() - 2.0 / (PI * n as f64)).abs() < 1e-3);
        }
    }
}

#[test]
fn first_order_matches_derivative_spectrum() {
    let f = |x: f64| (x.sin()).exp();
    let fprime = |x: f64| x.cos() * (x.sin()).exp();
    let m = 256;
    let s = analyze(&periodic_grid(m, real(f)).unwrap(), 40).unwrap().value;
    let d = frac_coeffs(&s, Order::ONE).unwrap();
    let sp = analyze(&periodic_grid(m, real(fprime)).unwrap(), 40).unwrap().value;
    for n in -40..=40 {
        assert!((d.get(n) - sp.get(n)).norm() < 1e-8, "n = {n}");
    }
    // finite-difference oracle on the synthesized series
    let h = 1e-5;
    for &x in &[0.3, 2.0, 5.1] {
        let fd = (f(x + h) - f(x - h)) / (2.0 * h);
        assert!((synthesize(&d, x).re - fd).abs() < 1e-8);
    }
}

#[test]
fn roundtrip_band_limited() {
    let f = periodic_grid(16, |x| Complex64::from_polar(1.0, 2.0 * x)).unwrap();
    let s = analyze(&f, 7).unwrap().value;
    let err = f
        .xs()
        .zip(f.values())
        .map(|(x, v)| (synthesize(&s, x) - v).norm())
        .fold(0.0, f64::max);
    assert!(err < 1e-12);
}

#[test]
fn spectral_half_derivative_matches_grid_operator() {
    // the grid operator has base point 0; sample far from it so the transient
    // (decaying like x^{-3/2}) is below tolerance
    let s = analyze(&periodic_grid(64, real(f64::sin)).unwrap(), 8).unwrap().value;
    let d = frac_coeffs(&s, ord(0.5)).unwrap();
    let long = GridFunction::with_step(0.0, 30.0 * PI, 5e-3, real(f64::sin)).unwrap();
    let g = frac_derivative(&long, ord(0.5)).unwrap();
    let mut worst: f64 = 0.0;
    for k in 0..50 {
        let x = 28.0 * PI + 0.1 * k as f64;
        worst = worst.max((g.interpolate(x).unwrap() - synthesize(&d, x)).norm());
    }
    assert!(worst < 1e-2, "worst {worst}");
    // and the closed form: D^{1/2} sin = sin(x + π/4)
    assert!((synthesize(&d, 1.0).re - (1.0 + PI / 4.0).sin()).abs() < 1e-12);
}

#[test]
fn dirichlet_closed_form() {
    for &x in &[0.1, 0.7, 2.0, 3.0, -1.3] {
        for n in [1usize, 5, 17] {
            let got = delta_series_partial(Order::ZERO, n, x).unwrap();
            let want = ((n as f64 + 0.5) * x).sin() / (0.5 * x).sin();
            assert!((got - Complex64::new(want, 0.0)).norm() < 1e-10);
        }
    }
}

#[test]
fn pairing_band_limited_first_order() {
    let phi = periodic_grid(32, |x| Complex64::from_polar(1.0, 2.0 * x)).unwrap();
    for n in [2usize, 3, 6] {
        for &x in &[0.0, 1.1, 4.0] {
            let got = pair_delta_series(&phi, Order::ONE, n, x).unwrap();
            let want = Complex64::new(0.0, 2.0) * Complex64::from_polar(1.0, 2.0 * x);
            assert!((got - want).norm() < 1e-12);
        }
    }
}

/// `1/(a - cos x) = Σ ρ^{|n|} e^{inx} / sqrt(a² - 1)`, `ρ = a - sqrt(a² - 1)`.
fn poisson_frac_derivative(a: f64, alpha: f64, x: f64) -> Complex64 {
    let root = (a * a - 1.0).sqrt();
    let rho = a - root;
    let mut acc = Complex64::new(0.0, 0.0);
    for n in 1..400i64 {
        let c = rho.powi(n as i32) / root;
        for m in [n, -n] {
            let sym = fracwave::numeric::cpow_branch(Complex64::new(0.0, m as f64), alpha).unwrap();
            acc += sym * c * Complex64::from_polar(1.0, m as f64 * x);
        }
    }
    acc
}

#[test]
fn delta_series_pairing_converges() {
    let a = 1.05;
    let phi = periodic_grid(1024, real(|x| 1.0 / (a - x.cos()))).unwrap();
    let alpha = 0.5;
    let x = 0.9;
    let exact = poisson_frac_derivative(a, alpha, x);
    let errs: Vec<f64> = [8usize, 16, 32, 64]
        .iter()
        .map(|&n| (pair_delta_series(&phi, ord(alpha), n, x).unwrap() - exact).norm())
        .collect();
    for w in errs.windows(2) {
        assert!(w[1] < w[0], "{errs:?}");
    }
}

fn band_limited_real(coeffs: &[(f64, f64)]) -> FourierSpectrum {
    // c_{-n} = conj(c_n), c_0 = 0
    let n = coeffs.len();
    let mut v = vec![Complex64::new(0.0, 0.0); 2 * n + 1];
    for (k, &(re, im)) in coeffs.iter().enumerate() {
        v[n + k + 1] = Complex64::new(re, im);
        v[n - k - 1] = Complex64::new(re, -im);
    }
    FourierSpectrum::new(v).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parseval(coeffs in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..8)) {
        let s = band_limited_real(&coeffs);
        let n = s.max_index();
        let m = 4 * n + 8;
        let f = periodic_grid(m, |x| synthesize(&s, x)).unwrap();
        let mean_sq: f64 = f.values().iter().map(|v| v.norm_sqr()).sum::<f64>() / m as f64;
        let energy = s.energy();
        prop_assert!(((mean_sq - energy) / energy).abs() < 1e-10);
        let back = analyze(&f, n).unwrap().value;
        prop_assert!(back.conjugate_asymmetry() < 1e-10);
    }

    #[test]
    fn spectral_index_law(coeffs in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..8),
                          a in -1.5f64..1.5, b in -1.5f64..1.5) {
        let s = band_limited_real(&coeffs);
        let two_step = frac_coeffs(&frac_coeffs(&s, ord(a)).unwrap(), ord(b)).unwrap();
        let one_step = frac_coeffs(&s, ord(a + b)).unwrap();
        for n in -(s.max_index() as i64)..=s.max_index() as i64 {
            prop_assert!((two_step.get(n) - one_step.get(n)).norm() < 1e-12);
        }
    }

    #[test]
    fn fractional_roundtrip(coeffs in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..8),
                            beta in 0.05f64..2.0, x in 0.0f64..6.3) {
        let s = band_limited_real(&coeffs);
        let back = frac_coeffs(&frac_coeffs(&s, ord(beta)).unwrap(), ord(-beta)).unwrap();
        prop_assert!((synthesize(&back, x) - synthesize(&s, x)).norm() < 1e-10);
    }

    #[test]
    fn real_functions_stay_real(coeffs in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..8),
                                beta in -2.0f64..2.0, x in 0.0f64..6.3) {
        let s = band_limited_real(&coeffs);
        let d = frac_coeffs(&s, ord(beta)).unwrap();
        prop_assert!(d.conjugate_asymmetry() < 1e-12);
        prop_assert!(synthesize(&d, x).im.abs() < 1e-10);
    }
}
