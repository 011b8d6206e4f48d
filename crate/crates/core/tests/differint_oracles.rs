mod common;

use std::f64::consts::PI;

use common::{c, rl_integral, simpson, simpson_real};
use fracwave::differint::{
    differintegral, distribution_pair, frac_derivative, frac_integral, kernel_delta,
    DistributionRep,
};
use fracwave::numeric::cpow_branch;
use fracwave::{GridFunction, Order};
use num_complex::Complex64;
use proptest::prelude::*;

fn ord(a: f64) -> Order {
    Order::new(a).unwrap()
}

#[test]
fn half_integral_of_constant() {
    let f = GridFunction::with_step(0.0, 1.0, 1e-3, |_| c(1.0)).unwrap();
    let s = frac_integral(&f, ord(0.5)).unwrap();
    let last = *s.values().last().unwrap();
    let want = 2.0 / PI.sqrt();
    assert!((last.re - want).abs() < 1e-12);
    let oracle = rl_integral(&|_| c(1.0), 0.0, 1.0, 0.5);
    assert!((oracle.re - want).abs() < 1e-10);
}

#[test]
fn second_order_convergence_for_smooth_data() {
    let f = |x: f64| c(x.sin() + 1.0);
    let want = rl_integral(&f, 0.0, 1.0, 0.5);
    let err = |h: f64| {
        let g = GridFunction::with_step(0.0, 1.0, h, f).unwrap();
        (frac_integral(&g, ord(0.5)).unwrap().values().last().unwrap() - want).norm()
    };
    let (e1, e2) = (err(1e-2), err(5e-3));
    assert!(e1 < 1e-4, "e1 = {e1}");
    let ratio = e1 / e2;
    assert!(ratio > 3.0 && ratio < 5.0, "ratio = {ratio}");
}

#[test]
fn exponential_integral_has_documented_transient() {
    // With base point 0 the result differs from the steady state (i)^{-1/2} e^{ix}
    // by a tail that decays like x^{α-1}/Γ(α).
    let alpha = 0.5;
    let f = |x: f64| Complex64::from_polar(1.0, x);
    let g = GridFunction::with_step(0.0, 20.0, 2e-3, f).unwrap();
    let s = frac_integral(&g, ord(alpha)).unwrap();
    let at20 = *s.values().last().unwrap();

    let exact = rl_integral(&f, 0.0, 20.0, alpha);
    assert!((at20 - exact).norm() < 1e-4, "{at20} vs {exact}");

    let i = Complex64::new(0.0, 1.0);
    let steady = cpow_branch(i, -alpha).unwrap() * f(20.0);
    let leading_tail = 20f64.powf(alpha - 1.0) / (i * common::gamma_oracle(alpha));
    assert!((at20 - (steady - leading_tail)).norm() < 1e-2);

    let at5 = s.interpolate(5.0).unwrap();
    let tail5 = (at5 - cpow_branch(i, -alpha).unwrap() * f(5.0)).norm();
    let tail20 = (at20 - steady).norm();
    let ratio = tail20 / tail5;
    assert!((ratio - 0.5).abs() < 0.05, "tail ratio {ratio}");
}

#[test]
fn half_derivative_inverts_half_integral() {
    let f = GridFunction::with_step(0.0, 1.0, 1e-3, |x| c((3.0 * x).sin() + x)).unwrap();
    let back = frac_derivative(&frac_integral(&f, ord(0.5)).unwrap(), ord(0.5)).unwrap();
    let interior = 1..f.len() - 1;
    let err = interior
        .map(|j| (back.values()[j] - f.values()[j]).norm())
        .fold(0.0, f64::max);
    assert!(err < 1e-2, "sup err {err}");
}

#[test]
fn half_derivative_of_identity_against_oracle() {
    let g = GridFunction::with_step(0.0, 1.0, 1e-3, c).unwrap();
    let d = frac_derivative(&g, ord(0.5)).unwrap();
    // brute force: differentiate the oracle's S^{1/2} x by a centred difference
    let h = 1e-4;
    let oracle = (rl_integral(&|t| c(t), 0.0, 0.5 + h, 0.5) - rl_integral(&|t| c(t), 0.0, 0.5 - h, 0.5)) / (2.0 * h);
    let at = d.interpolate(0.5).unwrap();
    assert!((at - oracle).norm() < 1e-3);
    assert!((at.re - 2.0 * (0.5 / PI).sqrt()).abs() < 1e-3);
}

#[test]
fn index_law_on_unit_interval() {
    let f = GridFunction::with_step(0.0, 1.0, 1e-3, |x| c((2.0 * x).cos() + x * x)).unwrap();
    for &(a, b) in &[(0.3, 0.7), (0.5, 0.5), (1.0, 0.5)] {
        let composed = frac_integral(&frac_integral(&f, ord(b)).unwrap(), ord(a)).unwrap();
        let direct = frac_integral(&f, ord(a + b)).unwrap();
        let err = composed.sup_distance(&direct);
        assert!(err < 1e-3, "({a}, {b}): {err}");
    }
}

#[test]
fn kernel_semigroup() {
    for &alpha in &[0.3, 0.5, 0.8, 1.0, 1.7, 2.4] {
        for &x in &[0.25, 1.0, 3.5] {
            // substitute t = x u^{1/α} to remove the singularity at 0
            let integrand = |u: f64| {
                let t = x * u.powf(1.0 / alpha);
                let dt = x / alpha * u.powf(1.0 / alpha - 1.0);
                if t == 0.0 { 0.0 } else { kernel_delta(ord(alpha), t).unwrap() * dt }
            };
            let lhs = simpson_real(&integrand, 0.0, 1.0, 1e-13);
            let rhs = kernel_delta(ord(alpha + 1.0), x).unwrap();
            assert!(((lhs - rhs) / rhs).abs() < 1e-6, "alpha {alpha}, x {x}: {lhs} vs {rhs}");
        }
    }
}

#[test]
fn pairing_delta_derivative() {
    // δ paired after one derivative: e^{iπ} φ'(0) = -φ'(0)
    let (a, b) = (-1.0, 1.5);
    let phi = GridFunction::with_step(a, b, 1e-3, |x| c(common::bump(a, b)(x))).unwrap();
    let got = distribution_pair(&DistributionRep::dirac(0.0), ord(-1.0), &phi).unwrap();
    assert!(got.is_clean());
    let want = -common::bump_derivative(a, b)(0.0);
    assert!((got.value - c(want)).norm() < 1e-5, "{} vs {want}", got.value);
}

#[test]
fn pairing_delta_integral() {
    // one integration: e^{-iπ} ∫_{a}^{0} φ
    let (a, b) = (-1.0, 1.5);
    let bump = common::bump(a, b);
    let phi = GridFunction::with_step(a, b, 1e-3, |x| c(bump(x))).unwrap();
    let got = distribution_pair(&DistributionRep::dirac(0.0), ord(1.0), &phi).unwrap();
    let want = -simpson_real(&bump, a, 0.0, 1e-13);
    assert!((got.value - c(want)).norm() < 1e-6);
}

#[test]
fn pairing_step_derivative_is_point_value() {
    // H' = δ: with one derivative, e^{iπ} ∫_0^∞ φ' = φ(0)
    let (a, b) = (-1.0, 1.5);
    let bump = common::bump(a, b);
    let phi = GridFunction::with_step(a, b, 1e-3, |x| c(bump(x))).unwrap();
    let got =
        distribution_pair(&DistributionRep::Heaviside { location: 0.0 }, ord(-1.0), &phi).unwrap();
    assert!((got.value - c(bump(0.0))).norm() < 1e-6, "{}", got.value);
}

#[test]
fn pairing_function_backed_at_order_zero() {
    let (a, b) = (-1.0, 1.5);
    let bump = common::bump(a, b);
    let phi = GridFunction::with_step(a, b, 1e-3, |x| c(bump(x))).unwrap();
    let weight = GridFunction::with_step(-3.0, 3.0, 1e-3, |x| c(x.cos())).unwrap();
    let got = distribution_pair(&DistributionRep::Function(weight), Order::ZERO, &phi).unwrap();
    let want = simpson_real(&|x| x.cos() * bump(x), a, b, 1e-13);
    assert!((got.value - c(want)).norm() < 1e-6);
}

#[test]
fn pairing_fractional_order_against_oracle() {
    // α = 0.5: e^{-iπ/2} S^{1/2}φ(0.5), with the oracle doing the RL integral
    let (a, b) = (-1.0, 1.5);
    let bump = common::bump(a, b);
    let phi = GridFunction::with_step(a, b, 1e-3, |x| c(bump(x))).unwrap();
    let got = distribution_pair(&DistributionRep::dirac(0.5), ord(0.5), &phi).unwrap();
    let want = Complex64::new(0.0, -1.0) * rl_integral(&|t| c(bump(t)), a, 0.5, 0.5);
    assert!((got.value - want).norm() < 1e-5);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn differintegral_is_linear(alpha in -1.5f64..3.0, c1 in -3.0f64..3.0, c2 in -3.0f64..3.0,
                                w in 0.5f64..4.0) {
        let f = GridFunction::with_step(0.0, 2.0, 1e-2, |x| Complex64::new((w * x).sin(), x)).unwrap();
        let g = GridFunction::with_step(0.0, 2.0, 1e-2, |x| Complex64::new(x.exp(), -x * x)).unwrap();
        let combo = f.map(|x, v| v * c1 + g.interpolate(x).unwrap() * c2).unwrap();
        let alpha = ord(alpha);
        let lhs = differintegral(&combo, alpha).unwrap();
        let (sf, sg) = (differintegral(&f, alpha).unwrap(), differintegral(&g, alpha).unwrap());
        let rhs = sf.map(|x, v| v * c1 + sg.interpolate(x).unwrap() * c2).unwrap();
        let scale = 1.0 + rhs.max_abs();
        prop_assert!(lhs.sup_distance(&rhs) < 1e-10 * scale);
    }
}

#[test]
fn oracle_sanity() {
    let v = simpson(&|x: f64| Complex64::new(x.cos(), x.sin()), 0.0, 1.0, 1e-13);
    assert!((v - Complex64::new(1f64.sin(), 1.0 - 1f64.cos())).norm() < 1e-12);
}
