//! Independent reference computations shared by the integration tests.
//!
//! Nothing here calls into the crate's quadrature or special functions.
#![allow(dead_code)]

use num_complex::Complex64;
use std::f64::consts::PI;

/// Adaptive Simpson quadrature on a smooth complex integrand.
pub fn simpson<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64, tol: f64) -> Complex64 {
    #[allow(clippy::too_many_arguments)]
    fn rec<F: Fn(f64) -> Complex64>(
        f: &F,
        a: f64,
        b: f64,
        fa: Complex64,
        fm: Complex64,
        fb: Complex64,
        whole: Complex64,
        tol: f64,
        depth: u32,
    ) -> Complex64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        if depth == 0 || delta.norm() <= 15.0 * tol {
            left + right + delta / 15.0
        } else {
            rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
                + rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
        }
    }
    if a == b {
        return Complex64::new(0.0, 0.0);
    }
    // split first so oscillatory integrands do not fool the initial estimate
    let pieces = 64;
    let h = (b - a) / pieces as f64;
    (0..pieces)
        .map(|k| {
            let lo = a + h * k as f64;
            let hi = lo + h;
            let (fa, fm, fb) = (f(lo), f(0.5 * (lo + hi)), f(hi));
            let whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
            rec(f, lo, hi, fa, fm, fb, whole, tol / pieces as f64, 40)
        })
        .sum()
}

pub fn simpson_real<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    simpson(&|x| Complex64::new(f(x), 0.0), a, b, tol).re
}

/// Gamma via the Stirling series for large arguments plus upward recurrence.
pub fn gamma_oracle(x: f64) -> f64 {
    if x < 0.5 {
        // reflection with exact argument reduction
        let k = x.round();
        let r = x - k;
        let sign = if (k as i64) % 2 == 0 { 1.0 } else { -1.0 };
        let s = sign * (PI * r).sin();
        return PI / (s * gamma_oracle(1.0 - x));
    }
    let shift = if x < 25.0 { (25.0 - x).ceil() } else { 0.0 };
    let y = x + shift;
    // Bernoulli terms B_{2k}/(2k(2k-1) y^{2k-1})
    let b = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
        7.0 / 6.0,
        -3617.0 / 510.0,
    ];
    let mut series = 0.0;
    for (k, bk) in b.iter().enumerate() {
        let n = 2.0 * (k + 1) as f64;
        series += bk / (n * (n - 1.0) * y.powf(n - 1.0));
    }
    let ln_g = (y - 0.5) * y.ln() - y + 0.5 * (2.0 * PI).ln() + series;
    let mut ln_div = 0.0;
    let mut t = x;
    while t < y - 0.5 {
        ln_div += t.ln();
        t += 1.0;
    }
    (ln_g - ln_div).exp()
}

/// Riemann–Liouville integral from `x0` to `x` of a smooth function, by
/// substituting `s = (x - t)^α` to remove the endpoint singularity.
pub fn rl_integral<F: Fn(f64) -> Complex64>(f: &F, x0: f64, x: f64, alpha: f64) -> Complex64 {
    let upper = (x - x0).powf(alpha);
    let g = |s: f64| f(x - s.powf(1.0 / alpha));
    simpson(&g, 0.0, upper, 1e-13) / (alpha * gamma_oracle(alpha))
}

/// Standard C-infinity bump supported on `[a, b]`.
pub fn bump(a: f64, b: f64) -> impl Fn(f64) -> f64 {
    let c = 0.5 * (a + b);
    let r = 0.5 * (b - a);
    move |x| {
        let s = (x - c) / r;
        if s.abs() < 1.0 {
            (-1.0 / (1.0 - s * s)).exp()
        } else {
            0.0
        }
    }
}

pub fn bump_derivative(a: f64, b: f64) -> impl Fn(f64) -> f64 {
    let c = 0.5 * (a + b);
    let r = 0.5 * (b - a);
    move |x| {
        let s = (x - c) / r;
        if s.abs() < 1.0 {
            let q = 1.0 - s * s;
            (-1.0 / q).exp() * (-2.0 * s / (q * q)) / r
        } else {
            0.0
        }
    }
}

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}
