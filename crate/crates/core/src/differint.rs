//! The differintegral `S^α` on sampled functions and on represented
//! distributions.
//!
//! `S^α f(x) = 1/Γ(α) ∫_{x0}^{x} f(t) (x - t)^{α-1} dt` for `α > 0`, with the
//! grid start as base point `x0`. Orders `α < 0` differentiate:
//! `S^{-α} = D^n ∘ S^{n-α}` with `n = ⌈α⌉`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Checked, Error, Result, Warning};
use crate::grid::GridFunction;
use crate::numeric::{heaviside, recip_gamma, Order};

/// Grid ends above this fraction of the peak trigger a support warning.
pub const SUPPORT_TOLERANCE: f64 = 1e-8;

/// Width of the excluded neighbourhood of the origin in inverse derivatives,
/// in grid steps.
pub const INVERSE_DERIVATIVE_EPS_STEPS: usize = 4;

/// Above this index the power-difference weights switch to their asymptotic
/// series to avoid cancellation.
const SERIES_THRESHOLD: usize = 64;
const SERIES_TERMS: usize = 16;

/// `δ^{(-α)}(x) = x^{α-1}/Γ(α) H(x)` for `α > 0`.
pub fn kernel_delta(alpha: Order, x: f64) -> Result<f64> {
    let a = alpha.value();
    if a <= 0.0 {
        return Err(Error::OrderRange { value: a, range: "(0, inf)" });
    }
    if x < 0.0 {
        return Ok(0.0);
    }
    if x == 0.0 {
        return if a < 1.0 {
            Err(Error::Singular { alpha: a, x })
        } else if a == 1.0 {
            Ok(heaviside(0.0))
        } else {
            Ok(0.0)
        };
    }
    Ok(x.powf(a - 1.0) * recip_gamma(a))
}

/// The zero function `∅^{(-α)}(x) = x^{α-1}/Γ(α)`: the kernel without its
/// step. Vanishes identically at orders `0, -1, -2, …`.
pub fn zero_function(alpha: Order, x: f64) -> Result<f64> {
    let a = alpha.value();
    let rg = recip_gamma(a);
    if x == 0.0 && a < 1.0 {
        return Err(Error::Singular { alpha: a, x });
    }
    if rg == 0.0 {
        return Ok(0.0);
    }
    if x < 0.0 && (a - 1.0).fract() != 0.0 {
        return Err(Error::Domain(format!(
            "zero function of order {a} is not real at negative x = {x}"
        )));
    }
    Ok(x.powi_or_powf(a - 1.0) * rg)
}

trait PowiOrPowf {
    fn powi_or_powf(self, p: f64) -> f64;
}

impl PowiOrPowf for f64 {
    fn powi_or_powf(self, p: f64) -> f64 {
        if p.fract() == 0.0 && p.abs() < i32::MAX as f64 {
            self.powi(p as i32)
        } else {
            self.powf(p)
        }
    }
}

fn gen_binomial(q: f64, m: usize) -> f64 {
    (0..m).fold(1.0, |acc, j| acc * (q - j as f64) / (j + 1) as f64)
}

/// `(k+1)^q - 2k^q + (k-1)^q` for `k >= 1`.
fn second_difference_pow(k: usize, q: f64) -> f64 {
    let kf = k as f64;
    if k < SERIES_THRESHOLD {
        (kf + 1.0).powf(q) - 2.0 * kf.powf(q) + (kf - 1.0).powf(q)
    } else {
        let inv2 = 1.0 / (kf * kf);
        let mut term = inv2;
        let mut sum = 0.0;
        for m in (2..=SERIES_TERMS).step_by(2) {
            sum += 2.0 * gen_binomial(q, m) * term;
            term *= inv2;
        }
        kf.powf(q) * sum
    }
}

/// `(n-1)^{α+1} - (n-α-1) n^α` for `n >= 1`: the weight of the base-point
/// sample.
fn start_weight(n: usize, alpha: f64) -> f64 {
    let nf = n as f64;
    let q = alpha + 1.0;
    if n < SERIES_THRESHOLD {
        (nf - 1.0).powf(q) - (nf - q) * nf.powf(alpha)
    } else {
        let inv = -1.0 / nf;
        let mut term = inv * inv;
        let mut sum = 0.0;
        for m in 2..=SERIES_TERMS {
            sum += gen_binomial(q, m) * term;
            term *= inv;
        }
        nf.powf(q) * sum
    }
}

/// Fractional integral `S^α f` for `α ∈ (0, 4]`.
///
/// Product integration: the kernel `(x - t)^{α-1}` is integrated exactly
/// against the piecewise-linear interpolant of `f`, which keeps second order
/// accuracy even though the kernel is unbounded at `t = x` when `α < 1`.
pub fn frac_integral(f: &GridFunction, alpha: Order) -> Result<GridFunction> {
    let a = alpha.require_in(0.0, 4.0, "(0, 4]")?.value();
    if f.len() < 2 {
        return Err(Error::InvalidGrid("fractional integral needs at least 2 samples".into()));
    }
    let n = f.len();
    let q = a + 1.0;
    let mut w = Vec::with_capacity(n);
    w.push(1.0);
    w.extend((1..n).map(|k| second_difference_pow(k, q)));

    let re: Vec<f64> = f.values().iter().map(|v| v.re).collect();
    let im: Vec<f64> = f.values().iter().map(|v| v.im).collect();
    let scale = f.step().powf(a) * recip_gamma(a + 2.0);

    let out: Vec<Complex64> = (0..n)
        .into_par_iter()
        .map(|m| {
            if m == 0 {
                return Complex64::new(0.0, 0.0);
            }
            let a0 = start_weight(m, a);
            let (mut sr, mut si) = (a0 * re[0], a0 * im[0]);
            // samples 1..=m, weight w[m - j]
            for (wk, (r, i)) in w[..m].iter().zip(re[1..=m].iter().rev().zip(im[1..=m].iter().rev())) {
                sr += wk * r;
                si += wk * i;
            }
            Complex64::new(sr, si) * scale
        })
        .collect();
    f.with_values(out)
}

fn first_derivative(v: &[Complex64], h: f64) -> Vec<Complex64> {
    let n = v.len();
    let mut d = Vec::with_capacity(n);
    d.push((-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h));
    d.extend((1..n - 1).map(|j| (v[j + 1] - v[j - 1]) / (2.0 * h)));
    d.push((3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * h));
    d
}

fn second_derivative(v: &[Complex64], h: f64) -> Vec<Complex64> {
    let n = v.len();
    let h2 = h * h;
    let mut d = Vec::with_capacity(n);
    d.push((2.0 * v[0] - 5.0 * v[1] + 4.0 * v[2] - v[3]) / h2);
    d.extend((1..n - 1).map(|j| (v[j + 1] - 2.0 * v[j] + v[j - 1]) / h2));
    d.push((2.0 * v[n - 1] - 5.0 * v[n - 2] + 4.0 * v[n - 3] - v[n - 4]) / h2);
    d
}

/// Fractional derivative of order `α ∈ (0, 2]`, realised as
/// `D^n S^{n-α}` with `n = ⌈α⌉` and central differences (one-sided at the
/// ends).
pub fn frac_derivative(f: &GridFunction, alpha: Order) -> Result<GridFunction> {
    let a = alpha.require_in(0.0, 2.0, "(0, 2]")?.value();
    let n = a.ceil() as usize;
    let needed = (n + 2).max(3);
    if f.len() < needed {
        return Err(Error::InvalidGrid(format!(
            "derivative of order {a} needs at least {needed} samples, got {}",
            f.len()
        )));
    }
    let rest = n as f64 - a;
    let smoothed = if rest > 0.0 { frac_integral(f, Order::new(rest)?)? } else { f.clone() };
    let d = match n {
        1 => first_derivative(smoothed.values(), f.step()),
        _ => second_derivative(smoothed.values(), f.step()),
    };
    f.with_values(d)
}

/// `S^α f` for any order in `(-2, 4]`: integrates for `α > 0`, differentiates
/// for `α < 0`, identity at zero.
pub fn differintegral(f: &GridFunction, alpha: Order) -> Result<GridFunction> {
    let a = alpha.value();
    if a > 0.0 {
        frac_integral(f, alpha)
    } else if a < 0.0 {
        frac_derivative(f, Order::new(-a)?)
    } else {
        Ok(f.clone())
    }
}

/// `∫_a^b y^q dy`, taking the Hadamard finite part at `a = 0` when the
/// integral diverges there.
fn power_moment(q: f64, a: f64, b: f64) -> f64 {
    if q == -1.0 {
        if a == 0.0 {
            b.ln()
        } else {
            (b / a).ln()
        }
    } else {
        let lo = if a == 0.0 { 0.0 } else { a.powf(q + 1.0) };
        (b.powf(q + 1.0) - lo) / (q + 1.0)
    }
}

const GL4_NODES: [f64; 4] = [
    -0.861_136_311_594_052_6,
    -0.339_981_043_584_856_3,
    0.339_981_043_584_856_3,
    0.861_136_311_594_052_6,
];
const GL4_WEIGHTS: [f64; 4] = [
    0.347_854_845_137_453_9,
    0.652_145_154_862_546_1,
    0.652_145_154_862_546_1,
    0.347_854_845_137_453_9,
];

/// `∫_{y_k}^{y_k+h} y^p ℓ(y) dy` where `ℓ` is linear through `(y_k, s0)` and
/// `(y_k+h, s1)`.
fn power_cell(p: f64, yk: f64, h: f64, s0: Complex64, s1: Complex64, k: usize) -> Complex64 {
    if k < SERIES_THRESHOLD {
        let b = yk + h;
        let i0 = power_moment(p, yk, b);
        let i1 = power_moment(p + 1.0, yk, b);
        s0 * ((b * i0 - i1) / h) + s1 * ((i1 - yk * i0) / h)
    } else {
        // y^p is smooth on cells far from the origin
        let mut acc = Complex64::new(0.0, 0.0);
        for (xi, wi) in GL4_NODES.iter().zip(GL4_WEIGHTS) {
            let tau = 0.5 * (xi + 1.0);
            let y = yk + h * tau;
            acc += (s0 * (1.0 - tau) + s1 * tau) * (wi * y.powf(p));
        }
        acc * (0.5 * h)
    }
}

/// Inverse derivative of `y^p s(y)`: the antiderivative normalised to vanish
/// at 0, evaluated at every node of `s`'s grid (which must start at 0).
///
/// Inside `[0, ε]`, `ε = 4·step`, the samples of `s` are replaced by the line
/// through `s(ε)` and `s(2ε)` and integrated against `y^p` with finite-part
/// moments, so the result stays finite even when `y^p s(y)` is not integrable
/// at the origin.
pub fn inverse_derivative(p: f64, s: &GridFunction) -> Result<GridFunction> {
    if s.start() != 0.0 {
        return Err(Error::InvalidGrid(format!(
            "inverse derivative is anchored at 0, grid starts at {}",
            s.start()
        )));
    }
    let values = inverse_derivative_samples(p, s.step(), s.values())?;
    s.with_values(values)
}

pub(crate) fn inverse_derivative_samples(p: f64, h: f64, s: &[Complex64]) -> Result<Vec<Complex64>> {
    let e = INVERSE_DERIVATIVE_EPS_STEPS;
    if s.len() < 2 * e + 1 {
        return Err(Error::InvalidGrid(format!(
            "inverse derivative needs at least {} samples, got {}",
            2 * e + 1,
            s.len()
        )));
    }
    let eps = e as f64 * h;
    let slope = (s[2 * e] - s[e]) / eps;
    let intercept = s[e] - slope * eps;

    let mut out = Vec::with_capacity(s.len());
    out.push(Complex64::new(0.0, 0.0));
    for j in 1..=e {
        let y = j as f64 * h;
        out.push(intercept * power_moment(p, 0.0, y) + slope * power_moment(p + 1.0, 0.0, y));
    }
    for k in e..s.len() - 1 {
        let yk = k as f64 * h;
        let next = out[k] + power_cell(p, yk, h, s[k], s[k + 1], k);
        out.push(next);
    }
    if out.iter().any(|v| !(v.re.is_finite() && v.im.is_finite())) {
        return Err(Error::Domain(format!("inverse derivative of y^{p} overflowed")));
    }
    Ok(out)
}

/// A distribution that can be paired with a test function.
#[derive(Debug, Clone, PartialEq)]
pub enum DistributionRep {
    Function(GridFunction),
    PointMass { location: f64, weight: Complex64 },
    Heaviside { location: f64 },
}

impl DistributionRep {
    pub fn dirac(location: f64) -> Self {
        DistributionRep::PointMass { location, weight: Complex64::new(1.0, 0.0) }
    }

    fn validate(&self) -> Result<()> {
        match self {
            DistributionRep::Function(_) => Ok(()),
            DistributionRep::PointMass { location, weight } => {
                if location.is_finite() && weight.re.is_finite() && weight.im.is_finite() {
                    Ok(())
                } else {
                    Err(Error::Domain("point mass needs finite location and weight".into()))
                }
            }
            DistributionRep::Heaviside { location } => {
                if location.is_finite() {
                    Ok(())
                } else {
                    Err(Error::Domain("step location must be finite".into()))
                }
            }
        }
    }
}

/// Phase applied when differintegrating a distribution: `e^{-iπα}`.
pub fn pairing_phase(alpha: Order) -> Complex64 {
    Complex64::from_polar(1.0, -PI * alpha.value())
}

/// `T^{(-α)}[φ] = e^{-iπα} T[S^α φ]` for `α ∈ (-2, 2)`.
pub fn distribution_pair(
    t: &DistributionRep,
    alpha: Order,
    phi: &GridFunction,
) -> Result<Checked<Complex64>> {
    let a = alpha.value();
    if !(a > -2.0 && a < 2.0) {
        return Err(Error::OrderRange { value: a, range: "(-2, 2)" });
    }
    t.validate()?;
    let mut warnings = Vec::new();
    let ratio = phi.edge_ratio();
    if ratio > SUPPORT_TOLERANCE {
        warnings.push(Warning::SupportViolation { edge_ratio: ratio });
    }
    let psi = differintegral(phi, alpha)?;

    let paired = match t {
        DistributionRep::Function(g) => {
            let prod: Vec<Complex64> = psi
                .xs()
                .zip(psi.values())
                .map(|(x, &v)| if g.contains(x) { g.interpolate(x).map(|gx| gx * v) } else { Ok(Complex64::new(0.0, 0.0)) })
                .collect::<Result<_>>()?;
            crate::grid::trapezoid(&prod, psi.step())
        }
        DistributionRep::PointMass { location, weight } => {
            let at = if *location < psi.start() {
                // test functions vanish to the left of their grid
                Complex64::new(0.0, 0.0)
            } else {
                psi.interpolate(*location)?
            };
            weight * at
        }
        DistributionRep::Heaviside { location } => integrate_from(&psi, *location)?,
    };
    Ok(Checked { value: pairing_phase(alpha) * paired, warnings })
}

/// `∫_a^{end} ψ` with linear interpolation in the partial cell.
fn integrate_from(psi: &GridFunction, a: f64) -> Result<Complex64> {
    if a <= psi.start() {
        return Ok(psi.integrate());
    }
    if a >= psi.end() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let h = psi.step();
    let u = (a - psi.start()) / h;
    let k = u.floor() as usize;
    let v = psi.values();
    let at = psi.interpolate(a)?;
    let head = (psi.x(k + 1) - a) * 0.5 * (at + v[k + 1]);
    Ok(head + crate::grid::trapezoid(&v[k + 1..], h))
}
