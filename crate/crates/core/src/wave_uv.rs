//! The wave equation fractionalised in the light-cone variables
//! `u = x + t`, `v = x - t`: `∂_u^β ∂_v^α f = 0`.
//!
//! Prefactors with negative bases, such as `((x+t)/(x-t))^{1-α}` for
//! `x < t`, go through [`rpow_branch`] and make the field complex there;
//! figures plot its real part. Cells on the cone boundary where a prefactor
//! blows up are masked rather than clamped.

use num_complex::Complex64;

use crate::differint::{inverse_derivative_samples, INVERSE_DERIVATIVE_EPS_STEPS};
use crate::error::{Error, Result};
use crate::field::{Axis, Field2D};
use crate::grid::GridFunction;
use crate::numeric::{cpow_branch, gamma, heaviside, recip_gamma, rpow_branch, Order};

/// `½ δ^{(-β)}(x+t) δ^{(-α)}(x-t)`. `None` marks the singular cone boundary.
pub fn fundamental_solution(alpha: Order, beta: Order, x: f64, t: f64) -> Option<f64> {
    let (u, v) = (x + t, x - t);
    if u < 0.0 || v < 0.0 {
        return Some(0.0);
    }
    let factor = |base: f64, order: f64| -> Option<f64> {
        if base == 0.0 && order < 1.0 {
            return None;
        }
        Some(base.powf(order - 1.0) * recip_gamma(order) * heaviside(base))
    };
    let (a, b) = (alpha.value(), beta.value());
    Some(0.5 * factor(u, b)? * factor(v, a)?)
}

/// `(base)^{order-1}/Γ(order)`; zero when `1/Γ(order)` vanishes.
fn cone_prefactor(base: f64, order: f64) -> Result<Option<Complex64>> {
    let rg = recip_gamma(order);
    if rg == 0.0 {
        return Ok(None);
    }
    if base == 0.0 && order < 1.0 {
        return Err(Error::Singular { alpha: order, x: base });
    }
    Ok(Some(rpow_branch(base, order - 1.0)? * rg))
}

/// `f = (x-t)^{α-1}/Γ(α) φ(x+t) + (x+t)^{β-1}/Γ(β) ψ(x-t)`.
pub fn general_solution(
    alpha: Order,
    beta: Order,
    phi: &GridFunction,
    psi: &GridFunction,
    x: f64,
    t: f64,
) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    if let Some(p) = cone_prefactor(x - t, alpha.value())? {
        acc += p * phi.interpolate(x + t)?;
    }
    if let Some(p) = cone_prefactor(x + t, beta.value())? {
        acc += p * psi.interpolate(x - t)?;
    }
    Ok(acc)
}

/// Initial data `f(x, 0) = g`, `f_t(x, 0) = h` on a shared grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ICPair {
    g: GridFunction,
    h: GridFunction,
    g_prime: Option<GridFunction>,
}

impl ICPair {
    pub fn new(g: GridFunction, h: GridFunction) -> Result<Self> {
        if !g.same_grid(&h) {
            return Err(Error::InvalidGrid("g and h must share one grid".into()));
        }
        Ok(ICPair { g, h, g_prime: None })
    }

    /// Supplies `g'` directly instead of differencing `g`.
    pub fn with_derivative(g: GridFunction, g_prime: GridFunction, h: GridFunction) -> Result<Self> {
        if !g.same_grid(&h) || !g.same_grid(&g_prime) {
            return Err(Error::InvalidGrid("g, g' and h must share one grid".into()));
        }
        Ok(ICPair { g, h, g_prime: Some(g_prime) })
    }

    /// Samples `g`, `g'` and `h` on `[-half_width, half_width]` with 0 as a node.
    pub fn from_fns(
        half_width: f64,
        step: f64,
        g: impl Fn(f64) -> f64,
        g_prime: impl Fn(f64) -> f64,
        h: impl Fn(f64) -> f64,
    ) -> Result<Self> {
        let m = (half_width / step).ceil().max(1.0) as usize;
        let step = half_width / m as f64;
        let count = 2 * m + 1;
        let sample = |f: &dyn Fn(f64) -> f64| {
            GridFunction::from_real_fn(-half_width, step, count, f)
        };
        ICPair::with_derivative(sample(&g)?, sample(&g_prime)?, sample(&h)?)
    }

    pub fn g(&self) -> &GridFunction {
        &self.g
    }

    pub fn h(&self) -> &GridFunction {
        &self.h
    }

    fn g_prime_samples(&self) -> Vec<Complex64> {
        match &self.g_prime {
            Some(gp) => gp.values().to_vec(),
            None => {
                let v = self.g.values();
                let n = v.len();
                let s = self.g.step();
                let mut d = Vec::with_capacity(n);
                d.push((-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * s));
                d.extend((1..n - 1).map(|j| (v[j + 1] - v[j - 1]) / (2.0 * s)));
                d.push((3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * s));
                d
            }
        }
    }
}

/// Admissible parameters: `α ∈ (0, 1]`, `β ∈ (1 - α, 1]`.
pub fn check_admissible(alpha: Order, beta: Order) -> Result<()> {
    let a = alpha.require_in(0.0, 1.0, "(0, 1]")?.value();
    beta.require_in(1.0 - a, 1.0, "(1 - alpha, 1]")?;
    Ok(())
}

fn check_closed(alpha: Order, beta: Order) -> Result<()> {
    let a = alpha.require_in(0.0, 1.0, "(0, 1]")?.value();
    let b = beta.value();
    if b < 1.0 - a || b > 1.0 {
        return Err(Error::OrderRange { value: b, range: "[1 - alpha, 1]" });
    }
    Ok(())
}

/// Initial-value solution of `(∂_t + ∂_x)^β (∂_t - ∂_x)^α f = 0`.
///
/// Construction precomputes, on the initial-data grid,
/// `η(y) = y^{α+β-3} ∫_0^y z^{2-α-β} [(α-β) g'(z) + (α+β-2) h(z)] dz` and
/// `Φ(y) = ∫_0^y h + η`, both as inverse derivatives anchored at 0. Then
/// `f = ½((x+t)/(x-t))^{1-α} [g + Φ](x+t) + ½((x-t)/(x+t))^{1-β} [g - Φ](x-t)`.
#[derive(Debug, Clone)]
pub struct IvpSolver {
    alpha: f64,
    beta: f64,
    g: GridFunction,
    eta: GridFunction,
    big_phi: GridFunction,
    eps: f64,
}

impl IvpSolver {
    pub fn new(alpha: Order, beta: Order, ic: &ICPair) -> Result<Self> {
        check_admissible(alpha, beta)?;
        Self::build(alpha.value(), beta.value(), ic)
    }

    /// Like [`IvpSolver::new`] but also accepts the boundary `β = 1 - α`,
    /// where the formula still evaluates but uniqueness is not guaranteed.
    pub fn new_closed(alpha: Order, beta: Order, ic: &ICPair) -> Result<Self> {
        check_closed(alpha, beta)?;
        Self::build(alpha.value(), beta.value(), ic)
    }

    fn build(a: f64, b: f64, ic: &ICPair) -> Result<Self> {
        let grid = &ic.g;
        let zero = grid.node_index(0.0).ok_or_else(|| {
            Error::InvalidGrid("initial-data grid must have a node at 0".into())
        })?;
        let step = grid.step();
        let n = grid.len();
        let p = 2.0 - a - b;

        let gp = ic.g_prime_samples();
        let q: Vec<Complex64> = gp
            .iter()
            .zip(ic.h.values())
            .map(|(&d, &hv)| d * (a - b) + hv * (a + b - 2.0))
            .collect();

        // The two half-lines from 0, each parametrised by distance u = |y|.
        let right = |v: &[Complex64]| v[zero..].to_vec();
        let left = |v: &[Complex64]| v[..=zero].iter().rev().copied().collect::<Vec<_>>();

        // For y < 0 the branch phases of y^{α+β-3} and of the inverse
        // derivative of z^p cancel exactly, leaving
        // η(y) = |y|^{-1-p} ∫_0^{|y|} u^p q(-u) du, so η is real on both sides.
        let eta_half = |qs: Vec<Complex64>| -> Result<Vec<Complex64>> {
            let inner = inverse_derivative_samples(p, step, &qs)?;
            Ok(inner
                .iter()
                .enumerate()
                .map(|(k, &v)| if k == 0 { Complex64::new(0.0, 0.0) } else { v * (k as f64 * step).powf(-1.0 - p) })
                .collect())
        };
        let eta_right = if zero < n - 1 { eta_half(right(&q))? } else { vec![Complex64::new(0.0, 0.0)] };
        let eta_left = if zero > 0 { eta_half(left(&q))? } else { vec![Complex64::new(0.0, 0.0)] };

        // Φ(y) = ∫_0^y (h + η); on the left the orientation flips the sign.
        let phi_half = |hs: Vec<Complex64>, es: &[Complex64]| -> Result<Vec<Complex64>> {
            if hs.len() < 2 {
                return Ok(vec![Complex64::new(0.0, 0.0)]);
            }
            let s: Vec<Complex64> = hs.iter().zip(es).map(|(x, y)| x + y).collect();
            inverse_derivative_samples(0.0, step, &s)
        };
        let phi_right = phi_half(right(ic.h.values()), &eta_right)?;
        let phi_left = phi_half(left(ic.h.values()), &eta_left)?;

        let mut eta = Vec::with_capacity(n);
        let mut big_phi = Vec::with_capacity(n);
        for k in (1..eta_left.len()).rev() {
            eta.push(eta_left[k]);
            big_phi.push(-phi_left[k]);
        }
        eta.extend_from_slice(&eta_right);
        big_phi.extend_from_slice(&phi_right);

        Ok(IvpSolver {
            alpha: a,
            beta: b,
            g: ic.g.clone(),
            eta: grid.with_values(eta)?,
            big_phi: grid.with_values(big_phi)?,
            eps: INVERSE_DERIVATIVE_EPS_STEPS as f64 * step,
        })
    }

    /// Radius of the masked neighbourhood of the origin for `η`.
    pub fn eps(&self) -> f64 {
        self.eps
    }

    /// `η(y)`; `None` within `ε` of the origin.
    pub fn eta(&self, y: f64) -> Result<Option<Complex64>> {
        if y.abs() <= self.eps {
            return Ok(None);
        }
        self.eta.interpolate(y).map(Some)
    }

    pub fn eta_grid(&self) -> &GridFunction {
        &self.eta
    }

    /// `Φ(y) = ∫_0^y h + η`.
    pub fn big_phi(&self, y: f64) -> Result<Complex64> {
        self.big_phi.interpolate(y)
    }

    /// The same solution in the form `(x-t)^{α-1}/Γ(α) φ(x+t) + (x+t)^{β-1}/Γ(β) ψ(x-t)`
    /// accepted by [`general_solution`]: `φ(u) = ½Γ(α) u^{1-α} [g + Φ](u)`,
    /// `ψ(v) = ½Γ(β) v^{1-β} [g - Φ](v)`.
    ///
    /// Where `x > |t|` the two forms coincide. For `x < t` the power of a
    /// product and the power of the ratio land on different branches and the
    /// first term of the potential form carries an extra `e^{-2πi(1-α)}`.
    pub fn potentials(&self) -> Result<(GridFunction, GridFunction)> {
        let (a, b) = (self.alpha, self.beta);
        let (ga, gb) = (gamma(a)?, gamma(b)?);
        let phi = self
            .g
            .values()
            .iter()
            .zip(self.big_phi.values())
            .zip(self.g.xs())
            .map(|((&g, &p), u)| Ok(rpow_branch(u, 1.0 - a)? * (g + p) * (0.5 * ga)))
            .collect::<Result<Vec<_>>>()?;
        let psi = self
            .g
            .values()
            .iter()
            .zip(self.big_phi.values())
            .zip(self.g.xs())
            .map(|((&g, &p), v)| Ok(rpow_branch(v, 1.0 - b)? * (g - p) * (0.5 * gb)))
            .collect::<Result<Vec<_>>>()?;
        Ok((self.g.with_values(phi)?, self.g.with_values(psi)?))
    }

    /// `f(x, t)`, or `None` on the cone boundary where a prefactor diverges.
    pub fn eval(&self, x: f64, t: f64) -> Result<Option<Complex64>> {
        let (u, v) = (x + t, x - t);
        let Some(front) = ratio_power(u, v, 1.0 - self.alpha)? else { return Ok(None) };
        let Some(back) = ratio_power(v, u, 1.0 - self.beta)? else { return Ok(None) };
        let plus = self.g.interpolate(u)? + self.big_phi.interpolate(u)?;
        let minus = self.g.interpolate(v)? - self.big_phi.interpolate(v)?;
        Ok(Some(0.5 * (front * plus + back * minus)))
    }
}

/// `(num/den)^p` on the crate branch; `None` when it diverges.
fn ratio_power(num: f64, den: f64, p: f64) -> Result<Option<Complex64>> {
    if p == 0.0 {
        return Ok(Some(Complex64::new(1.0, 0.0)));
    }
    if den == 0.0 {
        return Ok(if num == 0.0 || p > 0.0 { None } else { Some(Complex64::new(0.0, 0.0)) });
    }
    let r = num / den;
    if r == 0.0 {
        return Ok(if p > 0.0 { Some(Complex64::new(0.0, 0.0)) } else { None });
    }
    rpow_branch(r, p).map(Some)
}

/// `η(x)` at one point. Builds a solver; use [`IvpSolver`] for many points.
pub fn eta_closed_form(alpha: Order, beta: Order, ic: &ICPair, x: f64) -> Result<Option<Complex64>> {
    IvpSolver::new(alpha, beta, ic)?.eta(x)
}

/// `f(x, t)` at one point. Builds a solver; use [`IvpSolver`] for many points.
pub fn ivp_solution(alpha: Order, beta: Order, ic: &ICPair, x: f64, t: f64) -> Result<Option<Complex64>> {
    IvpSolver::new(alpha, beta, ic)?.eval(x, t)
}

/// Integrates `(3-α-β) η + x η' = (α-β) g' + (α+β-2) h` with classical RK4
/// from `x = ε`, started from the closed form. The step is two grid steps so
/// every stage lands on a node; the result lives on that coarser grid.
///
/// With `ε` tied to the grid step the stiffness ratio at the start is a
/// fixed (3-α-β)/2 <= 1.5, inside the RK4 stability region; the check only
/// guards against `INVERSE_DERIVATIVE_EPS_STEPS` being lowered.
pub fn eta_ode_oracle(alpha: Order, beta: Order, ic: &ICPair) -> Result<GridFunction> {
    let solver = IvpSolver::new(alpha, beta, ic)?;
    let (a, b) = (alpha.value(), beta.value());
    let grid = &ic.g;
    let zero = grid.node_index(0.0).expect("checked by IvpSolver");
    let e = INVERSE_DERIVATIVE_EPS_STEPS;
    let h = grid.step();
    let big_h = 2.0 * h;
    let rate = 3.0 - a - b;
    let x0 = e as f64 * h;
    if big_h * rate / x0 > 2.5 {
        return Err(Error::UnstableStep(big_h * rate / x0));
    }

    let gp = ic.g_prime_samples();
    let q = |k: usize| gp[zero + k] * (a - b) + ic.h.values()[zero + k] * (a + b - 2.0);
    let rhs = |k: usize, eta: Complex64| (q(k) - eta * rate) / (k as f64 * h);

    let mut eta = solver.eta.values()[zero + e];
    let mut out = vec![eta];
    let mut k = e;
    while zero + k + 2 < grid.len() {
        let k1 = rhs(k, eta);
        let k2 = rhs(k + 1, eta + k1 * (0.5 * big_h));
        let k3 = rhs(k + 1, eta + k2 * (0.5 * big_h));
        let k4 = rhs(k + 2, eta + k3 * big_h);
        eta += (k1 + 2.0 * k2 + 2.0 * k3 + k4) * (big_h / 6.0);
        out.push(eta);
        k += 2;
    }
    GridFunction::new(x0, big_h, out)
}

/// Evaluates the solution with `g = sin`, `h = cos` on a field grid. The
/// initial data is sampled with step `ic_step` on a symmetric interval wide
/// enough to reach every `x ± t`. Accepts `β = 1 - α` (see
/// [`IvpSolver::new_closed`]).
pub fn sincos_field(alpha: Order, beta: Order, x: Axis, t: Axis, ic_step: f64) -> Result<Field2D> {
    check_closed(alpha, beta)?;
    let reach = [x.start, x.end()]
        .iter()
        .flat_map(|&xv| [t.start, t.end()].map(|tv| (xv + tv).abs().max((xv - tv).abs())))
        .fold(0.0, f64::max);
    let half_width = reach * 1.01 + 10.0 * ic_step;
    let ic = ICPair::from_fns(half_width, ic_step, f64::sin, f64::cos, f64::cos)?;
    let solver = IvpSolver::new_closed(alpha, beta, &ic)?;
    Field2D::from_fn(x, t, |xv, tv| solver.eval(xv, tv))
}

/// `C(β, k) = Γ(β+1) / (Γ(β-k+1) Γ(k+1))`, via the product recurrence so
/// large `k` neither overflows nor hits the poles of the numerator's
/// companions. Vanishes for `k > β` at integer `β >= 0`.
pub fn binomial_coeff(beta: Order, k: u32) -> f64 {
    let b = beta.value();
    (0..k).fold(1.0, |acc, j| acc * (b - j as f64) / (j + 1) as f64)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinomialCheck {
    pub partial_sum: Complex64,
    pub target: Complex64,
    pub relerr: f64,
}

/// Checks the generalized binomial expansion on exponential symbols
/// (`∂_x ↦ a`, `∂_t ↦ b`): `Σ_{k≤K} C(β,k) a^{β-k} b^k` against `(a+b)^β`.
pub fn binomial_operator_check(a: Complex64, b: Complex64, beta: Order, terms: u32) -> Result<BinomialCheck> {
    if b.norm() >= a.norm() {
        return Err(Error::Divergent { a: a.norm(), b: b.norm() });
    }
    if terms > 200 {
        return Err(Error::Domain(format!("at most 200 terms, got {terms}")));
    }
    let bv = beta.value();
    let mut partial_sum = Complex64::new(0.0, 0.0);
    let mut b_pow = Complex64::new(1.0, 0.0);
    for k in 0..=terms {
        let coeff = binomial_coeff(beta, k);
        if coeff != 0.0 {
            partial_sum += cpow_branch(a, bv - k as f64)? * b_pow * coeff;
        }
        b_pow *= b;
    }
    let target = cpow_branch(a + b, bv)?;
    let relerr = (partial_sum - target).norm() / target.norm();
    Ok(BinomialCheck { partial_sum, target, relerr })
}
