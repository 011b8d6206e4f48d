//! The wave equation fractionalised directly in `x` and `t`:
//! `∂_t^β f - ∂_x^α f = 0`.
//!
//! Exponential modes `e^{ω^α t + ω^β x}` solve it, but `ω^α` and `ω^β` are
//! multivalued, and the branch picked for each decides whether a mode grows,
//! decays or oscillates.

use std::ops::RangeInclusive;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::{Axis, Field2D};
use crate::numeric::{BranchedComplex, Order};

/// Exponents whose real part exceeds this are masked instead of evaluated.
pub const OVERFLOW_EXPONENT: f64 = 700.0;

/// All values of `base^exponent` over a range of branch indices.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchSet {
    pub base: Complex64,
    pub exponent: f64,
    pub branches: RangeInclusive<i64>,
    pub values: Vec<Complex64>,
}

impl BranchSet {
    /// Value on branch `k`, if `k` is in the stored range.
    pub fn get(&self, k: i64) -> Option<Complex64> {
        self.branches.contains(&k).then(|| self.values[(k - self.branches.start()) as usize])
    }
}

/// `ω^p` on every branch in `k_range`; branch 0 agrees with
/// [`cpow_branch`](crate::numeric::cpow_branch).
pub fn omega_powers(omega: Complex64, p: f64, k_range: RangeInclusive<i64>) -> Result<BranchSet> {
    if omega == Complex64::new(0.0, 0.0) {
        return Err(Error::Domain("branches of a power of zero".into()));
    }
    let z = BranchedComplex(omega);
    let values = k_range.clone().map(|k| z.powf_on_branch(p, k)).collect::<Result<Vec<_>>>()?;
    Ok(BranchSet { base: omega, exponent: p, branches: k_range, values })
}

fn masked_exp(exponent: Complex64) -> Option<Complex64> {
    (exponent.re <= OVERFLOW_EXPONENT).then(|| exponent.exp())
}

/// `e^{ω^α t + ω^β x}` with `ω^α` taken on `branch_t` and `ω^β` on
/// `branch_x`. `None` when the exponent would overflow.
pub fn mode(
    omega: Complex64,
    alpha: Order,
    beta: Order,
    branch_t: i64,
    branch_x: i64,
    x: f64,
    t: f64,
) -> Result<Option<Complex64>> {
    if omega == Complex64::new(0.0, 0.0) {
        return Err(Error::Domain("mode with ω = 0".into()));
    }
    let z = BranchedComplex(omega);
    let wt = z.powf_on_branch(alpha.value(), branch_t)?;
    let wx = z.powf_on_branch(beta.value(), branch_x)?;
    Ok(masked_exp(wt * t + wx * x))
}

/// The alternate form `e^{ω t + (ω^β)^{1/α} x}`: `ω^β` on the principal
/// branch, its `1/α` power on `branch`.
pub fn alt_mode(omega: Complex64, alpha: Order, beta: Order, branch: i64, x: f64, t: f64) -> Result<Option<Complex64>> {
    if alpha.value() == 0.0 {
        return Err(Error::Domain("alternate mode needs α ≠ 0".into()));
    }
    let wb = BranchedComplex(omega).powf(beta.value())?;
    let wx = BranchedComplex(wb).powf_on_branch(1.0 / alpha.value(), branch)?;
    Ok(masked_exp(omega * t + wx * x))
}

fn ratio(alpha: Order, beta: Order) -> Result<f64> {
    if beta.value() == 0.0 {
        return Err(Error::Domain("β must be nonzero".into()));
    }
    Ok(alpha.value() / beta.value())
}

/// `i^r` and `(-i)^r` for `r = α/β`. With the cut on the negative imaginary
/// axis these are `e^{irπ/2}` and `e^{-irπ/2}`, complex conjugates.
fn unit_powers(r: f64) -> Result<(Complex64, Complex64)> {
    let up = BranchedComplex::new(0.0, 1.0).powf(r)?;
    let down = BranchedComplex::new(0.0, -1.0).powf(r)?;
    Ok((up, down))
}

/// `(1/2i)[e^{i^r t + ix} - e^{(-i)^r t - ix}]`, the mode pair matching
/// `f(x, 0) = sin x`. Equals `e^{cos(rπ/2) t} sin(sin(rπ/2) t + x)`.
pub fn sin_solution(alpha: Order, beta: Order, x: f64, t: f64) -> Result<Complex64> {
    let (up, down) = unit_powers(ratio(alpha, beta)?)?;
    let i = Complex64::i();
    let a = (up * t + i * x).exp();
    let b = (down * t - i * x).exp();
    Ok((a - b) / (2.0 * i))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Damping {
    /// Amplitude grows in time ("negative damping").
    Growth,
    Decay,
    Neutral,
}

/// Sign of `cos(rπ/2)`, `r = α/β ∈ (0, 2)`.
pub fn damping_classify(alpha: Order, beta: Order) -> Result<Damping> {
    let r = ratio(alpha, beta)?;
    if !(r > 0.0 && r < 2.0) {
        return Err(Error::OrderRange { value: r, range: "(0, 2) for alpha/beta" });
    }
    // cos(π/2) is not exactly zero in floating point
    Ok(if r == 1.0 {
        Damping::Neutral
    } else if r < 1.0 {
        Damping::Growth
    } else {
        Damping::Decay
    })
}

/// Exact amplitude `e^{cos(rπ/2) t}` of [`sin_solution`] at time `t`.
pub fn amplitude_law(alpha: Order, beta: Order, t: f64) -> Result<f64> {
    let (up, _) = unit_powers(ratio(alpha, beta)?)?;
    Ok((up.re * t).exp())
}

/// [`sin_solution`] on a grid; cells past the overflow threshold are masked.
pub fn sin_field(alpha: Order, beta: Order, x: Axis, t: Axis) -> Result<Field2D> {
    let (up, _) = unit_powers(ratio(alpha, beta)?)?;
    Field2D::from_fn(x, t, |xv, tv| {
        if up.re * tv > OVERFLOW_EXPONENT {
            return Ok(None);
        }
        sin_solution(alpha, beta, xv, tv).map(Some)
    })
}

/// Amplitude of the time-`it` column of a field of the form
/// `A sin x + B cos x`, by least squares over its unmasked cells.
///
/// Unlike the largest sample this does not depend on whether the grid
/// happens to hit a crest. `None` if fewer than two cells are usable or the
/// columns of the fit are degenerate.
pub fn column_amplitude(field: &Field2D, it: usize) -> Option<f64> {
    let xs = field.x_axis();
    let (mut ss, mut sc, mut cc, mut sy, mut cy) = (0.0, 0.0, 0.0, 0.0, 0.0);
    let mut used = 0;
    for (ix, v) in field.column(it).into_iter().enumerate() {
        let Some(z) = v else { continue };
        let (s, c) = xs.at(ix).sin_cos();
        ss += s * s;
        sc += s * c;
        cc += c * c;
        sy += s * z.re;
        cy += c * z.re;
        used += 1;
    }
    let det = ss * cc - sc * sc;
    if used < 2 || det.abs() < 1e-12 * (ss * cc).max(f64::MIN_POSITIVE) {
        return None;
    }
    let a = (sy * cc - cy * sc) / det;
    let b = (cy * ss - sy * sc) / det;
    Some(a.hypot(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn ord(a: f64) -> Order {
        Order::new(a).unwrap()
    }

    #[test]
    fn square_roots() {
        let s = omega_powers(Complex64::new(1.0, 0.0), 0.5, 0..=1).unwrap();
        assert!((s.values[0] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!((s.values[1] + Complex64::new(1.0, 0.0)).norm() < 1e-15);
        let s = omega_powers(Complex64::i(), 0.5, 0..=1).unwrap();
        assert!((s.values[0] - Complex64::from_polar(1.0, PI / 4.0)).norm() < 1e-15);
        assert!((s.get(1).unwrap() - Complex64::from_polar(1.0, 5.0 * PI / 4.0)).norm() < 1e-15);
        assert_eq!(s.get(2), None);
        assert!(omega_powers(Complex64::new(0.0, 0.0), 0.5, 0..=1).is_err());
    }

    #[test]
    fn classical_mode() {
        let m = mode(Complex64::i(), Order::ONE, Order::ONE, 0, 0, 0.4, 1.1).unwrap().unwrap();
        assert!((m - Complex64::from_polar(1.0, 1.5)).norm() < 1e-15);
        let big = mode(Complex64::new(1.0, 0.0), Order::ONE, Order::ONE, 0, 0, 400.0, 400.0).unwrap();
        assert_eq!(big, None);
    }

    #[test]
    fn second_order_branches() {
        let two = ord(2.0);
        let (x, t) = (0.3, 0.8);
        let principal = mode(Complex64::i(), two, two, 0, 0, x, t).unwrap().unwrap();
        assert!((principal - Complex64::new((-(x + t)).exp(), 0.0)).norm() < 1e-15);
        let plus = alt_mode(Complex64::i(), two, two, 0, x, t).unwrap().unwrap();
        let minus = alt_mode(Complex64::i(), two, two, 1, x, t).unwrap().unwrap();
        assert!((plus - Complex64::from_polar(1.0, x + t)).norm() < 1e-14);
        assert!((minus - Complex64::from_polar(1.0, t - x)).norm() < 1e-14);
    }

    #[test]
    fn classification() {
        assert_eq!(damping_classify(ord(0.5), Order::ONE).unwrap(), Damping::Growth);
        assert_eq!(damping_classify(ord(1.5), Order::ONE).unwrap(), Damping::Decay);
        assert_eq!(damping_classify(ord(0.7), ord(0.7)).unwrap(), Damping::Neutral);
        assert!(damping_classify(ord(2.0), Order::ONE).is_err());
        assert!(damping_classify(ord(-0.5), Order::ONE).is_err());
        assert!(damping_classify(Order::ONE, Order::ZERO).is_err());
    }

    #[test]
    fn classical_ratio_is_travelling_sine() {
        for &(x, t) in &[(0.0, 0.0), (1.0, 2.0), (-3.0, 0.5)] {
            let f = sin_solution(ord(0.8), ord(0.8), x, t).unwrap();
            assert!((f.re - (x + t).sin()).abs() < 1e-14);
            assert!(f.im.abs() < 1e-15);
        }
    }

    #[test]
    fn amplitude_fit_recovers_coefficients() {
        let x = Axis::linspace(0.0, 3.0, 17).unwrap();
        let t = Axis::linspace(0.0, 1.0, 2).unwrap();
        let f = Field2D::from_fn(x, t, |x, _| Ok(Some(Complex64::new(3.0 * x.sin() - 4.0 * x.cos(), 0.0)))).unwrap();
        assert!((column_amplitude(&f, 0).unwrap() - 5.0).abs() < 1e-12);
        assert_eq!(column_amplitude(&Field2D::all_masked(x, t), 1), None);
    }
}
