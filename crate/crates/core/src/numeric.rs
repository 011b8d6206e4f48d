//! Special functions and branch-consistent complex powers.
//!
//! Every multivalued power in the crate goes through [`cpow_branch`], which
//! places the branch cut along the negative imaginary axis: arguments are
//! reported in the half-open interval `[-π/2, 3π/2)`. The lower end is closed
//! so that `(-i)^p = e^{-ipπ/2}` is defined; with that choice powers of `i·n`
//! for negative `n` are the conjugates of those for positive `n`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A real fractional order. Positive values differentiate in derivative
/// contexts and integrate in integral contexts; each operation states which.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Order(f64);

impl Order {
    pub const ZERO: Order = Order(0.0);
    pub const ONE: Order = Order(1.0);

    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() {
            Ok(Order(value))
        } else {
            Err(Error::NonFiniteOrder(value))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0.fract() == 0.0
    }

    /// Checks `lo < value <= hi`.
    pub(crate) fn require_in(self, lo: f64, hi: f64, range: &'static str) -> Result<Self> {
        if self.0 > lo && self.0 <= hi {
            Ok(self)
        } else {
            Err(Error::OrderRange { value: self.0, range })
        }
    }
}

impl TryFrom<f64> for Order {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Order::new(value)
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Lanczos coefficients for g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];
const SQRT_2PI: f64 = 2.506_628_274_631_000_5;
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

fn lanczos_sum(x: f64) -> f64 {
    // x is the shifted argument: Γ(x + 1) is being approximated.
    LANCZOS
        .iter()
        .enumerate()
        .skip(1)
        .fold(LANCZOS[0], |acc, (k, &c)| acc + c / (x + k as f64))
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x.fract() == 0.0
}

/// `sin(πx)` with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    let mut r = x - 2.0 * (x / 2.0).round();
    if r > 0.5 {
        r = 1.0 - r;
    } else if r < -0.5 {
        r = -1.0 - r;
    }
    if r == 0.0 {
        0.0
    } else {
        (PI * r).sin()
    }
}

/// `cos(πx)` with exact zeros at the half-integers.
pub fn cos_pi(x: f64) -> f64 {
    sin_pi(x + 0.5)
}

/// Lanczos evaluation valid for `x >= 0.5`; exact factorials at integers.
fn gamma_lanczos(x: f64) -> f64 {
    if x.fract() == 0.0 && x <= 171.0 {
        return (2..x as u32).fold(1.0, |acc, k| acc * k as f64);
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    // Split t^(z+1/2) e^(-t) into two halves so the intermediate does not
    // overflow before the final product near x = 171.
    let half = t.powf(0.5 * (z + 0.5)) * (-0.5 * t).exp();
    SQRT_2PI * lanczos_sum(z) * half * half
}

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if x <= 0.0 || !x.is_finite() {
        return Err(Error::Domain(format!("ln_gamma requires finite x > 0, got {x}")));
    }
    if x < 0.5 {
        // Γ(x) = Γ(x + 1) / x
        return Ok(ln_gamma(x + 1.0)? - x.ln());
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    Ok(LN_SQRT_2PI + (z + 0.5) * t.ln() - t + lanczos_sum(z).ln())
}

/// The gamma function, with reflection below 1/2.
pub fn gamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("gamma of non-finite {x}")));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(x));
    }
    let value = if x >= 0.5 {
        gamma_lanczos(x)
    } else {
        let s = sin_pi(x);
        let reflected = 1.0 - x;
        if reflected < 171.0 {
            PI / (s * gamma_lanczos(reflected))
        } else {
            let ln_mag = PI.ln() - s.abs().ln() - ln_gamma(reflected)?;
            s.signum() * ln_mag.exp()
        }
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow(x))
    }
}

/// `1 / Γ(x)`, an entire function: exactly zero at `0, -1, -2, …`.
///
/// Computed without dividing by `gamma` near the poles so the zeros are exact.
pub fn recip_gamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    if x >= 0.5 {
        if x < 171.0 {
            1.0 / gamma_lanczos(x)
        } else {
            // ln_gamma cannot fail for x >= 0.5
            (-ln_gamma(x).unwrap_or(f64::INFINITY)).exp()
        }
    } else {
        let s = sin_pi(x);
        let reflected = 1.0 - x;
        if reflected < 171.0 {
            s * gamma_lanczos(reflected) / PI
        } else {
            let ln_mag = s.abs().ln() + ln_gamma(reflected).unwrap_or(f64::INFINITY) - PI.ln();
            s.signum() * ln_mag.exp()
        }
    }
}

/// Heaviside step with `H(0) = 1/2`.
pub fn heaviside(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        0.0
    } else {
        0.5
    }
}

/// Argument of `z` normalized into `[-π/2, 3π/2)`.
pub fn branch_arg(z: Complex64) -> f64 {
    let theta = z.im.atan2(z.re);
    if theta < -FRAC_PI_2 {
        theta + 2.0 * PI
    } else {
        theta
    }
}

/// A complex number whose argument and logarithm follow the crate-wide branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchedComplex(pub Complex64);

impl BranchedComplex {
    pub fn new(re: f64, im: f64) -> Self {
        BranchedComplex(Complex64::new(re, im))
    }

    pub fn re(self) -> f64 {
        self.0.re
    }

    pub fn im(self) -> f64 {
        self.0.im
    }

    /// Always in `[-π/2, 3π/2)` for nonzero values.
    pub fn arg(self) -> f64 {
        branch_arg(self.0)
    }

    pub fn ln(self) -> Result<Complex64> {
        if self.0 == Complex64::new(0.0, 0.0) {
            return Err(Error::Domain("logarithm of zero".into()));
        }
        Ok(Complex64::new(self.0.norm().ln(), self.arg()))
    }

    /// `z^p` on branch `k`: `exp(p (ln|z| + i(θ₀ + 2πk)))`. `k = 0` is the
    /// crate-wide branch used by [`cpow_branch`].
    pub fn powf_on_branch(self, p: f64, k: i64) -> Result<Complex64> {
        let z = self.0;
        if z == Complex64::new(0.0, 0.0) {
            return if p > 0.0 {
                Ok(Complex64::new(0.0, 0.0))
            } else {
                Err(Error::Domain(format!("0 raised to non-positive power {p}")))
            };
        }
        if p == 0.0 {
            return Ok(Complex64::new(1.0, 0.0));
        }
        if p.fract() == 0.0 && p.abs() <= 64.0 {
            // integer powers are single valued
            return Ok(z.powi(p as i32));
        }
        let r = z.norm().powf(p);
        if z.re == 0.0 || z.im == 0.0 {
            // on an axis the angle is a whole number of quarter turns; keep
            // the phase in units of π so e.g. (-1)^{1/2} is exactly i
            let quarters = if z.im == 0.0 {
                if z.re > 0.0 { 0.0 } else { 2.0 }
            } else if z.im > 0.0 {
                1.0
            } else {
                -1.0
            };
            let phase = p * (quarters + 4.0 * k as f64) / 2.0;
            return Ok(Complex64::new(r * cos_pi(phase), r * sin_pi(phase)));
        }
        let theta = self.arg() + 2.0 * PI * k as f64;
        Ok(Complex64::from_polar(r, p * theta))
    }

    pub fn powf(self, p: f64) -> Result<Complex64> {
        self.powf_on_branch(p, 0)
    }
}

impl From<Complex64> for BranchedComplex {
    fn from(z: Complex64) -> Self {
        BranchedComplex(z)
    }
}

/// `z^p` with the cut along the negative imaginary axis.
pub fn cpow_branch(z: Complex64, p: f64) -> Result<Complex64> {
    BranchedComplex(z).powf(p)
}

/// `x^p` for a real base, routed through the branch convention when `x < 0`.
pub fn rpow_branch(x: f64, p: f64) -> Result<Complex64> {
    if x > 0.0 {
        Ok(Complex64::new(x.powf(p), 0.0))
    } else {
        cpow_branch(Complex64::new(x, 0.0), p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};

    #[test]
    fn gamma_known_values() {
        assert_eq!(gamma(1.0).unwrap(), 1.0);
        assert_relative_eq!(gamma(0.5).unwrap(), PI.sqrt(), max_relative = 1e-14);
        assert_relative_eq!(gamma(5.0).unwrap(), 24.0, max_relative = 1e-14);
        assert_relative_eq!(gamma(-0.5).unwrap(), -2.0 * PI.sqrt(), max_relative = 1e-14);
    }

    #[test]
    fn gamma_poles_and_overflow() {
        assert_eq!(gamma(0.0), Err(Error::Pole(0.0)));
        assert_eq!(gamma(-3.0), Err(Error::Pole(-3.0)));
        assert_eq!(gamma(172.0), Err(Error::Overflow(172.0)));
        assert!(gamma(171.5).is_ok());
    }

    #[test]
    fn gamma_large_arguments() {
        // 170! = Γ(171)
        let ln_fact: f64 = (1..=170).map(|k| (k as f64).ln()).sum();
        assert_relative_eq!(gamma(171.0).unwrap().ln(), ln_fact, max_relative = 1e-13);
        assert_relative_eq!(ln_gamma(171.0).unwrap(), ln_fact, max_relative = 1e-13);
    }

    #[test]
    fn recip_gamma_zeros_are_exact() {
        assert_eq!(recip_gamma(0.0), 0.0);
        assert_eq!(recip_gamma(-3.0), 0.0);
        assert_eq!(recip_gamma(-170.0), 0.0);
        assert_eq!(recip_gamma(1.0), 1.0);
        assert!(recip_gamma(500.0) == 0.0);
    }

    #[test]
    fn heaviside_convention() {
        assert_eq!(heaviside(3.2), 1.0);
        assert_eq!(heaviside(-0.1), 0.0);
        assert_eq!(heaviside(0.0), 0.5);
    }

    #[test]
    fn cpow_examples() {
        let i = Complex64::new(0.0, 1.0);
        let z = cpow_branch(i, 0.5).unwrap();
        assert_relative_eq!(z.re, FRAC_1_SQRT_2, epsilon = 1e-15);
        assert_relative_eq!(z.im, FRAC_1_SQRT_2, epsilon = 1e-15);

        let z = cpow_branch(Complex64::new(-1.0, 0.0), 0.5).unwrap();
        assert!(z.re.abs() < 1e-15 && (z.im - 1.0).abs() < 1e-15);

        // -i sits on the cut and takes arg = -π/2
        let r = 0.3;
        let z = cpow_branch(-i, r).unwrap();
        let want = Complex64::from_polar(1.0, -r * FRAC_PI_2);
        assert!((z - want).norm() < 1e-15);
        assert_eq!(branch_arg(-i), -FRAC_PI_2);
    }

    #[test]
    fn cpow_zero_base() {
        let zero = Complex64::new(0.0, 0.0);
        assert_eq!(cpow_branch(zero, 0.5).unwrap(), zero);
        assert!(matches!(cpow_branch(zero, 0.0), Err(Error::Domain(_))));
        assert!(matches!(cpow_branch(zero, -1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn branch_enumeration_step() {
        let w = BranchedComplex::new(0.0, 1.0);
        let k1 = w.powf_on_branch(0.5, 1).unwrap();
        assert!((k1 - Complex64::from_polar(1.0, 5.0 * FRAC_PI_4)).norm() < 1e-15);
    }

    #[test]
    fn order_rejects_non_finite() {
        assert!(Order::new(f64::NAN).is_err());
        assert!(Order::new(f64::INFINITY).is_err());
        assert_eq!(Order::new(0.5).unwrap().value(), 0.5);
    }

    #[test]
    fn sin_pi_exact_zeros() {
        for k in -10..=10 {
            assert_eq!(sin_pi(k as f64), 0.0);
        }
        assert_relative_eq!(sin_pi(0.5), 1.0);
        assert_relative_eq!(sin_pi(-2.5), -1.0);
    }
}
