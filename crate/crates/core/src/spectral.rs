//! Fractional Fourier series on the torus and the fractional delta series.
//!
//! Coefficients are normalised so that `f(x) = Σ c_n e^{inx}`, and a
//! fractional derivative of order β multiplies `c_n` by `(in)^β` evaluated with
//! [`cpow_branch`]. Under that branch `(in)^β` for `n < 0` is the conjugate
//! of `(i|n|)^β`, so real functions keep conjugate-symmetric spectra.

use std::f64::consts::PI;
use std::io::Write;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Checked, Error, Result, Warning};
use crate::grid::{csv_writer, GridFunction};
use crate::numeric::{cpow_branch, Order};

/// Largest `|c_0|` accepted when integrating (β < 0).
pub const CONSTANT_MODE_TOLERANCE: f64 = 1e-12;

/// Coefficients `c_n` for `n ∈ [-N, N]`.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierSpectrum {
    max_index: usize,
    coeffs: Vec<Complex64>,
}

impl FourierSpectrum {
    /// `coeffs[k]` holds `c_{k - N}`.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len().is_multiple_of(2) {
            return Err(Error::InvalidGrid(format!(
                "a spectrum needs 2N+1 coefficients, got {}",
                coeffs.len()
            )));
        }
        if coeffs.iter().any(|c| !(c.re.is_finite() && c.im.is_finite())) {
            return Err(Error::Domain("spectrum coefficients must be finite".into()));
        }
        Ok(FourierSpectrum { max_index: coeffs.len() / 2, coeffs })
    }

    pub fn zeros(max_index: usize) -> Self {
        FourierSpectrum { max_index, coeffs: vec![Complex64::new(0.0, 0.0); 2 * max_index + 1] }
    }

    /// Spectrum with the listed `(n, c_n)` entries set and all others zero.
    pub fn from_modes(max_index: usize, modes: &[(i64, Complex64)]) -> Result<Self> {
        let mut s = FourierSpectrum::zeros(max_index);
        for &(n, c) in modes {
            if n.unsigned_abs() as usize > max_index {
                return Err(Error::Domain(format!("mode {n} outside [-{max_index}, {max_index}]")));
            }
            s.coeffs[(n + max_index as i64) as usize] = c;
        }
        FourierSpectrum::new(s.coeffs)
    }

    pub fn max_index(&self) -> usize {
        self.max_index
    }

    pub fn get(&self, n: i64) -> Complex64 {
        if n.unsigned_abs() as usize > self.max_index {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[(n + self.max_index as i64) as usize]
        }
    }

    /// `(n, c_n)` pairs from `-N` to `N`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        let n0 = self.max_index as i64;
        self.coeffs.iter().enumerate().map(move |(k, &c)| (k as i64 - n0, c))
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// `Σ |c_n|²`.
    pub fn energy(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    /// Largest `|c_{-n} - conj(c_n)|`.
    pub fn conjugate_asymmetry(&self) -> f64 {
        (1..=self.max_index as i64)
            .map(|n| (self.get(-n) - self.get(n).conj()).norm())
            .fold(0.0, f64::max)
    }

    /// Writes the `n,re,im` CSV schema.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv_writer(out);
        w.write_record(["n", "re", "im"])?;
        for (n, c) in self.iter() {
            w.write_record([n.to_string(), c.re.to_string(), c.im.to_string()])?;
        }
        w.flush().map_err(|e| Error::Csv(e.to_string()))?;
        Ok(())
    }
}

/// Fourier coefficients of one period sampled uniformly, by the periodic
/// trapezoid rule `c_n = (1/2π) Σ f(x_j) e^{-inx_j} h`.
pub fn analyze(f: &GridFunction, max_index: usize) -> Result<Checked<FourierSpectrum>> {
    let m = f.len();
    let period = m as f64 * f.step();
    if (period - 2.0 * PI).abs() > 1e-9 * 2.0 * PI {
        return Err(Error::InvalidGrid(format!(
            "analysis grid must cover one period [x0, x0 + 2π) with the endpoint excluded; \
             {m} samples x {} span {period}",
            f.step()
        )));
    }
    let mut warnings = Vec::new();
    let nyquist = (m - 1) / 2;
    if max_index > nyquist {
        warnings.push(Warning::Aliasing { requested: max_index, nyquist });
    }
    let h = f.step();
    let n0 = max_index as i64;
    let coeffs: Vec<Complex64> = (-n0..=n0)
        .into_par_iter()
        .map(|n| {
            let sum: Complex64 = f
                .xs()
                .zip(f.values())
                .map(|(x, &v)| v * Complex64::from_polar(1.0, -(n as f64) * x))
                .sum();
            sum * (h / (2.0 * PI))
        })
        .collect();
    Ok(Checked { value: FourierSpectrum::new(coeffs)?, warnings })
}

/// `(in)^β`, the symbol of a fractional derivative of order β.
pub fn mode_multiplier(n: i64, beta: f64) -> Result<Complex64> {
    cpow_branch(Complex64::new(0.0, n as f64), beta)
}

/// `d_n = (in)^β c_n`. Derivatives (β > 0) annihilate the constant mode;
/// integrals (β < 0) require `c_0 = 0`.
pub fn frac_coeffs(spec: &FourierSpectrum, beta: Order) -> Result<FourierSpectrum> {
    let b = beta.value();
    let c0 = spec.get(0);
    if b < 0.0 && c0.norm() > CONSTANT_MODE_TOLERANCE {
        return Err(Error::ConstantMode(c0.norm()));
    }
    let coeffs = spec
        .iter()
        .map(|(n, c)| {
            if n == 0 {
                Ok(if b == 0.0 { c } else { Complex64::new(0.0, 0.0) })
            } else {
                Ok(mode_multiplier(n, b)? * c)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    FourierSpectrum::new(coeffs)
}

/// `Σ_{n=-N}^{N} c_n e^{inx}`.
pub fn synthesize(spec: &FourierSpectrum, x: f64) -> Complex64 {
    spec.iter().map(|(n, c)| c * Complex64::from_polar(1.0, n as f64 * x)).sum()
}

/// Partial sum `Σ_{0<|n|≤N} (in)^α e^{inx}` plus the `n = 0` term (1 when
/// α = 0, else 0). At α = 0 this is the Dirichlet kernel.
pub fn delta_series_partial(alpha: Order, max_index: usize, x: f64) -> Result<Complex64> {
    if max_index < 1 {
        return Err(Error::Domain("delta series needs N >= 1".into()));
    }
    let a = alpha.value();
    let mut acc = if a == 0.0 { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) };
    for n in 1..=max_index as i64 {
        let up = mode_multiplier(n, a)?;
        let down = mode_multiplier(-n, a)?;
        acc += up * Complex64::from_polar(1.0, n as f64 * x)
            + down * Complex64::from_polar(1.0, -(n as f64) * x);
    }
    Ok(acc)
}

/// `(1/2π) ∫_T φ(t) δ_N^{(α)}(x - t) dt` with the periodic trapezoid rule on
/// φ's grid, which must cover one period.
pub fn pair_delta_series(
    phi: &GridFunction,
    alpha: Order,
    max_index: usize,
    x: f64,
) -> Result<Complex64> {
    let period = phi.len() as f64 * phi.step();
    if (period - 2.0 * PI).abs() > 1e-9 * 2.0 * PI {
        return Err(Error::InvalidGrid("pairing grid must cover exactly one period".into()));
    }
    let kernel: Vec<Complex64> = phi
        .xs()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&t| delta_series_partial(alpha, max_index, x - t))
        .collect::<Result<_>>()?;
    let sum: Complex64 = phi.values().iter().zip(&kernel).map(|(p, k)| p * k).sum();
    Ok(sum * (phi.step() / (2.0 * PI)))
}

/// One period `[0, 2π)` sampled at `m` points, endpoint excluded.
pub fn periodic_grid(m: usize, f: impl Fn(f64) -> Complex64) -> Result<GridFunction> {
    GridFunction::from_fn(0.0, 2.0 * PI / m as f64, m, f)
}
