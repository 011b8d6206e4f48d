//! Fourier-multiplier form of the differintegral.
//!
//! Transform convention: `F[f](ω) = (1/√2π) ∫ f(t) e^{-iωt} dt`. For the
//! derivative of order α the multiplier is `(iω)^α` on the crate branch.
//!
//! The grid operator starts at the grid's first node, so the multiplier
//! identity only holds up to the contribution of the derivative's algebraic
//! tail beyond the grid end (and of data before the base point, if any).

use std::f64::consts::PI;
use std::io::Write;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::differint::{differintegral, SUPPORT_TOLERANCE};
use crate::error::{Checked, Error, Result, Warning};
use crate::grid::{csv_writer, trapezoid, GridFunction};
use crate::numeric::{cpow_branch, Order};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FtSample {
    pub omega: f64,
    pub value: Complex64,
}

/// One row of a multiplier report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultiplierRow {
    pub omega: f64,
    /// Transform of the grid derivative.
    pub lhs: Complex64,
    /// `(iω)^α` times the transform of `f`.
    pub rhs: Complex64,
    pub relerr: f64,
}

fn support_warnings(f: &GridFunction) -> Vec<Warning> {
    let ratio = f.edge_ratio();
    if ratio > SUPPORT_TOLERANCE {
        vec![Warning::SupportViolation { edge_ratio: ratio }]
    } else {
        Vec::new()
    }
}

fn transform(f: &GridFunction, omega: f64, sign: f64) -> Complex64 {
    let prod: Vec<Complex64> = f
        .xs()
        .zip(f.values())
        .map(|(t, &v)| v * Complex64::from_polar(1.0, sign * omega * t))
        .collect();
    trapezoid(&prod, f.step()) / (2.0 * PI).sqrt()
}

/// `(1/√2π) Σ f(t_j) e^{-iωt_j} h` by the trapezoid rule.
pub fn ft_quadrature(f: &GridFunction, omega: f64) -> Checked<FtSample> {
    Checked {
        value: FtSample { omega, value: transform(f, omega, -1.0) },
        warnings: support_warnings(f),
    }
}

/// Inverse transform of samples on an ω grid, `(1/√2π) ∫ F(ω) e^{iωt} dω`.
pub fn ift_quadrature(spectrum: &GridFunction, t: f64) -> Checked<Complex64> {
    Checked { value: transform(spectrum, t, 1.0), warnings: support_warnings(spectrum) }
}

/// Compares the transform of the order-α grid derivative of `f` with
/// `(iω)^α F[f](ω)` at each frequency.
pub fn multiplier_check(
    f: &GridFunction,
    alpha: Order,
    omegas: &[f64],
) -> Result<Checked<Vec<MultiplierRow>>> {
    let a = alpha.value();
    if !(0.0..=1.0).contains(&a) {
        return Err(Error::OrderRange { value: a, range: "[0, 1]" });
    }
    let deriv = differintegral(f, Order::new(-a)?)?;
    let mut warnings = support_warnings(f);
    warnings.extend(support_warnings(&deriv));
    warnings.dedup();

    let rows = omegas
        .par_iter()
        .map(|&omega| {
            let lhs = transform(&deriv, omega, -1.0);
            let rhs = cpow_branch(Complex64::new(0.0, omega), a)? * transform(f, omega, -1.0);
            let relerr = (lhs - rhs).norm() / rhs.norm();
            Ok(MultiplierRow { omega, lhs, rhs, relerr })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Checked { value: rows, warnings })
}

/// Writes the `omega,lhs_re,lhs_im,rhs_re,rhs_im,relerr` report.
pub fn write_report<W: Write>(rows: &[MultiplierRow], out: W) -> Result<()> {
    let mut w = csv_writer(out);
    w.write_record(["omega", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "relerr"])?;
    for r in rows {
        w.write_record([
            r.omega.to_string(),
            r.lhs.re.to_string(),
            r.lhs.im.to_string(),
            r.rhs.re.to_string(),
            r.rhs.im.to_string(),
            r.relerr.to_string(),
        ])?;
    }
    w.flush().map_err(|e| Error::Csv(e.to_string()))?;
    Ok(())
}

/// `(-(iω)^{2α}, |ω|^{2α})`: the differintegral's Laplacian symbol next to
/// the classical fractional Laplacian symbol. They agree only at integer α.
pub fn laplacian_multiplier_compare(omega: f64, alpha: Order) -> Result<(Complex64, f64)> {
    if omega == 0.0 || !omega.is_finite() {
        return Err(Error::Domain(format!("laplacian symbol needs finite nonzero ω, got {omega}")));
    }
    let a = alpha.value();
    let ours = -cpow_branch(Complex64::new(0.0, omega), 2.0 * a)?;
    Ok((ours, omega.abs().powf(2.0 * a)))
}
