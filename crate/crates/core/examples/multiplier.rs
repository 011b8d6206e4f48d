//! Fourier transform of a grid derivative against the `(iω)^α` multiplier,
//! and the differintegral Laplacian symbol next to `|ω|^{2α}`.
//!
//!     cargo run --example multiplier [report.csv]

use std::fs::File;

use fracwave::ftmult::{laplacian_multiplier_compare, multiplier_check, write_report};
use fracwave::{GridFunction, Order};
use num_complex::Complex64;

fn bump(t: f64) -> f64 {
    let s = t - 2.0;
    if s.abs() < 1.0 {
        (-1.0 / (1.0 - s * s)).exp()
    } else {
        0.0
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = std::env::args().nth(1).unwrap_or_else(|| "multiplier.csv".into());
    // long tail: fractional derivatives of compact data decay only algebraically
    let f = GridFunction::with_step(0.0, 40.0, 2.5e-3, |t| Complex64::new(bump(t), 0.0))?;
    let omegas: Vec<f64> = (0..=12).map(|k| 1.0 + 0.25 * k as f64).collect();

    let rows = multiplier_check(&f, Order::new(0.5)?, &omegas)?;
    for w in &rows.warnings {
        eprintln!("warning: {w}");
    }
    println!("omega   relerr (alpha = 0.5)");
    for r in &rows.value {
        println!("{:5.2}   {:.2e}", r.omega, r.relerr);
    }
    write_report(&rows.value, File::create(&out)?)?;
    println!("wrote {out}\n");

    println!("alpha  -(i2)^(2a)          |2|^(2a)");
    for a in [0.25, 0.5, 0.75, 1.0] {
        let (ours, classical) = laplacian_multiplier_compare(2.0, Order::new(a)?)?;
        println!("{a:4}   {ours:18.5}  {classical:8.5}");
    }
    Ok(())
}
