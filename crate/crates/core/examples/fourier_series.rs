//! Fractional differintegration of a Fourier series: a square wave and its
//! half integral, spectrum written to `square_spectrum.csv`.
//!
//!     cargo run --example fourier_series [out.csv]

use std::fs::File;

use fracwave::spectral::{analyze, frac_coeffs, periodic_grid, synthesize};
use fracwave::Order;
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = std::env::args().nth(1).unwrap_or_else(|| "square_spectrum.csv".into());
    // zero-mean square wave; the n = 0 mode has no fractional counterpart
    let square = periodic_grid(4096, |x| Complex64::new(if x < std::f64::consts::PI { 1.0 } else { -1.0 }, 0.0))?;
    let spec = analyze(&square, 64)?;
    for w in &spec.warnings {
        eprintln!("warning: {w}");
    }
    let spec = spec.value;
    println!("energy {:.4}, conjugate asymmetry {:.1e}", spec.energy(), spec.conjugate_asymmetry());

    // the order is a derivative order: negative integrates
    let half = frac_coeffs(&spec, Order::new(-0.5)?)?;
    let deriv = frac_coeffs(&spec, Order::new(0.5)?)?;
    println!("\n   x     square   S^0.5 square   D^0.5 square");
    for k in 0..8 {
        let x = 0.1 + k as f64 * 0.8;
        println!(
            "{x:5.2}  {:7.3}  {:13.4}  {:13.4}",
            synthesize(&spec, x).re,
            synthesize(&half, x).re,
            synthesize(&deriv, x).re
        );
    }

    half.write_csv(File::create(&out)?)?;
    println!("\nwrote {out}");
    Ok(())
}
