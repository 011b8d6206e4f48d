//! The differintegrated delta series `Σ (in)^α e^{inx}` paired with a
//! periodic test function, converging to the order-α derivative of φ as N grows.
//!
//!     cargo run --example delta_series

use fracwave::spectral::{analyze, frac_coeffs, pair_delta_series, periodic_grid, synthesize};
use fracwave::Order;
use num_complex::Complex64;

fn main() -> fracwave::Result<()> {
    let phi = periodic_grid(2048, |x| Complex64::new((x.cos()).exp() - 1.266_065_877_752_008_4, 0.0))?;
    let x = 1.0;
    for a in [0.0, 0.5, 1.0] {
        let alpha = Order::new(a)?;
        // reference: the same order applied mode-by-mode
        let spec = analyze(&phi, 128)?.value;
        let want = synthesize(&frac_coeffs(&spec, alpha)?, x);
        println!("alpha = {a}: target {want:.8}");
        for n in [4, 8, 16, 32] {
            let got = pair_delta_series(&phi, alpha, n, x)?;
            println!("  N = {n:2}  |error| = {:.2e}", (got - want).norm());
        }
    }
    Ok(())
}
