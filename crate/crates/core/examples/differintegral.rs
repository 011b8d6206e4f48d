//! S^α on a grid: half integrals, the index law and the kernel.
//!
//!     cargo run --example differintegral

use std::f64::consts::PI;

use fracwave::differint::{differintegral, kernel_delta, zero_function};
use fracwave::{GridFunction, Order};
use num_complex::Complex64;

fn main() -> fracwave::Result<()> {
    let half = Order::new(0.5)?;
    let one = GridFunction::with_step(0.0, 1.0, 1e-3, |_| Complex64::new(1.0, 0.0))?;

    // S^{1/2} 1 = 2 sqrt(x/π)
    let s = differintegral(&one, half)?;
    println!("S^0.5 of 1 at x = 1: {:.6} (exact {:.6})", s.values()[s.len() - 1].re, 2.0 / PI.sqrt());

    // two half integrals make one whole integral
    let twice = differintegral(&s, half)?;
    let whole = differintegral(&one, Order::ONE)?;
    println!("sup |S^0.5 S^0.5 1 - S^1 1| = {:.2e}", twice.sup_distance(&whole));

    // and the half derivative undoes the half integral
    let sine = GridFunction::with_step(0.0, 2.0, 1e-3, |x| Complex64::new(x.sin(), 0.0))?;
    let back = differintegral(&differintegral(&sine, half)?, Order::new(-0.5)?)?;
    println!("sup |D^0.5 S^0.5 sin - sin| = {:.2e}", back.sup_distance(&sine));

    println!("\n   x   kernel(0.5)  zero(-1)  zero(0.5)");
    for x in [0.25, 1.0, 4.0] {
        println!(
            "{x:5.2}  {:10.6}  {:8.3}  {:9.6}",
            kernel_delta(half, x)?,
            zero_function(Order::new(-1.0)?, x)?,
            zero_function(half, x)?
        );
    }
    Ok(())
}
