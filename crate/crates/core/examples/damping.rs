//! The `x,t` form `∂_t^β f = ∂_x^α f`: branches of `ω^α`, exponential modes
//! and the damped or growing sine solution.
//!
//!     cargo run --example damping

use fracwave::field::Axis;
use fracwave::wave_xt::{amplitude_law, column_amplitude, damping_classify, mode, omega_powers, sin_field};
use fracwave::Order;
use num_complex::Complex64;

fn main() -> fracwave::Result<()> {
    let i = Complex64::new(0.0, 1.0);
    let roots = omega_powers(i, 1.0 / 3.0, -1..=1)?;
    println!("branches of i^(1/3):");
    for k in roots.branches.clone() {
        println!("  k = {k:2}: {:.6}", roots.get(k).unwrap());
    }

    let (a, b) = (Order::new(0.5)?, Order::new(1.0)?);
    println!("\nmode e^(w^a t + w^b x) at w = 2: {:.6}", mode(Complex64::new(2.0, 0.0), a, b, 0, 0, 0.3, 0.2)?.unwrap());

    let x = Axis::linspace(0.0, 4.0 * std::f64::consts::PI, 201)?;
    let t = Axis::linspace(0.0, 4.0, 5)?;
    for ratio in [0.5, 1.0, 1.5] {
        let alpha = Order::new(ratio)?;
        let field = sin_field(alpha, b, x, t)?;
        println!("\nalpha/beta = {ratio}: {:?}", damping_classify(alpha, b)?);
        for it in 0..t.count {
            let tt = t.at(it);
            println!(
                "  t = {tt:.1}: measured amplitude {:>10}, law {:.6}",
                column_amplitude(&field, it).map_or("masked".into(), |v| format!("{v:.6}")),
                amplitude_law(alpha, b, tt)?
            );
        }
    }
    Ok(())
}
