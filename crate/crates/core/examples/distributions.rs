//! Pairing δ and the unit step with differintegrated test functions.
//!
//!     cargo run --example distributions

use fracwave::differint::{distribution_pair, pairing_phase, DistributionRep};
use fracwave::{GridFunction, Order};
use num_complex::Complex64;

fn bump(x: f64) -> f64 {
    let s = x - 2.0;
    if s.abs() < 1.0 {
        (-1.0 / (1.0 - s * s)).exp()
    } else {
        0.0
    }
}

fn main() -> fracwave::Result<()> {
    let phi = GridFunction::with_step(0.0, 4.0, 1e-3, |x| Complex64::new(bump(x), 0.0))?;

    println!("alpha   phase            <delta_2^(-a), phi>      <H_1^(-a), phi>");
    for a in [-1.0, -0.5, 0.0, 0.5, 1.0] {
        let alpha = Order::new(a)?;
        let d = distribution_pair(&DistributionRep::dirac(2.0), alpha, &phi)?;
        let h = distribution_pair(&DistributionRep::Heaviside { location: 1.0 }, alpha, &phi)?;
        for w in d.warnings.iter().chain(&h.warnings) {
            eprintln!("warning: {w}");
        }
        println!("{a:5.1}  {:15.6}  {:22.6}  {:20.6}", pairing_phase(alpha), d.value, h.value);
    }

    // the step's derivative is δ, so at α = -1 the step pairs to φ at its jump
    let step = distribution_pair(&DistributionRep::Heaviside { location: 1.5 }, Order::new(-1.0)?, &phi)?.value;
    println!("\nH'_1.5 against phi: {:.6}, phi(1.5) = {:.6}", step.re, bump(1.5));
    Ok(())
}
