//! Fractional wave equation in light-cone variables: the fundamental
//! solution and the initial-value solver with `g = sin`, `h = cos`.
//!
//!     cargo run --example light_cone

use fracwave::wave_uv::{eta_ode_oracle, fundamental_solution, ICPair, IvpSolver};
use fracwave::Order;

fn main() -> fracwave::Result<()> {
    let (alpha, beta) = (Order::new(0.75)?, Order::new(0.75)?);

    println!("fundamental solution, alpha = beta = 0.75");
    for (x, t) in [(2.0, 1.0), (1.0, 2.0), (3.0, 0.5)] {
        match fundamental_solution(alpha, beta, x, t) {
            Some(v) => println!("  ({x}, {t}) -> {v:.6}"),
            None => println!("  ({x}, {t}) -> singular"),
        }
    }

    let ic = ICPair::from_fns(20.0, 1e-3, f64::sin, f64::cos, f64::cos)?;
    let solver = IvpSolver::new(alpha, beta, &ic)?;
    let oracle = eta_ode_oracle(alpha, beta, &ic)?;
    println!("\neta against an independent ODE integration (y > 0):");
    for y in [0.5, 1.0, 3.0, 10.0] {
        let eta = solver.eta(y)?.expect("outside the excluded neighbourhood").re;
        println!("  y = {y:4}: {eta:.6} vs {:.6}", oracle.interpolate(y)?.re);
    }

    println!("\nf(x, t) inside the cone x > |t|:");
    for (x, t) in [(2.0, 0.0), (2.0, 0.5), (3.0, 1.0), (5.0, 4.0)] {
        let f = solver.eval(x, t)?;
        println!("  ({x}, {t}) -> {}", f.map_or("masked".into(), |v| format!("{v:.6}")));
    }
    println!("  f(x, 0) recovers sin: f(2, 0) - sin 2 = {:.1e}", solver.eval(2.0, 0.0)?.unwrap().re - 2f64.sin());
    Ok(())
}
