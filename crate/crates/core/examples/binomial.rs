//! Generalized binomial expansion of `(∂_x + ∂_t)^β` on exponential
//! symbols, with the truncation error per term count.
//!
//!     cargo run --example binomial

use fracwave::wave_uv::{binomial_coeff, binomial_operator_check};
use fracwave::Order;
use num_complex::Complex64;

fn main() -> fracwave::Result<()> {
    let beta = Order::new(0.5)?;
    print!("C(0.5, k):");
    for k in 0..6 {
        print!(" {:.5}", binomial_coeff(beta, k));
    }
    println!();

    let (a, b) = (Complex64::new(2.0, 1.0), Complex64::new(0.5, -0.3));
    for terms in [2, 5, 10, 20, 40] {
        let c = binomial_operator_check(a, b, beta, terms)?;
        println!("K = {terms:2}: relerr {:.2e}", c.relerr);
    }
    match binomial_operator_check(b, a, beta, 40) {
        Ok(_) => println!("|b| > |a| converged"),
        Err(e) => println!("|b| > |a|: {e}"),
    }
    Ok(())
}
