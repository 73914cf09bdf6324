//! Checking the calculus laws on a derivation/integration pair, and what a
//! violation looks like.

use ftc_core::calculus::{self, polynomial_pair};
use ftc_core::instances::ftc_instance;
use ftc_core::{Error, Ring, Sampler};

fn main() -> Result<(), Error> {
    let sampler = Sampler::new(0, 500);

    let pair = polynomial_pair(&Ring::Rationals);
    let x = pair.algebra_carrier().parse("x^3 + 2*x")?;
    println!("D(x^3 + 2*x)       = {}", pair.module_carrier().format(&pair.d(&x)?));
    println!("P(x^3 + 2*x)       = {}", pair.algebra_carrier().format(&pair.p(&x)?));
    println!("E(x^3 + 2*x + 5)   = {}", pair.algebra_carrier().format(&pair.e(&pair.algebra_carrier().parse("x^3 + 2*x + 5")?)?));
    for report in calculus::check_all(&pair, &sampler)? {
        println!("  {}", report.summary());
    }

    for name in ["zero-integration", "zero-both", "poly-mut-p-shift"] {
        let pair = ftc_instance(name, 12, &sampler)?;
        println!("{name}:");
        for report in calculus::check_all(&pair, &sampler)? {
            println!("  {}", report.summary());
        }
        let eq = calculus::check_ftc2_equivalence(&pair, &sampler)?;
        println!("  ({})", eq.summary());
    }
    Ok(())
}
