//! Building pairs: from an integration, from a derivation with a constant
//! projector (solving K⁻¹ degree by degree), and from a JSON spec.

use ftc_core::calculus;
use ftc_core::constructions::{free_rota_baxter, ftc_from_derivation, ftc_from_integration, polynomial_derivation_input, InstanceSpec};
use ftc_core::instances::default_rb_algebra;
use ftc_core::{Error, Ring, Sampler};

fn main() -> Result<(), Error> {
    let sampler = Sampler::new(0, 200);
    let q = Ring::Rationals;

    let (rb, p, action) = free_rota_baxter(default_rb_algebra());
    let pair = ftc_from_integration(&p, &action, &sampler)?;
    println!("{}: {} ⇄ {}", pair.name, pair.algebra.name(), pair.module.name());
    let w = rb.parse("[1,2]")?;
    println!("  P([y,y^2]) = {}", pair.algebra_carrier().format(&pair.p(&w)?));

    let pair = ftc_from_derivation(&polynomial_derivation_input(&q), &sampler)?;
    let m = pair.module_carrier();
    for n in [1, 2, 5] {
        let x = m.parse(&format!("x^{n}"))?;
        println!("  L(x^{n}) = {:<8} P(x^{n}) = {}", m.format(&pair.d(&x)?), m.format(&pair.p(&x)?));
    }
    for r in calculus::check_all(&pair, &sampler)? {
        println!("  {}", r.summary());
    }

    let z3 = Ring::modular(3)?;
    match ftc_from_derivation(&polynomial_derivation_input(&z3), &sampler) {
        Err(e) => println!("over Z/3: {e}"),
        Ok(_) => println!("over Z/3: built"),
    }

    let spec = InstanceSpec::parse(r#"{"construction": "diff-algebra", "carrier": "hurwitz", "degreeBound": 8}"#)?;
    let pair = spec.build(&sampler)?;
    println!("from spec: {}", pair.name);
    for r in calculus::check_all(&pair, &sampler)? {
        println!("  {}", r.summary());
    }
    Ok(())
}
