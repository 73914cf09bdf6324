//! Passing between pairs and Zinbiel algebras: F, G, the unit η and counit
//! ε, and which pairs are augmented.

use ftc_core::calculus::{self, hurwitz_pair, polynomial_pair};
use ftc_core::equivalence::{self, eta, eta_inv, functor_f, functor_g};
use ftc_core::instances::dual_numbers;
use ftc_core::zinbiel::shuffle_zinbiel;
use ftc_core::{Carrier, Error, Ring, Sampler};

fn main() -> Result<(), Error> {
    let sampler = Sampler::new(0, 300);
    let q = Ring::Rationals;

    let pair = polynomial_pair(&q);
    let gf = functor_g(&functor_f(&pair, &sampler)?, &sampler)?;
    let (e, ei) = (eta(&pair, &gf), eta_inv(&pair, &gf));
    let a = pair.algebra_carrier().parse("x^2 + 3")?;
    let image = e.f.apply(&a)?;
    println!("η(x^2 + 3)         = {}", gf.algebra_carrier().format(&image));
    println!("η⁻¹(η(x^2 + 3))    = {}", pair.algebra_carrier().format(&ei.f.apply(&image)?));
    println!("  {}", equivalence::check_roundtrip_ftc(&pair, &sampler)?.summary());

    let z = shuffle_zinbiel(&q, 2);
    let g = functor_g(&z, &sampler)?;
    println!("G(Sh+): {} ⇄ {}", g.algebra.name(), g.module.name());
    for r in calculus::check_all(&g, &sampler)? {
        println!("  {}", r.summary());
    }
    println!("  {}", equivalence::check_roundtrip_zin(&z, &sampler)?.summary());

    for pair in [polynomial_pair(&q), hurwitz_pair(Carrier::Algebra(dual_numbers()))] {
        let c = equivalence::check_augmented_correspondence(&pair, &sampler)?;
        println!(
            "{}: augmented = {}, constants of rank {}",
            pair.name,
            c.augmented.holds(),
            c.kernel_rank
        );
    }
    Ok(())
}
