//! Zinbiel products: the shuffle Zinbiel algebra and the product an
//! integration induces, x ◁ y = x·P(y).

use ftc_core::calculus::polynomial_pair;
use ftc_core::zinbiel::{self, shuffle_zinbiel, symmetrized_product, zinbiel_from_integration};
use ftc_core::{Error, Ring, Sampler};

fn main() -> Result<(), Error> {
    let sampler = Sampler::new(0, 300);
    let q = Ring::Rationals;

    let sh = shuffle_zinbiel(&q, 3);
    let c = sh.module_carrier();
    let (v, w) = (c.parse("[0,1]")?, c.parse("[2]")?);
    println!("[0,1] ◁ [2] = {}", c.format(&sh.zin(&v, &w)?));
    println!("[0,1] ∗ [2] = {}", c.format(&symmetrized_product(&sh, &v, &w)?));

    let pair = polynomial_pair(&q);
    let z = zinbiel_from_integration(&pair.integration, &pair.action, &sampler)?;
    let c = z.module_carrier();
    for (m, n) in [(2, 3), (1, 1), (0, 4)] {
        let (a, b) = (c.parse(&format!("x^{m}"))?, c.parse(&format!("x^{n}"))?);
        println!(
            "x^{m} ◁ x^{n} = {:<10} x^{m} ∗ x^{n} = {}",
            c.format(&z.zin(&a, &b)?),
            c.format(&symmetrized_product(&z, &a, &b)?)
        );
    }
    for report in zinbiel::check_zinbiel(&z, &sampler)? {
        println!("  {}", report.summary());
    }
    Ok(())
}
