//! The carrier algebras: shuffles, the mixable shuffle of a free
//! Rota-Baxter algebra, Hurwitz series and polynomials.

use ftc_core::carrier::tensor::shuffle_product_oracle;
use ftc_core::instances::default_rb_algebra;
use ftc_core::{Carrier, Error, Ring};

fn main() -> Result<(), Error> {
    let q = Ring::Rationals;

    let sh = Carrier::shuffle(q.clone(), 3);
    let (u, v) = (sh.parse("[0,1]")?, sh.parse("[2] + 1/2*1")?);
    println!("[0,1] ⧢ ([2] + 1/2)   = {}", sh.format(&sh.mul(&u, &v)?));
    let oracle = shuffle_product_oracle(&q, 3, &[0, 1], &[0, 1])?;
    println!("[0,1] ⧢ [0,1]         = {}", sh.format(&ftc_core::Element::Tensor(oracle)));

    // Letters are y^0..y^3 in Q[y]/(y^4): heads multiply, tails shuffle.
    let rb = Carrier::free_rota_baxter(default_rb_algebra());
    let (s, t) = (rb.parse("[1,0]")?, rb.parse("[2]")?);
    println!("[y,1] ⋄ [y^2]         = {}", rb.format(&rb.mul(&s, &t)?));
    match rb.mul(&rb.parse("[2]")?, &rb.parse("[3]")?) {
        Ok(x) => println!("[y^2] ⋄ [y^3]         = {}", rb.format(&x)),
        Err(e) => println!("[y^2] ⋄ [y^3]         -> {e}"),
    }

    let h = Carrier::hurwitz(Carrier::Scalars(Ring::Integers));
    let (f, g) = (h.parse("(1, 2, 3)")?, h.parse("(4, 5, 6)")?);
    println!("(1, 2, 3)(4, 5, 6)    = {}", h.format(&h.mul(&f, &g)?));

    let p = Carrier::Polynomial(q);
    let a = p.parse("3/2*x^2 + 1")?;
    println!("(3/2*x^2 + 1)^2       = {}", p.format(&p.mul(&a, &a)?));
    Ok(())
}
