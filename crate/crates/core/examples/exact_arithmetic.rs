//! Exact scalars over Q, Z and Z/m, and where inversion fails.

use ftc_core::{Error, Ring};

fn main() -> Result<(), Error> {
    let q = Ring::Rationals;
    let a = q.ratio(6, -4)?;
    println!("6/-4 over Q      = {a}");
    println!("(-3/2)^-1        = {}", a.invert()?);

    let z7 = Ring::modular(7)?;
    println!("3^-1 over Z/7    = {}", z7.int(3).invert()?);

    for (ring, n) in [(Ring::Integers, 2), (Ring::modular(6)?, 3)] {
        match ring.int(n).invert() {
            Err(e) => println!("{n}^-1 over {ring:<4} -> {e}"),
            Ok(x) => println!("{n}^-1 over {ring:<4} = {x}"),
        }
    }

    // Coefficients grow quickly; there is no overflow.
    let mut f = q.one();
    for k in 1..=30 {
        f = f.checked_mul(&q.int(k))?;
    }
    println!("30!              = {f}");
    Ok(())
}
