//! Wedge, contractions and the geometric product on Witt generators.

use hyclif::products::{bilinear, lcontract, rcontract};
use hyclif::AlgebraContext;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = AlgebraContext::new(2)?;
    let (e1, e2, t1, t2) = (ctx.e(1), ctx.e(2), ctx.t(1), ctx.t(2));

    println!("t1 e1         = {}", &t1 * &e1);
    println!("e1 t1 + t1 e1 = {}", &(&e1 * &t1) + &(&t1 * &e1));
    println!("e1 e2 + e2 e1 = {}", &(&e1 * &e2) + &(&e2 * &e1));

    let b = &e1 ^ &e2;
    let f = &t2 ^ &t1;
    println!("B = {b}, F = {f}");
    println!("<B, F>  = {}", bilinear(&b, &f)?);
    println!("t1 _| B = {}", lcontract(&t1, &b)?);
    println!("B |_ t2 = {}", rcontract(&b, &t2)?);
    println!("B F     = {}", &b * &f);
    Ok(())
}
