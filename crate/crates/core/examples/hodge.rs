//! Hodge star, the Poincare isomorphisms and the contraction differential.

use hyclif::duality::{differential_apply, hodge, hodge_inv, poincare_iso, SharpDirection};
use hyclif::hyperbolic::{orientation_sigma, Vecfor};
use hyclif::AlgebraContext;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=3 {
        let ctx = AlgebraContext::new(n)?;
        let sigma = orientation_sigma(&ctx);
        println!("n={n}: sigma = {sigma}, !sigma = {}, sigma^2 = {}", hodge(&sigma), &sigma * &sigma);
    }

    let ctx = AlgebraContext::new(2)?;
    let u = &ctx.e(1) ^ &ctx.t(2);
    println!("!({u}) = {}", hodge(&u));
    println!("!!(!({u})) = {}", hodge_inv(&hodge(&u)));

    let form = ctx.t(1);
    let vector = ctx.e(2);
    println!("D_#(t1) = {}", poincare_iso(&form, SharpDirection::Down)?);
    println!("D^#(e2) = {}", poincare_iso(&vector, SharpDirection::Up)?);

    let x = Vecfor::t(&ctx, 1).add(&Vecfor::e(&ctx, 2));
    let w = &(&ctx.e(1) ^ &ctx.t(2)) + &ctx.e(2);
    let dw = differential_apply(&x, &w)?;
    println!("d w = {dw}, d d w = {}", differential_apply(&x, &dw)?);
    Ok(())
}
