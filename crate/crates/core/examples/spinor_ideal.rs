//! The left ideal generated by theta* and its spinor components.

use hyclif::hyperbolic::Vecfor;
use hyclif::spinor::{ideal_span, minimality_check, module_action, theta_star, SpinorRep};
use hyclif::{AlgebraContext, Scalar};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = AlgebraContext::new(3)?;
    let g = theta_star(&ctx);
    let ideal = ideal_span(&g)?;
    println!("dim Cl theta* = {}", ideal.dim());
    println!("minimal: {}", minimality_check(&g, 1)?);

    let x = Vecfor::e(&ctx, 1).add(&Vecfor::t(&ctx, 2));
    let u = &ctx.one() + &(&ctx.e(2) ^ &ctx.e(3));
    println!("m^-1(x m(u)) = {}", module_action(&x, &u)?);

    let mut psi = SpinorRep::zero(3);
    psi.set(&[], Scalar::from_int(1));
    psi.set(&[0], Scalar::frac(1, 2));
    psi.set(&[0, 2], Scalar::sqrt2());
    let composed = psi.compose(&ctx)?;
    println!("psi = {composed}");
    println!("{}", serde_json::to_string_pretty(&psi.to_json())?);
    Ok(())
}
