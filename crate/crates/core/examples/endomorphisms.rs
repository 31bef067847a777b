//! Isotropic extensions, hyperbolic projections and reflections.

use hyclif::endomorphisms::{
    dual_map, endo_matrix_sigma, hyperplane_representation, isotropic_extension, projection, reflection, LinMapV,
};
use hyclif::hyperbolic::{sigma_basis, Vecfor};
use hyclif::{AlgebraContext, Matrix, Scalar};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = AlgebraContext::new(2)?;

    let phi = LinMapV::new(Matrix::from_int_rows(&[&[1, 2], &[0, 3]]))?;
    println!("phi* =\n{}", dual_map(&phi).matrix());
    println!("I(phi) =\n{}", isotropic_extension(&phi).matrix());

    let x = Vecfor::e(&ctx, 1).add(&Vecfor::t(&ctx, 1)).add(&Vecfor::t(&ctx, 2));
    let p = projection(&x)?;
    let r = reflection(&x)?;
    println!("P_x =\n{}", p.matrix());
    println!("R_x =\n{}", r.matrix());

    let s1 = &sigma_basis(&ctx)[0];
    println!("P_sigma1 in the sigma basis =\n{}", endo_matrix_sigma(&ctx, &projection(s1)?)?);
    println!("R_sigma1 in the sigma basis =\n{}", endo_matrix_sigma(&ctx, &reflection(s1)?)?);

    let h = hyperplane_representation(&[Scalar::from_int(2), Scalar::from_int(-1)], &Scalar::one())?;
    println!("2x - y = 1: point {:?}, direction {:?}", h.point, h.s0);
    Ok(())
}
