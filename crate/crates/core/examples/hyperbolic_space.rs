//! Vecfors, the sigma basis, null subspaces and the split along a symmetric form.

use hyclif::hyperbolic::{sigma_basis, Ambient, Subspace, SymmetricForm, Vecfor};
use hyclif::{AlgebraContext, Matrix, Scalar};

fn q(p: i64, d: i64) -> Scalar {
    Scalar::frac(p, d)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = AlgebraContext::new(2)?;
    let x = Vecfor::new(&ctx, vec![q(1, 1), q(2, 1)], vec![q(1, 2), q(-1, 1)])?;
    let y = Vecfor::e(&ctx, 1).add(&Vecfor::t(&ctx, 2));

    println!("x = {}", x.to_multivector());
    println!("x*(x_*) = {}  -> {:?}", x.self_pairing(), x.classify().causality);
    println!("<x, y> = {}, [x, y] = {}", x.inner(&y), x.bracket(&y));
    println!("conjugate of x = {}", x.conjugate().to_multivector());

    let comps: Vec<String> = x.sigma_components().iter().map(|c| c.to_string()).collect();
    println!("sigma components of x: {}", comps.join(", "));
    for (k, s) in sigma_basis(&ctx).iter().enumerate() {
        println!("  sigma_{} = {}", k + 1, s.to_multivector());
    }

    let s = Subspace::new(Ambient::V, 2, vec![vec![q(1, 1), q(1, 1)]])?;
    let p = s.null_subspace()?;
    println!("S = span{{e1 + e2}}, S' has dim {} and basis {:?}", p.dim(), p.basis());
    println!("I(S) has dim {}", s.isotropic_i()?.dim());

    let b = SymmetricForm::new(Matrix::from_int_rows(&[&[2, 1], &[1, -1]]))?;
    let (plus, minus) = b.rho_b_split(&x)?;
    let (yp, ym) = b.rho_b_split(&y)?;
    let lhs = &b.eval(&plus, &yp) - &b.eval(&minus, &ym);
    println!("b(x+, y+) - b(x-, y-) = {lhs}, <x, y> = {}", x.inner(&y));
    Ok(())
}
