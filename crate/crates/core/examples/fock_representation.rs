//! Matrices of Cl(H_V) acting on the Fock space of V.

use hyclif::hyperbolic::{SymmetricForm, Vecfor};
use hyclif::representation::{clifford_map_matrix, render_fock, rep, tensor_split_check, verify_end_iso};
use hyclif::{AlgebraContext, Matrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = AlgebraContext::new(2)?;
    let x = Vecfor::e(&ctx, 1).add(&Vecfor::t(&ctx, 2));
    println!("phi_x for x = {}:\n{}", x.to_multivector(), render_fock(&clifford_map_matrix(&x)));

    let u = &ctx.e(1) * &ctx.t(1);
    println!("rep({u}):\n{}", render_fock(&rep(&u)));

    for n in 1..=3 {
        let r = verify_end_iso(n)?;
        println!("n={n}: rank {} of {}, parity blocks {}", r.rank, 1 << (2 * n), r.parity_blocks);
    }

    let b = SymmetricForm::new(Matrix::from_int_rows(&[&[1, 0], &[0, -1]]))?;
    println!("graded tensor split for diag(1, -1): {}", tensor_split_check(&b)?);
    Ok(())
}
