//! Exterior, contraction and Clifford products, and the extended bilinear form.

use std::collections::BTreeMap;

use crate::blade::{blade_lcontract, blade_rcontract, blade_wedge, reversion_sign, Blade};
use crate::error::Result;
use crate::multivector::Multivecfor;
use crate::scalar::Scalar;

/// Bilinear extension of a monomial blade kernel.
fn blade_bilinear(
    u: &Multivecfor,
    v: &Multivecfor,
    kernel: impl Fn(u32, u32) -> Option<(u32, i64)>,
) -> Result<Multivecfor> {
    u.same_ctx(v)?;
    let mut acc: BTreeMap<Blade, Scalar> = BTreeMap::new();
    for (a, x) in u.terms() {
        for (b, y) in v.terms() {
            if let Some((m, s)) = kernel(a.mask(), b.mask()) {
                let c = (x * y).mul_int(s);
                *acc.entry(Blade::from_mask(m)).or_default() += c;
            }
        }
    }
    Ok(Multivecfor::from_map(u.ctx(), acc))
}

/// `u ∧ v`
pub fn wedge(u: &Multivecfor, v: &Multivecfor) -> Result<Multivecfor> {
    blade_bilinear(u, v, blade_wedge)
}

/// `u ⌟ v`, adjoint to `w ↦ ũ ∧ w`.
pub fn lcontract(u: &Multivecfor, v: &Multivecfor) -> Result<Multivecfor> {
    let n = u.dim() as u32;
    blade_bilinear(u, v, |a, b| blade_lcontract(a, b, n))
}

/// `u ⌞ v`, adjoint to `w ↦ w ∧ ṽ`.
pub fn rcontract(u: &Multivecfor, v: &Multivecfor) -> Result<Multivecfor> {
    let n = u.dim() as u32;
    blade_bilinear(u, v, |a, b| blade_rcontract(a, b, n))
}

/// Clifford product `uv`.
pub fn gp(u: &Multivecfor, v: &Multivecfor) -> Result<Multivecfor> {
    u.same_ctx(v)?;
    let ctx = u.ctx();
    let mut acc: BTreeMap<Blade, Scalar> = BTreeMap::new();
    for (a, x) in u.terms() {
        for (b, y) in v.terms() {
            let xy = x * y;
            for &(m, c) in ctx.blade_product(a.mask(), b.mask()).iter() {
                *acc.entry(Blade::from_mask(m)).or_default() += xy.mul_int(c);
            }
        }
    }
    Ok(Multivecfor::from_map(ctx, acc))
}

/// `⟨u, v⟩`: Gram determinants on simple blades, distinct grades orthogonal.
///
/// Only blade pairs whose masks are Witt partners (e-bits of one matching the
/// θ-bits of the other) contribute.
pub fn bilinear(u: &Multivecfor, v: &Multivecfor) -> Result<Scalar> {
    u.same_ctx(v)?;
    let n = u.dim() as u32;
    let low = (1u32 << n) - 1;
    let mut acc = Scalar::zero();
    for (a, x) in u.terms() {
        let m = a.mask();
        let partner = ((m & low) << n) | (m >> n);
        let y = v.coeff(Blade::from_mask(partner));
        if y.is_zero() {
            continue;
        }
        if let Some((0, s)) = blade_lcontract(m, partner, n) {
            acc += (x * &y).mul_int(s * reversion_sign(a.grade()));
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::AlgebraContext;

    #[test]
    fn wedge_examples() {
        let ctx = AlgebraContext::new(1).unwrap();
        let (e1, t1) = (ctx.e(1), ctx.t(1));
        assert!(wedge(&e1, &e1).unwrap().is_zero());
        assert_eq!(wedge(&e1, &t1).unwrap(), -wedge(&t1, &e1).unwrap());
        let l = wedge(&(&e1 + &t1), &(&e1 - &t1)).unwrap();
        assert_eq!(l, wedge(&e1, &t1).unwrap().scale(&Scalar::from_int(-2)));
    }

    #[test]
    fn bilinear_examples() {
        let ctx = AlgebraContext::new(1).unwrap();
        let (e1, t1) = (ctx.e(1), ctx.t(1));
        let et = wedge(&e1, &t1).unwrap();
        assert_eq!(bilinear(&t1, &e1).unwrap(), Scalar::one());
        assert_eq!(bilinear(&et, &et).unwrap(), Scalar::from_int(-1));
        assert!(bilinear(&e1, &et).unwrap().is_zero());
    }

    #[test]
    fn contraction_examples() {
        let ctx = AlgebraContext::new(1).unwrap();
        let (e1, t1) = (ctx.e(1), ctx.t(1));
        let et = wedge(&e1, &t1).unwrap();
        let u = &e1 + &et.scale(&Scalar::frac(2, 3));
        assert_eq!(lcontract(&ctx.one(), &u).unwrap(), u);
        assert_eq!(rcontract(&u, &ctx.one()).unwrap(), u);
        assert!(lcontract(&e1, &ctx.one()).unwrap().is_zero());
        assert!(rcontract(&ctx.one(), &t1).unwrap().is_zero());
        assert_eq!(lcontract(&t1, &et).unwrap(), t1);
        assert_eq!(rcontract(&et, &e1).unwrap(), e1);
    }

    #[test]
    fn product_examples() {
        let ctx = AlgebraContext::new(1).unwrap();
        let (e1, t1) = (ctx.e(1), ctx.t(1));
        let sigma = wedge(&e1, &t1).unwrap();
        assert_eq!(&gp(&t1, &e1).unwrap() + &gp(&e1, &t1).unwrap(), ctx.scalar(Scalar::from_int(2)));
        assert!(gp(&e1, &e1).unwrap().is_zero());
        assert_eq!(gp(&sigma, &sigma).unwrap(), ctx.one());
        assert_eq!(gp(&sigma, &e1).unwrap(), e1);
        assert_eq!(gp(&e1, &sigma).unwrap(), -&e1);
    }

    #[test]
    fn mismatched_contexts_are_rejected() {
        let a = AlgebraContext::new(1).unwrap();
        let b = AlgebraContext::new(2).unwrap();
        assert!(gp(&a.e(1), &b.e(1)).is_err());
        assert!(bilinear(&a.e(1), &b.e(1)).is_err());
    }
}
