//! Poincaré automorphism, the two Poincaré isomorphisms and the differential.

use crate::blade::Blade;
use crate::error::{AlgebraError, Result};
use crate::hyperbolic::Vecfor;
use crate::multivector::Multivecfor;
use crate::products::{lcontract, rcontract};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SharpDirection {
    /// `D_#: ∧^r V* → ∧^{n−r} V`
    Down,
    /// `D^#: ∧^r V → ∧^{n−r} V*`
    Up,
}

/// `σ = e_* ∧ θ*`, the top blade with coefficient one.
pub fn sigma(u: &Multivecfor) -> Multivecfor {
    u.ctx().blade(Blade::top(u.dim()))
}

/// `★u = ũ ⌟ σ`
pub fn hodge(u: &Multivecfor) -> Multivecfor {
    lcontract(&u.reverse(), &sigma(u)).expect("same context")
}

/// `★⁻¹u = σ̃ ⌞ ũ`
pub fn hodge_inv(u: &Multivecfor) -> Multivecfor {
    rcontract(&sigma(u).reverse(), &u.reverse()).expect("same context")
}

pub fn poincare_iso(u: &Multivecfor, direction: SharpDirection) -> Result<Multivecfor> {
    let n = u.dim();
    let ctx = u.ctx();
    match direction {
        SharpDirection::Down => {
            if !u.is_form_only() {
                return Err(AlgebraError::MixedSupport {
                    op: "D_#",
                    expected: "t-blades",
                });
            }
            lcontract(&u.reverse(), &ctx.blade(Blade::e_star(n)))
        }
        SharpDirection::Up => {
            if !u.is_vector_only() {
                return Err(AlgebraError::MixedSupport {
                    op: "D^#",
                    expected: "e-blades",
                });
            }
            rcontract(&ctx.blade(Blade::theta_star(n)), &u.conjugate())
        }
    }
}

/// `𝔡u = x ⌟ u`
pub fn differential_apply(x: &Vecfor, u: &Multivecfor) -> Result<Multivecfor> {
    lcontract(&x.to_multivector_in(u.ctx())?, u)
}
