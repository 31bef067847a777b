//! The left ideal `Cl(H_V) θ*` and its spinor coordinates.
//!
//! `m(u) = u θ*` identifies `∧V` with the ideal; the ideal itself is not the
//! subspace `∧V*` of `∧H_V` (already `e₁ θ¹ = 1 + e₁∧θ¹` at `n = 1`).

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::blade::Blade;
use crate::context::AlgebraContext;
use crate::error::{AlgebraError, Result};
use crate::hyperbolic::Vecfor;
use crate::linalg::{Matrix, ScalarJson};
use crate::multivector::Multivecfor;
use crate::products::{gp, lcontract, wedge};
use crate::random::Sampler;
use crate::scalar::Scalar;

/// Largest `n` for the ideal span (a `4^n × 4^n` reduction).
pub const MAX_IDEAL_DIM: usize = 4;
/// Largest `n` for the minimality search.
pub const MAX_MINIMALITY_DIM: usize = 3;
/// Random ideal elements tried by [`minimality_check`] on top of the basis.
pub const MINIMALITY_SAMPLES: usize = 8;

/// `θ* = θ¹ ∧ … ∧ θⁿ`
pub fn theta_star(ctx: &Arc<AlgebraContext>) -> Multivecfor {
    ctx.blade(Blade::theta_star(ctx.dim()))
}

/// `e_* = e₁ ∧ … ∧ eₙ`
pub fn e_star(ctx: &Arc<AlgebraContext>) -> Multivecfor {
    ctx.blade(Blade::e_star(ctx.dim()))
}

/// Exact basis of the left ideal `Cl · g`.
#[derive(Clone, Debug)]
pub struct IdealBasis {
    generator: Multivecfor,
    span: Vec<Multivecfor>,
    /// Row-reduced coordinates of `span` over all blades.
    rref: Matrix,
    pivots: Vec<usize>,
}

impl IdealBasis {
    pub fn generator(&self) -> &Multivecfor {
        &self.generator
    }

    pub fn span(&self) -> &[Multivecfor] {
        &self.span
    }

    pub fn dim(&self) -> usize {
        self.span.len()
    }

    /// Coordinates of `u` over [`IdealBasis::span`], if `u` lies in the ideal.
    pub fn coordinates(&self, u: &Multivecfor) -> Option<Vec<Scalar>> {
        let order = Blade::all(u.dim());
        let target = u.dense_coords(&order);
        if self.span.is_empty() {
            return target.iter().all(Scalar::is_zero).then(Vec::new);
        }
        // rows of the reduced basis are unit vectors on the pivot columns
        let coeffs: Vec<Scalar> = self.pivots.iter().map(|&c| target[c].clone()).collect();
        let rebuilt: Vec<Scalar> = (0..order.len())
            .map(|j| coeffs.iter().enumerate().map(|(i, c)| c * &self.rref[(i, j)]).sum())
            .collect();
        (rebuilt == target).then_some(coeffs)
    }

    pub fn contains(&self, u: &Multivecfor) -> bool {
        self.coordinates(u).is_some()
    }
}

pub fn ideal_span(g: &Multivecfor) -> Result<IdealBasis> {
    if g.is_zero() {
        return Err(AlgebraError::ZeroGenerator);
    }
    let ctx = g.ctx();
    let n = ctx.dim();
    if n > MAX_IDEAL_DIM {
        return Err(AlgebraError::TooLarge {
            what: "ideal_span",
            n,
            max: MAX_IDEAL_DIM,
        });
    }
    let order = Blade::all(n);
    let rows: Vec<Vec<Scalar>> = order
        .iter()
        .map(|b| gp(&ctx.blade(*b), g).expect("same context").dense_coords(&order))
        .collect();
    let (r, pivots) = Matrix::from_rows(rows).rref();
    let rref = r.block(0, 0, pivots.len(), order.len());
    let span = (0..pivots.len())
        .map(|i| Multivecfor::from_terms(ctx, order.iter().copied().zip(rref.row(i))))
        .collect();
    Ok(IdealBasis {
        generator: g.clone(),
        span,
        rref,
        pivots,
    })
}

/// No nonzero element among the basis and a seeded random sample generates a
/// smaller left ideal than `g` does.
pub fn minimality_check(g: &Multivecfor, seed: u64) -> Result<bool> {
    let n = g.dim();
    if n > MAX_MINIMALITY_DIM {
        return Err(AlgebraError::TooLarge {
            what: "minimality_check",
            n,
            max: MAX_MINIMALITY_DIM,
        });
    }
    let ideal = ideal_span(g)?;
    let mut candidates: Vec<Multivecfor> = ideal.span().to_vec();
    let mut sampler = Sampler::new(seed);
    while candidates.len() < ideal.dim() + MINIMALITY_SAMPLES {
        let psi = ideal
            .span()
            .iter()
            .fold(g.ctx().zero(), |acc, b| &acc + &b.scale(&sampler.rational()));
        if !psi.is_zero() {
            candidates.push(psi);
        }
    }
    for psi in &candidates {
        if ideal_span(psi)?.dim() != ideal.dim() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn require_vector_only(u: &Multivecfor, op: &'static str) -> Result<()> {
    if u.is_vector_only() {
        Ok(())
    } else {
        Err(AlgebraError::MixedSupport { op, expected: "e-blades" })
    }
}

/// `m(u) = u θ*` for `u ∈ ∧V`.
pub fn m(u: &Multivecfor) -> Result<Multivecfor> {
    require_vector_only(u, "m")?;
    gp(u, &theta_star(u.ctx()))
}

/// The unique `u ∈ ∧V` with `u θ* = w`.
pub fn m_inverse(w: &Multivecfor) -> Result<Multivecfor> {
    let ctx = w.ctx();
    let n = ctx.dim();
    let order = Blade::all(n);
    let sources: Vec<Blade> = order.iter().copied().filter(|b| b.is_vector_only(n)).collect();
    let columns: Vec<Vec<Scalar>> = sources
        .iter()
        .map(|b| gp(&ctx.blade(*b), &theta_star(ctx)).expect("same context").dense_coords(&order))
        .collect();
    let a = Matrix::from_columns(&columns);
    let x = a.solve(&w.dense_coords(&order)).ok_or(AlgebraError::NotInIdeal)?;
    Ok(Multivecfor::from_terms(ctx, sources.into_iter().zip(x)))
}

/// `m⁻¹(x m(u))`.
pub fn module_action(x: &Vecfor, u: &Multivecfor) -> Result<Multivecfor> {
    let xm = x.to_multivector_in(u.ctx())?;
    m_inverse(&gp(&xm, &m(u)?)?)
}

/// `x_* ∧ u + 2 (x* ⌟ u)`.
pub fn module_action_formula(x: &Vecfor, u: &Multivecfor) -> Result<Multivecfor> {
    let ctx = u.ctx();
    let n = ctx.dim();
    let zeros = vec![Scalar::zero(); n];
    let xv = Vecfor::new(ctx, x.vec_part().to_vec(), zeros.clone())?.to_multivector();
    let xf = Vecfor::new(ctx, zeros, x.form_part().to_vec())?.to_multivector();
    Ok(&wedge(&xv, u)? + &lcontract(&xf, u)?.scale(&Scalar::from_int(2)))
}

/// Coefficients of `ψ = s + v_μ θ^μ + ½ f_μν θ^μ θ^ν + … + p θ*`.
///
/// `components[k]` holds the grade-`k` tensor on strictly increasing index
/// tuples in lexicographic order; the `1/k!` of the expansion cancels against
/// the `k!` orderings of each antisymmetric tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinorRep {
    n: usize,
    components: Vec<Vec<Scalar>>,
}

/// Strictly increasing `k`-tuples from `0..n`, lexicographic.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn theta_blade(n: usize, tuple: &[usize]) -> Blade {
    Blade::from_mask(tuple.iter().fold(0u32, |m, &i| m | 1 << (n + i)))
}

impl SpinorRep {
    pub fn zero(n: usize) -> SpinorRep {
        SpinorRep {
            n,
            components: (0..=n)
                .map(|k| vec![Scalar::zero(); increasing_tuples(n, k).len()])
                .collect(),
        }
    }

    /// One vector per grade `0..=n`, each of length `C(n, k)`.
    pub fn new(n: usize, components: Vec<Vec<Scalar>>) -> Result<SpinorRep> {
        if components.len() != n + 1 {
            return Err(AlgebraError::ShapeMismatch {
                expected: n + 1,
                found: components.len(),
            });
        }
        for (k, c) in components.iter().enumerate() {
            let want = increasing_tuples(n, k).len();
            if c.len() != want {
                return Err(AlgebraError::ShapeMismatch {
                    expected: want,
                    found: c.len(),
                });
            }
        }
        Ok(SpinorRep { n, components })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn grade(&self, k: usize) -> &[Scalar] {
        &self.components[k]
    }

    pub fn s(&self) -> &Scalar {
        &self.components[0][0]
    }

    pub fn v(&self) -> &[Scalar] {
        self.components.get(1).map_or(&[], |c| c.as_slice())
    }

    pub fn f(&self) -> &[Scalar] {
        self.components.get(2).map_or(&[], |c| c.as_slice())
    }

    pub fn p(&self) -> &Scalar {
        &self.components[self.n][0]
    }

    pub fn set(&mut self, tuple: &[usize], value: Scalar) {
        let k = tuple.len();
        let idx = increasing_tuples(self.n, k)
            .iter()
            .position(|t| t == tuple)
            .expect("strictly increasing tuple within range");
        self.components[k][idx] = value;
    }

    pub fn compose(&self, ctx: &Arc<AlgebraContext>) -> Result<Multivecfor> {
        if ctx.dim() != self.n {
            return Err(AlgebraError::ContextMismatch {
                left: ctx.dim(),
                right: self.n,
            });
        }
        let mut terms = Vec::new();
        for (k, comps) in self.components.iter().enumerate() {
            for (t, c) in increasing_tuples(self.n, k).iter().zip(comps) {
                terms.push((theta_blade(self.n, t), c.clone()));
            }
        }
        Ok(Multivecfor::from_terms(ctx, terms))
    }

    pub fn decompose(u: &Multivecfor) -> Result<SpinorRep> {
        if !u.is_form_only() {
            return Err(AlgebraError::MixedSupport {
                op: "spinor_decompose",
                expected: "t-blades",
            });
        }
        let n = u.dim();
        Ok(SpinorRep {
            n,
            components: (0..=n)
                .map(|k| {
                    increasing_tuples(n, k)
                        .iter()
                        .map(|t| u.coeff(theta_blade(n, t)))
                        .collect()
                })
                .collect(),
        })
    }

    /// `{"dim", "s", "v", "f", "higher", "p"}`; `higher` lists grades `3..n`
    /// and `p` repeats the top-grade coefficient.
    pub fn to_json(&self) -> serde_json::Value {
        let conv = |v: &[Scalar]| v.iter().map(ScalarJson::from).collect::<Vec<_>>();
        let doc = SpinorJson {
            dim: self.n,
            s: ScalarJson::from(self.s()),
            v: conv(self.v()),
            f: conv(self.f()),
            higher: (3..self.n).map(|k| conv(&self.components[k])).collect(),
            p: ScalarJson::from(self.p()),
        };
        serde_json::to_value(doc).expect("plain struct serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<SpinorRep> {
        let doc: SpinorJson =
            serde_json::from_value(value.clone()).map_err(|e| AlgebraError::BadSpinor(e.to_string()))?;
        let n = doc.dim;
        let conv = |v: &[ScalarJson]| v.iter().map(Scalar::try_from).collect::<Result<Vec<_>>>();
        let mut components = vec![vec![Scalar::try_from(&doc.s)?]];
        if n >= 1 {
            components.push(conv(&doc.v)?);
        }
        if n >= 2 {
            components.push(conv(&doc.f)?);
        } else if !doc.f.is_empty() {
            return Err(AlgebraError::BadSpinor("f given for n < 2".into()));
        }
        if doc.higher.len() != n.saturating_sub(3) {
            return Err(AlgebraError::BadSpinor(format!(
                "expected {} higher grades, found {}",
                n.saturating_sub(3),
                doc.higher.len()
            )));
        }
        for h in &doc.higher {
            components.push(conv(h)?);
        }
        let p = Scalar::try_from(&doc.p)?;
        if n >= 3 {
            components.push(vec![p]);
        } else if components[n].len() != 1 || components[n][0] != p {
            return Err(AlgebraError::BadSpinor("p disagrees with the top-grade entry".into()));
        }
        SpinorRep::new(n, components)
    }
}

#[derive(Serialize, Deserialize)]
struct SpinorJson {
    dim: usize,
    s: ScalarJson,
    v: Vec<ScalarJson>,
    f: Vec<ScalarJson>,
    higher: Vec<Vec<ScalarJson>>,
    p: ScalarJson,
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `Σ over all orderings (1/k!) f_{π(I)} θ^{π(1)} ∧ … ∧ θ^{π(k)}` with
    /// `f_{π(I)} = sgn(π) c_I`.
    fn compose_by_antisymmetric_sum(rep: &SpinorRep, ctx: &Arc<AlgebraContext>) -> Multivecfor {
        fn perms(v: &[usize]) -> Vec<(Vec<usize>, usize)> {
            if v.len() <= 1 {
                return vec![(v.to_vec(), 0)];
            }
            let mut out = Vec::new();
            for i in 0..v.len() {
                let mut rest = v.to_vec();
                let x = rest.remove(i);
                for (mut p, inv) in perms(&rest) {
                    p.insert(0, x);
                    out.push((p, inv + i));
                }
            }
            out
        }
        let n = rep.dim();
        let mut acc = ctx.zero();
        for k in 0..=n {
            let fact: i64 = (1..=k as i64).product();
            for (t, c) in increasing_tuples(n, k).iter().zip(rep.grade(k)) {
                for (p, inv) in perms(t) {
                    let w = p.iter().fold(ctx.one(), |a, &i| &a ^ &ctx.t(i + 1));
                    let coef = &(c * &Scalar::sign(inv)) * &Scalar::frac(1, fact);
                    acc = &acc + &w.scale(&coef);
                }
            }
        }
        acc
    }

    #[test]
    fn theta_star_squares_to_zero() {
        let ctx = AlgebraContext::new(2).unwrap();
        let t = theta_star(&ctx);
        assert_eq!(t, &ctx.t(1) ^ &ctx.t(2));
        assert!(gp(&t, &t).unwrap().is_zero());
        assert_eq!(wedge(&e_star(&ctx), &t).unwrap(), ctx.blade(Blade::top(2)));
    }

    #[test]
    fn ideal_examples() {
        let ctx = AlgebraContext::new(1).unwrap();
        let i = ideal_span(&ctx.t(1)).unwrap();
        assert_eq!(i.dim(), 2);
        assert!(i.contains(&ctx.t(1)));
        assert!(i.contains(&(&ctx.one() + &(&ctx.e(1) ^ &ctx.t(1)))));
        assert!(!i.contains(&ctx.e(1)));
        assert_eq!(ideal_span(&ctx.one()).unwrap().dim(), 4);
        assert!(ideal_span(&ctx.zero()).is_err());
        let ctx2 = AlgebraContext::new(2).unwrap();
        assert_eq!(ideal_span(&theta_star(&ctx2)).unwrap().dim(), 4);
    }

    #[test]
    fn minimality_examples() {
        let ctx = AlgebraContext::new(1).unwrap();
        assert!(minimality_check(&theta_star(&ctx), 3).unwrap());
        assert!(!minimality_check(&ctx.one(), 3).unwrap());
        let ctx2 = AlgebraContext::new(2).unwrap();
        assert!(minimality_check(&theta_star(&ctx2), 3).unwrap());
    }

    #[test]
    fn m_roundtrip() {
        let ctx = AlgebraContext::new(2).unwrap();
        let u = &ctx.e(1) + &(&ctx.e(1) ^ &ctx.e(2)).scale(&Scalar::frac(3, 4));
        assert_eq!(m_inverse(&m(&u).unwrap()).unwrap(), u);
        assert!(m(&ctx.t(1)).is_err());
        assert_eq!(m_inverse(&ctx.e(1)).unwrap_err(), AlgebraError::NotInIdeal);
    }

    #[test]
    fn compose_examples() {
        let ctx = AlgebraContext::new(1).unwrap();
        let r = SpinorRep::new(1, vec![vec![Scalar::from_int(2)], vec![Scalar::from_int(3)]]).unwrap();
        assert_eq!(r.compose(&ctx).unwrap(), &ctx.scalar(Scalar::from_int(2)) + &ctx.t(1).scale(&Scalar::from_int(3)));
        assert!(SpinorRep::zero(1).compose(&ctx).unwrap().is_zero());
        let ctx2 = AlgebraContext::new(2).unwrap();
        let mut f = SpinorRep::zero(2);
        f.set(&[0, 1], Scalar::one());
        assert_eq!(f.compose(&ctx2).unwrap(), &ctx2.t(1) ^ &ctx2.t(2));
    }

    #[test]
    fn compose_matches_antisymmetric_sum() {
        let ctx = AlgebraContext::new(3).unwrap();
        let mut s = Sampler::new(11);
        for _ in 0..10 {
            let u = s.form_only(&ctx);
            let rep = SpinorRep::decompose(&u).unwrap();
            assert_eq!(compose_by_antisymmetric_sum(&rep, &ctx), u);
            assert_eq!(rep.compose(&ctx).unwrap(), u);
        }
    }

    #[test]
    fn json_roundtrip() {
        for n in 1..=4 {
            let ctx = AlgebraContext::new(n).unwrap();
            let u = Sampler::new(n as u64).form_only(&ctx);
            let rep = SpinorRep::decompose(&u).unwrap();
            let j = rep.to_json();
            assert_eq!(SpinorRep::from_json(&j).unwrap(), rep);
        }
        let mut bad = SpinorRep::zero(1).to_json();
        bad["p"] = serde_json::json!({"rat": "5", "rat_r2": "0"});
        assert!(SpinorRep::from_json(&bad).is_err());
    }
}
