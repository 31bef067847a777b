//! Sparse multivecfors over the Witt blade basis.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, BitXor, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::blade::{conjugation_sign, grade_sign, reversion_sign, Blade};
use crate::context::AlgebraContext;
use crate::error::{AlgebraError, Result};
use crate::linalg::ScalarJson;
use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Involution {
    Grade,
    Reversion,
    Conjugation,
}

impl Involution {
    pub fn sign(self, grade: usize) -> i64 {
        match self {
            Involution::Grade => grade_sign(grade),
            Involution::Reversion => reversion_sign(grade),
            Involution::Conjugation => conjugation_sign(grade),
        }
    }
}

/// Element of `∧H_V`, stored as blade → nonzero coefficient.
#[derive(Clone)]
pub struct Multivecfor {
    ctx: Arc<AlgebraContext>,
    terms: BTreeMap<Blade, Scalar>,
}

impl Multivecfor {
    pub fn zero(ctx: &Arc<AlgebraContext>) -> Multivecfor {
        Multivecfor {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn from_blade(ctx: &Arc<AlgebraContext>, b: Blade, s: Scalar) -> Multivecfor {
        let mut m = Multivecfor::zero(ctx);
        m.add_term(b, s);
        m
    }

    /// Sums repeated blades and drops zeros.
    pub fn from_terms(
        ctx: &Arc<AlgebraContext>,
        terms: impl IntoIterator<Item = (Blade, Scalar)>,
    ) -> Multivecfor {
        let mut m = Multivecfor::zero(ctx);
        for (b, s) in terms {
            m.add_term(b, s);
        }
        m
    }

    pub(crate) fn from_map(ctx: &Arc<AlgebraContext>, mut terms: BTreeMap<Blade, Scalar>) -> Multivecfor {
        terms.retain(|_, s| !s.is_zero());
        Multivecfor {
            ctx: ctx.clone(),
            terms,
        }
    }

    pub(crate) fn add_term(&mut self, b: Blade, s: Scalar) {
        if s.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(b) {
            Entry::Vacant(v) => {
                v.insert(s);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += s;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn ctx(&self) -> &Arc<AlgebraContext> {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.ctx.dim()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &Scalar)> + '_ {
        self.terms.iter().map(|(b, s)| (*b, s))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: Blade) -> Scalar {
        self.terms.get(&b).cloned().unwrap_or_default()
    }

    pub fn scalar_part(&self) -> Scalar {
        self.coeff(Blade::SCALAR)
    }

    /// `Some(s)` when the element is a pure scalar (including zero).
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Blade::SCALAR).cloned(),
            _ => None,
        }
    }

    /// The common grade of all terms, if there is one. Zero has none.
    pub fn homogeneous_grade(&self) -> Option<usize> {
        let mut grades = self.terms.keys().map(|b| b.grade());
        let g = grades.next()?;
        grades.all(|h| h == g).then_some(g)
    }

    pub fn is_vector_only(&self) -> bool {
        let n = self.dim();
        self.terms.keys().all(|b| b.is_vector_only(n))
    }

    pub fn is_form_only(&self) -> bool {
        let n = self.dim();
        self.terms.keys().all(|b| b.is_form_only(n))
    }

    pub fn same_ctx(&self, other: &Multivecfor) -> Result<()> {
        self.ctx.check_same(&other.ctx)
    }

    pub fn grade_part(&self, r: usize) -> Result<Multivecfor> {
        let max = 2 * self.dim();
        if r > max {
            return Err(AlgebraError::GradeOutOfRange { grade: r, max });
        }
        Ok(self.filter(|b| b.grade() == r))
    }

    pub fn even_part(&self) -> Multivecfor {
        self.filter(|b| b.grade() % 2 == 0)
    }

    pub fn odd_part(&self) -> Multivecfor {
        self.filter(|b| b.grade() % 2 == 1)
    }

    /// Part supported on blades satisfying `keep`.
    pub fn filter(&self, keep: impl Fn(Blade) -> bool) -> Multivecfor {
        Multivecfor {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(**b))
                .map(|(b, s)| (*b, s.clone()))
                .collect(),
        }
    }

    pub fn involution(&self, kind: Involution) -> Multivecfor {
        Multivecfor {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(b, s)| {
                    let s = if kind.sign(b.grade()) < 0 { -s } else { s.clone() };
                    (*b, s)
                })
                .collect(),
        }
    }

    /// `û`
    pub fn grade_involution(&self) -> Multivecfor {
        self.involution(Involution::Grade)
    }

    /// `ũ`
    pub fn reverse(&self) -> Multivecfor {
        self.involution(Involution::Reversion)
    }

    /// `ū`
    pub fn conjugate(&self) -> Multivecfor {
        self.involution(Involution::Conjugation)
    }

    pub fn scale(&self, s: &Scalar) -> Multivecfor {
        if s.is_zero() {
            return Multivecfor::zero(&self.ctx);
        }
        Multivecfor {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(b, c)| (*b, c * s)).collect(),
        }
    }

    pub fn checked_add(&self, rhs: &Multivecfor) -> Result<Multivecfor> {
        self.same_ctx(rhs)?;
        let mut out = self.clone();
        for (b, s) in &rhs.terms {
            out.add_term(*b, s.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Multivecfor) -> Result<Multivecfor> {
        self.same_ctx(rhs)?;
        let mut out = self.clone();
        for (b, s) in &rhs.terms {
            out.add_term(*b, -s);
        }
        Ok(out)
    }

    /// Coordinates over all `4^n` blades in (grade, mask) order.
    pub fn dense_coords(&self, order: &[Blade]) -> Vec<Scalar> {
        order.iter().map(|b| self.coeff(*b)).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let n = self.dim();
        let doc = MultivecforJson {
            dim: n,
            terms: self
                .terms
                .iter()
                .map(|(b, s)| TermJson {
                    blade: b.factor_names(n),
                    coeff: ScalarJson::from(s),
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("plain struct serializes")
    }

    pub fn from_json(ctx: &Arc<AlgebraContext>, value: &serde_json::Value) -> Result<Multivecfor> {
        let doc: MultivecforJson = serde_json::from_value(value.clone())
            .map_err(|e| AlgebraError::BadScalar(e.to_string()))?;
        if doc.dim != ctx.dim() {
            return Err(AlgebraError::ContextMismatch {
                left: ctx.dim(),
                right: doc.dim,
            });
        }
        let mut out = Multivecfor::zero(ctx);
        for t in &doc.terms {
            let mut blade = Multivecfor::from_blade(ctx, Blade::SCALAR, Scalar::from_parts_str(&t.coeff.rat, &t.coeff.rat_r2)?);
            for name in &t.blade {
                let g = parse_generator(ctx, name)?;
                blade = crate::products::wedge(&blade, &g)?;
            }
            out = out.checked_add(&blade)?;
        }
        Ok(out)
    }
}

fn parse_generator(ctx: &Arc<AlgebraContext>, name: &str) -> Result<Multivecfor> {
    let bad = || AlgebraError::BadScalar(format!("unknown generator {name:?}"));
    let (head, idx) = name.split_at(1);
    let k: usize = idx.parse().map_err(|_| bad())?;
    match head {
        "e" => ctx.try_e(k),
        "t" => ctx.try_t(k),
        _ => Err(bad()),
    }
}

#[derive(Serialize, Deserialize)]
struct MultivecforJson {
    dim: usize,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    blade: Vec<String>,
    coeff: ScalarJson,
}

impl PartialEq for Multivecfor {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.dim() == other.ctx.dim() && self.terms == other.terms
    }
}

impl Eq for Multivecfor {}

/// Splits a coefficient into a printed sign and a magnitude whose text can sit
/// in front of a blade name. Mixed coefficients take the sign of their
/// rational part and are parenthesized.
fn signed_coeff(s: &Scalar) -> (bool, String) {
    let mixed = !s.is_rational() && !s.rat_part().is_zero();
    let negative = if mixed {
        s.rat_part().is_negative()
    } else {
        s.is_negative()
    };
    let mag = if negative { -s } else { s.clone() };
    let text = if mixed { format!("({mag})") } else { mag.to_string() };
    (negative, text)
}

impl fmt::Display for Multivecfor {
    /// Canonical text form, e.g. `1 - e1^t1` or `3/2 e1 + (1+r2) t1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let n = self.dim();
        for (i, (b, s)) in self.terms.iter().enumerate() {
            let body = if *b == Blade::SCALAR {
                // the scalar term always comes first, so it keeps its own sign
                if i == 0 {
                    write!(f, "{s}")?;
                    continue;
                }
                let (neg, mag) = signed_coeff(s);
                (neg, mag)
            } else {
                let (neg, mag) = signed_coeff(s);
                let label = b.label(n);
                let text = if mag == "1" { label } else { format!("{mag} {label}") };
                (neg, text)
            };
            match (i, body.0) {
                (0, false) => write!(f, "{}", body.1)?,
                (0, true) => write!(f, "-{}", body.1)?,
                (_, false) => write!(f, " + {}", body.1)?,
                (_, true) => write!(f, " - {}", body.1)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Multivecfor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivecfor(n={}; {})", self.dim(), self)
    }
}

impl Add<&Multivecfor> for &Multivecfor {
    type Output = Multivecfor;
    fn add(self, rhs: &Multivecfor) -> Multivecfor {
        self.checked_add(rhs).expect("context mismatch")
    }
}

impl Sub<&Multivecfor> for &Multivecfor {
    type Output = Multivecfor;
    fn sub(self, rhs: &Multivecfor) -> Multivecfor {
        self.checked_sub(rhs).expect("context mismatch")
    }
}

impl Add for Multivecfor {
    type Output = Multivecfor;
    fn add(self, rhs: Multivecfor) -> Multivecfor {
        &self + &rhs
    }
}

impl Sub for Multivecfor {
    type Output = Multivecfor;
    fn sub(self, rhs: Multivecfor) -> Multivecfor {
        &self - &rhs
    }
}

impl Neg for &Multivecfor {
    type Output = Multivecfor;
    fn neg(self) -> Multivecfor {
        Multivecfor {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(b, s)| (*b, -s)).collect(),
        }
    }
}

impl Neg for Multivecfor {
    type Output = Multivecfor;
    fn neg(self) -> Multivecfor {
        -&self
    }
}

/// Geometric product.
impl Mul<&Multivecfor> for &Multivecfor {
    type Output = Multivecfor;
    fn mul(self, rhs: &Multivecfor) -> Multivecfor {
        crate::products::gp(self, rhs).expect("context mismatch")
    }
}

impl Mul for Multivecfor {
    type Output = Multivecfor;
    fn mul(self, rhs: Multivecfor) -> Multivecfor {
        &self * &rhs
    }
}

impl Mul<&Scalar> for &Multivecfor {
    type Output = Multivecfor;
    fn mul(self, rhs: &Scalar) -> Multivecfor {
        self.scale(rhs)
    }
}

/// Exterior product.
impl BitXor<&Multivecfor> for &Multivecfor {
    type Output = Multivecfor;
    fn bitxor(self, rhs: &Multivecfor) -> Multivecfor {
        crate::products::wedge(self, rhs).expect("context mismatch")
    }
}

impl BitXor for Multivecfor {
    type Output = Multivecfor;
    fn bitxor(self, rhs: Multivecfor) -> Multivecfor {
        &self ^ &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_text() {
        let ctx = AlgebraContext::new(2).unwrap();
        assert_eq!(ctx.zero().to_string(), "0");
        let u = &ctx.one() - &(&ctx.e(1) ^ &ctx.t(1));
        assert_eq!(u.to_string(), "1 - e1^t1");
        let v = &ctx.e(1).scale(&Scalar::frac(3, 2)) + &ctx.t(2).scale(&(Scalar::one() + Scalar::sqrt2()));
        assert_eq!(v.to_string(), "3/2 e1 + (1+r2) t2");
        let w = -&ctx.e(2).scale(&Scalar::sqrt2());
        assert_eq!(w.to_string(), "-r2 e2");
        let z = &ctx.scalar(Scalar::from_int(-2)) - &ctx.e(1).scale(&(Scalar::one() - Scalar::sqrt2()));
        assert_eq!(z.to_string(), "-2 - (1-r2) e1");
    }

    #[test]
    fn grade_parts() {
        let ctx = AlgebraContext::new(1).unwrap();
        let et = &ctx.e(1) ^ &ctx.t(1);
        let u = &ctx.one() + &et;
        assert_eq!(u.grade_part(2).unwrap(), et);
        assert!(u.grade_part(3).is_err());
        assert_eq!((&ctx.e(1) + &et).even_part(), et);
        assert!(ctx.scalar(Scalar::from_int(5)).odd_part().is_zero());
    }

    #[test]
    fn involution_examples() {
        let ctx = AlgebraContext::new(1).unwrap();
        let et = &ctx.e(1) ^ &ctx.t(1);
        assert_eq!(et.reverse(), -&et);
        assert_eq!(ctx.e(1).conjugate(), -ctx.e(1));
        let u = &ctx.scalar(Scalar::from_int(3)) + &ctx.e(1);
        assert_eq!(u.grade_involution(), &ctx.scalar(Scalar::from_int(3)) - &ctx.e(1));
    }

    #[test]
    fn json_roundtrip() {
        let ctx = AlgebraContext::new(2).unwrap();
        let u = &(&ctx.e(1) ^ &ctx.t(2)).scale(&Scalar::frac(3, 2)) + &ctx.scalar(Scalar::sqrt2());
        let j = u.to_json();
        assert_eq!(j["terms"][1]["blade"], serde_json::json!(["e1", "t2"]));
        assert_eq!(j["terms"][1]["coeff"]["rat"], "3/2");
        assert_eq!(Multivecfor::from_json(&ctx, &j).unwrap(), u);
    }
}
