use std::collections::BTreeMap;
use std::sync::Arc;

use super::{BinOp, Expr, ExprError, Func, Parser, UnOp};
use crate::context::AlgebraContext;
use crate::error::AlgebraError;
use crate::duality::{hodge, hodge_inv};
use crate::hyperbolic::{orientation_sigma, sigma_basis};
use crate::multivector::Multivecfor;
use crate::products::{bilinear, gp, lcontract, rcontract, wedge};
use crate::scalar::Scalar;

/// Evaluation environment: a context and the variables bound in it.
pub struct Env {
    ctx: Arc<AlgebraContext>,
    vars: BTreeMap<String, Multivecfor>,
}

impl Env {
    pub fn new(ctx: Arc<AlgebraContext>) -> Env {
        Env {
            ctx,
            vars: BTreeMap::new(),
        }
    }

    pub fn ctx(&self) -> &Arc<AlgebraContext> {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.ctx.dim()
    }

    pub fn vars(&self) -> impl Iterator<Item = (&str, &Multivecfor)> {
        self.vars.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn parser(&self) -> Parser {
        Parser::new(self.dim()).with_vars(self.vars.keys().cloned())
    }

    /// Binds `name`; reserved names (atoms, `r2`, `sigma`, function names) are refused.
    pub fn bind(&mut self, name: &str, value: Multivecfor) -> Result<(), ExprError> {
        let valid = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
            && name.chars().all(|c| c.is_ascii_alphanumeric());
        if !valid || Parser::is_reserved(name) {
            return Err(ExprError::Other(format!("cannot bind reserved or malformed name {name:?}")));
        }
        self.ctx.check_same(value.ctx())?;
        self.vars.insert(name.to_string(), value);
        Ok(())
    }

    pub fn eval_str(&self, src: &str) -> Result<Multivecfor, ExprError> {
        let e = self.parser().parse(src)?;
        self.eval(&e)
    }

    pub fn eval(&self, e: &Expr) -> Result<Multivecfor, ExprError> {
        let ctx = &self.ctx;
        Ok(match e {
            Expr::Num(r) => ctx.scalar(Scalar::from_rational(r.clone())),
            Expr::R2 => ctx.scalar(Scalar::sqrt2()),
            Expr::E(k) => ctx.try_e(*k)?,
            Expr::T(k) => ctx.try_t(*k)?,
            Expr::S(k) => {
                let basis = sigma_basis(ctx);
                let v = basis.get(k.wrapping_sub(1)).ok_or(AlgebraError::IndexOutOfRange {
                    index: *k,
                    max: basis.len(),
                })?;
                v.to_multivector()
            }
            Expr::Sigma => orientation_sigma(ctx),
            Expr::Var(name) => self
                .vars
                .get(name)
                .cloned()
                .ok_or_else(|| ExprError::Other(format!("unbound variable {name:?}")))?,
            Expr::Unary(op, inner) => {
                let u = self.eval(inner)?;
                match op {
                    UnOp::Neg => u.scale(&Scalar::from_int(-1)),
                    UnOp::Reverse => u.reverse(),
                    UnOp::GradeInv => u.grade_involution(),
                    UnOp::Conj => u.conjugate(),
                    UnOp::Hodge => hodge(&u),
                    UnOp::HodgeInv => hodge_inv(&u),
                }
            }
            Expr::Binary(op, l, r) => {
                let (u, v) = (self.eval(l)?, self.eval(r)?);
                match op {
                    BinOp::Add => u.checked_add(&v)?,
                    BinOp::Sub => u.checked_sub(&v)?,
                    BinOp::Wedge => wedge(&u, &v)?,
                    BinOp::Gp => gp(&u, &v)?,
                    BinOp::LContract => lcontract(&u, &v)?,
                    BinOp::RContract => rcontract(&u, &v)?,
                }
            }
            Expr::Juxt(l, r) => gp(&self.eval(l)?, &self.eval(r)?)?,
            Expr::Call(func, args) => {
                let vals = args.iter().map(|a| self.eval(a)).collect::<Result<Vec<_>, _>>()?;
                match func {
                    Func::Ip => ctx.scalar(bilinear(&vals[0], &vals[1])?),
                    Func::Grade => {
                        let r = grade_argument(&vals[1])?;
                        vals[0].grade_part(r)?
                    }
                    Func::Even => vals[0].even_part(),
                    Func::Odd => vals[0].odd_part(),
                    Func::Dual => hodge(&vals[0]),
                    Func::IDual => hodge_inv(&vals[0]),
                }
            }
        })
    }
}

fn grade_argument(v: &Multivecfor) -> Result<usize, ExprError> {
    let bad = || ExprError::Other("grade(u, r) needs a nonnegative integer r".into());
    let s = v.as_scalar().ok_or_else(bad)?;
    if !s.is_rational() || !s.rat_part().is_integer() || s.is_negative() {
        return Err(bad());
    }
    usize::try_from(s.rat_part().to_integer()).map_err(|_| bad())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(src: &str, n: usize) -> String {
        Env::new(AlgebraContext::new(n).unwrap()).eval_str(src).unwrap().to_string()
    }

    #[test]
    fn documented_values() {
        assert_eq!(ev("sigma*sigma", 2), "1");
        assert_eq!(ev("!sigma", 2), "1");
        assert_eq!(ev("!sigma", 1), "-1");
        assert_eq!(ev("ip(e1^t1, e1^t1)", 1), "-1");
        assert_eq!(ev("t1*e1 + e1*t1", 1), "2");
        assert_eq!(ev("t1*e1", 1), "1 - e1^t1");
        assert_eq!(ev("'(3 + e1)", 1), "3 - e1");
    }

    #[test]
    fn coefficients_and_calls() {
        assert_eq!(ev("1/2 r2 e1 + r2 e1", 2), "3/2 r2 e1");
        assert_eq!(ev("grade(2 + e1 + e1^t2, 1)", 2), "e1");
        assert_eq!(ev("even(2 + e1 + e1^t2)", 2), "2 + e1^t2");
        assert_eq!(ev("idual(dual(e1^t2))", 2), "e1^t2");
        assert_eq!(ev("s1*s1", 1), "1");
        assert_eq!(ev("s2*s2", 1), "-1");
        let env = Env::new(AlgebraContext::new(1).unwrap());
        assert!(env.eval_str("grade(e1, 1/2)").is_err());
        assert!(env.eval_str("grade(e1, 3)").is_err());
    }

    #[test]
    fn variables() {
        let mut env = Env::new(AlgebraContext::new(1).unwrap());
        let u = env.eval_str("e1 + t1").unwrap();
        env.bind("u", u).unwrap();
        assert_eq!(env.eval_str("u*u").unwrap().to_string(), "2");
        assert!(env.bind("e1", env.ctx().one()).is_err());
        assert!(env.bind("ip", env.ctx().one()).is_err());
    }
}
