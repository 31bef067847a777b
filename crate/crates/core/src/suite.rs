//! Randomized identity suites over the whole library.
//!
//! Every identity is checked exactly on `trials` seeded samples. Trials run
//! concurrently; results are collected by trial index, so a report depends only
//! on `(name, n, trials, seed)`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;

use crate::blade::Blade;
use crate::context::AlgebraContext;
use crate::duality::{differential_apply, hodge, hodge_inv, poincare_iso, sigma, SharpDirection};
use crate::endomorphisms::{
    dual_map, endo_matrix_sigma, isotropic_extension, projection, reflection, vecfor_endo, LinMapV,
};
use crate::error::{AlgebraError, Result};
use crate::hyperbolic::{
    gram_matrix, orientation_from_dual_pair, orientation_sigma, reciprocal_basis, second_order_basis,
    second_order_gram, sigma_basis, Ambient, Subspace, Vecfor,
};
use crate::linalg::Matrix;
use crate::multivector::Multivecfor;
use crate::products::{bilinear, lcontract, rcontract};
use crate::random::Sampler;
use crate::representation::{
    clifford_map_matrix, grade_scaling, ideal_action_matrix, rep, tensor_split_check, verify_end_iso,
    FockMatrix, MAX_REP_DIM,
};
use crate::scalar::Scalar;
use crate::spinor::{ideal_span, minimality_check, module_action, module_action_formula, theta_star};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SuiteName {
    Contractions,
    Products,
    Hodge,
    Witt,
    Endo,
    Ideals,
    All,
}

impl SuiteName {
    pub const NAMES: [&'static str; 7] = ["contractions", "products", "hodge", "witt", "endo", "ideals", "all"];

    pub fn name(self) -> &'static str {
        match self {
            SuiteName::Contractions => "contractions",
            SuiteName::Products => "products",
            SuiteName::Hodge => "hodge",
            SuiteName::Witt => "witt",
            SuiteName::Endo => "endo",
            SuiteName::Ideals => "ideals",
            SuiteName::All => "all",
        }
    }

    fn includes(self, group: SuiteName) -> bool {
        self == SuiteName::All || self == group
    }
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown suite {0:?} (expected one of contractions, products, hodge, witt, endo, ideals, all)")]
    UnknownSuite(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl FromStr for SuiteName {
    type Err = SuiteError;

    fn from_str(s: &str) -> std::result::Result<SuiteName, SuiteError> {
        Ok(match s {
            "contractions" => SuiteName::Contractions,
            "products" => SuiteName::Products,
            "hodge" => SuiteName::Hodge,
            "witt" => SuiteName::Witt,
            "endo" => SuiteName::Endo,
            "ideals" => SuiteName::Ideals,
            "all" => SuiteName::All,
            _ => return Err(SuiteError::UnknownSuite(s.to_string())),
        })
    }
}

/// `Err` carries a counterexample.
type Outcome = std::result::Result<(), String>;
type Check = fn(&Arc<AlgebraContext>, &mut Sampler) -> Outcome;

struct Identity {
    group: SuiteName,
    name: &'static str,
    check: Check,
    /// Deterministic checks run once regardless of `trials`.
    randomized: bool,
    max_dim: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdentityResult {
    pub suite: &'static str,
    pub name: &'static str,
    pub trials: usize,
    pub failures: usize,
    /// First failing trial by index.
    pub counterexample: Option<String>,
}

impl IdentityResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuiteReport {
    pub suite: SuiteName,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub results: Vec<IdentityResult>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(IdentityResult::passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &IdentityResult> {
        self.results.iter().filter(|r| !r.passed())
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {} n={} trials={} seed={}",
            self.suite.name(),
            self.n,
            self.trials,
            self.seed
        )?;
        let width = self.results.iter().map(|r| r.suite.len() + r.name.len() + 1).max().unwrap_or(0);
        for r in &self.results {
            let label = format!("{}/{}", r.suite, r.name);
            let status = if r.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "  {status}  {label:<width$}  {}/{}", r.trials - r.failures, r.trials)?;
            if let Some(c) = &r.counterexample {
                writeln!(f, "        counterexample: {c}")?;
            }
        }
        let passed = self.results.iter().filter(|r| r.passed()).count();
        write!(f, "{passed}/{} identities pass", self.results.len())
    }
}

/// Runs every identity of `name` applicable at dimension `n`.
pub fn run_suite(name: &str, n: usize, trials: usize, seed: u64) -> std::result::Result<SuiteReport, SuiteError> {
    let suite: SuiteName = name.parse()?;
    let ctx = AlgebraContext::new(n)?;
    let results = catalogue()
        .iter()
        .enumerate()
        .filter(|(_, id)| suite.includes(id.group) && n <= id.max_dim)
        .map(|(index, id)| run_identity(&ctx, id, index as u64, trials, seed))
        .collect();
    Ok(SuiteReport {
        suite,
        n,
        trials,
        seed,
        results,
    })
}

fn run_identity(ctx: &Arc<AlgebraContext>, id: &Identity, index: u64, trials: usize, seed: u64) -> IdentityResult {
    let count = if id.randomized { trials } else { 1 };
    let stream_seed = seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    let outcomes: Vec<Outcome> = (0..count as u64)
        .into_par_iter()
        .map(|t| (id.check)(ctx, &mut Sampler::for_trial(stream_seed, t)))
        .collect();
    let failures = outcomes.iter().filter(|o| o.is_err()).count();
    let counterexample = outcomes.into_iter().find_map(|o| o.err());
    IdentityResult {
        suite: id.group.name(),
        name: id.name,
        trials: count,
        failures,
        counterexample,
    }
}

fn lc(a: &Multivecfor, b: &Multivecfor) -> Multivecfor {
    lcontract(a, b).expect("same context")
}

fn rc(a: &Multivecfor, b: &Multivecfor) -> Multivecfor {
    rcontract(a, b).expect("same context")
}

fn ip(a: &Multivecfor, b: &Multivecfor) -> Scalar {
    bilinear(a, b).expect("same context")
}

fn describe(inputs: &[(&str, &dyn fmt::Display)]) -> String {
    inputs.iter().map(|(k, v)| format!("{k} = {v}")).collect::<Vec<_>>().join("; ")
}

fn same<T: PartialEq + fmt::Display>(lhs: &T, rhs: &T, inputs: &[(&str, &dyn fmt::Display)]) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{}; lhs = {lhs}; rhs = {rhs}", describe(inputs)))
    }
}

fn holds(ok: bool, inputs: &[(&str, &dyn fmt::Display)]) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(describe(inputs))
    }
}

fn algebra<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn three(ctx: &Arc<AlgebraContext>, s: &mut Sampler) -> (Multivecfor, Multivecfor, Multivecfor) {
    (s.multivector(ctx), s.multivector(ctx), s.multivector(ctx))
}

fn vecfor_mv(ctx: &Arc<AlgebraContext>, s: &mut Sampler) -> Multivecfor {
    s.vecfor(ctx).to_multivector()
}

struct Coords<'a>(&'a [Scalar]);

impl fmt::Display for Coords<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

struct Rows<'a>(&'a Matrix);

impl fmt::Display for Rows<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.0.row_vectors().iter().map(|r| Coords(r).to_string()).collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

struct Space<'a>(&'a Subspace);

impl fmt::Display for Space<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.0.basis().iter().map(|r| Coords(r).to_string()).collect();
        write!(f, "span{{{}}}", rows.join(", "))
    }
}

struct VecforDisplay<'a>(&'a Vecfor);

impl fmt::Display for VecforDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.to_multivector())
    }
}

impl fmt::Display for FockMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Rows(self.matrix()))
    }
}

macro_rules! identity {
    ($group:ident, $name:literal, $check:expr) => {
        Identity {
            group: SuiteName::$group,
            name: $name,
            check: $check,
            randomized: true,
            max_dim: usize::MAX,
        }
    };
    ($group:ident, $name:literal, once, $check:expr) => {
        Identity {
            group: SuiteName::$group,
            name: $name,
            check: $check,
            randomized: false,
            max_dim: usize::MAX,
        }
    };
    ($group:ident, $name:literal, max_dim = $max:expr, $($rest:tt)*) => {
        Identity {
            max_dim: $max,
            ..identity!($group, $name, $($rest)*)
        }
    };
}

fn catalogue() -> Vec<Identity> {
    let mut all = contraction_identities();
    all.extend(product_identities());
    all.extend(hodge_identities());
    all.extend(witt_identities());
    all.extend(endo_identities());
    all.extend(ideal_identities());
    all
}

fn contraction_identities() -> Vec<Identity> {
    vec![
        identity!(Contractions, "x_|y = x|_y = <x,y>", |ctx, s| {
            let (x, y) = (vecfor_mv(ctx, s), vecfor_mv(ctx, s));
            let pairing = ctx.scalar(ip(&x, &y));
            let inputs: &[(&str, &dyn fmt::Display)] = &[("x", &x), ("y", &y)];
            same(&lc(&x, &y), &pairing, inputs)?;
            same(&rc(&x, &y), &pairing, inputs)
        }),
        identity!(Contractions, "1_|u = u|_1 = u, x_|1 = 1|_x = 0", |ctx, s| {
            let (u, x) = (s.multivector(ctx), vecfor_mv(ctx, s));
            let one = ctx.one();
            let inputs: &[(&str, &dyn fmt::Display)] = &[("u", &u), ("x", &x)];
            same(&lc(&one, &u), &u, inputs)?;
            same(&rc(&u, &one), &u, inputs)?;
            same(&lc(&x, &one), &ctx.zero(), inputs)?;
            same(&rc(&one, &x), &ctx.zero(), inputs)
        }),
        identity!(Contractions, "(u_|v)^ = u^ _| v^", |ctx, s| {
            let (u, v, _) = three(ctx, s);
            let lhs = lc(&u, &v).grade_involution();
            same(&lhs, &lc(&u.grade_involution(), &v.grade_involution()), &[("u", &u), ("v", &v)])
        }),
        identity!(Contractions, "(u|_v)^ = u^ |_ v^", |ctx, s| {
            let (u, v, _) = three(ctx, s);
            let lhs = rc(&u, &v).grade_involution();
            same(&lhs, &rc(&u.grade_involution(), &v.grade_involution()), &[("u", &u), ("v", &v)])
        }),
        identity!(Contractions, "(u_|v)~ = v~ |_ u~", |ctx, s| {
            let (u, v, _) = three(ctx, s);
            same(&lc(&u, &v).reverse(), &rc(&v.reverse(), &u.reverse()), &[("u", &u), ("v", &v)])
        }),
        identity!(Contractions, "(u|_v)~ = v~ _| u~", |ctx, s| {
            let (u, v, _) = three(ctx, s);
            same(&rc(&u, &v).reverse(), &lc(&v.reverse(), &u.reverse()), &[("u", &u), ("v", &v)])
        }),
        identity!(Contractions, "u_|(v_|w) = (u^v)_|w", |ctx, s| {
            let (u, v, w) = three(ctx, s);
            same(&lc(&u, &lc(&v, &w)), &lc(&(&u ^ &v), &w), &[("u", &u), ("v", &v), ("w", &w)])
        }),
        identity!(Contractions, "(u|_v)|_w = u|_(v^w)", |ctx, s| {
            let (u, v, w) = three(ctx, s);
            same(&rc(&rc(&u, &v), &w), &rc(&u, &(&v ^ &w)), &[("u", &u), ("v", &v), ("w", &w)])
        }),
        identity!(Contractions, "(u_|v)|_w = u_|(v|_w)", |ctx, s| {
            let (u, v, w) = three(ctx, s);
            same(&rc(&lc(&u, &v), &w), &lc(&u, &rc(&v, &w)), &[("u", &u), ("v", &v), ("w", &w)])
        }),
        identity!(Contractions, "x_|(u^v) = (x_|u)^v + u^ ^ (x_|v)", |ctx, s| {
            let (u, v, _) = three(ctx, s);
            let x = vecfor_mv(ctx, s);
            let rhs = &(&lc(&x, &u) ^ &v) + &(&u.grade_involution() ^ &lc(&x, &v));
            same(&lc(&x, &(&u ^ &v)), &rhs, &[("x", &x), ("u", &u), ("v", &v)])
        }),
        identity!(Contractions, "(u^v)|_x = u^(v|_x) + (u|_x)^v^", |ctx, s| {
            let (u, v, _) = three(ctx, s);
            let x = vecfor_mv(ctx, s);
            let rhs = &(&u ^ &rc(&v, &x)) + &(&rc(&u, &x) ^ &v.grade_involution());
            same(&rc(&(&u ^ &v), &x), &rhs, &[("x", &x), ("u", &u), ("v", &v)])
        }),
        identity!(Contractions, "x^(u_|v) = u^ _| (x^v) - (u^ |_ x)_|v", |ctx, s| {
            let (u, v, _) = three(ctx, s);
            let x = vecfor_mv(ctx, s);
            let uh = u.grade_involution();
            let rhs = &lc(&uh, &(&x ^ &v)) - &lc(&rc(&uh, &x), &v);
            same(&(&x ^ &lc(&u, &v)), &rhs, &[("x", &x), ("u", &u), ("v", &v)])
        }),
        identity!(Contractions, "(u|_v)^x = (u^x)|_v^ - u|_(x_|v^)", |ctx, s| {
            let (u, v, _) = three(ctx, s);
            let x = vecfor_mv(ctx, s);
            let vh = v.grade_involution();
            let rhs = &rc(&(&u ^ &x), &vh) - &rc(&u, &lc(&x, &vh));
            same(&(&rc(&u, &v) ^ &x), &rhs, &[("x", &x), ("u", &u), ("v", &v)])
        }),
        identity!(Contractions, "u+ _| v = v |_ u+", |ctx, s| {
            let (u, v, _) = three(ctx, s);
            let up = u.even_part();
            same(&lc(&up, &v), &rc(&v, &up), &[("u+", &up), ("v", &v)])
        }),
        identity!(Contractions, "u- _| v = v^ |_ u-^", |ctx, s| {
            let (u, v, _) = three(ctx, s);
            let um = u.odd_part();
            let rhs = rc(&v.grade_involution(), &um.grade_involution());
            same(&lc(&um, &v), &rhs, &[("u-", &um), ("v", &v)])
        }),
        identity!(Contractions, "u^(v_|sigma) = (u_|v)_|sigma", |ctx, s| {
            let (u, v, _) = three(ctx, s);
            let sg = sigma(&u);
            same(&(&u ^ &lc(&v, &sg)), &lc(&lc(&u, &v), &sg), &[("u", &u), ("v", &v)])
        }),
        identity!(Contractions, "(sigma|_u)^v = sigma|_(u|_v)", |ctx, s| {
            let (u, v, _) = three(ctx, s);
            let sg = sigma(&u);
            same(&(&rc(&sg, &u) ^ &v), &rc(&sg, &rc(&u, &v)), &[("u", &u), ("v", &v)])
        }),
        identity!(Contractions, "u_* _| v_* = 0 and u* _| v* = 0 for grade >= 1", |ctx, s| {
            let strip = |u: Multivecfor| u.filter(|b| b.grade() > 0);
            let (a, b) = (strip(s.vector_only(ctx)), s.vector_only(ctx));
            let (c, d) = (strip(s.form_only(ctx)), s.form_only(ctx));
            let inputs: &[(&str, &dyn fmt::Display)] = &[("u_*", &a), ("v_*", &b), ("u*", &c), ("v*", &d)];
            same(&lc(&a, &b), &ctx.zero(), inputs)?;
            same(&lc(&c, &d), &ctx.zero(), inputs)
        }),
        identity!(Contractions, "x_|(u_* ^ u*) = (x*_|u_*)^u* + u_*^ ^ (x_*_|u*)", |ctx, s| {
            let (a, b) = (s.vector_only(ctx), s.form_only(ctx));
            let x = s.vecfor(ctx);
            let (xv, xf) = split_vecfor(&x);
            let rhs = &(&lc(&xf, &a) ^ &b) + &(&a.grade_involution() ^ &lc(&xv, &b));
            let xm = x.to_multivector();
            same(&lc(&xm, &(&a ^ &b)), &rhs, &[("x", &xm), ("u_*", &a), ("u*", &b)])
        }),
        identity!(Contractions, "<u,v> = (-1)^(rs) u*(v_*) v*(u_*)", |ctx, s| {
            let n = ctx.dim();
            let r = s.index(n + 1);
            let q = s.index(n + 1);
            let (ua, ub) = (s.vector_only_grade(ctx, r), s.form_only_grade(ctx, q));
            let (va, vb) = (s.vector_only_grade(ctx, q), s.form_only_grade(ctx, r));
            let lhs = ip(&(&ua ^ &ub), &(&va ^ &vb));
            let rhs = (&ip(&ub, &va) * &ip(&vb, &ua)) * &Scalar::sign(r * q);
            same(&lhs, &rhs, &[("u_*", &ua), ("u*", &ub), ("v_*", &va), ("v*", &vb)])
        }),
        identity!(Contractions, "d^2 = 0 with d = x_|", |ctx, s| {
            let (x, u) = (s.vecfor(ctx), s.multivector(ctx));
            let dd = algebra(differential_apply(&x, &algebra(differential_apply(&x, &u))?))?;
            same(&dd, &ctx.zero(), &[("x", &VecforDisplay(&x)), ("u", &u)])
        }),
        identity!(Contractions, "d u^ + (d u)^ = 0", |ctx, s| {
            let (x, u) = (s.vecfor(ctx), s.multivector(ctx));
            let a = algebra(differential_apply(&x, &u.grade_involution()))?;
            let b = algebra(differential_apply(&x, &u))?.grade_involution();
            same(&(&a + &b), &ctx.zero(), &[("x", &VecforDisplay(&x)), ("u", &u)])
        }),
        identity!(Contractions, "d(u^v) = du^v + u^ ^ dv", |ctx, s| {
            let (x, u, v) = (s.vecfor(ctx), s.multivector(ctx), s.multivector(ctx));
            let d = |w: &Multivecfor| differential_apply(&x, w).expect("same context");
            let rhs = &(&d(&u) ^ &v) + &(&u.grade_involution() ^ &d(&v));
            same(&d(&(&u ^ &v)), &rhs, &[("x", &VecforDisplay(&x)), ("u", &u), ("v", &v)])
        }),
    ]
}

fn split_vecfor(x: &Vecfor) -> (Multivecfor, Multivecfor) {
    let ctx = x.ctx();
    let zeros = vec![Scalar::zero(); x.dim()];
    let xv = Vecfor::new(ctx, x.vec_part().to_vec(), zeros.clone()).expect("shape");
    let xf = Vecfor::new(ctx, zeros, x.form_part().to_vec()).expect("shape");
    (xv.to_multivector(), xf.to_multivector())
}

fn product_identities() -> Vec<Identity> {
    vec![
        identity!(Products, "associativity (uv)w = u(vw)", |ctx, s| {
            let (u, v, w) = three(ctx, s);
            same(&(&(&u * &v) * &w), &(&u * &(&v * &w)), &[("u", &u), ("v", &v), ("w", &w)])
        }),
        identity!(Products, "u_|sigma = u sigma and sigma|_u = sigma u", |ctx, s| {
            let u = s.multivector(ctx);
            let sg = sigma(&u);
            same(&lc(&u, &sg), &(&u * &sg), &[("u", &u)])?;
            same(&rc(&sg, &u), &(&sg * &u), &[("u", &u)])
        }),
        identity!(Products, "<u,vw> = <v~u,w> = <uw~,v>", |ctx, s| {
            let (u, v, w) = three(ctx, s);
            let a = ip(&u, &(&v * &w));
            let inputs: &[(&str, &dyn fmt::Display)] = &[("u", &u), ("v", &v), ("w", &w)];
            same(&a, &ip(&(&v.reverse() * &u), &w), inputs)?;
            same(&a, &ip(&(&u * &w.reverse()), &v), inputs)
        }),
        identity!(Products, "x^u = (xu + u^x)/2", |ctx, s| {
            let (x, u) = (vecfor_mv(ctx, s), s.multivector(ctx));
            let rhs = (&(&x * &u) + &(&u.grade_involution() * &x)).scale(&Scalar::frac(1, 2));
            same(&(&x ^ &u), &rhs, &[("x", &x), ("u", &u)])
        }),
        identity!(Products, "x_|u = (xu - u^x)/2", |ctx, s| {
            let (x, u) = (vecfor_mv(ctx, s), s.multivector(ctx));
            let rhs = (&(&x * &u) - &(&u.grade_involution() * &x)).scale(&Scalar::frac(1, 2));
            same(&lc(&x, &u), &rhs, &[("x", &x), ("u", &u)])
        }),
        identity!(Products, "x_|(uv) = (x_|u)v + u^(x_|v)", |ctx, s| {
            let (u, v, _) = three(ctx, s);
            let x = vecfor_mv(ctx, s);
            let rhs = &(&lc(&x, &u) * &v) + &(&u.grade_involution() * &lc(&x, &v));
            same(&lc(&x, &(&u * &v)), &rhs, &[("x", &x), ("u", &u), ("v", &v)])
        }),
        identity!(Products, "(uv)|_x = u(v|_x) + (u|_x)v^", |ctx, s| {
            let (u, v, _) = three(ctx, s);
            let x = vecfor_mv(ctx, s);
            let rhs = &(&u * &rc(&v, &x)) + &(&rc(&u, &x) * &v.grade_involution());
            same(&rc(&(&u * &v), &x), &rhs, &[("x", &x), ("u", &u), ("v", &v)])
        }),
        identity!(Products, "x(u_* ^ u*) = (x* u_*)^u* + u_*^ ^ (x_* u*)", |ctx, s| {
            let (a, b) = (s.vector_only(ctx), s.form_only(ctx));
            let x = s.vecfor(ctx);
            let (xv, xf) = split_vecfor(&x);
            let rhs = &(&(&xf * &a) ^ &b) + &(&a.grade_involution() ^ &(&xv * &b));
            let xm = x.to_multivector();
            same(&(&xm * &(&a ^ &b)), &rhs, &[("x", &xm), ("u_*", &a), ("u*", &b)])
        }),
        identity!(Products, "!u = u~ sigma", |ctx, s| {
            let u = s.multivector(ctx);
            same(&hodge(&u), &(&u.reverse() * &sigma(&u)), &[("u", &u)])
        }),
        identity!(Products, "!(uv) = v~ (!u)", |ctx, s| {
            let (u, v, _) = three(ctx, s);
            same(&hodge(&(&u * &v)), &(&v.reverse() * &hodge(&u)), &[("u", &u), ("v", &v)])
        }),
        identity!(Products, "!!(uv) = (!!v) u~", |ctx, s| {
            let (u, v, _) = three(ctx, s);
            same(&hodge_inv(&(&u * &v)), &(&hodge_inv(&v) * &u.reverse()), &[("u", &u), ("v", &v)])
        }),
    ]
}

fn hodge_identities() -> Vec<Identity> {
    vec![
        identity!(Hodge, "!sigma = (-1)^n and !!sigma = 1", once, |ctx, _| {
            let sg = orientation_sigma(ctx);
            same(&hodge(&sg), &ctx.scalar(Scalar::sign(ctx.dim())), &[("sigma", &sg)])?;
            same(&hodge_inv(&sg), &ctx.one(), &[("sigma", &sg)])
        }),
        identity!(Hodge, "!!(!u) = !(!!u) = u", |ctx, s| {
            let u = s.multivector(ctx);
            same(&hodge_inv(&hodge(&u)), &u, &[("u", &u)])?;
            same(&hodge(&hodge_inv(&u)), &u, &[("u", &u)])
        }),
        identity!(Hodge, "<!u,!v> = (-1)^n <u,v>", |ctx, s| {
            let (u, v, _) = three(ctx, s);
            let rhs = &ip(&u, &v) * &Scalar::sign(ctx.dim());
            same(&ip(&hodge(&u), &hodge(&v)), &rhs, &[("u", &u), ("v", &v)])
        }),
        identity!(Hodge, "!(u^v) = v~ _| !u", |ctx, s| {
            let (u, v, _) = three(ctx, s);
            same(&hodge(&(&u ^ &v)), &lc(&v.reverse(), &hodge(&u)), &[("u", &u), ("v", &v)])
        }),
        identity!(Hodge, "!!(u^v) = (!!v) |_ u~", |ctx, s| {
            let (u, v, _) = three(ctx, s);
            same(&hodge_inv(&(&u ^ &v)), &rc(&hodge_inv(&v), &u.reverse()), &[("u", &u), ("v", &v)])
        }),
        identity!(Hodge, "!(u|_v) = v~ ^ !u", |ctx, s| {
            let (u, v, _) = three(ctx, s);
            same(&hodge(&rc(&u, &v)), &(&v.reverse() ^ &hodge(&u)), &[("u", &u), ("v", &v)])
        }),
        identity!(Hodge, "!!(u_|v) = (!!v) ^ u~", |ctx, s| {
            let (u, v, _) = three(ctx, s);
            same(&hodge_inv(&lc(&u, &v)), &(&hodge_inv(&v) ^ &u.reverse()), &[("u", &u), ("v", &v)])
        }),
        identity!(Hodge, "grade(!u) = 2n - grade(u)", |ctx, s| {
            let r = s.index(2 * ctx.dim() + 1);
            let u = s.homogeneous(ctx, r);
            let h = hodge(&u);
            let ok = h.terms().all(|(b, _)| b.grade() == 2 * ctx.dim() - r);
            holds(ok, &[("u", &u)])
        }),
        identity!(Hodge, "!u* = D_# u* ^ theta* and !u_* = e_* ^ D^# u_*", |ctx, s| {
            let n = ctx.dim();
            let (a, b) = (s.vector_only(ctx), s.form_only(ctx));
            let down = algebra(poincare_iso(&b, SharpDirection::Down))?;
            let up = algebra(poincare_iso(&a, SharpDirection::Up))?;
            let inputs: &[(&str, &dyn fmt::Display)] = &[("u_*", &a), ("u*", &b)];
            same(&hodge(&b), &(&down ^ &ctx.blade(Blade::theta_star(n))), inputs)?;
            same(&hodge(&a), &(&ctx.blade(Blade::e_star(n)) ^ &up), inputs)?;
            same(&hodge(&(&a ^ &b)), &(&down ^ &up), inputs)
        }),
    ]
}

fn witt_identities() -> Vec<Identity> {
    vec![
        identity!(Witt, "e_k e_l + e_l e_k = 0, t_k t_l + t_l t_k = 0, t_k e_l + e_l t_k = 2 delta", once, |ctx, _| {
            let n = ctx.dim();
            for k in 1..=n {
                for l in 1..=n {
                    let (ek, el, tk, tl) = (ctx.e(k), ctx.e(l), ctx.t(k), ctx.t(l));
                    let inputs: &[(&str, &dyn fmt::Display)] = &[("k", &k), ("l", &l)];
                    same(&(&(&ek * &el) + &(&el * &ek)), &ctx.zero(), inputs)?;
                    same(&(&(&tk * &tl) + &(&tl * &tk)), &ctx.zero(), inputs)?;
                    let delta = ctx.scalar(Scalar::from_int(2 * (k == l) as i64));
                    same(&(&(&tk * &el) + &(&el * &tk)), &delta, inputs)?;
                }
            }
            Ok(())
        }),
        identity!(Witt, "sigma_k sigma_l + sigma_l sigma_k = +-2 delta", once, |ctx, _| {
            let n = ctx.dim();
            let basis: Vec<Multivecfor> = sigma_basis(ctx).iter().map(Vecfor::to_multivector).collect();
            for (k, a) in basis.iter().enumerate() {
                for (l, b) in basis.iter().enumerate() {
                    let sign = if k < n { 2 } else { -2 };
                    let expected = ctx.scalar(Scalar::from_int(if k == l { sign } else { 0 }));
                    same(&(&(a * b) + &(b * a)), &expected, &[("k", &(k + 1)), ("l", &(l + 1))])?;
                }
            }
            Ok(())
        }),
        identity!(Witt, "Gram(sigma basis) = diag(1^n, (-1)^n)", once, |ctx, _| {
            let n = ctx.dim();
            let d: Vec<Scalar> = (0..2 * n).map(|i| Scalar::from_int(if i < n { 1 } else { -1 })).collect();
            let g = gram_matrix(&sigma_basis(ctx));
            same(&Rows(&g).to_string(), &Rows(&Matrix::diagonal(&d)).to_string(), &[])
        }),
        identity!(Witt, "reciprocal basis sigma^k = sigma_k, sigma^(n+k) = -sigma_(n+k)", once, |ctx, _| {
            let n = ctx.dim();
            let basis = sigma_basis(ctx);
            let recip = algebra(reciprocal_basis(&basis))?;
            for (i, (r, b)) in recip.iter().zip(&basis).enumerate() {
                let expected = if i < n { b.clone() } else { b.scale(&Scalar::from_int(-1)) };
                same(&r.to_multivector(), &expected.to_multivector(), &[("index", &(i + 1))])?;
            }
            Ok(())
        }),
        identity!(Witt, "sigma = e_*^t*, <sigma,sigma> = (-1)^n, sigma^2 = 1", once, |ctx, _| {
            let n = ctx.dim();
            let sg = orientation_sigma(ctx);
            let inputs: &[(&str, &dyn fmt::Display)] = &[("sigma", &sg)];
            same(&sg, &(&ctx.blade(Blade::e_star(n)) ^ &ctx.blade(Blade::theta_star(n))), inputs)?;
            same(&ip(&sg, &sg), &Scalar::sign(n), inputs)?;
            same(&(&sg * &sg), &ctx.one(), inputs)
        }),
        identity!(Witt, "sigma is invariant under change of dual basis pair", |ctx, s| {
            let a = s.invertible_matrix(ctx.dim());
            let sg = algebra(orientation_from_dual_pair(ctx, &a))?;
            same(&sg, &orientation_sigma(ctx), &[("A", &Rows(&a))])
        }),
        identity!(Witt, "<x,y> = x*(y_*) + y*(x_*), <x_*,y_*> = <x*,y*> = 0", |ctx, s| {
            let (x, y) = (s.vecfor(ctx), s.vecfor(ctx));
            let pair = |f: &[Scalar], v: &[Scalar]| f.iter().zip(v).fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b));
            let expected = &pair(x.form_part(), y.vec_part()) + &pair(y.form_part(), x.vec_part());
            let (xm, ym) = (x.to_multivector(), y.to_multivector());
            let inputs: &[(&str, &dyn fmt::Display)] = &[("x", &xm), ("y", &ym)];
            same(&ip(&xm, &ym), &expected, inputs)?;
            same(&x.inner(&y), &expected, inputs)?;
            let (xv, xf) = split_vecfor(&x);
            let (yv, yf) = split_vecfor(&y);
            same(&ip(&xv, &yv), &Scalar::zero(), inputs)?;
            same(&ip(&xf, &yf), &Scalar::zero(), inputs)
        }),
        identity!(Witt, "sigma components round trip and conjugate swap", |ctx, s| {
            let n = ctx.dim();
            let x = s.vecfor(ctx);
            let c = x.sigma_components();
            let back = algebra(Vecfor::from_sigma_components(ctx, &c))?;
            let inputs: &[(&str, &dyn fmt::Display)] = &[("x", &VecforDisplay(&x))];
            same(&back.to_multivector(), &x.to_multivector(), inputs)?;
            let cc = x.conjugate().sigma_components();
            let swapped: Vec<Scalar> = (0..2 * n).map(|i| c[(i + n) % (2 * n)].clone()).collect();
            same(&Coords(&cc).to_string(), &Coords(&swapped).to_string(), inputs)
        }),
        identity!(Witt, "null subspaces: S''=S, reversal, sums, intersections, dimension", |ctx, s| {
            let n = ctx.dim();
            let (s1, s2) = (s.subspace(Ambient::V, n), s.subspace(Ambient::V, n));
            let p = |w: &Subspace| w.null_subspace().expect("subspace of V or V*");
            let inputs: &[(&str, &dyn fmt::Display)] = &[("S1", &Space(&s1)), ("S2", &Space(&s2))];
            holds(p(&p(&s1)).same_as(&s1), inputs)?;
            let inner = s1.intersection(&s2);
            holds(p(&inner).contains(&p(&s1)), inputs)?;
            holds(p(&s1.sum(&s2)).same_as(&p(&s1).intersection(&p(&s2))), inputs)?;
            holds(p(&inner).same_as(&p(&s1).sum(&p(&s2))), inputs)?;
            holds(s1.dim() + p(&s1).dim() == n, inputs)
        }),
        identity!(Witt, "I(S) has dimension n and is totally isotropic", |ctx, s| {
            let n = ctx.dim();
            let s1 = s.subspace(Ambient::V, n);
            let i = algebra(s1.isotropic_i())?;
            let vs = algebra(i.vecfors(ctx))?;
            let isotropic = vs.iter().all(|a| vs.iter().all(|b| a.inner(b).is_zero()));
            holds(i.dim() == n && isotropic, &[("S", &Space(&s1))])
        }),
        identity!(Witt, "rho_b isometry b(x+,y+) - b(x-,y-) = <x,y>", |ctx, s| {
            let b = s.symmetric_form(ctx.dim());
            let (x, y) = (s.vecfor(ctx), s.vecfor(ctx));
            let xs = algebra(b.rho_b_split(&x))?;
            let ys = algebra(b.rho_b_split(&y))?;
            let lhs = &b.eval(&xs.0, &ys.0) - &b.eval(&xs.1, &ys.1);
            let inputs: &[(&str, &dyn fmt::Display)] =
                &[("b", &Rows(b.matrix())), ("x", &VecforDisplay(&x)), ("y", &VecforDisplay(&y))];
            same(&lhs, &x.inner(&y), inputs)?;
            same(&b.split_form(&xs, &ys), &x.inner(&y), inputs)
        }),
        identity!(Witt, "second-order Gram = diag(1^2n, (-1)^2n)", once, |ctx, _| {
            let n = ctx.dim();
            let d: Vec<Scalar> = (0..4 * n).map(|i| Scalar::from_int(if i < 2 * n { 1 } else { -1 })).collect();
            let g = second_order_gram(&second_order_basis(ctx));
            same(&Rows(&g).to_string(), &Rows(&Matrix::diagonal(&d)).to_string(), &[])
        }),
    ]
}

fn endo_identities() -> Vec<Identity> {
    vec![
        identity!(Endo, "dual map: phi** = phi, (phi psi)* = psi* phi*", |ctx, s| {
            let n = ctx.dim();
            let (a, b) = (s.matrix(n, n), s.matrix(n, n));
            let (phi, psi) = (algebra(LinMapV::new(a.clone()))?, algebra(LinMapV::new(b.clone()))?);
            let inputs: &[(&str, &dyn fmt::Display)] = &[("phi", &Rows(&a)), ("psi", &Rows(&b))];
            holds(dual_map(&phi).dual().matrix() == phi.matrix(), inputs)?;
            let lhs = dual_map(&phi.compose(&psi));
            let rhs = dual_map(&psi).compose(&dual_map(&phi));
            holds(lhs.matrix() == rhs.matrix(), inputs)
        }),
        identity!(Endo, "ker phi* = (im phi)', im phi* = (ker phi)'", |ctx, s| {
            let n = ctx.dim();
            // Low-rank maps exercise nontrivial kernels.
            let k = s.index(n) + 1;
            let a = &s.matrix(n, k) * &s.matrix(k, n);
            let phi = algebra(LinMapV::new(a.clone()))?;
            let dual = dual_map(&phi);
            let image_dual = Subspace::span(Ambient::VDual, n, dual.matrix().transpose().row_vectors());
            let image_dual = algebra(image_dual)?;
            let inputs: &[(&str, &dyn fmt::Display)] = &[("phi", &Rows(&a))];
            holds(dual.kernel().same_as(&algebra(phi.image().null_subspace())?), inputs)?;
            holds(image_dual.same_as(&algebra(phi.kernel().null_subspace())?), inputs)
        }),
        identity!(Endo, "det phi* = det phi, tr phi* = tr phi", |ctx, s| {
            let n = ctx.dim();
            let a = s.matrix(n, n);
            let dual = dual_map(&algebra(LinMapV::new(a.clone()))?);
            let inputs: &[(&str, &dyn fmt::Display)] = &[("phi", &Rows(&a))];
            same(&dual.matrix().det(), &a.det(), inputs)?;
            same(&dual.matrix().trace(), &a.trace(), inputs)
        }),
        identity!(Endo, "phi(S) in S implies phi*(S') in S' and I(phi) stabilizes I(S)", |ctx, s| {
            let n = ctx.dim();
            let a = s.matrix(n, n);
            let phi = algebra(LinMapV::new(a.clone()))?;
            let dual = dual_map(&phi);
            let inputs: &[(&str, &dyn fmt::Display)] = &[("phi", &Rows(&a))];
            for stable in [phi.image(), phi.kernel()] {
                let prime = algebra(stable.null_subspace())?;
                holds(prime.basis().iter().all(|f| prime.contains_vector(&dual.apply(f))), inputs)?;
                holds(isotropic_extension(&phi).stabilizes(&algebra(stable.isotropic_i())?), inputs)?;
            }
            Ok(())
        }),
        identity!(Endo, "I(id) = id, I(phi psi) = I(phi) I(psi) for commuting phi, psi", |ctx, s| {
            let n = ctx.dim();
            let a = s.matrix(n, n);
            // Polynomials in one matrix commute.
            let b = &(&a * &a) - &a.scale(&s.rational());
            let (phi, psi) = (algebra(LinMapV::new(a.clone()))?, algebra(LinMapV::new(b))?);
            let lhs = isotropic_extension(&phi.compose(&psi));
            let rhs = isotropic_extension(&phi).compose(&isotropic_extension(&psi));
            let id = isotropic_extension(&LinMapV::identity(n));
            holds(lhs.matrix() == rhs.matrix() && id.matrix() == &Matrix::identity(2 * n), &[("phi", &Rows(&a))])
        }),
        identity!(Endo, "vecfor map x(y_*) = x*(y_*) x_* and its dual", |ctx, s| {
            let n = ctx.dim();
            let (x, y) = (s.vecfor(ctx), s.vecfor(ctx));
            let map = vecfor_endo(&x);
            let pair = |f: &[Scalar], v: &[Scalar]| f.iter().zip(v).fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b));
            let c = pair(x.form_part(), y.vec_part());
            let expected: Vec<Scalar> = x.vec_part().iter().map(|v| &c * v).collect();
            let d = pair(y.form_part(), x.vec_part());
            let expected_dual: Vec<Scalar> = x.form_part().iter().map(|v| &d * v).collect();
            let inputs: &[(&str, &dyn fmt::Display)] = &[("x", &VecforDisplay(&x)), ("y", &VecforDisplay(&y))];
            holds(map.apply(y.vec_part()) == expected, inputs)?;
            holds(dual_map(&map).apply(y.form_part()) == expected_dual && n == x.dim(), inputs)
        }),
        identity!(Endo, "projection: P^2 = P, <Py,z> = <y,Pz>, image P_x = span x_*", |ctx, s| {
            let x = s.non_null_vecfor(ctx);
            let (y, z) = (s.vecfor(ctx), s.vecfor(ctx));
            let p = algebra(projection(&x))?;
            let inputs: &[(&str, &dyn fmt::Display)] =
                &[("x", &VecforDisplay(&x)), ("y", &VecforDisplay(&y)), ("z", &VecforDisplay(&z))];
            holds(p.compose(&p).matrix() == p.matrix(), inputs)?;
            same(&p.apply(&y).inner(&z), &y.inner(&p.apply(&z)), inputs)?;
            let n = ctx.dim();
            let block = algebra(LinMapV::new(p.matrix().block(0, 0, n, n)))?;
            let line = algebra(Subspace::span(Ambient::V, n, vec![x.vec_part().to_vec()]))?;
            holds(block.image().same_as(&line), inputs)
        }),
        identity!(Endo, "reflection: R^2 = 1, <Ry,Rz> = <y,z>", |ctx, s| {
            let x = s.non_null_vecfor(ctx);
            let (y, z) = (s.vecfor(ctx), s.vecfor(ctx));
            let r = algebra(reflection(&x))?;
            let inputs: &[(&str, &dyn fmt::Display)] =
                &[("x", &VecforDisplay(&x)), ("y", &VecforDisplay(&y)), ("z", &VecforDisplay(&z))];
            holds(r.compose(&r).matrix() == &Matrix::identity(2 * ctx.dim()), inputs)?;
            same(&r.apply(&y).inner(&r.apply(&z)), &y.inner(&z), inputs)
        }),
        identity!(Endo, "sigma-basis matrices of P and R are diagonal at k and n+k", once, |ctx, _| {
            let n = ctx.dim();
            let basis = sigma_basis(ctx);
            for (k, b) in basis.iter().enumerate() {
                let hit = |i: usize| i % n == k % n;
                let pd: Vec<Scalar> = (0..2 * n).map(|i| Scalar::from_int(hit(i) as i64)).collect();
                let rd: Vec<Scalar> = (0..2 * n).map(|i| Scalar::from_int(if hit(i) { -1 } else { 1 })).collect();
                let p = algebra(endo_matrix_sigma(ctx, &algebra(projection(b))?))?;
                let r = algebra(endo_matrix_sigma(ctx, &algebra(reflection(b))?))?;
                let inputs: &[(&str, &dyn fmt::Display)] = &[("sigma index", &(k + 1))];
                holds(p == Matrix::diagonal(&pd), inputs)?;
                holds(r == Matrix::diagonal(&rd), inputs)?;
                let g = gram_matrix(&basis);
                // Self-duality and orthogonality in the sigma basis.
                holds(&p.transpose() * &g == &g * &p, inputs)?;
                holds(&(&r.transpose() * &g) * &r == g, inputs)?;
            }
            Ok(())
        }),
    ]
}

fn ideal_identities() -> Vec<Identity> {
    vec![
        identity!(Ideals, "dim Cl t* = 2^n and the ideal is minimal", max_dim = 3, once, |ctx, _| {
            let g = theta_star(ctx);
            let basis = algebra(ideal_span(&g))?;
            holds(basis.dim() == 1 << ctx.dim(), &[("dim", &basis.dim())])?;
            holds(algebra(minimality_check(&g, 0))?, &[("generator", &g)])
        }),
        identity!(Ideals, "left closure u psi in Cl t*", max_dim = 3, |ctx, s| {
            let basis = algebra(ideal_span(&theta_star(ctx)))?;
            let coeffs = s.scalars(basis.dim());
            let psi = basis
                .span()
                .iter()
                .zip(&coeffs)
                .fold(ctx.zero(), |acc, (b, c)| &acc + &b.scale(c));
            let u = s.multivector(ctx);
            holds(basis.contains(&(&u * &psi)), &[("u", &u), ("psi", &psi)])
        }),
        identity!(Ideals, "forms act on forms by wedge: u* v* = u* ^ v*", |ctx, s| {
            let (a, b) = (s.form_only(ctx), s.form_only(ctx));
            let p = &a * &b;
            holds(p == (&a ^ &b) && p.is_form_only(), &[("u*", &a), ("v*", &b)])
        }),
        identity!(Ideals, "m^-1(x m(u)) = x_* ^ u + 2 x* _| u", |ctx, s| {
            let (x, u) = (s.vecfor(ctx), s.vector_only(ctx));
            let lhs = algebra(module_action(&x, &u))?;
            same(&lhs, &algebra(module_action_formula(&x, &u))?, &[("x", &VecforDisplay(&x)), ("u", &u)])
        }),
        identity!(Ideals, "S A_x S^-1 = rep(x) = sqrt2 (x*_| + x_*^)", max_dim = MAX_REP_DIM, |ctx, s| {
            let n = ctx.dim();
            let x = s.vecfor(ctx);
            let scale = grade_scaling(n);
            let inv = FockMatrix::new(n, scale.matrix().inverse().expect("diagonal, nonzero")).expect("shape");
            let conj = scale.mul(&ideal_action_matrix(&x)).mul(&inv);
            let inputs: &[(&str, &dyn fmt::Display)] = &[("x", &VecforDisplay(&x))];
            same(&conj, &clifford_map_matrix(&x), inputs)?;
            same(&rep(&x.to_multivector()), &clifford_map_matrix(&x), inputs)
        }),
        identity!(Ideals, "rep(uv) = rep(u) rep(v)", max_dim = MAX_REP_DIM, |ctx, s| {
            let (u, v, _) = three(ctx, s);
            same(&rep(&(&u * &v)), &rep(&u).mul(&rep(&v)), &[("u", &u), ("v", &v)])
        }),
        identity!(Ideals, "blade images have rank 4^n with parity blocks", max_dim = MAX_REP_DIM, once, |ctx, _| {
            let r = algebra(verify_end_iso(ctx.dim()))?;
            holds(r.is_isomorphism && r.parity_blocks, &[("rank", &r.rank)])
        }),
        identity!(Ideals, "graded tensor split for a random form b", max_dim = 2, |ctx, s| {
            let b = s.symmetric_form(ctx.dim());
            holds(algebra(tensor_split_check(&b))?, &[("b", &Rows(b.matrix()))])
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_an_error() {
        assert_eq!(
            run_suite("bogus", 1, 1, 0).unwrap_err(),
            SuiteError::UnknownSuite("bogus".into())
        );
    }

    #[test]
    fn small_run_passes() {
        let report = run_suite("contractions", 1, 1, 7).unwrap();
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_suite("products", 2, 5, 3).unwrap().to_string();
        let b = run_suite("products", 2, 5, 3).unwrap().to_string();
        assert_eq!(a, b);
    }

    #[test]
    fn every_group_is_populated() {
        let cat = catalogue();
        for name in &SuiteName::NAMES[..6] {
            let group: SuiteName = name.parse().unwrap();
            assert!(cat.iter().any(|id| id.group == group), "{name}");
        }
    }
}
