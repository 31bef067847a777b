//! Vecfor-level structure of `H_V = V ⊕ V*`.
//!
//! Vectors of `V` and forms of `V*` are coordinate columns over the dual pair
//! `(e_k)`, `(θ^k)`, so `x*(y_*)` is a plain dot product.

use std::fmt;
use std::sync::Arc;

use crate::blade::Blade;
use crate::context::AlgebraContext;
use crate::error::{AlgebraError, Result};
use crate::linalg::{dot, rank_of, Matrix};
use crate::multivector::Multivecfor;
use crate::products::wedge;
use crate::scalar::Scalar;

/// `x = x_* ⊕ x*`.
#[derive(Clone)]
pub struct Vecfor {
    ctx: Arc<AlgebraContext>,
    vec_part: Vec<Scalar>,
    form_part: Vec<Scalar>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Causality {
    Positive,
    Null,
    Negative,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Classification {
    pub causality: Causality,
    pub unit: bool,
}

impl Vecfor {
    pub fn new(ctx: &Arc<AlgebraContext>, vec_part: Vec<Scalar>, form_part: Vec<Scalar>) -> Result<Vecfor> {
        let n = ctx.dim();
        for len in [vec_part.len(), form_part.len()] {
            if len != n {
                return Err(AlgebraError::ShapeMismatch { expected: n, found: len });
            }
        }
        Ok(Vecfor {
            ctx: ctx.clone(),
            vec_part,
            form_part,
        })
    }

    /// From `2n` Witt coordinates `(x_*^1..x_*^n, x*_1..x*_n)`.
    pub fn from_coords(ctx: &Arc<AlgebraContext>, coords: &[Scalar]) -> Result<Vecfor> {
        let n = ctx.dim();
        if coords.len() != 2 * n {
            return Err(AlgebraError::ShapeMismatch {
                expected: 2 * n,
                found: coords.len(),
            });
        }
        Vecfor::new(ctx, coords[..n].to_vec(), coords[n..].to_vec())
    }

    pub fn zero(ctx: &Arc<AlgebraContext>) -> Vecfor {
        let n = ctx.dim();
        Vecfor::new(ctx, vec![Scalar::zero(); n], vec![Scalar::zero(); n]).expect("shape")
    }

    /// `e_k ⊕ 0`, 1-based.
    pub fn e(ctx: &Arc<AlgebraContext>, k: usize) -> Vecfor {
        let mut v = Vecfor::zero(ctx);
        v.vec_part[k - 1] = Scalar::one();
        v
    }

    /// `0 ⊕ θ^k`, 1-based.
    pub fn t(ctx: &Arc<AlgebraContext>, k: usize) -> Vecfor {
        let mut v = Vecfor::zero(ctx);
        v.form_part[k - 1] = Scalar::one();
        v
    }

    pub fn ctx(&self) -> &Arc<AlgebraContext> {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.ctx.dim()
    }

    /// `x_*`
    pub fn vec_part(&self) -> &[Scalar] {
        &self.vec_part
    }

    /// `x*`
    pub fn form_part(&self) -> &[Scalar] {
        &self.form_part
    }

    pub fn coords(&self) -> Vec<Scalar> {
        self.vec_part.iter().chain(&self.form_part).cloned().collect()
    }

    pub fn to_multivector(&self) -> Multivecfor {
        let n = self.dim();
        let terms = (1..=n)
            .map(|k| (Blade::e(k), self.vec_part[k - 1].clone()))
            .chain((1..=n).map(|k| (Blade::t(n, k), self.form_part[k - 1].clone())));
        Multivecfor::from_terms(&self.ctx, terms)
    }

    /// Embeds into the algebra of `ctx`, which must have the same dimension.
    pub fn to_multivector_in(&self, ctx: &Arc<AlgebraContext>) -> Result<Multivecfor> {
        self.ctx.check_same(ctx)?;
        Ok(self.to_multivector())
    }

    /// The grade-one part must be all of `u`.
    pub fn from_multivector(u: &Multivecfor) -> Result<Vecfor> {
        if let Some((b, _)) = u.terms().find(|(b, _)| b.grade() != 1) {
            return Err(AlgebraError::GradeOutOfRange { grade: b.grade(), max: 1 });
        }
        let n = u.dim();
        let ctx = u.ctx();
        Vecfor::new(
            ctx,
            (1..=n).map(|k| u.coeff(Blade::e(k))).collect(),
            (1..=n).map(|k| u.coeff(Blade::t(n, k))).collect(),
        )
    }

    /// `x*(x_*)`
    pub fn self_pairing(&self) -> Scalar {
        dot(&self.form_part, &self.vec_part)
    }

    /// `⟨x, y⟩ = x*(y_*) + y*(x_*)`
    pub fn inner(&self, y: &Vecfor) -> Scalar {
        dot(&self.form_part, &y.vec_part) + dot(&y.form_part, &self.vec_part)
    }

    pub fn classify(&self) -> Classification {
        let q = self.self_pairing();
        let causality = match q.signum() {
            1 => Causality::Positive,
            0 => Causality::Null,
            _ => Causality::Negative,
        };
        Classification {
            causality,
            unit: q.abs().is_one(),
        }
    }

    /// `x̄ = (−x_*) ⊕ x*`
    pub fn conjugate(&self) -> Vecfor {
        Vecfor {
            ctx: self.ctx.clone(),
            vec_part: self.vec_part.iter().map(|s| -s).collect(),
            form_part: self.form_part.clone(),
        }
    }

    /// `[x, y] = ⟨x̄, y⟩ = x*(y_*) − y*(x_*)`
    pub fn bracket(&self, y: &Vecfor) -> Scalar {
        self.conjugate().inner(y)
    }

    pub fn scale(&self, s: &Scalar) -> Vecfor {
        Vecfor {
            ctx: self.ctx.clone(),
            vec_part: self.vec_part.iter().map(|c| c * s).collect(),
            form_part: self.form_part.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add(&self, other: &Vecfor) -> Vecfor {
        Vecfor {
            ctx: self.ctx.clone(),
            vec_part: self.vec_part.iter().zip(&other.vec_part).map(|(a, b)| a + b).collect(),
            form_part: self.form_part.iter().zip(&other.form_part).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Vecfor) -> Vecfor {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn is_zero(&self) -> bool {
        self.vec_part.iter().chain(&self.form_part).all(Scalar::is_zero)
    }

    /// Components `(x^1..x^{2n})` over the σ basis:
    /// `x^k = (x*_k + x_*^k)/√2`, `x^{n+k} = (x*_k − x_*^k)/√2`.
    pub fn sigma_components(&self) -> Vec<Scalar> {
        let r = Scalar::inv_sqrt2();
        let plus = self.form_part.iter().zip(&self.vec_part).map(|(f, v)| &(f + v) * &r);
        let minus = self.form_part.iter().zip(&self.vec_part).map(|(f, v)| &(f - v) * &r);
        plus.collect::<Vec<_>>().into_iter().chain(minus).collect()
    }

    /// Inverse of [`Vecfor::sigma_components`]: `Σ x^k σ_k`.
    pub fn from_sigma_components(ctx: &Arc<AlgebraContext>, comps: &[Scalar]) -> Result<Vecfor> {
        let basis = sigma_basis(ctx);
        if comps.len() != basis.len() {
            return Err(AlgebraError::ShapeMismatch {
                expected: basis.len(),
                found: comps.len(),
            });
        }
        Ok(basis
            .iter()
            .zip(comps)
            .fold(Vecfor::zero(ctx), |acc, (s, c)| acc.add(&s.scale(c))))
    }
}

impl PartialEq for Vecfor {
    fn eq(&self, other: &Self) -> bool {
        self.vec_part == other.vec_part && self.form_part == other.form_part
    }
}

impl Eq for Vecfor {}

impl fmt::Display for Vecfor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_multivector())
    }
}

impl fmt::Debug for Vecfor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vecfor({self})")
    }
}

/// `σ_k = (e_k ⊕ θ^k)/√2`, `σ_{n+k} = (ē_k ⊕ θ^k)/√2 = (−e_k ⊕ θ^k)/√2`.
pub fn sigma_basis(ctx: &Arc<AlgebraContext>) -> Vec<Vecfor> {
    let n = ctx.dim();
    let r = Scalar::inv_sqrt2();
    let first = (1..=n).map(|k| Vecfor::e(ctx, k).add(&Vecfor::t(ctx, k)).scale(&r));
    let second = (1..=n).map(|k| Vecfor::e(ctx, k).conjugate().add(&Vecfor::t(ctx, k)).scale(&r));
    first.chain(second).collect()
}

pub fn gram_matrix(vs: &[Vecfor]) -> Matrix {
    Matrix::from_fn(vs.len(), vs.len(), |i, j| vs[i].inner(&vs[j]))
}

/// Reciprocal basis `{x^i}` with `⟨x^i, x_j⟩ = δ^i_j`, via the inverse Gram matrix.
pub fn reciprocal_basis(basis: &[Vecfor]) -> Result<Vec<Vecfor>> {
    let ctx = basis.first().ok_or(AlgebraError::DependentBasis)?.ctx().clone();
    let inv = gram_matrix(basis).inverse().ok_or(AlgebraError::DependentBasis)?;
    Ok((0..basis.len())
        .map(|i| {
            basis
                .iter()
                .enumerate()
                .fold(Vecfor::zero(&ctx), |acc, (j, b)| acc.add(&b.scale(&inv[(i, j)])))
        })
        .collect())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Ambient {
    V,
    VDual,
    HV,
}

/// A subspace given by an exact, linearly independent basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: Ambient,
    n: usize,
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn new(ambient: Ambient, n: usize, basis: Vec<Vec<Scalar>>) -> Result<Subspace> {
        let width = Subspace::width(ambient, n);
        if let Some(bad) = basis.iter().find(|v| v.len() != width) {
            return Err(AlgebraError::ShapeMismatch {
                expected: width,
                found: bad.len(),
            });
        }
        if rank_of(&basis) != basis.len() {
            return Err(AlgebraError::DependentBasis);
        }
        Ok(Subspace { ambient, n, basis })
    }

    /// Span of arbitrary vectors; a basis is extracted by row reduction.
    pub fn span(ambient: Ambient, n: usize, vectors: Vec<Vec<Scalar>>) -> Result<Subspace> {
        if vectors.is_empty() {
            return Subspace::new(ambient, n, vec![]);
        }
        let (r, pivots) = Matrix::from_rows(vectors).rref();
        Subspace::new(ambient, n, (0..pivots.len()).map(|i| r.row(i)).collect())
    }

    pub fn whole(ambient: Ambient, n: usize) -> Subspace {
        let w = Subspace::width(ambient, n);
        Subspace::new(ambient, n, Matrix::identity(w).row_vectors()).expect("identity is independent")
    }

    fn width(ambient: Ambient, n: usize) -> usize {
        match ambient {
            Ambient::HV => 2 * n,
            _ => n,
        }
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        Subspace::width(self.ambient, self.n)
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        rank_of(&rows) == self.dim()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && other.basis.iter().all(|v| self.contains_vector(v))
    }

    pub fn same_as(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains(other)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let rows: Vec<_> = self.basis.iter().chain(&other.basis).cloned().collect();
        Subspace::span(self.ambient, self.n, rows).expect("same ambient")
    }

    /// From the kernel of `[A; −B]ᵀ`: `Σ aᵢ sᵢ = Σ bⱼ tⱼ`.
    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let (p, q) = (self.dim(), other.dim());
        if p == 0 || q == 0 {
            return Subspace::new(self.ambient, self.n, vec![]).expect("empty basis");
        }
        let w = self.ambient_dim();
        let m = Matrix::from_fn(w, p + q, |i, j| {
            if j < p {
                self.basis[j][i].clone()
            } else {
                -&other.basis[j - p][i]
            }
        });
        let vectors = m
            .nullspace()
            .into_iter()
            .map(|c| {
                (0..w)
                    .map(|i| (0..p).map(|j| &c[j] * &self.basis[j][i]).sum())
                    .collect()
            })
            .collect();
        Subspace::span(self.ambient, self.n, vectors).expect("same ambient")
    }

    /// `S′`: the annihilator in the dual space (`V ↔ V*`).
    pub fn null_subspace(&self) -> Result<Subspace> {
        let target = match self.ambient {
            Ambient::V => Ambient::VDual,
            Ambient::VDual => Ambient::V,
            Ambient::HV => {
                return Err(AlgebraError::MixedSupport {
                    op: "null_subspace",
                    expected: "V or V*",
                })
            }
        };
        let basis = if self.basis.is_empty() {
            Matrix::identity(self.n).row_vectors()
        } else {
            Matrix::from_rows(self.basis.clone()).nullspace()
        };
        Subspace::new(target, self.n, basis)
    }

    /// `I(S) = S ⊕ S′ ⊂ H_V` for `S ⊂ V`.
    pub fn isotropic_i(&self) -> Result<Subspace> {
        if self.ambient != Ambient::V {
            return Err(AlgebraError::MixedSupport {
                op: "isotropic_I",
                expected: "V",
            });
        }
        let prime = self.null_subspace()?;
        let zeros = vec![Scalar::zero(); self.n];
        let rows = self
            .basis
            .iter()
            .map(|s| s.iter().chain(&zeros).cloned().collect())
            .chain(prime.basis.iter().map(|a| zeros.iter().chain(a).cloned().collect()))
            .collect();
        Subspace::new(Ambient::HV, self.n, rows)
    }

    /// Basis vectors as vecfors; only for `H_V` subspaces.
    pub fn vecfors(&self, ctx: &Arc<AlgebraContext>) -> Result<Vec<Vecfor>> {
        let n = self.n;
        self.basis
            .iter()
            .map(|v| match self.ambient {
                Ambient::HV => Vecfor::from_coords(ctx, v),
                Ambient::V => Vecfor::new(ctx, v.clone(), vec![Scalar::zero(); n]),
                Ambient::VDual => Vecfor::new(ctx, vec![Scalar::zero(); n], v.clone()),
            })
            .collect()
    }
}

/// Non-degenerate symmetric bilinear form `b` on `V`, `b_ij = b(e_i, e_j)`.
#[derive(Clone, Debug)]
pub struct SymmetricForm {
    matrix: Matrix,
    reciprocal: Matrix,
}

impl SymmetricForm {
    pub fn new(matrix: Matrix) -> Result<SymmetricForm> {
        if !matrix.is_symmetric() {
            return Err(AlgebraError::NotSymmetric);
        }
        let reciprocal = matrix.inverse().ok_or(AlgebraError::SingularForm)?;
        Ok(SymmetricForm { matrix, reciprocal })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `b^{ik} = b*(θ^i, θ^k)`.
    pub fn reciprocal(&self) -> &Matrix {
        &self.reciprocal
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        dot(x, &self.matrix.mul_vec(y))
    }

    /// `b* x*` as a vector of `V`.
    pub fn raise(&self, form: &[Scalar]) -> Vec<Scalar> {
        self.reciprocal.mul_vec(form)
    }

    /// `x_± = (b* x* ± x_*)/√2`.
    pub fn rho_b_split(&self, x: &Vecfor) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
        if x.dim() != self.dim() {
            return Err(AlgebraError::ShapeMismatch {
                expected: self.dim(),
                found: x.dim(),
            });
        }
        let r = Scalar::inv_sqrt2();
        let raised = self.raise(x.form_part());
        let plus = raised.iter().zip(x.vec_part()).map(|(a, v)| &(a + v) * &r).collect();
        let minus = raised.iter().zip(x.vec_part()).map(|(a, v)| &(a - v) * &r).collect();
        Ok((plus, minus))
    }

    /// `b(x₊, y₊) − b(x₋, y₋)`, the form of `(V, b) ⊕ (V, −b)`.
    pub fn split_form(&self, x: &(Vec<Scalar>, Vec<Scalar>), y: &(Vec<Scalar>, Vec<Scalar>)) -> Scalar {
        self.eval(&x.0, &y.0) - self.eval(&x.1, &y.1)
    }

    /// `e^k = b^{kl} e_l`, as coordinate vectors.
    pub fn raised_basis(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|k| self.reciprocal.row(k)).collect()
    }
}

/// `σ₁ ∧ … ∧ σ₂ₙ`, computed as a literal wedge of the σ basis.
pub fn orientation_sigma(ctx: &Arc<AlgebraContext>) -> Multivecfor {
    wedge_all(ctx, &sigma_basis(ctx))
}

fn wedge_all(ctx: &Arc<AlgebraContext>, vs: &[Vecfor]) -> Multivecfor {
    vs.iter().fold(ctx.one(), |acc, v| wedge(&acc, &v.to_multivector()).expect("same context"))
}

/// Orientation built from the dual pair `f_i = Σ_j A_ij e_j`,
/// `φ^i = Σ_j (A⁻ᵀ)_ij θ^j`.
pub fn orientation_from_dual_pair(ctx: &Arc<AlgebraContext>, a: &Matrix) -> Result<Multivecfor> {
    let n = ctx.dim();
    if a.rows() != n || a.cols() != n {
        return Err(AlgebraError::ShapeMismatch {
            expected: n,
            found: a.rows(),
        });
    }
    let inv_t = a.inverse().ok_or(AlgebraError::DependentBasis)?.transpose();
    let zeros = vec![Scalar::zero(); n];
    let f: Vec<Vecfor> = (0..n)
        .map(|i| Vecfor::new(ctx, a.row(i), zeros.clone()))
        .collect::<Result<_>>()?;
    let phi: Vec<Vecfor> = (0..n)
        .map(|i| Vecfor::new(ctx, zeros.clone(), inv_t.row(i)))
        .collect::<Result<_>>()?;
    let r = Scalar::inv_sqrt2();
    let sigmas: Vec<Vecfor> = (0..n)
        .map(|k| f[k].add(&phi[k]).scale(&r))
        .chain((0..n).map(|k| f[k].conjugate().add(&phi[k]).scale(&r)))
        .collect();
    Ok(wedge_all(ctx, &sigmas))
}

/// `e_* ∧ θ*` as a blade.
pub fn e_star_theta_star(ctx: &Arc<AlgebraContext>) -> Multivecfor {
    let n = ctx.dim();
    wedge(&ctx.blade(Blade::e_star(n)), &ctx.blade(Blade::theta_star(n))).expect("same context")
}

/// A vector of `H_V² = H_V ⊕ H_V*` as `4n` coordinates: `2n` over `(σ_k)`
/// followed by `2n` over the dual basis `(σ^k)`.
pub type SecondOrderVector = Vec<Scalar>;

/// `Σ_k = (σ_k ⊕ σ^k)/√2`, `Σ_{2n+k} = (−σ_k ⊕ σ^k)/√2`, for `k = 1..2n`.
pub fn second_order_basis(ctx: &Arc<AlgebraContext>) -> Vec<SecondOrderVector> {
    let m = 2 * ctx.dim();
    let r = Scalar::inv_sqrt2();
    let make = |k: usize, sign: i64| {
        let mut v = vec![Scalar::zero(); 2 * m];
        v[k] = r.mul_int(sign);
        v[m + k] = r.clone();
        v
    };
    (0..m).map(|k| make(k, 1)).chain((0..m).map(|k| make(k, -1))).collect()
}

/// `⟨(a, α), (b, β)⟩ = α(b) + β(a)` on `H_V ⊕ H_V*`.
pub fn second_order_inner(x: &[Scalar], y: &[Scalar]) -> Scalar {
    let m = x.len() / 2;
    dot(&x[m..], &y[..m]) + dot(&y[m..], &x[..m])
}

pub fn second_order_gram(basis: &[SecondOrderVector]) -> Matrix {
    Matrix::from_fn(basis.len(), basis.len(), |i, j| second_order_inner(&basis[i], &basis[j]))
}
