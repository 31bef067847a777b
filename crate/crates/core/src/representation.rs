//! `Cl(H_V) ≅ End(∧V)` and `Cl(H_V) ≅ Cl(V, b) ⊗̂ Cl(V, −b)`.
//!
//! The Fock space `∧V` is indexed by subsets `S ⊆ {1..n}` ordered by size and
//! then lexicographically; for `n ≥ 4` this differs from mask order.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::blade::{blade_wedge, Blade};
use crate::context::AlgebraContext;
use crate::error::{AlgebraError, Result};
use crate::hyperbolic::{SymmetricForm, Vecfor};
use crate::linalg::{Matrix, ScalarJson};
use crate::multivector::Multivecfor;
use crate::products::{lcontract, wedge};
use crate::scalar::Scalar;

/// Largest `n` accepted by the exact rank checks.
pub const MAX_REP_DIM: usize = 3;

/// `e`-blade masks of `∧V` in Fock order.
pub fn fock_order(n: usize) -> Vec<u32> {
    let mut masks: Vec<u32> = (0..(1u32 << n)).collect();
    masks.sort_by_key(|&m| {
        let idx: Vec<u32> = (0..n as u32).filter(|b| m & (1 << b) != 0).collect();
        (idx.len(), idx)
    });
    masks
}

fn fock_label(mask: u32, n: usize) -> String {
    Blade::from_mask(mask).label(n)
}

/// An endomorphism of `∧V` in the Fock basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FockMatrix {
    n: usize,
    matrix: Matrix,
}

#[derive(Serialize)]
struct FockJson {
    dim: usize,
    basis: Vec<String>,
    rows: Vec<Vec<ScalarJson>>,
}

impl FockMatrix {
    pub fn new(n: usize, matrix: Matrix) -> Result<FockMatrix> {
        let side = 1usize << n;
        if matrix.rows() != side || matrix.cols() != side {
            return Err(AlgebraError::ShapeMismatch {
                expected: side,
                found: matrix.rows(),
            });
        }
        Ok(FockMatrix { n, matrix })
    }

    pub fn identity(n: usize) -> FockMatrix {
        FockMatrix {
            n,
            matrix: Matrix::identity(1 << n),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn side(&self) -> usize {
        1 << self.n
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn basis_labels(&self) -> Vec<String> {
        fock_order(self.n).into_iter().map(|m| fock_label(m, self.n)).collect()
    }

    pub fn mul(&self, other: &FockMatrix) -> FockMatrix {
        FockMatrix {
            n: self.n,
            matrix: &self.matrix * &other.matrix,
        }
    }

    pub fn add(&self, other: &FockMatrix) -> FockMatrix {
        FockMatrix {
            n: self.n,
            matrix: &self.matrix + &other.matrix,
        }
    }

    pub fn sub(&self, other: &FockMatrix) -> FockMatrix {
        FockMatrix {
            n: self.n,
            matrix: &self.matrix - &other.matrix,
        }
    }

    pub fn scale(&self, s: &Scalar) -> FockMatrix {
        FockMatrix {
            n: self.n,
            matrix: self.matrix.scale(s),
        }
    }

    /// Applies the matrix to an element of `∧V`.
    pub fn apply(&self, u: &Multivecfor) -> Result<Multivecfor> {
        if !u.is_vector_only() {
            return Err(AlgebraError::MixedSupport {
                op: "Fock action",
                expected: "e-blades",
            });
        }
        let order = fock_order(self.n);
        let coords: Vec<Scalar> = order.iter().map(|&m| u.coeff(Blade::from_mask(m))).collect();
        let out = self.matrix.mul_vec(&coords);
        Ok(Multivecfor::from_terms(
            u.ctx(),
            order.iter().zip(out).map(|(&m, s)| (Blade::from_mask(m), s)),
        ))
    }

    /// Header line naming the basis, then one row per line.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(vec![]);
        let mut header = vec!["row\\col".to_string()];
        header.extend(self.basis_labels());
        w.write_record(&header).expect("in-memory write");
        for (i, label) in self.basis_labels().into_iter().enumerate() {
            let mut rec = vec![label];
            rec.extend(self.matrix.row(i).iter().map(|s| s.to_string()));
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }

    pub fn to_json(&self) -> serde_json::Value {
        let doc = FockJson {
            dim: self.n,
            basis: self.basis_labels(),
            rows: self
                .matrix
                .row_vectors()
                .iter()
                .map(|r| r.iter().map(ScalarJson::from).collect())
                .collect(),
        };
        serde_json::to_value(doc).expect("plain struct serializes")
    }
}

/// Matrix of a linear map `∧V → ∧V` given on basis blades.
fn fock_matrix_of(ctx: &Arc<AlgebraContext>, f: impl Fn(&Multivecfor) -> Multivecfor) -> FockMatrix {
    let n = ctx.dim();
    let order = fock_order(n);
    let pos: HashMap<u32, usize> = order.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let side = order.len();
    let mut m = Matrix::zeros(side, side);
    for (j, &mask) in order.iter().enumerate() {
        let img = f(&ctx.blade(Blade::from_mask(mask)));
        for (b, s) in img.terms() {
            let i = pos[&b.mask()];
            m[(i, j)] = s.clone();
        }
    }
    FockMatrix { n, matrix: m }
}

/// `φ_x(u) = √2 (x* ⌟ u + x_* ∧ u)` on `∧V`.
pub fn clifford_map_matrix(x: &Vecfor) -> FockMatrix {
    let ctx = x.ctx().clone();
    let n = ctx.dim();
    let zeros = vec![Scalar::zero(); n];
    let xv = Vecfor::new(&ctx, x.vec_part().to_vec(), zeros.clone()).expect("shape").to_multivector();
    let xf = Vecfor::new(&ctx, zeros, x.form_part().to_vec()).expect("shape").to_multivector();
    let r2 = Scalar::sqrt2();
    fock_matrix_of(&ctx, |u| {
        let c = lcontract(&xf, u).expect("same context");
        let w = wedge(&xv, u).expect("same context");
        (&c + &w).scale(&r2)
    })
}

/// `A_x(u) = m⁻¹(x m(u))`, the action of `x` on the spinor ideal pulled back to `∧V`.
pub fn ideal_action_matrix(x: &Vecfor) -> FockMatrix {
    let ctx = x.ctx().clone();
    fock_matrix_of(&ctx, |u| crate::spinor::module_action(x, u).expect("u lies in ∧V"))
}

/// `u ↦ (√2)^{grade u} u` on `∧V`.
pub fn grade_scaling(n: usize) -> FockMatrix {
    let d: Vec<Scalar> = fock_order(n)
        .iter()
        .map(|m| Scalar::sqrt2().pow(m.count_ones()))
        .collect();
    FockMatrix {
        n,
        matrix: Matrix::diagonal(&d),
    }
}

fn generator_vecfor(ctx: &Arc<AlgebraContext>, bit: u32) -> Vecfor {
    let n = ctx.dim();
    let b = bit as usize;
    if b < n {
        Vecfor::e(ctx, b + 1)
    } else {
        Vecfor::t(ctx, b - n + 1)
    }
}

/// Lifts blades by `rep(x ∧ A) = rep(x) rep(A) − rep(x ⌟ A)`.
struct RepBuilder {
    ctx: Arc<AlgebraContext>,
    cache: HashMap<u32, FockMatrix>,
}

impl RepBuilder {
    fn new(ctx: &Arc<AlgebraContext>) -> RepBuilder {
        RepBuilder {
            ctx: ctx.clone(),
            cache: HashMap::new(),
        }
    }

    fn blade(&mut self, mask: u32) -> FockMatrix {
        if let Some(m) = self.cache.get(&mask) {
            return m.clone();
        }
        let n = self.ctx.dim();
        let out = if mask == 0 {
            FockMatrix::identity(n)
        } else {
            let x = mask.trailing_zeros();
            let rest = mask & !(1 << x);
            let gx = self.generator(x);
            let mut out = gx.mul(&self.blade(rest));
            // x ∧ A has sign +1 because x is the lowest factor
            debug_assert_eq!(blade_wedge(1 << x, rest), Some((mask, 1)));
            if let Some((inner, s)) = crate::blade::gen_lcontract(x, rest, n as u32) {
                out = out.sub(&self.blade(inner).scale(&Scalar::from_int(s)));
            }
            out
        };
        self.cache.insert(mask, out.clone());
        out
    }

    fn generator(&mut self, bit: u32) -> FockMatrix {
        let mask = 1u32 << bit;
        if let Some(m) = self.cache.get(&mask) {
            return m.clone();
        }
        let m = clifford_map_matrix(&generator_vecfor(&self.ctx, bit));
        self.cache.insert(mask, m.clone());
        m
    }
}

/// The algebra isomorphism `Cl(H_V) → End(∧V)`.
pub fn rep(u: &Multivecfor) -> FockMatrix {
    let mut builder = RepBuilder::new(u.ctx());
    let n = u.dim();
    let mut acc = FockMatrix {
        n,
        matrix: Matrix::zeros(1 << n, 1 << n),
    };
    for (b, s) in u.terms() {
        acc = acc.add(&builder.blade(b.mask()).scale(s));
    }
    acc
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EndIsoReport {
    pub rank: usize,
    pub is_isomorphism: bool,
    /// Even blades act block-diagonally on `∧⁽⁰⁾V ⊕ ∧⁽¹⁾V`, odd blades swap the blocks.
    pub parity_blocks: bool,
}

/// Exact rank of all `4^n` blade images, flattened into rows.
pub fn verify_end_iso(n: usize) -> Result<EndIsoReport> {
    if n > MAX_REP_DIM {
        return Err(AlgebraError::TooLarge {
            what: "verify_end_iso",
            n,
            max: MAX_REP_DIM,
        });
    }
    let ctx = AlgebraContext::new(n)?;
    end_iso_report(&ctx)
}

fn end_iso_report(ctx: &Arc<AlgebraContext>) -> Result<EndIsoReport> {
    let n = ctx.dim();
    let mut builder = RepBuilder::new(ctx);
    let blades = Blade::all(n);
    let images: Vec<FockMatrix> = blades.iter().map(|b| builder.blade(b.mask())).collect();
    let rows: Vec<Vec<Scalar>> = images
        .iter()
        .map(|m| m.matrix.row_vectors().into_iter().flatten().collect())
        .collect();
    let rank = Matrix::from_rows(rows).rank();
    let order = fock_order(n);
    let parity: Vec<u32> = order.iter().map(|m| m.count_ones() % 2).collect();
    let parity_blocks = blades.par_iter().zip(images.par_iter()).all(|(b, img)| {
        let even = b.grade() % 2 == 0;
        (0..order.len()).all(|i| {
            (0..order.len()).all(|j| {
                let same = parity[i] == parity[j];
                same == even || img.matrix[(i, j)].is_zero()
            })
        })
    });
    Ok(EndIsoReport {
        rank,
        is_isomorphism: rank == 1 << (2 * n),
        parity_blocks,
    })
}

/// `Cl(H_V²) ≅ End(Cl(H_V))`: Prop. 2 applied to a base space of dimension `2n`.
pub fn grandmother_dimension_check(n: usize) -> Result<bool> {
    if n != 1 {
        return Err(AlgebraError::TooLarge {
            what: "grandmother_dimension_check",
            n,
            max: 1,
        });
    }
    let report = end_iso_report(&AlgebraContext::new(2 * n)?)?;
    Ok(report.is_isomorphism && report.rank == 1 << (4 * n) && grandmother_dimension_identity(n))
}

/// `2^{4n} = (2^{2n})²`.
pub fn grandmother_dimension_identity(n: usize) -> bool {
    let lhs = 1u128 << (4 * n);
    let rhs = (1u128 << (2 * n)).pow(2);
    lhs == rhs
}

/// `P` and the diagonal `D` with `Pᵀ b P = D`, by symmetric elimination.
pub fn congruence_diagonalize(b: &Matrix) -> Result<(Matrix, Vec<Scalar>)> {
    if !b.is_symmetric() {
        return Err(AlgebraError::NotSymmetric);
    }
    let n = b.rows();
    let mut a = b.clone();
    let mut p = Matrix::identity(n);
    for k in 0..n {
        if a[(k, k)].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                swap_congruent(&mut a, &mut p, k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) {
                // column k += column j makes the pivot 2 a_kj
                add_congruent(&mut a, &mut p, k, j, &Scalar::one());
            } else {
                return Err(AlgebraError::SingularForm);
            }
        }
        let pivot = a[(k, k)].clone();
        for j in k + 1..n {
            if a[(k, j)].is_zero() {
                continue;
            }
            let f = -&(&a[(k, j)] / &pivot);
            add_congruent(&mut a, &mut p, j, k, &f);
        }
    }
    let d = (0..n).map(|i| a[(i, i)].clone()).collect();
    Ok((p, d))
}

fn swap_congruent(a: &mut Matrix, p: &mut Matrix, i: usize, j: usize) {
    let n = a.rows();
    let mut e = Matrix::identity(n);
    e[(i, i)] = Scalar::zero();
    e[(j, j)] = Scalar::zero();
    e[(i, j)] = Scalar::one();
    e[(j, i)] = Scalar::one();
    *a = &(&e.transpose() * a) * &e;
    *p = &*p * &e;
}

/// Column `target += f · column src`, applied congruently.
fn add_congruent(a: &mut Matrix, p: &mut Matrix, target: usize, src: usize, f: &Scalar) {
    let n = a.rows();
    let mut e = Matrix::identity(n);
    e[(src, target)] = f.clone();
    *a = &(&e.transpose() * a) * &e;
    *p = &*p * &e;
}

/// `Cl(V, q)` for a diagonal metric `q` in a fixed orthogonal basis.
#[derive(Clone, Debug)]
pub struct DiagonalClifford {
    metric: Vec<Scalar>,
}

impl DiagonalClifford {
    pub fn new(metric: Vec<Scalar>) -> DiagonalClifford {
        DiagonalClifford { metric }
    }

    pub fn dim(&self) -> usize {
        self.metric.len()
    }

    /// Product of basis blades: reorder sign times the metric on shared factors.
    pub fn blade_product(&self, a: u32, b: u32) -> (u32, Scalar) {
        let mut swaps = 0;
        let mut rest = b;
        while rest != 0 {
            let j = rest.trailing_zeros();
            swaps += (a >> j >> 1).count_ones();
            rest &= rest - 1;
        }
        let mut s = Scalar::sign(swaps as usize);
        for i in 0..self.metric.len() {
            if a & b & (1 << i) != 0 {
                s = s * self.metric[i].clone();
            }
        }
        (a ^ b, s)
    }
}

/// Element of `Cl(V, b) ⊗̂ Cl(V, −b)`: `(left blade, right blade) → weight`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GradedTensorElement {
    terms: BTreeMap<(u32, u32), Scalar>,
}

impl GradedTensorElement {
    pub fn one() -> GradedTensorElement {
        GradedTensorElement::from_pair(0, 0, Scalar::one())
    }

    pub fn from_pair(left: u32, right: u32, s: Scalar) -> GradedTensorElement {
        let mut g = GradedTensorElement::default();
        g.push(left, right, s);
        g
    }

    /// `Σ v_i f_i ⊗̂ 1`.
    pub fn left_vector(coords: &[Scalar]) -> GradedTensorElement {
        let mut g = GradedTensorElement::default();
        for (i, c) in coords.iter().enumerate() {
            g.push(1 << i, 0, c.clone());
        }
        g
    }

    /// `Σ v_i 1 ⊗̂ f_i`.
    pub fn right_vector(coords: &[Scalar]) -> GradedTensorElement {
        let mut g = GradedTensorElement::default();
        for (i, c) in coords.iter().enumerate() {
            g.push(0, 1 << i, c.clone());
        }
        g
    }

    fn push(&mut self, left: u32, right: u32, s: Scalar) {
        if s.is_zero() {
            return;
        }
        let e = self.terms.entry((left, right)).or_default();
        *e += s;
        if e.is_zero() {
            self.terms.remove(&(left, right));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Scalar)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &GradedTensorElement) -> GradedTensorElement {
        let mut out = self.clone();
        for (&(l, r), s) in &other.terms {
            out.push(l, r, s.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> GradedTensorElement {
        let mut out = GradedTensorElement::default();
        for (&(l, r), c) in &self.terms {
            out.push(l, r, c * s);
        }
        out
    }

    /// `(a ⊗̂ b)(c ⊗̂ d) = (−1)^{|b||c|} ac ⊗̂ bd`.
    pub fn mul(&self, other: &GradedTensorElement, left: &DiagonalClifford, right: &DiagonalClifford) -> GradedTensorElement {
        let mut out = GradedTensorElement::default();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &other.terms {
                let koszul = (b.count_ones() * c.count_ones()) as usize;
                let (ac, s1) = left.blade_product(a, c);
                let (bd, s2) = right.blade_product(b, d);
                let w = &(&(x * y) * &s1) * &s2;
                out.push(ac, bd, if koszul % 2 == 1 { -w } else { w });
            }
        }
        out
    }
}

/// Checks `ρ(x)ρ(y) + ρ(y)ρ(x) = 2⟨x, y⟩ (1 ⊗̂ 1)` on all Witt basis pairs, with
/// `ρ(x) = x₊ ⊗̂ 1 + 1 ⊗̂ x₋`.
pub fn tensor_split_check(b: &SymmetricForm) -> Result<bool> {
    let n = b.dim();
    let ctx = AlgebraContext::new(n)?;
    let (p, d) = congruence_diagonalize(b.matrix())?;
    let p_inv = p.inverse().ok_or(AlgebraError::SingularForm)?;
    let plus_alg = DiagonalClifford::new(d.clone());
    let minus_alg = DiagonalClifford::new(d.iter().map(|s| -s).collect());
    let basis: Vec<Vecfor> = (1..=n)
        .map(|k| Vecfor::e(&ctx, k))
        .chain((1..=n).map(|k| Vecfor::t(&ctx, k)))
        .collect();
    let rho = |x: &Vecfor| -> Result<GradedTensorElement> {
        let (plus, minus) = b.rho_b_split(x)?;
        let l = GradedTensorElement::left_vector(&p_inv.mul_vec(&plus));
        let r = GradedTensorElement::right_vector(&p_inv.mul_vec(&minus));
        Ok(l.add(&r))
    };
    let images: Vec<GradedTensorElement> = basis.iter().map(rho).collect::<Result<_>>()?;
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            let lhs = images[i]
                .mul(&images[j], &plus_alg, &minus_alg)
                .add(&images[j].mul(&images[i], &plus_alg, &minus_alg));
            let rhs = GradedTensorElement::one().scale(&x.inner(y).mul_int(2));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Human-readable rendering of a [`FockMatrix`] with its basis header.
pub fn render_fock(m: &FockMatrix) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# basis: {}", m.basis_labels().join(", "));
    let _ = write!(out, "{}", m.matrix());
    out
}
