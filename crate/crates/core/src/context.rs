//! The algebra context: dimension, generator Gram matrix and the memoized
//! blade-product table.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::blade::{gen_lcontract, gen_wedge, Blade};
use crate::error::{AlgebraError, Result};
use crate::linalg::Matrix;
use crate::multivector::Multivecfor;
use crate::scalar::Scalar;

pub const MAX_DIM: usize = 14;

/// Largest dimension whose product table is kept as a dense array.
const DENSE_MEMO_DIM: usize = 4;

/// Geometric product of two blades: integer structure constants.
pub(crate) type BladeProduct = Arc<[(u32, i64)]>;

enum ProductMemo {
    Dense(Vec<OnceLock<BladeProduct>>),
    Sparse(RwLock<HashMap<(u32, u32), BladeProduct>>),
}

/// Everything that depends only on `n`. Shared behind an [`Arc`]; the memo is
/// safe to fill from several threads at once.
pub struct AlgebraContext {
    dim: usize,
    gram: Matrix,
    memo: ProductMemo,
}

impl std::fmt::Debug for AlgebraContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AlgebraContext").field("dim", &self.dim).finish()
    }
}

impl AlgebraContext {
    pub fn new(dim: usize) -> Result<Arc<AlgebraContext>> {
        if dim == 0 || dim > MAX_DIM {
            return Err(AlgebraError::DimensionOutOfRange(dim));
        }
        let gram = Matrix::from_fn(2 * dim, 2 * dim, |i, j| {
            if i + dim == j || j + dim == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let memo = if dim <= DENSE_MEMO_DIM {
            let side = 1usize << (2 * dim);
            ProductMemo::Dense((0..side * side).map(|_| OnceLock::new()).collect())
        } else {
            ProductMemo::Sparse(RwLock::new(HashMap::new()))
        };
        Ok(Arc::new(AlgebraContext { dim, gram, memo }))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of basis blades, `4^n`.
    pub fn blade_count(&self) -> usize {
        1 << (2 * self.dim)
    }

    /// Gram matrix of the Witt basis `(e₁..eₙ, θ¹..θⁿ)`.
    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn check_same(&self, other: &AlgebraContext) -> Result<()> {
        if self.dim != other.dim {
            return Err(AlgebraError::ContextMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    fn check_index(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.dim {
            return Err(AlgebraError::IndexOutOfRange {
                index: k,
                max: self.dim,
            });
        }
        Ok(())
    }

    pub fn scalar(self: &Arc<Self>, s: Scalar) -> Multivecfor {
        Multivecfor::from_blade(self, Blade::SCALAR, s)
    }

    pub fn one(self: &Arc<Self>) -> Multivecfor {
        self.scalar(Scalar::one())
    }

    pub fn zero(self: &Arc<Self>) -> Multivecfor {
        Multivecfor::zero(self)
    }

    /// `e_k`, 1-based. Panics when `k` is out of range; see [`Self::try_e`].
    pub fn e(self: &Arc<Self>, k: usize) -> Multivecfor {
        self.try_e(k).expect("generator index")
    }

    /// `θ^k`, 1-based.
    pub fn t(self: &Arc<Self>, k: usize) -> Multivecfor {
        self.try_t(k).expect("generator index")
    }

    pub fn try_e(self: &Arc<Self>, k: usize) -> Result<Multivecfor> {
        self.check_index(k)?;
        Ok(Multivecfor::from_blade(self, Blade::e(k), Scalar::one()))
    }

    pub fn try_t(self: &Arc<Self>, k: usize) -> Result<Multivecfor> {
        self.check_index(k)?;
        Ok(Multivecfor::from_blade(self, Blade::t(self.dim, k), Scalar::one()))
    }

    pub fn blade(self: &Arc<Self>, b: Blade) -> Multivecfor {
        Multivecfor::from_blade(self, b, Scalar::one())
    }

    /// Geometric product of two basis blades.
    pub(crate) fn blade_product(&self, a: u32, b: u32) -> BladeProduct {
        match &self.memo {
            ProductMemo::Dense(cells) => {
                let idx = ((a as usize) << (2 * self.dim)) | b as usize;
                cells[idx].get_or_init(|| self.compute_blade_product(a, b)).clone()
            }
            ProductMemo::Sparse(map) => {
                if let Some(hit) = map.read().expect("memo lock").get(&(a, b)) {
                    return hit.clone();
                }
                let val = self.compute_blade_product(a, b);
                map.write()
                    .expect("memo lock")
                    .entry((a, b))
                    .or_insert(val)
                    .clone()
            }
        }
    }

    /// Peel the first generator `x` off `A = x ∧ A'` and use
    /// `(x ∧ A')·B = x·(A'·B) − (x ⌟ A')·B`, with `x·M = x⌟M + x∧M`.
    fn compute_blade_product(&self, a: u32, b: u32) -> BladeProduct {
        if a == 0 {
            return Arc::from(vec![(b, 1)]);
        }
        let n = self.dim as u32;
        let x = a.trailing_zeros();
        let rest = a & !(1 << x);
        let mut acc: BTreeMap<u32, i64> = BTreeMap::new();
        for &(m, c) in self.blade_product(rest, b).iter() {
            if let Some((m2, s)) = gen_lcontract(x, m, n) {
                *acc.entry(m2).or_default() += s * c;
            }
            if let Some((m2, s)) = gen_wedge(x, m) {
                *acc.entry(m2).or_default() += s * c;
            }
        }
        if let Some((inner, s)) = gen_lcontract(x, rest, n) {
            for &(m, c) in self.blade_product(inner, b).iter() {
                *acc.entry(m).or_default() -= s * c;
            }
        }
        acc.into_iter()
            .filter(|&(_, c)| c != 0)
            .collect::<Vec<_>>()
            .into()
    }
}
