//! Endomorphisms of `V`, their duals, and endomorphisms of `H_V`.
//!
//! Matrices act on coordinate columns: `LinMapV` on the `e`-basis, its dual on
//! the `θ`-basis, `HEndo` on Witt coordinates `(x_*, x*)`.

use std::sync::Arc;

use crate::context::AlgebraContext;
use crate::error::{AlgebraError, Result};
use crate::hyperbolic::{sigma_basis, Subspace, Vecfor};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMapV {
    matrix: Matrix,
}

/// An endomorphism of `V*` in the `θ`-basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMapVDual {
    matrix: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HEndo {
    matrix: Matrix,
}

impl LinMapV {
    pub fn new(matrix: Matrix) -> Result<LinMapV> {
        if !matrix.is_square() {
            return Err(AlgebraError::ShapeMismatch {
                expected: matrix.rows(),
                found: matrix.cols(),
            });
        }
        Ok(LinMapV { matrix })
    }

    pub fn identity(n: usize) -> LinMapV {
        LinMapV { matrix: Matrix::identity(n) }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(v)
    }

    pub fn compose(&self, other: &LinMapV) -> LinMapV {
        LinMapV { matrix: &self.matrix * &other.matrix }
    }

    pub fn image(&self) -> Subspace {
        let n = self.matrix.rows();
        Subspace::span(crate::hyperbolic::Ambient::V, n, self.matrix.transpose().row_vectors())
            .expect("square matrix")
    }

    pub fn kernel(&self) -> Subspace {
        let n = self.matrix.rows();
        Subspace::new(crate::hyperbolic::Ambient::V, n, self.matrix.nullspace()).expect("nullspace basis")
    }
}

impl LinMapVDual {
    pub fn new(matrix: Matrix) -> Result<LinMapVDual> {
        LinMapV::new(matrix).map(|m| LinMapVDual { matrix: m.matrix })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, form: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(form)
    }

    pub fn compose(&self, other: &LinMapVDual) -> LinMapVDual {
        LinMapVDual { matrix: &self.matrix * &other.matrix }
    }

    pub fn kernel(&self) -> Subspace {
        let n = self.matrix.rows();
        Subspace::new(crate::hyperbolic::Ambient::VDual, n, self.matrix.nullspace()).expect("nullspace basis")
    }

    /// `φ**`, identified with an endomorphism of `V`.
    pub fn dual(&self) -> LinMapV {
        LinMapV { matrix: self.matrix.transpose() }
    }
}

/// `(φ*α)(x) = α(φx)`: the transpose, acting on forms.
pub fn dual_map(phi: &LinMapV) -> LinMapVDual {
    LinMapVDual {
        matrix: phi.matrix.transpose(),
    }
}

impl HEndo {
    pub fn new(matrix: Matrix) -> Result<HEndo> {
        if !matrix.is_square() || !matrix.rows().is_multiple_of(2) {
            return Err(AlgebraError::ShapeMismatch {
                expected: matrix.rows(),
                found: matrix.cols(),
            });
        }
        Ok(HEndo { matrix })
    }

    pub fn identity(n: usize) -> HEndo {
        HEndo { matrix: Matrix::identity(2 * n) }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows() / 2
    }

    pub fn apply(&self, x: &Vecfor) -> Vecfor {
        let y = self.matrix.mul_vec(&x.coords());
        Vecfor::from_coords(x.ctx(), &y).expect("shape")
    }

    pub fn compose(&self, other: &HEndo) -> HEndo {
        HEndo { matrix: &self.matrix * &other.matrix }
    }

    /// Both off-diagonal `n×n` blocks vanish.
    pub fn is_block_diagonal(&self) -> bool {
        let n = self.dim();
        self.matrix.block(0, n, n, n).is_zero() && self.matrix.block(n, 0, n, n).is_zero()
    }

    /// `f(W) ⊆ W` for a subspace of `H_V`.
    pub fn stabilizes(&self, w: &Subspace) -> bool {
        w.basis().iter().all(|v| w.contains_vector(&self.matrix.mul_vec(v)))
    }
}

/// `I(φ) = φ ⊕ φ*`.
pub fn isotropic_extension(phi: &LinMapV) -> HEndo {
    HEndo {
        matrix: Matrix::block_diag(&phi.matrix, &dual_map(phi).matrix),
    }
}

/// `y_* ↦ x*(y_*) x_*`, the outer product `x_* x*ᵀ`.
pub fn vecfor_endo(x: &Vecfor) -> LinMapV {
    let n = x.dim();
    LinMapV {
        matrix: Matrix::from_fn(n, n, |i, j| &x.vec_part()[i] * &x.form_part()[j]),
    }
}

fn non_null_pairing(x: &Vecfor) -> Result<Scalar> {
    let q = x.self_pairing();
    if q.is_zero() {
        return Err(AlgebraError::NullVecfor);
    }
    Ok(q)
}

/// `P_x ⊕ P^x` with `P_x y_* = (x*(y_*)/x*(x_*)) x_*`.
pub fn projection(x: &Vecfor) -> Result<HEndo> {
    let q = non_null_pairing(x)?;
    let p = vecfor_endo(x).matrix.scale(&q.inv().expect("nonzero"));
    Ok(HEndo {
        matrix: Matrix::block_diag(&p, &p.transpose()),
    })
}

/// `R_x ⊕ R^x` with `R_x = 1 − 2P_x`.
pub fn reflection(x: &Vecfor) -> Result<HEndo> {
    let p = projection(x)?;
    let two = Scalar::from_int(2);
    Ok(HEndo {
        matrix: &Matrix::identity(2 * x.dim()) - &p.matrix.scale(&two),
    })
}

/// Columns are the Witt coordinates of `σ₁..σ₂ₙ`.
pub fn sigma_change_of_basis(ctx: &Arc<AlgebraContext>) -> Matrix {
    let cols: Vec<Vec<Scalar>> = sigma_basis(ctx).iter().map(Vecfor::coords).collect();
    Matrix::from_columns(&cols)
}

/// Matrix of `f` in the σ basis, `C⁻¹ M C`.
pub fn endo_matrix_sigma(ctx: &Arc<AlgebraContext>, f: &HEndo) -> Result<Matrix> {
    if f.dim() != ctx.dim() {
        return Err(AlgebraError::ContextMismatch {
            left: ctx.dim(),
            right: f.dim(),
        });
    }
    let c = sigma_change_of_basis(ctx);
    let c_inv = c.inverse().expect("σ is a basis");
    Ok(&(&c_inv * &f.matrix) * &c)
}

/// Back from the σ basis, `C M C⁻¹`.
pub fn endo_from_sigma(ctx: &Arc<AlgebraContext>, m: &Matrix) -> Result<HEndo> {
    let c = sigma_change_of_basis(ctx);
    let c_inv = c.inverse().expect("σ is a basis");
    HEndo::new(&(&c * m) * &c_inv)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    /// Basis of `S₀(α) = {α = 0}`.
    pub s0: Vec<Vec<Scalar>>,
    /// A point of `S_a(α) = {α = a}`.
    pub point: Vec<Scalar>,
}

/// `S₀(α)` from the row-reduced kernel, and the point `(a/α_j) e_j` with `j`
/// the first nonzero entry of `α`.
pub fn hyperplane_representation(alpha: &[Scalar], a: &Scalar) -> Result<Hyperplane> {
    let j = alpha
        .iter()
        .position(|c| !c.is_zero())
        .ok_or(AlgebraError::ZeroCovector)?;
    let s0 = Matrix::from_rows(vec![alpha.to_vec()]).nullspace();
    let mut point = vec![Scalar::zero(); alpha.len()];
    point[j] = a / &alpha[j];
    Ok(Hyperplane { s0, point })
}
