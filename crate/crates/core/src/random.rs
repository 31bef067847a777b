//! Seeded samplers for randomized identity checks.
//!
//! Coefficients are small rationals `p/q` with `|p| ≤ 8` and `1 ≤ q ≤ 8`;
//! each blade is present with probability at most one half.

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::blade::Blade;
use crate::context::AlgebraContext;
use crate::hyperbolic::{Ambient, Subspace, SymmetricForm, Vecfor};
use crate::linalg::Matrix;
use crate::multivector::Multivecfor;
use crate::scalar::Scalar;

pub const MAX_NUMERATOR: i64 = 8;
pub const MAX_DENOMINATOR: i64 = 8;
pub const DEFAULT_DENSITY: f64 = 0.5;

pub struct Sampler {
    rng: ChaCha8Rng,
    density: f64,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            density: DEFAULT_DENSITY,
        }
    }

    /// Independent stream for trial `index` of a run seeded with `seed`.
    pub fn for_trial(seed: u64, index: u64) -> Sampler {
        let mut s = Sampler::new(seed);
        s.rng.set_stream(index);
        s
    }

    /// Clamped to `[0, 0.5]`.
    pub fn with_density(mut self, density: f64) -> Sampler {
        self.density = density.clamp(0.0, DEFAULT_DENSITY);
        self
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn index(&mut self, upper: usize) -> usize {
        self.rng.gen_range(0..upper)
    }

    pub fn rational(&mut self) -> Scalar {
        let p = self.rng.gen_range(-MAX_NUMERATOR..=MAX_NUMERATOR);
        let q = self.rng.gen_range(1..=MAX_DENOMINATOR);
        Scalar::frac(p, q)
    }

    pub fn nonzero_rational(&mut self) -> Scalar {
        loop {
            let s = self.rational();
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// Random subset of the blades, each kept with the sampler's density.
    pub fn multivector_on(&mut self, ctx: &Arc<AlgebraContext>, blades: &[Blade]) -> Multivecfor {
        let terms: Vec<(Blade, Scalar)> = blades
            .iter()
            .filter_map(|b| {
                if self.rng.gen_bool(self.density) {
                    Some((*b, self.nonzero_rational()))
                } else {
                    None
                }
            })
            .collect();
        Multivecfor::from_terms(ctx, terms)
    }

    pub fn multivector(&mut self, ctx: &Arc<AlgebraContext>) -> Multivecfor {
        self.multivector_on(ctx, &Blade::all(ctx.dim()))
    }

    pub fn homogeneous(&mut self, ctx: &Arc<AlgebraContext>, grade: usize) -> Multivecfor {
        let blades: Vec<Blade> = Blade::all(ctx.dim()).into_iter().filter(|b| b.grade() == grade).collect();
        self.multivector_on(ctx, &blades)
    }

    /// Supported on `e`-blades only, i.e. an element of `∧V`.
    pub fn vector_only(&mut self, ctx: &Arc<AlgebraContext>) -> Multivecfor {
        let n = ctx.dim();
        let blades: Vec<Blade> = Blade::all(n).into_iter().filter(|b| b.is_vector_only(n)).collect();
        self.multivector_on(ctx, &blades)
    }

    /// Supported on `θ`-blades only, i.e. an element of `∧V*`.
    pub fn form_only(&mut self, ctx: &Arc<AlgebraContext>) -> Multivecfor {
        let n = ctx.dim();
        let blades: Vec<Blade> = Blade::all(n).into_iter().filter(|b| b.is_form_only(n)).collect();
        self.multivector_on(ctx, &blades)
    }

    /// Homogeneous element of `∧^r V`.
    pub fn vector_only_grade(&mut self, ctx: &Arc<AlgebraContext>, r: usize) -> Multivecfor {
        let n = ctx.dim();
        let blades: Vec<Blade> = Blade::all(n)
            .into_iter()
            .filter(|b| b.is_vector_only(n) && b.grade() == r)
            .collect();
        self.multivector_on(ctx, &blades)
    }

    /// Homogeneous element of `∧^r V*`.
    pub fn form_only_grade(&mut self, ctx: &Arc<AlgebraContext>, r: usize) -> Multivecfor {
        let n = ctx.dim();
        let blades: Vec<Blade> = Blade::all(n)
            .into_iter()
            .filter(|b| b.is_form_only(n) && b.grade() == r)
            .collect();
        self.multivector_on(ctx, &blades)
    }

    pub fn scalars(&mut self, len: usize) -> Vec<Scalar> {
        (0..len).map(|_| self.rational()).collect()
    }

    pub fn vecfor(&mut self, ctx: &Arc<AlgebraContext>) -> Vecfor {
        let n = ctx.dim();
        Vecfor::from_coords(ctx, &self.scalars(2 * n)).expect("shape")
    }

    pub fn non_null_vecfor(&mut self, ctx: &Arc<AlgebraContext>) -> Vecfor {
        loop {
            let x = self.vecfor(ctx);
            if !x.self_pairing().is_zero() {
                return x;
            }
        }
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |_, _| self.rational())
    }

    pub fn invertible_matrix(&mut self, n: usize) -> Matrix {
        loop {
            let m = self.matrix(n, n);
            if !m.det().is_zero() {
                return m;
            }
        }
    }

    pub fn symmetric_form(&mut self, n: usize) -> SymmetricForm {
        loop {
            let m = self.matrix(n, n);
            let sym = Matrix::from_fn(n, n, |i, j| if i <= j { m[(i, j)].clone() } else { m[(j, i)].clone() });
            if let Ok(b) = SymmetricForm::new(sym) {
                return b;
            }
        }
    }

    /// Subspace of `V` or `V*` of random dimension `0..=n`.
    pub fn subspace(&mut self, ambient: Ambient, n: usize) -> Subspace {
        let k = self.rng.gen_range(0..=n);
        loop {
            let rows: Vec<Vec<Scalar>> = (0..k).map(|_| self.scalars(n)).collect();
            if let Ok(s) = Subspace::new(ambient, n, rows) {
                return s;
            }
        }
    }
}
