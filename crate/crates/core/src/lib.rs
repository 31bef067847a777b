//! Exact computation in the hyperbolic Clifford algebra `Cl(H_V)`, `H_V = V ⊕ V*`.

pub mod blade;
pub mod cli;
pub mod context;
pub mod duality;
pub mod endomorphisms;
pub mod error;
pub mod expr;
pub mod hyperbolic;
pub mod linalg;
pub mod multivector;
pub mod products;
pub mod random;
pub mod representation;
pub mod scalar;
pub mod spinor;
pub mod suite;
pub mod table;

pub use blade::Blade;
pub use context::AlgebraContext;
pub use error::{AlgebraError, Result};
pub use hyperbolic::Vecfor;
pub use linalg::Matrix;
pub use multivector::Multivecfor;
pub use scalar::Scalar;
