//! Mod-2 Chow rings `Ch_K(X̄)` of maximal unitary grassmannians, with
//! Steenrod operations, the correspondence calculus on `X̄ × X̄`, J-invariant
//! bookkeeping, motivic shift profiles and the reduction maps relating
//! consecutive dimensions.
//!
//! Everything is exact over `F_2`. The runnable programs under `examples/`
//! cover one capability each:
//!
//! - `algebra_basics`: bases, products, degrees
//! - `steenrod_squares`: `S^i` and the total operation
//! - `correspondences`: composition, push and pull, `x_I`
//! - `projector_system`: the `θ_L` projectors for a given `J`
//! - `jinvariant_bounds`: Witt-index bounds and `cdim_2`
//! - `motivic_decomposition`: shift profiles and the Poincaré check
//! - `reduction`: `β_*`, `i_*`, `i^*`
//! - `quadratic_comparison`: the J-invariant of the associated quadratic form
//! - `serialization`: JSON and text round trips

pub mod algebra;
pub mod cli;
pub mod correspondences;
pub mod error;
pub mod gf2;
pub mod jinvariant;
pub mod motives;
pub mod parse;
pub mod poly;
pub mod reduction;
pub mod steenrod;
pub mod verify;

pub use algebra::{
    basis, degree, generator_class, generator_set, multiply, poincare_polynomial, ChowClass,
    GeneratorContext, Monomial, Parity,
};
pub use correspondences::{
    compose, pullback, pushforward, theta, theta_projector, transpose, x_cycle, Correspondence,
};
pub use error::{Error, Result};
pub use jinvariant::{cdim2, HermitianProfile, JInvariant};
pub use motives::{decompose, MotiveDecomposition};
pub use parse::parse_class;
pub use steenrod::{steenrod_sq, total_steenrod};
