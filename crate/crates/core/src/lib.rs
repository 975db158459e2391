//! Exact Cayley-Dickson algebras over the rationals.
//!
//! Level 0 is the reals (here: the rationals), and each level doubles the
//! previous one: complex numbers, quaternions, octonions, sedenions, and so
//! on. Besides the arithmetic itself the crate carries a catalog of
//! composition-algebra laws with a seeded checking harness, basis
//! multiplication tables, a zero-divisor search and the 3- and 7-dimensional
//! cross products.
//!
//! The element type is generic over its scalar; the aliases below fix the
//! scalar to exact rationals, which is what every law check uses.

pub mod cross;
pub mod element;
pub mod error;
pub mod laws;
pub mod random;
pub mod scalar;
pub mod tables;

pub use element::{CdElement, ProductVariant, BASIS_NAMES};
pub use error::{Error, Result};
pub use scalar::{Rational, Scalar};

/// A Cayley-Dickson element with exact rational coefficients.
pub type Element = CdElement<Rational>;

/// Integer-coefficient element, used for fast searches over `{-1, 0, 1}`
/// combinations of basis units.
pub type IntElement = CdElement<i64>;
