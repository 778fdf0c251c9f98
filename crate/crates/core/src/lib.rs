//! Symbolic engine for trace modules, Hom and Ext over quotients of
//! polynomial rings by exact Gröbner methods, with a linear-algebra oracle
//! for Artinian rings.

pub mod arith;
pub mod error;
pub mod fdalg;
pub mod fpmod;
pub mod homolog;
pub mod poly;

pub use arith::{DynField, Field, FieldSpec, PrimeField, Rationals, Scalar};
pub use error::{Error, Result};
pub use poly::{Ideal, Monomial, MonomialOrder, OrderKind, Poly, PolyRing, Polynomial, QuotientRing};

/// Quotient rings over the rationals.
pub type QRing = QuotientRing<Rationals>;
/// Quotient rings over a prime field.
pub type FpRing = QuotientRing<PrimeField>;
/// Quotient rings over a field chosen at runtime.
pub type DynRing = QuotientRing<DynField>;
/// Finitely presented modules over a runtime-chosen field.
pub type DynModule = fpmod::PresentedModule<DynField>;
