//! Exact computation with two-sided ideals of the free associative algebra
//! `K<X>` in noncommuting variables `x1, x2, ...`.
//!
//! The crate provides:
//!
//! * sparse noncommutative polynomials over an exact coefficient field,
//!   ordered by the deg-lex term ordering ([`word`], [`poly`]);
//! * subword rewriting: normal forms, reduction traces, and enumeration of
//!   normal words with multidegree counts ([`rewrite`]);
//! * Gröbner-basis machinery: overlap/inclusion obstructions, composition
//!   (S-polynomial) checks, degree-truncated completion, a brute-force
//!   ideal-dimension oracle, and dimension-based verification reports
//!   ([`groebner`]);
//! * monomial endomorphisms of the free algebra and enumeration of the
//!   images of a generating set under a semigroup of such endomorphisms
//!   ([`endo`]);
//! * the concrete generator families for the ideal generated by the
//!   length-three commutators (the enveloping algebra of the free
//!   nilpotent-of-class-2 Lie algebra) and for the T-ideal of the Grassmann
//!   algebra, together with the PBW and Grassmann reference bases and the
//!   bijection between PBW data and normal words ([`families`]);
//! * exact exterior (Grassmann) algebra arithmetic and evaluation of free
//!   polynomials on it ([`grassmann`]).
//!
//! All core arithmetic is generic over the coefficient scalar through the
//! [`Scalar`] trait; the crate-root aliases [`Rat`] and [`RatPoly`] pin the
//! exact-rational instantiation used by the command-line tools and tests.

use std::fmt;

use num_traits::Num;

pub mod endo;
pub mod families;
pub mod grassmann;
pub mod groebner;
pub mod parse;
pub mod poly;
pub mod rewrite;
pub mod word;

pub use endo::{Endomorphism, SemigroupSpec};
pub use families::{CanonicalFactorization, Family, FamilyId, GrassmannIndex, PbwIndex};
pub use grassmann::GrassmannElement;
pub use groebner::{Obstruction, ObstructionKind, SubstitutionClosure, VerificationReport};
pub use poly::Polynomial;
pub use rewrite::{GeneratorSet, ReductionTrace};
pub use word::{Multidegree, Word};

/// Coefficient scalar for the free-algebra arithmetic.
///
/// Reduction and completion divide by leading coefficients, so the scalar
/// must behave like a field. Any `num_traits::Num` with negation qualifies;
/// exactness is up to the instantiation (floating-point scalars satisfy the
/// bounds but make rewriting results approximate).
pub trait Scalar:
    Num + std::ops::Neg<Output = Self> + Clone + Send + Sync + fmt::Debug + fmt::Display + 'static
{
}

impl<T> Scalar for T where
    T: Num + std::ops::Neg<Output = T> + Clone + Send + Sync + fmt::Debug + fmt::Display + 'static
{
}

/// Exact rational scalar used by the CLI and the verification suites.
pub type Rat = num_rational::BigRational;

/// Noncommutative polynomial over [`Rat`].
pub type RatPoly = Polynomial<Rat>;

/// Rational from a numerator/denominator pair.
pub fn rational(numer: i64, denom: i64) -> Rat {
    Rat::new(numer.into(), denom.into())
}

/// Rational from an integer.
pub fn integer(value: i64) -> Rat {
    Rat::from_integer(value.into())
}
