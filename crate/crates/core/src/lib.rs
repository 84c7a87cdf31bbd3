//! Automorphisms of `R[x,y]` and `K[x,y]` for `R = F_p[t]`, `K = F_p(t)`:
//! amalgamated normal forms, tame-type subgroups, p-stable exponent sets and
//! Nagata-type wild automorphisms.
//!
//! The algebra is generic over the [`Ring`]/[`Field`] traits; the aliases
//! below name the concrete rings used in practice.

pub mod amalgam;
pub mod automorphism;
pub mod bipoly;
pub mod coefficients;
pub mod error;
pub mod nagata;
pub mod pstable;
pub mod syntax;
pub mod vdk;

pub use amalgam::{Letter, Tag, Word};
pub use automorphism::{Auto, ClassFlags, JacobianMatrix};
pub use bipoly::{BiPoly, Degree, Monomial, Var};
pub use coefficients::{Characteristic, Field, Fp, RatFunc, Rational, Ring, UniPoly};
pub use error::{Error, Result};
pub use pstable::PStableSet;

/// `R = F_p[t]`.
pub type TPoly = UniPoly<Fp>;
/// `K = F_p(t)`.
pub type K = RatFunc<Fp>;
/// Polynomials in `x, y` over `R`.
pub type RPoly = BiPoly<TPoly>;
/// Polynomials in `x, y` over `K`.
pub type KPoly = BiPoly<K>;
pub type RAuto = Auto<TPoly>;
pub type KAuto = Auto<K>;
pub type KWord = Word<KAuto>;
/// `Q[t]`, used for characteristic-zero sanity checks.
pub type QTPoly = UniPoly<Rational>;
/// `Q(t)`.
pub type QK = RatFunc<Rational>;
pub type QAuto = Auto<QK>;
