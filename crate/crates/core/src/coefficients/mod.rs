//! Coefficient rings: the prime field `F_p` (or `Q` for characteristic 0),
//! the polynomial domain `R = F[t]` and its fraction field `K = F(t)`.
//!
//! Everything above this module is written against the [`Ring`] and
//! [`Field`] traits. The characteristic is a runtime value, so ring elements
//! carry a small context ([`Ring::Ctx`]) from which zero and one are built.

mod prime_field;
mod rational;
mod ratfunc;
mod upoly;

use std::fmt::{Debug, Display};
use std::hash::Hash;

pub use prime_field::{is_prime, Characteristic, Fp};
pub use rational::Rational;
pub use ratfunc::RatFunc;
pub use upoly::UniPoly;

/// A commutative ring with identity whose elements know their own context.
pub trait Ring: Clone + Eq + Hash + Debug + Display + Send + Sync + 'static {
    /// Data needed to build constants (the characteristic, for example).
    type Ctx: Clone + Eq + Hash + Debug + Send + Sync + 'static;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_int(ctx: &Self::Ctx, n: i64) -> Self;
    fn characteristic(ctx: &Self::Ctx) -> u64;

    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    /// The inverse of `self` if it is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;

    /// `q` with `q * divisor == self`, if it exists in this ring.
    fn divide_exact(&self, divisor: &Self) -> Option<Self>;

    fn is_unit(&self) -> bool {
        self.unit_inverse().is_some()
    }

    fn is_one(&self) -> bool {
        *self == Self::one(&self.ctx())
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ctx());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiply by a machine integer (reduced into the ring).
    fn scale_int(&self, n: i64) -> Self {
        self.mul(&Self::from_int(&self.ctx(), n))
    }
}

/// A ring in which every nonzero element is a unit.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self> {
        self.unit_inverse()
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }
}
