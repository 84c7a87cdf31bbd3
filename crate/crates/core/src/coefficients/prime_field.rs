use std::fmt;

use super::{Field, Ring};
use crate::error::{Error, Result};

/// Deterministic trial-division primality test; moduli here are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The characteristic of a coefficient ring: `0` or a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Characteristic(u64);

impl Characteristic {
    /// Largest supported prime; products of two residues must fit in a `u64`.
    pub const MAX_PRIME: u64 = u32::MAX as u64;

    pub fn new(p: u64) -> Result<Self> {
        if p == 0 || (is_prime(p) && p <= Self::MAX_PRIME) {
            Ok(Characteristic(p))
        } else {
            Err(Error::InvalidCharacteristic(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element of the prime field `F_p`, stored as a residue in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    p: u64,
}

impl Fp {
    /// Panics if `p` is not a prime characteristic; use
    /// [`Characteristic::new`] to validate untrusted input first.
    pub fn new(value: i64, p: Characteristic) -> Self {
        assert!(!p.is_zero(), "F_p requires a prime characteristic");
        let m = p.get() as i128;
        let v = (value as i128).rem_euclid(m) as u64;
        Fp { value: v, p: p.get() }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    fn with(self, value: u64) -> Self {
        Fp { value, p: self.p }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Ring for Fp {
    type Ctx = Characteristic;

    fn ctx(&self) -> Characteristic {
        Characteristic(self.p)
    }

    fn zero(ctx: &Characteristic) -> Self {
        Fp::new(0, *ctx)
    }

    fn one(ctx: &Characteristic) -> Self {
        Fp::new(1, *ctx)
    }

    fn from_int(ctx: &Characteristic, n: i64) -> Self {
        Fp::new(n, *ctx)
    }

    fn characteristic(ctx: &Characteristic) -> u64 {
        ctx.get()
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let s = self.value + other.value;
        self.with(if s >= self.p { s - self.p } else { s })
    }

    fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        if self.value >= other.value {
            self.with(self.value - other.value)
        } else {
            self.with(self.value + self.p - other.value)
        }
    }

    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        self.with(self.value * other.value % self.p)
    }

    fn neg(&self) -> Self {
        if self.value == 0 {
            *self
        } else {
            self.with(self.p - self.value)
        }
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // Fermat: a^(p-2) = a^-1.
        Some(Ring::pow(self, self.p - 2))
    }

    fn divide_exact(&self, divisor: &Self) -> Option<Self> {
        divisor.unit_inverse().map(|i| self.mul(&i))
    }
}

impl Field for Fp {}
