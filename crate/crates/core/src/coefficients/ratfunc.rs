use std::fmt;

use super::{Field, Ring, UniPoly};

/// An element of `F(t)` in lowest terms with a monic denominator.
///
/// The normal form makes structural equality coincide with equality of
/// values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc<F: Field> {
    num: UniPoly<F>,
    den: UniPoly<F>,
}

impl<F: Field> RatFunc<F> {
    /// `None` if `den` is zero.
    pub fn new(num: UniPoly<F>, den: UniPoly<F>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            let ctx = den.ctx();
            return Some(RatFunc { num, den: UniPoly::one(&ctx) });
        }
        let g = num.gcd(&den);
        let num = num.divide_exact(&g).expect("gcd divides");
        let den = den.divide_exact(&g).expect("gcd divides");
        let lead = den.leading_coeff().expect("nonzero").inv().expect("field");
        Some(RatFunc { num: num.scale(&lead), den: den.scale(&lead) })
    }

    pub fn from_poly(num: UniPoly<F>) -> Self {
        let ctx = num.ctx();
        RatFunc { num, den: UniPoly::one(&ctx) }
    }

    pub fn from_scalar(c: F) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn t(ctx: F::Ctx) -> Self {
        Self::from_poly(UniPoly::t(ctx))
    }

    pub fn numer(&self) -> &UniPoly<F> {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly<F> {
        &self.den
    }

    /// True when the value lies in the subring `F[t]`.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn to_poly(&self) -> Option<UniPoly<F>> {
        self.is_polynomial().then(|| self.num.clone())
    }
}

impl<F: Field> From<UniPoly<F>> for RatFunc<F> {
    fn from(p: UniPoly<F>) -> Self {
        RatFunc::from_poly(p)
    }
}

impl<F: Field> Ring for RatFunc<F> {
    type Ctx = F::Ctx;

    fn ctx(&self) -> F::Ctx {
        self.num.ctx()
    }

    fn zero(ctx: &F::Ctx) -> Self {
        Self::from_poly(UniPoly::zero(ctx))
    }

    fn one(ctx: &F::Ctx) -> Self {
        Self::from_poly(UniPoly::one(ctx))
    }

    fn from_int(ctx: &F::Ctx, n: i64) -> Self {
        Self::from_poly(UniPoly::from_int(ctx, n))
    }

    fn characteristic(ctx: &F::Ctx) -> u64 {
        F::characteristic(ctx)
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone()).expect("nonzero");
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::new(num, self.den.mul(&other.den)).expect("nonzero")
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ctx());
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den)).expect("nonzero")
    }

    fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Self::new(self.den.clone(), self.num.clone())
        }
    }

    fn divide_exact(&self, divisor: &Self) -> Option<Self> {
        divisor.unit_inverse().map(|i| self.mul(&i))
    }
}

impl<F: Field> Field for RatFunc<F> {}

fn is_atom(s: &str) -> bool {
    s.chars().all(|c| c.is_ascii_alphanumeric() || c == '^')
}

impl<F: Field> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let n = self.num.to_string();
        let d = self.den.to_string();
        let n_simple = n.chars().skip(1).all(|c| c != '+' && c != '-');
        if n_simple {
            write!(f, "{n}/")?;
        } else {
            write!(f, "({n})/")?;
        }
        if is_atom(&d) {
            write!(f, "{d}")
        } else {
            write!(f, "({d})")
        }
    }
}
