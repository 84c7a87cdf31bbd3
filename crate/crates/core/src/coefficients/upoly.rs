use std::fmt;

use super::{Field, Ring};

/// A dense univariate polynomial in `t` over a field `F`.
///
/// `coeffs[i]` is the coefficient of `t^i`; there are no trailing zeros,
/// so the zero polynomial has an empty coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly<F: Field> {
    coeffs: Vec<F>,
    ctx: F::Ctx,
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>, ctx: F::Ctx) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs, ctx }
    }

    /// Builds a polynomial from machine integers, lowest degree first.
    pub fn from_ints(coeffs: &[i64], ctx: F::Ctx) -> Self {
        let c = coeffs.iter().map(|&n| F::from_int(&ctx, n)).collect();
        Self::new(c, ctx)
    }

    pub fn constant(c: F) -> Self {
        let ctx = c.ctx();
        Self::new(vec![c], ctx)
    }

    /// The indeterminate `t`.
    pub fn t(ctx: F::Ctx) -> Self {
        Self::new(vec![F::zero(&ctx), F::one(&ctx)], ctx)
    }

    pub fn monomial(c: F, deg: usize) -> Self {
        let ctx = c.ctx();
        let mut coeffs = vec![F::zero(&ctx); deg];
        coeffs.push(c);
        Self::new(coeffs, ctx)
    }

    pub fn field_ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(|| F::zero(&self.ctx))
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect(), self.ctx.clone())
    }

    /// Divides by the leading coefficient; the zero polynomial is returned as is.
    pub fn monic(&self) -> Self {
        match self.leading_coeff().and_then(|c| c.inv()) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    /// Euclidean division; `None` if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lead_inv = divisor.leading_coeff()?.inv()?;
        let mut rem = self.coeffs.clone();
        let zero = F::zero(&self.ctx);
        let qlen = rem.len().saturating_sub(dd);
        let mut quot = vec![zero.clone(); qlen];
        for i in (0..qlen).rev() {
            let c = rem[i + dd].mul(&lead_inv);
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].sub(&c.mul(d));
            }
            quot[i] = c;
        }
        rem.truncate(dd.min(rem.len()));
        Some((
            Self::new(quot, self.ctx.clone()),
            Self::new(rem, self.ctx.clone()),
        ))
    }

    pub fn rem(&self, divisor: &Self) -> Option<Self> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(&self.ctx), |acc, c| acc.mul(x).add(c))
    }

    pub fn derivative(&self) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| a.scale_int(i as i64))
            .collect();
        Self::new(c, self.ctx.clone())
    }
}

impl<F: Field> Ring for UniPoly<F> {
    type Ctx = F::Ctx;

    fn ctx(&self) -> F::Ctx {
        self.ctx.clone()
    }

    fn zero(ctx: &F::Ctx) -> Self {
        Self::new(Vec::new(), ctx.clone())
    }

    fn one(ctx: &F::Ctx) -> Self {
        Self::new(vec![F::one(ctx)], ctx.clone())
    }

    fn from_int(ctx: &F::Ctx, n: i64) -> Self {
        Self::new(vec![F::from_int(ctx, n)], ctx.clone())
    }

    fn characteristic(ctx: &F::Ctx) -> u64 {
        F::characteristic(ctx)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        Self::new(c, self.ctx.clone())
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect();
        Self::new(c, self.ctx.clone())
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut c = vec![F::zero(&self.ctx); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] = c[i + j].add(&a.mul(b));
            }
        }
        Self::new(c, self.ctx.clone())
    }

    fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.neg()).collect(), self.ctx.clone())
    }

    /// Units of `F[t]` are the nonzero constants.
    fn unit_inverse(&self) -> Option<Self> {
        if self.coeffs.len() == 1 {
            self.coeffs[0].inv().map(Self::constant)
        } else {
            None
        }
    }

    fn divide_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }
}

/// Writes `c*v^e` terms highest degree first, e.g. `t^2+3*t+1`.
pub(crate) fn write_univariate<F: Field>(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[F],
    var: &str,
) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let s = c.to_string();
        let (neg, mag) = match s.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, s),
        };
        if neg {
            write!(f, "-")?;
        } else if !first {
            write!(f, "+")?;
        }
        first = false;
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        if mono.is_empty() {
            write!(f, "{mag}")?;
        } else if mag == "1" {
            write!(f, "{mono}")?;
        } else {
            write!(f, "{mag}*{mono}")?;
        }
    }
    Ok(())
}

impl<F: Field> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_univariate(f, &self.coeffs, "t")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{Characteristic, Fp};

    fn tp(c: &[i64], p: u64) -> UniPoly<Fp> {
        UniPoly::from_ints(c, Characteristic::new(p).unwrap())
    }

    #[test]
    fn unit_iff_nonzero_constant() {
        assert!(tp(&[1], 5).is_unit());
        assert!(!tp(&[0, 1], 5).is_unit());
        assert!(tp(&[3], 5).is_unit());
        assert_eq!(tp(&[3], 5).unit_inverse().unwrap(), tp(&[2], 5));
        assert!(!tp(&[], 5).is_unit());
    }

    #[test]
    fn division_with_remainder() {
        // t^2 + t = 1 * t^2 + t
        let (q, r) = tp(&[0, 1, 1], 3).div_rem(&tp(&[0, 0, 1], 3)).unwrap();
        assert_eq!(q, tp(&[1], 3));
        assert_eq!(r, tp(&[0, 1], 3));
        assert!(tp(&[1], 3).div_rem(&tp(&[], 3)).is_none());
    }

    #[test]
    fn gcd_is_monic() {
        // (t+1)(t+2) and (t+1)t over F_5
        let a = tp(&[1, 1], 5).mul(&tp(&[2, 1], 5));
        let b = tp(&[1, 1], 5).mul(&tp(&[0, 3], 5));
        assert_eq!(a.gcd(&b), tp(&[1, 1], 5));
    }

    #[test]
    fn display_is_descending() {
        assert_eq!(tp(&[1, 3, 1], 5).to_string(), "t^2+3*t+1");
        assert_eq!(tp(&[], 5).to_string(), "0");
        assert_eq!(tp(&[0, 1], 2).to_string(), "t");
    }

    #[test]
    fn frobenius_kills_derivative() {
        assert!(tp(&[0, 0, 0, 1], 3).derivative().is_zero());
    }
}
