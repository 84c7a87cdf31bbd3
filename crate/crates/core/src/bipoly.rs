//! Sparse polynomials in `x`, `y` over a coefficient ring.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose order is graded
//! lexicographic with `x > y`. Printing and hashing are therefore
//! deterministic, and the leading term is the last map entry.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coefficients::{Field, Ring, UniPoly};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub fn new(x: u32, y: u32) -> Self {
        Monomial { x, y }
    }

    pub fn degree(self) -> u32 {
        self.x + self.y
    }

    fn times(self, other: Monomial) -> Monomial {
        Monomial { x: self.x + other.x, y: self.y + other.y }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total degree; the zero polynomial has degree `NegInfinity`, which
/// compares below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::NegInfinity => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiPoly<C: Ring> {
    terms: BTreeMap<Monomial, C>,
    ctx: C::Ctx,
}

impl<C: Ring> BiPoly<C> {
    pub fn zero(ctx: &C::Ctx) -> Self {
        BiPoly { terms: BTreeMap::new(), ctx: ctx.clone() }
    }

    pub fn one(ctx: &C::Ctx) -> Self {
        Self::constant(C::one(ctx))
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: C, x: u32, y: u32) -> Self {
        let mut p = Self::zero(&c.ctx());
        if !c.is_zero() {
            p.terms.insert(Monomial::new(x, y), c);
        }
        p
    }

    pub fn x(ctx: &C::Ctx) -> Self {
        Self::monomial(C::one(ctx), 1, 0)
    }

    pub fn y(ctx: &C::Ctx) -> Self {
        Self::monomial(C::one(ctx), 0, 1)
    }

    pub fn var(v: Var, ctx: &C::Ctx) -> Self {
        match v {
            Var::X => Self::x(ctx),
            Var::Y => Self::y(ctx),
        }
    }

    /// Collects `(coefficient, x-exponent, y-exponent)` triples, summing repeats.
    pub fn from_terms(ctx: &C::Ctx, terms: impl IntoIterator<Item = (C, u32, u32)>) -> Self {
        let mut p = Self::zero(ctx);
        for (c, i, j) in terms {
            p.add_term(Monomial::new(i, j), c);
        }
        p
    }

    /// A polynomial in `y` alone from its coefficients, lowest degree first.
    pub fn from_y_coeffs(ctx: &C::Ctx, coeffs: impl IntoIterator<Item = C>) -> Self {
        Self::from_terms(ctx, coeffs.into_iter().enumerate().map(|(j, c)| (c, 0, j as u32)))
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = existing.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn ring_ctx(&self) -> &C::Ctx {
        &self.ctx
    }

    pub fn characteristic(&self) -> u64 {
        C::characteristic(&self.ctx)
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, x: u32, y: u32) -> C {
        self.terms
            .get(&Monomial::new(x, y))
            .cloned()
            .unwrap_or_else(|| C::zero(&self.ctx))
    }

    pub fn constant_term(&self) -> C {
        self.coeff(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    /// The constant value, if the polynomial has no `x` or `y`.
    pub fn as_constant(&self) -> Option<C> {
        self.is_constant().then(|| self.constant_term())
    }

    pub fn total_degree(&self) -> Degree {
        match self.terms.keys().next_back() {
            Some(m) => Degree::Finite(m.degree()),
            None => Degree::NegInfinity,
        }
    }

    pub fn degree_in(&self, v: Var) -> Degree {
        self.terms
            .keys()
            .map(|m| match v {
                Var::X => m.x,
                Var::Y => m.y,
            })
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// Highest term in the graded lexicographic order.
    pub fn leading_term(&self) -> Option<(Monomial, &C)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    /// Homogeneous component of the given total degree.
    pub fn homogeneous_part(&self, deg: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == deg)
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        BiPoly { terms, ctx: self.ctx.clone() }
    }

    /// Homogeneous component of top degree (zero for the zero polynomial).
    pub fn leading_form(&self) -> Self {
        match self.total_degree() {
            Degree::Finite(d) => self.homogeneous_part(d),
            Degree::NegInfinity => self.clone(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut out = Self::zero(&self.ctx);
        for (m, a) in &self.terms {
            out.add_term(*m, a.mul(c));
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative; exponents are reduced in the coefficient ring.
    pub fn partial_derivative(&self, v: Var) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (m, c) in &self.terms {
            let (e, shifted) = match v {
                Var::X if m.x > 0 => (m.x, Monomial::new(m.x - 1, m.y)),
                Var::Y if m.y > 0 => (m.y, Monomial::new(m.x, m.y - 1)),
                _ => continue,
            };
            out.add_term(shifted, c.scale_int(e as i64));
        }
        out
    }

    /// `f(g1, g2)`: replaces `x` by `g1` and `y` by `g2`.
    pub fn substitute(&self, g1: &Self, g2: &Self) -> Self {
        let max_x = self.terms.keys().map(|m| m.x).max().unwrap_or(0) as usize;
        let max_y = self.terms.keys().map(|m| m.y).max().unwrap_or(0) as usize;
        let powers = |g: &Self, n: usize| {
            let mut v = Vec::with_capacity(n + 1);
            v.push(Self::one(&self.ctx));
            for k in 1..=n {
                let next = &v[k - 1] * g;
                v.push(next);
            }
            v
        };
        let gx = powers(g1, max_x);
        let gy = powers(g2, max_y);
        // Group by x-exponent: sum_i g1^i * (sum_j c_ij g2^j).
        let mut by_x: BTreeMap<u32, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            let inner = by_x.entry(m.x).or_insert_with(|| Self::zero(&self.ctx));
            *inner = &*inner + &gy[m.y as usize].scale(c);
        }
        let mut out = Self::zero(&self.ctx);
        for (i, inner) in by_x {
            out = &out + &(&gx[i as usize] * &inner);
        }
        out
    }

    /// Applies `f` to every coefficient, building a polynomial over another ring.
    pub fn map_coeffs<D: Ring>(&self, ctx: &D::Ctx, f: impl Fn(&C) -> D) -> BiPoly<D> {
        let mut out = BiPoly::zero(ctx);
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }

    pub fn try_map_coeffs<D: Ring, E>(
        &self,
        ctx: &D::Ctx,
        f: impl Fn(&C) -> std::result::Result<D, E>,
    ) -> std::result::Result<BiPoly<D>, E> {
        let mut out = BiPoly::zero(ctx);
        for (m, c) in &self.terms {
            out.add_term(*m, f(c)?);
        }
        Ok(out)
    }

    /// True iff `x` does not occur.
    pub fn is_in_y_only(&self) -> bool {
        self.terms.keys().all(|m| m.x == 0)
    }

    /// Coefficients of a polynomial in `y` alone, lowest degree first.
    pub fn y_coeffs(&self) -> Option<Vec<C>> {
        if !self.is_in_y_only() {
            return None;
        }
        let n = self.degree_in(Var::Y).finite().map_or(0, |d| d as usize + 1);
        Some((0..n).map(|j| self.coeff(0, j as u32)).collect())
    }

    /// Additive (p-)polynomial test: only `c*x^(p^k)` and `c*y^(p^k)` terms.
    /// In characteristic 0 this is the linear-form test.
    pub fn is_additive(&self) -> bool {
        let p = self.characteristic();
        self.terms.keys().all(|m| match (m.x, m.y) {
            (e, 0) | (0, e) if e > 0 => is_power_of(e as u64, p),
            _ => false,
        })
    }

    /// Membership in `C[x^p, y^p]`. In characteristic 0 only constants qualify.
    pub fn in_frobenius_subring(&self) -> bool {
        let p = self.characteristic();
        self.terms.keys().all(|m| {
            if p == 0 {
                m.x == 0 && m.y == 0
            } else {
                (m.x as u64).is_multiple_of(p) && (m.y as u64).is_multiple_of(p)
            }
        })
    }

    /// Drops the constant term.
    pub fn without_constant(&self) -> Self {
        let mut out = self.clone();
        out.terms.remove(&Monomial::ONE);
        out
    }
}

/// `e` is `p^k` for some `k >= 0`; with `p = 0` only `e = 1` qualifies.
pub(crate) fn is_power_of(mut e: u64, p: u64) -> bool {
    if e == 0 {
        return false;
    }
    if p < 2 {
        return e == 1;
    }
    while e.is_multiple_of(p) {
        e /= p;
    }
    e == 1
}

impl<F: Field> BiPoly<UniPoly<F>> {
    /// Replaces every coefficient by its remainder modulo `a` in `F[t]`:
    /// the canonical representative of `f + a*R[x,y]`.
    pub fn reduce_mod(&self, a: &UniPoly<F>) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroModulus);
        }
        Ok(self.map_coeffs(&self.ctx, |c| c.rem(a).expect("nonzero modulus")))
    }
}

/// Free-function form of [`BiPoly::reduce_mod`].
pub fn reduce_mod<F: Field>(f: &BiPoly<UniPoly<F>>, a: &UniPoly<F>) -> Result<BiPoly<UniPoly<F>>> {
    f.reduce_mod(a)
}

impl<'a, C: Ring> Add<&'a BiPoly<C>> for &'a BiPoly<C> {
    type Output = BiPoly<C>;
    fn add(self, rhs: &'a BiPoly<C>) -> BiPoly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a, C: Ring> Sub<&'a BiPoly<C>> for &'a BiPoly<C> {
    type Output = BiPoly<C>;
    fn sub(self, rhs: &'a BiPoly<C>) -> BiPoly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.neg());
        }
        out
    }
}

impl<'a, C: Ring> Mul<&'a BiPoly<C>> for &'a BiPoly<C> {
    type Output = BiPoly<C>;
    fn mul(self, rhs: &'a BiPoly<C>) -> BiPoly<C> {
        let mut out = BiPoly::zero(&self.ctx);
        for (ma, a) in &self.terms {
            for (mb, b) in &rhs.terms {
                out.add_term(ma.times(*mb), a.mul(b));
            }
        }
        out
    }
}

impl<C: Ring> Neg for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn neg(self) -> BiPoly<C> {
        BiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
            ctx: self.ctx.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<C: Ring> $tr<BiPoly<C>> for BiPoly<C> {
            type Output = BiPoly<C>;
            fn $method(self, rhs: BiPoly<C>) -> BiPoly<C> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Ring> Neg for BiPoly<C> {
    type Output = BiPoly<C>;
    fn neg(self) -> BiPoly<C> {
        -&self
    }
}

fn is_simple(s: &str) -> bool {
    !s.chars().skip(1).any(|c| c == '+' || c == '-' || c == '/')
}

impl<C: Ring> fmt::Display for BiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) if is_simple(rest) => (true, rest.to_string()),
                _ => (false, s),
            };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if m.x == 1 {
                factors.push("x".to_string());
            } else if m.x > 1 {
                factors.push(format!("x^{}", m.x));
            }
            if m.y == 1 {
                factors.push("y".to_string());
            } else if m.y > 1 {
                factors.push(format!("y^{}", m.y));
            }
            let coeff = if is_simple(&mag) { mag } else { format!("({mag})") };
            if factors.is_empty() {
                write!(f, "{coeff}")?;
            } else if coeff == "1" {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{coeff}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{Characteristic, Fp};

    type R = UniPoly<Fp>;

    fn ch(p: u64) -> Characteristic {
        Characteristic::new(p).unwrap()
    }

    fn tp(c: &[i64], p: u64) -> R {
        R::from_ints(c, ch(p))
    }

    fn poly(p: u64, terms: &[(&[i64], u32, u32)]) -> BiPoly<R> {
        BiPoly::from_terms(&ch(p), terms.iter().map(|(c, i, j)| (tp(c, p), *i, *j)))
    }

    #[test]
    fn total_degree_examples() {
        assert_eq!(poly(5, &[(&[1], 1, 0), (&[1], 0, 2)]).total_degree(), Degree::Finite(2));
        assert_eq!(BiPoly::<R>::zero(&ch(5)).total_degree(), Degree::NegInfinity);
        let f = poly(5, &[(&[0, 1], 1, 3), (&[1], 2, 0)]);
        assert_eq!(f.total_degree(), Degree::Finite(4));
        assert!(Degree::NegInfinity < Degree::Finite(0));
    }

    #[test]
    fn derivative_examples() {
        let x3 = poly(3, &[(&[1], 3, 0)]);
        assert!(x3.partial_derivative(Var::X).is_zero());
        let f = poly(5, &[(&[1], 1, 0), (&[1], 0, 2)]);
        assert_eq!(f.partial_derivative(Var::Y), poly(5, &[(&[2], 0, 1)]));
        // d/dy (y + t y^2) = 1 + 2ty = 1 over F_2
        let g = poly(2, &[(&[1], 0, 1), (&[0, 1], 0, 2)]);
        assert_eq!(g.partial_derivative(Var::Y), BiPoly::one(&ch(2)));
    }

    #[test]
    fn substitution_examples() {
        let p = 3;
        let x = BiPoly::<R>::x(&ch(p));
        let y = BiPoly::<R>::y(&ch(p));
        let xy = &x * &y;
        assert_eq!(xy.substitute(&y, &x), xy);
        let g1 = poly(p, &[(&[1, 1], 2, 1)]);
        assert_eq!(x.substitute(&g1, &y), g1);
        // (y - t y^2) + t (y - t y^2)^2 = y - 2 t^2 y^3 + t^3 y^4
        let f = poly(p, &[(&[1], 0, 1), (&[0, 1], 0, 2)]);
        let g2 = poly(p, &[(&[1], 0, 1), (&[0, -1], 0, 2)]);
        let expect = poly(p, &[(&[1], 0, 1), (&[0, 0, -2], 0, 3), (&[0, 0, 0, 1], 0, 4)]);
        assert_eq!(f.substitute(&x, &g2), expect);
    }

    #[test]
    fn additive_examples() {
        assert!(poly(3, &[(&[1], 3, 0), (&[0, 1], 0, 1)]).is_additive());
        assert!(!poly(3, &[(&[1], 2, 0)]).is_additive());
        assert!(!poly(3, &[(&[1], 1, 0), (&[1], 0, 1), (&[1], 0, 0)]).is_additive());
        assert!(!poly(3, &[(&[1], 3, 3)]).is_additive());
    }

    #[test]
    fn frobenius_subring_examples() {
        assert!(poly(3, &[(&[1], 3, 3), (&[0, 1], 0, 0)]).in_frobenius_subring());
        assert!(!poly(3, &[(&[1], 1, 0)]).in_frobenius_subring());
        assert!(poly(2, &[(&[1], 2, 4)]).in_frobenius_subring());
    }

    #[test]
    fn reduce_mod_examples() {
        let p = 3;
        let a = tp(&[0, 0, 1], p);
        // y + t^2 y^3 -> y
        let f = poly(p, &[(&[1], 0, 1), (&[0, 0, 1], 0, 3)]);
        assert_eq!(f.reduce_mod(&a).unwrap(), poly(p, &[(&[1], 0, 1)]));
        // y + (t^2 + t) y^2 -> y + t y^2
        let g = poly(p, &[(&[1], 0, 1), (&[0, 1, 1], 0, 2)]);
        assert_eq!(g.reduce_mod(&a).unwrap(), poly(p, &[(&[1], 0, 1), (&[0, 1], 0, 2)]));
        let zero = BiPoly::<R>::zero(&ch(p));
        assert_eq!(zero.reduce_mod(&tp(&[0, 1], p)).unwrap(), zero);
        assert_eq!(f.reduce_mod(&tp(&[], p)), Err(Error::ZeroModulus));
    }

    #[test]
    fn display_order_and_parentheses() {
        let f = poly(3, &[(&[1], 1, 0), (&[0, 1], 0, 2), (&[1, 1], 0, 0)]);
        assert_eq!(f.to_string(), "t*y^2 + x + (t+1)");
    }

    #[test]
    fn power_of_check() {
        assert!(is_power_of(1, 3));
        assert!(is_power_of(9, 3));
        assert!(!is_power_of(6, 3));
        assert!(is_power_of(1, 0));
        assert!(!is_power_of(2, 0));
    }
}
