//! Degree reduction for automorphisms of `K[x,y]` over a field `K`.
//!
//! Each round subtracts `α f_i^d` from the component of larger degree,
//! which is the same as composing on the right with an elementary letter.
//! When both components have degree one the remainder is affine.

use std::fmt;

use crate::amalgam::{normalize, reduced_length, AffBa, Letter, Tag, Word};
use crate::automorphism::Auto;
use crate::bipoly::{BiPoly, Degree};
use crate::coefficients::Field;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `f1 <- f1 - α f2^d`.
    First,
    /// `f2 <- f2 - α f1^d`.
    Second,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::First => "f1",
            Side::Second => "f2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep<C> {
    pub alpha: C,
    pub d: u32,
    pub side: Side,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition<C: Field> {
    pub word: Word<Auto<C>>,
    pub steps: Vec<ReductionStep<C>>,
}

impl<C: Field> Decomposition<C> {
    /// `ℓ`: `0` when the input lies in `Aff ∩ BA`.
    pub fn length(&self) -> usize {
        match self.word.head() {
            Some(l) => reduced_length(&self.word, &AffBa::<C>::new(l.elem.ring_ctx().clone())),
            None => 0,
        }
    }
}

/// A product of elementary letters followed by a linear letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditiveFactorization<C: Field> {
    pub letters: Vec<Auto<C>>,
    pub steps: Vec<ReductionStep<C>>,
}

impl<C: Field> AdditiveFactorization<C> {
    pub fn eval(&self, ctx: &C::Ctx) -> Auto<C> {
        self.letters.iter().fold(Auto::identity(ctx), |acc, l| acc.compose(l))
    }
}

/// `(α, d)` with `LF(f_j) = α LF(f_i)^d`, so that `deg(f_j - α f_i^d) <
/// deg f_j`. `None` when `deg f_i` does not divide `deg f_j` or the leading
/// forms are not proportional.
pub fn reduce_step<C: Field>(fi: &BiPoly<C>, fj: &BiPoly<C>) -> Option<(C, u32)> {
    let (a, b) = (fi.total_degree().finite()?, fj.total_degree().finite()?);
    if a == 0 || b < a || b % a != 0 {
        return None;
    }
    let d = b / a;
    let lf_i = fi.leading_form().pow(d);
    let lf_j = fj.leading_form();
    let (mi, ci) = lf_i.leading_term()?;
    let (mj, cj) = lf_j.leading_term()?;
    if mi != mj {
        return None;
    }
    let alpha = cj.div(ci)?;
    (lf_j == lf_i.scale(&alpha)).then_some((alpha, d))
}

fn not_auto(msg: &str) -> Error {
    Error::NotAutomorphism(msg.to_string())
}

type Trace<C> = Vec<(Auto<C>, ReductionStep<C>)>;

/// Runs the reduction. Returns the affine remainder and the elementary
/// letters `E_1, ..., E_k` with `φ E_1 ⋯ E_k` equal to that remainder.
fn reduce_loop<C: Field>(
    phi: &Auto<C>,
    mut check: impl FnMut(&ReductionStep<C>) -> Result<()>,
) -> Result<(Auto<C>, Trace<C>)> {
    let mut cur = phi.clone();
    let mut out = Vec::new();
    loop {
        let (d1, d2) = match (cur.f1.total_degree(), cur.f2.total_degree()) {
            (Degree::Finite(a), Degree::Finite(b)) if a > 0 && b > 0 => (a, b),
            _ => return Err(not_auto("a component is constant")),
        };
        if d1 == 1 && d2 == 1 {
            return if cur.is_affine() {
                Ok((cur, out))
            } else {
                Err(not_auto("linear part is singular"))
            };
        }
        let (side, fi, fj) = if d2 >= d1 {
            (Side::Second, &cur.f1, &cur.f2)
        } else {
            (Side::First, &cur.f2, &cur.f1)
        };
        let (alpha, d) = reduce_step(fi, fj).ok_or_else(|| not_auto("leading forms are not proportional"))?;
        let step = ReductionStep { alpha, d, side };
        check(&step)?;
        let e = elementary(&step, true);
        let next = cur.compose(&e);
        if next.degree_sum() >= cur.degree_sum() {
            return Err(not_auto("degree did not drop"));
        }
        cur = next;
        out.push((e, step));
    }
}

/// `(x, y ∓ αx^d)` or `(x ∓ αy^d, y)`; `subtract` selects the sign.
fn elementary<C: Field>(step: &ReductionStep<C>, subtract: bool) -> Auto<C> {
    let c = if subtract { step.alpha.neg() } else { step.alpha.clone() };
    match step.side {
        Side::Second => Auto::y_shear(BiPoly::monomial(c, step.d, 0)),
        Side::First => Auto::x_shear(BiPoly::monomial(c, 0, step.d)),
    }
}

/// Raw word `[remainder, E_k^-1, ..., E_1^-1]` with `(x, y + αx^d)` written
/// as `τ (x + αy^d, y) τ`.
fn raw_word<C: Field>(rem: Auto<C>, es: &[(Auto<C>, ReductionStep<C>)]) -> Word<Auto<C>> {
    let ctx = rem.ring_ctx().clone();
    let tau = Auto::swap(&ctx);
    let mut letters = vec![Letter::new(Tag::A, rem)];
    for (_, step) in es.iter().rev() {
        let shear = Auto::x_shear(BiPoly::monomial(step.alpha.clone(), 0, step.d));
        match step.side {
            Side::First => letters.push(Letter::new(Tag::B, shear)),
            Side::Second => {
                letters.push(Letter::new(Tag::A, tau.clone()));
                letters.push(Letter::new(Tag::B, shear));
                letters.push(Letter::new(Tag::A, tau.clone()));
            }
        }
    }
    Word::new(letters)
}

/// Reduced `(Aff, BA)`-word for an automorphism of `K[x,y]`, with the trace
/// of reduction steps. `word.eval()` reproduces `φ` exactly.
pub fn decompose<C: Field>(phi: &Auto<C>) -> Result<Decomposition<C>> {
    let (rem, es) = reduce_loop(phi, |_| Ok(()))?;
    finish(rem, es)
}

fn finish<C: Field>(rem: Auto<C>, es: Trace<C>) -> Result<Decomposition<C>> {
    let g = AffBa::<C>::new(rem.ring_ctx().clone());
    let word = normalize(&raw_word(rem, &es), &g);
    Ok(Decomposition { word, steps: es.into_iter().map(|(_, s)| s).collect() })
}

/// Decomposition of a differentially affine automorphism in which every step
/// has `d = 1` or `p | d`, so every elementary letter is itself
/// differentially affine.
pub fn decompose_diff_affine<C: Field>(phi: &Auto<C>) -> Result<Decomposition<C>> {
    let p = C::characteristic(phi.ring_ctx());
    if p == 0 {
        return Err(Error::NeedsPositiveCharacteristic);
    }
    if !phi.is_diff_affine() {
        return Err(Error::NotDiffAffine);
    }
    let (rem, es) = reduce_loop(phi, |s| {
        if s.d > 1 && !(s.d as u64).is_multiple_of(p) {
            Err(Error::PDivisibility { d: s.d as u64, p })
        } else {
            Ok(())
        }
    })?;
    finish(rem, es)
}

/// Factorization of an additive automorphism into elementary additive
/// letters `(x + αy^(p^k), y)` / `(x, y + αx^(p^k))` followed by a linear
/// letter (dropped when it is the identity). Letters are not merged.
pub fn decompose_additive<C: Field>(phi: &Auto<C>) -> Result<AdditiveFactorization<C>> {
    let p = C::characteristic(phi.ring_ctx());
    if p == 0 {
        return Err(Error::NeedsPositiveCharacteristic);
    }
    if !phi.classify().additive {
        return Err(Error::NotAdditive);
    }
    let (rem, es) = reduce_loop(phi, |_| Ok(()))?;
    let mut letters = Vec::with_capacity(es.len() + 1);
    if !rem.is_identity() {
        letters.push(rem);
    }
    for (_, step) in es.iter().rev() {
        letters.push(elementary(step, false));
    }
    Ok(AdditiveFactorization { letters, steps: es.into_iter().map(|(_, s)| s).collect() })
}

/// `ℓ(φ)`, the length of any reduced decomposition.
pub fn length_of<C: Field>(phi: &Auto<C>) -> Result<usize> {
    Ok(decompose(phi)?.length())
}
