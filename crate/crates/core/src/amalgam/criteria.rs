//! Membership tests for `⟨H, T⟩` where `T = T_2(R)`, `R = F[t]`, and
//! `H = A^I ∩ Aut_R` for a p-stable `I`.
//!
//! Write `B = BA_2(R)` and `ℋ = A^I`. For a triangular letter
//! `θ = (θ_u x + Θ(y), θ_v y + θ_w)` over `K` and `N = {k >= 2 : k ∉ I}`:
//!
//! * `θ ∈ B(ℬ∩ℋ)` iff `Θ_k / θ_u ∈ R` for every `k ∈ N`; then
//!   `b = (x + Σ_{k∈N} (Θ_k/θ_u) y^k, y)` is a certificate with
//!   `b^-1 θ ∈ ℬ∩ℋ`.
//! * `θ ∈ (ℬ∩ℋ)B` iff `θ^-1 ∈ B(ℬ∩ℋ)`.
//! * `(ℬ∩ℋ)B(ℬ∩ℋ)` contains every triangular letter, and affine letters
//!   always lie in `ℋ`.

use crate::amalgam::{is_reduced, normalize, star, AffBa, Amalgam, Tag, Word};
use crate::automorphism::Auto;
use crate::bipoly::BiPoly;
use crate::coefficients::{Field, RatFunc, Ring};
use crate::error::{Error, Result};
use crate::pstable::PStableSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Position {
    First,
    Interior,
    Last,
    Only,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetterVerdict {
    pub index: usize,
    pub tag: Tag,
    pub position: Position,
    /// The coset tested, or `None` when the criterion places no condition.
    pub coset: Option<&'static str>,
    pub passes: bool,
}

fn p_of<F: Field>(theta: &Auto<RatFunc<F>>) -> u64 {
    RatFunc::<F>::characteristic(theta.ring_ctx())
}

/// Certificate `b ∈ BA_2(R)` with `b^-1 θ ∈ ℬ∩A^I`, if `θ ∈ B(ℬ∩A^I)`.
pub fn in_left_coset<F: Field>(theta: &Auto<RatFunc<F>>, set: &PStableSet) -> Result<Option<Auto<RatFunc<F>>>> {
    let parts = theta.triangular_parts().ok_or(Error::NotTriangular)?;
    let p = p_of(theta);
    let ctx = theta.ring_ctx().clone();
    let ui = parts.u.inv().expect("unit");
    let mut s = Vec::with_capacity(parts.p.len());
    for (k, c) in parts.p.iter().enumerate() {
        if k >= 2 && !set.contains(k as u64, p) {
            let q = c.mul(&ui);
            if !q.is_polynomial() {
                return Ok(None);
            }
            s.push(q);
        } else {
            s.push(RatFunc::zero(&ctx));
        }
    }
    Ok(Some(Auto::x_shear(BiPoly::from_y_coeffs(&ctx, s))))
}

/// `θ ∈ (ℬ∩A^I) BA_2(R)`.
pub fn in_right_coset<F: Field>(theta: &Auto<RatFunc<F>>, set: &PStableSet) -> Result<bool> {
    let inv = theta.triangular_inverse().ok_or(Error::NotTriangular)?;
    Ok(in_left_coset(&inv, set)?.is_some())
}

/// Checks every letter of a reduced word against the necessary conditions
/// for membership in `⟨A^I ∩ Aut_R, T_2(R)⟩`. A failing letter proves the
/// element lies outside; passing everywhere proves nothing in general.
pub fn criterion_letters<F: Field>(word: &Word<Auto<RatFunc<F>>>, set: &PStableSet) -> Result<Vec<LetterVerdict>> {
    let n = word.len();
    word.letters
        .iter()
        .enumerate()
        .map(|(index, l)| {
            let position = match (index, n) {
                (_, 1) => Position::Only,
                (0, _) => Position::First,
                (i, _) if i + 1 == n => Position::Last,
                _ => Position::Interior,
            };
            let (coset, passes) = match (l.tag, position) {
                (Tag::A, _) => (Some("A(A∩H)"), true),
                (Tag::B, Position::First) => (Some("B(ℬ∩H)"), in_left_coset(&l.elem, set)?.is_some()),
                (Tag::B, Position::Last) => (Some("(ℬ∩H)B"), in_right_coset(&l.elem, set)?),
                (Tag::B, Position::Interior) => (Some("(ℬ∩H)B(ℬ∩H)"), true),
                (Tag::B, Position::Only) => (None, true),
            };
            Ok(LetterVerdict { index, tag: l.tag, position, coset, passes })
        })
        .collect()
}

/// Exact test for `h ∈ BA_2(R) · A^I · BA_2(R)` when `h` has length 3 and
/// reduced form `θ_1 α θ_3` with `θ_i` triangular.
pub fn length3_membership<F: Field>(h: &Auto<RatFunc<F>>, set: &PStableSet) -> Result<bool> {
    let word = crate::vdk::decompose(h)?.word;
    if word.tags() != [Tag::B, Tag::A, Tag::B] {
        return Err(Error::NotLengthThreeBab);
    }
    Ok(in_left_coset(&word.letters[0].elem, set)?.is_some() && in_right_coset(&word.letters[2].elem, set)?)
}

/// Assembles `D_1 * ⋯ * D_n`. Whenever a boundary product falls into
/// `A∩B` it is shifted into the next block, which is what minimality of
/// the blocks guarantees; the folded word is then returned as is.
pub fn assemble_blocks<C: Ring>(blocks: &[Word<Auto<C>>], g: &AffBa<C>) -> Word<Auto<C>> {
    let mut acc: Word<Auto<C>> = Word::default();
    for block in blocks {
        let merged = star(&acc, block, g);
        acc = if merged.letters.iter().any(|l| g.in_ab(&l.elem)) {
            normalize(&merged, g)
        } else {
            merged
        };
    }
    acc
}

/// `is_reduced` for `Aut_K K[x,y]`.
pub fn is_reduced_aut<C: Ring>(word: &Word<Auto<C>>) -> bool {
    match word.head() {
        Some(l) => is_reduced(word, &AffBa::<C>::new(l.elem.ring_ctx().clone())),
        None => false,
    }
}
