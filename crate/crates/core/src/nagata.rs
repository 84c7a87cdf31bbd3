//! Nagata-type automorphisms
//! `σ(a,P,Q) = β_1 τ β_2 = (a^-1 (Q(ax + P(y)) - y), ax + P(y))` of `R[x,y]`,
//! `R = F[t]`, defined whenever `P(Q(y)) ≡ y mod a R[y]`.

use crate::amalgam::{criterion_letters, is_reduced_aut, Letter, LetterVerdict, Tag, Word};
use crate::automorphism::Auto;
use crate::bipoly::{BiPoly, Var};
use crate::coefficients::{Field, RatFunc, Ring, UniPoly};
use crate::error::{Error, Result};
use crate::pstable::{ai_order, Order, PStableSet};

type Poly<F> = BiPoly<UniPoly<F>>;

/// `(a, P, Q)` with `P`, `Q` polynomials in `y` over `F[t]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaParams<F: Field> {
    pub a: UniPoly<F>,
    pub p: Poly<F>,
    pub q: Poly<F>,
}

/// `σ` over `R` together with its word `(β_1, τ, β_2)` over `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sigma<F: Field> {
    pub auto: Auto<UniPoly<F>>,
    pub word: Word<Auto<RatFunc<F>>>,
}

impl<F: Field> SigmaParams<F> {
    /// Checks that `P`, `Q` involve only `y`, that `a ≠ 0`, and the defining
    /// congruence.
    pub fn new(a: UniPoly<F>, p: Poly<F>, q: Poly<F>) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroModulus);
        }
        if !p.is_in_y_only() || !q.is_in_y_only() {
            return Err(Error::NotAutomorphism("P and Q must be polynomials in y".into()));
        }
        let s = SigmaParams { a, p, q };
        if !s.congruence_holds() {
            return Err(Error::CongruenceFails);
        }
        Ok(s)
    }

    fn ctx(&self) -> F::Ctx {
        self.a.ctx()
    }

    /// `P(Q(y)) ≡ y mod a R[y]`.
    pub fn congruence_holds(&self) -> bool {
        if self.a.is_unit() {
            return true;
        }
        let ctx = self.ctx();
        let pq = self.p.substitute(&BiPoly::x(&ctx), &self.q);
        pq.reduce_mod(&self.a).is_ok_and(|r| r == BiPoly::y(&ctx))
    }
}

/// Builds `σ(a,P,Q)` over `R` and its three-letter word over `K`.
pub fn make_sigma<F: Field>(s: &SigmaParams<F>) -> Result<Sigma<F>> {
    if !s.congruence_holds() {
        return Err(Error::CongruenceFails);
    }
    let ctx = s.ctx();
    let x = BiPoly::<UniPoly<F>>::x(&ctx);
    let y = BiPoly::<UniPoly<F>>::y(&ctx);
    let f2 = &x.scale(&s.a) + &s.p;
    let num = &s.q.substitute(&x, &f2) - &y;
    let f1 = num.try_map_coeffs(&ctx, |c| c.divide_exact(&s.a).ok_or(Error::IntegralityFailed))?;
    let auto = Auto::new(f1, f2.clone());

    let ak = RatFunc::from_poly(s.a.clone());
    let a_inv = ak.inv().ok_or(Error::ZeroModulus)?;
    let beta1 = Auto::new(f2.to_fraction_field(), BiPoly::y(&ctx));
    let beta2 = Auto::new((&s.q.to_fraction_field() - &BiPoly::x(&ctx)).scale(&a_inv), BiPoly::y(&ctx));
    let word = Word::new(vec![
        Letter::new(Tag::B, beta1),
        Letter::new(Tag::A, Auto::swap(&ctx)),
        Letter::new(Tag::B, beta2),
    ]);
    Ok(Sigma { auto, word })
}

/// `σ ∈ T_2(R)` iff `P mod a R[y]` has degree at most one in `y`.
///
/// The congruence forces the linear coefficient of the residue to be a
/// unit modulo `a`, which is all that is needed: with `P ≡ by + c` and
/// `b b' ≡ 1 mod a`, `σ(a, by+c, b'(y-c))` is affine over `R`.
pub fn sigma_is_tame<F: Field>(s: &SigmaParams<F>) -> Result<bool> {
    if s.a.is_unit() {
        return Ok(true);
    }
    let r = s.p.reduce_mod(&s.a)?;
    Ok(r.total_degree() <= crate::bipoly::Degree::Finite(1))
}

/// `σ` is differentially affine iff `P'` and `Q'` are free of `y`. The
/// Jacobian determinant of `σ` is always `1`.
pub fn sigma_is_diff_affine<F: Field>(s: &SigmaParams<F>) -> bool {
    let dp = s.p.partial_derivative(Var::Y);
    let dq = s.q.partial_derivative(Var::Y);
    dp.is_constant() && dq.is_constant()
}

/// `σ ∈ ⟨H, T⟩` with `H = Aff^d_2(K) ∩ Aut_R` iff `P' mod a R[y]` is free
/// of `y` (the constant is then a unit modulo `a`).
pub fn sigma_in_ht<F: Field>(s: &SigmaParams<F>) -> Result<bool> {
    if s.a.is_unit() {
        return Ok(true);
    }
    Ok(s.p.partial_derivative(Var::Y).reduce_mod(&s.a)?.is_constant())
}

/// Canonical representative of the double class: `P`, `Q` reduced mod `a`.
pub fn double_coset_reps<F: Field>(s: &SigmaParams<F>) -> Result<SigmaParams<F>> {
    Ok(SigmaParams { a: s.a.clone(), p: s.p.reduce_mod(&s.a)?, q: s.q.reduce_mod(&s.a)? })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// A letter of the reduced word fails the coset criterion.
    NotIn,
    /// Every letter passes; the criterion is only necessary.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness<F: Field> {
    /// The exponent `n ∈ J \ I`.
    pub n: u64,
    pub g: Auto<UniPoly<F>>,
    pub t: Auto<UniPoly<F>>,
    /// `g t g^-1`.
    pub conjugate: Auto<UniPoly<F>>,
    /// `β_1 τ β_2 τ β_2^-1 τ^-1 β_1^-1`.
    pub word: Word<Auto<RatFunc<F>>>,
    pub reduced: bool,
    pub letters: Vec<LetterVerdict>,
    pub verdict: Verdict,
}

/// For p-stable `I ⊊ J` and a non-unit `a`, builds `g = σ(a², y + ayⁿ,
/// y - ayⁿ) ∈ A^J` with `n ∈ J \ I` and shows `g τ g^-1 ∉ ⟨A^I ∩ Aut_R, T⟩`:
/// the head of its reduced word is not in `B(ℬ ∩ A^I)`.
pub fn nonnormality_witness<F: Field>(
    i: &PStableSet,
    j: &PStableSet,
    a: &UniPoly<F>,
    bound: u64,
) -> Result<Witness<F>> {
    let ctx = a.ctx();
    let p = UniPoly::<F>::characteristic(&ctx);
    let n = match (ai_order(i, j, p, bound)?, ai_order(j, i, p, bound)?) {
        (Order::Subset { .. }, Order::NotSubset(n)) => n,
        _ => return Err(Error::NotProperSubset),
    };
    if a.is_zero() || a.is_unit() {
        return Err(Error::UnitModulus);
    }
    let n32 = u32::try_from(n).map_err(|_| Error::NotProperSubset)?;
    let y = BiPoly::<UniPoly<F>>::y(&ctx);
    let ayn = BiPoly::monomial(a.clone(), 0, n32);
    let params = SigmaParams::new(a.mul(a), &y + &ayn, &y - &ayn)?;
    let sigma = make_sigma(&params)?;
    let tau = Auto::swap(&ctx);
    let g = sigma.auto;
    let g_inv = g.invert()?;
    let conjugate = g.compose(&tau).compose(&g_inv);

    let tau_k = Auto::swap(&ctx);
    let mut letters = sigma.word.letters.clone();
    letters.push(Letter::new(Tag::A, tau_k));
    letters.extend(sigma.word.inverse().letters);
    let word = Word::new(letters);
    let reduced = is_reduced_aut(&word);
    let verdicts = criterion_letters(&word, i)?;
    let verdict = if reduced && verdicts.iter().any(|v| !v.passes) {
        Verdict::NotIn
    } else {
        Verdict::Inconclusive
    };
    Ok(Witness { n, g, t: tau, conjugate, word, reduced, letters: verdicts, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{Characteristic, Fp};

    fn ch(p: u64) -> Characteristic {
        Characteristic::new(p).unwrap()
    }

    fn tp(p: u64, c: &[i64]) -> UniPoly<Fp> {
        UniPoly::from_ints(c, ch(p))
    }

    /// `Σ c_j y^j` with `c_j` given as coefficient lists in `t`.
    fn ypoly(p: u64, cs: &[&[i64]]) -> Poly<Fp> {
        BiPoly::from_y_coeffs(&ch(p), cs.iter().map(|c| tp(p, c)))
    }

    fn standard(p: u64) -> SigmaParams<Fp> {
        SigmaParams::new(tp(p, &[0, 0, 1]), ypoly(p, &[&[], &[1], &[0, 1]]), ypoly(p, &[&[], &[1], &[0, -1]]))
            .unwrap()
    }

    #[test]
    fn standard_sigma_over_f2_and_f3() {
        let s2 = standard(2);
        assert!(!sigma_is_tame(&s2).unwrap());
        assert!(sigma_is_diff_affine(&s2));
        assert!(sigma_in_ht(&s2).unwrap());
        let s3 = standard(3);
        assert!(!sigma_is_tame(&s3).unwrap());
        assert!(!sigma_is_diff_affine(&s3));
        assert!(!sigma_in_ht(&s3).unwrap());
        for s in [s2, s3] {
            let sig = make_sigma(&s).unwrap();
            let ctx = s.a.ctx();
            assert_eq!(sig.word.eval(&ctx), sig.auto.to_fraction_field());
            assert_eq!(crate::vdk::length_of(&sig.auto.to_fraction_field()).unwrap(), 3);
        }
    }

    #[test]
    fn sigma_matches_formula_and_jacobian() {
        let s = standard(3);
        let sig = make_sigma(&s).unwrap();
        let ctx = s.a.ctx();
        let x = BiPoly::x(&ctx);
        let f2 = &x.scale(&s.a) + &s.p;
        assert_eq!(sig.auto.f2, f2);
        let j = sig.auto.jacobian();
        let dq = s.q.partial_derivative(Var::Y).substitute(&x, &f2);
        assert_eq!(j.entries[0][0], dq);
        assert_eq!(j.entries[1][0], BiPoly::constant(s.a.clone()));
        assert_eq!(j.entries[1][1], s.p.partial_derivative(Var::Y));
        assert!(j.determinant().as_constant().is_some_and(|d| d.is_one()));
    }

    #[test]
    fn unit_a_and_congruence_failure() {
        let p = 5;
        let y = ypoly(p, &[&[], &[1]]);
        let s = SigmaParams::new(tp(p, &[1]), y.clone(), y.clone()).unwrap();
        assert!(sigma_is_tame(&s).unwrap());
        let sig = make_sigma(&s).unwrap();
        assert!(sig.auto.is_affine());
        let bad = SigmaParams::new(tp(p, &[0, 1]), ypoly(p, &[&[], &[1], &[1]]), y);
        assert_eq!(bad, Err(Error::CongruenceFails));
    }

    #[test]
    fn tame_residues() {
        let p = 3;
        let a = tp(p, &[0, 0, 1]);
        let pp = ypoly(p, &[&[], &[1], &[], &[], &[], &[0, 0, 1]]);
        let s = SigmaParams::new(a, pp, ypoly(p, &[&[], &[1]])).unwrap();
        assert!(sigma_is_tame(&s).unwrap());
        let canon = double_coset_reps(&s).unwrap();
        assert_eq!(canon.p, ypoly(p, &[&[], &[1]]));
        assert_eq!(double_coset_reps(&canon).unwrap(), canon);
    }

    #[test]
    fn linear_residue_with_nonconstant_coefficient_is_tame() {
        let p = 3;
        let s = SigmaParams::new(tp(p, &[0, 0, 1]), ypoly(p, &[&[], &[1, 1]]), ypoly(p, &[&[], &[1, -1]])).unwrap();
        assert!(sigma_is_tame(&s).unwrap());
        assert!(make_sigma(&s).unwrap().auto.is_affine());
    }

    #[test]
    fn witness_for_powers_in_multiples() {
        let w = nonnormality_witness(&PStableSet::PPowers, &PStableSet::PMultiples, &tp(3, &[0, 1]), 100).unwrap();
        assert_eq!(w.n, 6);
        assert_eq!(w.word.len(), 7);
        assert!(w.reduced);
        assert_eq!(w.verdict, Verdict::NotIn);
        assert!(!w.letters[0].passes);
        let ctx = ch(3);
        assert_eq!(w.word.eval(&ctx), w.conjugate.to_fraction_field());
        assert!(matches!(
            nonnormality_witness(&PStableSet::PMultiples, &PStableSet::PPowers, &tp(3, &[0, 1]), 100),
            Err(Error::NotProperSubset)
        ));
        assert!(matches!(
            nonnormality_witness(&PStableSet::Empty, &PStableSet::AllGe2, &tp(2, &[1]), 100),
            Err(Error::UnitModulus)
        ));
    }
}
