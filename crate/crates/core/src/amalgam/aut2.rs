use crate::automorphism::Auto;
use crate::coefficients::Ring;
use crate::pstable::split_triangular;

use super::{word_eval, word_inverse, Amalgam, Word};

/// `Aut(C[x,y]) = Aff_2(C) *_∩ BA_2(C)` over a field `C`, or the tame
/// subgroup `T_2(C)` over a domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffBa<C: Ring> {
    pub ctx: C::Ctx,
}

impl<C: Ring> AffBa<C> {
    pub fn new(ctx: C::Ctx) -> Self {
        AffBa { ctx }
    }
}

impl<C: Ring> Amalgam for AffBa<C> {
    type Elem = Auto<C>;

    fn identity(&self) -> Auto<C> {
        Auto::identity(&self.ctx)
    }

    fn mul(&self, a: &Auto<C>, b: &Auto<C>) -> Auto<C> {
        a.compose(b)
    }

    fn inv(&self, g: &Auto<C>) -> Option<Auto<C>> {
        g.letter_inverse()
    }

    fn in_a(&self, g: &Auto<C>) -> bool {
        g.is_affine()
    }

    fn in_b(&self, g: &Auto<C>) -> bool {
        g.is_triangular()
    }

    /// A triangular letter splits as `(x + P_{>=2}(y)/u, y)` times its
    /// affine triangular part.
    fn intersect_factor(&self, g: &Auto<C>) -> (Auto<C>, Auto<C>) {
        match g.triangular_parts() {
            Some(parts) if !g.is_affine() => split_triangular(&parts),
            _ => (g.clone(), self.identity()),
        }
    }
}

impl<C: Ring> Word<Auto<C>> {
    pub fn eval(&self, ctx: &C::Ctx) -> Auto<C> {
        word_eval(self, &AffBa::<C>::new(ctx.clone()))
    }

    /// Reversed word of letter inverses.
    ///
    /// # Panics
    /// If a letter is neither affine nor triangular.
    pub fn inverse(&self) -> Self {
        let ctx = match self.head() {
            Some(l) => l.elem.ring_ctx().clone(),
            None => return Word::default(),
        };
        word_inverse(self, &AffBa::<C>::new(ctx)).expect("letters are invertible")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amalgam::{is_reduced, star, Letter, Tag};
    use crate::bipoly::BiPoly;
    use crate::coefficients::{Characteristic, Fp, RatFunc};

    type K = RatFunc<Fp>;

    fn ctx() -> Characteristic {
        Characteristic::new(5).unwrap()
    }

    fn shear(deg: u32) -> Auto<K> {
        Auto::x_shear(BiPoly::monomial(K::one(&ctx()), 0, deg))
    }

    #[test]
    fn reducedness_examples() {
        let g = AffBa::<K>::new(ctx());
        let tau = Letter::new(Tag::A, Auto::swap(&ctx()));
        let b2 = Letter::new(Tag::B, shear(2));
        let b3 = Letter::new(Tag::B, shear(3));
        assert!(is_reduced(&Word::new(vec![tau.clone()]), &g));
        assert!(!is_reduced(&Word::new(vec![b2.clone(), b3]), &g));
        assert!(is_reduced(&Word::new(vec![b2.clone(), tau.clone(), b2]), &g));
        let collapsed = star(&Word::new(vec![tau.clone()]), &Word::new(vec![tau]), &g);
        assert_eq!(collapsed.len(), 1);
        assert!(collapsed.letters[0].elem.is_identity());
    }

    #[test]
    fn intersect_factor_round_trips() {
        let g = AffBa::<K>::new(ctx());
        let c = |n: i64| K::from_int(&ctx(), n);
        let beta = Auto::new(
            BiPoly::from_terms(&ctx(), [(c(2), 1, 0), (c(1), 0, 1), (c(1), 0, 4), (c(1), 0, 0)]),
            BiPoly::from_terms(&ctx(), [(c(3), 0, 1), (c(1), 0, 0)]),
        );
        let (r, a) = g.intersect_factor(&beta);
        assert!(g.in_ab(&a));
        assert_eq!(r.compose(&a), beta);
    }
}
