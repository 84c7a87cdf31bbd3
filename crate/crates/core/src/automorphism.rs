//! Polynomial endomorphisms of `C[x,y]`, stored as the pair of images of
//! `x` and `y`.
//!
//! Composition follows the multiplicative convention used for words:
//! `phi.compose(psi)` is the product `phi psi`, whose components are
//! `psi_i(phi_1, phi_2)`. With this convention the product
//! `(ax+P(y), y) (y, x) (a^-1(Q(y)-x), y)` is the pair
//! `(a^-1(Q(ax+P(y)) - y), ax+P(y))`.

use std::fmt;

use crate::bipoly::{BiPoly, Degree, Var};
use crate::coefficients::{Field, RatFunc, Ring, UniPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Auto<C: Ring> {
    pub f1: BiPoly<C>,
    pub f2: BiPoly<C>,
}

/// Linear part `[[a, b], [c, d]]` and translation `[e, f]` of an affine map
/// `(a x + b y + e, c x + d y + f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineParts<C: Ring> {
    pub linear: [[C; 2]; 2],
    pub translation: [C; 2],
}

/// `(u x + P(y), v y + w)`; `p` holds the coefficients of `P`, lowest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularParts<C: Ring> {
    pub u: C,
    pub p: Vec<C>,
    pub v: C,
    pub w: C,
}

impl<C: Ring> TriangularParts<C> {
    pub fn p_coeff(&self, k: usize) -> C {
        self.p.get(k).cloned().unwrap_or_else(|| C::zero(&self.u.ctx()))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ClassFlags {
    pub translation: bool,
    pub linear: bool,
    pub affine: bool,
    pub elementary: bool,
    pub triangular: bool,
    pub additive: bool,
    pub geom_affine: bool,
    pub diff_affine: bool,
}

impl ClassFlags {
    /// The inclusion chain between the classes; every automorphism must
    /// satisfy it.
    pub fn implications_hold(&self) -> bool {
        let imp = |a: bool, b: bool| !a || b;
        imp(self.translation, self.affine)
            && imp(self.linear, self.affine && self.additive)
            && imp(self.affine, self.geom_affine)
            && imp(self.additive, self.geom_affine)
            && imp(self.geom_affine, self.diff_affine)
    }

    pub fn as_pairs(&self) -> [(&'static str, bool); 8] {
        [
            ("additive", self.additive),
            ("affine", self.affine),
            ("diff_affine", self.diff_affine),
            ("elementary", self.elementary),
            ("geom_affine", self.geom_affine),
            ("linear", self.linear),
            ("translation", self.translation),
            ("triangular", self.triangular),
        ]
    }
}

/// `J[i][j] = d f_(i+1) / d x_(j+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobianMatrix<C: Ring> {
    pub entries: [[BiPoly<C>; 2]; 2],
}

impl<C: Ring> JacobianMatrix<C> {
    pub fn determinant(&self) -> BiPoly<C> {
        let [[a, b], [c, d]] = &self.entries;
        &(a * d) - &(b * c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let e = |i: usize, j: usize| {
            &(&self.entries[i][0] * &other.entries[0][j]) + &(&self.entries[i][1] * &other.entries[1][j])
        };
        JacobianMatrix { entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]] }
    }

    /// Applies `phi` to every entry.
    pub fn apply(&self, phi: &Auto<C>) -> Self {
        let e = |i: usize, j: usize| phi.apply(&self.entries[i][j]);
        JacobianMatrix { entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]] }
    }

    /// Entries as constants, if none involves `x` or `y`.
    pub fn constant_entries(&self) -> Option<[[C; 2]; 2]> {
        let c = |i: usize, j: usize| self.entries[i][j].as_constant();
        Some([[c(0, 0)?, c(0, 1)?], [c(1, 0)?, c(1, 1)?]])
    }
}

impl<C: Ring> Auto<C> {
    pub fn new(f1: BiPoly<C>, f2: BiPoly<C>) -> Self {
        debug_assert_eq!(f1.ring_ctx(), f2.ring_ctx());
        Auto { f1, f2 }
    }

    pub fn identity(ctx: &C::Ctx) -> Self {
        Auto::new(BiPoly::x(ctx), BiPoly::y(ctx))
    }

    /// The swap `(y, x)`.
    pub fn swap(ctx: &C::Ctx) -> Self {
        Auto::new(BiPoly::y(ctx), BiPoly::x(ctx))
    }

    /// `(u x + P(y), v y + w)` from its parts.
    pub fn triangular(parts: &TriangularParts<C>) -> Self {
        let ctx = parts.u.ctx();
        let f1 = &BiPoly::monomial(parts.u.clone(), 1, 0) + &BiPoly::from_y_coeffs(&ctx, parts.p.clone());
        let f2 = &BiPoly::monomial(parts.v.clone(), 0, 1) + &BiPoly::constant(parts.w.clone());
        Auto::new(f1, f2)
    }

    /// `(x + P(y), y)`.
    pub fn x_shear(p: BiPoly<C>) -> Self {
        let ctx = p.ring_ctx().clone();
        Auto::new(&BiPoly::x(&ctx) + &p, BiPoly::y(&ctx))
    }

    /// `(x, y + Q(x))`.
    pub fn y_shear(q: BiPoly<C>) -> Self {
        let ctx = q.ring_ctx().clone();
        Auto::new(BiPoly::x(&ctx), &BiPoly::y(&ctx) + &q)
    }

    pub fn affine(parts: &AffineParts<C>) -> Self {
        let [[a, b], [c, d]] = &parts.linear;
        let [e, f] = &parts.translation;
        let ctx = a.ctx();
        let comp = |a: &C, b: &C, e: &C| {
            BiPoly::from_terms(&ctx, [(a.clone(), 1, 0), (b.clone(), 0, 1), (e.clone(), 0, 0)])
        };
        Auto::new(comp(a, b, e), comp(c, d, f))
    }

    pub fn ring_ctx(&self) -> &C::Ctx {
        self.f1.ring_ctx()
    }

    pub fn components(&self) -> [&BiPoly<C>; 2] {
        [&self.f1, &self.f2]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.ring_ctx())
    }

    /// `phi(g) = g(f1, f2)`.
    pub fn apply(&self, g: &BiPoly<C>) -> BiPoly<C> {
        g.substitute(&self.f1, &self.f2)
    }

    /// The product `self other`: first `self`, then `other` on coordinates.
    pub fn compose(&self, other: &Self) -> Self {
        Auto::new(self.apply(&other.f1), self.apply(&other.f2))
    }

    pub fn jacobian(&self) -> JacobianMatrix<C> {
        let d = |f: &BiPoly<C>, v| f.partial_derivative(v);
        JacobianMatrix {
            entries: [
                [d(&self.f1, Var::X), d(&self.f1, Var::Y)],
                [d(&self.f2, Var::X), d(&self.f2, Var::Y)],
            ],
        }
    }

    /// `deg f1 + deg f2`, with zero components counting as degree 0.
    pub fn degree_sum(&self) -> u32 {
        self.components()
            .iter()
            .map(|f| f.total_degree().finite().unwrap_or(0))
            .sum()
    }

    /// Linear and constant parts when both components have degree at most 1.
    /// Does not check invertibility.
    pub fn affine_parts(&self) -> Option<AffineParts<C>> {
        let low = |f: &BiPoly<C>| f.total_degree() <= Degree::Finite(1);
        if !low(&self.f1) || !low(&self.f2) {
            return None;
        }
        Some(AffineParts {
            linear: [
                [self.f1.coeff(1, 0), self.f1.coeff(0, 1)],
                [self.f2.coeff(1, 0), self.f2.coeff(0, 1)],
            ],
            translation: [self.f1.constant_term(), self.f2.constant_term()],
        })
    }

    /// Parts of `(u x + P(y), v y + w)` with `u`, `v` units.
    pub fn triangular_parts(&self) -> Option<TriangularParts<C>> {
        let x_free = self.f1.without_x_linear();
        if !x_free.is_in_y_only() || !self.f2.is_in_y_only() {
            return None;
        }
        if self.f2.total_degree() > Degree::Finite(1) {
            return None;
        }
        let u = self.f1.coeff(1, 0);
        let v = self.f2.coeff(0, 1);
        if !u.is_unit() || !v.is_unit() {
            return None;
        }
        Some(TriangularParts {
            u,
            p: x_free.y_coeffs().expect("checked"),
            v,
            w: self.f2.constant_term(),
        })
    }

    pub fn is_affine(&self) -> bool {
        self.affine_parts().is_some_and(|a| det2(&a.linear).is_unit())
    }

    pub fn is_triangular(&self) -> bool {
        self.triangular_parts().is_some()
    }

    /// `(a x + P(y), y)` or `(x, b y + Q(x))` with `a`, `b` units.
    pub fn is_elementary(&self) -> bool {
        let ctx = self.ring_ctx().clone();
        let x = BiPoly::x(&ctx);
        let y = BiPoly::y(&ctx);
        let first = self.f2 == y && {
            let rest = self.f1.without_x_linear();
            rest.is_in_y_only() && self.f1.coeff(1, 0).is_unit()
        };
        let second = self.f1 == x && {
            let rest = self.f2.without_y_linear();
            rest.terms().all(|(m, _)| m.y == 0) && self.f2.coeff(0, 1).is_unit()
        };
        first || second
    }

    /// Entries of the Jacobian are constants and the determinant is a unit.
    pub fn is_diff_affine(&self) -> bool {
        self.jacobian()
            .constant_entries()
            .is_some_and(|m| det2(&m).is_unit())
    }

    pub fn classify(&self) -> ClassFlags {
        let affine_parts = self.affine_parts();
        let affine = self.is_affine();
        let ctx = self.ring_ctx().clone();
        let zero = C::zero(&ctx);
        let one = C::one(&ctx);
        let translation = affine
            && affine_parts.as_ref().is_some_and(|a| {
                a.linear == [[one.clone(), zero.clone()], [zero.clone(), one.clone()]]
            });
        let linear = affine
            && affine_parts
                .as_ref()
                .is_some_and(|a| a.translation.iter().all(|c| c.is_zero()));
        let diff_affine = self.is_diff_affine();
        let additive = diff_affine && self.f1.is_additive() && self.f2.is_additive();
        let geom_affine = diff_affine
            && self.f1.without_constant().is_additive()
            && self.f2.without_constant().is_additive();
        ClassFlags {
            translation,
            linear,
            affine,
            elementary: self.is_elementary(),
            triangular: self.is_triangular(),
            additive,
            geom_affine,
            diff_affine,
        }
    }

    /// Inverse of an affine automorphism; `None` if not affine or the linear
    /// part is not invertible over the ring.
    pub fn affine_inverse(&self) -> Option<Self> {
        let parts = self.affine_parts()?;
        let [[a, b], [c, d]] = &parts.linear;
        let di = det2(&parts.linear).unit_inverse()?;
        let inv = [[d.mul(&di), b.neg().mul(&di)], [c.neg().mul(&di), a.mul(&di)]];
        let [e, f] = &parts.translation;
        let shift = |row: &[C; 2]| row[0].mul(e).add(&row[1].mul(f)).neg();
        let translation = [shift(&inv[0]), shift(&inv[1])];
        Some(Auto::affine(&AffineParts { linear: inv, translation }))
    }

    /// Inverse of `(u x + P(y), v y + w)`: `y -> v^-1 (y - w)`,
    /// `x -> u^-1 (x - P(v^-1 (y - w)))`.
    pub fn triangular_inverse(&self) -> Option<Self> {
        let parts = self.triangular_parts()?;
        let ctx = self.ring_ctx().clone();
        let vi = parts.v.unit_inverse()?;
        let ui = parts.u.unit_inverse()?;
        let g2 = (&BiPoly::y(&ctx) - &BiPoly::constant(parts.w.clone())).scale(&vi);
        let p = BiPoly::from_y_coeffs(&ctx, parts.p.clone());
        let p_sub = p.substitute(&BiPoly::x(&ctx), &g2);
        let g1 = (&BiPoly::x(&ctx) - &p_sub).scale(&ui);
        Some(Auto::new(g1, g2))
    }

    /// Inverse of an affine or triangular element.
    pub fn letter_inverse(&self) -> Option<Self> {
        self.affine_inverse().or_else(|| self.triangular_inverse())
    }

    pub fn map_coeffs<D: Ring>(&self, ctx: &D::Ctx, f: impl Fn(&C) -> D) -> Auto<D> {
        Auto::new(self.f1.map_coeffs(ctx, &f), self.f2.map_coeffs(ctx, &f))
    }
}

impl<C: Ring> BiPoly<C> {
    fn without_x_linear(&self) -> Self {
        self - &BiPoly::monomial(self.coeff(1, 0), 1, 0)
    }

    fn without_y_linear(&self) -> Self {
        self - &BiPoly::monomial(self.coeff(0, 1), 0, 1)
    }
}

pub fn det2<C: Ring>(m: &[[C; 2]; 2]) -> C {
    m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0]))
}

impl<F: Field> Auto<UniPoly<F>> {
    /// The same map viewed over the fraction field.
    pub fn to_fraction_field(&self) -> Auto<RatFunc<F>> {
        let ctx = self.ring_ctx().clone();
        self.map_coeffs(&ctx, |c| RatFunc::from_poly(c.clone()))
    }
}

impl<F: Field> BiPoly<RatFunc<F>> {
    /// Back to `F[t]` coefficients if every coefficient is a polynomial.
    pub fn to_polynomial_ring(&self) -> Result<BiPoly<UniPoly<F>>> {
        let ctx = self.ring_ctx().clone();
        self.try_map_coeffs(&ctx, |c| c.to_poly().ok_or_else(|| Error::NotIntegral(c.to_string())))
    }

    /// True when every coefficient lies in `F[t]`.
    pub fn is_integral(&self) -> bool {
        self.terms().all(|(_, c)| c.is_polynomial())
    }
}

impl<F: Field> BiPoly<UniPoly<F>> {
    pub fn to_fraction_field(&self) -> BiPoly<RatFunc<F>> {
        let ctx = self.ring_ctx().clone();
        self.map_coeffs(&ctx, |c| RatFunc::from_poly(c.clone()))
    }
}

impl<F: Field> Auto<RatFunc<F>> {
    pub fn to_polynomial_ring(&self) -> Result<Auto<UniPoly<F>>> {
        Ok(Auto::new(self.f1.to_polynomial_ring()?, self.f2.to_polynomial_ring()?))
    }

    pub fn is_integral(&self) -> bool {
        self.f1.is_integral() && self.f2.is_integral()
    }

    /// Inverse over the field, through the amalgamated decomposition.
    pub fn invert(&self) -> Result<Self> {
        let word = crate::vdk::decompose(self)?.word;
        Ok(word.inverse().eval(self.ring_ctx()))
    }
}

impl<F: Field> Auto<UniPoly<F>> {
    /// Inverse over `F[t]`: decompose over `F(t)` and require the inverse to be
    /// integral.
    pub fn invert(&self) -> Result<Self> {
        self.to_fraction_field().invert()?.to_polynomial_ring()
    }

    /// Certifies an automorphism of `F[t][x,y]`: the map is invertible over the
    /// fraction field and the inverse keeps integral coefficients.
    pub fn is_automorphism(&self) -> bool {
        self.invert().is_ok()
    }
}

impl<C: Ring> fmt::Display for Auto<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x -> {} ; y -> {}", self.f1, self.f2)
    }
}
