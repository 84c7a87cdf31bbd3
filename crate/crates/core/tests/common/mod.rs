//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

use autotame::amalgam::{Letter, Tag, Word};
use autotame::automorphism::{AffineParts, Auto, TriangularParts};
use autotame::bipoly::BiPoly;
use autotame::coefficients::{Characteristic, Field, Fp, RatFunc, Ring, UniPoly};
use autotame::nagata::SigmaParams;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type K = RatFunc<Fp>;
pub type T = UniPoly<Fp>;

pub fn ch(p: u64) -> Characteristic {
    Characteristic::new(p).unwrap()
}

pub struct Gen {
    pub rng: ChaCha8Rng,
    pub ctx: Characteristic,
    pub p: u64,
}

impl Gen {
    pub fn new(seed: u64, p: u64) -> Self {
        Gen { rng: ChaCha8Rng::seed_from_u64(seed), ctx: ch(p), p }
    }

    pub fn fp(&mut self) -> Fp {
        Fp::new(self.rng.gen_range(0..self.p as i64), self.ctx)
    }

    pub fn nonzero_fp(&mut self) -> Fp {
        Fp::new(self.rng.gen_range(1..self.p as i64), self.ctx)
    }

    pub fn tpoly(&mut self, max_deg: usize) -> T {
        let d = self.rng.gen_range(0..=max_deg);
        let cs = (0..=d).map(|_| self.fp()).collect();
        UniPoly::new(cs, self.ctx)
    }

    /// Mostly constants and linear polynomials in `t`, sometimes a fraction.
    pub fn k(&mut self) -> K {
        match self.rng.gen_range(0..20) {
            0..=9 => K::from_scalar(self.fp()),
            10..=16 => K::from_poly(self.tpoly(1)),
            _ => {
                let den = T::t(self.ctx).add(&T::constant(self.fp()));
                K::new(self.tpoly(1), den).unwrap()
            }
        }
    }

    pub fn nonzero_k(&mut self) -> K {
        loop {
            let c = self.k();
            if !c.is_zero() {
                return c;
            }
        }
    }

    pub fn r(&mut self) -> T {
        self.tpoly(2)
    }

    /// `Σ c_j y^j` over the given exponents.
    pub fn y_poly(&mut self, exps: &[u32]) -> BiPoly<K> {
        let terms: Vec<_> = exps.iter().map(|&e| (self.k(), 0, e)).collect();
        BiPoly::from_terms(&self.ctx, terms)
    }

    pub fn linear(&mut self) -> [[K; 2]; 2] {
        loop {
            let m = [[self.k(), self.k()], [self.k(), self.k()]];
            if !autotame::automorphism::det2(&m).is_zero() {
                return m;
            }
        }
    }

    pub fn affine(&mut self) -> Auto<K> {
        Auto::affine(&AffineParts { linear: self.linear(), translation: [self.k(), self.k()] })
    }

    /// `(ux + by + e, vy + w)`: an element of `Aff ∩ BA`.
    pub fn affine_triangular(&mut self) -> Auto<K> {
        let (u, v) = (self.nonzero_k(), self.nonzero_k());
        let p = vec![self.k(), self.k()];
        Auto::triangular(&TriangularParts { u, p, v, w: self.k() })
    }

    /// `(ux + P(y), vy + w)` with `P` of exact degree `deg` drawn from `exps`.
    pub fn triangular_with(&mut self, exps: &[u32]) -> Auto<K> {
        let top = *exps.iter().max().unwrap_or(&0) as usize;
        let mut p = vec![K::zero(&self.ctx); top + 1];
        for &e in exps {
            p[e as usize] = self.k();
        }
        p[top] = self.nonzero_k();
        let (u, v) = (self.nonzero_k(), self.nonzero_k());
        Auto::triangular(&TriangularParts { u, p, v, w: self.k() })
    }

    /// A triangular letter of degree between 2 and `max_deg`.
    pub fn elementary(&mut self, max_deg: u32) -> Auto<K> {
        let d = self.rng.gen_range(2..=max_deg);
        let exps: Vec<u32> = (0..=d).filter(|_| self.rng.gen_bool(0.5)).chain([d]).collect();
        self.triangular_with(&exps)
    }

    /// Alternating affine and triangular letters, starting at random.
    pub fn tame_letters(&mut self, n: usize, max_deg: u32) -> Vec<Letter<Auto<K>>> {
        let mut a = self.rng.gen_bool(0.5);
        (0..n)
            .map(|_| {
                a = !a;
                if a {
                    Letter::new(Tag::A, self.affine())
                } else {
                    Letter::new(Tag::B, self.elementary(max_deg))
                }
            })
            .collect()
    }

    pub fn tame(&mut self, max_letters: usize, max_deg: u32) -> (Auto<K>, Vec<Letter<Auto<K>>>) {
        let n = self.rng.gen_range(1..=max_letters);
        let letters = self.tame_letters(n, max_deg);
        let phi = Word::new(letters.clone()).eval(&self.ctx);
        (phi, letters)
    }

    /// Exponents in `{0, 1} ∪ pℕ`, up to `max_deg`.
    pub fn diff_affine_exps(&mut self, max_deg: u32) -> Vec<u32> {
        let p = self.p as u32;
        let mults: Vec<u32> = (1..=max_deg / p).map(|m| m * p).collect();
        let top = mults[self.rng.gen_range(0..mults.len())];
        (0..=top).filter(|&e| e <= 1 || e % p == 0).filter(|_| self.rng.gen_bool(0.6)).chain([top]).collect()
    }

    pub fn diff_affine(&mut self, max_letters: usize, max_deg: u32) -> Auto<K> {
        let n = self.rng.gen_range(1..=max_letters);
        let mut a = self.rng.gen_bool(0.5);
        let mut phi = Auto::identity(&self.ctx);
        for _ in 0..n {
            a = !a;
            let l = if a {
                self.affine()
            } else {
                let e = self.diff_affine_exps(max_deg);
                self.triangular_with(&e)
            };
            phi = phi.compose(&l);
        }
        phi
    }

    /// Linear and `(ux + Σ c_j y^(p^j), vy)` letters, no translations.
    pub fn additive(&mut self, max_letters: usize, max_deg: u32) -> Auto<K> {
        let n = self.rng.gen_range(1..=max_letters);
        let mut a = self.rng.gen_bool(0.5);
        let mut phi = Auto::identity(&self.ctx);
        let powers: Vec<u32> =
            std::iter::successors(Some(self.p as u32), |q| Some(q * self.p as u32)).take_while(|&q| q <= max_deg).collect();
        for _ in 0..n {
            a = !a;
            let l = if a {
                Auto::affine(&AffineParts { linear: self.linear(), translation: [K::zero(&self.ctx), K::zero(&self.ctx)] })
            } else {
                let top = powers[self.rng.gen_range(0..powers.len())];
                let mut p = vec![K::zero(&self.ctx); top as usize + 1];
                p[1] = self.k();
                for &q in powers.iter().filter(|&&q| q < top) {
                    p[q as usize] = self.k();
                }
                p[top as usize] = self.nonzero_k();
                let l = Auto::triangular(&TriangularParts {
                    u: self.nonzero_k(),
                    p,
                    v: self.nonzero_k(),
                    w: K::zero(&self.ctx),
                });
                if self.rng.gen_bool(0.5) {
                    let tau = Auto::swap(&self.ctx);
                    tau.compose(&l).compose(&tau)
                } else {
                    l
                }
            };
            phi = phi.compose(&l);
        }
        phi
    }

    /// `σ(a, P, Q)` with `a = c^m`, `P = by + c S(y) + a U(y)` and `Q`
    /// lifted from `b^-1 y` until `P(Q) ≡ y mod a`.
    pub fn sigma_params(&mut self) -> SigmaParams<Fp> {
        let ctx = self.ctx;
        let c = if self.rng.gen_bool(0.5) { T::t(ctx) } else { T::t(ctx).add(&T::constant(self.nonzero_fp())) };
        let m = self.rng.gen_range(1..=3u64);
        let a = c.pow(m);
        let b = self.nonzero_fp();
        let deg = self.rng.gen_range(2..=5);
        let s: Vec<T> = (0..=deg).map(|j| if j >= 2 { self.tpoly(1) } else { T::zero(&ctx) }).collect();
        let u: Vec<T> = (0..=deg).map(|_| if self.rng.gen_bool(0.3) { self.tpoly(1) } else { T::zero(&ctx) }).collect();
        let y = BiPoly::<T>::y(&ctx);
        let big_p = &(&y.scale(&T::constant(b)) + &BiPoly::from_y_coeffs(&ctx, s).scale(&c))
            + &BiPoly::from_y_coeffs(&ctx, u).scale(&a);
        let b_inv = T::constant(b.inv().unwrap());
        let x = BiPoly::<T>::x(&ctx);
        let mut q = y.scale(&b_inv);
        for _ in 0..8 {
            let pq = big_p.substitute(&x, &q).reduce_mod(&a).unwrap();
            if pq == y {
                break;
            }
            q = (&q - &(&pq - &y).scale(&b_inv)).reduce_mod(&a).unwrap();
        }
        SigmaParams::new(a, big_p, q).expect("lifted congruence")
    }
}
