//! Words over an amalgamated product `A *_{A∩B} B`, given only membership
//! oracles and the group law.
//!
//! Products are written left to right: the word `(g1, g2, g3)` evaluates to
//! `g1 g2 g3`.

mod aut2;
mod criteria;

use std::fmt;

pub use aut2::AffBa;
pub use criteria::{
    assemble_blocks, criterion_letters, in_left_coset, in_right_coset, is_reduced_aut, length3_membership, LetterVerdict,
    Position,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    A,
    B,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tag::A => "A",
            Tag::B => "B",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Letter<E> {
    pub tag: Tag,
    pub elem: E,
}

impl<E> Letter<E> {
    pub fn new(tag: Tag, elem: E) -> Self {
        Letter { tag, elem }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word<E> {
    pub letters: Vec<Letter<E>>,
}

impl<E> Default for Word<E> {
    fn default() -> Self {
        Word { letters: Vec::new() }
    }
}

impl<E> Word<E> {
    pub fn new(letters: Vec<Letter<E>>) -> Self {
        Word { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn head(&self) -> Option<&Letter<E>> {
        self.letters.first()
    }

    pub fn tail(&self) -> Option<&Letter<E>> {
        self.letters.last()
    }

    pub fn tags(&self) -> Vec<Tag> {
        self.letters.iter().map(|l| l.tag).collect()
    }
}

impl<E: fmt::Display> fmt::Display for Word<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ; ")?;
            }
            write!(f, "{}: {}", l.tag, l.elem)?;
        }
        Ok(())
    }
}

/// An ambient group with two subgroups `A`, `B`, decided by oracles.
pub trait Amalgam {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn identity(&self) -> Self::Elem;
    /// The product `a b`.
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Inverse of an element of `A ∪ B`.
    fn inv(&self, g: &Self::Elem) -> Option<Self::Elem>;
    fn in_a(&self, g: &Self::Elem) -> bool;
    fn in_b(&self, g: &Self::Elem) -> bool;

    fn in_ab(&self, g: &Self::Elem) -> bool {
        self.in_a(g) && self.in_b(g)
    }

    /// Splits a letter of `A ∪ B` as `(r, c)` with `g = r c` and `c ∈ A∩B`.
    /// The default returns `(g, 1)`.
    fn intersect_factor(&self, g: &Self::Elem) -> (Self::Elem, Self::Elem) {
        (g.clone(), self.identity())
    }

    /// `A` if `g ∈ A`, else `B` if `g ∈ B`.
    fn tag_of(&self, g: &Self::Elem) -> Option<Tag> {
        if self.in_a(g) {
            Some(Tag::A)
        } else if self.in_b(g) {
            Some(Tag::B)
        } else {
            None
        }
    }

    fn in_group(&self, tag: Tag, g: &Self::Elem) -> bool {
        match tag {
            Tag::A => self.in_a(g),
            Tag::B => self.in_b(g),
        }
    }
}

/// `π(w)`; the empty word gives the identity.
pub fn word_eval<G: Amalgam>(w: &Word<G::Elem>, g: &G) -> G::Elem {
    w.letters.iter().fold(g.identity(), |acc, l| g.mul(&acc, &l.elem))
}

/// Letter-wise inverse in reverse order.
pub fn word_inverse<G: Amalgam>(w: &Word<G::Elem>, g: &G) -> Option<Word<G::Elem>> {
    w.letters
        .iter()
        .rev()
        .map(|l| g.inv(&l.elem).map(|e| Letter::new(l.tag, e)))
        .collect::<Option<Vec<_>>>()
        .map(Word::new)
}

fn in_a_or_b<G: Amalgam>(g: &G, e: &G::Elem) -> bool {
    g.in_a(e) || g.in_b(e)
}

/// Length at least one, every letter in `(A∖B) ∪ (B∖A)`, and no adjacent
/// product back in `A ∪ B`.
pub fn is_reduced<G: Amalgam>(w: &Word<G::Elem>, g: &G) -> bool {
    if w.is_empty() {
        return false;
    }
    let letters_ok = w.letters.iter().all(|l| g.in_a(&l.elem) != g.in_b(&l.elem));
    letters_ok
        && w
            .letters
            .windows(2)
            .all(|p| !in_a_or_b(g, &g.mul(&p[0].elem, &p[1].elem)))
}

/// `α * β`: concatenation when `δ = t(α) h(β)` leaves `A ∪ B`, otherwise the
/// two boundary letters are replaced by `δ`. When `δ ∈ A∩B` the result may
/// fail to be reduced and is returned unchanged.
pub fn star<G: Amalgam>(alpha: &Word<G::Elem>, beta: &Word<G::Elem>, g: &G) -> Word<G::Elem> {
    let (Some(t), Some(h)) = (alpha.tail(), beta.head()) else {
        return if alpha.is_empty() { beta.clone() } else { alpha.clone() };
    };
    let delta = g.mul(&t.elem, &h.elem);
    let mut letters = alpha.letters.clone();
    match g.tag_of(&delta) {
        None => letters.extend(beta.letters.iter().cloned()),
        Some(tag) => {
            letters.pop();
            letters.push(Letter::new(tag, delta));
            letters.extend(beta.letters.iter().skip(1).cloned());
        }
    }
    Word::new(letters)
}

/// Solves `β_1 = α_1 η_1`, `β_i = η_(i-1)^-1 α_i η_i`, `β_l = η_(l-1)^-1 α_l`
/// and returns `(η_1, ..., η_(l-1))` if every `η_i` lies in `A∩B`.
pub fn equivalent<G: Amalgam>(alpha: &Word<G::Elem>, beta: &Word<G::Elem>, g: &G) -> Option<Vec<G::Elem>> {
    if alpha.len() != beta.len() {
        return None;
    }
    let mut etas = Vec::with_capacity(alpha.len().saturating_sub(1));
    let mut prev = g.identity();
    for (i, (a, b)) in alpha.letters.iter().zip(&beta.letters).enumerate() {
        let a_inv = g.inv(&a.elem)?;
        let eta = g.mul(&g.mul(&a_inv, &prev), &b.elem);
        if i + 1 == alpha.len() {
            return (eta == g.identity()).then_some(etas);
        }
        if !g.in_ab(&eta) {
            return None;
        }
        etas.push(eta.clone());
        prev = eta;
    }
    Some(etas)
}

/// Rewrites a word into reduced form: letters of `A∩B` are absorbed into a
/// neighbour and adjacent letters whose product stays in `A` or `B` are
/// merged. Tags are recomputed from the oracles. A word evaluating into
/// `A∩B` comes back as a single letter (and is not reduced).
pub fn normalize<G: Amalgam>(w: &Word<G::Elem>, g: &G) -> Word<G::Elem> {
    let mut elems: Vec<G::Elem> = w.letters.iter().map(|l| l.elem.clone()).collect();
    loop {
        let mut changed = false;
        // absorb intersection letters
        if elems.len() > 1 {
            if let Some(i) = elems.iter().position(|e| g.in_ab(e)) {
                let e = elems.remove(i);
                if i < elems.len() {
                    elems[i] = g.mul(&e, &elems[i]);
                } else {
                    elems[i - 1] = g.mul(&elems[i - 1], &e);
                }
                changed = true;
            }
        }
        if !changed {
            if let Some(i) = (0..elems.len().saturating_sub(1))
                .find(|&i| in_a_or_b(g, &g.mul(&elems[i], &elems[i + 1])))
            {
                let right = elems.remove(i + 1);
                elems[i] = g.mul(&elems[i], &right);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let letters = elems
        .into_iter()
        .map(|e| {
            let tag = if g.in_b(&e) && !g.in_a(&e) { Tag::B } else { Tag::A };
            Letter::new(tag, e)
        })
        .collect();
    Word::new(letters)
}

/// `ℓ` of a normalized word: `0` for a single letter of `A∩B`.
pub fn reduced_length<G: Amalgam>(w: &Word<G::Elem>, g: &G) -> usize {
    match w.letters.as_slice() {
        [] => 0,
        [l] if g.in_ab(&l.elem) => 0,
        _ => w.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `Z/2 * Z/3` as words in a free-product model: elements are reduced
    /// sequences over the alphabet {a} ∪ {b, b^2}, encoded as signed codes.
    #[derive(Clone, Copy)]
    struct Modular;

    fn reduce(mut v: Vec<u8>) -> Vec<u8> {
        // 1 = a (order 2), 2 = b, 3 = b^2
        let mut out: Vec<u8> = Vec::new();
        for x in v.drain(..) {
            match (out.last().copied(), x) {
                (Some(1), 1) => {
                    out.pop();
                }
                (Some(l @ (2 | 3)), x @ (2 | 3)) => {
                    out.pop();
                    let s = ((l - 1) + (x - 1)) % 3;
                    if s != 0 {
                        out.push(s + 1);
                    }
                }
                _ => out.push(x),
            }
        }
        out
    }

    impl Amalgam for Modular {
        type Elem = Vec<u8>;
        fn identity(&self) -> Vec<u8> {
            vec![]
        }
        fn mul(&self, a: &Vec<u8>, b: &Vec<u8>) -> Vec<u8> {
            reduce(a.iter().chain(b).copied().collect())
        }
        fn inv(&self, g: &Vec<u8>) -> Option<Vec<u8>> {
            Some(g.iter().rev().map(|&x| match x {
                2 => 3,
                3 => 2,
                o => o,
            }).collect())
        }
        fn in_a(&self, g: &Vec<u8>) -> bool {
            g.is_empty() || *g == [1]
        }
        fn in_b(&self, g: &Vec<u8>) -> bool {
            g.is_empty() || *g == [2] || *g == [3]
        }
    }

    fn w(codes: &[u8]) -> Word<Vec<u8>> {
        Word::new(
            codes
                .iter()
                .map(|&c| Letter::new(if c == 1 { Tag::A } else { Tag::B }, vec![c]))
                .collect(),
        )
    }

    #[test]
    fn reducedness_in_free_product() {
        let g = Modular;
        assert!(is_reduced(&w(&[1, 2, 1, 3]), &g));
        assert!(!is_reduced(&w(&[2, 3]), &g));
        assert!(!is_reduced(&Word::default(), &g));
    }

    #[test]
    fn star_merges_or_concatenates() {
        let g = Modular;
        assert_eq!(star(&w(&[1, 2]), &w(&[1]), &g).len(), 3);
        let merged = star(&w(&[1, 2]), &w(&[2, 1]), &g);
        assert_eq!(merged.tags(), vec![Tag::A, Tag::B, Tag::A]);
        assert_eq!(merged.letters[1].elem, vec![3]);
        let collapsed = star(&w(&[1]), &w(&[1]), &g);
        assert_eq!(collapsed.len(), 1);
        assert!(collapsed.letters[0].elem.is_empty());
    }

    #[test]
    fn equivalence_and_normalization() {
        let g = Modular;
        let a = w(&[1, 2, 1]);
        assert_eq!(equivalent(&a, &a, &g), Some(vec![vec![], vec![]]));
        assert!(equivalent(&a, &w(&[1, 3, 1]), &g).is_none());
        assert!(equivalent(&a, &w(&[1, 2]), &g).is_none());
        let n = normalize(&w(&[1, 2, 2, 1, 1, 3]), &g);
        assert_eq!(n.letters.iter().map(|l| l.elem.clone()).collect::<Vec<_>>(), vec![vec![1], vec![2]]);
        assert_eq!(word_eval(&n, &g), word_eval(&w(&[1, 2, 2, 1, 1, 3]), &g));
    }
}
