use std::collections::BTreeSet;

use super::lexer::{tokenize, Tok, Token};
use crate::amalgam::{Letter, Tag, Word};
use crate::automorphism::Auto;
use crate::bipoly::BiPoly;
use crate::coefficients::{Field, RatFunc, Ring, UniPoly};
use crate::error::{Error, Result};
use crate::pstable::PStableSet;

/// Largest exponent accepted after `^`.
const MAX_EXPONENT: i64 = 10_000;

struct Parser<'c, F: Field> {
    toks: Vec<Token>,
    pos: usize,
    ctx: &'c F::Ctx,
}

type Value<F> = BiPoly<RatFunc<F>>;

impl<'c, F: Field> Parser<'c, F> {
    fn new(input: &str, ctx: &'c F::Ctx) -> Result<Self> {
        Ok(Parser { toks: tokenize(input)?, pos: 0, ctx })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        let t = &self.toks[self.pos];
        Err(Error::Parse { line: t.line, column: t.column, message: message.into() })
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, sym: &str) -> bool {
        if matches!(self.peek(), Tok::Sym(s) if *s == sym) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, sym: &str) -> Result<()> {
        if self.eat(sym) {
            Ok(())
        } else {
            self.error(format!("expected '{sym}'"))
        }
    }

    fn expect_ident(&mut self, name: &str) -> Result<()> {
        match self.peek() {
            Tok::Ident(s) if s == name => {
                self.bump();
                Ok(())
            }
            _ => self.error(format!("expected '{name}'")),
        }
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            Tok::End => Ok(()),
            _ => self.error("unexpected trailing input"),
        }
    }

    fn int(&mut self) -> Result<i64> {
        match self.peek() {
            Tok::Int(n) => {
                let n = *n;
                self.bump();
                Ok(n)
            }
            _ => self.error("expected an integer"),
        }
    }

    // expr := term (('+' | '-') term)*
    fn expr(&mut self) -> Result<Value<F>> {
        let mut acc = self.term()?;
        loop {
            if self.eat("+") {
                acc = &acc + &self.term()?;
            } else if self.eat("-") {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    // term := unary (('*' | '/') unary)*
    fn term(&mut self) -> Result<Value<F>> {
        let mut acc = self.unary()?;
        loop {
            if self.eat("*") {
                acc = &acc * &self.unary()?;
            } else if matches!(self.peek(), Tok::Sym("/")) {
                let divisor = {
                    self.bump();
                    self.unary()?
                };
                let Some(c) = divisor.as_constant() else {
                    return self.error("can only divide by an expression in t");
                };
                let Some(inv) = c.inv() else {
                    return self.error("division by zero");
                };
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    // unary := '-' unary | power
    fn unary(&mut self) -> Result<Value<F>> {
        if self.eat("-") {
            Ok(-self.unary()?)
        } else {
            self.power()
        }
    }

    // power := atom ('^' '-'? int)?
    fn power(&mut self) -> Result<Value<F>> {
        let base = self.atom()?;
        if !self.eat("^") {
            return Ok(base);
        }
        let negative = self.eat("-");
        let e = self.int()?;
        if e > MAX_EXPONENT {
            return self.error(format!("exponent {e} exceeds {MAX_EXPONENT}"));
        }
        if negative {
            let Some(inv) = base.as_constant().and_then(|c| c.inv()) else {
                return self.error("negative exponents need a nonzero expression in t");
            };
            return Ok(BiPoly::constant(inv.pow(e as u64)));
        }
        Ok(match base.as_constant() {
            Some(c) => BiPoly::constant(c.pow(e as u64)),
            None => base.pow(e as u32),
        })
    }

    // atom := int | 't' | 'x' | 'y' | '(' expr ')'
    fn atom(&mut self) -> Result<Value<F>> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(BiPoly::constant(RatFunc::from_int(self.ctx, n)))
            }
            Tok::Ident(s) => match s.as_str() {
                "t" => {
                    self.bump();
                    Ok(BiPoly::constant(RatFunc::t(self.ctx.clone())))
                }
                "x" => {
                    self.bump();
                    Ok(BiPoly::x(self.ctx))
                }
                "y" => {
                    self.bump();
                    Ok(BiPoly::y(self.ctx))
                }
                other => self.error(format!("unknown identifier '{other}'")),
            },
            Tok::Sym("(") => {
                self.bump();
                let v = self.expr()?;
                self.expect(")")?;
                Ok(v)
            }
            _ => self.error("expected a number, t, x, y or '('"),
        }
    }

    // auto := 'x' '->' expr ';' 'y' '->' expr
    fn auto(&mut self) -> Result<Auto<RatFunc<F>>> {
        self.expect_ident("x")?;
        self.expect("->")?;
        let f1 = self.expr()?;
        self.expect(";")?;
        self.expect_ident("y")?;
        self.expect("->")?;
        let f2 = self.expr()?;
        Ok(Auto::new(f1, f2))
    }

    // word := letter (';' letter)* ; letter := ('A' | 'B') ':' auto
    fn word(&mut self) -> Result<Word<Auto<RatFunc<F>>>> {
        let mut letters = Vec::new();
        loop {
            let tag = match self.peek() {
                Tok::Ident(s) if s == "A" => Tag::A,
                Tok::Ident(s) if s == "B" => Tag::B,
                _ => return self.error("expected a letter tag 'A' or 'B'"),
            };
            self.bump();
            self.expect(":")?;
            let start = self.pos;
            let elem = self.auto()?;
            let ok = match tag {
                Tag::A => elem.is_affine(),
                Tag::B => elem.is_triangular(),
            };
            if !ok {
                let t = &self.toks[start];
                return Err(Error::Parse {
                    line: t.line,
                    column: t.column,
                    message: format!("letter is not in group {tag}"),
                });
            }
            letters.push(Letter::new(tag, elem));
            if !self.eat(";") {
                return Ok(Word::new(letters));
            }
        }
    }

    // pset := inter ('|' inter)*
    fn pset(&mut self) -> Result<PStableSet> {
        let mut parts = vec![self.pset_inter()?];
        while self.eat("|") {
            parts.push(self.pset_inter()?);
        }
        Ok(if parts.len() == 1 { parts.pop().expect("one part") } else { PStableSet::Union(parts) })
    }

    // inter := patom ('&' patom)*
    fn pset_inter(&mut self) -> Result<PStableSet> {
        let mut parts = vec![self.pset_atom()?];
        while self.eat("&") {
            parts.push(self.pset_atom()?);
        }
        Ok(if parts.len() == 1 { parts.pop().expect("one part") } else { PStableSet::Intersection(parts) })
    }

    fn nat(&mut self) -> Result<u64> {
        let n = self.int()?;
        u64::try_from(n).or_else(|_| self.error("expected a natural number"))
    }

    fn small(&mut self) -> Result<u32> {
        let n = self.nat()?;
        u32::try_from(n).or_else(|_| self.error("exponent too large"))
    }

    fn pset_atom(&mut self) -> Result<PStableSet> {
        match self.peek().clone() {
            Tok::Sym("{") => {
                self.bump();
                let mut items = BTreeSet::new();
                if !self.eat("}") {
                    loop {
                        let n = self.nat()?;
                        if n < 2 {
                            return self.error("set elements must be at least 2");
                        }
                        items.insert(n);
                        if self.eat("}") {
                            break;
                        }
                        self.expect(",")?;
                    }
                }
                Ok(PStableSet::Finite(items))
            }
            Tok::Sym("(") => {
                self.bump();
                let s = self.pset()?;
                self.expect(")")?;
                Ok(s)
            }
            Tok::Int(_) => {
                let lo = self.nat()?;
                self.expect("..")?;
                let hi = self.nat()?;
                if lo == 2 {
                    Ok(PStableSet::RangeTo(hi))
                } else if lo < 2 {
                    self.error("ranges start at 2 or above")
                } else {
                    Ok(PStableSet::Finite((lo..=hi).collect()))
                }
            }
            Tok::Ident(name) => {
                self.bump();
                match name.as_str() {
                    "ppowers" => Ok(PStableSet::PPowers),
                    "pmult" => Ok(PStableSet::PMultiples),
                    "all" => Ok(PStableSet::AllGe2),
                    "empty" => Ok(PStableSet::Empty),
                    "scaled" => {
                        self.expect("(")?;
                        let n = self.small()?;
                        self.expect(",")?;
                        let k = self.nat()?;
                        self.expect(")")?;
                        Ok(PStableSet::ScaledRange(n, k))
                    }
                    "scaledall" => {
                        self.expect("(")?;
                        let n = self.small()?;
                        self.expect(")")?;
                        Ok(PStableSet::ScaledAll(n))
                    }
                    "ppair" => {
                        self.expect("(")?;
                        let n = self.small()?;
                        self.expect(")")?;
                        Ok(PStableSet::PPowerPair(n))
                    }
                    other => {
                        self.pos -= 1;
                        self.error(format!("unknown set '{other}'"))
                    }
                }
            }
            _ => self.error("expected a set"),
        }
    }
}

fn at_start(message: impl Into<String>) -> Error {
    Error::Parse { line: 1, column: 1, message: message.into() }
}

/// A polynomial in `x, y` over `F(t)`.
pub fn parse_kpoly<F: Field>(input: &str, ctx: &F::Ctx) -> Result<BiPoly<RatFunc<F>>> {
    let mut p = Parser::<F>::new(input, ctx)?;
    let v = p.expr()?;
    p.finish()?;
    Ok(v)
}

/// A polynomial in `x, y` whose coefficients must lie in `F[t]`.
pub fn parse_rpoly<F: Field>(input: &str, ctx: &F::Ctx) -> Result<BiPoly<UniPoly<F>>> {
    parse_kpoly::<F>(input, ctx)?.to_polynomial_ring()
}

/// An element of `F(t)`.
pub fn parse_ratfunc<F: Field>(input: &str, ctx: &F::Ctx) -> Result<RatFunc<F>> {
    parse_kpoly::<F>(input, ctx)?
        .as_constant()
        .ok_or_else(|| at_start("expected an expression in t alone"))
}

/// An element of `F[t]`.
pub fn parse_tpoly<F: Field>(input: &str, ctx: &F::Ctx) -> Result<UniPoly<F>> {
    let r = parse_ratfunc::<F>(input, ctx)?;
    r.to_poly().ok_or(Error::NotIntegral(r.to_string()))
}

/// `x -> f1 ; y -> f2` over `F(t)`.
pub fn parse_kauto<F: Field>(input: &str, ctx: &F::Ctx) -> Result<Auto<RatFunc<F>>> {
    let mut p = Parser::<F>::new(input, ctx)?;
    let v = p.auto()?;
    p.finish()?;
    Ok(v)
}

/// `x -> f1 ; y -> f2` with coefficients in `F[t]`.
pub fn parse_rauto<F: Field>(input: &str, ctx: &F::Ctx) -> Result<Auto<UniPoly<F>>> {
    parse_kauto::<F>(input, ctx)?.to_polynomial_ring()
}

/// `A: <auto> ; B: <auto> ; ...`; each letter must lie in its group.
pub fn parse_kword<F: Field>(input: &str, ctx: &F::Ctx) -> Result<Word<Auto<RatFunc<F>>>> {
    let mut p = Parser::<F>::new(input, ctx)?;
    let v = p.word()?;
    p.finish()?;
    Ok(v)
}

/// Set syntax: `{2,3}`, `2..k`, `ppowers`, `pmult`, `all`, `empty`,
/// `scaled(n,k)`, `scaledall(n)`, `ppair(n)`, `|`, `&` and parentheses.
pub fn parse_pset(input: &str) -> Result<PStableSet> {
    // The set grammar never builds ring elements; any context will do.
    let ctx = crate::coefficients::Characteristic::new(2)?;
    let mut p = Parser::<crate::coefficients::Fp>::new(input, &ctx)?;
    let v = p.pset()?;
    p.finish()?;
    Ok(v)
}
