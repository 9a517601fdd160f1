//! Text form of coefficients, algebra elements and Poisson polynomials.
//!
//! ```text
//! expr   := [+|-] term ((+|-) term)*
//! term   := factor ([*] factor)*
//! factor := rational | var [^int] | kind[i,j] [^int] | ( expr )
//! var    := q | u | v | w | lam
//! kind   := t | tbar | s | a
//! ```
//!
//! Juxtaposition and `*` both multiply; generator order is kept. This is
//! a superset of what `Display` prints, so printed values parse back.

use crate::coeff::{LaurentPoly, Rational, Var};
use crate::error::{Error, Result};
use crate::nc::{Gen, Kind, NCElement, Word};
use crate::poisson::PoissonPoly;

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { pos, msg: msg.into() })
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            err(self.pos, format!("expected `{c}`"))
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let neg = self.eat('-');
        self.skip_ws();
        let Some(d) = self.digits() else {
            return err(self.pos, "expected an integer");
        };
        let v: i64 = d.parse().map_err(|_| Error::Parse {
            pos: start,
            msg: "integer out of range".into(),
        })?;
        Ok(if neg { -v } else { v })
    }

    fn index(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        let Some(d) = self.digits() else {
            return err(self.pos, "expected an index");
        };
        match d.parse::<usize>() {
            Ok(v) if (1..=255).contains(&v) => Ok(v),
            _ => err(start, "index must be in 1..=255"),
        }
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_alphabetic()) {
            self.pos += self.peek().map(char::len_utf8).unwrap_or(1);
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn power(&mut self) -> Result<Option<i64>> {
        if self.eat('^') {
            Ok(Some(self.int()?))
        } else {
            Ok(None)
        }
    }

    fn expr(&mut self) -> Result<NCElement> {
        self.skip_ws();
        let mut sign = 1;
        if self.eat('-') {
            sign = -1;
        } else {
            self.eat('+');
        }
        let mut acc = self.term()?.scale(&LaurentPoly::int(sign));
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&mut self) -> bool {
        self.skip_ws();
        matches!(self.peek(), Some(c) if c.is_ascii_digit() || c.is_alphabetic() || c == '(')
    }

    fn term(&mut self) -> Result<NCElement> {
        let mut acc = self.factor()?;
        loop {
            let star = self.eat('*');
            if !star && !self.starts_factor() {
                return Ok(acc);
            }
            acc = acc.concat(&self.factor()?);
        }
    }

    fn factor(&mut self) -> Result<NCElement> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                if let Some(k) = self.power()? {
                    if k < 0 {
                        return err(start, "negative power of a bracketed expression");
                    }
                    let mut out = NCElement::one();
                    for _ in 0..k {
                        out = out.concat(&e);
                    }
                    return Ok(out);
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits().expect("digit");
                let text = if self.peek() == Some('/') {
                    self.pos += 1;
                    let Some(d) = self.digits() else {
                        return err(self.pos, "expected a denominator");
                    };
                    format!("{n}/{d}")
                } else {
                    n.to_string()
                };
                let r: Rational = text.parse().map_err(|m: String| Error::Parse { pos: start, msg: m })?;
                Ok(NCElement::scalar(LaurentPoly::constant(r)))
            }
            Some(c) if c.is_alphabetic() => {
                let name = self.ident().expect("letter");
                if let Some(var) = Var::from_name(name) {
                    let e = self.power()?.unwrap_or(1);
                    let e = i16::try_from(e).map_err(|_| Error::Parse {
                        pos: start,
                        msg: "exponent out of range".into(),
                    })?;
                    return Ok(NCElement::scalar(LaurentPoly::var_pow(var, e)));
                }
                let Some(kind) = Kind::from_name(name) else {
                    return err(start, format!("unknown name `{name}`"));
                };
                self.expect('[')?;
                let i = self.index()?;
                self.expect(',')?;
                let j = self.index()?;
                self.expect(']')?;
                let k = self.power()?.unwrap_or(1);
                Ok(NCElement::word(&generator_power(kind, i, j, k, start)?))
            }
            _ => err(start, "expected a number, variable, generator or `(`"),
        }
    }
}

fn generator_power(kind: Kind, i: usize, j: usize, k: i64, pos: usize) -> Result<Word> {
    let diag = i == j && matches!(kind, Kind::T | Kind::TBar);
    if diag {
        let e = if kind == Kind::TBar { -k } else { k };
        if e == 0 {
            return Ok(Vec::new());
        }
        let e = i8::try_from(e).map_err(|_| Error::Parse {
            pos,
            msg: "exponent out of range".into(),
        })?;
        return Ok(vec![Gen::diag(i, e)]);
    }
    if k < 0 {
        return err(
            pos,
            format!(
                "negative power of the non-invertible generator {}",
                Gen::new(kind, i, j)
            ),
        );
    }
    Ok(vec![Gen::new(kind, i, j); k as usize])
}

/// Merges adjacent powers of the same diagonal generator.
fn merge_diagonals(e: &NCElement) -> NCElement {
    let mut out = NCElement::zero();
    for (w, c) in e.terms() {
        let mut merged: Word = Vec::with_capacity(w.len());
        for &g in w {
            match merged.last_mut() {
                Some(last) if last.is_diag() && g.is_diag() && last.key() == g.key() => {
                    let e = last.exp + g.exp;
                    if e == 0 {
                        merged.pop();
                    } else {
                        *last = last.with_exp(e);
                    }
                }
                _ => merged.push(g),
            }
        }
        out.add_term(merged, c);
    }
    out
}

fn run(src: &str) -> Result<NCElement> {
    let mut p = Parser { src, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != src.len() {
        return err(p.pos, "unexpected trailing input");
    }
    Ok(merge_diagonals(&e))
}

/// Parses an algebra element. Words are kept in the order written, not
/// normal-ordered.
pub fn parse_element(src: &str) -> Result<NCElement> {
    run(src)
}

/// Parses a Laurent polynomial in `q, u, v, w, lam`.
pub fn parse_laurent(src: &str) -> Result<LaurentPoly> {
    run(src)?.as_scalar().ok_or_else(|| Error::Parse {
        pos: 0,
        msg: "expected a scalar expression".into(),
    })
}

/// Parses a commutative polynomial in the `a[i,j]` (with `i != j` or
/// diagonal entries alike) over Laurent coefficients.
pub fn parse_poisson(src: &str) -> Result<PoissonPoly> {
    let e = run(src)?;
    let mut out = PoissonPoly::zero();
    for (w, c) in e.terms() {
        let mut t = PoissonPoly::constant(c.clone());
        for g in w {
            if g.kind != Kind::A {
                return err(0, format!("generator {g} in a Poisson polynomial"));
            }
            t = &t * &PoissonPoly::var(g.row(), g.col());
        }
        out = &out + &t;
    }
    Ok(out)
}
