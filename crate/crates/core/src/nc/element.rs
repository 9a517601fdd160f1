use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::generator::{word_to_string, Gen, Word};
use crate::coeff::{LaurentPoly, Rational};

/// A finite linear combination of words with Laurent coefficients.
///
/// The element itself does not know its algebra; products and normal forms
/// go through [`crate::nc::Algebra`]. Raw concatenation ([`NCElement::concat`])
/// is available for building relations before reduction.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct NCElement {
    terms: BTreeMap<Word, LaurentPoly>,
}

impl NCElement {
    pub fn zero() -> Self {
        NCElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::scalar(LaurentPoly::one())
    }

    pub fn scalar(c: LaurentPoly) -> Self {
        Self::from_word(Vec::new(), c)
    }

    pub fn from_word(w: Word, c: LaurentPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NCElement { terms }
    }

    pub fn gen(g: Gen) -> Self {
        Self::from_word(vec![g], LaurentPoly::one())
    }

    /// Product of generators with unit coefficient, not reduced.
    pub fn word(gens: &[Gen]) -> Self {
        Self::from_word(gens.to_vec(), LaurentPoly::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[Gen]) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// The coefficient if this is a multiple of the unit.
    pub fn as_scalar(&self) -> Option<LaurentPoly> {
        match self.terms.len() {
            0 => Some(LaurentPoly::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, w: Word, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &NCElement, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &other.terms {
            if c.is_one() {
                self.add_term(w.clone(), x);
            } else {
                self.add_term(w.clone(), &(x * c));
            }
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.scale(&LaurentPoly::constant(c.clone()))
    }

    /// Raw product: concatenates words without rewriting.
    pub fn concat(&self, other: &NCElement) -> Self {
        let mut out = Self::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                out.add_term(w, &(ca * cb));
            }
        }
        out
    }

    /// Apply `f` to every coefficient, dropping terms that become zero.
    pub fn map_coeffs<F: FnMut(&LaurentPoly) -> LaurentPoly>(&self, mut f: F) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &f(c));
        }
        out
    }

    /// Divide every coefficient exactly by `d`.
    pub fn div_exact(&self, d: &LaurentPoly) -> crate::Result<Self> {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &c.div_exact(d)?);
        }
        Ok(out)
    }

    /// Longest word length occurring.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    /// Every generator occurring in some word.
    pub fn generators(&self) -> Vec<Gen> {
        let mut gs: Vec<Gen> = self.terms.keys().flatten().copied().collect();
        gs.sort();
        gs.dedup();
        gs
    }
}

impl<'a> Add<&'a NCElement> for &'a NCElement {
    type Output = NCElement;
    fn add(self, rhs: &NCElement) -> NCElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl<'a> Sub<&'a NCElement> for &'a NCElement {
    type Output = NCElement;
    fn sub(self, rhs: &NCElement) -> NCElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), &-c);
        }
        out
    }
}

impl Add for NCElement {
    type Output = NCElement;
    fn add(self, rhs: NCElement) -> NCElement {
        &self + &rhs
    }
}

impl Sub for NCElement {
    type Output = NCElement;
    fn sub(self, rhs: NCElement) -> NCElement {
        &self - &rhs
    }
}

impl Neg for &NCElement {
    type Output = NCElement;
    fn neg(self) -> NCElement {
        self.map_coeffs(|c| -c)
    }
}

impl Neg for NCElement {
    type Output = NCElement;
    fn neg(self) -> NCElement {
        -&self
    }
}

impl From<Gen> for NCElement {
    fn from(g: Gen) -> Self {
        NCElement::gen(g)
    }
}

impl fmt::Display for NCElement {
    /// Expression-grammar text: one signed term per coefficient monomial,
    /// e.g. `-1 q^-1 s[3,2]*s[2,1] + 2 s[3,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (w, c) in &self.terms {
            for (e, r) in c.terms() {
                let mut factors = e.factors();
                if !w.is_empty() {
                    if !factors.is_empty() {
                        factors.push(' ');
                    }
                    factors.push_str(&word_to_string(w));
                }
                terms.push((r.clone(), factors));
            }
        }
        f.write_str(&crate::coeff::join_terms(terms))
    }
}

impl fmt::Debug for NCElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCElement({self})")
    }
}
