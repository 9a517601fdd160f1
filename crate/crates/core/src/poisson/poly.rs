use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coeff::{join_terms, LaurentPoly, Rational, Var};
use crate::error::Result;

/// A commutative variable `a[i,j]`.
pub type AVar = (u8, u8);

/// Sorted `(variable, exponent)` pairs with positive exponents.
pub type Mono = Vec<(AVar, u16)>;

fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut x, mut y) = (0, 0);
    while x < a.len() && y < b.len() {
        match a[x].0.cmp(&b[y].0) {
            std::cmp::Ordering::Less => {
                out.push(a[x]);
                x += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[y]);
                y += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((a[x].0, a[x].1 + b[y].1));
                x += 1;
                y += 1;
            }
        }
    }
    out.extend_from_slice(&a[x..]);
    out.extend_from_slice(&b[y..]);
    out
}

pub fn mono_to_string(m: &Mono) -> String {
    m.iter()
        .map(|((i, j), e)| {
            if *e == 1 {
                format!("a[{i},{j}]")
            } else {
                format!("a[{i},{j}]^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// A commutative polynomial in the `a[i,j]` with Laurent-polynomial
/// coefficients (so `q`, `u` and `λ` ride along as scalars).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PoissonPoly {
    terms: BTreeMap<Mono, LaurentPoly>,
}

impl PoissonPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(LaurentPoly::one())
    }

    pub fn constant(c: LaurentPoly) -> Self {
        let mut p = Self::zero();
        p.add_term(Vec::new(), &c);
        p
    }

    pub fn int(n: i64) -> Self {
        Self::constant(LaurentPoly::int(n))
    }

    pub fn var(i: usize, j: usize) -> Self {
        Self::monomial(vec![((i as u8, j as u8), 1)], LaurentPoly::one())
    }

    pub fn monomial(m: Mono, c: LaurentPoly) -> Self {
        let mut p = Self::zero();
        p.add_term(m, &c);
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &LaurentPoly)> {
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

    pub fn add_term(&mut self, m: Mono, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (m, d) in &self.terms {
            out.add_term(m.clone(), &(d * c));
        }
        out
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&LaurentPoly::int(n))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn map_coeffs<F: FnMut(&LaurentPoly) -> LaurentPoly>(&self, mut f: F) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &f(c));
        }
        out
    }

    pub fn eval_q1(&self) -> Self {
        self.map_coeffs(|c| c.eval_q1())
    }

    /// Coefficient of `var^k` in the scalars.
    pub fn coeff_of(&self, var: Var, k: i16) -> Self {
        self.map_coeffs(|c| c.coeff_of(var, k))
    }

    /// Exponents of `var` occurring in the scalars.
    pub fn powers_of(&self, var: Var) -> Vec<i16> {
        let mut out: Vec<i16> = self.terms.values().flat_map(|c| c.powers_of(var)).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Variables occurring, sorted.
    pub fn vars(&self) -> Vec<AVar> {
        let mut out: Vec<AVar> = self.terms.keys().flat_map(|m| m.iter().map(|p| p.0)).collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .map(|m| m.iter().map(|p| p.1 as usize).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn as_constant(&self) -> Option<LaurentPoly> {
        match self.terms.len() {
            0 => Some(LaurentPoly::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    /// Partial derivative in `x`.
    pub fn derivative(&self, x: AVar) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if let Some(pos) = m.iter().position(|p| p.0 == x) {
                let e = m[pos].1;
                let mut nm = m.clone();
                if e == 1 {
                    nm.remove(pos);
                } else {
                    nm[pos].1 = e - 1;
                }
                out.add_term(nm, &c.scale(&Rational::from_int(e as i64)));
            }
        }
        out
    }

    /// Substitute every variable through `f`.
    pub fn subst(&self, f: &mut dyn FnMut(AVar) -> Result<PoissonPoly>) -> Result<Self> {
        let mut cache: BTreeMap<AVar, PoissonPoly> = BTreeMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut acc = Self::constant(c.clone());
            for &(x, e) in m {
                if let std::collections::btree_map::Entry::Vacant(e) = cache.entry(x) {
                    e.insert(f(x)?);
                }
                acc = &acc * &cache[&x].pow(e as u32);
                if acc.is_zero() {
                    break;
                }
            }
            out = &out + &acc;
        }
        Ok(out)
    }
}

impl<'a> Add<&'a PoissonPoly> for &'a PoissonPoly {
    type Output = PoissonPoly;
    fn add(self, o: &PoissonPoly) -> PoissonPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl<'a> Sub<&'a PoissonPoly> for &'a PoissonPoly {
    type Output = PoissonPoly;
    fn sub(self, o: &PoissonPoly) -> PoissonPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl<'a> Mul<&'a PoissonPoly> for &'a PoissonPoly {
    type Output = PoissonPoly;
    fn mul(self, o: &PoissonPoly) -> PoissonPoly {
        let mut out = PoissonPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(mono_mul(m1, m2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &PoissonPoly {
    type Output = PoissonPoly;
    fn neg(self) -> PoissonPoly {
        self.scale_int(-1)
    }
}

impl Neg for PoissonPoly {
    type Output = PoissonPoly;
    fn neg(self) -> PoissonPoly {
        -&self
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<PoissonPoly> for PoissonPoly {
            type Output = PoissonPoly;
            fn $m(self, o: PoissonPoly) -> PoissonPoly {
                (&self).$m(&o)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl From<i64> for PoissonPoly {
    fn from(n: i64) -> Self {
        PoissonPoly::int(n)
    }
}

impl fmt::Display for PoissonPoly {
    /// Same grammar as noncommutative elements, with `a[i,j]^e` factors.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            for (e, r) in c.terms() {
                let mut factors = e.factors();
                if !m.is_empty() {
                    if !factors.is_empty() {
                        factors.push(' ');
                    }
                    factors.push_str(&mono_to_string(m));
                }
                terms.push((r.clone(), factors));
            }
        }
        f.write_str(&join_terms(terms))
    }
}

impl fmt::Debug for PoissonPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PoissonPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_derivative() {
        let x = PoissonPoly::var(2, 1);
        let y = PoissonPoly::var(3, 1);
        let p = &(&x * &x) * &y;
        assert_eq!(p.derivative((2, 1)), (&x * &y).scale_int(2));
        assert_eq!(p.derivative((3, 2)), PoissonPoly::zero());
        assert_eq!(&p - &p, PoissonPoly::zero());
        assert_eq!(p.to_string(), "1 a[2,1]^2*a[3,1]");
        assert_eq!(PoissonPoly::zero().to_string(), "0");
    }
}
