//! Sparse Laurent polynomials in the fixed variables `q, u, v, w, λ`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::Rational;
use crate::error::{Error, Result};

/// The coefficient variables, in monomial-order position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q = 0,
    U = 1,
    V = 2,
    W = 3,
    Lambda = 4,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::Q, Var::U, Var::V, Var::W, Var::Lambda];

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::U => "u",
            Var::V => "v",
            Var::W => "w",
            Var::Lambda => "lam",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Some(match s {
            "q" => Var::Q,
            "u" => Var::U,
            "v" => Var::V,
            "w" => Var::W,
            "lam" | "λ" | "lambda" => Var::Lambda,
            _ => return None,
        })
    }
}

/// Exponent vector indexed by [`Var`]. Ordered lexicographically.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponents(pub [i16; 5]);

impl Exponents {
    pub const ONE: Exponents = Exponents([0; 5]);

    pub fn of(var: Var, e: i16) -> Self {
        let mut x = [0; 5];
        x[var as usize] = e;
        Exponents(x)
    }

    pub fn get(&self, var: Var) -> i16 {
        self.0[var as usize]
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 5]
    }

    fn mul(&self, o: &Exponents) -> Exponents {
        let mut x = self.0;
        for (a, b) in x.iter_mut().zip(o.0) {
            *a += b;
        }
        Exponents(x)
    }

    fn div(&self, o: &Exponents) -> Exponents {
        let mut x = self.0;
        for (a, b) in x.iter_mut().zip(o.0) {
            *a -= b;
        }
        Exponents(x)
    }

    /// `q^-1 u^2` style factor list; empty for the unit monomial.
    pub fn factors(&self) -> String {
        let mut parts = Vec::new();
        for v in Var::ALL {
            match self.get(v) {
                0 => {}
                1 => parts.push(v.name().to_string()),
                e => parts.push(format!("{}^{}", v.name(), e)),
            }
        }
        parts.join(" ")
    }
}

/// A finite sum of rational multiples of Laurent monomials.
///
/// Terms are kept sorted by exponent vector with no zero coefficients, so
/// structural equality is mathematical equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(Exponents, Rational)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Exponents::ONE)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rational::from_int(n))
    }

    pub fn term(c: Rational, e: Exponents) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(e, c)] }
        }
    }

    pub fn var(v: Var) -> Self {
        Self::term(Rational::one(), Exponents::of(v, 1))
    }

    /// `var^e`.
    pub fn var_pow(v: Var, e: i16) -> Self {
        Self::term(Rational::one(), Exponents::of(v, e))
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        Self::var_pow(Var::Q, e as i16)
    }

    /// `q - q^-1`, the ubiquitous deformation factor.
    pub fn q_minus_qinv() -> Self {
        Self::q_pow(1) - Self::q_pow(-1)
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponents, Rational)>>(it: I) -> Self {
        let mut map: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for (e, c) in it {
            *map.entry(e).or_default() += &c;
        }
        LaurentPoly {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(Exponents, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The value if this is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(e, c)] if e.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// `Some((c, e))` if this is the single term `c * x^e`.
    pub fn as_monomial(&self) -> Option<(&Rational, &Exponents)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((c, e)),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    fn mul_term(&self, c: &Rational, m: &Exponents) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, x)| (e.mul(m), x * c)).collect(),
        }
    }

    /// Multiplicative inverse of a single term.
    pub fn monomial_inverse(&self) -> Option<Self> {
        let (c, e) = self.as_monomial()?;
        Some(Self::term(c.recip(), Exponents::ONE.div(e)))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    fn merge(a: &[(Exponents, Rational)], b: &[(Exponents, Rational)], negate_b: bool) -> Self {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let c = if negate_b { -b[j].1.clone() } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate_b { -t.1.clone() } else { t.1.clone() };
            out.push((t.0, c));
        }
        LaurentPoly { terms: out }
    }

    /// Minimum and maximum exponent of `v` over the support.
    fn degree_range(&self, v: Var) -> Option<(i16, i16)> {
        let mut it = self.terms.iter().map(|(e, _)| e.get(v));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x))))
    }

    /// Exact quotient `self / g`.
    ///
    /// Lex-leading-term division; each quotient exponent is confined to the
    /// per-variable degree box forced by `h * g = f`, which makes the loop
    /// finite and detects non-divisibility.
    pub fn div_exact(&self, g: &LaurentPoly) -> Result<LaurentPoly> {
        if g.is_zero() {
            return Err(Error::NotDivisible(format!("({self}) / 0")));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if let Some(inv) = g.monomial_inverse() {
            return Ok(self * &inv);
        }
        let mut bounds = [(0i16, 0i16); 5];
        for v in Var::ALL {
            let (flo, fhi) = self.degree_range(v).unwrap();
            let (glo, ghi) = g.degree_range(v).unwrap();
            bounds[v as usize] = (flo - glo, fhi - ghi);
        }
        let (g_lead_e, g_lead_c) = g.terms.last().unwrap().clone();
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((e, c)) = rem.terms.last().cloned() {
            let qe = e.div(&g_lead_e);
            let inside = Var::ALL.iter().all(|&v| {
                let (lo, hi) = bounds[v as usize];
                (lo..=hi).contains(&qe.get(v))
            });
            if !inside {
                return Err(Error::NotDivisible(format!("({self}) / ({g})")));
            }
            let qc = &c / &g_lead_c;
            rem = &rem - &g.mul_term(&qc, &qe);
            quotient.push((qe, qc));
        }
        Ok(Self::from_terms(quotient))
    }

    /// Substitute `var = 1`.
    pub fn eval_one(&self, var: Var) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| {
            let mut x = *e;
            x.0[var as usize] = 0;
            (x, c.clone())
        }))
    }

    /// Specialization `q = 1`.
    pub fn eval_q1(&self) -> Self {
        self.eval_one(Var::Q)
    }

    /// `(f / (1 - q))|_{q=1}`: the first-order rate at which `f` vanishes at `q = 1`.
    pub fn classical_rate(&self) -> Result<Self> {
        let one_minus_q = Self::one() - Self::var(Var::Q);
        Ok(self.div_exact(&one_minus_q)?.eval_q1())
    }

    /// Substitute `var -> m` for a single-term `m` (negative powers use `m^-1`).
    pub fn subst_monomial(&self, var: Var, m: &LaurentPoly) -> Result<Self> {
        let inv = m
            .monomial_inverse()
            .ok_or_else(|| Error::Invalid(format!("substitution {m} is not a monomial")))?;
        let mut acc = Self::zero();
        for (e, c) in &self.terms {
            let k = e.get(var);
            let mut rest = *e;
            rest.0[var as usize] = 0;
            let base = Self::term(c.clone(), rest);
            let p = if k >= 0 { m.pow(k as u32) } else { inv.pow((-k) as u32) };
            acc += &(&base * &p);
        }
        Ok(acc)
    }

    /// Coefficient of `var^k`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, var: Var, k: i16) -> Self {
        Self::from_terms(self.terms.iter().filter(|(e, _)| e.get(var) == k).map(|(e, c)| {
            let mut x = *e;
            x.0[var as usize] = 0;
            (x, c.clone())
        }))
    }

    /// Exponents of `var` that occur, ascending.
    pub fn powers_of(&self, var: Var) -> Vec<i16> {
        let mut v: Vec<i16> = self.terms.iter().map(|(e, _)| e.get(var)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Multiply by `var^k`.
    pub fn shift(&self, var: Var, k: i16) -> Self {
        self.mul_term(&Rational::one(), &Exponents::of(var, k))
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::merge(&self.terms, &rhs.terms, false)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::merge(&self.terms, &rhs.terms, true)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if rhs.terms.len() == 1 {
            let (e, c) = &rhs.terms[0];
            let out = self.mul_term(c, e);
            return out;
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return rhs.mul_term(c, e);
        }
        let mut map: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                *map.entry(ea.mul(eb)).or_default() += &(ca * cb);
            }
        }
        LaurentPoly {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self - rhs;
    }
}

impl From<i64> for LaurentPoly {
    fn from(n: i64) -> Self {
        LaurentPoly::int(n)
    }
}

impl From<Rational> for LaurentPoly {
    fn from(c: Rational) -> Self {
        LaurentPoly::constant(c)
    }
}

/// Writes one signed term `c x^e` without a leading separator.
pub(crate) fn write_term(out: &mut String, c: &Rational, factors: &str) {
    out.push_str(&c.to_string());
    if !factors.is_empty() {
        out.push(' ');
        out.push_str(factors);
    }
}

/// Joins signed terms as `a + b - c`.
pub(crate) fn join_terms(terms: Vec<(Rational, String)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (c, f)) in terms.into_iter().enumerate() {
        if k == 0 {
            write_term(&mut out, &c, &f);
        } else if c.is_negative() {
            out.push_str(" - ");
            write_term(&mut out, &c.abs(), &f);
        } else {
            out.push_str(" + ");
            write_term(&mut out, &c, &f);
        }
    }
    out
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().map(|(e, c)| (c.clone(), e.factors())).collect();
        f.write_str(&join_terms(terms))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> LaurentPoly {
        LaurentPoly::var(Var::Q)
    }

    #[test]
    fn additive_inverse_and_identity() {
        assert!((q() + -q()).is_zero());
        let f = q() * LaurentPoly::var(Var::U) + LaurentPoly::int(3);
        assert_eq!(&f * &LaurentPoly::one(), f);
    }

    #[test]
    fn expand_difference_of_squares() {
        let lhs = LaurentPoly::q_minus_qinv() * (LaurentPoly::q_pow(1) + LaurentPoly::q_pow(-1));
        assert_eq!(lhs, LaurentPoly::q_pow(2) - LaurentPoly::q_pow(-2));
    }

    #[test]
    fn exact_division_examples() {
        let f = LaurentPoly::q_pow(2) - LaurentPoly::one();
        assert_eq!(f.div_exact(&LaurentPoly::q_minus_qinv()).unwrap(), q());
        assert_eq!(f.div_exact(&LaurentPoly::one()).unwrap(), f);
        let g = LaurentPoly::one() - q();
        let expected = -LaurentPoly::q_pow(-1) - LaurentPoly::one();
        assert_eq!(LaurentPoly::q_minus_qinv().div_exact(&g).unwrap(), expected);
        assert!(matches!(
            LaurentPoly::q_pow(2).div_exact(&g),
            Err(Error::NotDivisible(_))
        ));
        assert!(LaurentPoly::one().div_exact(&LaurentPoly::zero()).is_err());
    }

    #[test]
    fn specialization_at_q1() {
        let f = LaurentPoly::q_pow(2) + LaurentPoly::q_pow(-1);
        assert_eq!(f.eval_q1(), LaurentPoly::int(2));
        let g = LaurentPoly::q_minus_qinv() * LaurentPoly::var(Var::U);
        assert!(g.eval_q1().is_zero());
        let h = LaurentPoly::int(3) + LaurentPoly::var(Var::Lambda) * q();
        assert_eq!(h.eval_q1(), LaurentPoly::int(3) + LaurentPoly::var(Var::Lambda));
    }

    #[test]
    fn classical_rate_examples() {
        assert_eq!((LaurentPoly::one() - q()).classical_rate().unwrap(), LaurentPoly::one());
        assert_eq!(
            LaurentPoly::q_minus_qinv().classical_rate().unwrap(),
            LaurentPoly::int(-2)
        );
        let f = LaurentPoly::q_pow(2) - LaurentPoly::q_pow(-2);
        assert_eq!(f.classical_rate().unwrap(), LaurentPoly::int(-4));
        assert!(LaurentPoly::one().classical_rate().is_err());
    }

    #[test]
    fn display_orders_terms() {
        let f = LaurentPoly::one() + LaurentPoly::term(Rational::new(-3, 2), Exponents([-1, 2, 0, 0, 0]));
        assert_eq!(f.to_string(), "-3/2 q^-1 u^2 + 1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn monomial_substitution() {
        // u -> q^-2 u applied to u^-1 + u
        let f = LaurentPoly::var_pow(Var::U, -1) + LaurentPoly::var(Var::U);
        let m = LaurentPoly::q_pow(-2) * LaurentPoly::var(Var::U);
        let g = f.subst_monomial(Var::U, &m).unwrap();
        let expected = LaurentPoly::q_pow(2) * LaurentPoly::var_pow(Var::U, -1) + m;
        assert_eq!(g, expected);
    }
}
