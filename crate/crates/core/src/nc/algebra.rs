use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use super::element::NCElement;
use super::generator::{is_normal, word_to_string, Gen, GenKey, Kind, Word};
use crate::coeff::{Exponents, LaurentPoly, Rational};
use crate::error::{Error, Result};

/// Default bound on rewrite steps per top-level reduction.
pub const DEFAULT_REWRITE_CAP: usize = 1_000_000;

/// Environment variable overriding [`DEFAULT_REWRITE_CAP`].
pub const REWRITE_CAP_ENV: &str = "TQA_REWRITE_CAP";

/// The presented algebras this crate knows how to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Family {
    /// `U_q(gl_N)` in the `T`, `Tbar` presentation.
    Gl,
    /// `U'_q(o_N)`, generated by `s_ij` with `i > j`.
    Orth,
    /// The extended symplectic algebra on the block-triangular support.
    SpExt,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Gl => "gl",
            Family::Orth => "o",
            Family::SpExt => "sp",
        }
    }
}

/// One labelled defining relation, stored unreduced (it must reduce to 0).
#[derive(Clone, Debug)]
pub struct Relation {
    pub label: String,
    pub element: NCElement,
}

/// Rewriting strategy for the unmemoized reducer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// A presented algebra together with its oriented rewrite system.
///
/// Generators are ordered by `(kind, i, j)`; a word is normal when it is
/// non-decreasing in that order. Each out-of-order adjacent pair has a rule
/// obtained by solving one defining relation for it. Diagonal `t[i,i]^e`
/// are handled by a q-commutation exponent table, so powers of any sign
/// reduce without separate rules.
pub struct Algebra {
    family: Family,
    size: usize,
    generators: Vec<Gen>,
    relations: Vec<Relation>,
    rules: HashMap<(Gen, Gen), NCElement>,
    /// `D_i x = q^c x D_i` for diagonal `D_i = t[i,i]`.
    diag_comm: HashMap<(u8, GenKey), i32>,
    cap: usize,
    memo: RwLock<HashMap<(Word, Gen), NCElement>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("family", &self.family)
            .field("size", &self.size)
            .field("generators", &self.generators.len())
            .field("rules", &self.rules.len())
            .finish()
    }
}

fn cap_from_env() -> usize {
    std::env::var(REWRITE_CAP_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_REWRITE_CAP)
}

/// Quadratic words of `e` that are out of order.
fn out_of_order_pairs(e: &NCElement) -> Vec<(Gen, Gen)> {
    e.terms()
        .filter(|(w, _)| w.len() == 2 && w[0].key() > w[1].key())
        .map(|(w, _)| (w[0], w[1]))
        .collect()
}

impl Algebra {
    /// Orients `relations` into a rewrite system over `generators`.
    ///
    /// For every out-of-order pair of letters `(g, h)` the relation used is
    /// one where `g*h` has a unit coefficient, preferring relations that also
    /// contain `h*g` and few other out-of-order quadratic words.
    pub fn from_relations(
        family: Family,
        size: usize,
        generators: Vec<Gen>,
        relations: Vec<Relation>,
    ) -> Result<Algebra> {
        let mut letters = generators.clone();
        for g in &generators {
            if g.is_diag() {
                letters.push(g.with_exp(-1));
            }
        }

        let mut candidates: HashMap<(Gen, Gen), Vec<usize>> = HashMap::new();
        for (idx, r) in relations.iter().enumerate() {
            for pair in out_of_order_pairs(&r.element) {
                candidates.entry(pair).or_default().push(idx);
            }
        }

        let mut rules = HashMap::new();
        for &g in &letters {
            for &h in &letters {
                if g.key() <= h.key() {
                    continue;
                }
                let word = vec![g, h];
                let swapped = vec![h, g];
                let mut best: Option<((usize, usize, usize), NCElement)> = None;
                for &idx in candidates.get(&(g, h)).map(|v| v.as_slice()).unwrap_or(&[]) {
                    let r = &relations[idx].element;
                    let c = r.coeff(&word);
                    let Some(inv) = c.monomial_inverse() else { continue };
                    let mut rest = r.clone();
                    rest.add_term(word.clone(), &-&c);
                    let score = (
                        usize::from(rest.coeff(&swapped).is_zero()),
                        out_of_order_pairs(&rest).len(),
                        rest.len(),
                    );
                    if best.as_ref().is_none_or(|(s, _)| score < *s) {
                        best = Some((score, rest.scale(&-inv)));
                    }
                }
                match best {
                    Some((_, rhs)) => {
                        rules.insert((g, h), rhs);
                    }
                    None => return Err(Error::Invalid(format!("no relation orients the pair {g}*{h}"))),
                }
            }
        }

        let diag_comm = Self::diagonal_table(&letters, &rules)?;
        Ok(Algebra {
            family,
            size,
            generators,
            relations,
            rules,
            diag_comm,
            cap: cap_from_env(),
            memo: RwLock::new(HashMap::new()),
        })
    }

    /// An algebra with no generators or rules; only [`Algebra::entry`] is
    /// meaningful. Used to write down relations before orienting them.
    pub fn shell(family: Family, size: usize) -> Algebra {
        Algebra {
            family,
            size,
            generators: Vec::new(),
            relations: Vec::new(),
            rules: HashMap::new(),
            diag_comm: HashMap::new(),
            cap: cap_from_env(),
            memo: RwLock::new(HashMap::new()),
        }
    }

    /// Extracts `D_i x = q^c x D_i` from the rules touching diagonals, and
    /// checks that the `D_i^-1` rules agree.
    fn diagonal_table(letters: &[Gen], rules: &HashMap<(Gen, Gen), NCElement>) -> Result<HashMap<(u8, GenKey), i32>> {
        // Coefficient of the swapped word if `rule` is exactly `q^k * (h g)`.
        let q_power = |rule: &NCElement, swapped: &[Gen]| -> Option<i32> {
            if rule.len() != 1 {
                return None;
            }
            let c = rule.coeff(swapped);
            let (r, e) = c.as_monomial()?;
            let k = e.get(crate::coeff::Var::Q);
            (r.is_one() && *e == Exponents::of(crate::coeff::Var::Q, k)).then_some(k as i32)
        };
        let bad = |g: Gen, h: Gen| Error::Invalid(format!("diagonal pair {g}*{h} is not a q-commutation"));
        let mut table = HashMap::new();
        for &d in letters.iter().filter(|g| g.is_diag() && g.exp == 1) {
            for &x in letters.iter().filter(|x| x.key() != d.key() && x.exp == 1) {
                // c with D x = q^c x D
                let c = if d.key() > x.key() {
                    q_power(&rules[&(d, x)], &[x, d]).ok_or_else(|| bad(d, x))?
                } else {
                    -q_power(&rules[&(x, d)], &[d, x]).ok_or_else(|| bad(x, d))?
                };
                let dinv = d.with_exp(-1);
                // D^-1 x = q^-c x D^-1
                let c_inv = if d.key() > x.key() {
                    q_power(&rules[&(dinv, x)], &[x, dinv]).ok_or_else(|| bad(dinv, x))?
                } else {
                    -q_power(&rules[&(x, dinv)], &[dinv, x]).ok_or_else(|| bad(x, dinv))?
                };
                if c_inv != -c {
                    return Err(Error::Invalid(format!(
                        "inconsistent diagonal exponents for {d} and {x}"
                    )));
                }
                table.insert((d.i, x.key()), c);
            }
        }
        Ok(table)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// `N` for `gl_N`, `o_N`; `2n` for the symplectic family.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn generators(&self) -> &[Gen] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Override the rewrite step cap.
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    /// Oriented rules `(g, h) -> rhs`, sorted by left-hand side.
    pub fn rules(&self) -> Vec<(Gen, Gen, NCElement)> {
        let mut v: Vec<_> = self.rules.iter().map(|((g, h), r)| (*g, *h, r.clone())).collect();
        v.sort_by_key(|a| (a.0, a.1));
        v
    }

    /// q-commutation exponents of the diagonal generators: `(D_i, x, c)`
    /// with `D_i x = q^c x D_i`.
    pub fn diagonal_exponents(&self) -> Vec<(Gen, GenKey, i32)> {
        let mut v: Vec<_> = self
            .diag_comm
            .iter()
            .map(|((i, k), c)| (Gen::diag(*i as usize, 1), *k, *c))
            .collect();
        v.sort();
        v
    }

    /// Does this algebra contain `g` as a generator (diagonal powers included)?
    pub fn has_generator(&self, g: Gen) -> bool {
        self.generators.iter().any(|x| x.key() == g.key())
    }

    /// The matrix entry `kind[i,j]` as an element: a generator, a unit
    /// diagonal, an inverse diagonal, or zero outside the support.
    pub fn entry(&self, kind: Kind, i: usize, j: usize) -> NCElement {
        let n = self.size;
        if i == 0 || j == 0 || i > n || j > n {
            return NCElement::zero();
        }
        match (self.family, kind) {
            (Family::Gl, Kind::T) => {
                if i < j {
                    NCElement::zero()
                } else if i == j {
                    NCElement::gen(Gen::diag(i, 1))
                } else {
                    NCElement::gen(Gen::t(i, j))
                }
            }
            (Family::Gl, Kind::TBar) => {
                if i > j {
                    NCElement::zero()
                } else if i == j {
                    NCElement::gen(Gen::diag(i, -1))
                } else {
                    NCElement::gen(Gen::tbar(i, j))
                }
            }
            (Family::Orth, Kind::S) => {
                if i < j {
                    NCElement::zero()
                } else if i == j {
                    NCElement::one()
                } else {
                    NCElement::gen(Gen::s(i, j))
                }
            }
            (Family::SpExt, Kind::S) => {
                if j <= i || (j == i + 1 && i % 2 == 1) {
                    NCElement::gen(Gen::s(i, j))
                } else {
                    NCElement::zero()
                }
            }
            _ => NCElement::zero(),
        }
    }

    /// Shorthand for `entry(Kind::S, i, j)`.
    pub fn s(&self, i: usize, j: usize) -> NCElement {
        self.entry(Kind::S, i, j)
    }

    /// Replacement for the adjacent out-of-order pair `last * g`.
    fn swap(&self, last: Gen, g: Gen) -> Result<NCElement> {
        if last.is_diag() || g.is_diag() {
            let (d, x, sign) = if last.is_diag() && last.key() > g.key() {
                (last, g, 1)
            } else {
                (g, last, -1)
            };
            let c = *self
                .diag_comm
                .get(&(d.i, x.key()))
                .ok_or_else(|| Error::Invalid(format!("no diagonal exponent for {d} and {x}")))?;
            let k = sign * c * d.exp as i32 * x.exp as i32;
            return Ok(NCElement::from_word(vec![g, last], LaurentPoly::q_pow(k)));
        }
        self.rules
            .get(&(last, g))
            .cloned()
            .ok_or_else(|| Error::Invalid(format!("no rule for {last}*{g}")))
    }

    fn tick(&self, steps: &mut usize, w: &[Gen], g: Gen) -> Result<()> {
        *steps += 1;
        if *steps > self.cap {
            let mut word = w.to_vec();
            word.push(g);
            return Err(Error::NonTermination {
                cap: self.cap,
                word: word_to_string(&word),
            });
        }
        Ok(())
    }

    /// Normal form of `w * g` for a normal word `w`.
    fn mul_word_gen(&self, w: &[Gen], g: Gen, steps: &mut usize) -> Result<NCElement> {
        let Some(&last) = w.last() else {
            return Ok(NCElement::gen(g));
        };
        match last.key().cmp(&g.key()) {
            std::cmp::Ordering::Less => {
                let mut v = w.to_vec();
                v.push(g);
                return Ok(NCElement::word(&v));
            }
            std::cmp::Ordering::Equal => {
                let mut v = w[..w.len() - 1].to_vec();
                if last.is_diag() {
                    let e = last.exp as i32 + g.exp as i32;
                    if e != 0 {
                        let e = i8::try_from(e).map_err(|_| Error::Invalid(format!("exponent overflow at {g}")))?;
                        v.push(g.with_exp(e));
                    }
                } else {
                    v.push(last);
                    v.push(g);
                }
                return Ok(NCElement::word(&v));
            }
            std::cmp::Ordering::Greater => {}
        }

        let key = (w.to_vec(), g);
        if let Some(hit) = self.memo.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        self.tick(steps, w, g)?;
        let prefix = NCElement::word(&w[..w.len() - 1]);
        let mut out = NCElement::zero();
        for (rw, c) in self.swap(last, g)?.terms() {
            let mut cur = prefix.clone();
            for &h in rw {
                cur = self.mul_elem_gen(&cur, h, steps)?;
            }
            out.add_scaled(&cur, c);
        }
        self.memo.write().unwrap().insert(key, out.clone());
        Ok(out)
    }

    /// Normal form of `e * g` for a normal element `e`.
    fn mul_elem_gen(&self, e: &NCElement, g: Gen, steps: &mut usize) -> Result<NCElement> {
        let mut out = NCElement::zero();
        for (w, c) in e.terms() {
            let p = self.mul_word_gen(w, g, steps)?;
            out.add_scaled(&p, c);
        }
        Ok(out)
    }

    /// Normal form of `e * w` for a normal element `e`.
    fn mul_elem_word(&self, e: &NCElement, w: &[Gen], steps: &mut usize) -> Result<NCElement> {
        let mut cur = e.clone();
        for &h in w {
            if cur.is_zero() {
                break;
            }
            cur = self.mul_elem_gen(&cur, h, steps)?;
        }
        Ok(cur)
    }

    /// Rewrites `e` into a linear combination of normal words.
    ///
    /// Two elements are equal in the algebra iff their normal forms are
    /// identical. Fails with [`Error::NonTermination`] past the step cap.
    pub fn normal_form(&self, e: &NCElement) -> Result<NCElement> {
        let mut steps = 0;
        let mut out = NCElement::zero();
        for (w, c) in e.terms() {
            if is_normal(w) {
                out.add_term(w.clone(), c);
                continue;
            }
            // the longest normal prefix needs no work
            let mut split = 1;
            while split < w.len() && is_normal(&w[..=split]) {
                split += 1;
            }
            let head = NCElement::word(&w[..split]);
            let p = self.mul_elem_word(&head, &w[split..], &mut steps)?;
            out.add_scaled(&p, c);
        }
        Ok(out)
    }

    /// Normal-ordered product `a * b`.
    pub fn mul(&self, a: &NCElement, b: &NCElement) -> Result<NCElement> {
        let a = self.normal_form(a)?;
        let mut steps = 0;
        let mut out = NCElement::zero();
        for (w, c) in b.terms() {
            let p = self.mul_elem_word(&a, w, &mut steps)?;
            out.add_scaled(&p, c);
        }
        Ok(out)
    }

    /// Normal-ordered product of a sequence of factors, left to right.
    pub fn product(&self, factors: &[NCElement]) -> Result<NCElement> {
        let mut acc = NCElement::one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, a: &NCElement, k: u32) -> Result<NCElement> {
        let mut acc = NCElement::one();
        for _ in 0..k {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// `a*b - b*a`, normal-ordered.
    pub fn commutator(&self, a: &NCElement, b: &NCElement) -> Result<NCElement> {
        Ok(&self.mul(a, b)? - &self.mul(b, a)?)
    }

    /// `(q*a*b - b*a) / (q - q^-1)`, the q-bracket that builds `s_kl` from
    /// `s_kj` and `s_jl`. Fails if the quotient is not exact.
    pub fn q_bracket(&self, a: &NCElement, b: &NCElement) -> Result<NCElement> {
        let ab = self.mul(a, b)?.scale(&LaurentPoly::q_pow(1));
        let ba = self.mul(b, a)?;
        (&ab - &ba).div_exact(&LaurentPoly::q_minus_qinv())
    }

    /// `(a*b - q*b*a) / (q - q^-1)`.
    pub fn q_bracket_rev(&self, a: &NCElement, b: &NCElement) -> Result<NCElement> {
        let ab = self.mul(a, b)?;
        let ba = self.mul(b, a)?.scale(&LaurentPoly::q_pow(1));
        (&ab - &ba).div_exact(&LaurentPoly::q_minus_qinv())
    }

    /// Reduces `e` one redex at a time without memoization, choosing the
    /// leftmost or rightmost reducible position. Used to probe confluence.
    pub fn reduce_with(&self, e: &NCElement, strategy: Strategy) -> Result<NCElement> {
        let mut work: std::collections::BTreeMap<Word, LaurentPoly> =
            e.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut done = NCElement::zero();
        let mut steps = 0usize;
        while let Some((w, c)) = work.pop_first() {
            let redexes = (0..w.len().saturating_sub(1)).filter(|&p| {
                let (a, b) = (w[p], w[p + 1]);
                a.key() > b.key() || (a.key() == b.key() && a.is_diag())
            });
            let pos = match strategy {
                Strategy::Leftmost => redexes.min(),
                Strategy::Rightmost => redexes.max(),
            };
            let Some(p) = pos else {
                done.add_term(w, &c);
                continue;
            };
            steps += 1;
            if steps > self.cap {
                return Err(Error::NonTermination {
                    cap: self.cap,
                    word: word_to_string(&w),
                });
            }
            let (a, b) = (w[p], w[p + 1]);
            let repl = if a.key() == b.key() {
                let e = a.exp as i32 + b.exp as i32;
                if e == 0 {
                    NCElement::one()
                } else {
                    NCElement::gen(a.with_exp(e as i8))
                }
            } else {
                self.swap(a, b)?
            };
            for (rw, rc) in repl.terms() {
                let mut nw = w[..p].to_vec();
                nw.extend_from_slice(rw);
                nw.extend_from_slice(&w[p + 2..]);
                let coeff = &c * rc;
                let slot = work.entry(nw).or_default();
                *slot += &coeff;
            }
            work.retain(|_, c| !c.is_zero());
        }
        Ok(done)
    }

    /// Number of memoized products; useful for profiling.
    pub fn memo_len(&self) -> usize {
        self.memo.read().unwrap().len()
    }

    /// A rational multiple of a generator entry; convenience for tests.
    pub fn scaled_entry(&self, c: i64, kind: Kind, i: usize, j: usize) -> NCElement {
        self.entry(kind, i, j).scale_rational(&Rational::from_int(c))
    }
}
