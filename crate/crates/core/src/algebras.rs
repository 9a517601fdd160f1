//! The concrete presented algebras, their relation families, and the
//! embeddings into `U_q(gl_N)`.

use crate::coeff::LaurentPoly;
use crate::error::{Error, Result};
use crate::morphisms::GenMap;
use crate::nc::{Algebra, Family, Gen, Kind, NCElement, Relation};
use crate::report::{zero_or_witness, Report};

fn qp(k: i32) -> LaurentPoly {
    LaurentPoly::q_pow(k)
}

fn qq() -> LaurentPoly {
    LaurentPoly::q_minus_qinv()
}

fn delta(b: bool) -> i64 {
    i64::from(b)
}

/// Raw (unreduced) product of two entries.
fn raw(a: &NCElement, b: &NCElement) -> NCElement {
    a.concat(b)
}

/// Instances of the `T`/`T` relations (or `Tbar`/`Tbar` when `kind` is
/// `TBar`), one per index quadruple `(i, a, j, b)` with nonzero support.
pub fn gl_same_kind_relations(alg: &Algebra, kind: Kind) -> Vec<Relation> {
    let n = alg.size();
    let mut out = Vec::new();
    for i in 1..=n {
        for a in 1..=n {
            for j in 1..=n {
                for b in 1..=n {
                    let e = |x, y| alg.entry(kind, x, y);
                    let lhs = &raw(&e(i, a), &e(j, b)).scale(&qp((i == j) as i32))
                        - &raw(&e(j, b), &e(i, a)).scale(&qp((a == b) as i32));
                    let c = delta(b < a) - delta(i < j);
                    let rhs = raw(&e(j, a), &e(i, b)).scale(&(&qq() * &LaurentPoly::int(c)));
                    let r = &lhs - &rhs;
                    if !r.is_zero() {
                        out.push(Relation {
                            label: format!("{0}{0}[{i},{a},{j},{b}]", kind.name()),
                            element: r,
                        });
                    }
                }
            }
        }
    }
    out
}

/// Instances of the mixed `Tbar`/`T` relations.
pub fn gl_mixed_relations(alg: &Algebra) -> Vec<Relation> {
    let n = alg.size();
    let mut out = Vec::new();
    for i in 1..=n {
        for a in 1..=n {
            for j in 1..=n {
                for b in 1..=n {
                    let t = |x, y| alg.entry(Kind::T, x, y);
                    let tb = |x, y| alg.entry(Kind::TBar, x, y);
                    let lhs = &raw(&tb(i, a), &t(j, b)).scale(&qp((i == j) as i32))
                        - &raw(&t(j, b), &tb(i, a)).scale(&qp((a == b) as i32));
                    let rhs = &raw(&t(j, a), &tb(i, b)).scale(&LaurentPoly::int(delta(b < a)))
                        - &raw(&tb(j, a), &t(i, b)).scale(&LaurentPoly::int(delta(i < j)));
                    let r = &lhs - &rhs.scale(&qq());
                    if !r.is_zero() {
                        out.push(Relation {
                            label: format!("tbar-t[{i},{a},{j},{b}]"),
                            element: r,
                        });
                    }
                }
            }
        }
    }
    out
}

/// Number of index quadruples for which a same-kind `gl` relation is not
/// identically zero: both factors supported and distinct.
pub fn gl_same_kind_count(n: usize) -> usize {
    let supported = n * (n + 1) / 2;
    supported * supported - supported
}

/// Number of index quadruples for which the mixed relation has support:
/// every pair of a supported `tbar` and a supported `t`.
pub fn gl_mixed_count(n: usize) -> usize {
    let supported = n * (n + 1) / 2;
    supported * supported
}

fn gl_generators(n: usize) -> Vec<Gen> {
    let mut gens = Vec::new();
    for i in 1..=n {
        for j in 1..=i {
            gens.push(if i == j { Gen::diag(i, 1) } else { Gen::t(i, j) });
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            gens.push(Gen::tbar(i, j));
        }
    }
    gens.sort();
    gens
}

/// `U_q(gl_N)` with generators `t_ij` (`i >= j`) and `tbar_ij` (`i < j`);
/// `tbar_ii` is the inverse power of `t_ii`.
pub fn build_uq_gl(n: usize) -> Result<Algebra> {
    if n < 2 {
        return Err(Error::Invalid(format!("gl needs N >= 2, got {n}")));
    }
    // A shell algebra provides `entry` for writing down the relations.
    let shell = Algebra::shell(Family::Gl, n);
    let mut rels = gl_same_kind_relations(&shell, Kind::T);
    rels.extend(gl_same_kind_relations(&shell, Kind::TBar));
    rels.extend(gl_mixed_relations(&shell));
    Algebra::from_relations(Family::Gl, n, gl_generators(n), rels)
}

/// The defining relations of `U'_q(o_N)`: one per unordered pair of
/// distinct generators, in the six index patterns.
pub fn orth_relations(n: usize) -> Vec<Relation> {
    let s = |i, j| NCElement::gen(Gen::s(i, j));
    let comm = |x: &NCElement, y: &NCElement| &raw(x, y) - &raw(y, x);
    let qcomm = |x: &NCElement, y: &NCElement| &raw(x, y).scale(&qp(1)) - &raw(y, x);
    let mut out = Vec::new();
    for a in 1..=n {
        for b in 1..a {
            for c in 1..b {
                for d in 1..c {
                    out.push(Relation {
                        label: format!("commute[{a}{b},{c}{d}]"),
                        element: comm(&s(a, b), &s(c, d)),
                    });
                    out.push(Relation {
                        label: format!("commute[{a}{d},{b}{c}]"),
                        element: comm(&s(a, d), &s(b, c)),
                    });
                    // i>k>j>l with (i,j,k,l) = (a,c,b,d)
                    let rhs = &raw(&s(b, c), &s(a, d)) - &raw(&s(a, b), &s(c, d));
                    out.push(Relation {
                        label: format!("cross[{a}{c},{b}{d}]"),
                        element: &comm(&s(a, c), &s(b, d)) - &rhs.scale(&qq()),
                    });
                }
                out.push(Relation {
                    label: format!("chain[{a}{b},{b}{c}]"),
                    element: &qcomm(&s(a, b), &s(b, c)) - &s(a, c).scale(&qq()),
                });
                out.push(Relation {
                    label: format!("row[{a}{c},{a}{b}]"),
                    element: &qcomm(&s(a, c), &s(a, b)) - &s(b, c).scale(&qq()),
                });
                out.push(Relation {
                    label: format!("column[{b}{c},{a}{c}]"),
                    element: &qcomm(&s(b, c), &s(a, c)) - &s(a, b).scale(&qq()),
                });
            }
        }
    }
    out
}

/// `U'_q(o_N)` with generators `s_ij`, `i > j`.
pub fn build_uqp_o(n: usize) -> Result<Algebra> {
    if n < 2 {
        return Err(Error::Invalid(format!("o needs N >= 2, got {n}")));
    }
    let mut gens = Vec::new();
    for i in 1..=n {
        for j in 1..i {
            gens.push(Gen::s(i, j));
        }
    }
    Algebra::from_relations(Family::Orth, n, gens, orth_relations(n))
}

/// All instances of the reflection relation written entrywise, over the
/// support of `alg` (unit diagonal and zero upper triangle in the
/// orthogonal case). Identically zero instances are dropped.
pub fn reflection_relations(alg: &Algebra) -> Vec<Relation> {
    let n = alg.size();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    let r = reflection_instance(alg, i, j, k, l);
                    if !r.is_zero() {
                        out.push(Relation {
                            label: format!("refl[{i}{j},{k}{l}]"),
                            element: r,
                        });
                    }
                }
            }
        }
    }
    out
}

/// One entrywise reflection relation, moved to one side, unreduced.
pub fn reflection_instance(alg: &Algebra, i: usize, j: usize, k: usize, l: usize) -> NCElement {
    let s = |a, b| alg.s(a, b);
    let e = |x: bool| x as i32;
    let lhs = &raw(&s(i, j), &s(k, l)).scale(&qp(e(j == k) + e(i == k)))
        - &raw(&s(k, l), &s(i, j)).scale(&qp(e(j == l) + e(i == l)));
    let c1 = delta(l < j) - delta(i < k);
    let mut rhs = raw(&s(k, j), &s(i, l)).scale(&(&qp(e(j == i)) * &LaurentPoly::int(c1)));
    if l < i {
        rhs = &rhs + &raw(&s(k, i), &s(l, j)).scale(&qp(e(j == l)));
    }
    if j < k {
        rhs = &rhs - &raw(&s(i, k), &s(j, l)).scale(&qp(e(i == k)));
    }
    let mut r = &lhs - &rhs.scale(&qq());
    let c2 = delta(l < j && j < i) - delta(j < i && i < k);
    if c2 != 0 {
        let coeff = &(&qq() * &qq()) * &LaurentPoly::int(c2);
        r = &r - &raw(&s(k, i), &s(j, l)).scale(&coeff);
    }
    r
}

/// Is `(i, j)` on the block-triangular symplectic support?
pub fn sp_supported(i: usize, j: usize) -> bool {
    j <= i || (j == i + 1 && i % 2 == 1)
}

/// The extended symplectic algebra on `2n x 2n` block-triangular matrices,
/// presented by the entrywise reflection relations.
pub fn build_uqp_sp_ext(n: usize) -> Result<Algebra> {
    if n < 1 {
        return Err(Error::Invalid("sp needs n >= 1".into()));
    }
    let size = 2 * n;
    let mut gens = Vec::new();
    for i in 1..=size {
        for j in 1..=size {
            if sp_supported(i, j) {
                gens.push(Gen::s(i, j));
            }
        }
    }
    gens.sort();
    let shell = Algebra::shell(Family::SpExt, size);
    let rels = reflection_relations(&shell);
    Algebra::from_relations(Family::SpExt, size, gens, rels)
}

/// Build by family name: `gl` and `o` take `N`, `sp` takes `n` (size `2n`).
pub fn build(family: Family, n: usize) -> Result<Algebra> {
    match family {
        Family::Gl => build_uq_gl(n),
        Family::Orth => build_uqp_o(n),
        Family::SpExt => build_uqp_sp_ext(n),
    }
}

/// Pass iff every relation normal-forms to zero.
pub fn check_relation_set(alg: &Algebra, relations: &[Relation], claim: &str) -> Result<Report> {
    let mut report = Report::new("relations")
        .family(alg.family().name())
        .param("n", alg.size() as i64);
    for r in relations {
        report.check(&r.label, &r.element.to_string(), claim, || {
            Ok(zero_or_witness(&alg.normal_form(&r.element)?))
        })?;
    }
    Ok(report)
}

/// `s_k = s_{k+1,k}`.
pub fn serre_generator(k: usize) -> NCElement {
    NCElement::gen(Gen::s(k + 1, k))
}

/// The Serre type relations among `s_1, ..., s_{N-1}`, plus commutation of
/// distant generators.
pub fn serre_relations(n: usize) -> Vec<Relation> {
    let s = serre_generator;
    let w = |xs: &[&NCElement]| xs.iter().skip(1).fold(xs[0].clone(), |acc, x| raw(&acc, x));
    let qsum = &qp(1) + &qp(-1);
    let tail = &qp(-1) * &(&qq() * &qq());
    let mut out = Vec::new();
    for k in 1..n.saturating_sub(1) {
        let (a, b) = (s(k), s(k + 1));
        let r1 = &(&w(&[&a, &b, &b]) - &w(&[&b, &a, &b]).scale(&qsum)) + &w(&[&b, &b, &a]);
        out.push(Relation {
            label: format!("serre[{k},{}]", k + 1),
            element: &r1 + &a.scale(&tail),
        });
        let r2 = &(&w(&[&a, &a, &b]) - &w(&[&a, &b, &a]).scale(&qsum)) + &w(&[&b, &a, &a]);
        out.push(Relation {
            label: format!("serre[{},{k}]", k + 1),
            element: &r2 + &b.scale(&tail),
        });
    }
    for k in 1..n {
        for l in k + 2..n {
            out.push(Relation {
                label: format!("distant[{k},{l}]"),
                element: &raw(&s(k), &s(l)) - &raw(&s(l), &s(k)),
            });
        }
    }
    out
}

/// The generalized Serre relations
/// `s_ij s_ki^2 - (q+q^-1) s_ki s_ij s_ki + s_ki^2 s_ij = -q^-1 (q-q^-1)^2 s_ij`
/// for `k > i > j`.
pub fn generalized_serre_relations(n: usize) -> Vec<Relation> {
    let s = |i, j| NCElement::gen(Gen::s(i, j));
    let qsum = &qp(1) + &qp(-1);
    let tail = &qp(-1) * &(&qq() * &qq());
    let mut out = Vec::new();
    for k in 1..=n {
        for i in 1..k {
            for j in 1..i {
                let (x, y) = (s(i, j), s(k, i));
                let r = &(&raw(&x, &raw(&y, &y)) - &raw(&y, &raw(&x, &y)).scale(&qsum)) + &raw(&raw(&y, &y), &x);
                out.push(Relation {
                    label: format!("gserre[{k},{i},{j}]"),
                    element: &r + &x.scale(&tail),
                });
            }
        }
    }
    out
}

/// `s_kl` rebuilt from `s_1, ..., s_{N-1}` by iterated q-brackets
/// `s_kl = (q s_{k,l+1} s_{l+1,l} - s_{l+1,l} s_{k,l+1}) / (q - q^-1)`.
pub fn s_from_serre_generators(alg: &Algebra, k: usize, l: usize) -> Result<NCElement> {
    s_from_serre_via(alg, k, l, l + 1)
}

/// As [`s_from_serre_generators`] but splitting the first bracket at `j`,
/// `l < j < k`.
pub fn s_from_serre_via(alg: &Algebra, k: usize, l: usize, j: usize) -> Result<NCElement> {
    if !(l < k && k <= alg.size()) {
        return Err(Error::Invalid(format!("s[{k},{l}] is not a generator")));
    }
    if k == l + 1 {
        return Ok(serre_generator(l));
    }
    if !(l < j && j < k) {
        return Err(Error::Invalid(format!("split index {j} not between {l} and {k}")));
    }
    let left = s_from_serre_generators(alg, k, j)?;
    let right = s_from_serre_generators(alg, j, l)?;
    alg.q_bracket(&left, &right)
}

/// `sum_k t_ik tbar_jk`: the orthogonal matrix entry inside `U_q(gl_N)`.
pub fn o_entry_in_gl(gl: &Algebra, i: usize, j: usize) -> Result<NCElement> {
    let mut out = NCElement::zero();
    for k in 1..=gl.size() {
        out = &out + &gl.mul(&gl.entry(Kind::T, i, k), &gl.entry(Kind::TBar, j, k))?;
    }
    Ok(out)
}

/// `s_ij -> sum_k t_ik tbar_jk`.
pub fn embed_o_in_gl(gl: &Algebra) -> Result<GenMap> {
    let mut m = GenMap::new("o-in-gl", false);
    for i in 1..=gl.size() {
        for j in 1..i {
            m.set(Gen::s(i, j), o_entry_in_gl(gl, i, j)?);
        }
    }
    Ok(m)
}

/// `q sum_k t_{i,2k-1} tbar_{j,2k} - sum_k t_{i,2k} tbar_{j,2k-1}`.
pub fn sp_entry_in_gl(gl: &Algebra, i: usize, j: usize) -> Result<NCElement> {
    let t = |a, b| gl.entry(Kind::T, a, b);
    let tb = |a, b| gl.entry(Kind::TBar, a, b);
    let mut out = NCElement::zero();
    for k in 1..=gl.size() / 2 {
        out = &out + &gl.mul(&t(i, 2 * k - 1), &tb(j, 2 * k))?.scale(&qp(1));
        out = &out - &gl.mul(&t(i, 2 * k), &tb(j, 2 * k - 1))?;
    }
    Ok(out)
}

/// The symplectic embedding `S = T G Tbar^t` into `U_q(gl_2n)`.
pub fn embed_sp_in_gl(gl: &Algebra) -> Result<GenMap> {
    if gl.size() % 2 == 1 {
        return Err(Error::OddSize(gl.size()));
    }
    let mut m = GenMap::new("sp-in-gl", false);
    for i in 1..=gl.size() {
        for j in 1..=gl.size() {
            if sp_supported(i, j) {
                m.set(Gen::s(i, j), sp_entry_in_gl(gl, i, j)?);
            }
        }
    }
    Ok(m)
}

/// The inverse of the embedded `s_{i,i+1}` (odd `i`): `q^-1 tbar_ii t_{i+1,i+1}`.
pub fn sp_superdiag_inverse_in_gl(i: usize) -> NCElement {
    NCElement::word(&[Gen::diag(i, -1), Gen::diag(i + 1, 1)]).scale(&qp(-1))
}

/// `s_{i+1,i+1} s_ii - q^2 s_{i+1,i} s_{i,i+1}` for odd `i`, over `alg`'s entries
/// or over an embedding.
pub fn sp_quadratic(
    entry: &dyn Fn(usize, usize) -> Result<NCElement>,
    mul: &dyn Fn(&NCElement, &NCElement) -> Result<NCElement>,
    i: usize,
) -> Result<NCElement> {
    let a = mul(&entry(i + 1, i + 1)?, &entry(i, i)?)?;
    let b = mul(&entry(i + 1, i)?, &entry(i, i + 1)?)?;
    Ok(&a - &b.scale(&qp(2)))
}

/// Embeddings map relations to zero, and the symplectic image satisfies
/// the quadratic relation with value `q^3` together with the inverse of
/// `s_{i,i+1}`.
pub fn check_embedding(source: &Algebra, gl: &Algebra) -> Result<Report> {
    let map = match source.family() {
        Family::Orth => embed_o_in_gl(gl)?,
        Family::SpExt => embed_sp_in_gl(gl)?,
        Family::Gl => return Err(Error::Invalid("gl does not embed into itself here".into())),
    };
    let mut report = crate::morphisms::check_homomorphism(&map, source, gl)?;
    report.suite = "embedding".into();
    if source.family() == Family::SpExt {
        for i in (1..gl.size()).step_by(2) {
            report.check(
                &format!("qdet[{i}]"),
                "quadratic element maps to q^3",
                "sp-quadratic",
                || {
                    let v = sp_quadratic(&|a, b| sp_entry_in_gl(gl, a, b), &|x, y| gl.mul(x, y), i)?;
                    let expected = NCElement::scalar(qp(3));
                    Ok(zero_or_witness(&(&v - &expected)))
                },
            )?;
            report.check(
                &format!("inverse[{i}]"),
                "superdiagonal entry is invertible",
                "sp-inverse",
                || {
                    let s = sp_entry_in_gl(gl, i, i + 1)?;
                    let inv = sp_superdiag_inverse_in_gl(i);
                    let left = &gl.mul(&s, &inv)? - &NCElement::one();
                    let right = &gl.mul(&inv, &s)? - &NCElement::one();
                    Ok(zero_or_witness(&left).or(zero_or_witness(&right)))
                },
            )?;
        }
    }
    Ok(report)
}
