use super::{agree_on, check_homomorphism, GenMap};
use crate::algebras::serre_generator;
use crate::coeff::LaurentPoly;
use crate::error::{Error, Result};
use crate::nc::{Algebra, Family, Gen, Kind, NCElement};
use crate::report::{zero_or_witness, Report};

fn qp(k: i32) -> LaurentPoly {
    LaurentPoly::q_pow(k)
}

fn s(i: usize, j: usize) -> NCElement {
    NCElement::gen(Gen::s(i, j))
}

fn require(alg: &Algebra, family: Family, i: usize) -> Result<()> {
    if alg.family() != family {
        return Err(Error::Invalid(format!("expected family {}", family.name())));
    }
    if i == 0 || i >= alg.size() {
        return Err(Error::Invalid(format!(
            "braid index {i} out of range 1..{}",
            alg.size() - 1
        )));
    }
    Ok(())
}

/// Extend images of `s_1, ..., s_{N-1}` to all `s_kl` through
/// `s_kl = (q s_{k,l+1} s_{l+1,l} - s_{l+1,l} s_{k,l+1}) / (q - q^-1)`.
/// For an anti map the two factors swap.
pub(crate) fn extend_from_serre(name: &str, anti: bool, serre_images: &[NCElement], alg: &Algebra) -> Result<GenMap> {
    let n = alg.size();
    let mut m = GenMap::new(name, anti);
    for k in 1..n {
        m.set(Gen::s(k + 1, k), alg.normal_form(&serre_images[k - 1])?);
    }
    for d in 2..n {
        for l in 1..=n - d {
            let k = l + d;
            let a = m.get(Gen::s(k, l + 1)).unwrap().clone();
            let b = m.get(Gen::s(l + 1, l)).unwrap().clone();
            let img = if anti {
                alg.q_bracket(&b, &a)?
            } else {
                alg.q_bracket(&a, &b)?
            };
            m.set(Gen::s(k, l), img);
        }
    }
    Ok(m)
}

/// Images of the Serre generators under `beta_i` or its inverse.
fn braid_serre_images(alg: &Algebra, i: usize, inverse: bool) -> Result<Vec<NCElement>> {
    let n = alg.size();
    let mut imgs = Vec::new();
    for k in 1..n {
        let img = if k == i {
            -serre_generator(k)
        } else if k == i + 1 {
            let (a, b) = (serre_generator(i + 1), serre_generator(i));
            if inverse {
                alg.q_bracket_rev(&a, &b)?
            } else {
                alg.q_bracket(&a, &b)?
            }
        } else if k + 1 == i {
            let (a, b) = (serre_generator(i), serre_generator(i - 1));
            if inverse {
                alg.q_bracket(&a, &b)?
            } else {
                alg.q_bracket_rev(&a, &b)?
            }
        } else {
            serre_generator(k)
        };
        imgs.push(img);
    }
    Ok(imgs)
}

/// `beta_i` of the orthogonal algebra (or its inverse), on every `s_kl`.
///
/// The forward map uses the explicit images on all generators; the
/// inverse is extended from its images on `s_1, ..., s_{N-1}`.
pub fn braid_o(alg: &Algebra, i: usize, inverse: bool) -> Result<GenMap> {
    require(alg, Family::Orth, i)?;
    if inverse {
        return braid_o_serre_inverse(alg, i);
    }
    let n = alg.size();
    let mut m = GenMap::new(&format!("beta{i}"), false);
    for k in 1..=n {
        for l in 1..k {
            let img = if (k, l) == (i + 1, i) {
                -s(i + 1, i)
            } else if k == i && l < i {
                &s(i + 1, l).scale(&qp(1)) - &s(i + 1, i).concat(&s(i, l)).scale(&qp(1))
            } else if k == i + 1 && l < i {
                s(i, l)
            } else if l == i && k >= i + 2 {
                &s(k, i + 1).scale(&qp(-1)) - &s(k, i).concat(&s(i + 1, i))
            } else if l == i + 1 && k >= i + 2 {
                s(k, i)
            } else {
                s(k, l)
            };
            m.set(Gen::s(k, l), alg.normal_form(&img)?);
        }
    }
    Ok(m)
}

/// `beta_i^-1` extended from its images on the Serre generators.
pub fn braid_o_serre_inverse(alg: &Algebra, i: usize) -> Result<GenMap> {
    require(alg, Family::Orth, i)?;
    let imgs = braid_serre_images(alg, i, true)?;
    extend_from_serre(&format!("beta{i}^-1"), false, &imgs, alg)
}

/// `beta_i` extended from its images on the Serre generators; agrees with
/// [`braid_o`] on all generators.
pub fn braid_o_from_serre(alg: &Algebra, i: usize) -> Result<GenMap> {
    require(alg, Family::Orth, i)?;
    let imgs = braid_serre_images(alg, i, false)?;
    extend_from_serre(&format!("beta{i}[serre]"), false, &imgs, alg)
}

/// Lusztig's braid automorphism `beta_i` of `U_q(gl_N)`.
pub fn lusztig_gl(gl: &Algebra, i: usize) -> Result<GenMap> {
    require(gl, Family::Gl, i)?;
    let n = gl.size();
    let t = |a, b| gl.entry(Kind::T, a, b);
    let tb = |a, b| gl.entry(Kind::TBar, a, b);
    let d = |a, e| NCElement::gen(Gen::diag(a, e));
    let prod = |xs: &[NCElement]| -> Result<NCElement> { gl.product(xs) };
    let mut m = GenMap::new(&format!("L{i}"), false);
    for k in 1..=n {
        let target = if k == i {
            i + 1
        } else if k == i + 1 {
            i
        } else {
            k
        };
        m.set(Gen::diag(k, 1), d(target, 1));
        m.set(Gen::diag(k, -1), d(target, -1));
    }
    for a in 1..=n {
        for b in 1..a {
            let img = if (a, b) == (i + 1, i) {
                prod(&[tb(i, i + 1), d(i, 2)])?.scale(&qp(-1))
            } else if a == i && b < i {
                &prod(&[t(i, b), t(i + 1, i), d(i, -1)])?.scale(&qp(1)) - &t(i + 1, b)
            } else if a == i + 1 && b < i {
                t(i, b).scale(&qp(-1))
            } else if b == i && a >= i + 2 {
                &prod(&[tb(i, i + 1), t(a, i), d(i, 1)])?.scale(&qp(-1)) - &t(a, i + 1)
            } else if b == i + 1 && a >= i + 2 {
                t(a, i).scale(&qp(1))
            } else {
                t(a, b)
            };
            m.set(Gen::t(a, b), img);
        }
    }
    for a in 1..=n {
        for b in a + 1..=n {
            let img = if (a, b) == (i, i + 1) {
                prod(&[d(i, -2), t(i + 1, i)])?.scale(&qp(1))
            } else if b == i && a < i {
                &prod(&[d(i, 1), tb(i, i + 1), tb(a, i)])?.scale(&qp(-1)) - &tb(a, i + 1)
            } else if b == i + 1 && a < i {
                tb(a, i).scale(&qp(1))
            } else if a == i && b >= i + 2 {
                &prod(&[d(i, -1), tb(i, b), t(i + 1, i)])?.scale(&qp(1)) - &tb(i + 1, b)
            } else if a == i + 1 && b >= i + 2 {
                tb(i, b).scale(&qp(-1))
            } else {
                tb(a, b)
            };
            m.set(Gen::tbar(a, b), img);
        }
    }
    Ok(m)
}

/// Every generator letter of `alg`, including inverse diagonals.
pub(crate) fn letters(alg: &Algebra) -> Vec<Gen> {
    let mut v = Vec::new();
    for &g in alg.generators() {
        v.push(g);
        if g.is_diag() {
            v.push(g.with_exp(-1));
        }
    }
    v
}

/// Braid relations `b_i b_{i+1} b_i = b_{i+1} b_i b_{i+1}` and distant
/// commutation `b_i b_j = b_j b_i`, checked on every generator.
pub fn check_group_relations(maps: &[GenMap], alg: &Algebra) -> Result<Report> {
    let mut report = Report::new("group-relations")
        .family(alg.family().name())
        .param("n", alg.size() as i64);
    let gens = letters(alg);
    let count = maps.len();
    for a in 0..count {
        for b in a + 1..count {
            let (x, y) = (&maps[a], &maps[b]);
            if b == a + 1 {
                report.check(
                    &format!("braid[{},{}]", a + 1, b + 1),
                    "b_i b_i+1 b_i = b_i+1 b_i b_i+1",
                    "braid relation",
                    || {
                        let l = GenMap::compose(&[x, y, x], alg)?;
                        let r = GenMap::compose(&[y, x, y], alg)?;
                        agree_on(&l, &r, &gens, alg)
                    },
                )?;
            } else {
                report.check(
                    &format!("commute[{},{}]", a + 1, b + 1),
                    "distant generators commute",
                    "braid relation",
                    || {
                        let l = GenMap::compose(&[x, y], alg)?;
                        let r = GenMap::compose(&[y, x], alg)?;
                        agree_on(&l, &r, &gens, alg)
                    },
                )?;
            }
        }
    }
    Ok(report)
}

/// All braid-action claims for the orthogonal algebra of size `N`:
/// homomorphism property, inverses, explicit vs extended images, the
/// image of `s_{i+1}`, commuting images, and the group relations.
pub fn check_braid_o(alg: &Algebra) -> Result<Report> {
    let n = alg.size();
    let mut report = Report::new("braid-o").family("o").param("n", n as i64);
    let mut forward = Vec::new();
    let gens = letters(alg);
    let id = GenMap::identity(alg);
    for i in 1..n {
        let b = braid_o(alg, i, false)?;
        let binv = braid_o(alg, i, true)?;
        report.absorb("", check_homomorphism(&b, alg, alg)?);
        report.absorb("", check_homomorphism(&binv, alg, alg)?);
        report.check(
            &format!("inverse[{i}]"),
            "b_i b_i^-1 = b_i^-1 b_i = id",
            "braid inverse",
            || {
                let l = GenMap::compose(&[&b, &binv], alg)?;
                let r = GenMap::compose(&[&binv, &b], alg)?;
                Ok(agree_on(&l, &id, &gens, alg)?.or(agree_on(&r, &id, &gens, alg)?))
            },
        )?;
        report.check(
            &format!("explicit[{i}]"),
            "explicit images agree with Serre extension",
            "braid images",
            || agree_on(&b, &braid_o_from_serre(alg, i)?, &gens, alg),
        )?;
        if i + 2 <= n {
            report.check(&format!("next[{i}]"), "b_i(s_i+1) = s_i+2,i", "braid images", || {
                let img = b.apply(&serre_generator(i + 1), alg)?;
                Ok(zero_or_witness(&(&img - &s(i + 2, i))))
            })?;
        }
        if i >= 2 && i + 2 <= n {
            report.check(
                &format!("images-commute[{i}]"),
                "b_i(s_i-1) and b_i(s_i+1) commute",
                "braid images",
                || {
                    let x = b.apply(&serre_generator(i - 1), alg)?;
                    let y = b.apply(&serre_generator(i + 1), alg)?;
                    Ok(zero_or_witness(&alg.commutator(&x, &y)?))
                },
            )?;
        }
        forward.push(b);
    }
    report.absorb("", check_group_relations(&forward, alg)?);
    Ok(report)
}
