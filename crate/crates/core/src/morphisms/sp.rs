use super::braid::lusztig_gl;
use super::{agree_on, GenMap};
use crate::algebras::{sp_entry_in_gl, sp_superdiag_inverse_in_gl};
use crate::coeff::LaurentPoly;
use crate::error::{Error, Result};
use crate::nc::{Algebra, Family, Gen, NCElement};
use crate::report::{zero_or_witness, Report};

fn qp(k: i32) -> LaurentPoly {
    LaurentPoly::q_pow(k)
}

fn require_gl_even(gl: &Algebra, j: usize) -> Result<usize> {
    if gl.family() != Family::Gl || gl.size() % 2 == 1 {
        return Err(Error::Invalid("expected U_q(gl_2n)".into()));
    }
    if j.is_multiple_of(2) || j >= gl.size() {
        return Err(Error::Invalid(format!("index {j} must be odd and below {}", gl.size())));
    }
    Ok(gl.size() / 2)
}

fn expect(map: &GenMap, gl: &Algebra, x: &NCElement, want: &NCElement) -> Result<Option<String>> {
    let got = map.apply(x, gl)?;
    let want = gl.normal_form(want)?;
    Ok(zero_or_witness(&(&got - &want)))
}

/// Action of `beta_j` (odd `j`) on the embedded symplectic generators
/// inside `U_q(gl_2n)`, compared with the predicted images.
pub fn sp_braid_odd_probe(gl: &Algebra, j: usize) -> Result<Report> {
    let n = require_gl_even(gl, j)?;
    let beta = lusztig_gl(gl, j)?;
    let s = |a, b| sp_entry_in_gl(gl, a, b);
    let inv = sp_superdiag_inverse_in_gl;
    let mut report = Report::new("sp-braid")
        .family("sp")
        .param("n", n as i64)
        .param("j", j as i64);
    for i in (1..2 * n).step_by(2) {
        let cases: Vec<(String, NCElement, NCElement)> = if i == j {
            let inv2 = gl.mul(&inv(j), &inv(j))?;
            vec![
                (
                    format!("s[{j},{j}]"),
                    s(j, j)?,
                    gl.mul(&inv2, &s(j + 1, j + 1)?)?.scale(&qp(2)),
                ),
                (
                    format!("s[{},{}]", j + 1, j + 1),
                    s(j + 1, j + 1)?,
                    s(j, j)?.scale(&qp(-2)),
                ),
                (format!("s[{j},{}]", j + 1), s(j, j + 1)?, inv(j).scale(&qp(2))),
                (format!("s[{j},{}]^-1", j + 1), inv(j), s(j, j + 1)?.scale(&qp(-2))),
            ]
        } else {
            vec![
                (format!("s[{i},{i}]"), s(i, i)?, s(i, i)?),
                (format!("s[{},{}]", i + 1, i + 1), s(i + 1, i + 1)?, s(i + 1, i + 1)?),
                (format!("s[{i},{}]", i + 1), s(i, i + 1)?, s(i, i + 1)?),
                (format!("s[{i},{}]^-1", i + 1), inv(i), inv(i)),
            ]
        };
        for (label, x, want) in cases {
            report.check(
                &format!("beta{j}/{label}"),
                "image of block generator",
                "odd braid stability",
                || expect(&beta, gl, &x, &want),
            )?;
        }
    }
    // The image of s_jj without the factor q^2.
    let bare = gl.mul(&gl.mul(&inv(j), &inv(j))?, &s(j + 1, j + 1)?)?;
    let got = beta.apply(&s(j, j)?, gl)?;
    report.finding(
        &format!("beta{j}/s[{j},{j}]/unscaled"),
        "image of s_jj compared with s_j,j+1^-2 s_j+1,j+1",
        "odd braid stability",
        if got == bare {
            "equal".into()
        } else if got == bare.scale(&qp(2)) {
            "differs by the factor q^2".into()
        } else {
            format!("differs: {got}")
        },
    );
    for i in (1..2 * n - 1).step_by(2) {
        let x = s(i + 3, i + 1)?;
        let want = if i + 2 == j {
            s(j, j - 1)?.scale(&qp(-1))
        } else if i == j {
            s(j + 3, j)?.scale(&qp(-1))
        } else {
            x.clone()
        };
        report.check(
            &format!("beta{j}/s[{},{}]", i + 3, i + 1),
            "image of subdiagonal-block generator",
            "odd braid stability",
            || expect(&beta, gl, &x, &want),
        )?;
    }
    Ok(report)
}

/// `gamma_j = beta_{j+1} beta_{j+2} beta_j beta_{j+1}` on `U_q(gl_2n)`.
pub fn gamma_gl(gl: &Algebra, j: usize) -> Result<GenMap> {
    require_gl_even(gl, j)?;
    if j + 2 >= gl.size() {
        return Err(Error::Invalid(format!("gamma_{j} needs j <= 2n-3")));
    }
    let b: Vec<GenMap> = (j..=j + 2).map(|i| lusztig_gl(gl, i)).collect::<Result<_>>()?;
    Ok(GenMap::compose(&[&b[1], &b[2], &b[0], &b[1]], gl)?.renamed(&format!("gamma{j}")))
}

/// `gamma_j` permutes the `2x2` diagonal blocks of embedded generators.
pub fn sp_gamma_probe(gl: &Algebra, j: usize) -> Result<Report> {
    let n = require_gl_even(gl, j)?;
    let gamma = gamma_gl(gl, j)?;
    let s = |a, b| sp_entry_in_gl(gl, a, b);
    let mut report = Report::new("sp-gamma")
        .family("sp")
        .param("n", n as i64)
        .param("j", j as i64);
    let pairs = [(0usize, 2usize), (2, 0)];
    for (from, to) in pairs {
        let (a, b) = (j + from, j + to);
        let cases = [
            (format!("s[{a},{a}]"), s(a, a)?, s(b, b)?),
            (format!("s[{},{}]", a + 1, a + 1), s(a + 1, a + 1)?, s(b + 1, b + 1)?),
            (format!("s[{a},{}]", a + 1), s(a, a + 1)?, s(b, b + 1)?),
            (
                format!("s[{a},{}]^-1", a + 1),
                sp_superdiag_inverse_in_gl(a),
                sp_superdiag_inverse_in_gl(b),
            ),
        ];
        for (label, x, want) in cases {
            report.check(
                &format!("gamma{j}/{label}"),
                "blocks are swapped",
                "gamma block action",
                || expect(&gamma, gl, &x, &want),
            )?;
        }
    }
    for i in (1..2 * n).step_by(2).filter(|&i| i != j && i != j + 2) {
        for (a, b) in [(i, i), (i + 1, i + 1), (i, i + 1)] {
            let x = s(a, b)?;
            report.check(
                &format!("gamma{j}/s[{a},{b}]"),
                "other blocks are fixed",
                "gamma block action",
                || expect(&gamma, gl, &x, &x),
            )?;
        }
    }
    report.check(
        &format!("gamma{j}/t[{},{j}]", j + 1),
        "t_j+1,j -> t_j+3,j+2",
        "gamma block action",
        || {
            let x = NCElement::gen(Gen::t(j + 1, j));
            expect(&gamma, gl, &x, &NCElement::gen(Gen::t(j + 3, j + 2)))
        },
    )?;
    report.check(
        &format!("beta{j}beta{}/t[{},{j}]", j + 1, j + 1),
        "t_j+1,j -> t_j+2,j+1",
        "gamma block action",
        || {
            let m = GenMap::compose(&[&lusztig_gl(gl, j)?, &lusztig_gl(gl, j + 1)?], gl)?;
            let x = NCElement::gen(Gen::t(j + 1, j));
            expect(&m, gl, &x, &NCElement::gen(Gen::t(j + 2, j + 1)))
        },
    )?;
    report.check(
        &format!("gamma{j}/conjugation"),
        "gamma^-1 beta_j gamma = beta_j+2",
        "gamma block action",
        || {
            let bj = lusztig_gl(gl, j)?;
            let bj2 = lusztig_gl(gl, j + 2)?;
            let l = GenMap::compose(&[&bj, &gamma], gl)?;
            let r = GenMap::compose(&[&gamma, &bj2], gl)?;
            agree_on(&l, &r, &super::braid::letters(gl), gl)
        },
    )?;
    Ok(report)
}

/// The candidate generator `gamma'_1` on the extended algebra of size 4.
pub struct Gamma2 {
    pub map: GenMap,
    pub report: Report,
}

/// Build `gamma'_1` on the extended symplectic algebra with `n = 2`:
/// swap the diagonal blocks and `s_32 <-> s_41`, fix `s_31`, `s_42`, and
/// with `extend_2143` also swap `s_21 <-> s_43`.
///
/// The displayed relations and their images are asserted; the full
/// relation check is recorded as findings.
pub fn gamma2_map(sp: &Algebra, extend_2143: bool) -> Result<Gamma2> {
    if sp.family() != Family::SpExt || sp.size() != 4 {
        return Err(Error::Invalid("gamma2 acts on the extended algebra with n = 2".into()));
    }
    let mut map = GenMap::new(if extend_2143 { "gamma2'" } else { "gamma2" }, false);
    let mut swap = |a: (usize, usize), b: (usize, usize)| {
        map.set(Gen::s(a.0, a.1), NCElement::gen(Gen::s(b.0, b.1)));
        map.set(Gen::s(b.0, b.1), NCElement::gen(Gen::s(a.0, a.1)));
    };
    swap((1, 1), (3, 3));
    swap((2, 2), (4, 4));
    swap((1, 2), (3, 4));
    swap((3, 2), (4, 1));
    swap((3, 1), (3, 1));
    swap((4, 2), (4, 2));
    if extend_2143 {
        swap((2, 1), (4, 3));
    }

    let s = |a, b| NCElement::gen(Gen::s(a, b));
    let w = |x: &NCElement, y: &NCElement| x.concat(y);
    let qq = LaurentPoly::q_minus_qinv();
    let qinv_q = -qq.clone();
    let displayed: Vec<(&str, NCElement)> = vec![
        ("s33.s32", &w(&s(3, 3), &s(3, 2)) - &w(&s(3, 2), &s(3, 3))),
        (
            "s11.s32",
            &(&w(&s(1, 1), &s(3, 2)) - &w(&s(3, 2), &s(1, 1))) - &w(&s(1, 2), &s(3, 1)).scale(&qinv_q),
        ),
        (
            "s31.s32",
            &(&w(&s(3, 1), &s(3, 2)) - &w(&s(3, 2), &s(3, 1)).scale(&qp(-1)))
                - &(&w(&s(2, 1), &s(3, 3)).scale(&qp(-1)) - &w(&s(1, 2), &s(3, 3))).scale(&qq),
        ),
        ("s11.s41", &w(&s(1, 1), &s(4, 1)) - &w(&s(4, 1), &s(1, 1))),
        (
            "s33.s41",
            &(&w(&s(3, 3), &s(4, 1)) - &w(&s(4, 1), &s(3, 3))) - &w(&s(3, 4), &s(3, 1)).scale(&qinv_q),
        ),
        (
            "s31.s41",
            &(&w(&s(3, 1), &s(4, 1)) - &w(&s(4, 1), &s(3, 1)).scale(&qp(-1)))
                - &(&w(&s(4, 3), &s(1, 1)).scale(&qp(-1)) - &w(&s(3, 4), &s(1, 1))).scale(&qq),
        ),
        (
            "s32.s41",
            &(&w(&s(3, 2), &s(4, 1)) - &w(&s(4, 1), &s(3, 2)))
                - &(&w(&s(1, 2), &s(4, 3)) - &w(&s(3, 4), &s(2, 1))).scale(&qq),
        ),
    ];
    let touches_unmapped = |e: &NCElement| e.generators().iter().any(|g| map.get(*g).is_none());

    let mut report = Report::new("gamma2").family("sp").param("n", 2);
    for (label, rel) in &displayed {
        report.check(
            &format!("displayed/{label}"),
            "displayed relation holds",
            "gamma2 relations",
            || Ok(zero_or_witness(&sp.normal_form(rel)?)),
        )?;
        if touches_unmapped(rel) {
            continue;
        }
        report.check(
            &format!("displayed/{label}/image"),
            "image of displayed relation holds",
            "gamma2 relations",
            || Ok(zero_or_witness(&map.apply(rel, sp)?)),
        )?;
    }

    // The full relation set: exploratory.
    let mut full = Report::new("gamma2-full");
    let mut failing = Vec::new();
    let mut checked = 0usize;
    for r in sp.relations() {
        if touches_unmapped(&r.element) {
            continue;
        }
        checked += 1;
        let img = map.apply(&r.element, sp)?;
        if !img.is_zero() {
            failing.push(format!("{} -> {}", r.label, img));
        }
    }
    let summary = if failing.is_empty() {
        format!("all {checked} relations preserved")
    } else {
        format!(
            "{} of {checked} relations not preserved; first: {}",
            failing.len(),
            failing[0]
        )
    };
    full.finding(
        if extend_2143 {
            "full/extended"
        } else {
            "full/restricted"
        },
        "images of all defining relations of the extended algebra",
        "gamma2 candidate",
        summary,
    );
    report.absorb("", full);
    Ok(Gamma2 { map, report })
}
