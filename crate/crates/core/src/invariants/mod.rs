//! Casimir elements of the Poisson algebras and central elements of the
//! quantum algebras, with the identities relating them.

pub mod matrix;
mod quantum;

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use matrix::PMatrix;
pub use quantum::{
    check_quantum_inverse, phi_elements, phi_k, quantum_center_check, quantum_invariants_report, s_plus_closed,
    s_plus_recursive,
};

use crate::coeff::{LaurentPoly, Rational, Var};
use crate::error::{Error, Result};
use crate::poisson::{
    build_poisson_o, build_poisson_sp, casimir_check, unitri_inverse_entry, AVar, PFamily, PoissonPoly, PoissonSpec,
};
use crate::report::Report;

fn lam() -> PoissonPoly {
    PoissonPoly::constant(LaurentPoly::var(Var::Lambda))
}

fn diff(a: &PoissonPoly, b: &PoissonPoly) -> Option<String> {
    (a != b).then(|| format!("{a} vs {b}"))
}

fn require_orth(spec: &PoissonSpec) -> Result<usize> {
    if spec.family() != PFamily::Orth {
        return Err(Error::Invalid("expected the orthogonal Poisson algebra".into()));
    }
    Ok(spec.size())
}

/// `A^-1` for the unitriangular orthogonal `A`, by alternating paths.
pub fn unitri_inverse(spec: &PoissonSpec) -> Result<PMatrix> {
    let n = require_orth(spec)?;
    Ok((1..=n)
        .map(|k| (1..=n).map(|l| unitri_inverse_entry(spec, k, l)).collect())
        .collect())
}

/// `A A^-1 = A^-1 A = 1`.
pub fn check_unitri_inverse(spec: &PoissonSpec) -> Result<Report> {
    let n = require_orth(spec)?;
    let a = spec.matrix();
    let inv = unitri_inverse(spec)?;
    let one = matrix::identity(n);
    let mut report = Report::new("inverse").family("o").param("n", n as i64);
    report.check("right", "A A^-1 = 1", "alternating-path inverse", || {
        Ok((matrix::mul(&a, &inv) != one).then(|| "A A^-1 differs from 1".to_string()))
    })?;
    report.check("left", "A^-1 A = 1", "alternating-path inverse", || {
        Ok((matrix::mul(&inv, &a) != one).then(|| "A^-1 A differs from 1".to_string()))
    })?;
    Ok(report)
}

/// `det(A + λ A^t)` as a polynomial with `λ` among the scalars.
pub fn charpoly(spec: &PoissonSpec) -> PoissonPoly {
    let a = spec.matrix();
    let m = matrix::add(&a, &matrix::scale(&matrix::transpose(&a), &lam()));
    matrix::det(&m)
}

/// Coefficients `f_0, ..., f_N` of `det(A + λ A^t)`.
pub fn charpoly_coeffs(spec: &PoissonSpec) -> Vec<PoissonPoly> {
    let p = charpoly(spec);
    (0..=spec.size()).map(|k| p.coeff_of(Var::Lambda, k as i16)).collect()
}

/// `Pf((B^t - B)_I)` for a 1-based index set `I`.
pub fn pf_i(b: &PMatrix, idx: &[usize]) -> Result<PoissonPoly> {
    let zero_based: Vec<usize> = idx.iter().map(|i| i - 1).collect();
    let h = matrix::sub(&matrix::transpose(b), b);
    matrix::pfaffian(&matrix::submatrix(&h, &zero_based))
}

/// All `size`-element subsets of `1..=n`, ascending.
pub fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == size {
            out.push((1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect());
        }
    }
    out.sort();
    out
}

/// `c_k = (-1)^k sum over 2k-subsets of Pf_I(A) Pf_I(A^-1)`.
pub fn c_k(spec: &PoissonSpec, k: usize) -> Result<PoissonPoly> {
    let n = require_orth(spec)?;
    if 2 * k > n {
        return Err(Error::Invalid(format!("2k = {} exceeds N = {n}", 2 * k)));
    }
    let a = spec.matrix();
    let inv = unitri_inverse(spec)?;
    let mut sum = PoissonPoly::zero();
    for idx in subsets(n, 2 * k) {
        sum = &sum + &(&pf_i(&a, &idx)? * &pf_i(&inv, &idx)?);
    }
    Ok(if k.is_multiple_of(2) { sum } else { -sum })
}

/// `tr (A^-1 A^t)^k`.
pub fn trace_invariant(spec: &PoissonSpec, k: usize) -> Result<PoissonPoly> {
    let h = matrix::mul(&unitri_inverse(spec)?, &matrix::transpose(&spec.matrix()));
    let mut p = matrix::identity(spec.size());
    for _ in 0..k {
        p = matrix::mul(&p, &h);
    }
    Ok(matrix::trace(&p))
}

/// Casimir checks and relations for the coefficients of `det(A + λ A^t)`.
pub fn check_det_family(spec: &PoissonSpec) -> Result<Report> {
    let n = spec.size();
    let mut report = Report::new("casimir-det")
        .family(spec.family_name())
        .param("n", n as i64);
    let f = charpoly_coeffs(spec);
    for (k, fk) in f.iter().enumerate() {
        report.absorb(
            "",
            casimir_check(fk, spec, &format!("f{k}"), "det(A + λA^t) coefficients")?,
        );
    }
    for k in 0..=n {
        report.check(&format!("palindrome/f{k}"), "f_{N-k} = f_k", "palindromic", || {
            Ok(diff(&f[n - k], &f[k]))
        })?;
    }
    match spec.family() {
        PFamily::Orth => {
            report.check("f0", "f_0 = 1", "det A = 1", || Ok(diff(&f[0], &PoissonPoly::one())))?;
        }
        PFamily::Symp => {
            let mut prod = PoissonPoly::one();
            for i in (1..n).step_by(2) {
                prod = &prod * &sp_quadratic(spec, i);
            }
            report.check(
                "f0",
                "f_0 = product of the block quadratics",
                "f_0 factorization",
                || Ok(diff(&f[0], &prod)),
            )?;
        }
    }
    Ok(report)
}

/// `a_{i+1,i+1} a_ii - a_{i+1,i} a_{i,i+1}`.
pub fn sp_quadratic(spec: &PoissonSpec, i: usize) -> PoissonPoly {
    let a = |x, y| spec.entry(x, y);
    &(&a(i + 1, i + 1) * &a(i, i)) - &(&a(i + 1, i) * &a(i, i + 1))
}

/// The Pfaffian family: `c_k` are Casimirs, and for even `N` so are
/// `Pf_{I_0}(A)` and `Pf_{I_0}(A^-1)`, with the relations between them.
pub fn check_pfaffian_family(spec: &PoissonSpec) -> Result<Report> {
    let n = require_orth(spec)?;
    let mut report = Report::new("casimir-pfaffian").family("o").param("n", n as i64);
    for k in 1..=n / 2 {
        report.absorb(
            "",
            casimir_check(&c_k(spec, k)?, spec, &format!("c{k}"), "Pfaffian Casimirs")?,
        );
    }
    let a = spec.matrix();
    if n % 2 == 0 {
        let i0: Vec<usize> = (1..=n).collect();
        let pa = pf_i(&a, &i0)?;
        let pinv = pf_i(&unitri_inverse(spec)?, &i0)?;
        report.absorb("", casimir_check(&pa, spec, "pf(A)", "Pfaffian Casimirs")?);
        report.absorb("", casimir_check(&pinv, spec, "pf(A^-1)", "Pfaffian Casimirs")?);
        let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
        report.check(
            "pf(A^-1)/sign",
            "Pf_{I_0}(A^-1) = (-1)^n Pf_{I_0}(A)",
            "Pfaffian relation",
            || Ok(diff(&pinv, &pa.scale_int(sign))),
        )?;
        report.check("pf^2", "det(A - A^t) = Pf_{I_0}(A)^2", "Pfaffian relation", || {
            let d = matrix::det(&matrix::sub(&a, &matrix::transpose(&a)));
            Ok(diff(&d, &(&pa * &pa)))
        })?;
        report.check("c_top", "c_{N/2} = Pf_{I_0}(A)^2", "Pfaffian relation", || {
            Ok(diff(&c_k(spec, n / 2)?, &(&pa * &pa)))
        })?;
        if n <= 4 {
            report.check(
                "pf/oracle",
                "first-row expansion vs symmetric-group sum",
                "Pfaffian",
                || {
                    let h = matrix::sub(&matrix::transpose(&a), &a);
                    Ok(diff(&matrix::pfaffian(&h)?, &matrix::pfaffian_by_permutations(&h)?))
                },
            )?;
        }
    }
    Ok(report)
}

fn restrict_to_h(spec: &PoissonSpec) -> (Vec<AVar>, impl Fn(&PoissonPoly) -> Result<PoissonPoly>) {
    let n = spec.size();
    let half = n / 2;
    let offset = if n.is_multiple_of(2) { half } else { half + 1 };
    let ds: Vec<AVar> = (1..=half).map(|i| ((i + offset) as u8, i as u8)).collect();
    let keep = ds.clone();
    let f = move |p: &PoissonPoly| {
        p.subst(&mut |x| {
            Ok(if keep.contains(&x) {
                PoissonPoly::var(x.0 as usize, x.1 as usize)
            } else {
                PoissonPoly::zero()
            })
        })
    };
    (ds, f)
}

/// Elementary symmetric polynomial of degree `k` in the given elements.
fn elementary(xs: &[PoissonPoly], k: usize) -> PoissonPoly {
    let mut e = vec![PoissonPoly::zero(); k + 1];
    e[0] = PoissonPoly::one();
    for x in xs {
        for j in (1..=k).rev() {
            e[j] = &e[j] + &(&e[j - 1] * x);
        }
    }
    e[k].clone()
}

/// `det(A + λA^t) = sum_k (-λ)^k (1 + λ)^{N-2k} c_k`, exactly; plus the
/// restriction to the diagonal-block subspace where `c_k` become
/// elementary symmetric in the `d_i^2`.
pub fn det_expansion_check(spec: &PoissonSpec) -> Result<Report> {
    let n = require_orth(spec)?;
    let mut report = Report::new("det-pfaffian-identity").family("o").param("n", n as i64);
    let lhs = charpoly(spec);
    let one_plus = &PoissonPoly::one() + &lam();
    let cs: Vec<PoissonPoly> = (0..=n / 2)
        .map(|k| if k == 0 { Ok(PoissonPoly::one()) } else { c_k(spec, k) })
        .collect::<Result<_>>()?;
    report.check(
        "identity",
        "det(A + λA^t) as a combination of the c_k",
        "det-Pfaffian identity",
        || {
            let mut rhs = PoissonPoly::zero();
            for (k, ck) in cs.iter().enumerate() {
                let t = &(&(-lam()).pow(k as u32) * &one_plus.pow((n - 2 * k) as u32)) * ck;
                rhs = &rhs + &t;
            }
            Ok(diff(&lhs, &rhs))
        },
    )?;
    let (ds, restrict) = restrict_to_h(spec);
    let squares: Vec<PoissonPoly> = ds
        .iter()
        .map(|&(i, j)| PoissonPoly::var(i as usize, j as usize).pow(2))
        .collect();
    report.check(
        "h/det",
        "det restricted to H is a product of block factors",
        "restriction to H",
        || {
            let mut want = if n % 2 == 1 {
                one_plus.clone()
            } else {
                PoissonPoly::one()
            };
            for d2 in &squares {
                want = &want * &(&one_plus.pow(2) - &(&lam() * d2));
            }
            Ok(diff(&restrict(&lhs)?, &want))
        },
    )?;
    for (k, ck) in cs.iter().enumerate().skip(1) {
        report.check(
            &format!("h/c{k}"),
            "c_k restricted to H is elementary symmetric in d_i^2",
            "restriction to H",
            || Ok(diff(&restrict(ck)?, &elementary(&squares, k))),
        )?;
    }
    Ok(report)
}

/// Traces of `(A^-1 A^t)^k` for `k <= max_k` are Casimirs and satisfy the
/// Liouville formula against `det(1 + λH) = det(A + λA^t)` through
/// order `max_k - 1` in `λ`.
pub fn liouville_check(spec: &PoissonSpec, max_k: usize) -> Result<Report> {
    let n = require_orth(spec)?;
    let mut report = Report::new("casimir-trace")
        .family("o")
        .param("n", n as i64)
        .param("max_k", max_k as i64);
    let traces: Vec<PoissonPoly> = (0..=max_k).map(|k| trace_invariant(spec, k)).collect::<Result<_>>()?;
    report.check("tr0", "tr H^0 = N", "trace invariants", || {
        Ok(diff(&traces[0], &PoissonPoly::int(n as i64)))
    })?;
    for (k, t) in traces.iter().enumerate().skip(1) {
        report.absorb("", casimir_check(t, spec, &format!("tr{k}"), "trace invariants")?);
    }
    report.check(
        "liouville",
        "sum (-1)^{k-1} λ^{k-1} tr H^k = d/dλ ln det(1 + λH)",
        "Liouville formula",
        || {
            let p = charpoly(spec);
            let coeffs: Vec<PoissonPoly> = (0..=n).map(|k| p.coeff_of(Var::Lambda, k as i16)).collect();
            // series S with S * P = P' modulo λ^max_k
            for d in 0..max_k {
                let mut lhs = PoissonPoly::zero();
                for k in 1..=d + 1 {
                    let j = d + 1 - k;
                    if j <= n {
                        let sign = if k % 2 == 1 { 1 } else { -1 };
                        lhs = &lhs + &(&traces[k] * &coeffs[j]).scale_int(sign);
                    }
                }
                let rhs = if d < n {
                    coeffs[d + 1].scale_int(d as i64 + 1)
                } else {
                    PoissonPoly::zero()
                };
                if lhs != rhs {
                    return Ok(Some(format!("order λ^{d}: {lhs} vs {rhs}")));
                }
            }
            Ok(None)
        },
    )?;
    Ok(report)
}

/// Block quadratics and the det family of the symplectic algebra.
pub fn sp_casimirs(spec: &PoissonSpec) -> Result<Report> {
    if spec.family() != PFamily::Symp {
        return Err(Error::Invalid("expected the symplectic Poisson algebra".into()));
    }
    let mut report = check_det_family(spec)?;
    report.suite = "casimir-sp".into();
    for i in (1..spec.size()).step_by(2) {
        report.absorb(
            "",
            casimir_check(&sp_quadratic(spec, i), spec, &format!("quad{i}"), "block quadratics")?,
        );
    }
    Ok(report)
}

/// `Pf(A - A^t)` in the symplectic algebra: its brackets with the
/// generators are recorded as findings; `Pf^2 = det(A - A^t)` is checked.
pub fn conjecture_probe(spec: &PoissonSpec) -> Result<Report> {
    if spec.family() != PFamily::Symp {
        return Err(Error::Invalid("expected the symplectic Poisson algebra".into()));
    }
    let a = spec.matrix();
    let skew = matrix::sub(&a, &matrix::transpose(&a));
    let pf = matrix::pfaffian(&skew)?;
    let mut report = Report::new("conjecture-probe")
        .family("sp")
        .param("n", (spec.size() / 2) as i64);
    report.check("pf^2", "Pf(A - A^t)^2 = det(A - A^t)", "Pfaffian property", || {
        Ok(diff(&(&pf * &pf), &matrix::det(&skew)))
    })?;
    report.finding("pf", "Pf(A - A^t)", "Casimir conjecture", pf.to_string());
    let casimir = casimir_check(&pf, spec, "pf", "Casimir conjecture")?;
    let nonzero: Vec<String> = casimir
        .checks
        .iter()
        .filter_map(|c| c.witness.as_ref().map(|w| format!("{}: {w}", c.id)))
        .collect();
    let witness = if nonzero.is_empty() {
        "Pf(A - A^t) Poisson-commutes with every generator".to_string()
    } else {
        format!("not a Casimir; nonzero brackets: {}", nonzero.join("; "))
    };
    report.finding(
        "pf/casimir",
        "brackets of Pf(A - A^t) with the generators",
        "Casimir conjecture",
        witness,
    );
    Ok(report)
}

/// Value of `p` at a rational point (all scalars must be constants).
pub fn eval_at(p: &PoissonPoly, point: &HashMap<AVar, Rational>) -> Result<Rational> {
    let v = p.subst(&mut |x| {
        point
            .get(&x)
            .map(|r| PoissonPoly::constant(LaurentPoly::constant(r.clone())))
            .ok_or_else(|| Error::Invalid(format!("no value for a[{},{}]", x.0, x.1)))
    })?;
    v.as_constant()
        .and_then(|c| c.as_constant())
        .ok_or_else(|| Error::Invalid("value is not a rational constant".into()))
}

/// Rank of the Jacobian of the Casimir generators at a random rational
/// point (a finding: full rank supports algebraic independence).
pub fn jacobian_rank_probe(spec: &PoissonSpec, seed: u64) -> Result<Report> {
    let n = require_orth(spec)?;
    let half = n / 2;
    let mut gens: Vec<(String, PoissonPoly)> = Vec::new();
    let top = if n % 2 == 1 { half } else { half.saturating_sub(1) };
    for k in 1..=top {
        gens.push((format!("c{k}"), c_k(spec, k)?));
    }
    if n % 2 == 0 {
        let i0: Vec<usize> = (1..=n).collect();
        gens.push(("pf".into(), pf_i(&spec.matrix(), &i0)?));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let point: HashMap<AVar, Rational> = spec
        .vars()
        .iter()
        .map(|&x| (x, Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=5))))
        .collect();
    let mut rows = Vec::new();
    for (_, g) in &gens {
        let row: Vec<Rational> = spec
            .vars()
            .iter()
            .map(|&x| eval_at(&g.derivative(x), &point))
            .collect::<Result<_>>()?;
        rows.push(row);
    }
    let r = matrix::rank(&rows);
    let names: Vec<&str> = gens.iter().map(|g| g.0.as_str()).collect();
    let mut report = Report::new("jacobian-rank").family("o").param("n", n as i64).seed(seed);
    report.finding(
        "rank",
        "Jacobian rank of the Casimir generators at a random rational point",
        "algebraic independence",
        format!("rank {r} of {} generators ({})", gens.len(), names.join(", ")),
    );
    Ok(report)
}

/// Which Poisson algebra to use for a family name and size.
pub fn poisson_spec(family: &str, n: usize) -> Result<PoissonSpec> {
    match family {
        "o" => build_poisson_o(n),
        "sp" => build_poisson_sp(n),
        other => Err(Error::Invalid(format!("unknown Poisson family `{other}`"))),
    }
}
