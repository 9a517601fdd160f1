use crate::coeff::{LaurentPoly, Rational};
use crate::error::{Error, Result};
use crate::morphisms::s_inverse_entry;
use crate::nc::{Algebra, Family, NCElement};
use crate::poisson::{build_poisson_o, classical_limit, PoissonPoly};
use crate::report::{zero_or_witness, Report};

use super::{c_k, matrix, pf_i, subsets, unitri_inverse};

fn orth(alg: &Algebra) -> Result<usize> {
    if alg.family() != Family::Orth {
        return Err(Error::Invalid("expected the orthogonal family".into()));
    }
    Ok(alg.size())
}

fn signed_q(sign_base_neg: bool, e: i32) -> LaurentPoly {
    let c = if sign_base_neg && e.rem_euclid(2) == 1 { -1 } else { 1 };
    LaurentPoly::q_pow(e).scale(&Rational::from_int(c))
}

fn inverse_entry(alg: &Algebra, k: usize, l: usize) -> Result<NCElement> {
    Ok(match k.cmp(&l) {
        std::cmp::Ordering::Less => NCElement::zero(),
        std::cmp::Ordering::Equal => NCElement::one(),
        std::cmp::Ordering::Greater => alg.normal_form(&s_inverse_entry(k, l))?,
    })
}

/// `S S^-1 = S^-1 S = 1` with `S^-1` given by alternating chains.
pub fn check_quantum_inverse(alg: &Algebra) -> Result<Report> {
    let n = orth(alg)?;
    let mut inv = vec![vec![NCElement::zero(); n + 1]; n + 1];
    for (k, row) in inv.iter_mut().enumerate().skip(1) {
        for (l, x) in row.iter_mut().enumerate().skip(1) {
            *x = inverse_entry(alg, k, l)?;
        }
    }
    let mut report = Report::new("inverse").family("o").param("n", n as i64);
    for (side, left_is_s) in [("right", true), ("left", false)] {
        report.check(
            side,
            "product of S and its chain-sum inverse is 1",
            "inverse matrix",
            || {
                for i in 1..=n {
                    for j in 1..=n {
                        let mut acc = NCElement::zero();
                        for k in 1..=n {
                            let (x, y) = if left_is_s {
                                (alg.s(i, k), inv[k][j].clone())
                            } else {
                                (inv[i][k].clone(), alg.s(k, j))
                            };
                            acc = &acc + &alg.mul(&x, &y)?;
                        }
                        let want = if i == j { NCElement::one() } else { NCElement::zero() };
                        if let Some(w) = zero_or_witness(&(&acc - &want)) {
                            return Ok(Some(format!("[{i},{j}]: {w}")));
                        }
                    }
                }
                Ok(None)
            },
        )?;
    }
    Ok(report)
}

/// `s+_ij` for `i > j` from `s+_{j+1,j} = s_{j+1,j}` and
/// `s+_ij = (s+_{i,j+1} s_{j+1,j} - q s_{j+1,j} s+_{i,j+1}) / (q - q^-1)`.
pub fn s_plus_recursive(alg: &Algebra, i: usize, j: usize) -> Result<NCElement> {
    orth(alg)?;
    if i <= j || i > alg.size() {
        return Err(Error::Invalid(format!("s+[{i},{j}] needs N >= i > j")));
    }
    if i == j + 1 {
        return Ok(alg.s(i, j));
    }
    let upper = s_plus_recursive(alg, i, j + 1)?;
    alg.q_bracket_rev(&upper, &alg.s(j + 1, j))
}

/// `s+_ij = -q^{i-j-1} (S^-1)_ij`.
pub fn s_plus_closed(alg: &Algebra, i: usize, j: usize) -> Result<NCElement> {
    orth(alg)?;
    if i <= j || i > alg.size() {
        return Err(Error::Invalid(format!("s+[{i},{j}] needs N >= i > j")));
    }
    let c = LaurentPoly::q_pow((i - j - 1) as i32).scale(&Rational::from_int(-1));
    Ok(inverse_entry(alg, i, j)?.scale(&c))
}

/// Perfect matchings of `idx` as pair lists `(a, b)` with `a < b`,
/// ordered by increasing `b`.
fn matchings(idx: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if idx.is_empty() {
        return vec![vec![]];
    }
    // the largest element closes the last pair
    let b = *idx.last().expect("nonempty");
    let mut out = Vec::new();
    for t in 0..idx.len() - 1 {
        let a = idx[t];
        let rest: Vec<usize> = idx[..idx.len() - 1].iter().copied().filter(|&x| x != a).collect();
        for mut m in matchings(&rest) {
            m.push((a, b));
            out.push(m);
        }
    }
    out
}

/// `Phi_I` (with `plus = false`) or `Phi+_I` (with `plus = true`) for an
/// ascending 1-based index set of even size.
pub fn phi_elements(alg: &Algebra, idx: &[usize], plus: bool) -> Result<NCElement> {
    orth(alg)?;
    if idx.len() % 2 == 1 {
        return Err(Error::OddSize(idx.len()));
    }
    let mut out = NCElement::zero();
    for m in matchings(idx) {
        let seq: Vec<usize> = m.iter().flat_map(|&(a, b)| [a, b]).collect();
        let len = matrix::inversions(&seq) as i32;
        let coeff = signed_q(true, if plus { len } else { -len });
        let mut factors = Vec::with_capacity(m.len());
        for &(a, b) in &m {
            factors.push(if plus { s_plus_closed(alg, b, a)? } else { alg.s(b, a) });
        }
        out = &out + &alg.product(&factors)?.scale(&coeff);
    }
    Ok(out)
}

/// `phi_k = sum over 2k-subsets I of q^{sum I} Phi+_I Phi_I`.
pub fn phi_k(alg: &Algebra, k: usize) -> Result<NCElement> {
    let n = orth(alg)?;
    if 2 * k > n {
        return Err(Error::Invalid(format!("2k = {} exceeds N = {n}", 2 * k)));
    }
    let mut out = NCElement::zero();
    for idx in subsets(n, 2 * k) {
        let w: usize = idx.iter().sum();
        let t = alg.mul(&phi_elements(alg, &idx, true)?, &phi_elements(alg, &idx, false)?)?;
        out = &out + &t.scale(&LaurentPoly::q_pow(w as i32));
    }
    Ok(out)
}

/// Commutes `e` with every generator.
pub fn quantum_center_check(alg: &Algebra, e: &NCElement, label: &str, claim: &str) -> Result<Report> {
    let mut report = Report::new("center")
        .family(alg.family().name())
        .param("n", alg.size() as i64);
    for &g in alg.generators() {
        report.check(
            &format!("{label}/{g}"),
            "commutator with a generator vanishes",
            claim,
            || Ok(zero_or_witness(&alg.commutator(e, &NCElement::gen(g))?)),
        )?;
    }
    Ok(report)
}

fn limit_diff(got: &PoissonPoly, want: &PoissonPoly) -> Option<String> {
    (got != want).then(|| format!("{got} vs {want}"))
}

/// Everything about the quantum Pfaffian-type elements of `U'_q(o_N)`:
/// inverse, the two forms of `s+`, centrality of `phi_k` (and of `Phi`,
/// `Phi+` on the full index set when `N` is even), and their limits.
pub fn quantum_invariants_report(alg: &Algebra) -> Result<Report> {
    let n = orth(alg)?;
    let spec = build_poisson_o(n)?;
    let a = spec.matrix();
    let ainv = unitri_inverse(&spec)?;
    let mut report = Report::new("quantum-invariants").family("o").param("n", n as i64);
    report.absorb("", check_quantum_inverse(alg)?);
    for i in 1..=n {
        for j in 1..i {
            report.check(
                &format!("s+[{i},{j}]"),
                "recursive s+ equals the closed form",
                "s+ closed form",
                || {
                    Ok(zero_or_witness(
                        &(&s_plus_recursive(alg, i, j)? - &s_plus_closed(alg, i, j)?),
                    ))
                },
            )?;
        }
    }
    for k in 1..=n / 2 {
        let phi = phi_k(alg, k)?;
        report.absorb(
            "",
            quantum_center_check(alg, &phi, &format!("phi{k}"), "central elements")?,
        );
        report.check(
            &format!("limit/phi{k}"),
            "phi_k tends to c_k",
            "classical limit",
            || Ok(limit_diff(&classical_limit(&phi)?, &c_k(&spec, k)?)),
        )?;
        for idx in subsets(n, 2 * k) {
            let name = idx.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("");
            report.check(
                &format!("limit/Phi{name}"),
                "Phi_I tends to Pf_I(A)",
                "classical limit",
                || {
                    Ok(limit_diff(
                        &classical_limit(&phi_elements(alg, &idx, false)?)?,
                        &pf_i(&a, &idx)?,
                    ))
                },
            )?;
            report.check(
                &format!("limit/Phi+{name}"),
                "Phi+_I tends to (-1)^k Pf_I(A^-1)",
                "classical limit",
                || {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    Ok(limit_diff(
                        &classical_limit(&phi_elements(alg, &idx, true)?)?,
                        &pf_i(&ainv, &idx)?.scale_int(sign),
                    ))
                },
            )?;
        }
    }
    if n % 2 == 0 {
        let i0: Vec<usize> = (1..=n).collect();
        for plus in [false, true] {
            let e = phi_elements(alg, &i0, plus)?;
            let label = if plus { "Phi+[I0]" } else { "Phi[I0]" };
            report.absorb("", quantum_center_check(alg, &e, label, "central elements")?);
        }
    }
    Ok(report)
}
