//! Empirical confluence and associativity probes for a rewrite system.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{word_to_string, Algebra, Gen, NCElement, Strategy};
use crate::coeff::LaurentPoly;
use crate::error::Result;
use crate::report::Report;

/// Letters to draw random words from; diagonal generators in both signs.
fn alphabet(alg: &Algebra) -> Vec<Gen> {
    let mut out = Vec::new();
    for &g in alg.generators() {
        out.push(g);
        if g.is_diag() {
            out.push(g.with_exp(-1));
        }
    }
    out
}

fn random_word(rng: &mut ChaCha8Rng, letters: &[Gen], len: usize) -> Vec<Gen> {
    (0..len)
        .map(|_| *letters.choose(rng).expect("nonempty alphabet"))
        .collect()
}

/// Reduces random words of length `2..=max_len` leftmost-first,
/// rightmost-first, and with the memoized engine; all three must agree.
pub fn confluence_probe(alg: &Algebra, max_len: usize, samples: usize, seed: u64) -> Result<Report> {
    let mut report = Report::new("confluence")
        .family(alg.family().name())
        .param("n", alg.size() as i64)
        .param("max_len", max_len as i64)
        .param("samples", samples as i64)
        .seed(seed);
    let letters = alphabet(alg);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut divergences = Vec::new();
    if max_len >= 2 && !letters.is_empty() {
        for _ in 0..samples {
            let len = rng.gen_range(2..=max_len);
            let w = random_word(&mut rng, &letters, len);
            let e = NCElement::word(&w);
            let left = alg.reduce_with(&e, Strategy::Leftmost)?;
            let right = alg.reduce_with(&e, Strategy::Rightmost)?;
            let memo = alg.normal_form(&e)?;
            if left != right || left != memo {
                divergences.push(word_to_string(&w));
            }
        }
    }
    divergences.sort();
    divergences.dedup();
    report.check(
        "divergences",
        "leftmost, rightmost and memoized reductions agree",
        "PBW basis",
        || Ok((!divergences.is_empty()).then(|| divergences.join("; "))),
    )?;
    Ok(report)
}

/// A random element: up to two words of length at most two, small
/// integer coefficients.
fn random_element(rng: &mut ChaCha8Rng, letters: &[Gen]) -> NCElement {
    let mut e = NCElement::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let len = rng.gen_range(0..=2);
        let c = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
        e.add_term(random_word(rng, letters, len), &LaurentPoly::int(c));
    }
    e
}

/// `(ab)c == a(bc)` on random triples of low-degree elements.
pub fn associativity_probe(alg: &Algebra, samples: usize, seed: u64) -> Result<Report> {
    let mut report = Report::new("associativity")
        .family(alg.family().name())
        .param("n", alg.size() as i64)
        .param("samples", samples as i64)
        .seed(seed);
    let letters = alphabet(alg);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut witness = None;
    for _ in 0..samples {
        let (a, b, c) = (
            random_element(&mut rng, &letters),
            random_element(&mut rng, &letters),
            random_element(&mut rng, &letters),
        );
        let left = alg.mul(&alg.mul(&a, &b)?, &c)?;
        let right = alg.mul(&a, &alg.mul(&b, &c)?)?;
        if left != right {
            witness = Some(format!("({a}) ({b}) ({c})"));
            break;
        }
    }
    report.check("triples", "products associate", "associativity", || Ok(witness))?;
    Ok(report)
}
