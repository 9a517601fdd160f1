use super::braid::extend_from_serre;
use super::GenMap;
use crate::algebras::serre_generator;
use crate::coeff::LaurentPoly;
use crate::error::{Error, Result};
use crate::nc::{Algebra, Family, Gen, NCElement};

fn orth(alg: &Algebra) -> Result<usize> {
    if alg.family() != Family::Orth {
        return Err(Error::Invalid("expected the orthogonal family".into()));
    }
    Ok(alg.size())
}

/// Sum over decreasing chains `k > r_1 > ... > r_p > l` of
/// `(-1)^p s_{k r_1} s_{r_1 r_2} ... s_{r_p l}`, unreduced. With `idx`
/// relabelling each factor's indices.
fn chain_sum(k: usize, l: usize, idx: &dyn Fn(usize, usize) -> Gen) -> NCElement {
    let mut out = NCElement::zero();
    let inner: Vec<usize> = (l + 1..k).rev().collect();
    for mask in 0u32..(1 << inner.len()) {
        let mut path = vec![k];
        path.extend(
            inner
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &r)| r),
        );
        path.push(l);
        let word: Vec<Gen> = path.windows(2).map(|w| idx(w[0], w[1])).collect();
        let sign = if (path.len() - 2) % 2 == 0 { 1 } else { -1 };
        out.add_term(word, &LaurentPoly::int(sign));
    }
    out
}

/// `(S^-1)_kl` for `k > l`, as the alternating chain sum (unreduced).
pub fn s_inverse_entry(k: usize, l: usize) -> NCElement {
    -chain_sum(k, l, &|a, b| Gen::s(a, b))
}

/// `omega` on all `s_kl` by the closed formula
/// `(-q)^{k-l-1} sum (-1)^p s_{N-l+1,r_1} ... s_{r_p,N-k+1}`.
pub fn omega_closed(alg: &Algebra) -> Result<GenMap> {
    let n = orth(alg)?;
    let mut m = GenMap::new("omega[closed]", false);
    for k in 1..=n {
        for l in 1..k {
            let sum = chain_sum(n - l + 1, n - k + 1, &|a, b| Gen::s(a, b));
            let c = LaurentPoly::q_pow((k - l - 1) as i32).scale(&crate::coeff::Rational::from_int(
                if (k - l - 1) % 2 == 0 { 1 } else { -1 },
            ));
            m.set(Gen::s(k, l), alg.normal_form(&sum.scale(&c))?);
        }
    }
    Ok(m)
}

/// The involutive automorphism `s_k -> s_{N-k}`, extended to all `s_kl`.
pub fn omega(alg: &Algebra) -> Result<GenMap> {
    let n = orth(alg)?;
    let imgs: Vec<NCElement> = (1..n).map(|k| serre_generator(n - k)).collect();
    extend_from_serre("omega", false, &imgs, alg)
}

/// The involutive anti-automorphism `s_kl -> s_{N-l+1,N-k+1}`.
pub fn omega_prime(alg: &Algebra) -> Result<GenMap> {
    let n = orth(alg)?;
    let mut m = GenMap::new("omega'", true);
    for k in 1..=n {
        for l in 1..k {
            m.set(Gen::s(k, l), NCElement::gen(Gen::s(n - l + 1, n - k + 1)));
        }
    }
    Ok(m)
}

/// The anti-automorphism `S -> (1-q^-1) I + q^-1 H S^-1 H^-1` with
/// `H = diag(q, ..., q^N)`: `s_kl -> q^{k-l-1} (S^-1)_kl`.
pub fn rho(alg: &Algebra) -> Result<GenMap> {
    let n = orth(alg)?;
    let mut m = GenMap::new("rho", true);
    for k in 1..=n {
        for l in 1..k {
            let img = s_inverse_entry(k, l).scale(&LaurentPoly::q_pow((k - l - 1) as i32));
            m.set(Gen::s(k, l), alg.normal_form(&img)?);
        }
    }
    Ok(m)
}

/// `S -> C S C` for a sign vector `C = diag(c_1, ..., c_N)`.
pub fn varsigma(alg: &Algebra, signs: &[i8]) -> Result<GenMap> {
    let n = orth(alg)?;
    if signs.len() != n || signs.iter().any(|c| c.abs() != 1) {
        return Err(Error::Invalid("varsigma needs N entries equal to +1 or -1".into()));
    }
    let mut m = GenMap::new("varsigma", false);
    for k in 1..=n {
        for l in 1..k {
            let c = (signs[k - 1] * signs[l - 1]) as i64;
            m.set(Gen::s(k, l), NCElement::gen(Gen::s(k, l)).scale(&LaurentPoly::int(c)));
        }
    }
    Ok(m)
}
