//! Small dense matrices over the commutative polynomial ring.

use std::collections::HashMap;

use crate::coeff::Rational;
use crate::error::{Error, Result};
use crate::poisson::PoissonPoly;

/// Row-major square matrix, 0-based.
pub type PMatrix = Vec<Vec<PoissonPoly>>;

pub fn identity(n: usize) -> PMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| PoissonPoly::int((i == j) as i64)).collect())
        .collect()
}

pub fn transpose(m: &PMatrix) -> PMatrix {
    let n = m.len();
    (0..n).map(|i| (0..n).map(|j| m[j][i].clone()).collect()).collect()
}

pub fn add(a: &PMatrix, b: &PMatrix) -> PMatrix {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn sub(a: &PMatrix, b: &PMatrix) -> PMatrix {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

pub fn scale(a: &PMatrix, c: &PoissonPoly) -> PMatrix {
    a.iter().map(|r| r.iter().map(|x| x * c).collect()).collect()
}

pub fn mul(a: &PMatrix, b: &PMatrix) -> PMatrix {
    let n = a.len();
    let mut out = vec![vec![PoissonPoly::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] = &out[i][j] + &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

pub fn trace(m: &PMatrix) -> PoissonPoly {
    let mut t = PoissonPoly::zero();
    for (i, row) in m.iter().enumerate() {
        t = &t + &row[i];
    }
    t
}

/// Determinant by Laplace expansion along rows, memoized on the set of
/// used columns. Fraction-free.
pub fn det(m: &PMatrix) -> PoissonPoly {
    fn go(m: &PMatrix, used: u32, memo: &mut HashMap<u32, PoissonPoly>) -> PoissonPoly {
        let n = m.len();
        let row = used.count_ones() as usize;
        if row == n {
            return PoissonPoly::one();
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut out = PoissonPoly::zero();
        let mut free_before = 0;
        for c in 0..n {
            if used >> c & 1 == 1 {
                continue;
            }
            if !m[row][c].is_zero() {
                let minor = go(m, used | 1 << c, memo);
                let t = &m[row][c] * &minor;
                out = if free_before % 2 == 0 { &out + &t } else { &out - &t };
            }
            free_before += 1;
        }
        memo.insert(used, out.clone());
        out
    }
    go(m, 0, &mut HashMap::new())
}

/// Pfaffian by expansion along the first row.
pub fn pfaffian(m: &PMatrix) -> Result<PoissonPoly> {
    if m.len() % 2 == 1 {
        return Err(Error::OddSize(m.len()));
    }
    fn go(m: &PMatrix, idx: &[usize]) -> PoissonPoly {
        if idx.is_empty() {
            return PoissonPoly::one();
        }
        let first = idx[0];
        let mut out = PoissonPoly::zero();
        for t in 1..idx.len() {
            let x = &m[first][idx[t]];
            if x.is_zero() {
                continue;
            }
            let rest: Vec<usize> = idx[1..].iter().copied().filter(|&r| r != idx[t]).collect();
            let term = x * &go(m, &rest);
            out = if t % 2 == 1 { &out + &term } else { &out - &term };
        }
        out
    }
    let idx: Vec<usize> = (0..m.len()).collect();
    Ok(go(m, &idx))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Number of inversions of a sequence.
pub fn inversions(p: &[usize]) -> usize {
    let mut c = 0;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                c += 1;
            }
        }
    }
    c
}

/// All permutations of `0..n`.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    permutations(n)
}

/// Pfaffian from the signed sum over the whole symmetric group, divided
/// by `2^k k!`. Slow; an oracle for small sizes.
pub fn pfaffian_by_permutations(m: &PMatrix) -> Result<PoissonPoly> {
    let n = m.len();
    if n % 2 == 1 {
        return Err(Error::OddSize(n));
    }
    let mut sum = PoissonPoly::zero();
    for p in permutations(n) {
        let mut t = PoissonPoly::int(if inversions(&p).is_multiple_of(2) { 1 } else { -1 });
        for pair in p.chunks(2) {
            t = &t * &m[pair[0]][pair[1]];
            if t.is_zero() {
                break;
            }
        }
        sum = &sum + &t;
    }
    let k = n / 2;
    let norm: i64 = (1..=k as i64).product::<i64>() * (1i64 << k);
    Ok(sum.map_coeffs(|c| c.scale(&Rational::new(1, norm))))
}

/// Principal submatrix on the (0-based) index set.
pub fn submatrix(m: &PMatrix, idx: &[usize]) -> PMatrix {
    idx.iter()
        .map(|&i| idx.iter().map(|&j| m[i][j].clone()).collect())
        .collect()
}

/// Rank over the rationals.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] * &inv;
                for j in c..cols {
                    let d = &f * &m[r][j];
                    m[i][j] = &m[i][j] - &d;
                }
            }
        }
        r += 1;
    }
    r
}
