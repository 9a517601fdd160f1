use super::{PoissonPoly, PoissonSpec};
use crate::error::Result;
use crate::report::Report;

/// Dense operator on `C^N (x) C^N` with polynomial entries; index
/// `(a, b)` is `a * n + b` (0-based).
struct Op {
    n: usize,
    m: Vec<PoissonPoly>,
}

impl Op {
    fn zero(n: usize) -> Op {
        Op {
            n,
            m: vec![PoissonPoly::zero(); n.pow(4)],
        }
    }

    fn at(&self, row: (usize, usize), col: (usize, usize)) -> &PoissonPoly {
        let d = self.n * self.n;
        &self.m[(row.0 * self.n + row.1) * d + col.0 * self.n + col.1]
    }

    fn set(&mut self, row: (usize, usize), col: (usize, usize), v: PoissonPoly) {
        let d = self.n * self.n;
        self.m[(row.0 * self.n + row.1) * d + col.0 * self.n + col.1] = v;
    }

    fn mul(&self, o: &Op) -> Op {
        let d = self.n * self.n;
        let mut out = Op::zero(self.n);
        for r in 0..d {
            for k in 0..d {
                let x = &self.m[r * d + k];
                if x.is_zero() {
                    continue;
                }
                for c in 0..d {
                    let y = &o.m[k * d + c];
                    if !y.is_zero() {
                        out.m[r * d + c] = &out.m[r * d + c] + &(x * y);
                    }
                }
            }
        }
        out
    }

    fn add(&self, o: &Op, sign: i64) -> Op {
        let m = self.m.iter().zip(&o.m).map(|(x, y)| x + &y.scale_int(sign)).collect();
        Op { n: self.n, m }
    }
}

/// `{A_1, A_2}` from `[r, A_1 A_2] + A_1 r^t A_2 - A_2 r^t A_1`, as the
/// value at `(i,j),(k,l)` for every index (1-based in the result).
fn rmatrix_side(spec: &PoissonSpec) -> Op {
    let n = spec.size();
    let a = spec.matrix();
    let (mut a1, mut a2, mut r, mut rt) = (Op::zero(n), Op::zero(n), Op::zero(n), Op::zero(n));
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                a1.set((x, z), (y, z), a[x][y].clone());
                a2.set((z, x), (z, y), a[x][y].clone());
            }
        }
    }
    for i in 0..n {
        r.set((i, i), (i, i), PoissonPoly::one());
        rt.set((i, i), (i, i), PoissonPoly::one());
        for j in i + 1..n {
            // E_ij (x) E_ji and E_ji (x) E_ji
            r.set((i, j), (j, i), PoissonPoly::int(2));
            rt.set((j, j), (i, i), PoissonPoly::int(2));
        }
    }
    let a12 = a1.mul(&a2);
    let comm = r.mul(&a12).add(&a12.mul(&r), -1);
    let t1 = a1.mul(&rt).mul(&a2);
    let t2 = a2.mul(&rt).mul(&a1);
    comm.add(&t1, 1).add(&t2, -1)
}

/// The matrix-form value of `{A_ij, A_kl}` (1-based indices).
pub fn rmatrix_bracket_entry(spec: &PoissonSpec, i: usize, j: usize, k: usize, l: usize) -> PoissonPoly {
    rmatrix_side(spec).at((i - 1, k - 1), (j - 1, l - 1)).clone()
}

/// Entrywise comparison of the table bracket with the r-matrix form; one
/// check per first entry `A_ij`.
pub fn rmatrix_bracket_check(spec: &PoissonSpec) -> Result<Report> {
    let n = spec.size();
    let side = rmatrix_side(spec);
    let mut report = Report::new("rmatrix").family(spec.family_name()).param("n", n as i64);
    for i in 1..=n {
        for j in 1..=n {
            report.check(
                &format!("A[{i},{j}]"),
                "{A_1,A_2} entries against the r-matrix form",
                "matrix bracket",
                || {
                    let f = spec.entry(i, j);
                    for k in 1..=n {
                        for l in 1..=n {
                            let lhs = spec.bracket(&f, &spec.entry(k, l));
                            let rhs = side.at((i - 1, k - 1), (j - 1, l - 1));
                            if &lhs != rhs {
                                return Ok(Some(format!("[{k},{l}]: {lhs} vs {rhs}")));
                            }
                        }
                    }
                    Ok(None)
                },
            )?;
        }
    }
    Ok(report)
}
