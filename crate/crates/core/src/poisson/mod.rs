//! Commutative Poisson limits of the twisted algebras: brackets from
//! generator tables, the `q -> 1` functor, and Poisson symmetries.

mod maps;
mod poly;
mod rmatrix;

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use maps::unitri_inverse_entry;
pub use maps::{
    braid_poisson, check_poisson_braid_relations, check_poisson_map, limit_of_map, poisson_anti, AntiKind, PoissonMap,
};
pub use poly::{mono_to_string, AVar, Mono, PoissonPoly};
pub use rmatrix::{rmatrix_bracket_check, rmatrix_bracket_entry};

use crate::algebras::{build_uqp_o, build_uqp_sp_ext, sp_supported};
use crate::error::{Error, Result};
use crate::nc::{Algebra, Family, Gen, Kind, NCElement};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PFamily {
    /// `P_N`: lower unitriangular `A`.
    Orth,
    /// `P^_2n`: block-triangular `A` with genuine diagonal entries.
    Symp,
}

/// A Poisson algebra given by its bracket on pairs of variables.
#[derive(Clone, Debug)]
pub struct PoissonSpec {
    family: PFamily,
    size: usize,
    vars: Vec<AVar>,
    table: HashMap<(AVar, AVar), PoissonPoly>,
}

fn delta(b: bool) -> i64 {
    b as i64
}

impl PoissonSpec {
    fn empty(family: PFamily, size: usize) -> Self {
        let mut vars = Vec::new();
        for i in 1..=size {
            for j in 1..=size {
                let live = match family {
                    PFamily::Orth => i > j,
                    PFamily::Symp => sp_supported(i, j),
                };
                if live {
                    vars.push((i as u8, j as u8));
                }
            }
        }
        vars.sort();
        PoissonSpec {
            family,
            size,
            vars,
            table: HashMap::new(),
        }
    }

    pub fn family(&self) -> PFamily {
        self.family
    }

    /// Matrix dimension (`N`, or `2n` in the symplectic case).
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn vars(&self) -> &[AVar] {
        &self.vars
    }

    pub fn family_name(&self) -> &'static str {
        match self.family {
            PFamily::Orth => "o",
            PFamily::Symp => "sp",
        }
    }

    /// Entry `A_ij`: a variable, `1` on the orthogonal diagonal, or `0`.
    pub fn entry(&self, i: usize, j: usize) -> PoissonPoly {
        if i == 0 || j == 0 || i > self.size || j > self.size {
            return PoissonPoly::zero();
        }
        match self.family {
            PFamily::Orth if i == j => PoissonPoly::one(),
            PFamily::Orth if i < j => PoissonPoly::zero(),
            PFamily::Symp if !sp_supported(i, j) => PoissonPoly::zero(),
            _ => PoissonPoly::var(i, j),
        }
    }

    /// The matrix `A`, rows then columns, 0-based.
    pub fn matrix(&self) -> Vec<Vec<PoissonPoly>> {
        (1..=self.size)
            .map(|i| (1..=self.size).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// `{x, y}` for variables.
    pub fn table_value(&self, x: AVar, y: AVar) -> PoissonPoly {
        self.table.get(&(x, y)).cloned().unwrap_or_default()
    }

    /// Overwrite `{x, y}` (and `{y, x}` with the opposite sign). Used for
    /// negative controls.
    pub fn set_table_value(&mut self, x: AVar, y: AVar, value: PoissonPoly) {
        self.table.insert((y, x), -&value);
        self.table.insert((x, y), value);
    }

    /// Bilinear, Leibniz extension of the table.
    pub fn bracket(&self, f: &PoissonPoly, g: &PoissonPoly) -> PoissonPoly {
        let gv: Vec<(AVar, PoissonPoly)> = g.vars().into_iter().map(|y| (y, g.derivative(y))).collect();
        let mut out = PoissonPoly::zero();
        for x in f.vars() {
            let dfx = f.derivative(x);
            for (y, dgy) in &gv {
                let Some(v) = self.table.get(&(x, *y)) else { continue };
                if v.is_zero() {
                    continue;
                }
                out = &out + &(&(&dfx * dgy) * v);
            }
        }
        out
    }

    /// The quantum algebra whose `q -> 1` limit this is.
    pub fn quantum(&self) -> Result<Algebra> {
        match self.family {
            PFamily::Orth => build_uqp_o(self.size),
            PFamily::Symp => build_uqp_sp_ext(self.size / 2),
        }
    }
}

/// The six-case bracket of `P_N`, when `(i,j),(k,l)` is in one of the
/// displayed orders.
fn orth_case(a: &dyn Fn(usize, usize) -> PoissonPoly, i: usize, j: usize, k: usize, l: usize) -> Option<PoissonPoly> {
    let two = |p: PoissonPoly| p.scale_int(2);
    if (i > j && j > k && k > l) || (i > k && k > l && l > j) {
        return Some(PoissonPoly::zero());
    }
    if i > k && k > j && j > l {
        return Some(two(&(&a(i, k) * &a(j, l)) - &(&a(k, j) * &a(i, l))));
    }
    if j == k && i > j && j > l {
        return Some(&(&a(i, j) * &a(j, l)) - &two(a(i, l)));
    }
    if i == k && i > l && l > j {
        return Some(&(&a(i, j) * &a(i, l)) - &two(a(l, j)));
    }
    if j == l && k > i && i > j {
        return Some(&(&a(i, j) * &a(k, j)) - &two(a(k, i)));
    }
    None
}

/// `P_N` with the bracket of its six-case table.
pub fn build_poisson_o(n: usize) -> Result<PoissonSpec> {
    if n < 2 {
        return Err(Error::Invalid("N must be at least 2".into()));
    }
    let mut spec = PoissonSpec::empty(PFamily::Orth, n);
    let a = |i: usize, j: usize| spec.entry(i, j);
    let mut table = HashMap::new();
    for &x in &spec.vars {
        for &y in &spec.vars {
            let (i, j, k, l) = (x.0 as usize, x.1 as usize, y.0 as usize, y.1 as usize);
            let v = if x == y {
                PoissonPoly::zero()
            } else if let Some(v) = orth_case(&a, i, j, k, l) {
                v
            } else if let Some(v) = orth_case(&a, k, l, i, j) {
                -v
            } else {
                return Err(Error::Invalid(format!("no bracket case for a[{i},{j}], a[{k},{l}]")));
            };
            table.insert((x, y), v);
        }
    }
    spec.table = table;
    Ok(spec)
}

/// The symplectic bracket value `{a_ij, a_kl}` from the closed formula.
fn symp_value(a: &dyn Fn(usize, usize) -> PoissonPoly, i: usize, j: usize, k: usize, l: usize) -> PoissonPoly {
    let d = |x: usize, y: usize| delta(x == y);
    let c0 = d(i, k) + d(j, k) - d(i, l) - d(j, l);
    let mut out = (&a(i, j) * &a(k, l)).scale_int(c0);
    let c1 = -2 * (delta(l < j) - delta(i < k));
    out = &out + &(&a(k, j) * &a(i, l)).scale_int(c1);
    out = &out - &(&a(k, i) * &a(l, j)).scale_int(2 * delta(l < i));
    &out + &(&a(i, k) * &a(j, l)).scale_int(2 * delta(j < k))
}

/// `P^_2n` with its closed-form bracket.
pub fn build_poisson_sp(n: usize) -> Result<PoissonSpec> {
    if n < 1 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    let mut spec = PoissonSpec::empty(PFamily::Symp, 2 * n);
    let a = |i: usize, j: usize| spec.entry(i, j);
    let mut table = HashMap::new();
    for &x in &spec.vars {
        for &y in &spec.vars {
            let v = symp_value(&a, x.0 as usize, x.1 as usize, y.0 as usize, y.1 as usize);
            table.insert((x, y), v);
        }
    }
    spec.table = table;
    Ok(spec)
}

/// `build_poisson_o(n)` or `build_poisson_sp(n)`.
pub fn build_poisson(family: PFamily, n: usize) -> Result<PoissonSpec> {
    match family {
        PFamily::Orth => build_poisson_o(n),
        PFamily::Symp => build_poisson_sp(n),
    }
}

fn var_name(x: AVar) -> String {
    format!("a[{},{}]", x.0, x.1)
}

/// Antisymmetry of the table and the Jacobi identity on every triple of
/// distinct variables.
pub fn check_jacobi(spec: &PoissonSpec) -> Result<Report> {
    let mut report = Report::new("jacobi")
        .family(spec.family_name())
        .param("n", spec.size as i64);
    let vars = spec.vars.clone();
    report.check("antisymmetry", "{x,y} = -{y,x} on the table", "bracket table", || {
        for &x in &vars {
            for &y in &vars {
                let s = &spec.table_value(x, y) + &spec.table_value(y, x);
                if !s.is_zero() {
                    return Ok(Some(format!("{} {}: {s}", var_name(x), var_name(y))));
                }
            }
        }
        Ok(None)
    })?;
    let gens: Vec<PoissonPoly> = vars
        .iter()
        .map(|&(i, j)| PoissonPoly::var(i as usize, j as usize))
        .collect();
    for a in 0..gens.len() {
        for b in a + 1..gens.len() {
            for c in b + 1..gens.len() {
                let id = format!("{},{},{}", var_name(vars[a]), var_name(vars[b]), var_name(vars[c]));
                report.check(&id, "Jacobi identity", "bracket table", || {
                    let (x, y, z) = (&gens[a], &gens[b], &gens[c]);
                    let j = &(&spec.bracket(x, &spec.bracket(y, z)) + &spec.bracket(y, &spec.bracket(z, x)))
                        + &spec.bracket(z, &spec.bracket(x, y));
                    Ok((!j.is_zero()).then(|| j.to_string()))
                })?;
            }
        }
    }
    Ok(report)
}

/// `{f, a} = 0` for every variable `a`.
pub fn casimir_check(f: &PoissonPoly, spec: &PoissonSpec, label: &str, claim: &str) -> Result<Report> {
    let mut report = Report::new("casimir")
        .family(spec.family_name())
        .param("n", spec.size as i64);
    for &x in &spec.vars {
        let g = PoissonPoly::var(x.0 as usize, x.1 as usize);
        report.check(
            &format!("{label}/{}", var_name(x)),
            "bracket with a generator vanishes",
            claim,
            || {
                let b = spec.bracket(f, &g);
                Ok((!b.is_zero()).then(|| b.to_string()))
            },
        )?;
    }
    Ok(report)
}

/// Image at `q = 1` with `s[i,j] -> a[i,j]`.
pub fn classical_limit(e: &NCElement) -> Result<PoissonPoly> {
    let mut out = PoissonPoly::zero();
    for (w, c) in e.terms() {
        let c = c.eval_q1();
        if c.is_zero() {
            continue;
        }
        let mut acc = PoissonPoly::constant(c);
        for g in w {
            if g.kind != Kind::S {
                return Err(Error::Invalid(format!("no classical limit for generator {g}")));
            }
            acc = &acc * &PoissonPoly::var(g.row(), g.col());
        }
        out = &out + &acc;
    }
    Ok(out)
}

/// A lift of `f` to the quantum algebra: each monomial becomes a word in
/// the `s[i,j]`, in sorted order or shuffled by `rng`.
pub fn lift(f: &PoissonPoly, rng: Option<&mut ChaCha8Rng>) -> NCElement {
    let mut out = NCElement::zero();
    let mut rng = rng;
    for (m, c) in f.terms() {
        let mut w: Vec<Gen> = Vec::new();
        for &((i, j), e) in m {
            for _ in 0..e {
                w.push(Gen::s(i as usize, j as usize));
            }
        }
        if let Some(r) = rng.as_deref_mut() {
            w.shuffle(r);
        }
        out.add_term(w, c);
    }
    out
}

/// `{f,h} = (f~ h~ - h~ f~)/(1-q) at q = 1`, computed in the quantum
/// algebra from lifts of `f` and `h`.
pub fn bracket_via_quantum(
    f: &PoissonPoly,
    h: &PoissonPoly,
    alg: &Algebra,
    rng: Option<&mut ChaCha8Rng>,
) -> Result<PoissonPoly> {
    let (ft, ht) = match rng {
        Some(r) => (lift(f, Some(r)), lift(h, Some(r))),
        None => (lift(f, None), lift(h, None)),
    };
    let comm = alg.commutator(&ft, &ht)?;
    let rated = {
        let mut e = NCElement::zero();
        for (w, c) in comm.terms() {
            e.add_term(w.clone(), &c.classical_rate()?);
        }
        e
    };
    classical_limit(&rated)
}

fn random_poly(rng: &mut ChaCha8Rng, vars: &[AVar], max_deg: usize) -> PoissonPoly {
    let mut p = PoissonPoly::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let deg = rng.gen_range(1..=max_deg);
        let mut t = PoissonPoly::int(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 });
        for _ in 0..deg {
            let &(i, j) = vars.choose(rng).expect("variables");
            t = &t * &PoissonPoly::var(i as usize, j as usize);
        }
        p = &p + &t;
    }
    p
}

/// The quantum and table brackets agree on all generator pairs (sorted
/// and shuffled lifts) and on `random_pairs` random pairs of degree <= 2.
pub fn check_via_quantum(spec: &PoissonSpec, random_pairs: usize, seed: u64) -> Result<Report> {
    let alg = spec.quantum()?;
    let mut report = Report::new("poisson-limit")
        .family(spec.family_name())
        .param("n", spec.size as i64)
        .param("random_pairs", random_pairs as i64)
        .seed(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vars = spec.vars.clone();
    for &x in &vars {
        for &y in &vars {
            if x >= y {
                continue;
            }
            let f = PoissonPoly::var(x.0 as usize, x.1 as usize);
            let g = PoissonPoly::var(y.0 as usize, y.1 as usize);
            let id = format!("{},{}", var_name(x), var_name(y));
            report.check(
                &id,
                "quantum commutator limit equals table bracket",
                "classical limit",
                || {
                    let want = spec.bracket(&f, &g);
                    let got = bracket_via_quantum(&f, &g, &alg, None)?;
                    Ok((got != want).then(|| format!("{got} vs {want}")))
                },
            )?;
        }
    }
    let mut witness = None;
    for _ in 0..random_pairs {
        let f = random_poly(&mut rng, &vars, 2);
        let g = random_poly(&mut rng, &vars, 2);
        let want = spec.bracket(&f, &g);
        let sorted = bracket_via_quantum(&f, &g, &alg, None)?;
        let shuffled = bracket_via_quantum(&f, &g, &alg, Some(&mut rng))?;
        if sorted != want || shuffled != want {
            witness = Some(format!("{{{f}, {g}}}: {sorted} / {shuffled} vs {want}"));
            break;
        }
    }
    report.check(
        "random",
        "random pairs, two lift orders",
        "independence of the lift",
        || Ok(witness),
    )?;
    Ok(report)
}

/// Which family a quantum algebra's limit belongs to.
pub fn poisson_for(alg: &Algebra) -> Result<PoissonSpec> {
    match alg.family() {
        Family::Orth => build_poisson_o(alg.size()),
        Family::SpExt => build_poisson_sp(alg.size() / 2),
        Family::Gl => Err(Error::Invalid("U_q(gl_N) has no Poisson limit here".into())),
    }
}
