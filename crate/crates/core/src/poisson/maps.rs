use std::collections::BTreeMap;

use super::{classical_limit, var_name, AVar, PFamily, PoissonPoly, PoissonSpec};
use crate::error::{Error, Result};
use crate::morphisms::GenMap;
use crate::nc::{Algebra, Gen};
use crate::report::Report;

/// An algebra endomorphism of a polynomial ring, by images of variables.
#[derive(Clone, Debug)]
pub struct PoissonMap {
    name: String,
    images: BTreeMap<AVar, PoissonPoly>,
}

impl PoissonMap {
    pub fn new(name: &str) -> Self {
        PoissonMap {
            name: name.to_string(),
            images: BTreeMap::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set(&mut self, x: AVar, image: PoissonPoly) {
        self.images.insert(x, image);
    }

    pub fn get(&self, x: AVar) -> Option<&PoissonPoly> {
        self.images.get(&x)
    }

    pub fn apply(&self, f: &PoissonPoly) -> Result<PoissonPoly> {
        f.subst(&mut |x| {
            self.images.get(&x).cloned().ok_or_else(|| Error::UndefinedOnGenerator {
                map: self.name.clone(),
                generator: var_name(x),
            })
        })
    }

    /// `self(inner(x))`.
    pub fn after(&self, inner: &PoissonMap) -> Result<PoissonMap> {
        let mut m = PoissonMap::new(&format!("{}.{}", self.name, inner.name));
        for (x, img) in &inner.images {
            m.set(*x, self.apply(img)?);
        }
        Ok(m)
    }

    /// `f1 f2 ... fk`, applied right to left.
    pub fn compose(maps: &[&PoissonMap]) -> Result<PoissonMap> {
        let (last, rest) = maps
            .split_last()
            .ok_or_else(|| Error::Invalid("empty composition".into()))?;
        let mut acc = (*last).clone();
        for m in rest.iter().rev() {
            acc = m.after(&acc)?;
        }
        Ok(acc)
    }

    /// First variable on which the two maps differ.
    pub fn disagreement(&self, other: &PoissonMap) -> Option<String> {
        for (x, img) in &self.images {
            if other.images.get(x) != Some(img) {
                let o = other
                    .images
                    .get(x)
                    .map(|p| p.to_string())
                    .unwrap_or_else(|| "undefined".into());
                return Some(format!("{}: {img} vs {o}", var_name(*x)));
            }
        }
        None
    }
}

fn orth_only(spec: &PoissonSpec) -> Result<usize> {
    if spec.family() != PFamily::Orth {
        return Err(Error::Invalid("expected the orthogonal Poisson algebra".into()));
    }
    Ok(spec.size())
}

/// The braid generator `beta_i` acting on `P_N`.
pub fn braid_poisson(spec: &PoissonSpec, i: usize) -> Result<PoissonMap> {
    let n = orth_only(spec)?;
    if i == 0 || i >= n {
        return Err(Error::Invalid(format!("braid index {i} out of range for N = {n}")));
    }
    let a = |k: usize, l: usize| spec.entry(k, l);
    let mut m = PoissonMap::new(&format!("beta{i}"));
    for &(k, l) in spec.vars() {
        let (k, l) = (k as usize, l as usize);
        let img = if (k, l) == (i + 1, i) {
            -a(k, l)
        } else if k == i && l < i {
            &a(i + 1, l) - &(&a(i + 1, i) * &a(i, l))
        } else if k == i + 1 && l < i {
            a(i, l)
        } else if l == i && k >= i + 2 {
            &a(k, i + 1) - &(&a(k, i) * &a(i + 1, i))
        } else if l == i + 1 && k >= i + 2 {
            a(k, i)
        } else {
            a(k, l)
        };
        m.set((k as u8, l as u8), img);
    }
    Ok(m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AntiKind {
    /// `A -> A^-1`.
    Inv,
    /// Transpose along the second diagonal.
    Flip,
}

/// Bracket-reversing maps of `P_N`.
pub fn poisson_anti(spec: &PoissonSpec, which: AntiKind) -> Result<PoissonMap> {
    let n = orth_only(spec)?;
    let mut m = PoissonMap::new(match which {
        AntiKind::Inv => "inv",
        AntiKind::Flip => "flip",
    });
    for &(k, l) in spec.vars() {
        let (k, l) = (k as usize, l as usize);
        let img = match which {
            AntiKind::Flip => spec.entry(n - l + 1, n - k + 1),
            AntiKind::Inv => unitri_inverse_entry(spec, k, l),
        };
        m.set((k as u8, l as u8), img);
    }
    Ok(m)
}

/// `(A^-1)_kl = sum over k > r_1 > ... > r_p > l of (-1)^(p+1) a_{k r_1} ... a_{r_p l}`.
pub fn unitri_inverse_entry(spec: &PoissonSpec, k: usize, l: usize) -> PoissonPoly {
    if k == l {
        return PoissonPoly::one();
    }
    if k < l {
        return PoissonPoly::zero();
    }
    let inner: Vec<usize> = (l + 1..k).collect();
    let mut out = PoissonPoly::zero();
    for mask in 0u32..(1 << inner.len()) {
        let mut path = vec![k];
        path.extend(
            inner
                .iter()
                .rev()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &r)| r),
        );
        path.push(l);
        let mut t = PoissonPoly::int(if path.len() % 2 == 1 { 1 } else { -1 });
        for w in path.windows(2) {
            t = &t * &spec.entry(w[0], w[1]);
        }
        out = &out + &t;
    }
    out
}

/// `{m x, m y} = sign * m {x, y}` on all pairs of variables.
pub fn check_poisson_map(map: &PoissonMap, spec: &PoissonSpec, sign: i64) -> Result<Report> {
    let mut report = Report::new("poisson-map")
        .family(spec.family_name())
        .param("n", spec.size() as i64);
    let vars = spec.vars().to_vec();
    for &x in &vars {
        for &y in &vars {
            if x >= y {
                continue;
            }
            let id = format!("{}/{},{}", map.name(), var_name(x), var_name(y));
            report.check(&id, "bracket of images vs image of bracket", "Poisson map", || {
                let fx = map.apply(&PoissonPoly::var(x.0 as usize, x.1 as usize))?;
                let fy = map.apply(&PoissonPoly::var(y.0 as usize, y.1 as usize))?;
                let lhs = spec.bracket(&fx, &fy);
                let rhs = map.apply(&spec.table_value(x, y))?.scale_int(sign);
                let d = &lhs - &rhs;
                Ok((!d.is_zero()).then(|| d.to_string()))
            })?;
        }
    }
    Ok(report)
}

/// Braid and distant-commutation relations among the given `beta_i`
/// (indexed from 1).
pub fn check_poisson_braid_relations(maps: &[PoissonMap]) -> Result<Report> {
    let mut report = Report::new("poisson-braid-relations");
    for a in 0..maps.len() {
        for b in a + 1..maps.len() {
            let (x, y) = (&maps[a], &maps[b]);
            let (lhs, rhs, id) = if b == a + 1 {
                (
                    PoissonMap::compose(&[x, y, x])?,
                    PoissonMap::compose(&[y, x, y])?,
                    format!("braid[{},{}]", a + 1, b + 1),
                )
            } else {
                (
                    PoissonMap::compose(&[x, y])?,
                    PoissonMap::compose(&[y, x])?,
                    format!("commute[{},{}]", a + 1, b + 1),
                )
            };
            report.check(&id, "relation on every generator", "braid group", || {
                Ok(lhs.disagreement(&rhs))
            })?;
        }
    }
    Ok(report)
}

/// The classical limit of a quantum map, on the variables of `spec`.
pub fn limit_of_map(map: &GenMap, spec: &PoissonSpec, alg: &Algebra) -> Result<PoissonMap> {
    let mut m = PoissonMap::new(&format!("lim {}", map.name()));
    for &(i, j) in spec.vars() {
        let img = map.apply(&Gen::s(i as usize, j as usize).into(), alg)?;
        m.set((i, j), classical_limit(&img)?);
    }
    Ok(m)
}
