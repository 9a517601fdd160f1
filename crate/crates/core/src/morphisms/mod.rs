//! Algebra (anti)homomorphisms given by generator images, and checkers.

mod braid;
mod sp;
mod symmetry;

use std::collections::BTreeMap;
use std::fmt;

pub use braid::{braid_o, braid_o_from_serre, braid_o_serre_inverse, check_braid_o, check_group_relations, lusztig_gl};
pub use sp::{gamma2_map, gamma_gl, sp_braid_odd_probe, sp_gamma_probe, Gamma2};
pub use symmetry::{omega, omega_closed, omega_prime, rho, s_inverse_entry, varsigma};

use crate::error::{Error, Result};
use crate::nc::{Algebra, Gen, NCElement};
use crate::report::{zero_or_witness, Report};

/// A map given by images of generators.
///
/// Diagonal `t[i,i]^e` is mapped through the images of `t[i,i]` and
/// `t[i,i]^-1`. With `anti` set, words are reversed before substitution.
#[derive(Clone)]
pub struct GenMap {
    name: String,
    anti: bool,
    images: BTreeMap<Gen, NCElement>,
}

impl fmt::Debug for GenMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GenMap")
            .field("name", &self.name)
            .field("anti", &self.anti)
            .finish()
    }
}

impl GenMap {
    pub fn new(name: &str, anti: bool) -> Self {
        GenMap {
            name: name.to_string(),
            anti,
            images: BTreeMap::new(),
        }
    }

    /// The identity on the generators of `alg`.
    pub fn identity(alg: &Algebra) -> Self {
        let mut m = GenMap::new("id", false);
        for &g in alg.generators() {
            m.set(g, NCElement::gen(g));
            if g.is_diag() {
                m.set(g.with_exp(-1), NCElement::gen(g.with_exp(-1)));
            }
        }
        m
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_anti(&self) -> bool {
        self.anti
    }

    pub fn set(&mut self, g: Gen, image: NCElement) {
        self.images.insert(g, image);
    }

    pub fn remove(&mut self, g: Gen) {
        self.images.remove(&g);
    }

    pub fn get(&self, g: Gen) -> Option<&NCElement> {
        self.images.get(&g)
    }

    pub fn images(&self) -> impl Iterator<Item = (&Gen, &NCElement)> {
        self.images.iter()
    }

    pub fn renamed(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    fn image(&self, g: Gen, target: &Algebra) -> Result<NCElement> {
        if let Some(img) = self.images.get(&g) {
            return Ok(img.clone());
        }
        if g.is_diag() && g.exp != 0 {
            let unit = g.with_exp(g.exp.signum());
            if let Some(img) = self.images.get(&unit) {
                return target.pow(img, g.exp.unsigned_abs() as u32);
            }
        }
        Err(Error::UndefinedOnGenerator {
            map: self.name.clone(),
            generator: g.to_string(),
        })
    }

    /// Substitute images into `e` and normal-order the result in `target`.
    pub fn apply(&self, e: &NCElement, target: &Algebra) -> Result<NCElement> {
        let mut out = NCElement::zero();
        for (w, c) in e.terms() {
            let mut acc = NCElement::one();
            let letters: Vec<Gen> = if self.anti {
                w.iter().rev().copied().collect()
            } else {
                w.clone()
            };
            for g in letters {
                acc = target.mul(&acc, &self.image(g, target)?)?;
                if acc.is_zero() {
                    break;
                }
            }
            out.add_scaled(&acc, c);
        }
        Ok(out)
    }

    /// `self` after `inner`: `x -> self(inner(x))`, on the generators of
    /// `inner`.
    pub fn after(&self, inner: &GenMap, target: &Algebra) -> Result<GenMap> {
        let mut m = GenMap::new(&format!("{}.{}", self.name, inner.name), self.anti ^ inner.anti);
        for (g, img) in &inner.images {
            m.set(*g, self.apply(img, target)?);
        }
        Ok(m)
    }

    /// Composition of a sequence of maps, applied right to left as in
    /// `f1 f2 ... fk (x) = f1(f2(...fk(x)))`.
    pub fn compose(maps: &[&GenMap], target: &Algebra) -> Result<GenMap> {
        let (last, rest) = maps
            .split_last()
            .ok_or_else(|| Error::Invalid("empty composition".into()))?;
        let mut acc = (*last).clone();
        for m in rest.iter().rev() {
            acc = m.after(&acc, target)?;
        }
        Ok(acc)
    }
}

/// For every defining relation of `source`, its image vanishes in `target`.
pub fn check_homomorphism(map: &GenMap, source: &Algebra, target: &Algebra) -> Result<Report> {
    let mut report = Report::new("homomorphism")
        .family(source.family().name())
        .param("n", source.size() as i64);
    for r in source.relations() {
        report.check(
            &format!("{}/{}", map.name(), r.label),
            "image of relation vanishes",
            "homomorphism",
            || Ok(zero_or_witness(&map.apply(&r.element, target)?)),
        )?;
    }
    Ok(report)
}

/// Do two maps agree on the given generators (after normal ordering)?
/// Returns the first disagreement as a witness.
pub fn agree_on(f: &GenMap, g: &GenMap, gens: &[Gen], target: &Algebra) -> Result<Option<String>> {
    for &x in gens {
        let a = target.normal_form(&f.image(x, target)?)?;
        let b = target.normal_form(&g.image(x, target)?)?;
        if a != b {
            return Ok(Some(format!("{x}: {a} vs {b}")));
        }
    }
    Ok(None)
}

/// The image of a single generator, normal-ordered.
pub fn image_of(map: &GenMap, g: Gen, target: &Algebra) -> Result<NCElement> {
    map.apply(&NCElement::gen(g), target)
}
