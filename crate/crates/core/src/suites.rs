//! Named verification suites, as run by the command-line tool.

use crate::algebras::{
    build_uq_gl, build_uqp_o, build_uqp_sp_ext, check_embedding, check_relation_set, generalized_serre_relations,
    reflection_relations, serre_relations, sp_quadratic,
};
use crate::coeff::LaurentPoly;
use crate::error::{Error, Result};
use crate::invariants::{
    c_k, check_det_family, check_pfaffian_family, conjecture_probe, det_expansion_check, jacobian_rank_probe,
    liouville_check, phi_k, quantum_center_check, quantum_invariants_report, sp_casimirs,
};
use crate::morphisms::{
    agree_on, braid_o, check_braid_o, check_group_relations, check_homomorphism, gamma2_map, lusztig_gl, omega,
    omega_closed, omega_prime, rho, sp_braid_odd_probe, sp_gamma_probe, varsigma, GenMap,
};
use crate::nc::{associativity_probe, confluence_probe, Algebra, Gen, NCElement};
use crate::poisson::{
    braid_poisson, build_poisson_o, build_poisson_sp, check_jacobi, check_poisson_braid_relations, check_poisson_map,
    check_via_quantum, classical_limit, limit_of_map, poisson_anti, rmatrix_bracket_check, AntiKind, PoissonPoly,
    PoissonSpec,
};
use crate::report::Report;
use crate::tensor;

/// Every suite name accepted by [`run_suite`].
pub const SUITES: &[&str] = &[
    "defrel",
    "confluence",
    "braid-o",
    "braid-gl",
    "symmetries",
    "sp-probes",
    "gamma2",
    "poisson",
    "casimir",
    "tensor",
    "limit",
];

/// Options shared by all suites. `None` means "the suite's default".
#[derive(Clone, Debug, Default)]
pub struct SuiteParams {
    pub family: Option<String>,
    pub n: Option<usize>,
    pub set: Option<String>,
    pub suite: Option<String>,
    pub seed: u64,
    pub big_budget: bool,
    pub smoke: bool,
    pub extend_2143: bool,
}

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}

impl SuiteParams {
    /// Sizes to run: the explicit `--n`, the smoke size, or the full range.
    fn sizes(&self, full: std::ops::RangeInclusive<usize>, smoke: usize) -> Vec<usize> {
        match (self.n, self.smoke) {
            (Some(n), _) => vec![n],
            (None, true) => vec![smoke],
            (None, false) => full.collect(),
        }
    }

    fn families(&self, allowed: &[&'static str]) -> Result<Vec<&'static str>> {
        match &self.family {
            None => Ok(allowed.to_vec()),
            Some(f) => match allowed.iter().find(|a| *a == f) {
                Some(a) => Ok(vec![*a]),
                None => usage(format!(
                    "family `{f}` is not available here (expected one of {})",
                    allowed.join(", ")
                )),
            },
        }
    }

    fn choice(&self, value: &Option<String>, flag: &str, allowed: &[&'static str]) -> Result<Vec<&'static str>> {
        match value {
            None => Ok(allowed.to_vec()),
            Some(v) => match allowed.iter().find(|a| *a == v) {
                Some(a) => Ok(vec![*a]),
                None => usage(format!("--{flag} `{v}` is not one of {}", allowed.join(", "))),
            },
        }
    }

    fn reject_n(&self, suite: &str) -> Result<()> {
        if self.n.is_some() {
            return usage(format!("`{suite}` has a fixed size; drop --n"));
        }
        Ok(())
    }
}

fn bounded(n: usize, lo: usize, hi: usize, what: &str) -> Result<()> {
    if n < lo || n > hi {
        return usage(format!("{what} must be in {lo}..={hi}, got {n}"));
    }
    Ok(())
}

/// Runs the named suite. Findings never fail a report; non-termination
/// is returned as an error.
pub fn run_suite(name: &str, p: &SuiteParams) -> Result<Report> {
    let mut report = Report::new(name).seed(p.seed);
    if let Some(f) = &p.family {
        report = report.family(f);
    }
    if let Some(n) = p.n {
        report = report.param("n", n as i64);
    }
    match name {
        "defrel" => defrel(p, &mut report)?,
        "confluence" => confluence(p, &mut report)?,
        "braid-o" => braid_o_suite(p, &mut report)?,
        "braid-gl" => braid_gl(p, &mut report)?,
        "symmetries" => symmetries(p, &mut report)?,
        "sp-probes" => sp_probes(p, &mut report)?,
        "gamma2" => gamma2(p, &mut report)?,
        "poisson" => poisson(p, &mut report)?,
        "casimir" => casimir(p, &mut report)?,
        "tensor" => tensor_suite(p, &mut report)?,
        "limit" => limit(p, &mut report)?,
        other => {
            return usage(format!(
                "unknown suite `{other}` (expected one of {})",
                SUITES.join(", ")
            ))
        }
    }
    Ok(report)
}

fn algebra_for(family: &str, n: usize) -> Result<Algebra> {
    match family {
        "o" => {
            bounded(n, 2, 8, "N")?;
            build_uqp_o(n)
        }
        "gl" => {
            bounded(n, 1, 6, "N")?;
            build_uq_gl(n)
        }
        "sp" => {
            bounded(n, 1, 3, "n")?;
            build_uqp_sp_ext(n)
        }
        other => usage(format!("unknown family `{other}`")),
    }
}

fn poisson_for_family(family: &str, n: usize) -> Result<PoissonSpec> {
    match family {
        "o" => {
            bounded(n, 2, 7, "N")?;
            build_poisson_o(n)
        }
        "sp" => {
            bounded(n, 1, 3, "n")?;
            build_poisson_sp(n)
        }
        other => usage(format!("unknown Poisson family `{other}`")),
    }
}

fn defrel(p: &SuiteParams, report: &mut Report) -> Result<()> {
    let sets = p.choice(&p.set, "set", &["relations", "reflection", "serre", "embed"])?;
    for fam in p.families(&["o", "gl", "sp"])? {
        let sizes = match fam {
            "o" => p.sizes(2..=5, 3),
            "gl" => p.sizes(2..=3, 2),
            _ => p.sizes(1..=2, 1),
        };
        for n in sizes {
            let alg = algebra_for(fam, n)?;
            let tag = format!("{fam}{n}");
            for &set in &sets {
                match (set, fam) {
                    ("relations", _) => {
                        report.absorb(&tag, check_relation_set(&alg, alg.relations(), "defining relations")?);
                    }
                    ("reflection", "o") if n <= 4 => {
                        let rels = reflection_relations(&alg);
                        report.absorb(
                            &format!("{tag}/reflection"),
                            check_relation_set(&alg, &rels, "reflection form")?,
                        );
                    }
                    ("serre", "o") if n >= 3 => {
                        report.absorb(
                            &format!("{tag}/serre"),
                            check_relation_set(&alg, &serre_relations(n), "Serre relations")?,
                        );
                        let g = generalized_serre_relations(n);
                        report.absorb(
                            &format!("{tag}/gserre"),
                            check_relation_set(&alg, &g, "Serre relations")?,
                        );
                    }
                    ("embed", "o") if n <= 3 => {
                        report.absorb(&format!("{tag}/embed"), check_embedding(&alg, &build_uq_gl(n)?)?);
                    }
                    ("embed", "sp") => {
                        report.absorb(&format!("{tag}/embed"), check_embedding(&alg, &build_uq_gl(2 * n)?)?);
                    }
                    _ => {}
                }
            }
        }
    }
    Ok(())
}

fn confluence(p: &SuiteParams, report: &mut Report) -> Result<()> {
    for fam in p.families(&["o", "gl", "sp"])? {
        let (sizes, len, samples) = match fam {
            "o" => (p.sizes(3..=4, 3), 5, 300),
            "gl" => (p.sizes(2..=3, 2), 4, 300),
            _ => (p.sizes(1..=2, 1), 4, 200),
        };
        let samples = if p.smoke { samples / 3 } else { samples };
        for n in sizes {
            let alg = algebra_for(fam, n)?;
            let tag = format!("{fam}{n}");
            report.absorb(
                &format!("{tag}/confluence"),
                confluence_probe(&alg, len, samples, p.seed)?,
            );
            report.absorb(&format!("{tag}/assoc"), associativity_probe(&alg, samples / 3, p.seed)?);
        }
    }
    Ok(())
}

fn braid_o_suite(p: &SuiteParams, report: &mut Report) -> Result<()> {
    for n in p.sizes(2..=5, 3) {
        let alg = algebra_for("o", n)?;
        let tag = format!("o{n}");
        if n <= 4 {
            report.absorb(&tag, check_braid_o(&alg)?);
        } else {
            // homomorphism checks are heavy here; relations among the maps only
            let maps: Vec<GenMap> = (1..n).map(|i| braid_o(&alg, i, false)).collect::<Result<_>>()?;
            report.absorb(&tag, check_group_relations(&maps, &alg)?);
        }
    }
    Ok(())
}

fn braid_gl(p: &SuiteParams, report: &mut Report) -> Result<()> {
    for n in p.sizes(2..=3, 2) {
        let gl = algebra_for("gl", n)?;
        let tag = format!("gl{n}");
        let maps: Vec<GenMap> = (1..n).map(|i| lusztig_gl(&gl, i)).collect::<Result<_>>()?;
        for m in &maps {
            report.absorb(&tag, check_homomorphism(m, &gl, &gl)?);
        }
        report.absorb(&tag, check_group_relations(&maps, &gl)?);
    }
    Ok(())
}

/// Involutions and conjugation identities among the symmetries of
/// `U'_q(o_N)`.
pub fn symmetries_report(alg: &Algebra) -> Result<Report> {
    let n = alg.size();
    let mut report = Report::new("symmetries").family("o").param("n", n as i64);
    let gens: Vec<Gen> = alg.generators().to_vec();
    let id = GenMap::identity(alg);
    let om = omega(alg)?;
    let omp = omega_prime(alg)?;
    let rh = rho(alg)?;
    report.check("omega/closed", "omega agrees with its closed formula", "omega", || {
        agree_on(&om, &omega_closed(alg)?, &gens, alg)
    })?;
    for m in [&om, &omp, &rh] {
        report.absorb("", check_homomorphism(m, alg, alg)?);
        report.check(
            &format!("{}/involutive", m.name()),
            "the map squares to the identity",
            "involution",
            || agree_on(&GenMap::compose(&[m, m], alg)?, &id, &gens, alg),
        )?;
    }
    let signs: Vec<i8> = (1..=n).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect();
    let vs = varsigma(alg, &signs)?;
    report.absorb("", check_homomorphism(&vs, alg, alg)?);
    report.check(
        "rho/composite",
        "rho is the composite of varsigma, omega' and omega",
        "rho",
        || agree_on(&GenMap::compose(&[&vs, &omp, &om], alg)?, &rh, &gens, alg),
    )?;
    for i in 1..n {
        report.check(
            &format!("conj[{i}]"),
            "omega' b_i omega' = b_{N-i}^-1",
            "braid conjugation",
            || {
                let b = braid_o(alg, i, false)?;
                let binv = braid_o(alg, n - i, true)?;
                agree_on(&GenMap::compose(&[&omp, &b, &omp], alg)?, &binv, &gens, alg)
            },
        )?;
    }
    Ok(report)
}

fn symmetries(p: &SuiteParams, report: &mut Report) -> Result<()> {
    for n in p.sizes(2..=4, 3) {
        report.absorb(&format!("o{n}"), symmetries_report(&algebra_for("o", n)?)?);
    }
    Ok(())
}

fn sp_probes(p: &SuiteParams, report: &mut Report) -> Result<()> {
    for n in p.sizes(1..=2, 1) {
        bounded(n, 1, 3, "n")?;
        let gl = build_uq_gl(2 * n)?;
        let tag = format!("gl{}", 2 * n);
        for j in (1..2 * n).step_by(2) {
            report.absorb(&tag, sp_braid_odd_probe(&gl, j)?);
        }
        for j in (1..2 * n - 2).step_by(2) {
            report.absorb(&tag, sp_gamma_probe(&gl, j)?);
        }
    }
    Ok(())
}

fn gamma2(p: &SuiteParams, report: &mut Report) -> Result<()> {
    p.reject_n("gamma2")?;
    let sp = build_uqp_sp_ext(2)?;
    report.absorb("", gamma2_map(&sp, p.extend_2143)?.report);
    Ok(())
}

fn braid_poisson_report(spec: &PoissonSpec) -> Result<Report> {
    let n = spec.size();
    let alg = spec.quantum()?;
    let mut report = Report::new("poisson-braid").family("o").param("n", n as i64);
    let maps: Vec<_> = (1..n).map(|i| braid_poisson(spec, i)).collect::<Result<_>>()?;
    for (k, m) in maps.iter().enumerate() {
        let i = k + 1;
        report.absorb(&format!("b{i}"), check_poisson_map(m, spec, 1)?);
        report.check(
            &format!("b{i}/limit"),
            "the q = 1 limit of the quantum braid map",
            "braid limit",
            || Ok(limit_of_map(&braid_o(&alg, i, false)?, spec, &alg)?.disagreement(m)),
        )?;
    }
    report.absorb("", check_poisson_braid_relations(&maps)?);
    Ok(report)
}

fn poisson(p: &SuiteParams, report: &mut Report) -> Result<()> {
    let parts = p.choice(&p.suite, "suite", &["jacobi", "limit", "braid", "rmatrix", "anti"])?;
    for fam in p.families(&["o", "sp"])? {
        for &part in &parts {
            let sizes = match (fam, part) {
                ("o", "jacobi") => p.sizes(2..=5, 3),
                ("o", _) => p.sizes(2..=4, 3),
                (_, "braid") | (_, "anti") if p.suite.is_some() => {
                    return usage(format!("--suite {part} is defined for the orthogonal family"));
                }
                (_, "braid") | (_, "anti") => vec![],
                _ => p.sizes(1..=2, 1),
            };
            for n in sizes {
                let spec = poisson_for_family(fam, n)?;
                let tag = format!("{fam}{n}/{part}");
                let sub = match part {
                    "jacobi" => check_jacobi(&spec)?,
                    "limit" => check_via_quantum(&spec, if p.smoke { 20 } else { 100 }, p.seed)?,
                    "rmatrix" => rmatrix_bracket_check(&spec)?,
                    "braid" => braid_poisson_report(&spec)?,
                    _ => {
                        let mut r = Report::new("poisson-anti");
                        for kind in [AntiKind::Inv, AntiKind::Flip] {
                            let m = poisson_anti(&spec, kind)?;
                            r.absorb(&format!("{kind:?}").to_lowercase(), check_poisson_map(&m, &spec, -1)?);
                        }
                        r
                    }
                };
                report.absorb(&tag, sub);
            }
        }
    }
    Ok(())
}

/// `x^2 + q^-2 y^2 + z^2 - xyz` with `x = s21, y = s31, z = s32`.
pub fn cubic_o3(alg: &Algebra) -> Result<NCElement> {
    let (x, y, z) = (alg.s(2, 1), alg.s(3, 1), alg.s(3, 2));
    let sq = |a: &NCElement| alg.mul(a, a);
    Ok(&(&(&sq(&x)? + &sq(&y)?.scale(&LaurentPoly::q_pow(-2))) + &sq(&z)?) - &alg.product(&[x, y, z])?)
}

fn markov_check(report: &mut Report) -> Result<()> {
    let spec = build_poisson_o(3)?;
    report.check(
        "o3/markov",
        "c_1 at N = 3 is the Markov polynomial",
        "Markov polynomial",
        || {
            let a = |i, j| PoissonPoly::var(i, j);
            let want = &(&(&a(2, 1).pow(2) + &a(3, 1).pow(2)) + &a(3, 2).pow(2)) - &(&(&a(3, 1) * &a(3, 2)) * &a(2, 1));
            let got = c_k(&spec, 1)?;
            Ok((got != want).then(|| format!("{got}")))
        },
    )
}

fn casimir(p: &SuiteParams, report: &mut Report) -> Result<()> {
    for fam in p.families(&["o", "sp"])? {
        let sets: Vec<&str> = match (fam, &p.set) {
            ("sp", Some(s)) if s == "pfaffian" || s == "trace" => {
                return usage(format!("--set {s} is defined for the orthogonal family"));
            }
            ("sp", None) => vec!["det", "quantum", "conjecture"],
            _ => p.choice(&p.set, "set", &["det", "pfaffian", "trace", "quantum", "conjecture"])?,
        };
        for set in sets {
            let sizes = match (fam, set) {
                ("o", "det") => p.sizes(2..=5, 3),
                ("o", "pfaffian") => p.sizes(2..=6, 4),
                ("o", "trace") => p.sizes(2..=4, 3),
                ("o", "quantum") => p.sizes(3..=4, 3),
                ("o", _) => p.sizes(3..=5, 3),
                _ => p.sizes(1..=2, 1),
            };
            for n in sizes {
                let tag = format!("{fam}{n}/{set}");
                match (fam, set) {
                    ("o", "det") => {
                        let spec = poisson_for_family("o", n)?;
                        report.absorb(&tag, check_det_family(&spec)?);
                        if n == 3 {
                            markov_check(report)?;
                        }
                    }
                    ("o", "pfaffian") => {
                        let spec = poisson_for_family("o", n)?;
                        if n <= 4 {
                            report.absorb(&tag, check_pfaffian_family(&spec)?);
                        }
                        report.absorb(&tag, det_expansion_check(&spec)?);
                    }
                    ("o", "trace") => {
                        report.absorb(&tag, liouville_check(&poisson_for_family("o", n)?, 3)?);
                    }
                    ("o", "quantum") => {
                        let alg = algebra_for("o", n)?;
                        report.absorb(&tag, quantum_invariants_report(&alg)?);
                        if n == 3 {
                            report.absorb(
                                &tag,
                                quantum_center_check(&alg, &cubic_o3(&alg)?, "cubic", "central cubic")?,
                            );
                        }
                    }
                    ("o", _) => {
                        report.absorb(&tag, jacobian_rank_probe(&poisson_for_family("o", n)?, p.seed)?);
                    }
                    (_, "det") => report.absorb(&tag, sp_casimirs(&poisson_for_family("sp", n)?)?),
                    (_, "quantum") => {
                        let alg = algebra_for("sp", n)?;
                        for i in (1..2 * n).step_by(2) {
                            let c = sp_quadratic(&|a, b| Ok(alg.s(a, b)), &|x, y| alg.mul(x, y), i)?;
                            report.absorb(
                                &tag,
                                quantum_center_check(&alg, &c, &format!("quad{i}"), "central quadratics")?,
                            );
                        }
                    }
                    _ => report.absorb(&tag, conjecture_probe(&poisson_for_family("sp", n)?)?),
                }
            }
        }
    }
    Ok(())
}

fn tensor_suite(p: &SuiteParams, report: &mut Report) -> Result<()> {
    let parts = p.choice(&p.suite, "suite", &["qperm", "ybe", "reflection", "sdet", "ancoll"])?;
    for part in parts {
        match part {
            "qperm" | "ybe" | "ancoll" => {
                if p.family.is_some() && p.suite.is_some() {
                    return usage(format!("--suite {part} does not take --family"));
                }
                for n in p.sizes(2..=3, 2) {
                    bounded(n, 1, 4, "N")?;
                    let tag = format!("n{n}/{part}");
                    let sub = match part {
                        "qperm" => tensor::qperm_check(n)?,
                        "ybe" => tensor::ybe_check(n)?,
                        _ => tensor::ancoll_check(n)?,
                    };
                    report.absorb(&tag, sub);
                }
            }
            _ => {
                for fam in p.families(&["o", "sp"])? {
                    let sizes = if fam == "o" {
                        p.sizes(2..=3, 2)
                    } else {
                        p.sizes(1..=1, 1)
                    };
                    for n in sizes {
                        let cap = match (fam, part) {
                            ("o", "sdet") if p.big_budget => 4,
                            ("o", _) => 3,
                            _ => 1,
                        };
                        if n > cap {
                            return usage(format!(
                                "--suite {part} supports {fam} up to {cap} (use --budget big for o 4 sdet)"
                            ));
                        }
                        let alg = algebra_for(fam, n)?;
                        let tag = format!("{fam}{n}/{part}");
                        let sub = if part == "reflection" {
                            let mut r = tensor::reflection_check(&alg)?;
                            r.absorb("", tensor::s_u_limit_check(&alg)?);
                            r
                        } else {
                            tensor::sdet_report(&alg)?
                        };
                        report.absorb(&tag, sub);
                    }
                }
            }
        }
    }
    Ok(())
}

fn limit(p: &SuiteParams, report: &mut Report) -> Result<()> {
    for n in p.sizes(2..=4, 3) {
        let spec = poisson_for_family("o", n)?;
        let alg = spec.quantum()?;
        let tag = format!("o{n}");
        for i in 1..n {
            report.check(
                &format!("{tag}/braid{i}"),
                "q = 1 limit of b_i equals the Poisson braid map",
                "braid limit",
                || {
                    let lim = limit_of_map(&braid_o(&alg, i, false)?, &spec, &alg)?;
                    Ok(lim.disagreement(&braid_poisson(&spec, i)?))
                },
            )?;
        }
        if n >= 3 {
            for k in 1..=n / 2 {
                report.check(
                    &format!("{tag}/phi{k}"),
                    "q = 1 limit of phi_k is c_k",
                    "invariant limit",
                    || {
                        let got = classical_limit(&phi_k(&alg, k)?)?;
                        let want = c_k(&spec, k)?;
                        Ok((got != want).then(|| format!("{got} vs {want}")))
                    },
                )?;
            }
        }
        report.check(
            &format!("{tag}/bracket"),
            "generator brackets from quantum commutators",
            "bracket limit",
            || {
                let r = check_via_quantum(&spec, 0, p.seed)?;
                let w = r
                    .failures()
                    .next()
                    .map(|c| format!("{}: {}", c.id, c.witness.clone().unwrap_or_default()));
                Ok(w)
            },
        )?;
        report.absorb(&tag, tensor::s_u_limit_check(&alg)?);
    }
    let sp = build_uqp_sp_ext(1)?;
    report.absorb("sp1", tensor::s_u_limit_check(&sp)?);
    Ok(())
}
