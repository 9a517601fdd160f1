//! Acceptance criteria, one line each. All arithmetic is exact.

use std::io::Write;
use std::time::Instant;

use tqa::algebras::build_uqp_o;
use tqa::morphisms::{braid_o, check_homomorphism};
use tqa::nc::{Gen, NCElement};
use tqa::poisson::{build_poisson_o, check_via_quantum, rmatrix_bracket_check, PoissonPoly};
use tqa::report::{Report, Status};
use tqa::suites::{run_suite, SuiteParams};

fn params(family: Option<&str>, n: Option<usize>, set: Option<&str>, suite: Option<&str>) -> SuiteParams {
    SuiteParams {
        family: family.map(str::to_string),
        n,
        set: set.map(str::to_string),
        suite: suite.map(str::to_string),
        ..SuiteParams::default()
    }
}

/// Runs one suite; the criterion fails on any failed check or on a
/// missing required id prefix (so an empty report cannot pass).
struct Gate {
    problems: Vec<String>,
    checks: usize,
}

impl Gate {
    fn new() -> Self {
        Gate {
            problems: Vec::new(),
            checks: 0,
        }
    }

    fn run(&mut self, name: &str, p: SuiteParams, required: &[&str]) -> Report {
        let rep = match run_suite(name, &p) {
            Ok(r) => r,
            Err(e) => {
                self.problems.push(format!("{name}: {e}"));
                return Report::new(name);
            }
        };
        self.absorb(name, &rep, required);
        rep
    }

    fn absorb(&mut self, name: &str, rep: &Report, required: &[&str]) {
        self.checks += rep.checks.len();
        for c in rep.failures() {
            self.problems
                .push(format!("{name} {}: {}", c.id, c.witness.as_deref().unwrap_or("")));
        }
        for r in required {
            if !rep
                .checks
                .iter()
                .any(|c| c.id.starts_with(r) && c.status == Status::Pass)
            {
                self.problems.push(format!("{name}: no passing check under `{r}`"));
            }
        }
    }

    fn require(&mut self, ok: bool, what: &str) {
        self.checks += 1;
        if !ok {
            self.problems.push(what.to_string());
        }
    }
}

fn criterion(k: usize, title: &str, f: impl FnOnce(&mut Gate)) -> bool {
    let start = Instant::now();
    let mut gate = Gate::new();
    f(&mut gate);
    let ok = gate.problems.is_empty();
    // straight to the stderr handle so the lines show without --nocapture
    let mut err = std::io::stderr().lock();
    if k == 1 {
        let _ = writeln!(err);
    }
    let _ = writeln!(
        err,
        "criterion {k:>2} {}: {title} ({} checks, {:.1}s)",
        if ok { "PASS" } else { "FAIL" },
        gate.checks,
        start.elapsed().as_secs_f64()
    );
    for p in gate.problems.iter().take(5) {
        let _ = writeln!(err, "    {p}");
    }
    ok
}

fn relations(g: &mut Gate) {
    g.run(
        "defrel",
        params(Some("o"), None, Some("relations"), None),
        &["o3/", "o4/cross", "o5/commute"],
    );
    g.run(
        "defrel",
        params(Some("gl"), None, Some("relations"), None),
        &["gl2/tt", "gl3/tbar-t"],
    );
    g.run(
        "defrel",
        params(Some("sp"), None, Some("relations"), None),
        &["sp1/refl", "sp2/refl"],
    );
}

fn embeddings(g: &mut Gate) {
    g.run("defrel", params(Some("o"), None, Some("embed"), None), &["o3/embed"]);
    g.run(
        "defrel",
        params(Some("sp"), None, Some("embed"), None),
        &["sp1/embed/qdet", "sp2/embed/qdet"],
    );
}

fn braid(g: &mut Gate) {
    g.run(
        "braid-o",
        params(None, None, None, None),
        &[
            "o2/explicit",
            "o3/beta2^-1/",
            "o4/beta3/",
            "o4/inverse",
            "o4/next",
            "o5/braid",
            "o5/commute",
        ],
    );
}

fn symmetries(g: &mut Gate) {
    g.run(
        "symmetries",
        params(None, None, None, None),
        &["o4/omega/involutive", "o4/omega'/involutive", "o4/rho/", "o4/conj"],
    );
}

fn poisson(g: &mut Gate) {
    g.run(
        "poisson",
        params(Some("o"), None, None, None),
        &[
            "o5/jacobi",
            "o4/limit/a",
            "o4/braid/braid",
            "o4/anti/inv",
            "o4/anti/flip",
            "o4/rmatrix",
        ],
    );
    g.run(
        "poisson",
        params(Some("sp"), None, None, None),
        &["sp2/jacobi", "sp2/limit/a", "sp2/rmatrix"],
    );
}

fn casimirs(g: &mut Gate) {
    let req = [
        "o5/det/f3",
        "o5/det/palindrome",
        "o4/pfaffian/c2",
        "o4/pfaffian/pf^2",
        "o6/pfaffian/identity",
        "o4/trace/tr3",
    ];
    g.run("casimir", params(Some("o"), None, Some("det"), None), &req[..2]);
    g.run("casimir", params(Some("o"), None, Some("pfaffian"), None), &req[2..5]);
    g.run("casimir", params(Some("o"), None, Some("trace"), None), &req[5..]);
    g.run(
        "casimir",
        params(Some("sp"), None, Some("det"), None),
        &["sp2/det/f2", "sp2/det/quad3"],
    );
    g.run("casimir", params(Some("o"), Some(3), Some("det"), None), &["o3/markov"]);
}

fn centrality(g: &mut Gate) {
    g.run(
        "casimir",
        params(Some("o"), None, Some("quantum"), None),
        &[
            "o3/quantum/cubic",
            "o3/quantum/phi1/",
            "o4/quantum/phi2/",
            "o4/quantum/Phi[",
            "o4/quantum/Phi+[",
        ],
    );
    g.run(
        "casimir",
        params(Some("sp"), None, Some("quantum"), None),
        &["sp1/quantum/quad1", "sp2/quantum/quad3"],
    );
}

fn tensors(g: &mut Gate) {
    g.run(
        "tensor",
        params(None, None, None, Some("ybe")),
        &["n2/ybe/spectral", "n3/ybe/spectral"],
    );
    g.run(
        "tensor",
        params(None, None, None, Some("ancoll")),
        &["n2/ancoll/collapse", "n3/ancoll/collapse"],
    );
    g.run(
        "tensor",
        params(None, None, None, Some("reflection")),
        &[
            "o3/reflection/constant",
            "o3/reflection/spectral",
            "sp1/reflection/spectral",
        ],
    );
    g.run(
        "tensor",
        params(None, None, None, Some("sdet")),
        &[
            "o2/sdet/center",
            "o3/sdet/center",
            "o3/sdet/limit",
            "sp1/sdet/center",
            "sp1/sdet/limit",
        ],
    );
}

fn consistency(g: &mut Gate) {
    g.run(
        "limit",
        params(None, None, None, None),
        &["o3/phi1", "o4/phi2", "o4/braid3"],
    );
}

fn probes(g: &mut Gate) {
    let mut findings = 0;
    for (name, p, req) in [
        (
            "casimir",
            params(Some("sp"), None, Some("conjecture"), None),
            "sp2/conjecture/pf",
        ),
        (
            "casimir",
            params(Some("o"), None, Some("conjecture"), None),
            "o5/conjecture/rank",
        ),
        ("gamma2", params(None, None, None, None), ""),
        (
            "gamma2",
            SuiteParams {
                extend_2143: true,
                ..params(None, None, None, None)
            },
            "",
        ),
    ] {
        let rep = g.run(name, p, &[]);
        findings += rep.findings().count();
        g.require(
            rep.checks
                .iter()
                .any(|c| c.id.starts_with(req) && c.status == Status::Finding),
            &format!("{name}: no finding under `{req}`"),
        );
    }
    g.require(findings >= 4, "probes should report findings");
}

fn negative_controls(g: &mut Gate) {
    let alg = build_uqp_o(3).expect("o3");
    let mut b = braid_o(&alg, 1, false).expect("beta1");
    b.set(Gen::s(3, 1), NCElement::gen(Gen::s(3, 2)));
    let rep = check_homomorphism(&b, &alg, &alg).expect("runs");
    g.require(!rep.passed(), "corrupted braid map was accepted");

    let mut spec = build_poisson_o(3).expect("o3");
    let (a21, a31, a32) = (PoissonPoly::var(2, 1), PoissonPoly::var(3, 1), PoissonPoly::var(3, 2));
    spec.set_table_value((2, 1), (3, 1), &(&a21 * &a31) - &a32);
    g.require(
        !rmatrix_bracket_check(&spec).expect("runs").passed(),
        "corrupted table passed the r-matrix form",
    );
    g.require(
        !check_via_quantum(&spec, 0, 0).expect("runs").passed(),
        "corrupted table matched the quantum bracket",
    );
}

#[test]
fn acceptance() {
    let results = [
        criterion(1, "defining relations normal-form to zero", relations),
        criterion(2, "embeddings into the gl algebras", embeddings),
        criterion(3, "braid group action", braid),
        criterion(4, "involutions and conjugation of braid maps", symmetries),
        criterion(
            5,
            "Poisson structure, limits, braid and anti maps, r-matrix form",
            poisson,
        ),
        criterion(6, "classical Casimirs and determinant identities", casimirs),
        criterion(7, "quantum central elements", centrality),
        criterion(8, "R-matrices, reflection equation, Sklyanin determinant", tensors),
        criterion(9, "classical limits of quantum constructions", consistency),
        criterion(10, "probes report findings only", probes),
        criterion(11, "negative controls fail", negative_controls),
    ];
    let failed: Vec<usize> = results
        .iter()
        .enumerate()
        .filter(|(_, ok)| !**ok)
        .map(|(i, _)| i + 1)
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
