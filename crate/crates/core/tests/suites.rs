use tqa::suites::{run_suite, SuiteParams, SUITES};
use tqa::Error;

#[test]
fn every_suite_passes_at_smoke_size() {
    let p = SuiteParams {
        smoke: true,
        ..SuiteParams::default()
    };
    for name in SUITES {
        let rep = run_suite(name, &p).unwrap();
        assert!(rep.passed(), "{rep}");
        assert!(!rep.checks.is_empty(), "{name} ran no checks");
    }
}

#[test]
fn bad_parameters_are_usage_errors() {
    let with = |f: &str, n: Option<usize>| SuiteParams {
        family: Some(f.into()),
        n,
        ..SuiteParams::default()
    };
    assert!(matches!(
        run_suite("nope", &SuiteParams::default()),
        Err(Error::Usage(_))
    ));
    assert!(matches!(run_suite("defrel", &with("o", Some(1))), Err(Error::Usage(_))));
    assert!(matches!(run_suite("casimir", &with("gl", None)), Err(Error::Usage(_))));
    let bad_set = SuiteParams {
        set: Some("pfaffian".into()),
        ..with("sp", None)
    };
    assert!(matches!(run_suite("casimir", &bad_set), Err(Error::Usage(_))));
}

#[test]
fn explicit_size_wins_over_smoke() {
    let p = SuiteParams {
        n: Some(4),
        smoke: true,
        family: Some("o".into()),
        ..SuiteParams::default()
    };
    let rep = run_suite("symmetries", &p).unwrap();
    assert!(rep.checks.iter().all(|c| c.id.starts_with("o4/")));
}
