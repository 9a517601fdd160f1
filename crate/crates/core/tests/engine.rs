use tqa::algebras::{build_uq_gl, build_uqp_o, build_uqp_sp_ext};
use tqa::nc::{associativity_probe, confluence_probe};

#[test]
fn confluence_orth_and_gl() {
    let o4 = build_uqp_o(4).unwrap();
    let rep = confluence_probe(&o4, 5, 500, 0).unwrap();
    assert!(rep.passed(), "{rep}");
    let gl3 = build_uq_gl(3).unwrap();
    let rep = confluence_probe(&gl3, 4, 500, 0).unwrap();
    assert!(rep.passed(), "{rep}");
    let sp2 = build_uqp_sp_ext(2).unwrap();
    let rep = confluence_probe(&sp2, 4, 300, 1).unwrap();
    assert!(rep.passed(), "{rep}");
    // vacuous
    let rep = confluence_probe(&o4, 1, 10, 0).unwrap();
    assert!(rep.passed());
}

#[test]
fn associativity_spot_checks() {
    for alg in [
        build_uqp_o(3).unwrap(),
        build_uq_gl(2).unwrap(),
        build_uqp_sp_ext(1).unwrap(),
    ] {
        let rep = associativity_probe(&alg, 200, 7).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}
