use tqa::algebras::{build_uq_gl, build_uqp_o};
use tqa::coeff::{LaurentPoly, Rational, Var};
use tqa::expr::{parse_element, parse_laurent, parse_poisson};
use tqa::invariants::c_k;
use tqa::nc::{Gen, NCElement};
use tqa::poisson::build_poisson_o;
use tqa::Error;

#[test]
fn round_trips() {
    for src in ["-1 s[2,1]", "1/1 q^-1 u^2 s[3,1]*s[2,1]", "0", "1", "-3/2 q^-1 u^2 + 1"] {
        let e = parse_element(src).unwrap();
        assert_eq!(parse_element(&e.to_string()).unwrap(), e, "{src}");
    }
    let e = parse_element("1/1 q^-1 u^2 s[3,1]*s[2,1]").unwrap();
    assert_eq!(
        e,
        NCElement::word(&[Gen::s(3, 1), Gen::s(2, 1)])
            .scale(&(&LaurentPoly::q_pow(-1) * &LaurentPoly::var_pow(Var::U, 2)))
    );
    assert_eq!(e.to_string(), "1 q^-1 u^2 s[3,1]*s[2,1]");
}

#[test]
fn laurent_text() {
    let p = parse_laurent("-3/2 q^-1 u^2 + 1").unwrap();
    assert_eq!(p.to_string(), "-3/2 q^-1 u^2 + 1");
    assert_eq!(
        parse_laurent("(q - q^-1)^2").unwrap(),
        LaurentPoly::q_minus_qinv().pow(2)
    );
    assert_eq!(parse_laurent("lam^3").unwrap(), LaurentPoly::var_pow(Var::Lambda, 3));
    assert_eq!(
        parse_laurent("2/4").unwrap(),
        LaurentPoly::constant(Rational::new(1, 2))
    );
    assert!(parse_laurent("s[2,1]").is_err());
}

#[test]
fn generator_powers() {
    let e = parse_element("t[1,1]^2*tbar[1,1]").unwrap();
    assert_eq!(e, NCElement::gen(Gen::diag(1, 1)));
    assert_eq!(parse_element("t[2,2]*tbar[2,2]").unwrap(), NCElement::one());
    assert_eq!(
        parse_element("s[2,1]^2").unwrap(),
        NCElement::word(&[Gen::s(2, 1), Gen::s(2, 1)])
    );
    assert!(matches!(parse_element("s[2,1]^-1"), Err(Error::Parse { pos: 0, .. })));
}

#[test]
fn parse_errors_have_positions() {
    assert!(matches!(parse_element("s[1]"), Err(Error::Parse { pos: 3, .. })));
    assert!(matches!(parse_element("1 + "), Err(Error::Parse { pos: 4, .. })));
    assert!(matches!(parse_element("x[1,2]"), Err(Error::Parse { pos: 0, .. })));
    assert!(matches!(parse_element("s[0,1]"), Err(Error::Parse { pos: 2, .. })));
    assert!(matches!(parse_element("(s[2,1]"), Err(Error::Parse { pos: 7, .. })));
    assert!(matches!(parse_element("1/0"), Err(Error::Parse { .. })));
}

#[test]
fn normal_forms_round_trip() {
    let o4 = build_uqp_o(4).unwrap();
    let x = o4.mul(&o4.s(4, 1), &o4.s(3, 2)).unwrap();
    let y = o4.mul(&o4.s(2, 1), &o4.s(4, 3)).unwrap();
    for e in [x, y] {
        assert_eq!(parse_element(&e.to_string()).unwrap(), e);
    }
    let gl = build_uq_gl(2).unwrap();
    let t = gl
        .mul(&NCElement::gen(Gen::tbar(1, 2)), &NCElement::gen(Gen::diag(1, -1)))
        .unwrap();
    assert_eq!(parse_element(&t.to_string()).unwrap(), t);
}

#[test]
fn poisson_text() {
    let spec = build_poisson_o(3).unwrap();
    let c1 = c_k(&spec, 1).unwrap();
    assert_eq!(parse_poisson(&c1.to_string()).unwrap(), c1);
    let markov = parse_poisson("a[2,1]^2 + a[3,1]^2 + a[3,2]^2 - a[3,1] a[3,2] a[2,1]").unwrap();
    assert_eq!(markov, c1);
    assert!(parse_poisson("s[2,1]").is_err());
}
