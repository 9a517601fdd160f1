use tqa::algebras::*;
use tqa::coeff::LaurentPoly;
use tqa::nc::{Gen, Kind, NCElement};

fn s(i: usize, j: usize) -> NCElement {
    NCElement::gen(Gen::s(i, j))
}

fn w(gens: &[Gen]) -> NCElement {
    NCElement::word(gens)
}

fn q(k: i32) -> LaurentPoly {
    LaurentPoly::q_pow(k)
}

#[test]
fn orth_relations_reduce_to_zero() {
    for n in 2..=5 {
        let alg = build_uqp_o(n).unwrap();
        let rep = check_relation_set(&alg, alg.relations(), "defrel").unwrap();
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.summary.pass, n * (n - 1) / 2 * (n * (n - 1) / 2 - 1) / 2);
    }
}

#[test]
fn orth_reflection_instances_reduce_to_zero() {
    for n in 2..=4 {
        let alg = build_uqp_o(n).unwrap();
        let rels = reflection_relations(&alg);
        let rep = check_relation_set(&alg, &rels, "reflection").unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn gl_relations_reduce_to_zero() {
    for n in 2..=3 {
        let alg = build_uq_gl(n).unwrap();
        let rep = check_relation_set(&alg, alg.relations(), "defrel").unwrap();
        assert!(rep.passed(), "{rep}");
        let tt = gl_same_kind_relations(&alg, Kind::T).len();
        let bb = gl_same_kind_relations(&alg, Kind::TBar).len();
        let mixed = gl_mixed_relations(&alg).len();
        assert_eq!(tt, gl_same_kind_count(n));
        assert_eq!(bb, gl_same_kind_count(n));
        assert_eq!(mixed, gl_mixed_count(n));
    }
}

#[test]
fn sp_relations_reduce_to_zero() {
    for n in 1..=2 {
        let alg = build_uqp_sp_ext(n).unwrap();
        let rep = check_relation_set(&alg, alg.relations(), "defrel").unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn orth3_ordering_example() {
    let alg = build_uqp_o(3).unwrap();
    // s_32 s_21 = q^-1 s_21 s_32 + (1 - q^-2) s_31
    let lhs = alg.mul(&s(3, 2), &s(2, 1)).unwrap();
    let mut rhs = w(&[Gen::s(2, 1), Gen::s(3, 2)]).scale(&q(-1));
    rhs = &rhs + &s(3, 1).scale(&(&LaurentPoly::one() - &q(-2)));
    assert_eq!(lhs, rhs);
    // already ordered
    let sq = alg.mul(&s(2, 1), &s(2, 1)).unwrap();
    assert_eq!(sq, w(&[Gen::s(2, 1), Gen::s(2, 1)]));
    assert_eq!(alg.normal_form(&NCElement::one()).unwrap(), NCElement::one());
    assert!(alg.commutator(&s(3, 2), &s(3, 2)).unwrap().is_zero());
}

#[test]
fn gl2_examples() {
    let gl = build_uq_gl(2).unwrap();
    let t11 = NCElement::gen(Gen::diag(1, 1));
    let t21 = NCElement::gen(Gen::t(2, 1));
    // t_11 t_21 = q^-1 t_21 t_11
    let lhs = gl.mul(&t11, &t21).unwrap();
    let rhs = gl.mul(&t21, &t11).unwrap().scale(&q(-1));
    assert_eq!(lhs, rhs);
    let tb11 = gl.entry(Kind::TBar, 1, 1);
    assert_eq!(gl.mul(&t11, &tb11).unwrap(), NCElement::one());
    assert_eq!(gl.mul(&tb11, &t11).unwrap(), NCElement::one());
}

#[test]
fn orth4_distant_commute() {
    let alg = build_uqp_o(4).unwrap();
    assert!(alg.commutator(&s(4, 3), &s(2, 1)).unwrap().is_zero());
}

#[test]
fn serre_presentation() {
    for n in 3..=5 {
        let alg = build_uqp_o(n).unwrap();
        let rep = check_relation_set(&alg, &serre_relations(n), "serre").unwrap();
        assert!(rep.passed(), "{rep}");
        let rep = check_relation_set(&alg, &generalized_serre_relations(n), "gserre").unwrap();
        assert!(rep.passed(), "{rep}");
        for k in 2..=n {
            for l in 1..k {
                assert_eq!(s_from_serre_generators(&alg, k, l).unwrap(), s(k, l));
                for j in l + 1..k {
                    assert_eq!(s_from_serre_via(&alg, k, l, j).unwrap(), s(k, l));
                }
            }
        }
    }
}

#[test]
fn orth3_cubic_is_central() {
    let alg = build_uqp_o(3).unwrap();
    let (x, y, z) = (s(2, 1), s(3, 1), s(3, 2));
    let c = &(&(&alg.mul(&x, &x).unwrap() + &alg.mul(&y, &y).unwrap().scale(&q(-2))) + &alg.mul(&z, &z).unwrap())
        - &alg.product(&[x.clone(), y.clone(), z.clone()]).unwrap();
    for g in [&x, &y, &z] {
        assert!(alg.commutator(&c, g).unwrap().is_zero());
    }
}

#[test]
fn sp_small_examples() {
    let alg = build_uqp_sp_ext(1).unwrap();
    let r = reflection_instance(&alg, 1, 1, 1, 2);
    assert!(!r.is_zero());
    assert!(alg.normal_form(&r).unwrap().is_zero());

    let alg = build_uqp_sp_ext(2).unwrap();
    for i in [1, 3] {
        let c = sp_quadratic(&|a, b| Ok(alg.s(a, b)), &|x, y| alg.mul(x, y), i).unwrap();
        for &g in alg.generators() {
            assert!(alg.commutator(&c, &NCElement::gen(g)).unwrap().is_zero(), "{i} {g}");
        }
    }
}

#[test]
fn embeddings() {
    let gl2 = build_uq_gl(2).unwrap();
    let m = embed_o_in_gl(&gl2).unwrap();
    let expected = &w(&[Gen::t(2, 1), Gen::diag(1, -1)]) + &w(&[Gen::diag(2, 1), Gen::tbar(1, 2)]);
    assert_eq!(m.get(Gen::s(2, 1)).unwrap(), &gl2.normal_form(&expected).unwrap());
    assert_eq!(o_entry_in_gl(&gl2, 1, 1).unwrap(), NCElement::one());
    assert!(o_entry_in_gl(&gl2, 1, 2).unwrap().is_zero());

    let sp_img = sp_entry_in_gl(&gl2, 1, 2).unwrap();
    assert_eq!(sp_img, w(&[Gen::diag(1, 1), Gen::diag(2, -1)]).scale(&q(1)));

    for n in 2..=3 {
        let gl = build_uq_gl(n).unwrap();
        let o = build_uqp_o(n).unwrap();
        let rep = check_embedding(&o, &gl).unwrap();
        assert!(rep.passed(), "{rep}");
    }
    for n in 1..=2 {
        let gl = build_uq_gl(2 * n).unwrap();
        let sp = build_uqp_sp_ext(n).unwrap();
        let rep = check_embedding(&sp, &gl).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}
