use tqa::algebras::{build_uqp_o, build_uqp_sp_ext};
use tqa::coeff::{LaurentPoly, Var};
use tqa::nc::NCElement;
use tqa::tensor::*;

fn sc(c: LaurentPoly) -> NCElement {
    NCElement::scalar(c)
}

#[test]
fn q_permutation_entries() {
    let p = q_permutation(2);
    assert_eq!(p.apply_basis(&[1, 2]), vec![(vec![2, 1], sc(LaurentPoly::q_pow(1)))]);
    assert_eq!(p.apply_basis(&[1, 1]), vec![(vec![1, 1], NCElement::one())]);
    assert_eq!(p.apply_basis(&[2, 1]), vec![(vec![1, 2], sc(LaurentPoly::q_pow(-1)))]);
    let a = antisymmetrizer(2, 2).unwrap();
    assert_eq!(a.mul(&a, None).unwrap(), a.scale(&LaurentPoly::int(2)));
    for n in 2..=4 {
        let rep = qperm_check(n).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn reduced_words() {
    assert_eq!(reduced_word(&[0, 1, 2], true), Vec::<usize>::new());
    assert_eq!(reduced_word(&[2, 1, 0], true), vec![1, 2, 1]);
    assert_eq!(reduced_word(&[2, 1, 0], false), vec![2, 1, 2]);
}

#[test]
fn r_matrix_entries() {
    let (u, v) = (LaurentPoly::var(Var::U), LaurentPoly::var(Var::V));
    assert_eq!(r_const(2).get(&[1, 1], &[1, 1]), sc(LaurentPoly::q_pow(1)));
    assert_eq!(r_trig(2, &u, &v).get(&[1, 2], &[1, 2]), sc(&u - &v));
    let qd = &LaurentPoly::q_pow(-1) - &LaurentPoly::q_pow(1);
    // E_12 (x) E_12 at row (1,1), col (2,2) carries (q^-1 - q) u
    assert_eq!(rt_trig(2, &u, &v).get(&[1, 1], &[2, 2]), sc(&qd * &u));
    assert_eq!(rt_trig(2, &u, &v).get(&[2, 2], &[1, 1]), sc(&qd * &v));
    // at q = 1, R(u, v) is (u - v) times the identity
    let r = r_trig(3, &u, &v).map(|e| e.map_coeffs(|c| c.eval_q1()));
    assert_eq!(r, TensorOperator::identity(3, 2).scale(&(&u - &v)));
}

#[test]
fn embedding_and_transpose() {
    let p = q_permutation(2);
    let e = p.embed(3, &[0, 2]).unwrap();
    assert_eq!(
        e.apply_basis(&[1, 2, 2]),
        vec![(vec![2, 2, 1], sc(LaurentPoly::q_pow(1)))]
    );
    assert_eq!(p.transpose_site(0).transpose_site(0), p);
    assert!(p.embed(2, &[0, 2]).is_err());
}

#[test]
fn yang_baxter() {
    for n in 2..=3 {
        let rep = ybe_check(n).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn s_of_u() {
    let alg = build_uqp_o(2).unwrap();
    let s = s_u(&alg, &LaurentPoly::var(Var::U)).unwrap();
    assert_eq!(s[0][1], alg.s(2, 1).scale(&LaurentPoly::var_pow(Var::U, -1)));
    let sp = build_uqp_sp_ext(1).unwrap();
    let s = s_u(&sp, &LaurentPoly::var(Var::U)).unwrap();
    // q u^-1 sbar_21 = -u^-1 s_12
    let expect = &sp.s(2, 1) + &sp.s(1, 2).scale(&-LaurentPoly::var_pow(Var::U, -1));
    assert_eq!(s[1][0], expect);
    for alg in [build_uqp_o(2).unwrap(), build_uqp_o(3).unwrap(), sp] {
        let rep = s_u_limit_check(&alg).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn reflection() {
    for alg in [
        build_uqp_o(2).unwrap(),
        build_uqp_o(3).unwrap(),
        build_uqp_sp_ext(1).unwrap(),
    ] {
        let rep = reflection_check(&alg).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn sklyanin_determinant() {
    for alg in [
        build_uqp_o(2).unwrap(),
        build_uqp_o(3).unwrap(),
        build_uqp_sp_ext(1).unwrap(),
    ] {
        let rep = sdet_report(&alg).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn collapse_identities() {
    let (u, v) = (LaurentPoly::var(Var::U), LaurentPoly::var(Var::V));
    let d2 =
        &(&(&LaurentPoly::q_pow(-1) * &v) - &(&LaurentPoly::q_pow(1) * &u)) * &(&v - &(&LaurentPoly::q_pow(-2) * &u));
    assert_eq!(delta_uv(2), d2);
    for n in 2..=3 {
        let rep = ancoll_check(n).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn negative_controls() {
    let alg = build_uqp_o(2).unwrap();
    let sdet = sdet_extract(&alg).unwrap();
    assert!(!sdet.is_zero());
    // o_2 is commutative, so the check is vacuous there but still runs
    assert!(sdet_central_check(&alg).unwrap().passed());
    // wrong delta fails the collapse identity
    let (u, v) = (LaurentPoly::var(Var::U), LaurentPoly::var(Var::V));
    let aq = antisymmetrizer(2, 2).unwrap();
    let r = r_trig(2, &v, &u);
    assert!(r
        .mul(&aq, None)
        .unwrap()
        .difference(&aq.scale(&delta_uv(2)))
        .unwrap()
        .is_some());
    // the reflection equation fails with R in place of R^t
    let alg3 = build_uqp_o(3).unwrap();
    let s = s_u(&alg3, &u).unwrap();
    let s1 = TensorOperator::one_site(&s).embed(2, &[0]).unwrap();
    let s2 = TensorOperator::one_site(&s_u(&alg3, &v).unwrap())
        .embed(2, &[1])
        .unwrap();
    let rr = r_trig(3, &u, &v);
    let wrong = r_trig(3, &LaurentPoly::var_pow(Var::U, -1), &v);
    let lhs = TensorOperator::product(&[&rr, &s1, &wrong, &s2], Some(&alg3)).unwrap();
    let rhs = TensorOperator::product(&[&s2, &wrong, &s1, &rr], Some(&alg3)).unwrap();
    assert!(lhs.difference(&rhs).unwrap().is_some());
}
