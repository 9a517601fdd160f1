use tqa::algebras::{build_uq_gl, build_uqp_o, build_uqp_sp_ext, serre_generator};
use tqa::coeff::LaurentPoly;
use tqa::morphisms::*;
use tqa::nc::{Gen, NCElement};

fn s(i: usize, j: usize) -> NCElement {
    NCElement::gen(Gen::s(i, j))
}

fn q(k: i32) -> LaurentPoly {
    LaurentPoly::q_pow(k)
}

#[test]
fn braid_o3_images() {
    let alg = build_uqp_o(3).unwrap();
    let b = braid_o(&alg, 1, false).unwrap();
    assert_eq!(image_of(&b, Gen::s(2, 1), &alg).unwrap(), -s(2, 1));
    let want = &s(3, 2).scale(&q(-1)) - &alg.mul(&s(3, 1), &s(2, 1)).unwrap();
    assert_eq!(image_of(&b, Gen::s(3, 1), &alg).unwrap(), want);
    assert_eq!(image_of(&b, Gen::s(3, 2), &alg).unwrap(), s(3, 1));
    // on the Serre generator s_2
    assert_eq!(b.apply(&serre_generator(2), &alg).unwrap(), s(3, 1));
}

#[test]
fn braid_o_full() {
    for n in 2..=4 {
        let alg = build_uqp_o(n).unwrap();
        let rep = check_braid_o(&alg).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn braid_o5_group_relations() {
    let alg = build_uqp_o(5).unwrap();
    let maps: Vec<_> = (1..5).map(|i| braid_o(&alg, i, false).unwrap()).collect();
    let rep = check_group_relations(&maps, &alg).unwrap();
    assert!(rep.passed(), "{rep}");
    assert_eq!(rep.summary.pass, 6);
}

#[test]
fn lusztig_examples_and_relations() {
    let gl = build_uq_gl(3).unwrap();
    let b1 = lusztig_gl(&gl, 1).unwrap();
    assert_eq!(
        image_of(&b1, Gen::diag(1, 1), &gl).unwrap(),
        NCElement::gen(Gen::diag(2, 1))
    );
    let want = gl
        .product(&[NCElement::gen(Gen::tbar(1, 2)), NCElement::gen(Gen::diag(1, 2))])
        .unwrap();
    assert_eq!(image_of(&b1, Gen::t(2, 1), &gl).unwrap(), want.scale(&q(-1)));
    let want = gl
        .product(&[NCElement::gen(Gen::diag(1, -2)), NCElement::gen(Gen::t(2, 1))])
        .unwrap();
    assert_eq!(image_of(&b1, Gen::tbar(1, 2), &gl).unwrap(), want.scale(&q(1)));

    for n in 2..=3 {
        let gl = build_uq_gl(n).unwrap();
        let maps: Vec<_> = (1..n).map(|i| lusztig_gl(&gl, i).unwrap()).collect();
        for m in &maps {
            let rep = check_homomorphism(m, &gl, &gl).unwrap();
            assert!(rep.passed(), "{rep}");
        }
        let rep = check_group_relations(&maps, &gl).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn symmetries() {
    for n in 2..=4 {
        let alg = build_uqp_o(n).unwrap();
        let gens: Vec<Gen> = alg.generators().to_vec();
        let id = GenMap::identity(&alg);
        let om = omega(&alg).unwrap();
        let omc = omega_closed(&alg).unwrap();
        let omp = omega_prime(&alg).unwrap();
        let rh = rho(&alg).unwrap();
        assert_eq!(agree_on(&om, &omc, &gens, &alg).unwrap(), None);
        for m in [&om, &omp, &rh] {
            let rep = check_homomorphism(m, &alg, &alg).unwrap();
            assert!(rep.passed(), "{} {rep}", m.name());
            let sq = GenMap::compose(&[m, m], &alg).unwrap();
            assert_eq!(agree_on(&sq, &id, &gens, &alg).unwrap(), None, "{}", m.name());
        }
        for k in 1..n {
            assert_eq!(rh.apply(&serre_generator(k), &alg).unwrap(), -serre_generator(k));
            assert_eq!(om.apply(&serre_generator(k), &alg).unwrap(), serre_generator(n - k));
        }
        let signs: Vec<i8> = (1..=n).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect();
        let vs = varsigma(&alg, &signs).unwrap();
        let rep = check_homomorphism(&vs, &alg, &alg).unwrap();
        assert!(rep.passed(), "{rep}");
        let composite = GenMap::compose(&[&vs, &omp, &om], &alg).unwrap();
        assert_eq!(agree_on(&composite, &rh, &gens, &alg).unwrap(), None);
        for i in 1..n {
            let b = braid_o(&alg, i, false).unwrap();
            let binv = braid_o(&alg, n - i, true).unwrap();
            let conj = GenMap::compose(&[&omp, &b, &omp], &alg).unwrap();
            assert_eq!(agree_on(&conj, &binv, &gens, &alg).unwrap(), None, "i={i}");
        }
    }
}

#[test]
fn omega_prime_on_word() {
    let alg = build_uqp_o(3).unwrap();
    let omp = omega_prime(&alg).unwrap();
    let e = s(2, 1).concat(&s(3, 2));
    // reversed: omega'(s_32) omega'(s_21) = s_21 s_32
    assert_eq!(omp.apply(&e, &alg).unwrap(), alg.mul(&s(2, 1), &s(3, 2)).unwrap());
}

#[test]
fn corrupted_braid_map_fails() {
    let alg = build_uqp_o(3).unwrap();
    let mut b = braid_o(&alg, 1, false).unwrap();
    b.set(Gen::s(3, 1), s(3, 2).scale(&q(-1)));
    let rep = check_homomorphism(&b, &alg, &alg).unwrap();
    assert!(!rep.passed());
}

#[test]
fn sp_probes() {
    let gl2 = build_uq_gl(2).unwrap();
    let rep = sp_braid_odd_probe(&gl2, 1).unwrap();
    assert!(rep.passed(), "{rep}");
    let gl4 = build_uq_gl(4).unwrap();
    for j in [1, 3] {
        let rep = sp_braid_odd_probe(&gl4, j).unwrap();
        assert!(rep.passed(), "{rep}");
    }
    let rep = sp_gamma_probe(&gl4, 1).unwrap();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn gamma2() {
    let sp = build_uqp_sp_ext(2).unwrap();
    for ext in [false, true] {
        let g = gamma2_map(&sp, ext).unwrap();
        println!("{}", g.report.to_json());
        assert!(g.report.passed(), "{}", g.report);
    }
}
