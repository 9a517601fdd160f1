use tqa::morphisms::braid_o;
use tqa::nc::{Gen, NCElement};
use tqa::poisson::*;

fn a(i: usize, j: usize) -> PoissonPoly {
    PoissonPoly::var(i, j)
}

#[test]
fn orth_table_examples() {
    let p3 = build_poisson_o(3).unwrap();
    // {x,y} = xy - 2z with x = a21, y = a31, z = a32
    assert_eq!(
        p3.bracket(&a(2, 1), &a(3, 1)),
        &(&a(2, 1) * &a(3, 1)) - &a(3, 2).scale_int(2)
    );
    // case i > j > l, with (i,j,l) = (3,2,1)
    assert_eq!(
        p3.bracket(&a(3, 2), &a(2, 1)),
        &(&a(2, 1) * &a(3, 2)) - &a(3, 1).scale_int(2)
    );
    let f = &a(2, 1) * &a(3, 2);
    assert!(p3.bracket(&f, &f).is_zero());

    let p4 = build_poisson_o(4).unwrap();
    assert!(p4.bracket(&a(2, 1), &a(4, 3)).is_zero());
    // (4,1,3,2) is the ordering i > k > l > j, a commuting case
    assert!(p4.bracket(&a(4, 1), &a(3, 2)).is_zero());
    // i > k > j > l
    let got = p4.bracket(&a(4, 2), &a(3, 1));
    let expected = (&(&a(4, 3) * &a(2, 1)) - &(&a(3, 2) * &a(4, 1))).scale_int(2);
    assert_eq!(got, expected);
}

#[test]
fn symp_table_examples() {
    let p = build_poisson_sp(1).unwrap();
    assert_eq!(p.bracket(&a(1, 1), &a(2, 1)), (&a(1, 2) * &a(1, 1)).scale_int(2));
    for &x in p.vars() {
        for &y in p.vars() {
            assert_eq!(p.table_value(x, y), -p.table_value(y, x));
        }
    }
}

#[test]
fn jacobi() {
    for n in 2..=5 {
        let rep = check_jacobi(&build_poisson_o(n).unwrap()).unwrap();
        assert!(rep.passed(), "{rep}");
    }
    for n in 1..=2 {
        let rep = check_jacobi(&build_poisson_sp(n).unwrap()).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn classical_limit_basics() {
    assert_eq!(classical_limit(&NCElement::gen(Gen::s(2, 1))).unwrap(), a(2, 1));
    let e = NCElement::gen(Gen::s(3, 1)).scale(&tqa::coeff::LaurentPoly::q_minus_qinv());
    assert!(classical_limit(&e).unwrap().is_zero());
    let w = NCElement::word(&[Gen::s(3, 2), Gen::s(2, 1)]).scale(&tqa::coeff::LaurentPoly::q_pow(1));
    assert_eq!(classical_limit(&w).unwrap(), &a(3, 2) * &a(2, 1));
    assert!(classical_limit(&NCElement::gen(Gen::t(2, 1))).is_err());
}

#[test]
fn quantum_bracket_matches_table() {
    for n in 2..=4 {
        let rep = check_via_quantum(&build_poisson_o(n).unwrap(), 100, 0).unwrap();
        assert!(rep.passed(), "{rep}");
    }
    for n in 1..=2 {
        let rep = check_via_quantum(&build_poisson_sp(n).unwrap(), 100, 0).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn rmatrix_form() {
    for n in 2..=4 {
        let rep = rmatrix_bracket_check(&build_poisson_o(n).unwrap()).unwrap();
        assert!(rep.passed(), "{rep}");
    }
    for n in 1..=2 {
        let rep = rmatrix_bracket_check(&build_poisson_sp(n).unwrap()).unwrap();
        assert!(rep.passed(), "{rep}");
    }
    let p3 = build_poisson_o(3).unwrap();
    assert_eq!(
        rmatrix_bracket_entry(&p3, 2, 1, 3, 1),
        &(&a(2, 1) * &a(3, 1)) - &a(3, 2).scale_int(2)
    );
    let p = build_poisson_sp(1).unwrap();
    assert_eq!(
        rmatrix_bracket_entry(&p, 1, 1, 2, 1),
        (&a(1, 2) * &a(1, 1)).scale_int(2)
    );
}

#[test]
fn braid_action_on_poisson() {
    let p3 = build_poisson_o(3).unwrap();
    let b = braid_poisson(&p3, 1).unwrap();
    assert_eq!(b.get((2, 1)).unwrap(), &-a(2, 1));
    assert_eq!(b.get((3, 1)).unwrap(), &(&a(3, 2) - &(&a(3, 1) * &a(2, 1))));
    for n in 2..=4 {
        let spec = build_poisson_o(n).unwrap();
        let alg = spec.quantum().unwrap();
        let maps: Vec<_> = (1..n).map(|i| braid_poisson(&spec, i).unwrap()).collect();
        for (i, m) in maps.iter().enumerate() {
            let rep = check_poisson_map(m, &spec, 1).unwrap();
            assert!(rep.passed(), "{rep}");
            let lim = limit_of_map(&braid_o(&alg, i + 1, false).unwrap(), &spec, &alg).unwrap();
            assert_eq!(lim.disagreement(m), None);
        }
        let rep = check_poisson_braid_relations(&maps).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn anti_maps() {
    let p3 = build_poisson_o(3).unwrap();
    let flip = poisson_anti(&p3, AntiKind::Flip).unwrap();
    assert_eq!(flip.get((2, 1)).unwrap(), &a(3, 2));
    let inv = poisson_anti(&p3, AntiKind::Inv).unwrap();
    assert_eq!(inv.get((3, 1)).unwrap(), &(&-a(3, 1) + &(&a(3, 2) * &a(2, 1))));
    let p2 = build_poisson_o(2).unwrap();
    assert_eq!(
        poisson_anti(&p2, AntiKind::Inv).unwrap().get((2, 1)).unwrap(),
        &-a(2, 1)
    );
    for n in 2..=4 {
        let spec = build_poisson_o(n).unwrap();
        for kind in [AntiKind::Inv, AntiKind::Flip] {
            let m = poisson_anti(&spec, kind).unwrap();
            let rep = check_poisson_map(&m, &spec, -1).unwrap();
            assert!(rep.passed(), "{rep}");
            let sq = PoissonMap::compose(&[&m, &m]).unwrap();
            let id = {
                let mut id = PoissonMap::new("id");
                for &(i, j) in spec.vars() {
                    id.set((i, j), a(i as usize, j as usize));
                }
                id
            };
            assert_eq!(sq.disagreement(&id), None);
        }
    }
}

#[test]
fn corrupted_table_fails() {
    let mut spec = build_poisson_o(3).unwrap();
    spec.set_table_value((2, 1), (3, 1), &(&a(2, 1) * &a(3, 1)) - &a(3, 2));
    assert!(!check_jacobi(&spec).unwrap().passed() || !rmatrix_bracket_check(&spec).unwrap().passed());
    assert!(!rmatrix_bracket_check(&spec).unwrap().passed());
    assert!(!check_via_quantum(&spec, 0, 0).unwrap().passed());
}
