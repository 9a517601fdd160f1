use tqa::algebras::build_uqp_o;
use tqa::invariants::*;
use tqa::poisson::{build_poisson_o, build_poisson_sp, PoissonPoly};

fn a(i: usize, j: usize) -> PoissonPoly {
    PoissonPoly::var(i, j)
}

#[test]
fn det_coefficients_small() {
    let p2 = build_poisson_o(2).unwrap();
    let f = charpoly_coeffs(&p2);
    assert_eq!(f[0], PoissonPoly::one());
    assert_eq!(f[1], &PoissonPoly::int(2) - &a(2, 1).pow(2));
    assert_eq!(f[2], PoissonPoly::one());
}

#[test]
fn markov_polynomial() {
    let p3 = build_poisson_o(3).unwrap();
    let markov = &(&(&a(2, 1).pow(2) + &a(3, 1).pow(2)) + &a(3, 2).pow(2)) - &(&(&a(3, 1) * &a(3, 2)) * &a(2, 1));
    assert_eq!(c_k(&p3, 1).unwrap(), markov);
    // f_1 = 3 - c_1 from the det-Pfaffian identity at N = 3
    assert_eq!(charpoly_coeffs(&p3)[1], &PoissonPoly::int(3) - &markov);
}

#[test]
fn poisson_casimirs() {
    for n in 2..=5 {
        let spec = build_poisson_o(n).unwrap();
        for rep in [
            check_unitri_inverse(&spec),
            check_det_family(&spec),
            check_pfaffian_family(&spec),
        ] {
            let rep = rep.unwrap();
            assert!(rep.passed(), "{rep}");
        }
        let rep = liouville_check(&spec, 4).unwrap();
        assert!(rep.passed(), "{rep}");
    }
    for n in 1..=2 {
        let rep = sp_casimirs(&build_poisson_sp(n).unwrap()).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn det_pfaffian_identity() {
    for n in 2..=6 {
        let rep = det_expansion_check(&build_poisson_o(n).unwrap()).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn pfaffian_of_two_by_two() {
    let p2 = build_poisson_o(2).unwrap();
    // (A^t - A)_12 = a21
    assert_eq!(pf_i(&p2.matrix(), &[1, 2]).unwrap(), a(2, 1));
    let m = p2.matrix();
    let skew = matrix::sub(&m, &matrix::transpose(&m));
    assert_eq!(matrix::pfaffian(&skew).unwrap(), -a(2, 1));
    assert!(matrix::pfaffian(&matrix::identity(3)).is_err());
}

#[test]
fn non_casimir_detected() {
    let p3 = build_poisson_o(3).unwrap();
    let rep = tqa::poisson::casimir_check(&a(2, 1), &p3, "a21", "x").unwrap();
    assert!(!rep.passed());
}

#[test]
fn probes_are_findings() {
    let rep = conjecture_probe(&build_poisson_sp(2).unwrap()).unwrap();
    assert!(rep.passed(), "{rep}");
    assert!(rep.findings().count() >= 2);
    for n in 3..=5 {
        let rep = jacobian_rank_probe(&build_poisson_o(n).unwrap(), 7).unwrap();
        let w = rep.findings().next().unwrap().witness.clone().unwrap();
        let full = format!("rank {} of {}", n / 2, n / 2);
        assert!(w.starts_with(&full), "{w}");
    }
}

#[test]
fn quantum_invariants() {
    for n in 2..=4 {
        let alg = build_uqp_o(n).unwrap();
        let rep = quantum_invariants_report(&alg).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn quantum_non_central_detected() {
    let alg = build_uqp_o(3).unwrap();
    let rep = quantum_center_check(&alg, &alg.s(2, 1), "s21", "x").unwrap();
    assert!(!rep.passed());
}
