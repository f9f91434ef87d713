mod common;

use common::{b_literal, factorial, p};
use hodge_core::bernoulli::{b_g, bernoulli, f_brute, f_closed, f0g_polynomial_part, pair_bernoulli_series, pair_csc_series};
use hodge_core::cutjoin::{join_set, MoveWeights};
use hodge_core::exact::rational::{int, rat};
use hodge_core::identities::closed_forms::{known_integrals, proof_helpers_34};
use hodge_core::identities::lambda_gm1::{ch_coefficients, lambda_gm1_from_engine, lambda_gm1_one_point, lambda_gm1_polynomials};
use hodge_core::identities::mumford::{ch_newton, ch_to_lambda, dual_chern_product};
use hodge_core::identities::recursions::{
    eq31_check, join_aggregate, one_point_combination_polynomial, perturbed_weights, theorem32_vs_engine,
    theorem52_verify, theorem53_singular,
};
use hodge_core::identities::{
    lambda1_lambdag, lambda_g_conjecture, run_identity, theorem32_integral, theorem32_rhs, SuiteRange, IDENTITIES,
};
use hodge_core::partition::partitions_up_to;
use hodge_core::{Engine, HodgeError, Rational};

#[test]
fn bernoulli_numbers_from_the_literature() {
    let expected = [rat(1, 1), rat(-1, 2), rat(1, 6), int(0), rat(-1, 30), int(0), rat(1, 42), int(0), rat(-1, 30)];
    for (m, b) in expected.iter().enumerate() {
        assert_eq!(&bernoulli(m as u32), b, "B_{m}");
    }
    for g in 0..=3 {
        assert_eq!(b_g(g), b_literal(g));
    }
}

#[test]
fn boundary_sums_closed_form() {
    for g1 in 1..=4 {
        for g2 in 1..=4 {
            for d in 2..=30 {
                assert_eq!(f_closed(g1, g2, d).unwrap(), f_brute(g1, g2, d));
            }
        }
    }
    assert!(matches!(f_closed(0, 2, 5), Err(HodgeError::InvalidInput(_))));
    for g in 1..=4 {
        for d in 2..=12 {
            f0g_polynomial_part(g, d).unwrap();
        }
    }
}

#[test]
fn pair_series_two_ways() {
    for d in 2..=6 {
        let trig = pair_csc_series(d, 6);
        let sums = pair_bernoulli_series(d, 6);
        let oracle = common::pair_csc(d as i64, 6);
        for k in 0..=6 {
            assert_eq!(trig.coeff(k).unwrap_or_default(), sums.coeff(k).unwrap_or_default(), "d={d} k={k}");
            assert_eq!(trig.coeff(k).unwrap_or_default(), oracle[k as usize], "d={d} k={k}");
        }
    }
}

#[test]
fn top_chern_character() {
    // (2g−1)! ch_{2g−1} = (−1)^{g−1} λ_{g−1} λ_g
    for g in 1..=5u32 {
        let ch = ch_to_lambda(2 * g - 1, g);
        let (c, e) = ch.single_term().expect("one monomial");
        let mut expected = vec![0u32; g as usize];
        expected[g as usize - 1] += 1;
        if g > 1 {
            expected[g as usize - 2] += 1;
        }
        assert_eq!(e, expected);
        let sign = if (g - 1) % 2 == 0 { 1 } else { -1 };
        assert_eq!(c * factorial(2 * g as i64 - 1), int(sign));
        assert!(ch_to_lambda(2 * g, g).is_zero());
        for k in 0..=2 * g + 1 {
            assert_eq!(ch_to_lambda(k, g), ch_newton(k, g), "g={g} k={k}");
        }
        for k in 1..g {
            assert!(ch_to_lambda(2 * k, g).is_zero(), "even ch_{} at g={g}", 2 * k);
        }
    }
    assert_eq!(ch_to_lambda(1, 3).single_term(), Some((int(1), vec![1, 0, 0])));
}

#[test]
fn dual_chern_polynomial_product() {
    for g in 1..=4u32 {
        let forms = dual_chern_product(g);
        for (k, f) in forms.iter().enumerate() {
            if k as u32 == 2 * g {
                let sign = if g % 2 == 0 { 1 } else { -1 };
                assert_eq!(f.polynomial().constant_value(), Some(int(sign)));
            } else {
                assert!(f.is_zero(), "g={g} t^{k}");
            }
        }
    }
}

#[test]
fn one_point_values_from_the_bernoulli_side() {
    assert_eq!(theorem32_rhs(3, 1).unwrap(), rat(1, 362880));
    assert_eq!(theorem32_rhs(3, 2).unwrap(), int(0));
    let e1 = theorem32_integral(3, 1).unwrap();
    assert_eq!(e1.solved, Some((vec![1, 1, 1], rat(1, 362880))));
    let e2 = theorem32_integral(3, 2).unwrap();
    assert_eq!(e2.solved, Some((vec![2, 0, 1], rat(1, 60480))));
    // λ₃λ₁²ψ² = 2 λ₂λ₃ψ²
    let known = known_integrals();
    assert_eq!(rat(1, 60480), int(2) * &known[0].value);
    let e3 = theorem32_integral(3, 3).unwrap();
    assert_eq!(e3.solved, Some((vec![1, 0, 1], rat(41, 1451520))));
    assert_eq!(lambda1_lambdag(3).unwrap(), rat(41, 1451520));
    assert_ne!(lambda1_lambdag(3).unwrap(), rat(41, 145120));
}

#[test]
fn lambda1_lambdag_matches_the_last_bernoulli_sum() {
    // m = 2g−3: −1!·(−1)^0 ∫λ_g ch_1 ψ^{2g−3} = −∫λ_1λ_g ψ^{2g−3}
    for g in 2..=6 {
        assert_eq!(-theorem32_rhs(g, 2 * g - 3).unwrap(), lambda1_lambdag(g).unwrap(), "g={g}");
    }
}

#[test]
fn bernoulli_side_vanishes_for_even_chern_characters() {
    for g in 2..=8u32 {
        for m in 1..=2 * g - 3 {
            let k = 2 * g - 2 - m;
            if k % 2 == 0 {
                assert_eq!(theorem32_rhs(g, m).unwrap(), int(0), "g={g} m={m}");
            }
        }
    }
    assert!(theorem32_rhs(1, 1).is_err());
    assert!(theorem32_rhs(3, 0).is_err());
}

#[test]
fn proof_helper_values() {
    for g in 2..=10 {
        let h = proof_helpers_34(g).unwrap();
        assert_eq!(h.f1_at_1, int(1));
    }
    assert_eq!(proof_helpers_34(2).unwrap().f3_at_1, int(-2));
}

#[test]
fn lambda_g_with_psi_classes() {
    assert_eq!(lambda_g_conjecture(1, &[0]).unwrap().value, rat(1, 24));
    assert_eq!(lambda_g_conjecture(2, &[2, 1, 1]).unwrap().value, int(12) * rat(7, 5760));
    let bad = lambda_g_conjecture(2, &[3, -1]).unwrap();
    assert!(!bad.dimension_ok);
    assert_eq!(bad.value, int(0));
}

#[test]
fn join_aggregate_up_to_twelve() {
    for mu in partitions_up_to(12) {
        assert!(join_aggregate(&mu).pass, "mu=({mu})");
    }
    let sum: Rational = join_set(&p("1,1")).iter().map(|m| m.coefficient.clone()).sum();
    assert_eq!(sum, int(1));
}

#[test]
fn singular_parts() {
    for mu in partitions_up_to(12).into_iter().filter(|m| m.len() >= 2) {
        assert!(theorem53_singular(&mu).unwrap().pass, "mu=({mu})");
    }
    assert!(theorem53_singular(&p("4")).is_err());
}

#[test]
fn tau_derivative_equation_pins_the_split_weight() {
    let engine = Engine::for_range(2, 4);
    let mut control_failed = false;
    for g in 0..=2 {
        for mu in partitions_up_to(4) {
            let good = eq31_check(&engine, g, &mu, &MoveWeights::default()).unwrap();
            assert!(good.iter().all(|r| r.pass), "g={g} mu=({mu})");
            let bad = eq31_check(&engine, g, &mu, &perturbed_weights()).unwrap();
            control_failed |= bad.iter().any(|r| !r.pass);
        }
    }
    assert!(control_failed);
}

#[test]
fn combined_recursion() {
    let engine = Engine::for_range(2, 4);
    for g in 1..=2 {
        for mu in partitions_up_to(4) {
            assert!(theorem52_verify(&engine, g, &mu).unwrap().pass, "g={g} mu=({mu})");
        }
    }
}

#[test]
fn one_point_combination_against_bernoulli_side() {
    let engine = Engine::for_range(3, 7);
    for g in 2..=3 {
        assert!(theorem32_vs_engine(&engine, g).unwrap().iter().all(|r| r.pass));
    }
    // top coefficient of G_(d) is the one-point λ_{g−1} integral
    let poly = one_point_combination_polynomial(&engine, 2).unwrap();
    assert_eq!(poly[3], lambda_gm1_one_point(&engine, 2).unwrap());
    assert_eq!(ch_coefficients(1).unwrap(), vec![-rat(1, 24)]);
}

#[test]
fn lambda_gm1_values() {
    let engine = Engine::for_range(2, 6);
    assert_eq!(lambda_gm1_one_point(&engine, 1).unwrap(), rat(1, 24));
    assert_eq!(lambda_gm1_one_point(&engine, 2).unwrap(), rat(1, 480));
    let polys = lambda_gm1_polynomials(&engine, 2, 2).unwrap();
    assert_eq!(polys[1].coeff(&p("4")), rat(1, 480));
    assert_eq!(polys[1].coeff(&p("3,1")), rat(1, 160));
    assert_eq!(polys[1].coeff(&p("2,2")), rat(5, 576));
    let direct = lambda_gm1_from_engine(&engine, 2, 2, 6).unwrap();
    assert_eq!(direct.coeffs(), polys[1].coeffs());
}

#[test]
fn every_suite_passes_at_small_range() {
    let small = SuiteRange { g_max: Some(1), d_max: Some(3), n_max: Some(3), order: Some(2) };
    for name in IDENTITIES {
        let range = if *name == "thm32-vs-engine" { SuiteRange { g_max: Some(2), ..small.clone() } } else { small.clone() };
        let records = run_identity(name, &range).unwrap();
        assert!(records.iter().all(|r| r.pass), "{name}");
    }
    assert!(matches!(run_identity("nope", &small), Err(HodgeError::InvalidInput(_))));
}
