mod common;

use common::p;
use hodge_core::character::character;
use hodge_core::exact::interp::SymmetricPolynomial;
use hodge_core::exact::rational::{int, parse_rational, fraction_string, rat};
use hodge_core::identities::mumford::{mumford_reduce, LambdaPolynomial};
use hodge_core::partition::enumerate_partitions;
use hodge_core::{Partition, Rational};
use proptest::prelude::*;

#[test]
fn characters_are_orthogonal() {
    common::character_orthogonality(8).unwrap();
}

#[test]
fn hook_lengths_respect_conjugation() {
    common::hook_invariants(12).unwrap();
}

#[test]
fn exp_and_log_invert_each_other() {
    common::exp_log_round_trips().unwrap();
}

#[test]
fn exact_division() {
    common::exact_division_postconditions().unwrap();
}

fn partition_strategy() -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1u32..=6, 1..=6).prop_map(|v| Partition::new(v).unwrap())
}

proptest! {
    #[test]
    fn partition_statistics(mu in partition_strategy()) {
        let z = Rational::from_integer(mu.z_factor());
        let aut = Rational::from_integer(mu.aut_order());
        let prod = mu.parts().iter().fold(int(1), |a, &x| a * int(x as i64));
        prop_assert_eq!(z / aut, prod);
        prop_assert_eq!(mu.conjugate().size(), mu.size());
        prop_assert_eq!(mu.hook_lengths().len() as u32, mu.size());
    }

    #[test]
    fn parse_and_display_round_trip(mu in partition_strategy()) {
        let again: Partition = mu.to_string().parse().unwrap();
        prop_assert_eq!(again, mu);
    }

    #[test]
    fn fractions_round_trip(n in -1000i64..1000, d in 1i64..1000) {
        let r = rat(n, d);
        prop_assert_eq!(parse_rational(&fraction_string(&r)).unwrap(), r);
    }

    #[test]
    fn sign_character_on_columns(mu in partition_strategy()) {
        // χ_{(1^d)}(σ) is the sign of σ
        let d = mu.size();
        let column = Partition::new(vec![1; d as usize]).unwrap();
        let odd_cycles = mu.parts().iter().filter(|&&c| c % 2 == 0).count();
        let sign = if odd_cycles % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(character(&column, &mu).unwrap(), sign);
    }

    #[test]
    fn mumford_reduction_is_idempotent(e in proptest::collection::vec(0u32..=2, 3), c in -5i64..=5) {
        let g = 3;
        let mut poly = LambdaPolynomial::constant(g, int(c));
        for (k, &x) in e.iter().enumerate() {
            for _ in 0..x {
                poly = poly.times(&LambdaPolynomial::lambda(g, k as u32 + 1));
            }
        }
        let once = mumford_reduce(&poly);
        let twice = mumford_reduce(once.polynomial());
        prop_assert_eq!(once, twice);
    }
}

#[test]
fn symmetric_fit_recovers_a_known_polynomial() {
    let mut truth = SymmetricPolynomial::new(3);
    truth.set(p("2,1"), rat(3, 7));
    truth.set(p("1,1,1"), int(-2));
    truth.set(p("3"), rat(1, 5));
    let mut samples = Vec::new();
    for d in 3..=9 {
        for mu in enumerate_partitions(d).into_iter().filter(|m| m.len() == 3) {
            let x: Vec<Rational> = mu.parts().iter().map(|&v| int(v as i64)).collect();
            samples.push((x.clone(), truth.eval(&x)));
        }
    }
    let fit = SymmetricPolynomial::interpolate(3, 3, &samples).unwrap();
    assert_eq!(fit.coeffs(), truth.coeffs());
}
