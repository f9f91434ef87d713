//! Test-side oracles and property checks shared by the integration tests and
//! the acceptance harness. Nothing here calls into the library's series code;
//! the series below are expanded from scratch.

#![allow(dead_code)]

use std::collections::BTreeMap;

use hodge_core::character::character;
use hodge_core::exact::pseries::PSeries;
use hodge_core::exact::rational::{int, rat};
use hodge_core::partition::{enumerate_partitions, partitions_up_to};
use hodge_core::{GaussianRational, Partition, Rational, Ring, TauPolynomial};
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

pub fn p(s: &str) -> Partition {
    s.parse().expect("valid partition")
}

pub fn factorial(n: i64) -> Rational {
    (1..=n).fold(Rational::one(), |a, k| a * int(k))
}

/// b_g as listed in the literature for g ≤ 3.
pub fn b_literal(g: u32) -> Rational {
    match g {
        0 => int(1),
        1 => rat(1, 24),
        2 => rat(7, 5760),
        3 => rat(31, 967680),
        _ => panic!("no literal value for g={g}"),
    }
}

/// Power series with rational coefficients, index = power of x.
pub type Series = Vec<Rational>;

/// sin(a x) through x^n.
pub fn sin_series(a: &Rational, n: usize) -> Series {
    let mut out = vec![Rational::zero(); n + 1];
    let mut pw = Rational::one();
    for k in 0..=n {
        if k > 0 {
            pw = &pw * a;
        }
        if k % 2 == 1 {
            let sign = if (k / 2) % 2 == 0 { int(1) } else { int(-1) };
            out[k] = sign * &pw / factorial(k as i64);
        }
    }
    out
}

pub fn mul(a: &Series, b: &Series, n: usize) -> Series {
    let mut out = vec![Rational::zero(); n + 1];
    for (i, x) in a.iter().enumerate().take(n + 1) {
        for (j, y) in b.iter().enumerate().take(n + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// 1/s for s with s[0] ≠ 0.
pub fn inv(s: &Series, n: usize) -> Series {
    let mut out = vec![Rational::zero(); n + 1];
    out[0] = Rational::one() / &s[0];
    for k in 1..=n {
        let mut acc = Rational::zero();
        for j in 1..=k.min(s.len() - 1) {
            acc += &s[j] * &out[k - j];
        }
        out[k] = -acc / &s[0];
    }
    out
}

/// (c x/2)/sin(c x/2) through x^n.
pub fn half_csc(c: i64, n: usize) -> Series {
    let s = sin_series(&rat(c, 2), n + 1);
    // divide by c x / 2
    let reduced: Series = s[1..].iter().map(|v| v / rat(c, 2)).collect();
    inv(&reduced, n)
}

/// Σ_{i+j=d} x²/(8 sin(ix/2) sin(jx/2)) through x^n.
pub fn pair_csc(d: i64, n: usize) -> Series {
    let mut total = vec![Rational::zero(); n + 1];
    for i in 1..d {
        let j = d - i;
        // x²/(8 sin sin) = (1/(2ij)) · S_i · S_j with S_c = (cx/2)/sin(cx/2)
        let t = mul(&half_csc(i, n), &half_csc(j, n), n);
        for k in 0..=n {
            total[k] += &t[k] / int(2 * i * j);
        }
    }
    total
}

/// −H_{d−1}(dx/2)/(d sin(dx/2)) + Σ_{i+j=d} x²/(8 sin sin) through x^n.
pub fn one_point_trig_side(d: i64, n: usize) -> Series {
    let h: Rational = (1..d).map(|a| rat(1, a)).fold(Rational::zero(), |x, y| x + y);
    let s = half_csc(d, n);
    let pair = pair_csc(d, n);
    (0..=n).map(|k| -(&h / int(d)) * &s[k] + &pair[k]).collect()
}

/// Property checks used by the acceptance harness and the proptest suite.
/// Each returns the number of cases checked or a description of the first failure.
pub fn character_orthogonality(d_max: u32) -> Result<usize, String> {
    let mut cases = 0;
    for d in 1..=d_max {
        let parts = enumerate_partitions(d);
        let table: BTreeMap<(Partition, Partition), i64> = parts
            .iter()
            .flat_map(|nu| parts.iter().map(move |s| (nu.clone(), s.clone())))
            .map(|(nu, s)| {
                let v = character(&nu, &s).expect("same size");
                ((nu, s), v)
            })
            .collect();
        for a in &parts {
            for b in &parts {
                let row: Rational = parts
                    .iter()
                    .map(|s| int(table[&(a.clone(), s.clone())] * table[&(b.clone(), s.clone())]) / int_big(s.z_factor()))
                    .fold(Rational::zero(), |x, y| x + y);
                let col: i64 = parts.iter().map(|nu| table[&(nu.clone(), a.clone())] * table[&(nu.clone(), b.clone())]).sum();
                let col_expected = if a == b { int_big(a.z_factor()) } else { Rational::zero() };
                if row != int(i64::from(a == b)) || int(col) != col_expected {
                    return Err(format!("orthogonality fails for ({a}), ({b})"));
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn int_big(n: num_bigint::BigInt) -> Rational {
    Rational::from_integer(n)
}

pub fn hook_invariants(d_max: u32) -> Result<usize, String> {
    let mut cases = 0;
    for d in 1..=d_max {
        let mut dim_square_sum = Rational::zero();
        for nu in enumerate_partitions(d) {
            let conj = nu.conjugate();
            let mut h1 = nu.hook_lengths();
            let mut h2 = conj.hook_lengths();
            h1.sort_unstable();
            h2.sort_unstable();
            if h1 != h2 || conj.conjugate() != nu || conj.kappa() != -nu.kappa() {
                return Err(format!("conjugation invariant fails at ({nu})"));
            }
            let hook_product: Rational = h1.iter().map(|&h| int(h as i64)).fold(Rational::one(), |a, b| a * b);
            let dim = factorial(d as i64) / hook_product;
            let identity = Partition::new(vec![1; d as usize]).expect("valid");
            if dim != int(character(&nu, &identity).expect("same size")) {
                return Err(format!("hook length formula fails at ({nu})"));
            }
            dim_square_sum += &dim * &dim;
            cases += 1;
        }
        if dim_square_sum != factorial(d as i64) {
            return Err(format!("Σ dim² ≠ d! at d={d}"));
        }
    }
    Ok(cases)
}

fn runner() -> TestRunner {
    TestRunner::new_with_rng(Config { cases: 64, failure_persistence: None, ..Config::default() }, proptest::test_runner::TestRng::deterministic_rng(proptest::test_runner::RngAlgorithm::ChaCha))
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

/// log(exp(X)) = X and exp(log(1 + X)) = 1 + X for random X without constant term.
pub fn exp_log_round_trips() -> Result<usize, String> {
    let keys = partitions_up_to(5);
    let n = keys.len();
    let mut runner = runner();
    runner
        .run(&proptest::collection::vec(small_rational(), n), |coeffs| {
            let mut x = PSeries::new(5);
            for (k, c) in keys.iter().zip(&coeffs) {
                x.insert(k.clone(), c.clone());
            }
            let back = x.exp().and_then(|e| e.log()).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(&back, &x);
            let one_plus = PSeries::constant(Rational::one(), 5).plus(&x);
            let again = one_plus.log().and_then(|l| l.exp()).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(&again, &one_plus);
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok(64)
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (small_rational(), small_rational()).prop_map(|(a, b)| GaussianRational::new(a, b))
}

fn tau_poly(max_len: usize) -> impl Strategy<Value = TauPolynomial> {
    proptest::collection::vec(gaussian(), 1..=max_len).prop_map(TauPolynomial::new)
}

/// (a·b)/b = a exactly, and div_rem gives a·b + r = q·b + r with deg r < deg b.
pub fn exact_division_postconditions() -> Result<usize, String> {
    let mut runner = runner();
    runner
        .run(&(tau_poly(5), tau_poly(4), tau_poly(3)), |(a, b, r)| {
            prop_assume!(!b.is_zero());
            let prod = a.times(&b);
            prop_assert_eq!(prod.exact_div(&b).map_err(|e| TestCaseError::fail(e.to_string()))?, a.clone());
            let num = prod.plus(&r);
            let (q, rem) = num.div_rem(&b).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(q.times(&b).plus(&rem), num.clone());
            prop_assert!(rem.is_zero() || rem.degree() < b.degree());
            if !rem.is_zero() {
                prop_assert!(num.exact_div(&b).is_err());
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok(64)
}
