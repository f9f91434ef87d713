//! Bernoulli numbers, the coefficients b_g of (t/2)/sin(t/2), and the
//! power-sum combinatorics that convert between the two.

use std::sync::RwLock;

use num_traits::{One, Zero};

use crate::error::{HodgeError, Result};
use crate::exact::laurent::{sine_series, LaurentSeries};
use crate::exact::rational::{big, binomial, factorial, harmonic, int, ipow, rat, sign, Rational};
use crate::exact::ring::Ring;

static BERNOULLI: RwLock<Vec<Rational>> = RwLock::new(Vec::new());

/// B_0 ..= B_{m_max} from the generating function t/(e^t − 1), so B_1 = −1/2.
pub fn bernoulli_table(m_max: u32) -> Vec<Rational> {
    let n = m_max as i64;
    let denom = LaurentSeries::new(
        0,
        (0..=n).map(|k| Rational::new(One::one(), factorial(k as u64 + 1))).collect(),
        Some(n),
    );
    let gen = denom.inverse().expect("constant term is one");
    (0..=n)
        .map(|k| gen.coeff(k).expect("within precision") * big(&factorial(k as u64)))
        .collect()
}

/// B_m, cached across calls.
pub fn bernoulli(m: u32) -> Rational {
    if let Some(b) = BERNOULLI.read().expect("bernoulli cache poisoned").get(m as usize) {
        return b.clone();
    }
    let table = bernoulli_table((2 * m).max(16));
    let b = table[m as usize].clone();
    let mut cache = BERNOULLI.write().expect("bernoulli cache poisoned");
    if cache.len() < table.len() {
        *cache = table;
    }
    b
}

/// b_g = (2^{2g−1} − 1)/2^{2g−1} · |B_{2g}|/(2g)!, the t^{2g} coefficient of
/// (t/2)/sin(t/2). b_0 = 1.
pub fn b_g(g: u32) -> Rational {
    if g == 0 {
        return Rational::one();
    }
    let p = ipow(2, 2 * g as i64 - 1);
    let b = bernoulli(2 * g);
    (&p - int(1)) / &p * num_traits::Signed::abs(&b) / big(&factorial(2 * g as u64))
}

/// (t/2)/sin(t/2) through t^{max_order}, by inverting the sine series
/// directly; independent of the Bernoulli table.
pub fn half_csc_series(max_order: i64) -> LaurentSeries<Rational> {
    let s = sine_series(&rat(1, 2), max_order + 1).shift(-1).scaled(&int(2));
    s.inverse().expect("sin(t/2)/(t/2) starts at 1").truncate(max_order)
}

/// Σ_{i=1}^{d−1} i^m by the Bernoulli closed form.
///
/// For m = 0 the closed form counts the 0^0 term as well, so it is removed.
pub fn power_sum(d: u32, m: u32) -> Rational {
    let mut acc = Rational::zero();
    for k in 0..=m {
        acc += big(&binomial(m as u64 + 1, k as u64)) * bernoulli(k) * ipow(d as i64, (m + 1 - k) as i64);
    }
    let closed = acc / int(m as i64 + 1);
    if m == 0 {
        closed - int(1)
    } else {
        closed
    }
}

pub fn power_sum_brute(d: u32, m: u32) -> Rational {
    (1..d as i64).map(|i| ipow(i, m as i64)).fold(Rational::zero(), |a, b| a + b)
}

/// F_{g1,g2}(d) = Σ_{i=1}^{d−1} i^{2g1−1} (d−i)^{2g2−1} by direct summation.
pub fn f_brute(g1: u32, g2: u32, d: u32) -> Rational {
    (1..d as i64)
        .map(|i| ipow(i, 2 * g1 as i64 - 1) * ipow(d as i64 - i, 2 * g2 as i64 - 1))
        .fold(Rational::zero(), |a, b| a + b)
}

/// F_{g1,g2}(d) for g1, g2 ≥ 1 as a polynomial in d with Bernoulli coefficients.
pub fn f_closed(g1: u32, g2: u32, d: u32) -> Result<Rational> {
    if g1 == 0 || g2 == 0 {
        return Err(HodgeError::InvalidInput("closed form needs g1, g2 >= 1".into()));
    }
    let g = (g1 + g2) as i64;
    let e2 = 2 * g2 as i64 - 1;
    let mut acc = Rational::zero();
    for k in 0..=e2 {
        let outer = int(sign(e2 - k)) * big(&binomial(e2 as u64, k as u64)) / int(2 * g - 1 - k);
        for l in 0..=(2 * g - 2 - k) {
            acc += &outer
                * big(&binomial((2 * g - 1 - k) as u64, l as u64))
                * bernoulli(l as u32)
                * ipow(d as i64, 2 * g - 1 - l);
        }
    }
    Ok(acc)
}

/// F_{0,g}(d) − d^{2g−1} H_{d−1}, the part of the genus-0 boundary sum that
/// is polynomial in d. Errors if brute force and the Bernoulli expansion disagree.
pub fn f0g_polynomial_part(g: u32, d: u32) -> Result<Rational> {
    if g == 0 {
        return Err(HodgeError::InvalidInput("needs g >= 1".into()));
    }
    let g = g as i64;
    let brute = f_brute(0, g as u32, d) - ipow(d as i64, 2 * g - 1) * harmonic(d as u64 - 1);
    let mut closed = int(2 * g - 1) * ipow(d as i64, 2 * g - 2);
    for k in 0..=(2 * g - 2) {
        let outer = big(&binomial((2 * g - 1) as u64, k as u64)) * int(sign(2 * g - 1 - k)) / int(2 * g - 1 - k);
        for l in 0..=(2 * g - k - 2) {
            closed += &outer
                * big(&binomial((2 * g - 1 - k) as u64, l as u64))
                * bernoulli(l as u32)
                * ipow(d as i64, 2 * g - 1 - l);
        }
    }
    if brute != closed {
        return Err(HodgeError::Mismatch(format!(
            "F_(0,{g})({d}) polynomial part: brute {brute} vs Bernoulli form {closed}"
        )));
    }
    Ok(brute)
}

/// Σ_{i+j=d} λ²/(8 sin(iλ/2) sin(jλ/2)) through λ^{max_order}, computed from
/// raw sine series.
pub fn pair_csc_series(d: u32, max_order: i64) -> LaurentSeries<Rational> {
    let mut total = LaurentSeries::zero();
    let work = max_order + 4;
    for i in 1..d {
        let j = d - i;
        let si = sine_series(&rat(i as i64, 2), work);
        let sj = sine_series(&rat(j as i64, 2), work);
        let term = si.times(&sj).inverse().expect("nonzero sine product").shift(2).scaled(&rat(1, 8));
        total = total.plus(&term);
    }
    total.truncate(max_order)
}

/// The same sum expanded as Σ_g λ^{2g} · ½ Σ_{g1+g2=g} b_{g1} b_{g2} F_{g1,g2}(d).
pub fn pair_bernoulli_series(d: u32, max_order: i64) -> LaurentSeries<Rational> {
    let coeffs = (0..=max_order.max(0))
        .map(|k| {
            if k % 2 == 1 {
                return Rational::zero();
            }
            let g = (k / 2) as u32;
            (0..=g)
                .map(|g1| b_g(g1) * b_g(g - g1) * f_brute(g1, g - g1, d))
                .fold(Rational::zero(), |a, b| a + b)
                / int(2)
        })
        .collect();
    LaurentSeries::new(0, coeffs, Some(max_order))
}
