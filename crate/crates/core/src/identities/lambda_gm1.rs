//! n-point λ_{g−1} integrals ∫ λ_{g−1}/Π(1 − μ_i ψ_i), top-degree part.
//!
//! The one-point value comes from the engine's combination integral with the
//! ch-terms removed through the Bernoulli side of the ch-λ_g relation. Larger
//! n follow from the genus-reduction recursion: join terms from n−1 points
//! minus the non-singular part of the genus-splitting sum, read in the
//! homogeneous component of degree 2g−2+n. Each step is a symmetric
//! polynomial fitted exactly from more samples than unknowns.

use num_traits::Zero;

use super::closed_forms::theorem32_rhs;
use super::mumford::{mumford_reduce, theorem32_class};
use crate::bernoulli::b_g;
use crate::engine::Engine;
use crate::error::{HodgeError, Result};
use crate::exact::interp::SymmetricPolynomial;
use crate::exact::rational::{int, ipow, rat, Rational};
use crate::partition::{enumerate_bounded, Partition};

/// Coefficients c_m (m = 0..=2g−2) of d^m in the one-point combination
/// integral G_(d) that come from the ch-terms.
pub fn ch_coefficients(g: u32) -> Result<Vec<Rational>> {
    if g == 0 {
        return Err(HodgeError::InvalidInput("needs g >= 1".into()));
    }
    let top = 2 * g - 2;
    let mut c = vec![Rational::zero(); top as usize + 1];
    c[top as usize] = -int(g as i64) * b_g(g);
    for m in 1..top {
        c[m as usize] = -theorem32_rhs(g, m)?;
    }
    if top > 0 && !mumford_reduce(&theorem32_class(g, 0)).is_zero() {
        return Err(HodgeError::Mismatch(format!("λ_{g} ch_{top} does not reduce to zero")));
    }
    Ok(c)
}

/// ℓ_g = ∫_{M̄_{g,1}} λ_{g−1} ψ^{2g−1}, solved from the engine at d = 1, 2, 3.
pub fn lambda_gm1_one_point(engine: &Engine, g: u32) -> Result<Rational> {
    let c = ch_coefficients(g)?;
    let mut found: Option<Rational> = None;
    for d in 1..=3u32 {
        let big_g = engine.extraction(g, &Partition::single(d))?.combination;
        let ch_part = c
            .iter()
            .enumerate()
            .map(|(m, cm)| cm * ipow(d as i64, m as i64))
            .fold(Rational::zero(), |a, b| a + b);
        let l = (big_g - ch_part) / ipow(d as i64, 2 * g as i64 - 1);
        match &found {
            Some(prev) if *prev != l => {
                return Err(HodgeError::Mismatch(format!(
                    "one-point λ_(g-1) value for g={g} differs between d=1 ({prev}) and d={d} ({l})"
                )))
            }
            _ => found = Some(l),
        }
    }
    Ok(found.expect("three samples"))
}

type Numerator = Box<dyn Fn(&Rational) -> Rational>;

fn f_term(g: u32, x: &Rational, k: usize) -> Rational {
    let e = 2 * g as i64 + k as i64 - 3;
    b_g(g) * num_traits::pow::Pow::pow(x, e as i32)
}

/// Genus-splitting sum over ordered index splits with its poles at a = 0,
/// a = M removed: ½ Σ_i Σ_{S} Σ_{g1+g2=g} Σ_{a=1}^{M−1} a(M−a) F_{g1}(a+σ_S) F_{g2}(M−a+σ_{S^c}),
/// F_h(x) = b_h x^{2h+k−3}, where the genus-zero factors with one or two
/// points are replaced by the polynomial part of the summand.
pub fn split_sum_nonsingular(g: u32, mu: &[u32]) -> Rational {
    let n = mu.len();
    let mut tot = Rational::zero();
    let half = rat(1, 2);
    for i in 0..n {
        let m = mu[i] as i64;
        let others: Vec<usize> = (0..n).filter(|&l| l != i).collect();
        for mask in 0u32..(1 << others.len()) {
            let (mut s_in, mut s_out, mut n1, mut n2) = (0i64, 0i64, 1usize, 1usize);
            for (bit, &l) in others.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    s_in += mu[l] as i64;
                    n1 += 1;
                } else {
                    s_out += mu[l] as i64;
                    n2 += 1;
                }
            }
            for g1 in 0..=g {
                let g2 = g - g1;
                let sing1 = g1 == 0 && n1 <= 2;
                let sing2 = g2 == 0 && n2 <= 2;
                if !sing1 && !sing2 {
                    for a in 1..m {
                        tot += &half
                            * int(a * (m - a))
                            * f_term(g1, &int(a + s_in), n1)
                            * f_term(g2, &int(m - a + s_out), n2);
                    }
                    continue;
                }
                // The summand is P(a)/(a − c) (first factor singular) or
                // P(a)/(c − a) (second factor singular).
                let (p, c, flip): (Numerator, Rational, bool) = if sing1 {
                    let c = int(-s_in);
                    if n1 == 1 {
                        (Box::new(move |a: &Rational| (int(m) - a) * f_term(g2, &(int(m + s_out) - a), n2)), c, false)
                    } else {
                        (Box::new(move |a: &Rational| a * (int(m) - a) * f_term(g2, &(int(m + s_out) - a), n2)), c, false)
                    }
                } else if n2 == 1 {
                    (Box::new(move |a: &Rational| a * f_term(g1, &(a + int(s_in)), n1)), int(m), true)
                } else {
                    (Box::new(move |a: &Rational| a * (int(m) - a) * f_term(g1, &(a + int(s_in)), n1)), int(m + s_out), true)
                };
                let pc = p(&c);
                for a in 1..m {
                    let a = int(a);
                    let gap = if flip { &c - &a } else { &a - &c };
                    tot += &half * (p(&a) - &pc) / gap;
                }
            }
        }
    }
    tot
}

/// The top-degree symmetric polynomial L_{g,n}(μ) for n = 1..=n_max, index n−1.
pub fn lambda_gm1_polynomials(engine: &Engine, g: u32, n_max: usize) -> Result<Vec<SymmetricPolynomial>> {
    if g == 0 || n_max == 0 {
        return Err(HodgeError::InvalidInput("needs g >= 1 and n >= 1".into()));
    }
    let mut base = SymmetricPolynomial::new(1);
    base.set(Partition::single(2 * g - 1), lambda_gm1_one_point(engine, g)?);
    let mut out = vec![base];
    for n in 2..=n_max {
        let degree = 2 * g + n as u32 - 2;
        let prev = out.last().expect("nonempty");
        let samples: Vec<(Vec<Rational>, Rational)> = sample_points(n, degree + 2)
            .into_iter()
            .map(|mu| {
                let mut joins = Rational::zero();
                for i in 0..n {
                    for j in i + 1..n {
                        let mut merged: Vec<Rational> = vec![int((mu[i] + mu[j]) as i64)];
                        merged.extend((0..n).filter(|&l| l != i && l != j).map(|l| int(mu[l] as i64)));
                        joins += int((mu[i] + mu[j]) as i64) * prev.eval(&merged);
                    }
                }
                let value = (joins - split_sum_nonsingular(g, &mu)) / int(n as i64);
                (mu.iter().map(|&x| int(x as i64)).collect(), value)
            })
            .collect();
        let full = SymmetricPolynomial::interpolate(n, degree, &samples)?;
        out.push(full.homogeneous_part(degree));
    }
    Ok(out)
}

/// Non-increasing n-tuples with entries in 1..=max_part.
fn sample_points(n: usize, max_part: u32) -> Vec<Vec<u32>> {
    (n as u32..=n as u32 * max_part)
        .flat_map(|d| enumerate_bounded(d, n, max_part))
        .filter(|p| p.len() == n)
        .map(|p| p.parts().to_vec())
        .collect()
}

/// Top-degree part of ∫_{M̄_{g,n}} λ_{g−1}/Π(1 − μ_i ψ_i) evaluated at μ.
pub fn lambda_gm1_recursion(engine: &Engine, g: u32, mu: &Partition) -> Result<Rational> {
    if mu.is_empty() {
        return Err(HodgeError::InvalidInput("μ must be nonempty".into()));
    }
    let polys = lambda_gm1_polynomials(engine, g, mu.len())?;
    let x: Vec<Rational> = mu.parts().iter().map(|&p| int(p as i64)).collect();
    Ok(polys[mu.len() - 1].eval(&x))
}

/// The same polynomial read directly off the engine: the combination
/// integral over n-part partitions of size ≤ d_max, fitted and cut to its
/// top-degree part.
pub fn lambda_gm1_from_engine(engine: &Engine, g: u32, n: usize, d_max: u32) -> Result<SymmetricPolynomial> {
    let degree = 2 * g + n as u32 - 2;
    let samples = (n as u32..=d_max)
        .flat_map(|d| enumerate_bounded(d, n, d))
        .filter(|p| p.len() == n)
        .map(|mu| {
            let x = mu.parts().iter().map(|&p| int(p as i64)).collect();
            Ok((x, engine.extraction(g, &mu)?.combination))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SymmetricPolynomial::interpolate(n, degree, &samples)?.homogeneous_part(degree))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn genus_one_two_points() {
        let engine = Engine::for_range(1, 3);
        let polys = lambda_gm1_polynomials(&engine, 1, 3).unwrap();
        assert_eq!(polys[0].coeff(&m("1")), rat(1, 24));
        assert_eq!(polys[1].coeff(&m("2")), rat(1, 24));
        assert_eq!(polys[1].coeff(&m("1,1")), rat(1, 24));
        assert_eq!(polys[2].coeff(&m("3")), rat(1, 24));
        assert_eq!(polys[2].coeff(&m("2,1")), rat(1, 12));
        assert_eq!(polys[2].coeff(&m("1,1,1")), rat(1, 12));
    }

    #[test]
    fn symmetric_in_the_parts() {
        let engine = Engine::for_range(1, 3);
        let a = lambda_gm1_recursion(&engine, 1, &m("3,1,2")).unwrap();
        let b = lambda_gm1_recursion(&engine, 1, &m("1,2,3")).unwrap();
        assert_eq!(a, b);
    }
}
