//! Closed-form Hodge integrals and the Bernoulli-sum side of the
//! one-point ch-λ_g relation.

use num_traits::Zero;

use super::mumford::{mumford_reduce, theorem32_class, LambdaExponents, LambdaPolynomial, MumfordNormalForm};
use crate::bernoulli::{b_g, bernoulli};
use crate::error::{HodgeError, Result};
use crate::exact::rational::{big, binomial, factorial, int, ipow, rat, sign, Rational};
use crate::partition::Partition;

/// Bernoulli double sum giving −(2g−2−m)!(−1)^{2g−3−m} ∫_{M̄_{g,1}} λ_g ch_{2g−2−m} ψ^m,
/// for g ≥ 2 and 1 ≤ m ≤ 2g−3.
pub fn theorem32_rhs(g: u32, m: u32) -> Result<Rational> {
    if g < 2 || m < 1 || m > 2 * g - 3 {
        return Err(HodgeError::InvalidInput(format!("need g >= 2 and 1 <= m <= 2g-3, got g={g}, m={m}")));
    }
    let (g, m) = (g as i64, m as i64);
    let bern = bernoulli((2 * g - 1 - m) as u32);
    if bern.is_zero() {
        return Ok(Rational::zero());
    }
    let tail = |k: i64| big(&binomial((2 * g - 1 - k) as u64, (2 * g - 1 - m) as u64)) / int(2 * g - 1 - k);
    let mut first = Rational::zero();
    for k in 0..m {
        first += int(sign(2 * g - 1 - k)) * big(&binomial((2 * g - 1) as u64, k as u64)) * tail(k);
    }
    let mut second = Rational::zero();
    for g1 in 1..g {
        let g2 = g - g1;
        let mut inner = Rational::zero();
        for k in 0..=(2 * g2 - 1).min(m - 1) {
            inner += int(sign(2 * g2 - 1 - k)) * big(&binomial((2 * g2 - 1) as u64, k as u64)) * tail(k);
        }
        second += b_g(g1 as u32) * b_g(g2 as u32) * inner;
    }
    Ok((b_g(g as u32) * first + second / int(2)) * bern)
}

/// One integral ∫_{M̄_{g,1}} λ^e ψ^m with a known value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KnownIntegral {
    pub genus: u32,
    pub lambda: LambdaExponents,
    pub psi: u32,
    pub value: Rational,
    pub source: &'static str,
}

/// External input values that no formula in this crate produces.
pub fn known_integrals() -> Vec<KnownIntegral> {
    vec![KnownIntegral {
        genus: 3,
        lambda: vec![0, 1, 1],
        psi: 2,
        value: rat(1, 120960),
        source: "literature value of the one-point integral of lambda2*lambda3*psi^2 on M_3,1",
    }]
}

/// Result of pushing the Bernoulli side through the λ-class on the left.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Theorem32Evaluation {
    pub genus: u32,
    pub psi: u32,
    pub rhs: Rational,
    /// The class multiplying ψ^m, before Mumford reduction.
    pub class: LambdaPolynomial,
    pub reduced: MumfordNormalForm,
    /// `(monomial, value)` once the relation pins down a single integral.
    pub solved: Option<(LambdaExponents, Rational)>,
}

/// Solves the ch-λ_g relation for a single λ-monomial integral, using the
/// reduced class when it is a single monomial and otherwise the unreduced
/// class together with [`known_integrals`].
pub fn theorem32_integral(g: u32, m: u32) -> Result<Theorem32Evaluation> {
    let rhs = theorem32_rhs(g, m)?;
    let class = theorem32_class(g, m);
    let reduced = mumford_reduce(&class);
    let solved = if let Some((c, e)) = reduced.single_term() {
        Some((e, &rhs / c))
    } else if reduced.is_zero() {
        if !rhs.is_zero() {
            return Err(HodgeError::Mismatch(format!("class vanishes but the Bernoulli side is {rhs}")));
        }
        solve_with_known(&class, g, m, &rhs)
    } else {
        None
    };
    Ok(Theorem32Evaluation { genus: g, psi: m, rhs, class, reduced, solved })
}

/// Uses λ_g² = 0 and the known-integral table to isolate one unknown term.
fn solve_with_known(class: &LambdaPolynomial, g: u32, m: u32, rhs: &Rational) -> Option<(LambdaExponents, Rational)> {
    let known = known_integrals();
    let mut rest = rhs.clone();
    let mut unknown = None;
    for (e, c) in class.terms() {
        if e[g as usize - 1] >= 2 {
            continue;
        }
        match known.iter().find(|k| k.genus == g && k.psi == m && &k.lambda == e) {
            Some(k) => rest -= c * &k.value,
            None if unknown.is_none() => unknown = Some((e.clone(), c.clone())),
            None => return None,
        }
    }
    let (e, c) = unknown?;
    Some((e, rest / c))
}

/// ∫_{M̄_{g,1}} λ_1 λ_g ψ^{2g−3} = (1/12)[g(2g−3) b_g + b_1 b_{g−1}].
pub fn lambda1_lambdag(g: u32) -> Result<Rational> {
    if g < 2 {
        return Err(HodgeError::InvalidInput("λ_1 λ_g formula needs g >= 2".into()));
    }
    Ok((int(g as i64 * (2 * g as i64 - 3)) * b_g(g) + b_g(1) * b_g(g - 1)) / int(12))
}

/// The binomial sums from the derivation of the λ_1 λ_g formula, evaluated
/// directly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProofHelpers {
    pub genus: u32,
    pub a1: Rational,
    pub f1_at_1: Rational,
    /// f₂(1) for each g₂ with 1 ≤ g₂ ≤ g − 2.
    pub f2_at_1: Vec<(u32, Rational)>,
    pub f3_at_1: Rational,
}

pub fn proof_helpers_34(g: u32) -> Result<ProofHelpers> {
    if g < 2 {
        return Err(HodgeError::InvalidInput("needs g >= 2".into()));
    }
    let gi = g as i64;
    let c = |n: i64, k: i64| big(&binomial(n as u64, k as u64));
    let mut a1 = Rational::zero();
    for k in 0..=(2 * gi - 4) {
        a1 += int(sign(2 * gi - 1 - k)) / int(2 * gi - 1 - k) * c(2 * gi - 1, k) * c(2 * gi - 1 - k, 2);
    }
    let mut f1 = Rational::zero();
    for k in 0..=(2 * gi - 3) {
        f1 += int(sign(2 * gi - 1 - k)) * c(2 * gi - 1, k) * int(2 * gi - 2 - k);
    }
    let f2 = (1..=g.saturating_sub(2))
        .map(|g2| {
            let g2i = g2 as i64;
            let mut v = Rational::zero();
            for k in 0..=(2 * g2i - 1) {
                v += int(sign(2 * g2i - 1 - k)) * int(2 * gi - 2 - k) * c(2 * g2i - 1, k);
            }
            (g2, v)
        })
        .collect();
    let mut f3 = Rational::zero();
    for k in 0..=(2 * gi - 4) {
        f3 += int(sign(2 * gi - 1 - k)) * int(2 * gi - 2 - k) * c(2 * gi - 3, k);
    }
    let h = ProofHelpers { genus: g, a1, f1_at_1: f1, f2_at_1: f2, f3_at_1: f3 };
    let expect_a1 = -(c(2 * gi - 1, 2 * gi - 3) - int(1)) / int(2);
    let half_form = (h.f1_at_1.clone() - c(2 * gi - 1, 2 * gi - 3)) / int(2);
    let f3_expect = if g == 2 { int(-2) } else { int(-1) };
    let f2_ok = h.f2_at_1.iter().all(|(g2, v)| *v == if *g2 == 1 { int(-1) } else { int(0) });
    if h.a1 != expect_a1 || h.a1 != half_form || h.f1_at_1 != int(1) || h.f3_at_1 != f3_expect || !f2_ok {
        return Err(HodgeError::Mismatch(format!("binomial sums for g={g} disagree with the closed values: {h:?}")));
    }
    Ok(h)
}

/// ∫_{M̄_{g,n}} λ_g / Π(1 − μ_i ψ_i) = |μ|^{2g+n−3} b_g, for g ≥ 1.
pub fn lambda_g_linear(g: u32, mu: &Partition) -> Result<Rational> {
    if g == 0 {
        return Err(HodgeError::InvalidInput("λ_g formula needs g >= 1".into()));
    }
    if mu.is_empty() {
        return Err(HodgeError::InvalidInput("μ must be nonempty".into()));
    }
    Ok(ipow(mu.size() as i64, 2 * g as i64 + mu.len() as i64 - 3) * b_g(g))
}

/// Value of ∫ λ_g Π ψ_l^{k_l}, with a flag for dimension violations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LambdaGValue {
    pub value: Rational,
    pub dimension_ok: bool,
}

/// ∫_{M̄_{g,n}} λ_g Π ψ^{k_l} = multinomial(2g+n−3; k) · b_g. Negative
/// exponents and wrong total degree give zero with `dimension_ok = false`.
pub fn lambda_g_conjecture(g: u32, k: &[i64]) -> Result<LambdaGValue> {
    if g == 0 {
        return Err(HodgeError::InvalidInput("λ_g formula needs g >= 1".into()));
    }
    let n = k.len() as i64;
    let total = 2 * g as i64 + n - 3;
    if n == 0 || k.iter().any(|&x| x < 0) || k.iter().sum::<i64>() != total {
        return Ok(LambdaGValue { value: Rational::zero(), dimension_ok: false });
    }
    let mut multinomial = big(&factorial(total as u64));
    for &x in k {
        multinomial /= big(&factorial(x as u64));
    }
    Ok(LambdaGValue { value: multinomial * b_g(g), dimension_ok: true })
}

/// Both sides of (n−1)∫λ_gΠψ^{k_l} = ½ Σ_{i≠j} (k_i+k_j)!/(k_i!k_j!) ∫λ_g ψ^{k_i+k_j−1} Π_{l≠i,j} ψ^{k_l}.
pub fn psi_merge_recursion(g: u32, k: &[i64]) -> Result<(Rational, Rational)> {
    let n = k.len();
    if n < 2 {
        return Err(HodgeError::InvalidInput("needs at least two points".into()));
    }
    let lhs = int(n as i64 - 1) * lambda_g_conjecture(g, k)?.value;
    let mut rhs = Rational::zero();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let (a, b) = (k[i], k[j]);
            let weight = big(&factorial((a + b) as u64)) / big(&factorial(a as u64)) / big(&factorial(b as u64));
            let mut merged: Vec<i64> = vec![a + b - 1];
            merged.extend(k.iter().enumerate().filter(|&(l, _)| l != i && l != j).map(|(_, &x)| x));
            rhs += weight * lambda_g_conjecture(g, &merged)?.value;
        }
    }
    Ok((lhs, rhs / int(2)))
}

/// Both sides of ½ Σ_{i≠j}(k_i + k_j) = (n−1)(2g+n−3) for an exponent vector
/// of the right total degree.
pub fn merge_weight_identity(g: u32, k: &[i64]) -> (Rational, Rational) {
    let n = k.len() as i64;
    let mut lhs = 0i64;
    for i in 0..k.len() {
        for j in 0..k.len() {
            if i != j {
                lhs += k[i] + k[j];
            }
        }
    }
    (rat(lhs, 2), int((n - 1) * (2 * g as i64 + n - 3)))
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_side_small_cases() {
        assert_eq!(theorem32_rhs(3, 1).unwrap(), rat(1, 362880));
        assert_eq!(theorem32_rhs(3, 2).unwrap(), int(0));
        assert!(theorem32_rhs(1, 1).is_err());
        assert!(theorem32_rhs(3, 4).is_err());
    }

    #[test]
    fn genus_three_integrals() {
        let e1 = theorem32_integral(3, 1).unwrap();
        assert_eq!(e1.solved, Some((vec![1, 1, 1], rat(1, 362880))));
        let e2 = theorem32_integral(3, 2).unwrap();
        assert!(e2.reduced.is_zero());
        assert_eq!(e2.solved, Some((vec![2, 0, 1], rat(1, 60480))));
        let e3 = theorem32_integral(3, 3).unwrap();
        assert_eq!(e3.solved, Some((vec![1, 0, 1], rat(41, 1451520))));
    }

    #[test]
    fn lambda_one_lambda_g() {
        assert_eq!(lambda1_lambdag(2).unwrap(), rat(1, 2880));
        assert_eq!(lambda1_lambdag(3).unwrap(), rat(41, 1451520));
    }

    #[test]
    fn helpers_hold() {
        for g in 2..=10 {
            proof_helpers_34(g).unwrap();
        }
    }

    #[test]
    fn lambda_g_values() {
        assert_eq!(lambda_g_linear(1, &"1".parse().unwrap()).unwrap(), rat(1, 24));
        assert_eq!(lambda_g_linear(2, &"2,1".parse().unwrap()).unwrap(), rat(189, 5760));
        let v = lambda_g_conjecture(1, &[0]).unwrap();
        assert_eq!(v, LambdaGValue { value: rat(1, 24), dimension_ok: true });
        assert!(!lambda_g_conjecture(1, &[1]).unwrap().dimension_ok);
        let (l, r) = psi_merge_recursion(2, &[1, 1, 1]).unwrap();
        assert_eq!(l, r);
    }
}
