//! Polynomials in the Hodge classes λ_1..λ_g modulo Mumford's relation
//! λ_k² = Σ_{i=1}^{k} (−1)^{i+1} 2 λ_{k−i} λ_{k+i}, and the Chern character
//! of the Hodge bundle written in λ's.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::exact::rational::{factorial, int, Rational};

/// Exponents of λ_1..λ_g; index `k − 1` holds the power of λ_k.
pub type LambdaExponents = Vec<u32>;

/// A λ-monomial together with ψ-exponents, describing an integrand on M̄_{g,n}.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LambdaMonomial {
    pub genus: u32,
    pub lambda: LambdaExponents,
    pub psi: Vec<u32>,
}

impl LambdaMonomial {
    pub fn new(genus: u32, lambda: LambdaExponents, psi: Vec<u32>) -> Self {
        LambdaMonomial { genus, lambda, psi }
    }

    pub fn lambda_degree(&self) -> u32 {
        lambda_degree(&self.lambda)
    }

    /// Complex degree of the integrand.
    pub fn degree(&self) -> u32 {
        self.lambda_degree() + self.psi.iter().sum::<u32>()
    }

    /// dim M̄_{g,n} = 3g − 3 + n.
    pub fn dimension(&self) -> i64 {
        3 * self.genus as i64 - 3 + self.psi.len() as i64
    }

    pub fn dimension_ok(&self) -> bool {
        self.degree() as i64 == self.dimension()
    }
}

pub fn lambda_degree(e: &[u32]) -> u32 {
    e.iter().enumerate().map(|(i, &x)| (i as u32 + 1) * x).sum()
}

/// Rational linear combination of λ-monomials in genus g.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LambdaPolynomial {
    genus: u32,
    terms: BTreeMap<LambdaExponents, Rational>,
}

impl LambdaPolynomial {
    pub fn zero(genus: u32) -> Self {
        LambdaPolynomial { genus, terms: BTreeMap::new() }
    }

    pub fn constant(genus: u32, c: Rational) -> Self {
        let mut p = Self::zero(genus);
        p.add_term(vec![0; genus as usize], c);
        p
    }

    /// λ_k, with λ_0 = 1 and λ_k = 0 beyond the genus.
    pub fn lambda(genus: u32, k: u32) -> Self {
        if k == 0 {
            return Self::constant(genus, Rational::one());
        }
        let mut p = Self::zero(genus);
        if k <= genus {
            let mut e = vec![0; genus as usize];
            e[k as usize - 1] = 1;
            p.add_term(e, Rational::one());
        }
        p
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn terms(&self) -> &BTreeMap<LambdaExponents, Rational> {
        &self.terms
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if this is a pure constant (or zero).
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().expect("one term");
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn add_term(&mut self, e: LambdaExponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.scaled(&int(-1)))
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.genus);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    pub fn times(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.genus);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let e = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }
}

impl fmt::Display for LambdaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => write!(f, "*l{}", i + 1)?,
                    _ => write!(f, "*l{}^{x}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

/// A λ-polynomial with no reducible square left.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MumfordNormalForm(LambdaPolynomial);

impl MumfordNormalForm {
    pub fn polynomial(&self) -> &LambdaPolynomial {
        &self.0
    }

    pub fn into_polynomial(self) -> LambdaPolynomial {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `Some((c, e))` when the form is the single term c·λ^e.
    pub fn single_term(&self) -> Option<(Rational, LambdaExponents)> {
        (self.0.terms.len() == 1).then(|| {
            let (e, c) = self.0.terms.iter().next().expect("one term");
            (c.clone(), e.clone())
        })
    }
}

impl fmt::Display for MumfordNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Rewrites squares, highest index first, until every exponent is 0 or 1.
///
/// Each rewrite replaces λ_k² by products λ_{k−i}λ_{k+i} with strictly
/// separated indices, which is a decreasing step in graded reverse
/// lexicographic order, so the loop terminates and the result is unique.
pub fn mumford_reduce(p: &LambdaPolynomial) -> MumfordNormalForm {
    let g = p.genus;
    let mut pending = p.terms.clone();
    let mut done = LambdaPolynomial::zero(g);
    while let Some((e, c)) = pending.pop_last() {
        let Some(k) = (0..e.len()).rev().find(|&i| e[i] >= 2).map(|i| i as u32 + 1) else {
            done.add_term(e, c);
            continue;
        };
        let mut base = e.clone();
        base[k as usize - 1] -= 2;
        for i in 1..=k {
            if k + i > g {
                break;
            }
            let mut t = base.clone();
            if k - i > 0 {
                t[(k - i) as usize - 1] += 1;
            }
            t[(k + i) as usize - 1] += 1;
            let coef = if i % 2 == 1 { int(2) } else { int(-2) };
            let slot = pending.entry(t.clone()).or_insert_with(Rational::zero);
            *slot += &c * coef;
            if slot.is_zero() {
                pending.remove(&t);
            }
        }
    }
    MumfordNormalForm(done)
}

/// n!·ch_n as the quadratic expression Σ_{i+j=n} (−1)^{i−1} i λ_i λ_j, unreduced.
pub fn ch_scaled_quadratic(n: u32, g: u32) -> LambdaPolynomial {
    let mut acc = LambdaPolynomial::zero(g);
    for i in 1..=n {
        let j = n - i;
        let s = if (i - 1) % 2 == 0 { int(i as i64) } else { int(-(i as i64)) };
        let term = LambdaPolynomial::lambda(g, i).times(&LambdaPolynomial::lambda(g, j)).scaled(&s);
        acc = acc.plus(&term);
    }
    acc
}

/// ch_k(𝔼) in normal form: g for k = 0, zero for k ≥ 2g, otherwise the
/// quadratic expression divided by k!.
pub fn ch_to_lambda(k: u32, g: u32) -> MumfordNormalForm {
    if k == 0 {
        return MumfordNormalForm(LambdaPolynomial::constant(g, int(g as i64)));
    }
    if k >= 2 * g {
        return MumfordNormalForm(LambdaPolynomial::zero(g));
    }
    let inv = Rational::new(One::one(), factorial(k as u64));
    mumford_reduce(&ch_scaled_quadratic(k, g).scaled(&inv))
}

/// ch_k from Newton's identities on the Chern roots, reduced; an oracle for
/// [`ch_to_lambda`] that never uses the quadratic formula.
pub fn ch_newton(k: u32, g: u32) -> MumfordNormalForm {
    if k == 0 {
        return MumfordNormalForm(LambdaPolynomial::constant(g, int(g as i64)));
    }
    let e = |i: u32| LambdaPolynomial::lambda(g, i);
    let mut p: Vec<LambdaPolynomial> = vec![LambdaPolynomial::zero(g)];
    for n in 1..=k {
        let mut acc = e(n).scaled(&int(if (n - 1) % 2 == 0 { n as i64 } else { -(n as i64) }));
        for i in 1..n {
            let s = if (i - 1) % 2 == 0 { int(1) } else { int(-1) };
            acc = acc.plus(&e(i).times(&p[(n - i) as usize]).scaled(&s));
        }
        p.push(mumford_reduce(&acc).into_polynomial());
    }
    mumford_reduce(&p[k as usize].scaled(&Rational::new(One::one(), factorial(k as u64))))
}

/// Coefficients of Λ∨_g(t)Λ∨_g(−t), t^0 first, each reduced. Mumford's
/// relation says this is (−1)^g t^{2g}.
pub fn dual_chern_product(g: u32) -> Vec<MumfordNormalForm> {
    // Λ∨_g(t) = Σ_i (−1)^i λ_i t^{g−i}
    let coeff = |sign_t: i64, power: u32| -> LambdaPolynomial {
        let i = g - power;
        let mut s = if i % 2 == 0 { 1 } else { -1 };
        if sign_t < 0 && power % 2 == 1 {
            s = -s;
        }
        LambdaPolynomial::lambda(g, i).scaled(&int(s))
    };
    (0..=2 * g)
        .map(|deg| {
            let mut acc = LambdaPolynomial::zero(g);
            for a in 0..=g.min(deg) {
                let b = deg - a;
                if b > g {
                    continue;
                }
                acc = acc.plus(&coeff(1, a).times(&coeff(-1, b)));
            }
            mumford_reduce(&acc)
        })
        .collect()
}

/// −(2g−2−m)! (−1)^{2g−3−m} λ_g ch_{2g−2−m}, unreduced.
pub fn theorem32_class(g: u32, m: u32) -> LambdaPolynomial {
    let k = 2 * g - 2 - m;
    let sign = if (2 * g as i64 - 3 - m as i64).rem_euclid(2) == 0 { -1 } else { 1 };
    let lg = LambdaPolynomial::lambda(g, g);
    if k == 0 {
        return lg.scaled(&int(sign * g as i64));
    }
    lg.times(&ch_scaled_quadratic(k, g)).scaled(&int(sign))
}

/// Renders a λ-exponent vector as e.g. `l1*l3^2`.
pub fn exponents_label(e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .map(|(i, &x)| if x == 1 { format!("l{}", i + 1) } else { format!("l{}^{x}", i + 1) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{big, rat};

    fn lam(g: u32, k: u32) -> LambdaPolynomial {
        LambdaPolynomial::lambda(g, k)
    }

    #[test]
    fn lambda_one_squared() {
        let r = mumford_reduce(&lam(3, 1).times(&lam(3, 1)));
        assert_eq!(r.polynomial(), &lam(3, 2).scaled(&int(2)));
        let top = mumford_reduce(&lam(2, 2).times(&lam(2, 2)));
        assert!(top.is_zero());
    }

    #[test]
    fn reduction_is_idempotent() {
        let x = lam(4, 1).times(&lam(4, 1)).times(&lam(4, 2)).plus(&lam(4, 2).times(&lam(4, 2)));
        let once = mumford_reduce(&x);
        assert_eq!(mumford_reduce(once.polynomial()), once);
    }

    #[test]
    fn mumford_product_identity() {
        for g in 1..=5 {
            let coeffs = dual_chern_product(g);
            for (k, c) in coeffs.iter().enumerate() {
                let expect = if k as u32 == 2 * g { int(if g % 2 == 0 { 1 } else { -1 }) } else { int(0) };
                assert_eq!(c.polynomial().constant_value(), Some(expect), "g={g} t^{k}");
            }
        }
    }

    #[test]
    fn chern_character_forms_agree() {
        for g in 1..=5 {
            for k in 0..=2 * g + 1 {
                assert_eq!(ch_to_lambda(k, g), ch_newton(k, g), "g={g} k={k}");
            }
        }
    }

    #[test]
    fn top_chern_character() {
        for g in 2..=5u32 {
            let lhs = mumford_reduce(&ch_to_lambda(2 * g - 1, g).polynomial().scaled(&big(&factorial(2 * g as u64 - 1))));
            let s = if (g - 1) % 2 == 0 { 1 } else { -1 };
            let rhs = mumford_reduce(&lam(g, g - 1).times(&lam(g, g)).scaled(&int(s)));
            assert_eq!(lhs, rhs);
        }
        assert_eq!(ch_to_lambda(1, 3).polynomial(), &lam(3, 1));
        assert!(ch_to_lambda(6, 3).is_zero());
        assert_eq!(ch_to_lambda(0, 2).polynomial().constant_value(), Some(rat(2, 1)));
    }
}
