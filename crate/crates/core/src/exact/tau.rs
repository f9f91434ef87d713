//! Univariate polynomials in the framing parameter τ.

use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use super::gaussian::GaussianRational;
use super::rational::{fraction_string, int, Rational};
use super::ring::{Field, Ring};
use crate::error::{HodgeError, Result};

/// Dense polynomial, lowest degree first, never with trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct TauPolynomial {
    coeffs: Vec<GaussianRational>,
}

impl TauPolynomial {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        TauPolynomial { coeffs }
    }

    pub fn from_rationals(coeffs: impl IntoIterator<Item = Rational>) -> Self {
        Self::new(coeffs.into_iter().map(GaussianRational::real).collect())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `τ`.
    pub fn tau() -> Self {
        Self::from_rationals([int(0), int(1)])
    }

    /// `a·τ + b`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::from_rationals([b, a])
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(GaussianRational::is_real)
    }

    /// Real parts, or `None` if any coefficient has an imaginary part.
    pub fn real_coefficients(&self) -> Option<Vec<Rational>> {
        self.is_real().then(|| self.coeffs.iter().map(|c| c.re.clone()).collect())
    }

    pub fn eval(&self, t: &GaussianRational) -> GaussianRational {
        self.coeffs.iter().rev().fold(GaussianRational::zero(), |acc, c| &(&acc * t) + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scaled(&int(k as i64)))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.times(self))
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| HodgeError::NotInvertible("division by the zero polynomial".into()))?;
        let lead_inv = divisor.coeffs[dd].inverse().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![GaussianRational::zero(); rem.len().saturating_sub(dd)];
        for k in (dd..rem.len()).rev() {
            let q = &rem[k] * &lead_inv;
            if q.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + j] = &rem[k - dd + j] - &(&q * c);
            }
            quot[k - dd] = q;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(HodgeError::InexactDivision(format!(
                "({self}) / ({divisor}) leaves quotient {q} and remainder {r}"
            )))
        }
    }

    /// Coefficients as `[num, den]` string pairs; errors on imaginary parts.
    pub fn fraction_pairs(&self) -> Result<Vec<[String; 2]>> {
        let re = self
            .real_coefficients()
            .ok_or_else(|| HodgeError::ImaginaryResidue(self.to_string()))?;
        Ok(re
            .iter()
            .map(|c| {
                let s = fraction_string(c);
                let (n, d) = s.split_once('/').expect("fraction string");
                [n.to_string(), d.to_string()]
            })
            .collect())
    }
}

impl Add for TauPolynomial {
    type Output = TauPolynomial;
    fn add(self, rhs: TauPolynomial) -> TauPolynomial {
        self.plus(&rhs)
    }
}

impl Mul for TauPolynomial {
    type Output = TauPolynomial;
    fn mul(self, rhs: TauPolynomial) -> TauPolynomial {
        self.times(&rhs)
    }
}

impl Zero for TauPolynomial {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for TauPolynomial {
    fn one() -> Self {
        Self::constant(GaussianRational::one())
    }
}

impl Ring for TauPolynomial {
    fn plus(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
    fn minus(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
    fn times(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Self::new(out)
    }
    fn negated(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }
    fn scaled(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.scaled(c)).collect())
    }
}

impl TauPolynomial {
    pub fn times_scalar(&self, c: &GaussianRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }
}

impl fmt::Display for TauPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{k}")?,
            }
        }
        Ok(())
    }
}

impl From<GaussianRational> for TauPolynomial {
    fn from(c: GaussianRational) -> Self {
        Self::constant(c)
    }
}

impl TauPolynomial {
    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == GaussianRational::real(Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn p(c: &[i64]) -> TauPolynomial {
        TauPolynomial::from_rationals(c.iter().map(|&x| int(x)))
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(TauPolynomial::zero().degree(), None);
        assert_eq!(p(&[1, 0, 0]).degree(), Some(0));
    }

    #[test]
    fn exact_division_round_trips() {
        let a = p(&[1, 2, 1]);
        let b = p(&[1, 1]);
        assert_eq!(a.exact_div(&b).unwrap(), b);
        let err = p(&[1, 0, 1]).exact_div(&b).unwrap_err();
        assert!(matches!(err, HodgeError::InexactDivision(_)));
    }

    #[test]
    fn derivative_and_eval() {
        let a = p(&[5, 0, 3]);
        assert_eq!(a.derivative(), p(&[0, 6]));
        assert_eq!(a.eval(&GaussianRational::real(rat(1, 3))).re, rat(16, 3));
    }
}
