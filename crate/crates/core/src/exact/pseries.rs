//! Formal series in the power sums p_1, p_2, ... truncated by total degree.
//!
//! A monomial p_μ = Π p_{μ_i} is keyed by the partition μ, so multiplying two
//! monomials is multiset union of their keys.

use std::collections::BTreeMap;

use super::rational::{int, Rational};
use super::ring::Ring;
use crate::error::{HodgeError, Result};
use crate::partition::{partitions_up_to, Partition};

#[derive(Clone, PartialEq, Debug)]
pub struct PSeries<C> {
    terms: BTreeMap<Partition, C>,
    d_max: u32,
}

impl<C: Ring> PSeries<C> {
    pub fn new(d_max: u32) -> Self {
        PSeries { terms: BTreeMap::new(), d_max }
    }

    pub fn constant(c: C, d_max: u32) -> Self {
        let mut s = Self::new(d_max);
        s.insert(Partition::empty(), c);
        s
    }

    pub fn d_max(&self) -> u32 {
        self.d_max
    }

    /// Sets the coefficient of p_μ; terms above `d_max` and exact zeros are dropped.
    pub fn insert(&mut self, mu: Partition, c: C) {
        if mu.size() > self.d_max || c.is_zero() {
            self.terms.remove(&mu);
        } else {
            self.terms.insert(mu, c);
        }
    }

    pub fn get(&self, mu: &Partition) -> Option<&C> {
        self.terms.get(mu)
    }

    pub fn coeff(&self, mu: &Partition) -> C {
        self.terms.get(mu).cloned().unwrap_or_else(C::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn plus(&self, rhs: &Self) -> Self {
        let mut out = Self::new(self.d_max.min(rhs.d_max));
        for (mu, c) in self.terms.iter().chain(rhs.terms.iter()) {
            let cur = out.coeff(mu);
            out.insert(mu.clone(), cur.plus(c));
        }
        out
    }

    pub fn times(&self, rhs: &Self) -> Self {
        let d_max = self.d_max.min(rhs.d_max);
        let mut out = Self::new(d_max);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                if a.size() + b.size() > d_max {
                    continue;
                }
                let key = a.union(b);
                let cur = out.coeff(&key);
                out.insert(key, cur.plus(&x.times(y)));
            }
        }
        out
    }

    /// exp(x) for a series with no constant term.
    ///
    /// Uses the Euler-operator identity E(exp x) = E(x)·exp(x), where E
    /// multiplies the p_μ coefficient by |μ|; this needs only products of
    /// coefficients rather than powers of the whole series.
    pub fn exp(&self) -> Result<Self> {
        if self.terms.contains_key(&Partition::empty()) {
            return Err(HodgeError::InvalidInput("exp needs a series without constant term".into()));
        }
        let mut out = Self::constant(C::one(), self.d_max);
        for mu in partitions_up_to(self.d_max) {
            let mut acc = C::zero();
            for (rho, rest) in mu.sub_multisets() {
                if rho.is_empty() {
                    continue;
                }
                if let (Some(x), Some(d)) = (self.terms.get(&rho), out.terms.get(&rest)) {
                    acc = acc.plus(&x.times(d).scaled(&int(rho.size() as i64)));
                }
            }
            out.insert(mu.clone(), acc.scaled(&Rational::new(1.into(), mu.size().into())));
        }
        Ok(out)
    }

    /// log(x) for a series with constant term exactly one.
    pub fn log(&self) -> Result<Self> {
        if self.terms.get(&Partition::empty()) != Some(&C::one()) {
            return Err(HodgeError::InvalidInput("log needs a series with constant term 1".into()));
        }
        let mut out = Self::new(self.d_max);
        for mu in partitions_up_to(self.d_max) {
            let mut acc = C::zero();
            for (rho, rest) in mu.sub_multisets() {
                if rho.is_empty() || rest.is_empty() {
                    continue;
                }
                if let (Some(c), Some(d)) = (out.terms.get(&rho), self.terms.get(&rest)) {
                    acc = acc.plus(&c.times(d).scaled(&int(rho.size() as i64)));
                }
            }
            let own = self.coeff(&mu);
            let value = own.minus(&acc.scaled(&Rational::new(1.into(), mu.size().into())));
            out.insert(mu, value);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn key(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn product_unions_keys() {
        let mut a = PSeries::<Rational>::new(4);
        a.insert(key("1"), int(2));
        let mut b = PSeries::<Rational>::new(4);
        b.insert(key("2,1"), int(3));
        let p = a.times(&b);
        assert_eq!(p.coeff(&key("2,1,1")), int(6));
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn exp_of_single_power_sum() {
        let mut x = PSeries::<Rational>::new(4);
        x.insert(key("1"), int(1));
        let e = x.exp().unwrap();
        assert_eq!(e.coeff(&key("1,1,1")), rat(1, 6));
        assert_eq!(e.coeff(&key("1,1,1,1")), rat(1, 24));
        assert_eq!(e.coeff(&key("2")), int(0));
        assert_eq!(e.log().unwrap(), x);
    }

    #[test]
    fn preconditions() {
        let one = PSeries::constant(int(1), 3);
        assert!(one.exp().is_err());
        assert!(PSeries::<Rational>::new(3).log().is_err());
        assert!(one.log().unwrap().is_empty());
    }
}
