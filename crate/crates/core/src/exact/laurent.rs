//! Truncated Laurent series in λ with explicit precision tracking.
//!
//! A series is either exact (finitely many terms, known completely) or known
//! through some `max_order`, meaning every coefficient of `λ^k` with
//! `k <= max_order` is correct and nothing is claimed beyond that. The
//! precision of a product is computed from both operands' valuations, so a
//! factor with a pole never silently contaminates the top coefficients.

use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use super::rational::{int, Rational};
use super::ring::{Field, Ring};
use crate::error::{HodgeError, Result};

#[derive(Clone, PartialEq, Debug)]
pub struct LaurentSeries<C> {
    /// Exponent of `coeffs[0]`; equal to the valuation whenever `coeffs` is non-empty.
    min_order: i64,
    coeffs: Vec<C>,
    max_order: Option<i64>,
}

impl<C: Ring> LaurentSeries<C> {
    /// Builds a series from `coeffs[j]` = coefficient of `λ^(min_order + j)`.
    /// Terms above `max_order` are discarded.
    pub fn new(min_order: i64, coeffs: Vec<C>, max_order: Option<i64>) -> Self {
        let mut s = LaurentSeries { min_order, coeffs, max_order };
        s.normalize();
        s
    }

    pub fn exact(min_order: i64, coeffs: Vec<C>) -> Self {
        Self::new(min_order, coeffs, None)
    }

    pub fn monomial(order: i64, c: C) -> Self {
        Self::exact(order, vec![c])
    }

    /// `O(λ^(max_order + 1))`.
    pub fn truncated_zero(max_order: i64) -> Self {
        Self::new(0, Vec::new(), Some(max_order))
    }

    fn normalize(&mut self) {
        if let Some(m) = self.max_order {
            let keep = (m - self.min_order + 1).max(0) as usize;
            self.coeffs.truncate(keep);
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_order += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.min_order = 0;
        }
    }

    pub fn is_exact(&self) -> bool {
        self.max_order.is_none()
    }

    pub fn max_order(&self) -> Option<i64> {
        self.max_order
    }

    /// Exponent of the first nonzero coefficient, if any is known.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.min_order)
    }

    /// Lower bound on the true valuation: the valuation when a nonzero term is
    /// known, otherwise one past the precision. `None` only for exact zero.
    fn order_bound(&self) -> Option<i64> {
        self.valuation().or(self.max_order.map(|m| m + 1))
    }

    /// Exponent of the highest stored nonzero term.
    pub fn top_order(&self) -> Option<i64> {
        self.valuation().map(|v| v + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of `λ^k`, or `None` when `k` lies beyond the known precision.
    pub fn coeff(&self, k: i64) -> Option<C> {
        if self.max_order.is_some_and(|m| k > m) {
            return None;
        }
        let j = k - self.min_order;
        if j < 0 || j as usize >= self.coeffs.len() {
            Some(C::zero())
        } else {
            Some(self.coeffs[j as usize].clone())
        }
    }

    /// Like [`coeff`](Self::coeff) but reports a shortfall as an error.
    pub fn require_coeff(&self, k: i64) -> Result<C> {
        self.coeff(k).ok_or(HodgeError::TruncationShortfall {
            needed: k,
            achieved: self.max_order.unwrap_or(i64::MAX),
        })
    }

    /// Stored terms as `(exponent, coefficient)`, nonzero only.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(j, c)| (self.min_order + j as i64, c))
    }

    pub fn truncate(&self, max_order: i64) -> Self {
        let m = self.max_order.map_or(max_order, |old| old.min(max_order));
        Self::new(self.min_order, self.coeffs.clone(), Some(m))
    }

    /// Multiplies by `λ^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries {
            min_order: if self.coeffs.is_empty() { 0 } else { self.min_order + k },
            coeffs: self.coeffs.clone(),
            max_order: self.max_order.map(|m| m + k),
        }
    }

    /// Substitutes `λ -> c·λ` for a nonzero rational `c`.
    pub fn rescale_variable(&self, c: &Rational) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, x)| {
                let k = self.min_order + j as i64;
                x.scaled(&super::rational::pow(c, k).expect("nonzero rescaling"))
            })
            .collect();
        Self::new(self.min_order, coeffs, self.max_order)
    }

    /// Applies a ring map coefficientwise, keeping the precision.
    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> LaurentSeries<D> {
        LaurentSeries::new(self.min_order, self.coeffs.iter().map(f).collect(), self.max_order)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.times(self))
    }

    fn combine(&self, rhs: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        let max_order = match (self.max_order, rhs.max_order) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let lo = match (self.valuation(), rhs.valuation()) {
            (Some(a), Some(b)) => a.min(b),
            (a, b) => match a.or(b) {
                Some(v) => v,
                None => return LaurentSeries::new(0, Vec::new(), max_order),
            },
        };
        let hi = [self.top_order(), rhs.top_order()].into_iter().flatten().max().unwrap_or(lo);
        let hi = max_order.map_or(hi, |m| hi.min(m));
        let zero = C::zero();
        let coeffs = (lo..=hi)
            .map(|k| {
                let a = self.stored(k).unwrap_or(&zero);
                let b = rhs.stored(k).unwrap_or(&zero);
                f(a, b)
            })
            .collect();
        Self::new(lo, coeffs, max_order)
    }

    fn stored(&self, k: i64) -> Option<&C> {
        let j = k - self.min_order;
        if j < 0 {
            None
        } else {
            self.coeffs.get(j as usize)
        }
    }
}

impl<C: Field> LaurentSeries<C> {
    /// Multiplicative inverse.
    ///
    /// A truncated input with valuation `v` and precision `m` yields a result
    /// with valuation `-v` known through `m - 2v`. An exact input must be a
    /// single monomial; anything else has infinitely many terms, so use
    /// [`inverse_to`](Self::inverse_to).
    pub fn inverse(&self) -> Result<Self> {
        let v = self
            .valuation()
            .ok_or_else(|| HodgeError::NotInvertible("series has no known nonzero term".into()))?;
        match self.max_order {
            None if self.coeffs.len() == 1 => {
                let c = self.coeffs[0].inverse().expect("nonzero leading coefficient");
                Ok(Self::monomial(-v, c))
            }
            None => Err(HodgeError::NotInvertible(
                "inverse of an exact multi-term series needs a truncation order".into(),
            )),
            Some(m) => Ok(self.inverse_series(m - 2 * v)),
        }
    }

    /// Inverse known through `λ^max_order`, clamped to what the input supports.
    pub fn inverse_to(&self, max_order: i64) -> Result<Self> {
        let v = self
            .valuation()
            .ok_or_else(|| HodgeError::NotInvertible("series has no known nonzero term".into()))?;
        let m = self.max_order.map_or(max_order, |m| (m - 2 * v).min(max_order));
        Ok(self.inverse_series(m))
    }

    fn inverse_series(&self, max_order: i64) -> Self {
        let v = self.min_order;
        let n = (max_order + v + 1).max(0) as usize;
        let a0_inv = self.coeffs[0].inverse().expect("nonzero leading coefficient");
        let mut out: Vec<C> = Vec::with_capacity(n);
        for k in 0..n {
            if k == 0 {
                out.push(a0_inv.clone());
                continue;
            }
            let mut acc = C::zero();
            for j in 1..=k.min(self.coeffs.len() - 1) {
                acc = acc.plus(&self.coeffs[j].times(&out[k - j]));
            }
            out.push(acc.times(&a0_inv).negated());
        }
        Self::new(-v, out, Some(max_order))
    }
}

impl<C: Ring> Add for LaurentSeries<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.plus(&rhs)
    }
}

impl<C: Ring> Mul for LaurentSeries<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.times(&rhs)
    }
}

impl<C: Ring> Zero for LaurentSeries<C> {
    fn zero() -> Self {
        LaurentSeries { min_order: 0, coeffs: Vec::new(), max_order: None }
    }

    /// Exact zero only; a truncated zero is not the additive identity.
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty() && self.max_order.is_none()
    }
}

impl<C: Ring> One for LaurentSeries<C> {
    fn one() -> Self {
        Self::monomial(0, C::one())
    }
}

impl<C: Ring> Ring for LaurentSeries<C> {

    fn plus(&self, rhs: &Self) -> Self {
        self.combine(rhs, |a, b| a.plus(b))
    }

    fn minus(&self, rhs: &Self) -> Self {
        self.combine(rhs, |a, b| a.minus(b))
    }

    fn times(&self, rhs: &Self) -> Self {
        let (Some(va), Some(vb)) = (self.order_bound(), rhs.order_bound()) else {
            return Self::zero();
        };
        let max_order = match (self.max_order, rhs.max_order) {
            (Some(a), Some(b)) => Some((a + vb).min(b + va)),
            (Some(a), None) => Some(a + vb),
            (None, Some(b)) => Some(b + va),
            (None, None) => None,
        };
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::new(0, Vec::new(), max_order);
        }
        let limit = max_order.map_or(usize::MAX, |m| (m - va - vb + 1).max(0) as usize);
        let len = (self.coeffs.len() + rhs.coeffs.len() - 1).min(limit);
        let mut out = vec![C::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    out[i + j] = out[i + j].plus(&a.times(b));
                }
            }
        }
        Self::new(va + vb, out, max_order)
    }

    fn negated(&self) -> Self {
        Self::new(self.min_order, self.coeffs.iter().map(Ring::negated).collect(), self.max_order)
    }

    fn scaled(&self, c: &Rational) -> Self {
        Self::new(self.min_order, self.coeffs.iter().map(|x| x.scaled(c)).collect(), self.max_order)
    }
}

impl<C: Ring + fmt::Display> fmt::Display for LaurentSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})L^{k}")?;
        }
        match (first, self.max_order) {
            (true, None) => write!(f, "0"),
            (true, Some(m)) => write!(f, "O(L^{})", m + 1),
            (false, Some(m)) => write!(f, " + O(L^{})", m + 1),
            (false, None) => Ok(()),
        }
    }
}

/// Taylor series of `sin(a·λ)` through `λ^max_order`.
pub fn sine_series(a: &Rational, max_order: i64) -> LaurentSeries<Rational> {
    let mut coeffs = Vec::new();
    let mut term = a.clone();
    for k in 0..=max_order.max(0) {
        if k == 0 {
            coeffs.push(int(0));
            continue;
        }
        if k % 2 == 1 {
            coeffs.push(term.clone());
            term = -term * a * a / int((k + 1) * (k + 2));
        } else {
            coeffs.push(int(0));
        }
    }
    LaurentSeries::new(0, coeffs, Some(max_order))
}
