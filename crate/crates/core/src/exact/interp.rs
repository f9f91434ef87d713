//! Exact interpolation: univariate Newton form and symmetric polynomials in
//! the monomial symmetric basis.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::rational::{int, Rational};
use super::ring::{Field, Ring};
use crate::error::{HodgeError, Result};
use crate::partition::{enumerate_partitions, Partition};

/// Coefficients (lowest degree first) of the unique polynomial of degree
/// `< points.len()` through `(points[k], values[k])`.
pub fn interpolate<F: Field>(points: &[Rational], values: &[F]) -> Result<Vec<F>> {
    if points.len() != values.len() {
        return Err(HodgeError::InvalidInput("points and values differ in length".into()));
    }
    let n = points.len();
    let mut dd: Vec<F> = values.to_vec();
    for level in 1..n {
        for k in (level..n).rev() {
            let gap = &points[k] - &points[k - level];
            let inv = gap
                .inverse()
                .ok_or_else(|| HodgeError::InvalidInput("repeated interpolation point".into()))?;
            dd[k] = dd[k].minus(&dd[k - 1]).scaled(&inv);
        }
    }
    // Expand the Newton form from the innermost bracket outward.
    let mut poly: Vec<F> = Vec::new();
    for k in (0..n).rev() {
        let mut next = vec![F::zero(); poly.len() + 1];
        for (j, c) in poly.iter().enumerate() {
            next[j + 1] = next[j + 1].plus(c);
            next[j] = next[j].minus(&c.scaled(&points[k]));
        }
        next[0] = next[0].plus(&dd[k]);
        poly = next;
    }
    while poly.last().is_some_and(Zero::is_zero) {
        poly.pop();
    }
    Ok(poly)
}

pub fn eval_poly<F: Ring>(coeffs: &[F], x: &Rational) -> F {
    coeffs.iter().rev().fold(F::zero(), |acc, c| acc.scaled(x).plus(c))
}

/// Solves `A x = b` exactly. Errors if the system is inconsistent or does
/// not determine `x` uniquely.
pub fn solve_linear(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Result<Vec<Rational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..cols {
        let Some(p) = (pivot_row..rows).find(|&r| !a[r][col].is_zero()) else {
            return Err(HodgeError::Interpolation(format!("unknown {col} is not determined by the samples")));
        };
        a.swap(pivot_row, p);
        b.swap(pivot_row, p);
        let inv = int(1) / &a[pivot_row][col];
        for c in col..cols {
            a[pivot_row][c] = &a[pivot_row][c] * &inv;
        }
        b[pivot_row] = &b[pivot_row] * &inv;
        for r in 0..rows {
            if r == pivot_row || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in col..cols {
                let t = &f * &a[pivot_row][c];
                a[r][c] -= t;
            }
            let t = &f * &b[pivot_row];
            b[r] -= t;
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if let Some(r) = (pivot_row..rows).find(|&r| !b[r].is_zero()) {
        return Err(HodgeError::Interpolation(format!(
            "sample {r} is inconsistent with a polynomial of the assumed shape"
        )));
    }
    Ok(b.into_iter().take(cols).collect())
}

/// A symmetric polynomial in `nvars` variables written as Σ c_λ m_λ, where
/// m_λ is the monomial symmetric function of the exponent partition λ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymmetricPolynomial {
    nvars: usize,
    coeffs: BTreeMap<Partition, Rational>,
}

impl SymmetricPolynomial {
    pub fn new(nvars: usize) -> Self {
        SymmetricPolynomial { nvars, coeffs: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Rational> {
        &self.coeffs
    }

    pub fn coeff(&self, exponents: &Partition) -> Rational {
        self.coeffs.get(exponents).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, exponents: Partition, c: Rational) {
        if c.is_zero() {
            self.coeffs.remove(&exponents);
        } else {
            self.coeffs.insert(exponents, c);
        }
    }

    /// Evaluates at a point with exactly `nvars` coordinates.
    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.coeffs
            .iter()
            .map(|(lam, c)| c * monomial_symmetric(lam, x))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Keeps only the terms of total degree `deg`.
    pub fn homogeneous_part(&self, deg: u32) -> Self {
        SymmetricPolynomial {
            nvars: self.nvars,
            coeffs: self.coeffs.iter().filter(|(l, _)| l.size() == deg).map(|(l, c)| (l.clone(), c.clone())).collect(),
        }
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(Partition::size).max()
    }

    /// Fits Σ c_λ m_λ over every exponent partition λ with at most `nvars`
    /// parts and size at most `max_degree`. All samples are used; extra ones
    /// act as consistency checks.
    pub fn interpolate(nvars: usize, max_degree: u32, samples: &[(Vec<Rational>, Rational)]) -> Result<Self> {
        let basis: Vec<Partition> = (0..=max_degree)
            .flat_map(enumerate_partitions)
            .filter(|l| l.len() <= nvars)
            .collect();
        if samples.len() < basis.len() {
            return Err(HodgeError::Interpolation(format!(
                "{} samples cannot determine {} unknowns",
                samples.len(),
                basis.len()
            )));
        }
        let a = samples
            .iter()
            .map(|(x, _)| basis.iter().map(|l| monomial_symmetric(l, x)).collect())
            .collect();
        let b = samples.iter().map(|(_, v)| v.clone()).collect();
        let sol = solve_linear(a, b)?;
        let mut out = SymmetricPolynomial::new(nvars);
        for (l, c) in basis.into_iter().zip(sol) {
            out.set(l, c);
        }
        Ok(out)
    }
}

/// m_λ(x): sum over distinct rearrangements of the exponent vector λ padded
/// with zeros to `x.len()` entries.
pub fn monomial_symmetric(lam: &Partition, x: &[Rational]) -> Rational {
    let n = x.len();
    if lam.len() > n {
        return Rational::zero();
    }
    let mut exps: Vec<u32> = lam.parts().to_vec();
    exps.resize(n, 0);
    exps.sort_unstable();
    let mut total = Rational::zero();
    loop {
        let term = exps
            .iter()
            .zip(x)
            .fold(int(1), |acc, (&e, xi)| acc * num_traits::pow(xi.clone(), e as usize));
        total += term;
        if !next_permutation(&mut exps) {
            return total;
        }
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("successor exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
