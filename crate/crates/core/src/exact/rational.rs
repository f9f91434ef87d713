//! Arbitrary-precision integers and rationals plus the handful of
//! combinatorial helpers everything else needs.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{HodgeError, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn big(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Binomial coefficient with a possibly negative top argument.
pub fn binomial_signed(n: i64, k: u64) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k as i64 {
        acc = acc * int(n - i) / int(i + 1);
    }
    acc
}

/// H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0.
pub fn harmonic(n: u64) -> Rational {
    (1..=n).fold(Rational::zero(), |acc, k| acc + rat(1, k as i64))
}

/// `base^exp` for any integer exponent; zero to a negative power is an error.
pub fn pow(base: &Rational, exp: i64) -> Result<Rational> {
    if exp < 0 && base.is_zero() {
        return Err(HodgeError::InvalidInput("zero raised to a negative power".into()));
    }
    Ok(num_traits::pow::Pow::pow(base, exp as i32))
}

/// Integer power of an integer-valued rational, negative exponents allowed.
pub fn ipow(base: i64, exp: i64) -> Rational {
    if exp >= 0 {
        big(&num_traits::pow(BigInt::from(base), exp as usize))
    } else {
        Rational::new(BigInt::one(), num_traits::pow(BigInt::from(base), (-exp) as usize))
    }
}

pub fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Always `num/den`, even for integers, so consumers can split on `/`.
pub fn fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `7`, `-3/4` or `6/8` (reduced on the way in).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || HodgeError::InvalidInput(format!("not a rational number: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Rational::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
    }
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

pub fn lcm_of_denominators<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_match_pascal() {
        for n in 0..20u64 {
            for k in 1..n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial_signed(-1, 3), int(-1));
    }

    #[test]
    fn harmonic_small() {
        assert_eq!(harmonic(0), int(0));
        assert_eq!(harmonic(3), rat(11, 6));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0/1", "-3/4", "5/1", "41/1451520"] {
            assert_eq!(fraction_string(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational("6/8").unwrap(), rat(3, 4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn negative_powers() {
        assert_eq!(ipow(2, -3), rat(1, 8));
        assert_eq!(pow(&rat(2, 3), -2).unwrap(), rat(9, 4));
        assert!(pow(&int(0), -1).is_err());
    }
}
