//! Integer partitions and the statistics the Hodge machinery needs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{HodgeError, Result};
use crate::exact::rational::{factorial, harmonic, Rational};

/// A multiset of positive integers, stored in non-increasing order.
///
/// Ordering is lexicographic on the parts, so sorting a list of partitions of
/// the same size in reverse gives reverse-lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts; rejects zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(HodgeError::InvalidInput("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn single(k: u32) -> Self {
        Partition { parts: vec![k] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |μ|, the sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// l(μ), the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn multiplicity(&self, k: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == k).count() as u32
    }

    /// Part value -> number of occurrences.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Σ μ_i (μ_i − 2i + 1) with 1-based i; equals 2·(content sum).
    pub fn kappa(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                let p = p as i64;
                p * (p - 2 * (i as i64 + 1) + 1)
            })
            .sum()
    }

    /// Order of the centralizer of a permutation of cycle type μ: Π m_j! j^{m_j}.
    pub fn z_factor(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .fold(BigInt::one(), |acc, (j, m)| acc * factorial(m as u64) * BigInt::from(j).pow(m))
    }

    /// |Aut μ| = Π m_j!.
    pub fn aut_order(&self) -> BigInt {
        self.multiplicities()
            .into_values()
            .fold(BigInt::one(), |acc, m| acc * factorial(m as u64))
    }

    pub fn conjugate(&self) -> Partition {
        let n = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=n).map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32).collect();
        Partition { parts }
    }

    /// Hook lengths of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                hooks.push(row - j as u32 + conj.parts[j] - i as u32 - 1);
            }
        }
        hooks
    }

    /// Σ_i Σ_{a=1}^{μ_i−1} μ_i / a, the harmonic weight that shows up when
    /// extracting the second τ coefficient.
    pub fn harmonic_weight(&self) -> Rational {
        self.parts
            .iter()
            .map(|&p| harmonic(p as u64 - 1) * BigInt::from(p))
            .fold(Rational::default(), |a, b| a + b)
    }

    /// Multiset union.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn with_part(&self, k: u32) -> Partition {
        self.union(&Partition::single(k))
    }

    /// Removes one copy of `k`, if present.
    pub fn without_part(&self, k: u32) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == k)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }

    /// Removes the entries at two distinct indices.
    pub fn without_indices(&self, i: usize, j: usize) -> Partition {
        let parts = self
            .parts
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i && k != j)
            .map(|(_, &p)| p)
            .collect();
        Partition { parts }
    }

    /// Every distinct sub-multiset ρ ⊆ μ paired with μ∖ρ, including ∅ and μ.
    pub fn sub_multisets(&self) -> Vec<(Partition, Partition)> {
        let mult: Vec<(u32, u32)> = self.multiplicities().into_iter().collect();
        let mut out = Vec::new();
        let mut take = vec![0u32; mult.len()];
        loop {
            let mut sub = Vec::new();
            let mut rest = Vec::new();
            for (&(v, m), &t) in mult.iter().zip(&take) {
                sub.extend(std::iter::repeat(v).take(t as usize));
                rest.extend(std::iter::repeat(v).take((m - t) as usize));
            }
            sub.sort_unstable_by(|a, b| b.cmp(a));
            rest.sort_unstable_by(|a, b| b.cmp(a));
            out.push((Partition { parts: sub }, Partition { parts: rest }));
            let mut i = 0;
            loop {
                if i == mult.len() {
                    return out;
                }
                if take[i] < mult[i].1 {
                    take[i] += 1;
                    break;
                }
                take[i] = 0;
                i += 1;
            }
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = HodgeError;

    /// Accepts `3,1,1`, `(3,1,1)` or `3 1 1`; the empty string is ∅.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| HodgeError::InvalidInput(format!("bad partition part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// All partitions of `d`, in reverse-lexicographic order.
pub fn enumerate_partitions(d: u32) -> Vec<Partition> {
    fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for k in (1..=rem.min(max)).rev() {
            cur.push(k);
            go(rem - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `d` with at most `max_len` parts, each at most `max_part`.
pub fn enumerate_bounded(d: u32, max_len: usize, max_part: u32) -> Vec<Partition> {
    enumerate_partitions(d)
        .into_iter()
        .filter(|p| p.len() <= max_len && p.parts.first().map_or(true, |&a| a <= max_part))
        .collect()
}

/// Every nonempty partition with size at most `d_max`, smallest size first.
pub fn partitions_up_to(d_max: u32) -> Vec<Partition> {
    (1..=d_max).flat_map(enumerate_partitions).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_order_and_counts() {
        let four: Vec<String> = enumerate_partitions(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        let counts: Vec<usize> = (0..=10).map(|d| enumerate_partitions(d).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn statistics_of_small_partitions() {
        assert_eq!(p("3,1").kappa(), 4);
        assert_eq!(p("2,2").kappa(), 0);
        assert_eq!(p("1,1,1").kappa(), -6);
        assert_eq!(p("2,1,1").z_factor(), BigInt::from(4));
        assert_eq!(p("2,1,1").aut_order(), BigInt::from(2));
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        let mut h = p("3,1").hook_lengths();
        h.sort();
        assert_eq!(h, [1, 1, 2, 4]);
    }

    #[test]
    fn parsing_accepts_common_forms() {
        assert_eq!(p("(1,3,1)"), p("3 1 1"));
        assert_eq!(p(""), Partition::empty());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn sub_multisets_count() {
        assert_eq!(p("2,1,1").sub_multisets().len(), 6);
        for (a, b) in p("3,2,2,1").sub_multisets() {
            assert_eq!(a.union(&b), p("3,2,2,1"));
        }
    }
}
