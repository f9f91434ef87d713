//! Join and cut moves of the cut-and-join operator, with the combinatorial
//! weights that appear when the τ-derivative of the connected series is
//! written coefficient by coefficient.
//!
//! Every move is stated from the point of view of a target partition μ: a
//! join move names the ν whose coefficient feeds μ when two parts of μ are
//! fused in ν, and a cut move names the ν (or the pair ν¹, ν²) in which a part
//! of μ appears split in two.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exact::rational::{int, rat, Rational};
use crate::partition::Partition;

/// ν = μ with parts `a` and `b` replaced by `a + b`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JoinMove {
    pub source: Partition,
    pub target: Partition,
    pub parts: (u32, u32),
    /// I₁ = (a+b)/(1+δ_ab) · m_{a+b}(ν).
    pub coefficient: Rational,
}

/// One ordered placement of the two pieces of a cut part into a pair of partitions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SplitTerm {
    pub left: Partition,
    pub right: Partition,
    /// Contribution to I₃(ν¹, ν²); the full I₃ is the sum over all terms with the same pair.
    pub coefficient: Rational,
}

/// ν = μ with one part `a + b` replaced by the two parts `a` and `b`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CutMove {
    pub source: Partition,
    pub target: Partition,
    pub cut_part: u32,
    pub parts: (u32, u32),
    /// I₂ = ab/(1+δ_ab) · m_a(ν)(m_b(ν) − δ_ab).
    pub coefficient: Rational,
    /// The disconnected version of this cut: the two pieces land in different
    /// factors ν¹ ∋ a' and ν² ∋ b', with (a', b') running over both orders.
    pub splits: Vec<SplitTerm>,
}

/// Normalization constants of the three move types. The defaults are the
/// ones for which the τ-derivative identity holds; the knob exists so tests
/// can confirm that a wrong constant is detected.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MoveWeights {
    pub join: Rational,
    pub cut: Rational,
    pub split: Rational,
}

impl Default for MoveWeights {
    fn default() -> Self {
        MoveWeights { join: int(1), cut: int(1), split: rat(1, 2) }
    }
}

fn delta(a: u32, b: u32) -> i64 {
    i64::from(a == b)
}

/// All join moves into μ, one per unordered pair of part values.
pub fn join_set(mu: &Partition) -> Vec<JoinMove> {
    join_set_weighted(mu, &MoveWeights::default())
}

pub fn join_set_weighted(mu: &Partition, w: &MoveWeights) -> Vec<JoinMove> {
    let mult = mu.multiplicities();
    let values: Vec<u32> = mult.keys().copied().collect();
    let mut out = Vec::new();
    for (x, &a) in values.iter().enumerate() {
        for &b in &values[x..] {
            if a == b && mult[&a] < 2 {
                continue;
            }
            let rest = mu.without_part(a).and_then(|p| p.without_part(b)).expect("parts present");
            let source = rest.with_part(a + b);
            let m = source.multiplicity(a + b) as i64;
            let coefficient = rat((a + b) as i64 * m, 1 + delta(a, b)) * &w.join;
            out.push(JoinMove { source, target: mu.clone(), parts: (b, a), coefficient });
        }
    }
    out
}

/// All cut moves into μ, one per part value c and unordered split c = a + b.
pub fn cut_set(mu: &Partition) -> Vec<CutMove> {
    cut_set_weighted(mu, &MoveWeights::default())
}

pub fn cut_set_weighted(mu: &Partition, w: &MoveWeights) -> Vec<CutMove> {
    let mut out = Vec::new();
    for &c in mu.multiplicities().keys() {
        let rest = mu.without_part(c).expect("part present");
        for a in 1..=c / 2 {
            let b = c - a;
            let source = rest.with_part(a).with_part(b);
            let ma = source.multiplicity(a) as i64;
            let mb = source.multiplicity(b) as i64;
            let coefficient =
                rat(a as i64 * b as i64 * ma * (mb - delta(a, b)), 1 + delta(a, b)) * &w.cut;
            let orders: &[(u32, u32)] = if a == b { &[(a, b)] } else { &[(a, b), (b, a)] };
            let mut splits = Vec::new();
            for &(x, y) in orders {
                for (r1, r2) in rest.sub_multisets() {
                    let left = r1.with_part(x);
                    let right = r2.with_part(y);
                    let weight = int(x as i64 * y as i64)
                        * int(left.multiplicity(x) as i64)
                        * int(right.multiplicity(y) as i64)
                        * &w.split;
                    splits.push(SplitTerm { left, right, coefficient: weight });
                }
            }
            out.push(CutMove { source, target: mu.clone(), cut_part: c, parts: (b, a), coefficient, splits });
        }
    }
    out
}

/// I₃(ν¹, ν²) for every ordered pair that feeds μ.
pub fn split_table(mu: &Partition) -> BTreeMap<(Partition, Partition), Rational> {
    let mut table: BTreeMap<(Partition, Partition), Rational> = BTreeMap::new();
    for mv in cut_set(mu) {
        for s in mv.splits {
            *table.entry((s.left, s.right)).or_insert_with(Rational::zero) += s.coefficient;
        }
    }
    table
}
