//! Irreducible characters of the symmetric group via the
//! Murnaghan–Nakayama rule on beta-sets.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::error::{HodgeError, Result};
use crate::partition::Partition;

/// χ_ν evaluated on the class of cycle type μ.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CharacterQuery {
    nu: Partition,
    mu: Partition,
}

impl CharacterQuery {
    pub fn new(nu: Partition, mu: Partition) -> Result<Self> {
        if nu.size() != mu.size() {
            return Err(HodgeError::InvalidInput(format!(
                "character of a shape of size {} on a class of size {}",
                nu.size(),
                mu.size()
            )));
        }
        Ok(CharacterQuery { nu, mu })
    }

    pub fn nu(&self) -> &Partition {
        &self.nu
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }
}

/// (β-set, cycle type) → character value.
type Memo = HashMap<(Vec<u32>, Vec<u32>), i64>;

/// Memoized character values, safe to share across threads.
#[derive(Default, Debug)]
pub struct CharacterTable {
    memo: RwLock<Memo>,
}

impl CharacterTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide table used by [`character`].
    pub fn global() -> &'static CharacterTable {
        static TABLE: OnceLock<CharacterTable> = OnceLock::new();
        TABLE.get_or_init(CharacterTable::new)
    }

    pub fn value(&self, q: &CharacterQuery) -> i64 {
        self.mn(q.nu.parts(), q.mu.parts())
    }

    pub fn len(&self) -> usize {
        self.memo.read().expect("character memo poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Strips border strips of length `mu[0]` and recurses on the rest of μ.
    fn mn(&self, nu: &[u32], mu: &[u32]) -> i64 {
        let Some((&k, rest)) = mu.split_first() else {
            return i64::from(nu.is_empty());
        };
        if rest.is_empty() {
            // A single cycle: χ_ν((n)) is ±1 on hooks and 0 otherwise.
            return hook_sign(nu);
        }
        let key = (nu.to_vec(), mu.to_vec());
        if let Some(&v) = self.memo.read().expect("character memo poisoned").get(&key) {
            return v;
        }
        let l = nu.len() as u32;
        let beta: Vec<u32> = nu.iter().enumerate().map(|(i, &p)| p + l - 1 - i as u32).collect();
        let mut total = 0i64;
        for &b in &beta {
            if b < k || beta.contains(&(b - k)) {
                continue;
            }
            let target = b - k;
            let between = beta.iter().filter(|&&x| x > target && x < b).count();
            let mut next: Vec<u32> = beta.iter().map(|&x| if x == b { target } else { x }).collect();
            next.sort_unstable_by(|a, b| b.cmp(a));
            let shape: Vec<u32> = next
                .iter()
                .enumerate()
                .map(|(i, &x)| x - (l - 1 - i as u32))
                .filter(|&p| p > 0)
                .collect();
            let v = self.mn(&shape, rest);
            total += if between % 2 == 0 { v } else { -v };
        }
        self.memo.write().expect("character memo poisoned").insert(key, total);
        total
    }
}

fn hook_sign(nu: &[u32]) -> i64 {
    let arm_ok = nu.iter().skip(1).all(|&p| p == 1);
    if !arm_ok {
        return 0;
    }
    if (nu.len() - 1) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// χ_ν(μ) through the shared table.
pub fn character(nu: &Partition, mu: &Partition) -> Result<i64> {
    let q = CharacterQuery::new(nu.clone(), mu.clone())?;
    Ok(CharacterTable::global().value(&q))
}
