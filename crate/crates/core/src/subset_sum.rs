//! Subset sums indexed by cardinality, with witness recovery.
//!
//! `sums(k)` is the set of values reachable by choosing exactly `k`
//! distinct positions of the item list. Repeated values count as separate
//! positions. Each state remembers the item that first reached it, so a
//! witness can be read back by walking parents.

use std::collections::{BTreeSet, HashMap};

#[derive(Clone, Debug)]
pub struct CardinalitySums {
    items: Vec<i64>,
    by_card: Vec<BTreeSet<i64>>,
    // (cardinality, sum) -> position of the item that first reached it
    parent: HashMap<(usize, i64), usize>,
}

impl CardinalitySums {
    pub fn new(items: &[i64]) -> Self {
        let mut by_card = vec![BTreeSet::new(); items.len() + 1];
        by_card[0].insert(0);
        let mut parent = HashMap::new();
        for (pos, &x) in items.iter().enumerate() {
            // Descending cardinality keeps each position used at most once.
            for k in (0..=pos).rev() {
                let fresh: Vec<i64> = by_card[k]
                    .iter()
                    .map(|s| s + x)
                    .filter(|s| !by_card[k + 1].contains(s))
                    .collect();
                for s in fresh {
                    by_card[k + 1].insert(s);
                    parent.insert((k + 1, s), pos);
                }
            }
        }
        Self {
            items: items.to_vec(),
            by_card,
            parent,
        }
    }

    pub fn items(&self) -> &[i64] {
        &self.items
    }

    /// Largest cardinality with a nonempty sum set.
    pub fn max_cardinality(&self) -> usize {
        self.items.len()
    }

    /// Values reachable with exactly `k` positions; empty past `items.len()`.
    pub fn sums(&self, k: usize) -> &BTreeSet<i64> {
        static EMPTY: BTreeSet<i64> = BTreeSet::new();
        self.by_card.get(k).unwrap_or(&EMPTY)
    }

    pub fn contains(&self, k: usize, sum: i64) -> bool {
        self.sums(k).contains(&sum)
    }

    /// Items at `k` distinct positions adding up to `sum`, in position order.
    pub fn witness(&self, k: usize, sum: i64) -> Option<Vec<i64>> {
        if !self.contains(k, sum) {
            return None;
        }
        let mut picked = Vec::with_capacity(k);
        let (mut k, mut s) = (k, sum);
        while k > 0 {
            let pos = self.parent[&(k, s)];
            picked.push(self.items[pos]);
            s -= self.items[pos];
            k -= 1;
        }
        picked.reverse();
        Some(picked)
    }
}

/// Smallest odd-size sub-multiset summing to zero, if any.
pub fn find_odd_zero_sum(items: &[i64]) -> Option<Vec<i64>> {
    let table = CardinalitySums::new(items);
    (1..=items.len())
        .step_by(2)
        .find_map(|k| table.witness(k, 0))
}

/// Some sub-multiset of exactly `size` positions summing to zero.
pub fn find_zero_sum_of_size(items: &[i64], size: usize) -> Option<Vec<i64>> {
    CardinalitySums::new(items).witness(size, 0)
}

/// Whether `sub` is contained in `whole` as a multiset.
pub fn is_submultiset(sub: &[i64], whole: &[i64]) -> bool {
    let mut counts: HashMap<i64, isize> = HashMap::new();
    for &x in whole {
        *counts.entry(x).or_default() += 1;
    }
    sub.iter().all(|x| {
        let c = counts.entry(*x).or_default();
        *c -= 1;
        *c >= 0
    })
}
