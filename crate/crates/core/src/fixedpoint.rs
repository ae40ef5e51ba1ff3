//! Candidate fixed-point data and the weight multisets derived from it.
//!
//! Multiplicities in the absolute-value multiset `A` and in the signed
//! collection `W` are the **maximum** number of occurrences at a single
//! fixed point, not the total over all points. With that choice
//! `prod_{a in A} (1 - t^a)` is a common denominator of every point's
//! contribution, and `B_p = A \ {|w_p|}` is always a genuine multiset.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset_sum::CardinalitySums;

/// Weights of one isolated fixed point, in input order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FixedPoint {
    weights: Vec<i64>,
}

impl FixedPoint {
    pub fn new(weights: Vec<i64>) -> Result<Self> {
        if let Some(slot) = weights.iter().position(|&w| w == 0) {
            return Err(Error::ZeroWeight { point: 0, slot });
        }
        Ok(Self { weights })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn negative_count(&self) -> usize {
        self.weights.iter().filter(|&&w| w < 0).count()
    }

    /// Twice the number of negative weights.
    pub fn index(&self) -> usize {
        2 * self.negative_count()
    }

    /// How many times `w` occurs among this point's weights.
    pub fn occurrence_count(&self, w: i64) -> usize {
        self.weights.iter().filter(|&&x| x == w).count()
    }

    /// Absolute values of the weights, sorted.
    pub fn abs_weights(&self) -> Vec<i64> {
        let mut a: Vec<i64> = self.weights.iter().map(|w| w.abs()).collect();
        a.sort_unstable();
        a
    }

    /// Weights sorted ascending.
    pub fn sorted(&self) -> FixedPoint {
        let mut weights = self.weights.clone();
        weights.sort_unstable();
        FixedPoint { weights }
    }

    pub(crate) fn from_sorted_unchecked(weights: Vec<i64>) -> Self {
        Self { weights }
    }
}

/// A full candidate datum: half-dimension `n` and a nonempty list of points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FixedPointData {
    n: usize,
    points: Vec<FixedPoint>,
}

impl FixedPointData {
    pub fn new(n: usize, points: Vec<Vec<i64>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NonPositiveDimension);
        }
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        let mut out = Vec::with_capacity(points.len());
        for (point, weights) in points.into_iter().enumerate() {
            if weights.len() != n {
                return Err(Error::RaggedPoint {
                    point,
                    len: weights.len(),
                    expected: n,
                });
            }
            if let Some(slot) = weights.iter().position(|&w| w == 0) {
                return Err(Error::ZeroWeight { point, slot });
            }
            out.push(FixedPoint { weights });
        }
        Ok(Self { n, points: out })
    }

    pub(crate) fn from_points_unchecked(n: usize, points: Vec<FixedPoint>) -> Self {
        debug_assert!(!points.is_empty() && points.iter().all(|p| p.weights.len() == n));
        Self { n, points }
    }

    /// Parses a JSON document in the interchange schema.
    pub fn parse(input: &str) -> Result<Self> {
        let doc: Document = serde_json::from_str(input)?;
        doc.into_data()
    }

    /// Half the real dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[FixedPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `N[i]` = number of points of index `2i`, for `0 <= i <= n`.
    pub fn index_histogram(&self) -> Vec<usize> {
        let mut hist = vec![0; self.n + 1];
        for p in &self.points {
            hist[p.negative_count()] += 1;
        }
        hist
    }

    pub fn to_document(&self) -> Document {
        Document {
            n: self.n as i64,
            fixed_points: self
                .points
                .iter()
                .map(|p| PointDocument {
                    weights: p.weights.clone(),
                })
                .collect(),
        }
    }
}

/// Interchange schema: `{"n": .., "fixed_points": [{"weights": [..]}, ..]}`.
///
/// Unknown fields such as an attached `report` are ignored when reading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub n: i64,
    pub fixed_points: Vec<PointDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointDocument {
    pub weights: Vec<i64>,
}

impl Document {
    pub fn into_data(self) -> Result<FixedPointData> {
        if self.n < 1 {
            return Err(Error::NonPositiveDimension);
        }
        FixedPointData::new(
            self.n as usize,
            self.fixed_points.into_iter().map(|p| p.weights).collect(),
        )
    }
}

/// The multisets `A`, `A_i`, `B_p` and `W` of a datum.
#[derive(Clone, Debug)]
pub struct WeightTables {
    abs: Vec<i64>,
    sums: CardinalitySums,
    complements: Vec<Vec<i64>>,
    signed: Vec<i64>,
}

fn max_multiplicity<I>(per_point: I) -> Vec<i64>
where
    I: IntoIterator<Item = Vec<i64>>,
{
    let mut best: BTreeMap<i64, usize> = BTreeMap::new();
    for values in per_point {
        let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
        for v in values {
            *counts.entry(v).or_default() += 1;
        }
        for (v, c) in counts {
            let slot = best.entry(v).or_default();
            *slot = (*slot).max(c);
        }
    }
    best.into_iter()
        .flat_map(|(v, c)| std::iter::repeat_n(v, c))
        .collect()
}

/// Multiset difference of sorted vectors; `sub` must be contained in `whole`.
fn sorted_difference(whole: &[i64], sub: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(whole.len() - sub.len());
    let mut rest = sub.iter().peekable();
    for &x in whole {
        if rest.peek() == Some(&&x) {
            rest.next();
        } else {
            out.push(x);
        }
    }
    debug_assert!(rest.next().is_none(), "point weights not contained in A");
    out
}

pub fn build_tables(data: &FixedPointData) -> WeightTables {
    let abs = max_multiplicity(data.points.iter().map(|p| p.abs_weights()));
    let signed = max_multiplicity(data.points.iter().map(|p| p.weights.clone()));
    let complements = data
        .points
        .iter()
        .map(|p| sorted_difference(&abs, &p.abs_weights()))
        .collect();
    let sums = CardinalitySums::new(&abs);
    WeightTables {
        abs,
        sums,
        complements,
        signed,
    }
}

impl WeightTables {
    /// `A`, sorted ascending.
    pub fn abs_weights(&self) -> &[i64] {
        &self.abs
    }

    /// `A_i`: sums of `i` distinct positions of `A`. Empty when `i > |A|`.
    pub fn sums_of(&self, i: usize) -> &BTreeSet<i64> {
        self.sums.sums(i)
    }

    pub fn sum_table(&self) -> &CardinalitySums {
        &self.sums
    }

    /// `B_p` for the `p`-th point in input order.
    pub fn complement(&self, p: usize) -> &[i64] {
        &self.complements[p]
    }

    pub fn complements(&self) -> &[Vec<i64>] {
        &self.complements
    }

    /// `W`, sorted ascending.
    pub fn signed_weights(&self) -> &[i64] {
        &self.signed
    }

    pub fn multiplicity(&self, a: i64) -> usize {
        self.abs.iter().filter(|&&x| x == a).count()
    }
}
