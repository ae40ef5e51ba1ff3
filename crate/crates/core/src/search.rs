//! Exhaustive enumeration of small candidate data.
//!
//! Data are generated directly in canonical form: weights sorted within
//! each point, points in nondecreasing lexicographic order. Cheap
//! histogram prunes run before any polynomial arithmetic; the survivors of
//! those go through the full chi report and the ladder check.
//!
//! The space is split by the first point and the parts are processed in
//! parallel, then concatenated in order, so results do not depend on
//! scheduling.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;

use crate::criteria::{evaluate_all, CriterionKind, Evaluation, ADJACENT_INDICES, PAIRING_LADDER};
use crate::error::{Error, Result};
use crate::fixedpoint::{FixedPoint, FixedPointData};

pub const DEFAULT_CEILING: u128 = 1_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Filter {
    ChiConsistency,
    PairingLadder,
    AdjacentIndices,
}

impl Filter {
    pub const ALL: [Filter; 3] = [Filter::ChiConsistency, Filter::PairingLadder, Filter::AdjacentIndices];
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chi_consistency" => Ok(Filter::ChiConsistency),
            "pairing_ladder" => Ok(Filter::PairingLadder),
            "adjacent_indices" => Ok(Filter::AdjacentIndices),
            other => Err(Error::InvalidSearch(format!("unknown filter `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    AllData,
    /// Only data with `chi^0 = 0`; implies no points of index 0 or `2n`.
    NonHamiltonianCandidates,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Mode::AllData),
            "non-hamiltonian" => Ok(Mode::NonHamiltonianCandidates),
            other => Err(Error::InvalidSearch(format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub n: usize,
    pub points: usize,
    pub max_weight: i64,
    pub filters: BTreeSet<Filter>,
    pub mode: Mode,
    pub ceiling: u128,
}

impl SearchSpec {
    /// All filters on, every datum reported, default ceiling.
    pub fn new(n: usize, points: usize, max_weight: i64) -> Self {
        Self {
            n,
            points,
            max_weight,
            filters: Filter::ALL.into_iter().collect(),
            mode: Mode::AllData,
            ceiling: DEFAULT_CEILING,
        }
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_filters<I: IntoIterator<Item = Filter>>(mut self, filters: I) -> Self {
        self.filters = filters.into_iter().collect();
        self
    }

    pub fn with_ceiling(mut self, ceiling: u128) -> Self {
        self.ceiling = ceiling;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::InvalidSearch("n must be at least 1".into()));
        }
        if self.points < 1 {
            return Err(Error::InvalidSearch("need at least one fixed point".into()));
        }
        if self.max_weight < 1 {
            return Err(Error::InvalidSearch("max_weight must be at least 1".into()));
        }
        Ok(())
    }

    fn has(&self, f: Filter) -> bool {
        self.filters.contains(&f)
    }
}

/// Sorts weights within each point, then sorts the points.
pub fn canonicalize(data: &FixedPointData) -> FixedPointData {
    let mut points: Vec<FixedPoint> = data.points().iter().map(FixedPoint::sorted).collect();
    points.sort();
    FixedPointData::from_points_unchecked(data.n(), points)
}

fn binomial(n: u128, k: u128) -> Option<u128> {
    let k = k.min(n.saturating_sub(k));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// Number of multisets of size `k` drawn from `m` kinds.
fn multichoose(m: u128, k: u128) -> Option<u128> {
    if m == 0 {
        return Some(u128::from(k == 0));
    }
    binomial(m + k - 1, k)
}

/// Number of canonical data for `spec`; saturates at `u128::MAX`.
pub fn space_size(spec: &SearchSpec) -> u128 {
    let alphabet = 2 * spec.max_weight as u128;
    multichoose(alphabet, spec.n as u128)
        .and_then(|tuples| multichoose(tuples, spec.points as u128))
        .unwrap_or(u128::MAX)
}

/// Nondecreasing weight tuples over `{-w..-1, 1..w}` in lexicographic order.
pub fn canonical_tuples(n: usize, max_weight: i64) -> Vec<Vec<i64>> {
    let alphabet: Vec<i64> = (-max_weight..=max_weight).filter(|&x| x != 0).collect();
    let mut out = Vec::new();
    for_each_multiset(alphabet.len(), n, |idx| {
        out.push(idx.iter().map(|&i| alphabet[i]).collect());
    });
    out
}

/// Calls `f` on every nondecreasing index sequence of length `k` over `0..m`,
/// in lexicographic order.
fn for_each_multiset(m: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k == 0 {
        f(&[]);
        return;
    }
    if m == 0 {
        return;
    }
    let mut idx = vec![0; k];
    loop {
        f(&idx);
        let Some(pos) = idx.iter().rposition(|&i| i + 1 < m) else {
            return;
        };
        let next = idx[pos] + 1;
        idx[pos..].iter_mut().for_each(|i| *i = next);
    }
}

/// Why a datum was dropped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rejection {
    NoAdjacentIndices,
    AsymmetricIndices,
    /// More than one point of index 0 forces `chi^0 >= 2`.
    TooManyIndexZero,
    ExtremeIndexPoint,
    ChiInconsistent,
    LadderFailure,
    ChiZeroViolated,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rejection::NoAdjacentIndices => "no two indices differ by 2",
            Rejection::AsymmetricIndices => "index histogram not symmetric",
            Rejection::TooManyIndexZero => "more than one point of index 0",
            Rejection::ExtremeIndexPoint => "point of index 0 or 2n",
            Rejection::ChiInconsistent => "chi identities fail",
            Rejection::LadderFailure => "pairing ladder fails",
            Rejection::ChiZeroViolated => "chi^0 is not 0",
        })
    }
}

/// Prunes that only look at the index histogram.
pub fn cheap_rejection(spec: &SearchSpec, histogram: &[usize]) -> Option<Rejection> {
    let n = histogram.len() - 1;
    if spec.mode == Mode::NonHamiltonianCandidates && (histogram[0] > 0 || histogram[n] > 0) {
        return Some(Rejection::ExtremeIndexPoint);
    }
    if spec.has(Filter::AdjacentIndices) && !histogram.windows(2).any(|w| w[0] > 0 && w[1] > 0) {
        return Some(Rejection::NoAdjacentIndices);
    }
    if spec.has(Filter::ChiConsistency) {
        if (0..=n).any(|i| histogram[i] != histogram[n - i]) {
            return Some(Rejection::AsymmetricIndices);
        }
        if histogram[0] > 1 {
            return Some(Rejection::TooManyIndexZero);
        }
    }
    None
}

/// The enabled filters evaluated on the full report.
pub fn full_rejection(spec: &SearchSpec, evaluation: &Evaluation) -> Option<Rejection> {
    if spec.has(Filter::ChiConsistency) && !evaluation.chi.is_consistent() {
        return Some(Rejection::ChiInconsistent);
    }
    let failing = |name: &str| {
        evaluation
            .criteria
            .iter()
            .any(|c| c.name == name && c.kind == CriterionKind::Necessary && c.witness().is_some())
    };
    if spec.has(Filter::PairingLadder) && failing(PAIRING_LADDER) {
        return Some(Rejection::LadderFailure);
    }
    if spec.has(Filter::AdjacentIndices) && failing(ADJACENT_INDICES) {
        return Some(Rejection::NoAdjacentIndices);
    }
    if spec.mode == Mode::NonHamiltonianCandidates && !evaluation.chi.chi0().is_some_and(|c| c.is_zero()) {
        return Some(Rejection::ChiZeroViolated);
    }
    None
}

pub fn classify_survivor(data: &FixedPointData) -> Evaluation {
    evaluate_all(data)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Survivor {
    pub data: FixedPointData,
    pub evaluation: Evaluation,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub enumerated: u64,
    pub pruned: u64,
    pub rejected: u64,
    pub survivors: u64,
}

impl std::ops::Add for SearchStats {
    type Output = SearchStats;

    fn add(self, o: SearchStats) -> SearchStats {
        SearchStats {
            enumerated: self.enumerated + o.enumerated,
            pruned: self.pruned + o.pruned,
            rejected: self.rejected + o.rejected,
            survivors: self.survivors + o.survivors,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub survivors: Vec<Survivor>,
    pub stats: SearchStats,
}

/// Every canonical datum of `spec` in canonical order, pruned or not.
///
/// Used by tests to audit the prunes; [`enumerate`] does not build pruned data.
pub fn for_each_canonical(spec: &SearchSpec, mut f: impl FnMut(FixedPointData)) -> Result<()> {
    check_space(spec)?;
    let tuples = canonical_tuples(spec.n, spec.max_weight);
    for_each_multiset(tuples.len(), spec.points, |idx| {
        let points = idx
            .iter()
            .map(|&i| FixedPoint::from_sorted_unchecked(tuples[i].clone()))
            .collect();
        f(FixedPointData::from_points_unchecked(spec.n, points));
    });
    Ok(())
}

fn check_space(spec: &SearchSpec) -> Result<()> {
    spec.validate()?;
    let space = space_size(spec);
    if space > spec.ceiling {
        return Err(Error::CeilingExceeded {
            space,
            ceiling: spec.ceiling,
        });
    }
    Ok(())
}

pub fn enumerate(spec: &SearchSpec) -> Result<SearchResult> {
    check_space(spec)?;
    let tuples = canonical_tuples(spec.n, spec.max_weight);
    let negatives: Vec<usize> = tuples.iter().map(|t| t.iter().filter(|&&w| w < 0).count()).collect();

    let parts: Vec<(Vec<Survivor>, SearchStats)> = (0..tuples.len())
        .into_par_iter()
        .map(|first| {
            let mut survivors = Vec::new();
            let mut stats = SearchStats::default();
            let rest = tuples.len() - first;
            for_each_multiset(rest, spec.points - 1, |tail| {
                stats.enumerated += 1;
                let idx: Vec<usize> = std::iter::once(first).chain(tail.iter().map(|t| t + first)).collect();
                let mut histogram = vec![0; spec.n + 1];
                for &i in &idx {
                    histogram[negatives[i]] += 1;
                }
                if cheap_rejection(spec, &histogram).is_some() {
                    stats.pruned += 1;
                    return;
                }
                let points = idx
                    .iter()
                    .map(|&i| FixedPoint::from_sorted_unchecked(tuples[i].clone()))
                    .collect();
                let data = FixedPointData::from_points_unchecked(spec.n, points);
                let evaluation = classify_survivor(&data);
                if full_rejection(spec, &evaluation).is_some() {
                    stats.rejected += 1;
                    return;
                }
                stats.survivors += 1;
                survivors.push(Survivor { data, evaluation });
            });
            (survivors, stats)
        })
        .collect();

    let mut survivors = Vec::new();
    let mut stats = SearchStats::default();
    for (s, st) in parts {
        survivors.extend(s);
        stats = stats + st;
    }
    Ok(SearchResult { survivors, stats })
}
