//! Sufficient criteria for an action to be Hamiltonian, and the necessary
//! conditions every genuine fixed-point datum satisfies.
//!
//! A sufficient criterion whose hypothesis holds forces the action to be
//! Hamiltonian; when it fails it says nothing. A necessary condition that
//! fails means no manifold has this fixed-point data. Several criteria
//! only apply in dimension six or to a particular weight shape; those
//! report [`Outcome::Inapplicable`] rather than a failure.

use std::collections::BTreeSet;
use std::fmt;

use crate::chi::{report_from, ChiReport, ChiVerdict, ClearedIdentities};
use crate::error::{Error, Result};
use crate::fixedpoint::{build_tables, FixedPointData, WeightTables};
use crate::subset_sum::{find_odd_zero_sum, find_zero_sum_of_size, is_submultiset, CardinalitySums};

pub const PARITY_DISJOINT: &str = "parity_disjoint";
pub const ODD_SUM_NONZERO: &str = "odd_sum_nonzero";
pub const SYMMETRIC_THREE_SUM: &str = "symmetric_three_sum";
pub const THREE_SUM_DIM6: &str = "three_sum_dim6";
pub const INDEX24_CONDITION: &str = "index24_condition";
pub const GODINHO_CONDITION: &str = "godinho_condition";
pub const PAIRING_LADDER: &str = "pairing_ladder";
pub const ADJACENT_INDICES: &str = "adjacent_indices";

/// Every criterion, in report order.
pub const ALL_CRITERIA: [&str; 8] = [
    PARITY_DISJOINT,
    ODD_SUM_NONZERO,
    SYMMETRIC_THREE_SUM,
    THREE_SUM_DIM6,
    INDEX24_CONDITION,
    GODINHO_CONDITION,
    PAIRING_LADDER,
    ADJACENT_INDICES,
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CriterionKind {
    /// Hypothesis holding implies Hamiltonian.
    Sufficient,
    /// Failure implies the datum is inconsistent.
    Necessary,
}

/// A concrete combination that violates a criterion's hypothesis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `value` lies in both `A_i` and `A_j`; `left` and `right` are the summands.
    SumCollision {
        i: usize,
        j: usize,
        value: i64,
        left: Vec<i64>,
        right: Vec<i64>,
    },
    ZeroSum { terms: Vec<i64> },
    /// Negative weight `-b` at an index-2 point equals `-e - f` at an index-4 point.
    NegativeSum {
        index2_point: usize,
        index4_point: usize,
        b: i64,
        e: i64,
        f: i64,
    },
    /// Shared absolute weights `a <= b <= c` with `a + b = c`.
    TripleSum { a: i64, b: i64, c: i64 },
    LadderBreak {
        weight: i64,
        degree: usize,
        minus_count: usize,
        plus_count: usize,
    },
    NoAdjacentIndices { histogram: Vec<usize> },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::SumCollision {
                i,
                j,
                value,
                left,
                right,
            } => write!(f, "A_{i} and A_{j} share {value} ({left:?} vs {right:?})"),
            Witness::ZeroSum { terms } => write!(f, "{terms:?} sums to 0"),
            Witness::NegativeSum {
                index2_point,
                index4_point,
                b,
                e,
                f: ff,
            } => write!(
                f,
                "b = {b} at point {index2_point} equals e + f = {e} + {ff} at point {index4_point}"
            ),
            Witness::TripleSum { a, b, c } => write!(f, "{a} + {b} = {c}"),
            Witness::LadderBreak {
                weight,
                degree,
                minus_count,
                plus_count,
            } => write!(
                f,
                "-{weight} occurs {minus_count} times at index {}, {weight} occurs {plus_count} times at index {}",
                2 * degree,
                2 * degree - 2
            ),
            Witness::NoAdjacentIndices { histogram } => {
                write!(f, "index histogram {histogram:?} has no two consecutive nonzero entries")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Fails(Witness),
    Inapplicable(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionResult {
    pub name: &'static str,
    pub kind: CriterionKind,
    pub outcome: Outcome,
    pub detail: Option<String>,
}

impl CriterionResult {
    fn new(name: &'static str, kind: CriterionKind, outcome: Outcome) -> Self {
        Self {
            name,
            kind,
            outcome,
            detail: None,
        }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn hypothesis_holds(&self) -> bool {
        self.outcome == Outcome::Holds
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.outcome {
            Outcome::Fails(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_inapplicable(&self) -> bool {
        matches!(self.outcome, Outcome::Inapplicable(_))
    }

    /// What the outcome says about the action.
    pub fn implication(&self) -> &'static str {
        match (self.kind, &self.outcome) {
            (CriterionKind::Sufficient, Outcome::Holds) => "Hamiltonian",
            (CriterionKind::Necessary, Outcome::Holds) => "pass",
            (CriterionKind::Necessary, Outcome::Fails(_)) => "Inconsistent",
            _ => "silent",
        }
    }

    /// Re-evaluates the witness against the datum it was produced from.
    pub fn verify_witness(&self, data: &FixedPointData, tables: &WeightTables) -> bool {
        let Some(w) = self.witness() else {
            return true;
        };
        match (self.name, w) {
            (PARITY_DISJOINT, Witness::SumCollision { i, j, value, left, right }) => {
                let a = tables.abs_weights();
                (i + j) % 2 == 1
                    && left.len() == *i
                    && right.len() == *j
                    && left.iter().sum::<i64>() == *value
                    && right.iter().sum::<i64>() == *value
                    && is_submultiset(left, a)
                    && is_submultiset(right, a)
                    && tables.sums_of(*i).contains(value)
                    && tables.sums_of(*j).contains(value)
            }
            (ODD_SUM_NONZERO, Witness::ZeroSum { terms }) => {
                terms.len() % 2 == 1
                    && terms.iter().sum::<i64>() == 0
                    && is_submultiset(terms, tables.signed_weights())
            }
            (THREE_SUM_DIM6, Witness::ZeroSum { terms }) => {
                terms.len() == 3
                    && terms.iter().sum::<i64>() == 0
                    && is_submultiset(terms, tables.signed_weights())
            }
            (SYMMETRIC_THREE_SUM, Witness::ZeroSum { terms }) => {
                let abs: Vec<i64> = terms.iter().map(|t| t.abs()).collect();
                terms.len() == 3
                    && terms.iter().sum::<i64>() == 0
                    && shared_abs_weights(data).is_some_and(|shared| is_submultiset(&abs, &shared))
            }
            (
                INDEX24_CONDITION,
                Witness::NegativeSum {
                    index2_point,
                    index4_point,
                    b,
                    e,
                    f,
                },
            ) => {
                let pts = data.points();
                let (Some(p), Some(q)) = (pts.get(*index2_point), pts.get(*index4_point)) else {
                    return false;
                };
                let mut neg_q: Vec<i64> = q.weights().iter().filter(|&&x| x < 0).map(|x| -x).collect();
                neg_q.sort_unstable();
                let mut ef = vec![*e, *f];
                ef.sort_unstable();
                p.index() == 2
                    && q.index() == 4
                    && p.weights().contains(&-b)
                    && neg_q == ef
                    && *b == e + f
            }
            (GODINHO_CONDITION, Witness::TripleSum { a, b, c }) => {
                shared_abs_weights(data) == Some(vec![*a, *b, *c]) && a + b == *c
            }
            (
                PAIRING_LADDER,
                Witness::LadderBreak {
                    weight,
                    degree,
                    minus_count,
                    plus_count,
                },
            ) => {
                let (plus, minus) = level_counts(data, *weight);
                *degree >= 1
                    && minus[*degree] == *minus_count
                    && plus[degree - 1] == *plus_count
                    && minus_count != plus_count
            }
            (ADJACENT_INDICES, Witness::NoAdjacentIndices { histogram }) => {
                *histogram == data.index_histogram()
                    && !histogram.windows(2).any(|w| w[0] > 0 && w[1] > 0)
            }
            _ => false,
        }
    }
}

/// Per-`i` outcome of the parity-disjointness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexCheck {
    pub i: usize,
    pub collision: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityDisjoint {
    pub checks: Vec<IndexCheck>,
    pub overall: CriterionResult,
}

fn first_collision(table: &CardinalitySums, i: usize) -> Option<Witness> {
    let max = table.max_cardinality();
    (1..=max).filter(|j| (i + j) % 2 == 1).find_map(|j| {
        let value = *table.sums(i).intersection(table.sums(j)).next()?;
        Some(Witness::SumCollision {
            i,
            j,
            value,
            left: table.witness(i, value)?,
            right: table.witness(j, value)?,
        })
    })
}

/// Some `0 < i < n` with `A_i` disjoint from every `A_j` of opposite parity.
pub fn parity_disjoint(tables: &WeightTables, n: usize) -> ParityDisjoint {
    let kind = CriterionKind::Sufficient;
    if n < 2 {
        return ParityDisjoint {
            checks: Vec::new(),
            overall: CriterionResult::new(
                PARITY_DISJOINT,
                kind,
                Outcome::Inapplicable("no 0 < i < n when n = 1".into()),
            ),
        };
    }
    let checks: Vec<IndexCheck> = (1..n)
        .map(|i| IndexCheck {
            i,
            collision: first_collision(tables.sum_table(), i),
        })
        .collect();
    let passing: Vec<usize> = checks.iter().filter(|c| c.collision.is_none()).map(|c| c.i).collect();
    let overall = if passing.is_empty() {
        let w = checks[0].collision.clone().expect("every index collides");
        CriterionResult::new(PARITY_DISJOINT, kind, Outcome::Fails(w))
    } else {
        CriterionResult::new(PARITY_DISJOINT, kind, Outcome::Holds)
            .with_detail(format!("disjoint at i = {passing:?}"))
    };
    ParityDisjoint { checks, overall }
}

/// No odd number of weights from `W` sums to zero.
pub fn odd_sum_nonzero(tables: &WeightTables) -> CriterionResult {
    let outcome = match find_odd_zero_sum(tables.signed_weights()) {
        Some(terms) => Outcome::Fails(Witness::ZeroSum { terms }),
        None => Outcome::Holds,
    };
    CriterionResult::new(ODD_SUM_NONZERO, CriterionKind::Sufficient, outcome)
}

/// The common absolute-weight multiset, sorted, if every point has the same one.
pub fn shared_abs_weights(data: &FixedPointData) -> Option<Vec<i64>> {
    let first = data.points()[0].abs_weights();
    data.points()[1..]
        .iter()
        .all(|p| p.abs_weights() == first)
        .then_some(first)
}

/// Weights `{+-a_1, .., +-a_n}` at every point, `n <= 5`, and no `+-a_i +- a_j +- a_k = 0`.
pub fn symmetric_three_sum(data: &FixedPointData) -> CriterionResult {
    let name = SYMMETRIC_THREE_SUM;
    let kind = CriterionKind::Sufficient;
    let Some(a) = shared_abs_weights(data) else {
        return CriterionResult::new(
            name,
            kind,
            Outcome::Inapplicable("points do not share one multiset of absolute weights".into()),
        );
    };
    let n = a.len();
    if n > 5 {
        return CriterionResult::new(name, kind, Outcome::Inapplicable(format!("n = {n} exceeds 5")));
    }
    if n < 3 {
        return CriterionResult::new(name, kind, Outcome::Holds).with_detail("no triple of weights");
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                // Overall sign is irrelevant, so fix the sign of a_i.
                for (sj, sk) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    if a[i] + sj * a[j] + sk * a[k] == 0 {
                        let terms = vec![a[i], sj * a[j], sk * a[k]];
                        return CriterionResult::new(name, kind, Outcome::Fails(Witness::ZeroSum { terms }));
                    }
                }
            }
        }
    }
    CriterionResult::new(name, kind, Outcome::Holds)
}

/// In dimension six, no three weights from `W` sum to zero.
pub fn three_sum_dim6(tables: &WeightTables, n: usize) -> CriterionResult {
    let kind = CriterionKind::Sufficient;
    if n != 3 {
        return CriterionResult::new(THREE_SUM_DIM6, kind, Outcome::Inapplicable(format!("n = {n}, needs n = 3")));
    }
    let outcome = match find_zero_sum_of_size(tables.signed_weights(), 3) {
        Some(terms) => Outcome::Fails(Witness::ZeroSum { terms }),
        None => Outcome::Holds,
    };
    CriterionResult::new(THREE_SUM_DIM6, kind, outcome)
}

/// In dimension six, no negative weight at an index-2 point equals the sum
/// of the negative weights at an index-4 point.
pub fn index24_condition(data: &FixedPointData) -> CriterionResult {
    let kind = CriterionKind::Sufficient;
    let n = data.n();
    if n != 3 {
        return CriterionResult::new(INDEX24_CONDITION, kind, Outcome::Inapplicable(format!("n = {n}, needs n = 3")));
    }
    let negatives = |p: &crate::fixedpoint::FixedPoint| -> Vec<i64> {
        let mut v: Vec<i64> = p.weights().iter().filter(|&&w| w < 0).map(|w| -w).collect();
        v.sort_unstable();
        v
    };
    for (pi, p) in data.points().iter().enumerate().filter(|(_, p)| p.index() == 2) {
        let b = negatives(p)[0];
        for (qi, q) in data.points().iter().enumerate().filter(|(_, q)| q.index() == 4) {
            let ef = negatives(q);
            if b == ef[0] + ef[1] {
                let w = Witness::NegativeSum {
                    index2_point: pi,
                    index4_point: qi,
                    b,
                    e: ef[0],
                    f: ef[1],
                };
                return CriterionResult::new(INDEX24_CONDITION, kind, Outcome::Fails(w));
            }
        }
    }
    CriterionResult::new(INDEX24_CONDITION, kind, Outcome::Holds)
}

/// Dimension six, weights `{+-a, +-b, +-c}` everywhere with `a <= b <= c`: `a + b != c`.
pub fn godinho_condition(data: &FixedPointData) -> CriterionResult {
    let kind = CriterionKind::Sufficient;
    if data.n() != 3 {
        let why = format!("n = {}, needs n = 3", data.n());
        return CriterionResult::new(GODINHO_CONDITION, kind, Outcome::Inapplicable(why));
    }
    let Some(abc) = shared_abs_weights(data) else {
        return CriterionResult::new(
            GODINHO_CONDITION,
            kind,
            Outcome::Inapplicable("points do not share one multiset of absolute weights".into()),
        );
    };
    let (a, b, c) = (abc[0], abc[1], abc[2]);
    let outcome = if a + b == c {
        Outcome::Fails(Witness::TripleSum { a, b, c })
    } else {
        Outcome::Holds
    };
    CriterionResult::new(GODINHO_CONDITION, kind, outcome)
}

/// Positive weights in `A` that are not a sum of two or more other
/// positions of `A`.
pub fn primitive_weights(tables: &WeightTables) -> BTreeSet<i64> {
    let a = tables.abs_weights();
    let distinct: BTreeSet<i64> = a.iter().copied().collect();
    distinct
        .into_iter()
        .filter(|&w| decomposition(a, w).is_none())
        .collect()
}

/// Some way to write `w` as a sum of at least two positions of `A` minus one copy of `w`.
fn decomposition(a: &[i64], w: i64) -> Option<Vec<i64>> {
    let at = a.iter().position(|&x| x == w)?;
    let mut rest = a.to_vec();
    rest.remove(at);
    let table = CardinalitySums::new(&rest);
    (2..=rest.len()).find_map(|k| table.witness(k, w))
}

/// `(plus, minus)`: occurrences of `w` and of `-w`, summed over points of index `2k`.
fn level_counts(data: &FixedPointData, w: i64) -> (Vec<usize>, Vec<usize>) {
    let mut plus = vec![0; data.n() + 1];
    let mut minus = vec![0; data.n() + 1];
    for p in data.points() {
        plus[p.negative_count()] += p.occurrence_count(w);
        minus[p.negative_count()] += p.occurrence_count(-w);
    }
    (plus, minus)
}

/// For a primitive weight `w`: the number of `-w` at index `2i` equals the
/// number of `w` at index `2i - 2`, for every `1 <= i <= n`.
///
/// The telescoped identity
/// `#(-w) + #w at 2i = #w at 2i - 2 + #(-w) at 2i + 2` is checked as well;
/// the two are equivalent, so disagreement is reported as an internal error.
pub fn pairing_ladder(data: &FixedPointData, tables: &WeightTables, w: i64) -> Result<CriterionResult> {
    if w <= 0 || tables.multiplicity(w) == 0 {
        return Err(Error::NotPrimitive {
            weight: w,
            reason: "not an absolute weight of the datum".into(),
        });
    }
    if let Some(parts) = decomposition(tables.abs_weights(), w) {
        return Err(Error::NotPrimitive {
            weight: w,
            reason: format!("it is the sum of {parts:?}"),
        });
    }
    let n = data.n();
    let (plus, minus) = level_counts(data, w);
    let broken = (1..=n).find(|&i| minus[i] != plus[i - 1]);
    let telescoped = (0..=n).all(|i| {
        let below = if i == 0 { 0 } else { plus[i - 1] };
        let above = if i == n { 0 } else { minus[i + 1] };
        minus[i] + plus[i] == below + above
    });
    if broken.is_none() != telescoped {
        return Err(Error::Internal(format!(
            "ladder and telescoped identity disagree for w = {w}: plus {plus:?}, minus {minus:?}"
        )));
    }
    let outcome = match broken {
        Some(degree) => Outcome::Fails(Witness::LadderBreak {
            weight: w,
            degree,
            minus_count: minus[degree],
            plus_count: plus[degree - 1],
        }),
        None => Outcome::Holds,
    };
    Ok(CriterionResult::new(PAIRING_LADDER, CriterionKind::Necessary, outcome).with_detail(format!("w = {w}")))
}

/// Two fixed points whose indices differ by 2.
pub fn adjacent_indices(data: &FixedPointData) -> CriterionResult {
    let histogram = data.index_histogram();
    let outcome = if histogram.windows(2).any(|w| w[0] > 0 && w[1] > 0) {
        Outcome::Holds
    } else {
        Outcome::Fails(Witness::NoAdjacentIndices { histogram })
    };
    CriterionResult::new(ADJACENT_INDICES, CriterionKind::Necessary, outcome)
}

/// Overall classification of a datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Summary {
    HamiltonianByChi,
    /// `chi^0 = 0` while a sufficient criterion forces Hamiltonian.
    Contradiction { criteria: Vec<&'static str> },
    NonHamiltonianCandidate,
    Inconsistent { reasons: Vec<String> },
}

impl Summary {
    pub fn is_inconsistent(&self) -> bool {
        matches!(self, Summary::Contradiction { .. } | Summary::Inconsistent { .. })
    }

    /// 0 Hamiltonian, 1 non-Hamiltonian candidate, 2 inconsistent.
    pub fn exit_code(&self) -> i32 {
        match self {
            Summary::HamiltonianByChi => 0,
            Summary::NonHamiltonianCandidate => 1,
            Summary::Contradiction { .. } | Summary::Inconsistent { .. } => 2,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Summary::HamiltonianByChi => "hamiltonian",
            Summary::Contradiction { .. } => "contradiction",
            Summary::NonHamiltonianCandidate => "non_hamiltonian_candidate",
            Summary::Inconsistent { .. } => "inconsistent",
        }
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Summary::HamiltonianByChi => f.write_str("Hamiltonian (by χ⁰)"),
            Summary::Contradiction { criteria } => write!(
                f,
                "Hamiltonian (criterion {}, data claims non-Hamiltonian → CONTRADICTION: Inconsistent)",
                criteria.join(", ")
            ),
            Summary::NonHamiltonianCandidate => {
                f.write_str("non-Hamiltonian candidate: all criteria silent, all necessary conditions pass")
            }
            Summary::Inconsistent { reasons } => write!(f, "Inconsistent: {}", reasons.join("; ")),
        }
    }
}

/// Table-driven classification from the chi report and the criterion outcomes.
pub fn summarize(chi: &ChiReport, criteria: &[CriterionResult]) -> Summary {
    let mut reasons: Vec<String> = chi.failures.iter().map(|f| f.to_string()).collect();
    for c in criteria.iter().filter(|c| c.kind == CriterionKind::Necessary) {
        if let Some(w) = c.witness() {
            reasons.push(format!("{} failed: {w}", c.name));
        }
    }
    if !reasons.is_empty() {
        return Summary::Inconsistent { reasons };
    }
    match chi.verdict {
        ChiVerdict::Hamiltonian => Summary::HamiltonianByChi,
        ChiVerdict::Inconsistent => unreachable!("inconsistent report without failures"),
        ChiVerdict::NonHamiltonian => {
            let mut forced: Vec<&'static str> = criteria
                .iter()
                .filter(|c| c.kind == CriterionKind::Sufficient && c.hypothesis_holds())
                .map(|c| c.name)
                .collect();
            forced.dedup();
            if forced.is_empty() {
                Summary::NonHamiltonianCandidate
            } else {
                Summary::Contradiction { criteria: forced }
            }
        }
    }
}

/// Runs the named criteria; `pairing_ladder` expands to one result per primitive weight.
pub fn run_criteria(data: &FixedPointData, tables: &WeightTables, names: &[&str]) -> Result<Vec<CriterionResult>> {
    let mut out = Vec::new();
    for &name in names {
        match name {
            PARITY_DISJOINT => out.push(parity_disjoint(tables, data.n()).overall),
            ODD_SUM_NONZERO => out.push(odd_sum_nonzero(tables)),
            SYMMETRIC_THREE_SUM => out.push(symmetric_three_sum(data)),
            THREE_SUM_DIM6 => out.push(three_sum_dim6(tables, data.n())),
            INDEX24_CONDITION => out.push(index24_condition(data)),
            GODINHO_CONDITION => out.push(godinho_condition(data)),
            PAIRING_LADDER => {
                for w in primitive_weights(tables) {
                    out.push(pairing_ladder(data, tables, w)?);
                }
            }
            ADJACENT_INDICES => out.push(adjacent_indices(data)),
            other => return Err(Error::UnknownCriterion(other.to_string())),
        }
    }
    Ok(out)
}

/// Chi report, every criterion, and the resulting classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub chi: ChiReport,
    pub primitive: BTreeSet<i64>,
    pub criteria: Vec<CriterionResult>,
    pub summary: Summary,
}

pub fn evaluate_all(data: &FixedPointData) -> Evaluation {
    let tables = build_tables(data);
    let chi = report_from(&ClearedIdentities::with_tables(data, tables.clone()));
    let criteria = run_criteria(data, &tables, &ALL_CRITERIA).expect("primitive weights are primitive");
    let summary = summarize(&chi, &criteria);
    Evaluation {
        chi,
        primitive: primitive_weights(&tables),
        criteria,
        summary,
    }
}
