//! Exact evaluation of the `chi^i` invariants.
//!
//! For each degree `i` the sum over fixed points
//!
//! ```text
//! chi^i = sum_p sigma_i(t^w_p) / prod_m (1 - t^w_p^m)
//! ```
//!
//! is multiplied through by `D = prod_{a in A} (1 - t^a)`. Each point then
//! contributes the polynomial `(-1)^(lambda_p/2) J_p(i) prod_{a in B_p} (1 - t^a)`,
//! where `J_p(i) = t^(sum of |negative weights|) sigma_i(t^w_p)`. The sum is a
//! constant `c` exactly when it equals `c * D`; since `D(0) = 1` the only
//! candidate is its constant term.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fixedpoint::{build_tables, FixedPoint, FixedPointData, WeightTables};
use crate::laurent::{series_expand, FactoredDenominator, LaurentPoly, Sign};

/// `J_p(i)` for every `0 <= i <= n`, read off `prod_m (1 + x t^w_m)`.
pub fn sigma_polys(point: &FixedPoint) -> Vec<LaurentPoly> {
    let weights = point.weights();
    let shift: i64 = weights.iter().filter(|&&w| w < 0).map(|w| -w).sum();
    let mut layers: Vec<BTreeMap<i64, BigInt>> = vec![BTreeMap::new(); weights.len() + 1];
    layers[0].insert(0, BigInt::one());
    for (m, &w) in weights.iter().enumerate() {
        for k in (0..=m).rev() {
            let moved: Vec<(i64, BigInt)> = layers[k].iter().map(|(e, c)| (e + w, c.clone())).collect();
            for (e, c) in moved {
                *layers[k + 1].entry(e).or_default() += c;
            }
        }
    }
    layers
        .into_iter()
        .map(|layer| {
            LaurentPoly::from_terms(layer.into_iter().map(|(e, c)| {
                let e = e + shift;
                debug_assert!(e >= 0);
                (e as u64, c)
            }))
        })
        .collect()
}

pub fn sigma_poly(point: &FixedPoint, degree: usize) -> Result<LaurentPoly> {
    let n = point.weights().len();
    if degree > n {
        return Err(Error::DegreeOutOfRange { degree, n });
    }
    Ok(sigma_polys(point).swap_remove(degree))
}

/// Exact value of one `chi^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChiValue {
    Constant(BigInt),
    /// `residual = cleared numerator - candidate * D` is nonzero.
    NonConstant {
        candidate: BigInt,
        residual: LaurentPoly,
    },
}

impl ChiValue {
    pub fn constant(&self) -> Option<&BigInt> {
        match self {
            ChiValue::Constant(c) => Some(c),
            ChiValue::NonConstant { .. } => None,
        }
    }
}

impl fmt::Display for ChiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChiValue::Constant(c) => write!(f, "{c}"),
            ChiValue::NonConstant { residual, .. } => write!(f, "non-constant (residual {residual})"),
        }
    }
}

/// Everything needed to form the cleared identities of one datum.
pub struct ClearedIdentities<'a> {
    data: &'a FixedPointData,
    tables: WeightTables,
    common: FactoredDenominator,
    signs: Vec<Sign>,
    complements: Vec<LaurentPoly>,
    sigmas: Vec<Vec<LaurentPoly>>,
}

impl<'a> ClearedIdentities<'a> {
    pub fn new(data: &'a FixedPointData) -> Self {
        let tables = build_tables(data);
        Self::with_tables(data, tables)
    }

    pub fn with_tables(data: &'a FixedPointData, tables: WeightTables) -> Self {
        let common = FactoredDenominator::from_positive(
            tables.abs_weights().iter().map(|&a| a as u64).collect(),
        );
        let complements = tables
            .complements()
            .iter()
            .map(|b| FactoredDenominator::from_positive(b.iter().map(|&a| a as u64).collect()).expand())
            .collect();
        let signs = data
            .points()
            .iter()
            .map(|p| Sign::from_parity(p.negative_count()))
            .collect();
        let sigmas = data.points().iter().map(sigma_polys).collect();
        Self {
            data,
            tables,
            common,
            signs,
            complements,
            sigmas,
        }
    }

    pub fn tables(&self) -> &WeightTables {
        &self.tables
    }

    /// `prod_{a in A} (1 - t^a)`.
    pub fn common_denominator(&self) -> &FactoredDenominator {
        &self.common
    }

    /// `sum_p (-1)^(lambda_p/2) J_p(i) prod_{B_p} (1 - t^a)`.
    pub fn cleared_numerator(&self, degree: usize) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for p in 0..self.data.len() {
            let term = &self.sigmas[p][degree] * &self.complements[p];
            acc += &self.signs[p].apply(&term);
        }
        acc
    }

    pub fn value(&self, degree: usize) -> Result<ChiValue> {
        let n = self.data.n();
        if degree > n {
            return Err(Error::DegreeOutOfRange { degree, n });
        }
        let numer = self.cleared_numerator(degree);
        let candidate = numer.constant_term();
        let residual = &numer - &self.common.expand().scale(&candidate);
        Ok(if residual.is_zero() {
            ChiValue::Constant(candidate)
        } else {
            ChiValue::NonConstant { candidate, residual }
        })
    }

    /// Power series of `chi^i` up to degree `order`, point by point.
    pub fn truncated_series(&self, degree: usize, order: u64) -> Result<LaurentPoly> {
        let n = self.data.n();
        if degree > n {
            return Err(Error::DegreeOutOfRange { degree, n });
        }
        let mut acc = LaurentPoly::zero();
        for (p, point) in self.data.points().iter().enumerate() {
            let abs = point.abs_weights().into_iter().map(|a| a as u64).collect();
            let denom = FactoredDenominator::from_positive(abs);
            acc += &series_expand(self.signs[p], 0, &self.sigmas[p][degree], &denom, order);
        }
        Ok(acc)
    }
}

pub fn chi_value(data: &FixedPointData, degree: usize) -> Result<ChiValue> {
    ClearedIdentities::new(data).value(degree)
}

/// Truncation order at which the series route decides constancy exactly.
pub fn decisive_order(data: &FixedPointData) -> u64 {
    build_tables(data).abs_weights().iter().map(|&a| a as u64).sum::<u64>() + 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChiVerdict {
    Hamiltonian,
    NonHamiltonian,
    Inconsistent,
}

impl fmt::Display for ChiVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChiVerdict::Hamiltonian => "Hamiltonian",
            ChiVerdict::NonHamiltonian => "NonHamiltonian",
            ChiVerdict::Inconsistent => "Inconsistent",
        })
    }
}

/// A violated identity among the `chi^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentityFailure {
    NonConstant { degree: usize, residual: LaurentPoly },
    /// `chi^0` is a constant other than 0 or 1.
    Dichotomy { chi0: BigInt },
    /// `chi^i != (-1)^i N^i`.
    IndexCount { degree: usize, chi: BigInt, expected: i64 },
    /// `N^i != N^(n-i)`.
    Asymmetric { degree: usize, count: usize, mirror: usize },
}

impl fmt::Display for IdentityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityFailure::NonConstant { degree, residual } => {
                write!(f, "chi^{degree} is not constant: residual {residual}")
            }
            IdentityFailure::Dichotomy { chi0 } => write!(f, "chi^0 = {chi0} is neither 0 nor 1"),
            IdentityFailure::IndexCount { degree, chi, expected } => {
                write!(f, "chi^{degree} = {chi} but (-1)^{degree} N^{degree} = {expected}")
            }
            IdentityFailure::Asymmetric { degree, count, mirror } => {
                write!(f, "N^{degree} = {count} differs from its mirror count {mirror}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiReport {
    pub chi: Vec<ChiValue>,
    pub histogram: Vec<usize>,
    pub verdict: ChiVerdict,
    pub failures: Vec<IdentityFailure>,
}

impl ChiReport {
    pub fn chi0(&self) -> Option<&BigInt> {
        self.chi[0].constant()
    }

    /// All `chi^i` when every one of them is constant.
    pub fn constants(&self) -> Option<Vec<BigInt>> {
        self.chi.iter().map(|c| c.constant().cloned()).collect()
    }

    pub fn is_consistent(&self) -> bool {
        self.verdict != ChiVerdict::Inconsistent
    }
}

pub fn full_report(data: &FixedPointData) -> ChiReport {
    report_from(&ClearedIdentities::new(data))
}

pub fn report_from(cleared: &ClearedIdentities<'_>) -> ChiReport {
    let data = cleared.data;
    let n = data.n();
    let histogram = data.index_histogram();
    let chi: Vec<ChiValue> = (0..=n)
        .map(|i| cleared.value(i).expect("degree in range"))
        .collect();

    let mut failures = Vec::new();
    for (degree, value) in chi.iter().enumerate() {
        match value {
            ChiValue::NonConstant { residual, .. } => failures.push(IdentityFailure::NonConstant {
                degree,
                residual: residual.clone(),
            }),
            ChiValue::Constant(c) => {
                let expected = if degree % 2 == 0 { 1 } else { -1 } * histogram[degree] as i64;
                if *c != BigInt::from(expected) {
                    failures.push(IdentityFailure::IndexCount {
                        degree,
                        chi: c.clone(),
                        expected,
                    });
                }
            }
        }
    }
    if let ChiValue::Constant(c0) = &chi[0] {
        if !c0.is_zero() && !c0.is_one() {
            failures.push(IdentityFailure::Dichotomy { chi0: c0.clone() });
        }
    }
    for degree in 0..=n {
        if histogram[degree] != histogram[n - degree] {
            failures.push(IdentityFailure::Asymmetric {
                degree,
                count: histogram[degree],
                mirror: histogram[n - degree],
            });
        }
    }

    let verdict = if !failures.is_empty() {
        ChiVerdict::Inconsistent
    } else if chi[0].constant().is_some_and(|c| c.is_one()) {
        ChiVerdict::Hamiltonian
    } else {
        ChiVerdict::NonHamiltonian
    };
    ChiReport {
        chi,
        histogram,
        verdict,
        failures,
    }
}

/// Outcome of comparing the exact value of one `chi^i` with its truncated series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesAgreement {
    pub degree: usize,
    pub series: LaurentPoly,
    pub agrees: bool,
}

/// Cross-checks every exact `chi^i` against its power series to `order`.
///
/// Below [`decisive_order`] a non-constant value can still look constant,
/// in which case `agrees` is false.
pub fn series_cross_check(data: &FixedPointData, order: u64) -> Vec<SeriesAgreement> {
    let cleared = ClearedIdentities::new(data);
    (0..=data.n())
        .map(|degree| {
            let exact = cleared.value(degree).expect("degree in range");
            let series = cleared.truncated_series(degree, order).expect("degree in range");
            let c = series.constant_term();
            let flat = (&series - &LaurentPoly::constant(c.clone())).is_zero();
            let agrees = match &exact {
                ChiValue::Constant(v) => flat && *v == c,
                ChiValue::NonConstant { .. } => !flat,
            };
            SeriesAgreement {
                degree,
                series,
                agrees,
            }
        })
        .collect()
}
