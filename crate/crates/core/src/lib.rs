//! Exact checks for circle actions with isolated fixed points.
//!
//! Given the weights at each fixed point, the crate computes every
//! `chi^i` invariant of the fixed-point formula exactly, decides whether
//! the data describe a Hamiltonian action, a non-Hamiltonian candidate, or
//! cannot come from any manifold, and evaluates the combinatorial criteria
//! that force an action to be Hamiltonian.
//!
//! See `examples/` for one runnable program per capability.

pub mod chi;
pub mod cli;
pub mod criteria;
pub mod error;
pub mod fixedpoint;
pub mod laurent;
pub mod search;
pub mod subset_sum;

pub use chi::{chi_value, full_report, ChiReport, ChiValue, ChiVerdict};
pub use criteria::{evaluate_all, CriterionResult, Evaluation, Summary};
pub use error::{Error, Result};
pub use fixedpoint::{build_tables, FixedPoint, FixedPointData, WeightTables};
pub use laurent::{FactoredDenominator, LaurentPoly, Sign};

pub use search::{enumerate, Mode, SearchSpec};
