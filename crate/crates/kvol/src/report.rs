//! Pass/fail reports for numerical identity checks.

use crate::combinatorics::IndexSet;

/// Default relative tolerance for identity checks.
pub const DEFAULT_CHECK_TOLERANCE: f64 = 1e-9;

/// The two sides of an identity together with the verdict of comparing them.
///
/// The residual is relative with a floor of 1 in the denominator, so
/// identities whose both sides vanish report a residual of 0 rather than 0/0.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub lhs: f64,
    pub rhs: f64,
    /// Per-subset contributions to the right-hand side, in basis order.
    /// Empty for checks that have no per-subset decomposition.
    pub per_term: Vec<(IndexSet, f64)>,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckReport {
    pub fn new(lhs: f64, rhs: f64, per_term: Vec<(IndexSet, f64)>, tolerance: f64) -> Self {
        let residual = (lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(1.0);
        let pass = residual <= tolerance;
        Self {
            lhs,
            rhs,
            per_term,
            residual,
            tolerance,
            pass,
        }
    }
}
