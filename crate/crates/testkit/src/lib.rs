//! Reference implementations used to cross-check `flatdual`.
//!
//! None of these share code paths with the library's dual arithmetic:
//! Bell polynomials are summed over explicit set partitions, the chain rule
//! is the literal multiset sum over integer partitions, derivatives of
//! expressions come from nested first-order duals or from Richardson
//! finite differences. They only borrow the principal-branch scalar
//! functions from `flatdual::scalar`.

use std::fmt;

use flatdual::Coefficient;

mod fixtures;
mod nested;
mod partitions;
mod richardson;
mod scalar_eval;

pub use fixtures::{
    fstest, fstest_gradient, fstest_scalar, fvectest, interior_points, inverse_pairs,
    tenths_plus_i, DualFn, InversePair,
};
pub use nested::{nested_dual_oracle, Nested};
pub use partitions::{
    arcsin_recursion_oracle, bell_oracle, faa_di_bruno_oracle, partition_multisets,
    PartitionMultiset,
};
pub use richardson::{richardson_diff, richardson_hessian};
pub use scalar_eval::scalar_eval;

#[derive(Debug, Clone, PartialEq)]
pub enum OracleError {
    /// Input exceeds what the oracle is willing to enumerate.
    Unsupported(&'static str),
    Expr(flatdual::ExprError),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::Unsupported(m) => write!(f, "unsupported: {m}"),
            OracleError::Expr(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for OracleError {}

impl From<flatdual::ExprError> for OracleError {
    fn from(e: flatdual::ExprError) -> Self {
        OracleError::Expr(e)
    }
}

/// `|a - b| <= tol · max(|a|, |b|)`, with an absolute floor of `tol` when both
/// are tiny.
pub fn rel_close(a: Coefficient, b: Coefficient, tol: f64) -> bool {
    let scale = a.norm().max(b.norm()).max(1e-300);
    let diff = (a - b).norm();
    diff <= tol * scale || diff <= tol * 1e-3
}

/// Largest relative deviation over two equally long slices.
pub fn max_rel_err(a: &[Coefficient], b: &[Coefficient]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let scale = x.norm().max(y.norm());
            if scale == 0.0 {
                0.0
            } else {
                (x - y).norm() / scale
            }
        })
        .fold(0.0, f64::max)
}

/// Normwise relative deviation: largest componentwise difference over the
/// largest component of `b`.
pub fn norm_rel_err(a: &[Coefficient], b: &[Coefficient]) -> f64 {
    assert_eq!(a.len(), b.len());
    let scale = b.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let diff = a
        .iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max);
    if scale == 0.0 {
        diff
    } else {
        diff / scale
    }
}

/// Small deterministic generator so test vectors are reproducible without
/// pulling in a crate.
#[derive(Debug, Clone)]
pub struct SplitMix(u64);

impl SplitMix {
    pub fn new(seed: u64) -> Self {
        SplitMix(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        let u = (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
        lo + (hi - lo) * u
    }

    /// Both parts uniform in `[-1, 1)`.
    pub fn unit_complex(&mut self) -> Coefficient {
        Coefficient::new(self.uniform(-1.0, 1.0), self.uniform(-1.0, 1.0))
    }
}
