//! Forward-mode automatic differentiation to arbitrary order.
//!
//! A [`DualN`] of order `n` is a flat array `[f(z), f'(z), ..., f⁽ⁿ⁾(z)]` of
//! complex coefficients. There is no nesting: a single array carries every
//! derivative, and composition with elementary functions goes through the
//! Faà di Bruno formula evaluated with partial Bell polynomials.
//!
//! Coefficient `k` holds the raw `k`-th derivative, not the scaled Taylor
//! coefficient `f⁽ᵏ⁾/k!`. Products therefore carry binomial weights (the
//! Leibniz rule), which differs from most truncated-Taylor libraries.
//!
//! ```
//! use flatdual::{Coefficient, DualN};
//!
//! // D^k (x * x) at x = 2
//! let x = DualN::variable(Coefficient::new(2.0, 0.0), 2).unwrap();
//! let y = &x * &x;
//! assert_eq!(y.coeffs()[0].re, 4.0);
//! assert_eq!(y.coeffs()[1].re, 4.0);
//! assert_eq!(y.coeffs()[2].re, 2.0);
//! ```
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod chain_rule;
pub mod combinatorics;
pub mod diff_ops;
mod dual;
mod error;
pub mod expr;
pub mod precision;
pub mod scalar;
pub mod transcendental;

pub use chain_rule::{dnd, lift, PrimitiveTable};
pub use combinatorics::{bell_partial, binomial, BellTable};
pub use diff_ops::{
    d1fscalar, d1fvector, d2fscalar, d2fscalar2, dual_matmul, dual_product, dual_sum, gradient,
    hessian, jacobian, mset_fpart, CMatrix, DiffKind, DiffResult, DualMatrix,
};
pub use dual::DualN;
pub use error::DualError;
pub use expr::{parse, Env, Expr, ExprError};
pub use precision::{Coefficient, Real};
