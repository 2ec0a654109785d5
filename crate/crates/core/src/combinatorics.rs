//! Binomial coefficients and partial Bell polynomials.
//!
//! Binomials are floating point: at the orders this crate targets (around
//! 100) they overflow 64-bit integers long before they lose precision.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::DualError;
use crate::precision::{one, zero, Coefficient, Real};

/// `C(m, n)` by the multiplicative formula.
///
/// Returns `0` when `n < 0` or `n > m`. Exact while the result fits in the
/// 53-bit mantissa; relative error stays below `1e-12` for `m <= 200`.
pub fn binomial(m: i64, n: i64) -> Real {
    if n < 0 || m < 0 || n > m {
        return 0.0;
    }
    let n = n.min(m - n);
    let mut r: Real = 1.0;
    for i in 1..=n {
        r = r * (m - n + i) as Real / i as Real;
    }
    r
}

/// Rows `0..rows` of Pascal's triangle, row `r` holding `C(r, 0..=r)`.
pub(crate) fn pascal_triangle(rows: usize) -> Vec<Vec<Real>> {
    let mut tri: Vec<Vec<Real>> = Vec::with_capacity(rows);
    for r in 0..rows {
        let mut row = vec![1.0; r + 1];
        if r >= 2 {
            let prev = &tri[r - 1];
            for i in 1..r {
                row[i] = prev[i - 1] + prev[i];
            }
        }
        tri.push(row);
    }
    tri
}

/// All partial Bell polynomials `B_{n,k}(x₁, x₂, ...)` for `n <= max_n`,
/// `k <= max_k`, sharing one argument vector.
///
/// Built with the recurrence
/// `B_{n,k} = Σ_{i=0}^{n-k} C(n-1, i) x_{i+1} B_{n-i-1, k-1}`
/// from `B_{0,0} = 1`, `B_{n,0} = 0` (n ≥ 1), `B_{0,k} = 0` (k ≥ 1).
/// Arguments beyond the end of `x` are taken as zero.
#[derive(Debug, Clone)]
pub struct BellTable {
    max_n: usize,
    max_k: usize,
    cells: Vec<Coefficient>,
}

impl BellTable {
    pub fn new(max_n: usize, max_k: usize, x: &[Coefficient]) -> Self {
        let width = max_k + 1;
        let mut cells = vec![zero(); (max_n + 1) * width];
        cells[0] = one();
        // Zero-padded copy so that every x_{i+1} with i <= max_n - 1 exists.
        let mut xs = vec![zero(); max_n.max(x.len())];
        xs[..x.len()].copy_from_slice(x);
        let tri = pascal_triangle(max_n);

        for n in 1..=max_n {
            let binom = &tri[n - 1];
            for k in 1..=max_k.min(n) {
                let mut acc = zero();
                for i in 0..=(n - k) {
                    let prev = cells[(n - 1 - i) * width + (k - 1)];
                    acc += xs[i] * prev * binom[i];
                }
                cells[n * width + k] = acc;
            }
        }
        BellTable {
            max_n,
            max_k,
            cells,
        }
    }

    /// `B_{n,k}`; zero outside the tabulated range when `k > n`.
    pub fn get(&self, n: usize, k: usize) -> Coefficient {
        assert!(
            n <= self.max_n && k <= self.max_k,
            "Bell index ({n}, {k}) outside table"
        );
        self.cells[n * (self.max_k + 1) + k]
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn max_k(&self) -> usize {
        self.max_k
    }
}

/// Partial Bell polynomial `B_{n,k}(x₁, ..., x_{n-k+1})`.
///
/// A short `x` is zero-padded. Negative `n` or `k` is rejected.
pub fn bell_partial(n: i64, k: i64, x: &[Coefficient]) -> Result<Coefficient, DualError> {
    if n < 0 || k < 0 {
        return Err(DualError::InvalidArgument(
            "Bell polynomial indices must be non-negative",
        ));
    }
    let (n, k) = (n as usize, k as usize);
    if k > n {
        return Ok(zero());
    }
    Ok(BellTable::new(n, k, x).get(n, k))
}
