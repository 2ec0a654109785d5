//! Faà di Bruno chain rule.
//!
//! For an outer function known only through its derivative table at a point
//! and an inner function given as a [`DualN`],
//!
//! ```text
//! Dⁿ f(g) = Σ_{k=1}^{n} f⁽ᵏ⁾(g₀) · B_{n,k}(g', g'', ..., g⁽ⁿ⁻ᵏ⁺¹⁾)
//! ```
//!
//! [`dnd`] evaluates one component, [`lift`] all of them. Registering a new
//! elementary function only requires writing its [`PrimitiveTable`].

use alloc::vec::Vec;

use crate::combinatorics::{bell_partial, BellTable};
use crate::dual::DualN;
use crate::error::DualError;
use crate::precision::{zero, Coefficient};

/// Derivative table of a scalar function: `z ↦ [f(z), f'(z), ..., f⁽ⁿ⁾(z)]`
/// at the requested order `n`.
///
/// Implementations must return exactly order `n` and be free of side
/// effects; they may be called concurrently.
pub trait PrimitiveTable {
    fn table(&self, z: Coefficient, order: usize) -> DualN;
}

impl<F> PrimitiveTable for F
where
    F: Fn(Coefficient, usize) -> DualN,
{
    fn table(&self, z: Coefficient, order: usize) -> DualN {
        self(z, order)
    }
}

/// `Dⁿ f(g(x))` from the table of `f` and the dual number `g`.
pub fn dnd<F: PrimitiveTable + ?Sized>(
    f: &F,
    g: &DualN,
    n: usize,
) -> Result<Coefficient, DualError> {
    if n > g.order() {
        return Err(DualError::InvalidOrder {
            order: n,
            reason: "exceeds the order of the inner dual",
        });
    }
    let fvd = f.table(g.value(), n);
    if n == 0 {
        return Ok(fvd.value());
    }
    let gc = g.coeffs();
    let mut sum = zero();
    for k in 1..=n {
        let xvg = &gc[1..=n - k + 1];
        sum += fvd.coeffs()[k] * bell_partial(n as i64, k as i64, xvg)?;
    }
    Ok(sum)
}

/// The dual version of `f ∘ g`: component `k` is `dnd(f, g, k)`.
///
/// One Bell table over `g'..g⁽ⁿ⁾` serves every component, which is the same
/// arithmetic as calling [`dnd`] per component since `B_{n,k}` only reads
/// its first `n - k + 1` arguments.
pub fn lift<F: PrimitiveTable + ?Sized>(f: &F, g: &DualN) -> DualN {
    let order = g.order();
    let t = f.table(g.value(), order);
    debug_assert_eq!(t.order(), order, "primitive table returned the wrong order");
    let tc = t.coeffs();
    let bell = BellTable::new(order, order, &g.coeffs()[1..]);
    let mut out = Vec::with_capacity(order + 1);
    out.push(tc[0]);
    for n in 1..=order {
        let acc = (1..=n).fold(zero(), |acc, k| acc + tc[k] * bell.get(n, k));
        out.push(acc);
    }
    DualN::from_vec_unchecked(out)
}
