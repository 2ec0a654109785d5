use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Div, Mul, Neg, Sub};

use crate::chain_rule::lift;
use crate::error::DualError;
use crate::precision::{one, real, zero, Coefficient, Real};
use crate::transcendental;

/// Dual number of arbitrary order with complex coefficients.
///
/// `coeffs()[k]` is the `k`-th derivative of whatever function produced the
/// value, evaluated at the seed point. The order is carried per value; binary
/// operations require equal orders. The `try_*` methods report a mismatch as
/// [`DualError::OrderMismatch`], the operator impls panic on it.
///
/// Poles and branch points are not trapped: components become `inf`/`NaN`
/// and propagate.
#[derive(Debug, Clone, PartialEq)]
pub struct DualN {
    coeffs: Vec<Coefficient>,
}

impl DualN {
    /// `c` with every derivative zero.
    pub fn constant(c: Coefficient, order: usize) -> Self {
        let mut coeffs = vec![zero(); order + 1];
        coeffs[0] = c;
        DualN { coeffs }
    }

    /// The independent variable `z0 + 1·ε₁`. Evaluating a dualized `f` on it
    /// yields `[f(z0), f'(z0), ..., f⁽ⁿ⁾(z0)]`.
    pub fn variable(z0: Coefficient, order: usize) -> Result<Self, DualError> {
        if order == 0 {
            return Err(DualError::InvalidOrder {
                order,
                reason: "a variable needs at least one derivative slot",
            });
        }
        let mut d = Self::constant(z0, order);
        d.coeffs[1] = one();
        Ok(d)
    }

    /// Builds a value directly from its derivative table. Order is
    /// `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Coefficient>) -> Result<Self, DualError> {
        if coeffs.is_empty() {
            return Err(DualError::InvalidArgument(
                "a dual number needs at least one coefficient",
            ));
        }
        Ok(DualN { coeffs })
    }

    pub(crate) fn from_vec_unchecked(coeffs: Vec<Coefficient>) -> Self {
        debug_assert!(!coeffs.is_empty());
        DualN { coeffs }
    }

    /// Zero of the given order.
    pub fn zero(order: usize) -> Self {
        Self::constant(zero(), order)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    #[inline]
    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    /// The value component `f(z0)`.
    #[inline]
    pub fn value(&self) -> Coefficient {
        self.coeffs[0]
    }

    pub fn into_coeffs(self) -> Vec<Coefficient> {
        self.coeffs
    }

    pub fn part(&self, k: usize) -> Result<Coefficient, DualError> {
        self.coeffs
            .get(k)
            .copied()
            .ok_or(DualError::IndexOutOfRange {
                index: k,
                order: self.order(),
            })
    }

    /// Copy with component `k` replaced.
    pub fn with_part(&self, k: usize, c: Coefficient) -> Result<Self, DualError> {
        let mut out = self.clone();
        out.set_part(k, c)?;
        Ok(out)
    }

    pub fn set_part(&mut self, k: usize, c: Coefficient) -> Result<(), DualError> {
        let order = self.order();
        let slot = self
            .coeffs
            .get_mut(k)
            .ok_or(DualError::IndexOutOfRange { index: k, order })?;
        *slot = c;
        Ok(())
    }

    /// Truncates or zero-extends to order `m`.
    pub fn resize(&self, m: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(m + 1, zero());
        DualN { coeffs }
    }

    /// Returns true if every component is finite.
    pub fn is_finite(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.re.is_finite() && c.im.is_finite())
    }

    fn check_order(&self, other: &Self) -> Result<(), DualError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(DualError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, DualError> {
        self.check_order(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, DualError> {
        self.check_order(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    /// Leibniz product: `D^k(ab) = Σ C(k,i) a⁽ⁱ⁾ b⁽ᵏ⁻ⁱ⁾`.
    pub fn try_mul(&self, other: &Self) -> Result<Self, DualError> {
        self.check_order(other)?;
        let n = self.order();
        let a = &self.coeffs;
        let b = &other.coeffs;
        let mut out = Vec::with_capacity(n + 1);
        // Pascal row for the current k, updated in place.
        let mut row: Vec<Real> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            row.push(1.0);
            for i in (1..k).rev() {
                row[i] += row[i - 1];
            }
            let mut acc = zero();
            for i in 0..=k {
                acc += a[i] * b[k - i] * row[i];
            }
            out.push(acc);
        }
        Ok(DualN { coeffs: out })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, DualError> {
        self.check_order(other)?;
        self.try_mul(&other.inv())
    }

    /// `1/a`, the lift of `D^k(1/z) = (-1)^k k! z^{-(k+1)}`.
    pub fn inv(&self) -> Self {
        lift(&transcendental::inv_table, self)
    }

    /// `a^b = exp(b log a)` on the principal branch of `log`.
    pub fn try_pow(&self, exponent: &Self) -> Result<Self, DualError> {
        self.check_order(exponent)?;
        Ok(exponent.try_mul(&self.log())?.exp())
    }

    /// `a^m` by repeated Leibniz multiplication (square and multiply).
    pub fn pow_int(&self, m: u32) -> Self {
        let mut result = Self::constant(one(), self.order());
        let mut base = self.clone();
        let mut e = m;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Componentwise complex conjugate.
    pub fn conjg(&self) -> Self {
        self.map(|c| c.conj())
    }

    /// `sqrt(a * a)` with the principal square root. This is not
    /// `sqrt(a * conjg(a))`; it agrees with `|a|` only when the value
    /// component is real.
    pub fn absx(&self) -> Self {
        (self * self).sqrt()
    }

    pub fn scale(&self, c: Coefficient) -> Self {
        self.map(|a| a * c)
    }

    pub fn map(&self, f: impl Fn(Coefficient) -> Coefficient) -> Self {
        DualN {
            coeffs: self.coeffs.iter().map(|&c| f(c)).collect(),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Coefficient, Coefficient) -> Coefficient) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| f(a, b))
            .collect();
        DualN { coeffs }
    }
}

impl Neg for &DualN {
    type Output = DualN;
    fn neg(self) -> DualN {
        self.map(|c| -c)
    }
}

impl Neg for DualN {
    type Output = DualN;
    fn neg(self) -> DualN {
        -&self
    }
}

macro_rules! dual_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&DualN> for &DualN {
            type Output = DualN;
            fn $method(self, rhs: &DualN) -> DualN {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{}", e),
                }
            }
        }
        impl $trait<DualN> for DualN {
            type Output = DualN;
            fn $method(self, rhs: DualN) -> DualN {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&DualN> for DualN {
            type Output = DualN;
            fn $method(self, rhs: &DualN) -> DualN {
                (&self).$method(rhs)
            }
        }
        impl $trait<DualN> for &DualN {
            type Output = DualN;
            fn $method(self, rhs: DualN) -> DualN {
                self.$method(&rhs)
            }
        }
        // Scalars are promoted to constants at the dual operand's order.
        impl $trait<Coefficient> for &DualN {
            type Output = DualN;
            fn $method(self, rhs: Coefficient) -> DualN {
                self.$method(&DualN::constant(rhs, self.order()))
            }
        }
        impl $trait<Coefficient> for DualN {
            type Output = DualN;
            fn $method(self, rhs: Coefficient) -> DualN {
                (&self).$method(rhs)
            }
        }
        impl $trait<&DualN> for Coefficient {
            type Output = DualN;
            fn $method(self, rhs: &DualN) -> DualN {
                DualN::constant(self, rhs.order()).$method(rhs)
            }
        }
        impl $trait<DualN> for Coefficient {
            type Output = DualN;
            fn $method(self, rhs: DualN) -> DualN {
                self.$method(&rhs)
            }
        }
        impl $trait<Real> for &DualN {
            type Output = DualN;
            fn $method(self, rhs: Real) -> DualN {
                self.$method(real(rhs))
            }
        }
        impl $trait<Real> for DualN {
            type Output = DualN;
            fn $method(self, rhs: Real) -> DualN {
                (&self).$method(real(rhs))
            }
        }
        impl $trait<&DualN> for Real {
            type Output = DualN;
            fn $method(self, rhs: &DualN) -> DualN {
                real(self).$method(rhs)
            }
        }
        impl $trait<DualN> for Real {
            type Output = DualN;
            fn $method(self, rhs: DualN) -> DualN {
                real(self).$method(&rhs)
            }
        }
    };
}

dual_binop!(Add, add, try_add);
dual_binop!(Sub, sub, try_sub);
dual_binop!(Mul, mul, try_mul);
dual_binop!(Div, div, try_div);

impl From<DualN> for Vec<Coefficient> {
    fn from(d: DualN) -> Self {
        d.coeffs
    }
}
