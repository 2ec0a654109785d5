//! Principal-branch complex elementary functions.
//!
//! Branch cuts follow the C99 / Python `cmath` / modern Fortran convention,
//! including signed zeros on the cuts: `asin(1.1 + 0i)` has a positive
//! imaginary part, `asin(1.1 - 0i)` a negative one. Multiplications by `±i`
//! and shifts by real constants are done on the components directly so the
//! sign of a zero imaginary part survives into the cut selection.

use crate::precision::{Coefficient, Real, FRAC_PI_2, PI};

#[inline]
fn mul_i(z: Coefficient) -> Coefficient {
    Coefficient::new(-z.im, z.re)
}

#[inline]
fn mul_neg_i(z: Coefficient) -> Coefficient {
    Coefficient::new(z.im, -z.re)
}

#[inline]
fn add_real(z: Coefficient, x: Real) -> Coefficient {
    Coefficient::new(z.re + x, z.im)
}

#[inline]
fn real_sub(x: Real, z: Coefficient) -> Coefficient {
    Coefficient::new(x - z.re, -z.im)
}

pub fn sqrt(z: Coefficient) -> Coefficient {
    z.sqrt()
}

/// Principal logarithm, imaginary part in `(-π, π]` (`-π` for `x - 0i`, `x < 0`).
pub fn ln(z: Coefficient) -> Coefficient {
    z.ln()
}

pub fn exp(z: Coefficient) -> Coefficient {
    z.exp()
}

pub fn sin(z: Coefficient) -> Coefficient {
    z.sin()
}

pub fn cos(z: Coefficient) -> Coefficient {
    z.cos()
}

pub fn tan(z: Coefficient) -> Coefficient {
    z.sin() / z.cos()
}

pub fn sinh(z: Coefficient) -> Coefficient {
    z.sinh()
}

pub fn cosh(z: Coefficient) -> Coefficient {
    z.cosh()
}

pub fn tanh(z: Coefficient) -> Coefficient {
    z.sinh() / z.cosh()
}

/// `asinh z = log(z + sqrt(z² + 1))`, evaluated in the right half-plane and
/// extended by oddness so no cancellation occurs.
pub fn asinh(z: Coefficient) -> Coefficient {
    if z.re.is_sign_negative() {
        return -asinh(-z);
    }
    ln(z + sqrt(add_real(z * z, 1.0)))
}

/// `asin z = -i asinh(i z)`. Cuts `(-∞, -1)` and `(1, ∞)`.
pub fn asin(z: Coefficient) -> Coefficient {
    mul_neg_i(asinh(mul_i(z)))
}

/// `acos z = π/2 - asin z`.
pub fn acos(z: Coefficient) -> Coefficient {
    real_sub(FRAC_PI_2, asin(z))
}

/// `atanh z = ½ [log(1 + z) - log(1 - z)]`. Cuts `(-∞, -1)` and `(1, ∞)`.
pub fn atanh(z: Coefficient) -> Coefficient {
    (ln(add_real(z, 1.0)) - ln(real_sub(1.0, z))) * 0.5
}

/// `atan z = -i atanh(i z)`. Cuts on the imaginary axis beyond `±i`.
pub fn atan(z: Coefficient) -> Coefficient {
    mul_neg_i(atanh(mul_i(z)))
}

/// `acosh z = log(z + sqrt(z + 1) sqrt(z - 1))`, the principal branch with
/// real part ≥ 0. Cut `(-∞, 1)`.
pub fn acosh(z: Coefficient) -> Coefficient {
    ln(z + sqrt(add_real(z, 1.0)) * sqrt(add_real(z, -1.0)))
}

/// Quadrant-aware `atan(y / x)`.
///
/// The real parts choose the quadrant, so for real arguments this is the
/// ordinary two-argument arctangent. On `Re x = 0` the result is
/// `±π/2 - atan(x / y)`; at the origin the result is not finite.
pub fn atan2(y: Coefficient, x: Coefficient) -> Coefficient {
    if x.re > 0.0 {
        atan(y / x)
    } else if x.re < 0.0 {
        let shift = if y.re.is_sign_negative() { -PI } else { PI };
        add_real(atan(y / x), shift)
    } else if y.re > 0.0 {
        real_sub(FRAC_PI_2, atan(x / y))
    } else if y.re < 0.0 {
        real_sub(-FRAC_PI_2, atan(x / y))
    } else {
        // Both real parts zero: fall back to the plain quotient, which is
        // non-finite at the origin.
        atan(y / x)
    }
}
