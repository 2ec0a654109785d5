//! Working precision.
//!
//! Every coefficient in the crate is a [`Coefficient`]; swapping [`Real`]
//! for a wider float type is the single switch for a higher-precision build.
//! Orders around 100 start to lose accuracy in double precision.

use num_complex::Complex;

/// Real scalar type backing every coefficient.
pub type Real = f64;

/// Complex scalar stored in each slot of a dual number.
pub type Coefficient = Complex<Real>;

pub const PI: Real = core::f64::consts::PI;
pub const FRAC_PI_2: Real = core::f64::consts::FRAC_PI_2;

#[inline]
pub(crate) fn zero() -> Coefficient {
    Coefficient::new(0.0, 0.0)
}

#[inline]
pub(crate) fn one() -> Coefficient {
    Coefficient::new(1.0, 0.0)
}

#[inline]
pub(crate) fn real(x: Real) -> Coefficient {
    Coefficient::new(x, 0.0)
}
