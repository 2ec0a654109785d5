//! Elementary functions on [`DualN`].
//!
//! Each function has a primitive derivative table (`*_table`) that is lifted
//! through [`lift`]. Closed forms are used where they exist (sin, cos, exp,
//! log, sqrt, inv, sinh, cosh). The inverse trigonometric and hyperbolic
//! tables instead evaluate their first derivative, e.g. `1/sqrt(1 - z²)`,
//! as a dual expression seeded at `z` with one order less; its components are
//! the remaining derivatives. `tan` and `tanh` are plain dual compositions.
//!
//! All value components use the principal branches of [`crate::scalar`].
//! Derivatives taken exactly on a branch cut follow whichever side the
//! principal square root picks and are not guaranteed to match the value
//! component's side.

use alloc::vec::Vec;

use crate::chain_rule::lift;
use crate::dual::DualN;
use crate::error::DualError;
use crate::precision::{one, zero, Coefficient, Real};
use crate::scalar;

fn from_fn(order: usize, f: impl FnMut(usize) -> Coefficient) -> DualN {
    DualN::from_vec_unchecked((0..=order).map(f).collect())
}

/// Seed `z + ε₁` at order `m`, or the bare constant when `m == 0`.
fn seed(z: Coefficient, m: usize) -> DualN {
    if m == 0 {
        DualN::constant(z, 0)
    } else {
        let mut d = DualN::constant(z, m);
        d.set_part(1, one()).expect("order >= 1");
        d
    }
}

/// Table of a function whose value is `value` and whose first derivative,
/// as a dual function of the seed, is `derivative`.
fn table_from_derivative(
    value: Coefficient,
    z: Coefficient,
    order: usize,
    derivative: impl Fn(&DualN) -> DualN,
) -> DualN {
    let mut out = Vec::with_capacity(order + 1);
    out.push(value);
    if order > 0 {
        let d = derivative(&seed(z, order - 1));
        out.extend_from_slice(d.coeffs());
    }
    DualN::from_vec_unchecked(out)
}

/// `D^k(1/z) = (-1)^k k! z^{-(k+1)}`.
pub fn inv_table(z: Coefficient, order: usize) -> DualN {
    let r = one() / z;
    let mut t = r;
    from_fn(order, |k| {
        let cur = t;
        t = t * r * -((k + 1) as Real);
        cur
    })
}

pub fn exp_table(z: Coefficient, order: usize) -> DualN {
    let e = scalar::exp(z);
    from_fn(order, |_| e)
}

/// `[Log z, 1/z, -1/z², 2/z³, ...]`, entry `k` being `(-1)^{k-1} (k-1)! z^{-k}`.
pub fn log_table(z: Coefficient, order: usize) -> DualN {
    let r = one() / z;
    let mut t = r;
    from_fn(order, |k| {
        if k == 0 {
            return scalar::ln(z);
        }
        let cur = t;
        t = t * r * -(k as Real);
        cur
    })
}

/// Entry `k` is `(½)(½ - 1)...(½ - k + 1) z^{½ - k}` on the principal branch.
pub fn sqrt_table(z: Coefficient, order: usize) -> DualN {
    let r = one() / z;
    let mut t = scalar::sqrt(z);
    from_fn(order, |k| {
        let cur = t;
        t = t * r * (0.5 - k as Real);
        cur
    })
}

/// `D^k sin z = sin(z + kπ/2)`, as the exact four-cycle.
pub fn sin_table(z: Coefficient, order: usize) -> DualN {
    let (s, c) = (scalar::sin(z), scalar::cos(z));
    let cycle = [s, c, -s, -c];
    from_fn(order, |k| cycle[k % 4])
}

/// `D^k cos z = cos(z + kπ/2)`.
pub fn cos_table(z: Coefficient, order: usize) -> DualN {
    let (s, c) = (scalar::sin(z), scalar::cos(z));
    let cycle = [c, -s, -c, s];
    from_fn(order, |k| cycle[k % 4])
}

pub fn sinh_table(z: Coefficient, order: usize) -> DualN {
    let (s, c) = (scalar::sinh(z), scalar::cosh(z));
    from_fn(order, |k| if k % 2 == 0 { s } else { c })
}

pub fn cosh_table(z: Coefficient, order: usize) -> DualN {
    let (s, c) = (scalar::sinh(z), scalar::cosh(z));
    from_fn(order, |k| if k % 2 == 0 { c } else { s })
}

/// Value `asin z`; derivatives from the dual form of `1/sqrt(1 - z²)`.
pub fn asin_table(z: Coefficient, order: usize) -> DualN {
    table_from_derivative(scalar::asin(z), z, order, |s| (1.0 - s * s).sqrt().inv())
}

/// Value `acos z = π/2 - asin z`; derivatives are those of asin negated.
pub fn acos_table(z: Coefficient, order: usize) -> DualN {
    table_from_derivative(scalar::acos(z), z, order, |s| -(1.0 - s * s).sqrt().inv())
}

/// Value `atan z`; derivatives from the dual form of `1/(1 + z²)`.
pub fn atan_table(z: Coefficient, order: usize) -> DualN {
    table_from_derivative(scalar::atan(z), z, order, |s| (1.0 + s * s).inv())
}

pub fn asinh_table(z: Coefficient, order: usize) -> DualN {
    table_from_derivative(scalar::asinh(z), z, order, |s| (s * s + 1.0).sqrt().inv())
}

/// Derivative `1/(sqrt(z - 1) sqrt(z + 1))`, which matches the principal
/// `acosh` on the whole plane (unlike `1/sqrt(z² - 1)` for `Re z < 0`).
pub fn acosh_table(z: Coefficient, order: usize) -> DualN {
    table_from_derivative(scalar::acosh(z), z, order, |s| {
        ((s - 1.0).sqrt() * (s + 1.0).sqrt()).inv()
    })
}

pub fn atanh_table(z: Coefficient, order: usize) -> DualN {
    table_from_derivative(scalar::atanh(z), z, order, |s| (1.0 - s * s).inv())
}

impl DualN {
    pub fn sin(&self) -> DualN {
        lift(&sin_table, self)
    }

    pub fn cos(&self) -> DualN {
        lift(&cos_table, self)
    }

    /// `sin · inv(cos)`.
    pub fn tan(&self) -> DualN {
        self.sin() * self.cos().inv()
    }

    pub fn exp(&self) -> DualN {
        lift(&exp_table, self)
    }

    /// Principal logarithm.
    pub fn log(&self) -> DualN {
        lift(&log_table, self)
    }

    /// Principal square root.
    pub fn sqrt(&self) -> DualN {
        lift(&sqrt_table, self)
    }

    /// Principal arcsine; `asin(1.1)` has a positive imaginary part.
    pub fn asin(&self) -> DualN {
        lift(&asin_table, self)
    }

    pub fn acos(&self) -> DualN {
        lift(&acos_table, self)
    }

    pub fn atan(&self) -> DualN {
        lift(&atan_table, self)
    }

    pub fn sinh(&self) -> DualN {
        lift(&sinh_table, self)
    }

    pub fn cosh(&self) -> DualN {
        lift(&cosh_table, self)
    }

    /// `sinh · inv(cosh)`.
    pub fn tanh(&self) -> DualN {
        self.sinh() * self.cosh().inv()
    }

    pub fn asinh(&self) -> DualN {
        lift(&asinh_table, self)
    }

    pub fn acosh(&self) -> DualN {
        lift(&acosh_table, self)
    }

    pub fn atanh(&self) -> DualN {
        lift(&atanh_table, self)
    }
}

/// Two-argument arctangent of dual numbers.
///
/// The value component is [`scalar::atan2`] of the value components. The
/// higher components come from `atan(y/x)`, or from `-atan(x/y)` when
/// `x₀ = 0`; both differ from `atan2` only by a constant.
pub fn atan2(y: &DualN, x: &DualN) -> Result<DualN, DualError> {
    if y.order() != x.order() {
        return Err(DualError::OrderMismatch {
            left: y.order(),
            right: x.order(),
        });
    }
    let mut d = if x.value() == zero() {
        -(x / y).atan()
    } else {
        (y / x).atan()
    };
    d.set_part(0, scalar::atan2(y.value(), x.value()))?;
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::{FRAC_PI_2, PI};

    fn c(re: Real) -> Coefficient {
        Coefficient::new(re, 0.0)
    }

    fn assert_close(a: &[Coefficient], b: &[Coefficient], tol: Real) {
        assert_eq!(a.len(), b.len());
        for (k, (x, y)) in a.iter().zip(b).enumerate() {
            assert!(
                (x - y).norm() <= tol * (1.0 + y.norm()),
                "component {k}: {x} vs {y}"
            );
        }
    }

    fn var(z: Real, n: usize) -> DualN {
        DualN::variable(c(z), n).unwrap()
    }

    #[test]
    fn sin_examples() {
        let z0 = Coefficient::new(0.4, 0.3);
        let r = DualN::variable(z0, 2).unwrap().sin();
        assert_eq!(r.coeffs(), &[z0.sin(), z0.cos(), -z0.sin()]);
        assert_eq!(DualN::constant(c(0.0), 3).sin(), DualN::zero(3));
    }

    #[test]
    fn exp_at_high_order() {
        let r = var(1.1, 100).exp();
        let e = 1.1f64.exp();
        assert!(r
            .coeffs()
            .iter()
            .all(|x| (x.re - e).abs() <= 1e-12 * e && x.im == 0.0));
        assert!((e - 3.00417).abs() < 1e-5);
    }

    #[test]
    fn log_and_sqrt_closed_forms() {
        assert_close(
            var(2.0, 2).log().coeffs(),
            &[c(2.0f64.ln()), c(0.5), c(-0.25)],
            1e-15,
        );
        assert_close(
            DualN::constant(c(4.0), 2).sqrt().coeffs(),
            &[c(2.0), c(0.0), c(0.0)],
            1e-15,
        );
        assert_close(
            var(4.0, 2).sqrt().coeffs(),
            &[c(2.0), c(0.25), c(-0.03125)],
            1e-15,
        );
    }

    #[test]
    fn exp_log_round_trip() {
        let s = var(0.7, 5);
        assert_close(s.exp().log().coeffs(), s.coeffs(), 1e-12);
        let s = var(1.3, 4);
        assert_close(s.log().exp().coeffs(), s.coeffs(), 1e-12);
    }

    #[test]
    fn asin_examples() {
        let v = DualN::constant(c(1.1), 0).asin().value();
        assert_eq!(
            alloc::format!("{:.4}+{:.5}i", v.re, v.im),
            "1.5708+0.44357i"
        );
        let r = var(0.5, 1).asin();
        assert_close(r.coeffs(), &[c(PI / 6.0), c(1.0 / 0.75f64.sqrt())], 1e-14);
        let s = var(0.3, 4);
        assert_close(s.asin().sin().coeffs(), s.coeffs(), 1e-11);
    }

    #[test]
    fn asin_second_derivative() {
        // d²/dz² asin z = z (1 - z²)^{-3/2}
        let r = var(0.5, 2).asin();
        assert!((r.coeffs()[2].re - 0.5 * 0.75f64.powf(-1.5)).abs() < 1e-14);
    }

    #[test]
    fn acos_is_complement() {
        let s = DualN::variable(Coefficient::new(0.2, -0.4), 5).unwrap();
        let sum = s.acos() + s.asin();
        assert_close(
            sum.coeffs(),
            DualN::constant(c(FRAC_PI_2), 5).coeffs(),
            1e-13,
        );
    }

    #[test]
    fn atan2_examples() {
        let r = atan2(&DualN::constant(c(1.0), 1), &DualN::constant(c(1.0), 1)).unwrap();
        assert_close(r.coeffs(), &[c(PI / 4.0), c(0.0)], 1e-15);
        let r = atan2(&DualN::constant(c(1.0), 1), &DualN::constant(c(-1.0), 1)).unwrap();
        assert!((r.value().re - 3.0 * PI / 4.0).abs() < 1e-15);
        let r = atan2(&var(1.0, 1), &DualN::constant(c(2.0), 1)).unwrap();
        assert_close(r.coeffs(), &[c(0.5f64.atan()), c(0.4)], 1e-15);
        assert!(atan2(&var(1.0, 1), &DualN::constant(c(2.0), 2)).is_err());
    }

    #[test]
    fn atan2_on_the_y_axis() {
        // x = 0, y = 2 + ε: value π/2, d/dy atan2(y, 0) = 0
        let r = atan2(&var(2.0, 2), &DualN::constant(c(0.0), 2)).unwrap();
        assert!(r.is_finite());
        assert_close(r.coeffs(), &[c(FRAC_PI_2), c(0.0), c(0.0)], 1e-15);
        // y = 2, x = 0 + ε: d/dx atan2(2, x) = -y/(x²+y²) = -1/2
        let r = atan2(&DualN::constant(c(2.0), 1), &var(0.0, 1)).unwrap();
        assert_close(r.coeffs(), &[c(FRAC_PI_2), c(-0.5)], 1e-15);
        let origin = atan2(&DualN::constant(c(0.0), 1), &DualN::constant(c(0.0), 1)).unwrap();
        assert!(!origin.is_finite());
    }

    #[test]
    fn tan_and_tanh_compositions() {
        // D tan = 1 + tan², D tanh = 1 - tanh²
        let t = var(0.4, 1).tan();
        let v = 0.4f64.tan();
        assert_close(t.coeffs(), &[c(v), c(1.0 + v * v)], 1e-14);
        let t = var(0.4, 1).tanh();
        let v = 0.4f64.tanh();
        assert_close(t.coeffs(), &[c(v), c(1.0 - v * v)], 1e-14);
    }

    #[test]
    fn pole_propagates() {
        assert!(!DualN::constant(c(0.0), 2).log().is_finite());
        assert!(!var(0.0, 2).sqrt().is_finite());
        assert!(!var(1.0, 2).asin().is_finite());
    }
}
