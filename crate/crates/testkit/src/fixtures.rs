use flatdual::{Coefficient, DualN};

pub type DualFn = fn(&DualN) -> DualN;

/// A function, its principal inverse, and interior boxes (real range,
/// imaginary half-width) on which each composition order is sampled.
pub struct InversePair {
    pub name: &'static str,
    pub forward: DualFn,
    pub inverse: DualFn,
    /// Seeds for `inverse(forward(s))`.
    pub forward_first: (f64, f64),
    /// Seeds for `forward(inverse(s))`.
    pub inverse_first: (f64, f64),
}

const IMAG_HALF_WIDTH: f64 = 0.1;

pub fn inverse_pairs() -> [InversePair; 6] {
    [
        InversePair {
            name: "exp/log",
            forward: DualN::exp,
            inverse: DualN::log,
            forward_first: (-1.0, 1.0),
            inverse_first: (1.0, 2.5),
        },
        InversePair {
            name: "sin/asin",
            forward: DualN::sin,
            inverse: DualN::asin,
            forward_first: (-0.5, 0.5),
            inverse_first: (-0.5, 0.5),
        },
        InversePair {
            name: "tan/atan",
            forward: DualN::tan,
            inverse: DualN::atan,
            forward_first: (-0.4, 0.4),
            inverse_first: (-0.5, 0.5),
        },
        InversePair {
            name: "sinh/asinh",
            forward: DualN::sinh,
            inverse: DualN::asinh,
            forward_first: (-0.5, 0.5),
            inverse_first: (-0.5, 0.5),
        },
        InversePair {
            name: "cosh/acosh",
            forward: DualN::cosh,
            inverse: DualN::acosh,
            forward_first: (1.3, 2.0),
            inverse_first: (1.6, 2.6),
        },
        InversePair {
            name: "tanh/atanh",
            forward: DualN::tanh,
            inverse: DualN::atanh,
            forward_first: (-0.5, 0.5),
            inverse_first: (-0.3, 0.3),
        },
    ]
}

/// `count` points spread over a box: real part on an even grid, imaginary
/// part cycling through `-w, 0, w`.
pub fn interior_points(range: (f64, f64), count: usize) -> Vec<Coefficient> {
    (0..count)
        .map(|i| {
            let t = if count > 1 {
                i as f64 / (count - 1) as f64
            } else {
                0.5
            };
            let im = [-IMAG_HALF_WIDTH, 0.0, IMAG_HALF_WIDTH][i % 3];
            Coefficient::new(range.0 + (range.1 - range.0) * t, im)
        })
        .collect()
}

/// `(k/10 + i)` for `k = 1..=m`.
pub fn tenths_plus_i(m: usize) -> Vec<Coefficient> {
    (1..=m)
        .map(|k| Coefficient::new(k as f64 / 10.0, 1.0))
        .collect()
}

/// `sin(xyz) + cos(xyz)`.
pub fn fstest(r: &[DualN]) -> DualN {
    let p = &(&r[0] * &r[1]) * &r[2];
    p.sin() + p.cos()
}

pub fn fstest_scalar(r: &[Coefficient]) -> Coefficient {
    let p = r[0] * r[1] * r[2];
    flatdual::scalar::sin(p) + flatdual::scalar::cos(p)
}

/// Analytic gradient of [`fstest`]: `(cos p - sin p) · (yz, xz, xy)`.
pub fn fstest_gradient(r: &[Coefficient]) -> Vec<Coefficient> {
    let p = r[0] * r[1] * r[2];
    let d = flatdual::scalar::cos(p) - flatdual::scalar::sin(p);
    vec![d * r[1] * r[2], d * r[0] * r[2], d * r[0] * r[1]]
}

/// `[sin(xyzw), cos(xyzw)·sqrt(w/y - x/z), sin(log(xyzw))]`.
pub fn fvectest(r: &[DualN]) -> Vec<DualN> {
    let (x, y, z, w) = (&r[0], &r[1], &r[2], &r[3]);
    let p = &(&(x * y) * z) * w;
    vec![
        p.sin(),
        &p.cos() * &(&(w / y) - &(x / z)).sqrt(),
        p.log().sin(),
    ]
}
