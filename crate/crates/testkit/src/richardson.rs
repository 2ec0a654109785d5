use flatdual::Coefficient;

use crate::OracleError;

fn choose(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Base step per derivative order.
const BASE_STEP: [f64; 5] = [0.0, 0.08, 0.08, 0.08, 0.12];

/// Step halvings, so `LEVELS - 1` eliminations.
const LEVELS: usize = 4;

/// Central `k`-th difference, error expansion in even powers of `h`.
fn central(
    f: &impl Fn(Coefficient) -> Coefficient,
    x0: Coefficient,
    k: usize,
    h: f64,
) -> Coefficient {
    let mut acc = Coefficient::new(0.0, 0.0);
    for j in 0..=k {
        let offset = (k as f64 / 2.0 - j as f64) * h;
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        acc += f(x0 + offset) * (sign * choose(k, j));
    }
    acc / h.powi(k as i32)
}

/// `k`-th derivative (`k <= 4`) of `f` at `x0`, stepping along the real axis,
/// from central differences at `h, h/2, h/4, h/8` with Richardson
/// eliminations of the `h²`, `h⁴` and `h⁶` terms.
///
/// `f` should be analytic on a disk of radius about 0.5 around `x0`; the
/// widest stencil reaches 0.24 away.
pub fn richardson_diff(
    f: impl Fn(Coefficient) -> Coefficient,
    x0: Coefficient,
    k: usize,
) -> Result<Coefficient, OracleError> {
    if k > 4 {
        return Err(OracleError::Unsupported(
            "finite differences are capped at order 4",
        ));
    }
    if k == 0 {
        return Ok(f(x0));
    }
    let mut h = BASE_STEP[k];
    let mut t = Vec::with_capacity(LEVELS);
    for _ in 0..LEVELS {
        t.push(central(&f, x0, k, h));
        h /= 2.0;
    }
    let mut p = 4.0;
    while t.len() > 1 {
        t = t
            .windows(2)
            .map(|w| (w[1] * p - w[0]) / (p - 1.0))
            .collect();
        p *= 4.0;
    }
    Ok(t[0])
}

/// Hessian of `f` at `q` from four-point central mixed differences along the
/// real directions, with Richardson extrapolation over `h, h/2, h/4, h/8`.
#[allow(clippy::needless_range_loop)]
pub fn richardson_hessian(
    f: impl Fn(&[Coefficient]) -> Coefficient,
    q: &[Coefficient],
) -> Vec<Vec<Coefficient>> {
    let m = q.len();
    let at = |di: (usize, f64), dj: (usize, f64)| {
        let mut p = q.to_vec();
        p[di.0] += di.1;
        p[dj.0] += dj.1;
        f(&p)
    };
    let mut out = vec![vec![Coefficient::new(0.0, 0.0); m]; m];
    for i in 0..m {
        for j in i..m {
            let mut h = BASE_STEP[2];
            let mut t = Vec::with_capacity(LEVELS);
            for _ in 0..LEVELS {
                t.push(
                    (at((i, h), (j, h)) - at((i, h), (j, -h)) - at((i, -h), (j, h))
                        + at((i, -h), (j, -h)))
                        / (4.0 * h * h),
                );
                h /= 2.0;
            }
            let mut p = 4.0;
            while t.len() > 1 {
                t = t
                    .windows(2)
                    .map(|w| (w[1] * p - w[0]) / (p - 1.0))
                    .collect();
                p *= 4.0;
            }
            out[i][j] = t[0];
            out[j][i] = t[0];
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_second_derivative() {
        let d = richardson_diff(|z| z.exp(), Coefficient::new(0.0, 0.0), 2).unwrap();
        assert!((d.re - 1.0).abs() < 1e-8 && d.im.abs() < 1e-12);
    }

    #[test]
    fn sin_all_orders() {
        let x0 = Coefficient::new(0.7, 0.2);
        let expected = [x0.sin(), x0.cos(), -x0.sin(), -x0.cos(), x0.sin()];
        let tol = [0.0, 1e-12, 1e-10, 1e-8, 1e-7];
        for (k, e) in expected.iter().enumerate() {
            let d = richardson_diff(|z| z.sin(), x0, k).unwrap();
            assert!((d - e).norm() <= tol[k] * e.norm(), "k={k}: {d}");
        }
        assert!(richardson_diff(|z| z, x0, 5).is_err());
    }
}
