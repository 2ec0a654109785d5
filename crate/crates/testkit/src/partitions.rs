use flatdual::{scalar, Coefficient, DualN};

use crate::OracleError;

fn c0() -> Coefficient {
    Coefficient::new(0.0, 0.0)
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

fn choose(n: usize, k: usize) -> f64 {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Partial Bell polynomial as the sum over set partitions of `{1..n}` into
/// exactly `k` blocks of `∏ x_{|block|}`.
///
/// Partitions are enumerated as restricted growth strings.
pub fn bell_oracle(n: usize, k: usize, x: &[Coefficient]) -> Result<Coefficient, OracleError> {
    if n > 10 || k > 10 {
        return Err(OracleError::Unsupported(
            "set-partition enumeration is capped at n, k <= 10",
        ));
    }
    if n == 0 {
        return Ok(if k == 0 {
            Coefficient::new(1.0, 0.0)
        } else {
            c0()
        });
    }
    if k == 0 || k > n {
        return Ok(c0());
    }
    let xs = |size: usize| x.get(size - 1).copied().unwrap_or_else(c0);
    let mut sizes = vec![0usize; k];
    let mut total = c0();
    enumerate(0, n, k, 0, &mut sizes, &mut |sizes| {
        total += sizes.iter().map(|&s| xs(s)).product::<Coefficient>();
    });
    Ok(total)
}

/// Assigns element `i` to an existing block or opens block `used`.
fn enumerate(
    i: usize,
    n: usize,
    k: usize,
    used: usize,
    sizes: &mut [usize],
    visit: &mut impl FnMut(&[usize]),
) {
    if i == n {
        if used == k {
            visit(sizes);
        }
        return;
    }
    // Not enough elements left to open the missing blocks.
    if k - used > n - i {
        return;
    }
    for b in 0..used {
        sizes[b] += 1;
        enumerate(i + 1, n, k, used, sizes, visit);
        sizes[b] -= 1;
    }
    if used < k {
        sizes[used] = 1;
        enumerate(i + 1, n, k, used + 1, sizes, visit);
        sizes[used] = 0;
    }
}

/// Multiplicities `k_1..k_n` of an integer partition of `n`:
/// `Σ j · k_j = n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionMultiset {
    counts: Vec<usize>,
}

impl PartitionMultiset {
    /// `counts[j - 1]` is the number of parts of size `j`.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts
            .iter()
            .enumerate()
            .map(|(j, k)| (j + 1) * k)
            .sum()
    }

    pub fn parts(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// All solutions of `k_1 + 2k_2 + ... + n k_n = n` in non-negative integers.
pub fn partition_multisets(n: usize) -> Vec<PartitionMultiset> {
    fn rec(j: usize, remaining: usize, counts: &mut Vec<usize>, out: &mut Vec<PartitionMultiset>) {
        if j == 0 {
            if remaining == 0 {
                out.push(PartitionMultiset {
                    counts: counts.clone(),
                });
            }
            return;
        }
        for kj in 0..=remaining / j {
            counts[j - 1] = kj;
            rec(j - 1, remaining - kj * j, counts, out);
        }
        counts[j - 1] = 0;
    }
    let mut out = Vec::new();
    let mut counts = vec![0; n];
    rec(n, n, &mut counts, &mut out);
    out
}

/// `Dⁿ f(g)` as the literal Faà di Bruno sum
/// `Σ n!/(k_1!...k_n!) f^{(k_1+...+k_n)}(g₀) ∏ (g^{(j)}/j!)^{k_j}`.
///
/// `f_table` holds `[f(g₀), f'(g₀), ...]` up to at least order `n`.
pub fn faa_di_bruno_oracle(
    f_table: &DualN,
    g: &DualN,
    n: usize,
) -> Result<Coefficient, OracleError> {
    if n > 8 {
        return Err(OracleError::Unsupported(
            "partition sum is capped at n <= 8",
        ));
    }
    if n > f_table.order() || n > g.order() {
        return Err(OracleError::Unsupported(
            "tables shorter than the requested order",
        ));
    }
    let f = f_table.coeffs();
    if n == 0 {
        return Ok(f[0]);
    }
    let gd = g.coeffs();
    let mut total = c0();
    for p in partition_multisets(n) {
        let mut term = Coefficient::new(factorial(n), 0.0) * f[p.parts()];
        for (j0, &kj) in p.counts().iter().enumerate() {
            let j = j0 + 1;
            term /= factorial(kj);
            term *= (gd[j] / factorial(j)).powi(kj as i32);
        }
        total += term;
    }
    Ok(total)
}

/// `Dⁿ asin z` from the recursion
/// `Dⁿ asin = -Σ_{k=1}^{n-1} C(n-1,k) D^k(s) D^{n-k}(asin) / s`,
/// `s = sqrt(1 - z²)`, with `D asin = 1/s`.
///
/// The derivatives of `s` come from differentiating `s² = 1 - z²`.
pub fn arcsin_recursion_oracle(z: Coefficient, n: usize) -> Coefficient {
    if n == 0 {
        return scalar::asin(z);
    }
    let one = Coefficient::new(1.0, 0.0);
    // p = 1 - z², p' = -2z, p'' = -2
    let p = |k: usize| match k {
        0 => one - z * z,
        1 => z * -2.0,
        2 => Coefficient::new(-2.0, 0.0),
        _ => c0(),
    };
    let mut s = vec![p(0).sqrt()];
    for m in 1..n {
        let mut acc = p(m);
        for k in 1..m {
            acc -= s[k] * s[m - k] * choose(m, k);
        }
        s.push(acc / (s[0] * 2.0));
    }
    let mut d = vec![scalar::asin(z), one / s[0]];
    for m in 2..=n {
        let mut acc = c0();
        for k in 1..m {
            acc += s[k] * d[m - k] * choose(m - 1, k);
        }
        d.push(-acc / s[0]);
    }
    d[n]
}
