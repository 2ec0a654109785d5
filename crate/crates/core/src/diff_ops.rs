//! Directional derivatives, gradients, Jacobians and Hessians.
//!
//! Everything here is built from a single seed direction: the inputs are
//! set to `x_i = q_i + v_i ε₁` and the field is evaluated once. Component 1
//! of the output is then `v · ∇f(q)` (or `J(q) v` for vector fields), and at
//! order 2 component 2 is `vᵀ H(q) v`. Mixed second directions `uᵀ H v` come
//! from the polarization identity, so no multi-ε algebra is needed.
//!
//! Fields must be reentrant; they are called once per seed direction.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use crate::dual::DualN;
use crate::error::DualError;
use crate::precision::{zero, Coefficient};

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Coefficient>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: vec![zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<Coefficient>]) -> Result<Self, DualError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(DualError::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(CMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[Coefficient] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Coefficient] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Coefficient]) -> Result<Vec<Coefficient>, DualError> {
        if v.len() != self.cols {
            return Err(DualError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Coefficient;
    fn index(&self, (i, j): (usize, usize)) -> &Coefficient {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Coefficient {
        assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Which operator produced a [`DiffResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiffKind {
    Gradient,
    Jacobian,
    Hessian,
    Directional,
}

impl DiffKind {
    pub fn name(self) -> &'static str {
        match self {
            DiffKind::Gradient => "gradient",
            DiffKind::Jacobian => "jacobian",
            DiffKind::Hessian => "hessian",
            DiffKind::Directional => "directional",
        }
    }
}

/// Operator output with the point it was evaluated at. `values` is
/// row-major with the given `shape`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiffResult {
    pub kind: DiffKind,
    pub shape: Vec<usize>,
    pub values: Vec<Coefficient>,
    pub point: Vec<Coefficient>,
}

impl DiffResult {
    pub fn from_vector(kind: DiffKind, values: Vec<Coefficient>, point: &[Coefficient]) -> Self {
        DiffResult {
            kind,
            shape: vec![values.len()],
            values,
            point: point.to_vec(),
        }
    }

    pub fn from_matrix(kind: DiffKind, m: CMatrix, point: &[Coefficient]) -> Self {
        DiffResult {
            kind,
            shape: vec![m.rows, m.cols],
            values: m.data,
            point: point.to_vec(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.values
            .iter()
            .all(|c| c.re.is_finite() && c.im.is_finite())
    }
}

fn check_len(expected: usize, found: usize) -> Result<(), DualError> {
    if expected == found {
        Ok(())
    } else {
        Err(DualError::DimensionMismatch { expected, found })
    }
}

/// `x_i = q_i + v_i ε₁` at the given order.
fn seed_along(v: &[Coefficient], q: &[Coefficient], order: usize) -> Vec<DualN> {
    q.iter()
        .zip(v)
        .map(|(&qi, &vi)| {
            let mut d = DualN::constant(qi, order);
            if order > 0 {
                d.set_part(1, vi).expect("order >= 1");
            }
            d
        })
        .collect()
}

fn unit(m: usize, i: usize) -> Vec<Coefficient> {
    let mut e = vec![zero(); m];
    e[i] = Coefficient::new(1.0, 0.0);
    e
}

fn component<F>(
    f: &F,
    v: &[Coefficient],
    q: &[Coefficient],
    order: usize,
) -> Result<Coefficient, DualError>
where
    F: Fn(&[DualN]) -> DualN + ?Sized,
{
    check_len(q.len(), v.len())?;
    f(&seed_along(v, q, order)).part(order)
}

/// First-order directional derivative `v · ∇f(q)`.
pub fn d1fscalar<F>(f: &F, v: &[Coefficient], q: &[Coefficient]) -> Result<Coefficient, DualError>
where
    F: Fn(&[DualN]) -> DualN + ?Sized,
{
    component(f, v, q, 1)
}

/// Second-order directional derivative `vᵀ H(q) v`, one order-2 evaluation.
pub fn d2fscalar<F>(f: &F, v: &[Coefficient], q: &[Coefficient]) -> Result<Coefficient, DualError>
where
    F: Fn(&[DualN]) -> DualN + ?Sized,
{
    component(f, v, q, 2)
}

/// Mixed second derivative `uᵀ H(q) v` by polarization:
/// `¼ [(u+v)ᵀH(u+v) - (u-v)ᵀH(u-v)]`.
pub fn d2fscalar2<F>(
    f: &F,
    u: &[Coefficient],
    v: &[Coefficient],
    q: &[Coefficient],
) -> Result<Coefficient, DualError>
where
    F: Fn(&[DualN]) -> DualN + ?Sized,
{
    check_len(q.len(), u.len())?;
    check_len(q.len(), v.len())?;
    let plus: Vec<_> = u.iter().zip(v).map(|(a, b)| a + b).collect();
    let minus: Vec<_> = u.iter().zip(v).map(|(a, b)| a - b).collect();
    Ok((d2fscalar(f, &plus, q)? - d2fscalar(f, &minus, q)?) * 0.25)
}

/// Jacobian-vector product `J(q) v` for a field with `n` outputs.
pub fn d1fvector<F>(
    f: &F,
    v: &[Coefficient],
    q: &[Coefficient],
    n: usize,
) -> Result<Vec<Coefficient>, DualError>
where
    F: Fn(&[DualN]) -> Vec<DualN> + ?Sized,
{
    check_len(q.len(), v.len())?;
    let out = f(&seed_along(v, q, 1));
    check_len(n, out.len())?;
    out.iter().map(|d| d.part(1)).collect()
}

/// `∇f(q)`, one order-1 evaluation per coordinate.
pub fn gradient<F>(f: &F, q: &[Coefficient]) -> Result<Vec<Coefficient>, DualError>
where
    F: Fn(&[DualN]) -> DualN + ?Sized,
{
    (0..q.len())
        .map(|i| d1fscalar(f, &unit(q.len(), i), q))
        .collect()
}

/// The `n × m` Jacobian, column `j` being `J e_j`.
pub fn jacobian<F>(f: &F, q: &[Coefficient], n: usize) -> Result<CMatrix, DualError>
where
    F: Fn(&[DualN]) -> Vec<DualN> + ?Sized,
{
    let m = q.len();
    let mut jac = CMatrix::zeros(n, m);
    for j in 0..m {
        let col = d1fvector(f, &unit(m, j), q, n)?;
        for (i, c) in col.into_iter().enumerate() {
            jac[(i, j)] = c;
        }
    }
    Ok(jac)
}

/// The `m × m` Hessian.
///
/// Diagonal entries are `e_iᵀ H e_i`. Off-diagonal entries reuse them through
/// `H_ij = ½ [(e_i+e_j)ᵀ H (e_i+e_j) - H_ii - H_jj]`, so the whole matrix
/// costs `m(m+1)/2` order-2 evaluations. The lower triangle is a copy of the
/// upper one, so the result is exactly symmetric.
pub fn hessian<F>(f: &F, q: &[Coefficient]) -> Result<CMatrix, DualError>
where
    F: Fn(&[DualN]) -> DualN + ?Sized,
{
    let m = q.len();
    let mut h = CMatrix::zeros(m, m);
    for i in 0..m {
        h[(i, i)] = d2fscalar(f, &unit(m, i), q)?;
    }
    for i in 0..m {
        for j in (i + 1)..m {
            let mut dir = unit(m, i);
            dir[j] = Coefficient::new(1.0, 0.0);
            let both = d2fscalar(f, &dir, q)?;
            let hij = (both - h[(i, i)] - h[(j, j)]) * 0.5;
            h[(i, j)] = hij;
            h[(j, i)] = hij;
        }
    }
    Ok(h)
}

/// Row-major matrix of dual numbers sharing one order.
#[derive(Debug, Clone, PartialEq)]
pub struct DualMatrix {
    rows: usize,
    cols: usize,
    data: Vec<DualN>,
}

impl DualMatrix {
    pub fn from_rows(rows: Vec<Vec<DualN>>) -> Result<Self, DualError> {
        let cols = rows.first().map_or(0, Vec::len);
        let order = rows.first().and_then(|r| r.first()).map(DualN::order);
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for r in rows {
            check_len(cols, r.len())?;
            for d in r {
                if let Some(o) = order {
                    if d.order() != o {
                        return Err(DualError::OrderMismatch {
                            left: o,
                            right: d.order(),
                        });
                    }
                }
                data.push(d);
            }
        }
        Ok(DualMatrix {
            rows: n_rows,
            cols,
            data,
        })
    }

    /// Identity of the given size and order.
    pub fn identity(size: usize, order: usize) -> Self {
        let data = (0..size * size)
            .map(|idx| {
                let v = if idx / size == idx % size { 1.0 } else { 0.0 };
                DualN::constant(Coefficient::new(v, 0.0), order)
            })
            .collect();
        DualMatrix {
            rows: size,
            cols: size,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &DualN {
        &self.data[i * self.cols + j]
    }

    pub fn entries(&self) -> &[DualN] {
        &self.data
    }
}

/// Sum of dual numbers. An empty slice has no order to inherit and is
/// rejected.
pub fn dual_sum(a: &[DualN]) -> Result<DualN, DualError> {
    let (first, rest) = a.split_first().ok_or(DualError::DimensionMismatch {
        expected: 1,
        found: 0,
    })?;
    rest.iter().try_fold(first.clone(), |acc, x| acc.try_add(x))
}

pub fn dual_product(a: &[DualN]) -> Result<DualN, DualError> {
    let (first, rest) = a.split_first().ok_or(DualError::DimensionMismatch {
        expected: 1,
        found: 0,
    })?;
    rest.iter().try_fold(first.clone(), |acc, x| acc.try_mul(x))
}

pub fn dual_matmul(a: &DualMatrix, b: &DualMatrix) -> Result<DualMatrix, DualError> {
    check_len(a.cols, b.rows)?;
    let mut data = Vec::with_capacity(a.rows * b.cols);
    for i in 0..a.rows {
        for j in 0..b.cols {
            let terms = (0..a.cols)
                .map(|k| a.get(i, k).try_mul(b.get(k, j)))
                .collect::<Result<Vec<_>, _>>()?;
            data.push(dual_sum(&terms)?);
        }
    }
    Ok(DualMatrix {
        rows: a.rows,
        cols: b.cols,
        data,
    })
}

/// Sets component `k` of every entry of `a` to `c`.
pub fn mset_fpart(k: usize, c: Coefficient, a: &mut DualMatrix) -> Result<(), DualError> {
    a.data.iter_mut().try_for_each(|d| d.set_part(k, c))
}
