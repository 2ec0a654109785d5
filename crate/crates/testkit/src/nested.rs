use std::ops::{Add, Mul, Neg, Sub};

use flatdual::expr::{BinaryOp, Func, UnaryOp};
use flatdual::{scalar, Coefficient, Expr};

use crate::OracleError;

/// First-order dual numbers nested to a fixed depth: `Pair(primal, tangent)`
/// where both halves are one level shallower. Depth `d` stores `2^d` leaves.
#[derive(Debug, Clone, PartialEq)]
pub enum Nested {
    Leaf(Coefficient),
    Pair(Box<Nested>, Box<Nested>),
}

use Nested::{Leaf, Pair};

fn pair(a: Nested, b: Nested) -> Nested {
    Pair(Box::new(a), Box::new(b))
}

impl Nested {
    pub fn constant(c: Coefficient, depth: usize) -> Nested {
        if depth == 0 {
            Leaf(c)
        } else {
            pair(
                Nested::constant(c, depth - 1),
                Nested::constant(Coefficient::new(0.0, 0.0), depth - 1),
            )
        }
    }

    /// `x0` with unit tangent at every nesting level.
    pub fn variable(x0: Coefficient, depth: usize) -> Nested {
        if depth == 0 {
            Leaf(x0)
        } else {
            pair(
                Nested::variable(x0, depth - 1),
                Nested::constant(Coefficient::new(1.0, 0.0), depth - 1),
            )
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Leaf(_) => 0,
            Pair(a, _) => 1 + a.depth(),
        }
    }

    fn tangent(&self) -> &Nested {
        match self {
            Pair(_, b) => b,
            Leaf(_) => panic!("tangent of a leaf"),
        }
    }

    fn leaf(&self) -> Coefficient {
        match self {
            Leaf(c) => *c,
            Pair(a, _) => a.leaf(),
        }
    }

    /// `f⁽ᵏ⁾(x0)`: descend `k` tangents, then primals down to the leaf.
    pub fn derivative(&self, k: usize) -> Coefficient {
        let mut cur = self;
        for _ in 0..k {
            cur = cur.tangent();
        }
        cur.leaf()
    }

    fn lift(&self, c: f64) -> Nested {
        Nested::constant(Coefficient::new(c, 0.0), self.depth())
    }

    /// Applies an analytic function given its value and first derivative,
    /// both as functions on nested values.
    fn apply(&self, f: &dyn Fn(&Nested) -> Nested, df: &dyn Fn(&Nested) -> Nested) -> Nested {
        match self {
            Leaf(_) => f(self),
            Pair(a, b) => pair(f(a), &df(a) * b),
        }
    }

    fn map_leaf(&self, f: &dyn Fn(Coefficient) -> Coefficient) -> Nested {
        match self {
            Leaf(c) => Leaf(f(*c)),
            Pair(a, b) => pair(a.map_leaf(f), b.map_leaf(f)),
        }
    }

    pub fn sin(&self) -> Nested {
        match self {
            Leaf(c) => Leaf(scalar::sin(*c)),
            Pair(a, b) => pair(a.sin(), &a.cos() * b),
        }
    }

    pub fn cos(&self) -> Nested {
        match self {
            Leaf(c) => Leaf(scalar::cos(*c)),
            Pair(a, b) => pair(a.cos(), &(-a.sin()) * b),
        }
    }

    pub fn exp(&self) -> Nested {
        match self {
            Leaf(c) => Leaf(scalar::exp(*c)),
            Pair(a, b) => {
                let e = a.exp();
                pair(e.clone(), &e * b)
            }
        }
    }

    pub fn inv(&self) -> Nested {
        match self {
            Leaf(c) => Leaf(Coefficient::new(1.0, 0.0) / c),
            Pair(a, b) => {
                let r = a.inv();
                let t = -(&(&r * &r) * b);
                pair(r, t)
            }
        }
    }

    pub fn log(&self) -> Nested {
        self.apply(&|a| a.map_leaf_or(scalar::ln, Nested::log), &|a| a.inv())
    }

    pub fn sqrt(&self) -> Nested {
        self.apply(&|a| a.map_leaf_or(scalar::sqrt, Nested::sqrt), &|a| {
            (&a.sqrt() * &a.lift(2.0)).inv()
        })
    }

    fn map_leaf_or(
        &self,
        leaf: fn(Coefficient) -> Coefficient,
        rec: fn(&Nested) -> Nested,
    ) -> Nested {
        match self {
            Leaf(c) => Leaf(leaf(*c)),
            _ => rec(self),
        }
    }

    pub fn sinh(&self) -> Nested {
        self.apply(&|a| a.map_leaf_or(scalar::sinh, Nested::sinh), &|a| {
            a.cosh()
        })
    }

    pub fn cosh(&self) -> Nested {
        self.apply(&|a| a.map_leaf_or(scalar::cosh, Nested::cosh), &|a| {
            a.sinh()
        })
    }

    pub fn tan(&self) -> Nested {
        self.apply(&|a| a.map_leaf_or(scalar::tan, Nested::tan), &|a| {
            let t = a.tan();
            &a.lift(1.0) + &(&t * &t)
        })
    }

    pub fn tanh(&self) -> Nested {
        self.apply(&|a| a.map_leaf_or(scalar::tanh, Nested::tanh), &|a| {
            let t = a.tanh();
            &a.lift(1.0) - &(&t * &t)
        })
    }

    pub fn asin(&self) -> Nested {
        self.apply(&|a| a.map_leaf_or(scalar::asin, Nested::asin), &|a| {
            (&a.lift(1.0) - &(a * a)).sqrt().inv()
        })
    }

    pub fn acos(&self) -> Nested {
        self.apply(&|a| a.map_leaf_or(scalar::acos, Nested::acos), &|a| {
            -(&a.lift(1.0) - &(a * a)).sqrt().inv()
        })
    }

    pub fn atan(&self) -> Nested {
        self.apply(&|a| a.map_leaf_or(scalar::atan, Nested::atan), &|a| {
            (&a.lift(1.0) + &(a * a)).inv()
        })
    }

    pub fn asinh(&self) -> Nested {
        self.apply(&|a| a.map_leaf_or(scalar::asinh, Nested::asinh), &|a| {
            (&(a * a) + &a.lift(1.0)).sqrt().inv()
        })
    }

    pub fn acosh(&self) -> Nested {
        self.apply(&|a| a.map_leaf_or(scalar::acosh, Nested::acosh), &|a| {
            (&(a - &a.lift(1.0)).sqrt() * &(a + &a.lift(1.0)).sqrt()).inv()
        })
    }

    pub fn atanh(&self) -> Nested {
        self.apply(&|a| a.map_leaf_or(scalar::atanh, Nested::atanh), &|a| {
            (&a.lift(1.0) - &(a * a)).inv()
        })
    }

    /// `(x dy - y dx) / (x² + y²)` for the tangent.
    pub fn atan2(y: &Nested, x: &Nested) -> Nested {
        match (y, x) {
            (Leaf(a), Leaf(b)) => Leaf(scalar::atan2(*a, *b)),
            (Pair(y0, y1), Pair(x0, x1)) => {
                let num = &(&**x0 * &**y1) - &(&**y0 * &**x1);
                let den = &(&**x0 * &**x0) + &(&**y0 * &**y0);
                pair(Nested::atan2(y0, x0), &num * &den.inv())
            }
            _ => panic!("depth mismatch"),
        }
    }

    pub fn conjg(&self) -> Nested {
        self.map_leaf(&|c| c.conj())
    }

    pub fn powi(&self, m: u32) -> Nested {
        let mut r = self.lift(1.0);
        for _ in 0..m {
            r = &r * self;
        }
        r
    }
}

impl Add for &Nested {
    type Output = Nested;
    fn add(self, rhs: &Nested) -> Nested {
        match (self, rhs) {
            (Leaf(a), Leaf(b)) => Leaf(a + b),
            (Pair(a0, a1), Pair(b0, b1)) => pair(&**a0 + &**b0, &**a1 + &**b1),
            _ => panic!("depth mismatch"),
        }
    }
}

impl Sub for &Nested {
    type Output = Nested;
    fn sub(self, rhs: &Nested) -> Nested {
        self + &(-rhs)
    }
}

impl Neg for &Nested {
    type Output = Nested;
    fn neg(self) -> Nested {
        self.map_leaf(&|c| -c)
    }
}

impl Neg for Nested {
    type Output = Nested;
    fn neg(self) -> Nested {
        -&self
    }
}

impl Mul for &Nested {
    type Output = Nested;
    fn mul(self, rhs: &Nested) -> Nested {
        match (self, rhs) {
            (Leaf(a), Leaf(b)) => Leaf(a * b),
            (Pair(a0, a1), Pair(b0, b1)) => {
                let t = &(&**a0 * &**b1) + &(&**a1 * &**b0);
                pair(&**a0 * &**b0, t)
            }
            _ => panic!("depth mismatch"),
        }
    }
}

fn integer_literal(e: &Expr) -> Option<i64> {
    match e {
        Expr::Number(c) if c.im == 0.0 && c.re.fract() == 0.0 && c.re.abs() <= u32::MAX as f64 => {
            Some(c.re as i64)
        }
        Expr::Unary(UnaryOp::Neg, inner) => integer_literal(inner).map(|v| -v),
        _ => None,
    }
}

fn eval_nested(e: &Expr, var: &str, x: &Nested) -> Result<Nested, OracleError> {
    let depth = x.depth();
    Ok(match e {
        Expr::Number(c) => Nested::constant(*c, depth),
        Expr::Variable(name) if name == var => x.clone(),
        Expr::Variable(name) => {
            return Err(flatdual::ExprError::UnboundVariable(name.clone()).into())
        }
        Expr::Unary(UnaryOp::Neg, a) => -eval_nested(a, var, x)?,
        Expr::Binary(op, a, b) => {
            let l = eval_nested(a, var, x)?;
            if *op == BinaryOp::Pow {
                if let Some(m) = integer_literal(b) {
                    let p = l.powi(m.unsigned_abs() as u32);
                    return Ok(if m < 0 { p.inv() } else { p });
                }
            }
            let r = eval_nested(b, var, x)?;
            match op {
                BinaryOp::Add => &l + &r,
                BinaryOp::Sub => &l - &r,
                BinaryOp::Mul => &l * &r,
                BinaryOp::Div => &l * &r.inv(),
                BinaryOp::Pow => (&r * &l.log()).exp(),
            }
        }
        Expr::Call(Func::Atan2, args) => Nested::atan2(
            &eval_nested(&args[0], var, x)?,
            &eval_nested(&args[1], var, x)?,
        ),
        Expr::Call(f, args) => {
            let a = eval_nested(&args[0], var, x)?;
            match f {
                Func::Sin => a.sin(),
                Func::Cos => a.cos(),
                Func::Tan => a.tan(),
                Func::Exp => a.exp(),
                Func::Log => a.log(),
                Func::Sqrt => a.sqrt(),
                Func::Asin => a.asin(),
                Func::Acos => a.acos(),
                Func::Atan => a.atan(),
                Func::Sinh => a.sinh(),
                Func::Cosh => a.cosh(),
                Func::Tanh => a.tanh(),
                Func::Asinh => a.asinh(),
                Func::Acosh => a.acosh(),
                Func::Atanh => a.atanh(),
                Func::Inv => a.inv(),
                Func::Absx => (&a * &a).sqrt(),
                Func::Conjg => a.conjg(),
                Func::Atan2 => unreachable!(),
            }
        }
    })
}

/// Derivatives `0..=order` of the univariate expression at `x0`, computed by
/// nesting first-order duals `order` deep (`2^order` coefficients) and
/// reading the pure derivatives off the nested tangents.
pub fn nested_dual_oracle(
    expr: &Expr,
    var: &str,
    x0: Coefficient,
    order: usize,
) -> Result<Vec<Coefficient>, OracleError> {
    if order > 10 {
        return Err(OracleError::Unsupported("nesting is capped at order 10"));
    }
    let x = Nested::variable(x0, order);
    let r = eval_nested(expr, var, &x)?;
    Ok((0..=order).map(|k| r.derivative(k)).collect())
}
