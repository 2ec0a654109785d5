use std::collections::BTreeMap;

use flatdual::expr::{BinaryOp, Func, UnaryOp};
use flatdual::{scalar, Coefficient, Expr, ExprError};

fn integer_literal(e: &Expr) -> Option<i64> {
    match e {
        Expr::Number(c) if c.im == 0.0 && c.re.fract() == 0.0 && c.re.abs() <= u32::MAX as f64 => {
            Some(c.re as i64)
        }
        Expr::Unary(UnaryOp::Neg, inner) => integer_literal(inner).map(|v| -v),
        _ => None,
    }
}

/// Plain complex interpreter: the value an expression should have at order 0.
pub fn scalar_eval(
    e: &Expr,
    env: &BTreeMap<String, Coefficient>,
) -> Result<Coefficient, ExprError> {
    let one = Coefficient::new(1.0, 0.0);
    Ok(match e {
        Expr::Number(c) => *c,
        Expr::Variable(n) => *env
            .get(n)
            .ok_or_else(|| ExprError::UnboundVariable(n.clone()))?,
        Expr::Unary(UnaryOp::Neg, a) => -scalar_eval(a, env)?,
        Expr::Binary(op, a, b) => {
            let l = scalar_eval(a, env)?;
            if *op == BinaryOp::Pow {
                if let Some(m) = integer_literal(b) {
                    let p = (0..m.unsigned_abs()).fold(one, |acc, _| acc * l);
                    return Ok(if m < 0 { one / p } else { p });
                }
            }
            let r = scalar_eval(b, env)?;
            match op {
                BinaryOp::Add => l + r,
                BinaryOp::Sub => l - r,
                BinaryOp::Mul => l * r,
                BinaryOp::Div => l * (one / r),
                BinaryOp::Pow => scalar::exp(r * scalar::ln(l)),
            }
        }
        Expr::Call(Func::Atan2, args) => {
            scalar::atan2(scalar_eval(&args[0], env)?, scalar_eval(&args[1], env)?)
        }
        Expr::Call(f, args) => {
            let a = scalar_eval(&args[0], env)?;
            match f {
                Func::Sin => scalar::sin(a),
                Func::Cos => scalar::cos(a),
                Func::Tan => scalar::tan(a),
                Func::Exp => scalar::exp(a),
                Func::Log => scalar::ln(a),
                Func::Sqrt => scalar::sqrt(a),
                Func::Asin => scalar::asin(a),
                Func::Acos => scalar::acos(a),
                Func::Atan => scalar::atan(a),
                Func::Sinh => scalar::sinh(a),
                Func::Cosh => scalar::cosh(a),
                Func::Tanh => scalar::tanh(a),
                Func::Asinh => scalar::asinh(a),
                Func::Acosh => scalar::acosh(a),
                Func::Atanh => scalar::atanh(a),
                Func::Inv => one / a,
                Func::Absx => scalar::sqrt(a * a),
                Func::Conjg => a.conj(),
                Func::Atan2 => unreachable!(),
            }
        }
    })
}
