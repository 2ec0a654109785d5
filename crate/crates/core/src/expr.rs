//! A small expression language evaluated over dual numbers.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' unary)?
//! primary := number | 'pi' | 'i' | ident | ident '(' args ')' | '(' expr ')'
//! args    := expr (',' expr)*
//! ```
//!
//! `^` is right-associative and binds tighter than unary minus, so `-x^2` is
//! `-(x^2)` while `x^-2` is `x^(-2)`. Implicit multiplication is not
//! accepted. `i` is the imaginary unit and `pi` is π; neither can be used as
//! a variable name. Functions: sin cos tan exp log sqrt asin acos atan sinh
//! cosh tanh asinh acosh atanh inv absx conjg (one argument) and atan2
//! (two arguments).

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::dual::DualN;
use crate::error::DualError;
use crate::precision::{Coefficient, PI};
use crate::transcendental;

#[derive(Debug, Clone, PartialEq)]
pub enum ExprError {
    Syntax {
        offset: usize,
        message: &'static str,
    },
    UnknownFunction {
        name: String,
        offset: usize,
    },
    Arity {
        name: &'static str,
        expected: usize,
        found: usize,
        offset: usize,
    },
    UnboundVariable(String),
    Dual(DualError),
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprError::Syntax { offset, message } => {
                write!(f, "syntax error at offset {offset}: {message}")
            }
            ExprError::UnknownFunction { name, offset } => {
                write!(f, "unknown function `{name}` at offset {offset}")
            }
            ExprError::Arity {
                name,
                expected,
                found,
                offset,
            } => write!(
                f,
                "`{name}` at offset {offset} takes {expected} argument(s), got {found}"
            ),
            ExprError::UnboundVariable(name) => write!(f, "unbound variable `{name}`"),
            ExprError::Dual(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ExprError {}

impl From<DualError> for ExprError {
    fn from(e: DualError) -> Self {
        ExprError::Dual(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnaryOp {
    Neg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinaryOp {
    fn symbol(self) -> char {
        match self {
            BinaryOp::Add => '+',
            BinaryOp::Sub => '-',
            BinaryOp::Mul => '*',
            BinaryOp::Div => '/',
            BinaryOp::Pow => '^',
        }
    }
}

/// The function catalogue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Exp,
    Log,
    Sqrt,
    Asin,
    Acos,
    Atan,
    Sinh,
    Cosh,
    Tanh,
    Asinh,
    Acosh,
    Atanh,
    Atan2,
    Inv,
    Absx,
    Conjg,
}

impl Func {
    pub const ALL: [Func; 19] = [
        Func::Sin,
        Func::Cos,
        Func::Tan,
        Func::Exp,
        Func::Log,
        Func::Sqrt,
        Func::Asin,
        Func::Acos,
        Func::Atan,
        Func::Sinh,
        Func::Cosh,
        Func::Tanh,
        Func::Asinh,
        Func::Acosh,
        Func::Atanh,
        Func::Atan2,
        Func::Inv,
        Func::Absx,
        Func::Conjg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Exp => "exp",
            Func::Log => "log",
            Func::Sqrt => "sqrt",
            Func::Asin => "asin",
            Func::Acos => "acos",
            Func::Atan => "atan",
            Func::Sinh => "sinh",
            Func::Cosh => "cosh",
            Func::Tanh => "tanh",
            Func::Asinh => "asinh",
            Func::Acosh => "acosh",
            Func::Atanh => "atanh",
            Func::Atan2 => "atan2",
            Func::Inv => "inv",
            Func::Absx => "absx",
            Func::Conjg => "conjg",
        }
    }

    pub fn arity(self) -> usize {
        if self == Func::Atan2 {
            2
        } else {
            1
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }

    /// Applies a one-argument function to a dual number.
    pub fn apply_unary(self, a: &DualN) -> DualN {
        match self {
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
            Func::Absx => a.absx(),
            Func::Conjg => a.conjg(),
            Func::Atan2 => unreachable!("atan2 takes two arguments"),
        }
    }
}

/// Parsed expression tree.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Number(Coefficient),
    Variable(String),
    Unary(UnaryOp, Box<Expr>),
    Binary(BinaryOp, Box<Expr>, Box<Expr>),
    Call(Func, Vec<Expr>),
}

/// Variable bindings. Every bound value has the environment's order.
#[derive(Debug, Clone)]
pub struct Env {
    order: usize,
    vars: BTreeMap<String, DualN>,
}

impl Env {
    pub fn new(order: usize) -> Self {
        Env {
            order,
            vars: BTreeMap::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bind(&mut self, name: impl Into<String>, value: DualN) -> Result<(), ExprError> {
        if value.order() != self.order {
            return Err(DualError::OrderMismatch {
                left: self.order,
                right: value.order(),
            }
            .into());
        }
        self.vars.insert(name.into(), value);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&DualN> {
        self.vars.get(name)
    }
}

/// If `e` is a (possibly negated) integer literal, its value.
fn integer_literal(e: &Expr) -> Option<i64> {
    match e {
        Expr::Number(c)
            if c.im == 0.0 && c.re.abs() <= u32::MAX as f64 && c.re as i64 as f64 == c.re =>
        {
            Some(c.re as i64)
        }
        Expr::Unary(UnaryOp::Neg, inner) => integer_literal(inner).map(|v| -v),
        _ => None,
    }
}

impl Expr {
    /// Evaluates the tree over dual numbers at the environment's order.
    ///
    /// A power whose exponent is an integer literal is computed by repeated
    /// multiplication (followed by `inv` when negative); other powers use
    /// `exp(b · log a)`.
    pub fn eval(&self, env: &Env) -> Result<DualN, ExprError> {
        Ok(match self {
            Expr::Number(c) => DualN::constant(*c, env.order),
            Expr::Variable(name) => env
                .get(name)
                .cloned()
                .ok_or_else(|| ExprError::UnboundVariable(name.clone()))?,
            Expr::Unary(UnaryOp::Neg, a) => -a.eval(env)?,
            Expr::Binary(op, a, b) => {
                let lhs = a.eval(env)?;
                if *op == BinaryOp::Pow {
                    if let Some(m) = integer_literal(b) {
                        let p = lhs.pow_int(m.unsigned_abs() as u32);
                        return Ok(if m < 0 { p.inv() } else { p });
                    }
                }
                let rhs = b.eval(env)?;
                match op {
                    BinaryOp::Add => lhs.try_add(&rhs)?,
                    BinaryOp::Sub => lhs.try_sub(&rhs)?,
                    BinaryOp::Mul => lhs.try_mul(&rhs)?,
                    BinaryOp::Div => lhs.try_div(&rhs)?,
                    BinaryOp::Pow => lhs.try_pow(&rhs)?,
                }
            }
            Expr::Call(Func::Atan2, args) => {
                transcendental::atan2(&args[0].eval(env)?, &args[1].eval(env)?)?
            }
            Expr::Call(f, args) => f.apply_unary(&args[0].eval(env)?),
        })
    }

    /// Names of all variables referenced by the tree.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Expr::Number(_) => {}
            Expr::Variable(n) => {
                out.insert(n.clone());
            }
            Expr::Unary(_, a) => a.collect_vars(out),
            Expr::Binary(_, a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Expr::Call(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
        }
    }
}

/// Fully parenthesized form that re-parses to the same tree (for trees
/// produced by [`parse`]).
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Number(c) if c.re == 0.0 && c.im == 1.0 => write!(f, "i"),
            Expr::Number(c) if c.im == 0.0 && c.re.is_sign_positive() => write!(f, "{:?}", c.re),
            Expr::Number(c) => write!(f, "({:?} + {:?}*i)", c.re, c.im),
            Expr::Variable(n) => write!(f, "{n}"),
            Expr::Unary(UnaryOp::Neg, a) => write!(f, "(-{a})"),
            Expr::Binary(op, a, b) => write!(f, "({a} {} {b})", op.symbol()),
            Expr::Call(func, args) => {
                write!(f, "{}(", func.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Parses an expression.
pub fn parse(text: &str) -> Result<Expr, ExprError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &'static str) -> ExprError {
        ExprError::Syntax {
            offset: self.pos,
            message,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Some(b'+') => BinaryOp::Add,
                Some(b'-') => BinaryOp::Sub,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.term()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Some(b'*') => BinaryOp::Mul,
                Some(b'/') => BinaryOp::Div,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.eat(b'-') {
            return Ok(Expr::Unary(UnaryOp::Neg, Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.primary()?;
        if self.eat(b'^') {
            let exponent = self.unary()?;
            return Ok(Expr::Binary(
                BinaryOp::Pow,
                Box::new(base),
                Box::new(exponent),
            ));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr, ExprError> {
        match self.peek() {
            None => Err(self.error("expected an operand")),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.identifier(),
            Some(_) => Err(self.error("expected an operand")),
        }
    }

    fn number(&mut self) -> Result<Expr, ExprError> {
        let start = self.pos;
        let digits = |p: &mut Self| {
            let s = p.pos;
            while p.pos < p.src.len() && p.src[p.pos].is_ascii_digit() {
                p.pos += 1;
            }
            p.pos - s
        };
        let mut n = digits(self);
        if self.src.get(self.pos) == Some(&b'.') {
            self.pos += 1;
            n += digits(self);
        }
        if n == 0 {
            self.pos = start;
            return Err(self.error("malformed number"));
        }
        if matches!(self.src.get(self.pos), Some(b'e' | b'E')) {
            let save = self.pos;
            self.pos += 1;
            if matches!(self.src.get(self.pos), Some(b'+' | b'-')) {
                self.pos += 1;
            }
            if digits(self) == 0 {
                self.pos = save;
                return Err(self.error("malformed exponent"));
            }
        }
        let text = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        let value: f64 = text.parse().map_err(|_| ExprError::Syntax {
            offset: start,
            message: "malformed number",
        })?;
        if !value.is_finite() {
            return Err(ExprError::Syntax {
                offset: start,
                message: "number out of range",
            });
        }
        Ok(Expr::Number(Coefficient::new(value, 0.0)))
    }

    fn identifier(&mut self) -> Result<Expr, ExprError> {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        match name {
            "pi" => return Ok(Expr::Number(Coefficient::new(PI, 0.0))),
            "i" => return Ok(Expr::Number(Coefficient::new(0.0, 1.0))),
            _ => {}
        }
        if self.peek() != Some(b'(') {
            return Ok(Expr::Variable(name.to_string()));
        }
        let func = Func::from_name(name).ok_or_else(|| ExprError::UnknownFunction {
            name: name.to_string(),
            offset: start,
        })?;
        self.pos += 1;
        let mut args = Vec::new();
        if !self.eat(b')') {
            loop {
                args.push(self.expr()?);
                if self.eat(b',') {
                    continue;
                }
                if self.eat(b')') {
                    break;
                }
                return Err(self.error("expected `,` or `)`"));
            }
        }
        if args.len() != func.arity() {
            return Err(ExprError::Arity {
                name: func.name(),
                expected: func.arity(),
                found: args.len(),
                offset: start,
            });
        }
        Ok(Expr::Call(func, args))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn num(x: f64) -> Expr {
        Expr::Number(Coefficient::new(x, 0.0))
    }

    fn var(n: &str) -> Expr {
        Expr::Variable(n.to_string())
    }

    fn bin(op: BinaryOp, a: Expr, b: Expr) -> Expr {
        Expr::Binary(op, Box::new(a), Box::new(b))
    }

    #[test]
    fn parses_gaussian_sine() {
        let expected = bin(
            BinaryOp::Mul,
            Expr::Call(Func::Sin, vec![var("x")]),
            Expr::Call(
                Func::Exp,
                vec![Expr::Unary(
                    UnaryOp::Neg,
                    Box::new(bin(BinaryOp::Pow, var("x"), num(2.0))),
                )],
            ),
        );
        assert_eq!(parse("sin(x)*exp(-x^2)").unwrap(), expected);
    }

    #[test]
    fn parses_power_of_log() {
        let expected = bin(
            BinaryOp::Pow,
            Expr::Call(Func::Sin, vec![var("x")]),
            Expr::Call(Func::Log, vec![bin(BinaryOp::Mul, var("x"), var("x"))]),
        );
        assert_eq!(parse("sin(x)^log(x*x)").unwrap(), expected);
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            parse("2^3^2").unwrap(),
            bin(
                BinaryOp::Pow,
                num(2.0),
                bin(BinaryOp::Pow, num(3.0), num(2.0))
            )
        );
        assert_eq!(
            parse("a-b-c").unwrap(),
            bin(
                BinaryOp::Sub,
                bin(BinaryOp::Sub, var("a"), var("b")),
                var("c")
            )
        );
        assert_eq!(
            parse("a+b*c").unwrap(),
            bin(
                BinaryOp::Add,
                var("a"),
                bin(BinaryOp::Mul, var("b"), var("c"))
            )
        );
        assert_eq!(
            parse("x^-2").unwrap(),
            bin(
                BinaryOp::Pow,
                var("x"),
                Expr::Unary(UnaryOp::Neg, Box::new(num(2.0)))
            )
        );
        assert_eq!(parse(" 1.5e-3 ").unwrap(), num(1.5e-3));
        assert_eq!(
            parse("2*i").unwrap(),
            bin(
                BinaryOp::Mul,
                num(2.0),
                Expr::Number(Coefficient::new(0.0, 1.0))
            )
        );
        assert_eq!(parse("pi").unwrap(), num(PI));
        assert_eq!(
            parse("atan2(y, x)").unwrap(),
            Expr::Call(Func::Atan2, vec![var("y"), var("x")])
        );
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(
            parse("x+"),
            Err(ExprError::Syntax { offset: 2, .. })
        ));
        assert!(matches!(
            parse("2x"),
            Err(ExprError::Syntax { offset: 1, .. })
        ));
        assert!(matches!(
            parse("(x"),
            Err(ExprError::Syntax { offset: 2, .. })
        ));
        assert!(matches!(
            parse(""),
            Err(ExprError::Syntax { offset: 0, .. })
        ));
        assert!(matches!(parse("1e"), Err(ExprError::Syntax { .. })));
        assert!(matches!(
            parse("1e999"),
            Err(ExprError::Syntax { offset: 0, .. })
        ));
        assert!(matches!(
            parse("x $ y"),
            Err(ExprError::Syntax { offset: 2, .. })
        ));
        assert!(matches!(
            parse("+x"),
            Err(ExprError::Syntax { offset: 0, .. })
        ));
    }

    #[test]
    fn catalogue_errors() {
        assert_eq!(
            parse("1 + erf(x)"),
            Err(ExprError::UnknownFunction {
                name: "erf".to_string(),
                offset: 4
            })
        );
        assert!(matches!(
            parse("atan2(x)"),
            Err(ExprError::Arity {
                expected: 2,
                found: 1,
                ..
            })
        ));
        assert!(matches!(
            parse("sin(x, y)"),
            Err(ExprError::Arity {
                expected: 1,
                found: 2,
                ..
            })
        ));
        assert!(matches!(
            parse("sin()"),
            Err(ExprError::Arity {
                expected: 1,
                found: 0,
                ..
            })
        ));
    }

    #[test]
    fn evaluation() {
        let z0 = Coefficient::new(1.5, -0.5);
        let mut env = Env::new(3);
        env.bind("x", DualN::variable(z0, 3).unwrap()).unwrap();
        assert_eq!(
            parse("x").unwrap().eval(&env).unwrap(),
            DualN::variable(z0, 3).unwrap()
        );
        assert_eq!(
            parse("y + 1").unwrap().eval(&env),
            Err(ExprError::UnboundVariable("y".to_string()))
        );
        assert!(env.bind("y", DualN::zero(2)).is_err());
        let v = parse("2 + 3").unwrap().eval(&env).unwrap();
        assert_eq!(v, DualN::constant(Coefficient::new(5.0, 0.0), 3));
    }

    #[test]
    fn integer_powers_stay_finite_at_zero() {
        let mut env = Env::new(2);
        env.bind("x", DualN::variable(Coefficient::new(0.0, 0.0), 2).unwrap())
            .unwrap();
        let v = parse("x^2").unwrap().eval(&env).unwrap();
        assert_eq!(
            v.coeffs(),
            &[
                Coefficient::new(0.0, 0.0),
                Coefficient::new(0.0, 0.0),
                Coefficient::new(2.0, 0.0)
            ]
        );
        let w = parse("x^0").unwrap().eval(&env).unwrap();
        assert!(w.is_finite());
        // Same power written non-literally goes through log and is not finite.
        let u = parse("x^(1+1)").unwrap().eval(&env).unwrap();
        assert!(!u.is_finite());
    }

    #[test]
    fn negative_integer_power() {
        let mut env = Env::new(1);
        env.bind("x", DualN::variable(Coefficient::new(2.0, 0.0), 1).unwrap())
            .unwrap();
        let v = parse("x^-2").unwrap().eval(&env).unwrap();
        assert!((v.coeffs()[0].re - 0.25).abs() < 1e-15);
        assert!((v.coeffs()[1].re + 0.25).abs() < 1e-15);
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "sin(x)*exp(-x^2)",
            "sin(x)^log(x*x)",
            "-(a - b)/c^2^d",
            "atan2(y, -x) + 2*i*pi",
            "absx(conjg(x))",
        ] {
            let e = parse(s).unwrap();
            let printed = e.to_string();
            assert_eq!(parse(&printed).unwrap(), e, "{s} -> {printed}");
        }
    }

    #[test]
    fn variables_collected() {
        let e = parse("x*y + sin(z) - x").unwrap();
        let v: Vec<_> = e.variables().into_iter().collect();
        assert_eq!(v, vec!["x", "y", "z"]);
    }
}
