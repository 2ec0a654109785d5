use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use flatdual::{
    gradient, hessian, jacobian, parse, Coefficient, DiffKind, DiffResult, DualError, DualN, Env,
    Expr, ExprError,
};

use crate::args::{Cli, Command, DerivativesArgs, FieldArgs};
use crate::report::Report;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Expr(ExprError),
    Dual(DualError),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Expr(e) => write!(f, "{e}"),
            CliError::Dual(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ExprError> for CliError {
    fn from(e: ExprError) -> Self {
        CliError::Expr(e)
    }
}

impl From<DualError> for CliError {
    fn from(e: DualError) -> Self {
        CliError::Dual(e)
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Derivatives(a) => run_derivatives(a),
        Command::Grad(a) => run_field(a, DiffKind::Gradient),
        Command::Jac(a) => run_field(a, DiffKind::Jacobian),
        Command::Hess(a) => run_field(a, DiffKind::Hessian),
    }
}

fn run_derivatives(a: &DerivativesArgs) -> Result<Report, CliError> {
    let e = parse(&a.expr)?;
    let start = Instant::now();
    let table = derivatives(&e, &a.var, a.at, a.order, a.nest)?;
    let elapsed = start.elapsed().as_secs_f64();
    Ok(Report::derivatives(a.at, table.coeffs(), a.nest, elapsed))
}

/// Derivative table of `e` composed with itself `nest` times, seeded at `at`.
pub fn derivatives(
    e: &Expr,
    var: &str,
    at: Coefficient,
    order: usize,
    nest: u64,
) -> Result<DualN, CliError> {
    check_bound(e, &[var.to_string()])?;
    let seed = if order == 0 {
        DualN::constant(at, 0)
    } else {
        DualN::variable(at, order)?
    };
    Ok(self::nest(e, var, seed, nest)?)
}

/// Feeds `start` through `e` `times` times, one evaluation per step.
pub fn nest(e: &Expr, var: &str, start: DualN, times: u64) -> Result<DualN, ExprError> {
    let mut env = Env::new(start.order());
    let mut v = start;
    for _ in 0..times {
        env.bind(var, v)?;
        v = e.eval(&env)?;
    }
    Ok(v)
}

fn check_bound(e: &Expr, vars: &[String]) -> Result<(), CliError> {
    let known: BTreeSet<&str> = vars.iter().map(String::as_str).collect();
    match e
        .variables()
        .into_iter()
        .find(|v| !known.contains(v.as_str()))
    {
        Some(v) => Err(ExprError::UnboundVariable(v).into()),
        None => Ok(()),
    }
}

fn run_field(a: &FieldArgs, kind: DiffKind) -> Result<Report, CliError> {
    let exprs = a
        .exprs
        .split(';')
        .map(|s| parse(s.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    let start = Instant::now();
    let result = field_operator(kind, &exprs, &a.vars, &a.at)?;
    Ok(Report::from_diff(&result, start.elapsed().as_secs_f64()))
}

/// Gradient, Jacobian or Hessian of expressions over named variables.
/// Gradient and Hessian take exactly one expression.
pub fn field_operator(
    kind: DiffKind,
    exprs: &[Expr],
    vars: &[String],
    at: &[Coefficient],
) -> Result<DiffResult, CliError> {
    if vars.len() != at.len() {
        return Err(CliError::Usage(format!(
            "{} variables but {} point coordinates",
            vars.len(),
            at.len()
        )));
    }
    let distinct: BTreeSet<&String> = vars.iter().collect();
    if distinct.len() != vars.len() {
        return Err(CliError::Usage("variable names must be distinct".into()));
    }
    for e in exprs {
        check_bound(e, vars)?;
    }
    let bind = |x: &[DualN]| {
        let mut env = Env::new(x.first().map_or(0, DualN::order));
        for (name, value) in vars.iter().zip(x) {
            env.bind(name.as_str(), value.clone())
                .expect("seeds share one order");
        }
        env
    };
    let eval = |e: &Expr, env: &Env| e.eval(env).expect("free variables are bound");
    match kind {
        DiffKind::Jacobian => {
            let field = |x: &[DualN]| {
                let env = bind(x);
                exprs.iter().map(|e| eval(e, &env)).collect::<Vec<_>>()
            };
            Ok(DiffResult::from_matrix(
                kind,
                jacobian(&field, at, exprs.len())?,
                at,
            ))
        }
        DiffKind::Gradient | DiffKind::Hessian => {
            let [e] = exprs else {
                return Err(CliError::Usage(format!(
                    "{} takes one expression, got {}",
                    kind.name(),
                    exprs.len()
                )));
            };
            let field = |x: &[DualN]| eval(e, &bind(x));
            if kind == DiffKind::Gradient {
                Ok(DiffResult::from_vector(kind, gradient(&field, at)?, at))
            } else {
                Ok(DiffResult::from_matrix(kind, hessian(&field, at)?, at))
            }
        }
        DiffKind::Directional => Err(CliError::Usage(
            "directional derivatives have no subcommand".into(),
        )),
    }
}
