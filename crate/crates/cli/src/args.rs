use clap::{Args, Parser, Subcommand, ValueEnum};
use flatdual::Coefficient;

use crate::point::parse_point;

const GRAMMAR: &str = "\
Expressions:
  expr    := term (('+' | '-') term)*
  term    := unary (('*' | '/') unary)*
  unary   := '-' unary | power
  power   := primary ('^' unary)?        right-associative, -x^2 = -(x^2)
  primary := number | pi | i | name | name '(' args ')' | '(' expr ')'

  Functions: sin cos tan exp log sqrt asin acos atan sinh cosh tanh
             asinh acosh atanh inv absx conjg atan2(y, x)
  Multiplication is always explicit: write 2*x, not 2x.
  An integer exponent (x^3, x^-2) is repeated multiplication; any other
  power a^b is exp(b*log(a)) on the principal branch.

Points:
  Complex numbers are written a, bi, a+bi or a-bi without spaces.

Exit status:
  0 success, 2 usage or expression error, 3 non-finite result.";

#[derive(Debug, Parser)]
#[command(name = "flatdual", version, about = "Arbitrary-order derivatives of complex expressions", after_help = GRAMMAR)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Reserved. Coefficients are always double precision.
    #[arg(long, global = true, value_name = "NAME")]
    pub precision: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of D^k f for k = 0..=order of a univariate expression.
    Derivatives(DerivativesArgs),
    /// Gradient of a scalar expression.
    Grad(FieldArgs),
    /// Jacobian of a vector of expressions separated by ';'.
    Jac(FieldArgs),
    /// Hessian of a scalar expression.
    Hess(FieldArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
}

#[derive(Debug, Args)]
pub struct DerivativesArgs {
    #[arg(long)]
    pub expr: String,

    #[arg(long, default_value = "x")]
    pub var: String,

    #[arg(long, allow_hyphen_values = true, value_parser = parse_point)]
    pub at: Coefficient,

    #[arg(long)]
    pub order: usize,

    /// Apply the expression to its own output this many times.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub nest: u64,

    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    #[arg(long)]
    pub exprs: String,

    #[arg(long, value_delimiter = ',', required = true)]
    pub vars: Vec<String>,

    #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true, value_parser = parse_point)]
    pub at: Vec<Coefficient>,

    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}
