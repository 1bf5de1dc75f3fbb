//! Evaluation of parsed expressions in the quotient algebra of a filter.
//!
//! Arithmetic acts on representatives. Division multiplies by the inverse
//! class, represented by the pointwise pseudo-inverse of the divisor, so it
//! is total on sequences and fails only where the quotient has no inverse.

use std::fmt;

use crate::exactnum::Rat;
use crate::quotient::{Classification, QuotientError, Scalar};
use crate::seqrep::{RSeq, SeqError};
use crate::series::{partial_sums, SeriesError};
use crate::sets::{FilterDescriptor, SetDescriptor, SetError};

use super::syntax::{parse, parse_filter, FilterExpr, Func, SetExpr, SyntaxError};
use super::syntax::Expr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("TypeError expected={expected} found={found}")]
    Type { expected: &'static str, found: &'static str },
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Seq(#[from] SeqError),
    #[error(transparent)]
    Set(#[from] SetError),
}

/// Result of evaluating an expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Seq(RSeq),
    Rat(Rat),
    Bool(bool),
    Class(Classification),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Seq(_) => "sequence",
            Value::Rat(_) => "rational",
            Value::Bool(_) => "boolean",
            Value::Class(_) => "classification",
        }
    }

    fn into_seq(self) -> Result<RSeq, EvalError> {
        match self {
            Value::Seq(x) => Ok(x),
            Value::Rat(c) => Ok(RSeq::constant(c)),
            other => Err(EvalError::Type { expected: "sequence", found: other.kind() }),
        }
    }
}

pub fn eval_set(s: &SetExpr) -> Result<SetDescriptor, EvalError> {
    Ok(match s {
        SetExpr::Points(p) => SetDescriptor::finite(p.iter().copied()),
        SetExpr::Residue(r, m) => SetDescriptor::residue_class(*r, *m)?,
        SetExpr::Evens => SetDescriptor::evens(),
        SetExpr::Odds => SetDescriptor::odds(),
        SetExpr::All => SetDescriptor::all(),
        SetExpr::Cofinite(p) => SetDescriptor::cofinite(p.iter().copied()),
        SetExpr::Not(a) => eval_set(a)?.complement(),
        SetExpr::And(a, b) => eval_set(a)?.intersect(&eval_set(b)?),
        SetExpr::Or(a, b) => eval_set(a)?.union(&eval_set(b)?),
    })
}

/// Parse `frechet` or `principal:<set>`.
pub fn filter_from_text(text: &str) -> Result<FilterDescriptor, EvalError> {
    match parse_filter(text)? {
        FilterExpr::Frechet => Ok(FilterDescriptor::Frechet),
        FilterExpr::Principal(s) => Ok(FilterDescriptor::principal(eval_set(&s)?)?),
    }
}

/// Evaluation context: the filter whose quotient algebra scalars live in.
#[derive(Debug, Clone)]
pub struct Evaluator {
    pub filter: FilterDescriptor,
}

impl Evaluator {
    pub fn new(filter: FilterDescriptor) -> Evaluator {
        Evaluator { filter }
    }

    pub fn scalar(&self, x: RSeq) -> Scalar {
        Scalar::new(x, self.filter.clone())
    }

    pub fn eval_text(&self, text: &str) -> Result<Value, EvalError> {
        self.eval(&parse(text)?)
    }

    pub fn seq(&self, e: &Expr) -> Result<RSeq, EvalError> {
        self.eval(e)?.into_seq()
    }

    pub fn eval(&self, e: &Expr) -> Result<Value, EvalError> {
        Ok(match e {
            Expr::Int(i) => Value::Seq(RSeq::constant(Rat::from(i.clone()))),
            Expr::Var => Value::Seq(RSeq::identity()),
            Expr::Neg(a) => Value::Seq(self.seq(a)?.neg()),
            Expr::Add(a, b) => Value::Seq(self.seq(a)?.add(&self.seq(b)?)),
            Expr::Sub(a, b) => Value::Seq(self.seq(a)?.sub(&self.seq(b)?)),
            Expr::Mul(a, b) => Value::Seq(self.seq(a)?.mul(&self.seq(b)?)),
            Expr::Div(a, b) => {
                let inv = self.scalar(self.seq(b)?).try_invert()?;
                Value::Seq(self.seq(a)?.mul(inv.rep()))
            }
            Expr::Pow(a, k) => Value::Seq(self.seq(a)?.pow(*k)),
            Expr::Ind(s) => Value::Seq(RSeq::indicator(&eval_set(s)?)),
            Expr::Except(a, entries) => Value::Seq(self.seq(a)?.with_overrides(entries.iter().cloned())),
            Expr::Call(func, args) => self.call(*func, args)?,
        })
    }

    fn call(&self, func: Func, args: &[Expr]) -> Result<Value, EvalError> {
        let x = self.seq(&args[0])?;
        Ok(match func {
            Func::Shift => Value::Seq(x.shift()),
            Func::Sum => Value::Seq(partial_sums(&x)?),
            Func::St => Value::Rat(self.scalar(x).standard_part()?),
            Func::Class => Value::Class(self.scalar(x).classify()),
            Func::Eq => Value::Bool(self.scalar(x).scalar_eq(&self.scalar(self.seq(&args[1])?))?),
            Func::Le => Value::Bool(self.scalar(x).leq(&self.scalar(self.seq(&args[1])?))?),
            Func::Invert => Value::Seq(self.scalar(x).try_invert()?.rep().clone()),
            Func::Limit => Value::Rat(x.limit()?),
        })
    }

    /// Render a value: sequences as the scalar they represent (canonical
    /// representative and classification).
    pub fn render(&self, v: &Value) -> String {
        match v {
            Value::Seq(x) => self.scalar(x.clone()).to_string(),
            other => other.to_string(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Seq(x) => write!(f, "{x}"),
            Value::Rat(c) => write!(f, "{c}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Class(c) => write!(f, "{c}"),
        }
    }
}
