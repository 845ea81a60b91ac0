// Copyright contributors to the qact project
// SPDX-License-Identifier: Apache-2.0

//! Gate parameter expressions.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use super::error::{EvalError, QasmError};
use super::lexer::{tokenize, TokenKind};
use super::parser::TokenCursor;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Function {
    Sin,
    Cos,
    Tan,
    Exp,
    Ln,
    Sqrt,
}

impl Function {
    pub fn name(self) -> &'static str {
        match self {
            Function::Sin => "sin",
            Function::Cos => "cos",
            Function::Tan => "tan",
            Function::Exp => "exp",
            Function::Ln => "ln",
            Function::Sqrt => "sqrt",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "sin" => Function::Sin,
            "cos" => Function::Cos,
            "tan" => Function::Tan,
            "exp" => Function::Exp,
            "ln" => Function::Ln,
            "sqrt" => Function::Sqrt,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ParamExpr {
    Number(f64),
    Pi,
    Name(String),
    Neg(Box<ParamExpr>),
    Binary(BinaryOp, Box<ParamExpr>, Box<ParamExpr>),
    Call(Function, Box<ParamExpr>),
}

impl ParamExpr {
    /// Free parameter names, in first-occurrence order.
    pub fn free_names(&self) -> Vec<&str> {
        let mut names = Vec::new();
        self.collect_names(&mut names);
        names
    }

    fn collect_names<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            ParamExpr::Number(_) | ParamExpr::Pi => {}
            ParamExpr::Name(n) => {
                if !out.contains(&n.as_str()) {
                    out.push(n);
                }
            }
            ParamExpr::Neg(e) | ParamExpr::Call(_, e) => e.collect_names(out),
            ParamExpr::Binary(_, l, r) => {
                l.collect_names(out);
                r.collect_names(out);
            }
        }
    }
}

/// Evaluates `expr` in double precision.
pub fn eval_param_expr(
    expr: &ParamExpr,
    bindings: &HashMap<String, f64>,
) -> Result<f64, EvalError> {
    let value = match expr {
        ParamExpr::Number(v) => *v,
        ParamExpr::Pi => PI,
        ParamExpr::Name(n) => *bindings
            .get(n)
            .ok_or_else(|| EvalError::Unbound(n.clone()))?,
        ParamExpr::Neg(e) => -eval_param_expr(e, bindings)?,
        ParamExpr::Binary(op, l, r) => {
            let l = eval_param_expr(l, bindings)?;
            let r = eval_param_expr(r, bindings)?;
            match op {
                BinaryOp::Add => l + r,
                BinaryOp::Sub => l - r,
                BinaryOp::Mul => l * r,
                BinaryOp::Div => {
                    if r == 0.0 {
                        return Err(EvalError::DivisionByZero);
                    }
                    l / r
                }
                BinaryOp::Pow => {
                    if l == 0.0 && r < 0.0 {
                        return Err(EvalError::DivisionByZero);
                    }
                    l.powf(r)
                }
            }
        }
        ParamExpr::Call(f, e) => {
            let arg = eval_param_expr(e, bindings)?;
            match f {
                Function::Sin => arg.sin(),
                Function::Cos => arg.cos(),
                Function::Tan => arg.tan(),
                Function::Exp => arg.exp(),
                Function::Ln => {
                    if arg <= 0.0 {
                        return Err(EvalError::Domain { func: "ln", arg });
                    }
                    arg.ln()
                }
                Function::Sqrt => {
                    if arg < 0.0 {
                        return Err(EvalError::Domain { func: "sqrt", arg });
                    }
                    arg.sqrt()
                }
            }
        }
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(EvalError::NonFinite)
    }
}

impl FromStr for ParamExpr {
    type Err = QasmError;

    /// Parses a standalone expression such as `pi/2` or `2*theta`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tokens = tokenize(s)?;
        let mut cursor = TokenCursor::new(&tokens);
        let expr = cursor.expr()?;
        cursor.expect(&TokenKind::Eof)?;
        Ok(expr)
    }
}

fn precedence(expr: &ParamExpr) -> u8 {
    match expr {
        ParamExpr::Binary(BinaryOp::Add | BinaryOp::Sub, ..) => 1,
        ParamExpr::Binary(BinaryOp::Mul | BinaryOp::Div, ..) => 2,
        ParamExpr::Neg(_) => 3,
        ParamExpr::Binary(BinaryOp::Pow, ..) => 4,
        _ => 5,
    }
}

/// Prints with the minimal parentheses that make the text reparse to the
/// same tree.
impl fmt::Display for ParamExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn wrap(f: &mut fmt::Formatter<'_>, e: &ParamExpr, parens: bool) -> fmt::Result {
            if parens {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        }
        match self {
            ParamExpr::Number(v) => {
                if *v < 0.0 || (*v == 0.0 && v.is_sign_negative()) {
                    // Only reachable for hand-built trees; literals are unsigned.
                    write!(f, "({v:?})")
                } else {
                    write!(f, "{v:?}")
                }
            }
            ParamExpr::Pi => f.write_str("pi"),
            ParamExpr::Name(n) => f.write_str(n),
            ParamExpr::Neg(e) => {
                f.write_str("-")?;
                wrap(f, e, precedence(e) < 3)
            }
            ParamExpr::Call(func, e) => write!(f, "{}({e})", func.name()),
            ParamExpr::Binary(op, l, r) => {
                let p = precedence(self);
                let (sym, left_parens, right_parens) = match op {
                    BinaryOp::Add => (" + ", precedence(l) < p, precedence(r) <= p),
                    BinaryOp::Sub => (" - ", precedence(l) < p, precedence(r) <= p),
                    BinaryOp::Mul => ("*", precedence(l) < p, precedence(r) <= p),
                    BinaryOp::Div => ("/", precedence(l) < p, precedence(r) <= p),
                    // Right associative, and the base binds tighter than a prefix minus.
                    BinaryOp::Pow => ("^", precedence(l) <= p, precedence(r) < 3),
                };
                wrap(f, l, left_parens)?;
                f.write_str(sym)?;
                wrap(f, r, right_parens)
            }
        }
    }
}
