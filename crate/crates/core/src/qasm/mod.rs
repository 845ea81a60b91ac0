// Copyright contributors to the qact project
// SPDX-License-Identifier: Apache-2.0

//! OpenQASM 2.0 front end: lexer, parser, canonical printer and flattener.

mod ast;
mod error;
mod expr;
mod flatten;
mod gates;
mod lexer;
mod parser;
mod printer;

pub use ast::{
    BodyApp, GateApp, GateDef, OpaqueDef, Operand, QasmProgram, RegisterDecl, RegisterKind,
    Statement,
};
pub use error::{EvalError, FlattenError, Position, QasmError};
pub use expr::{eval_param_expr, BinaryOp, Function, ParamExpr};
pub use flatten::{flatten, Condition, FlatCircuit, FlatOp, OpKind};
pub use gates::{builtin, BuiltinGate, BUILTIN_GATES};
pub use parser::parse_program;
pub use printer::print_program;
