// Copyright contributors to the qact project
// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use thiserror::Error;

/// 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QasmError {
    #[error("{pos}: syntax error: {message}")]
    Syntax { pos: Position, message: String },
    #[error("{pos}: unsupported include \"{file}\", only \"qelib1.inc\" is available")]
    UnsupportedInclude { pos: Position, file: String },
    #[error("{pos}: register `{name}` is already declared")]
    DuplicateRegister { pos: Position, name: String },
    #[error("{pos}: gate `{name}` is already defined")]
    DuplicateGate { pos: Position, name: String },
    #[error("{pos}: index {index} is out of range for register `{register}` of size {size}")]
    IndexOutOfRange {
        pos: Position,
        register: String,
        index: usize,
        size: usize,
    },
    #[error("{pos}: unknown gate `{name}`")]
    UnknownGate { pos: Position, name: String },
    #[error("{pos}: gate `{name}` refers to itself")]
    RecursiveGate { pos: Position, name: String },
    #[error("{pos}: qubit operand repeated in application of `{gate}`")]
    RepeatedQubit { pos: Position, gate: String },
    #[error("{pos}: {message}")]
    Semantic { pos: Position, message: String },
}

impl QasmError {
    pub(crate) fn syntax(pos: Position, message: impl Into<String>) -> Self {
        QasmError::Syntax {
            pos,
            message: message.into(),
        }
    }

    pub(crate) fn semantic(pos: Position, message: impl Into<String>) -> Self {
        QasmError::Semantic {
            pos,
            message: message.into(),
        }
    }

    pub fn position(&self) -> Option<Position> {
        Some(match self {
            QasmError::Syntax { pos, .. }
            | QasmError::UnsupportedInclude { pos, .. }
            | QasmError::DuplicateRegister { pos, .. }
            | QasmError::DuplicateGate { pos, .. }
            | QasmError::IndexOutOfRange { pos, .. }
            | QasmError::UnknownGate { pos, .. }
            | QasmError::RecursiveGate { pos, .. }
            | QasmError::RepeatedQubit { pos, .. }
            | QasmError::Semantic { pos, .. } => *pos,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("unbound parameter `{0}`")]
    Unbound(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{func} is undefined for argument {arg}")]
    Domain { func: &'static str, arg: f64 },
    #[error("expression does not evaluate to a finite number")]
    NonFinite,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FlattenError {
    #[error("`{gate}` expects {expected} qubit operand(s), got {found}")]
    QubitArity {
        gate: String,
        expected: usize,
        found: usize,
    },
    #[error("`{gate}` expects {expected} parameter(s), got {found}")]
    ParamArity {
        gate: String,
        expected: usize,
        found: usize,
    },
    #[error("register-wide application of `{gate}` over registers of unequal sizes")]
    UnequalRegisterSizes { gate: String },
    #[error("unknown gate `{0}`")]
    UnknownGate(String),
    #[error("unknown register `{0}`")]
    UnknownRegister(String),
    #[error("index {index} out of range for register `{register}`")]
    IndexOutOfRange { register: String, index: usize },
    #[error("qubit operand repeated in application of `{0}`")]
    RepeatedQubit(String),
    #[error("unknown gate operand `{0}`")]
    UnknownOperand(String),
    #[error("gate `{0}` is defined recursively")]
    Recursive(String),
    #[error("parameter of `{gate}`: {source}")]
    Param {
        gate: String,
        #[source]
        source: EvalError,
    },
}
