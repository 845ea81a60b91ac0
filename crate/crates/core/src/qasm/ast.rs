// Copyright contributors to the qact project
// SPDX-License-Identifier: Apache-2.0

use super::expr::ParamExpr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegisterKind {
    Quantum,
    Classical,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegisterDecl {
    pub kind: RegisterKind,
    pub name: String,
    pub size: usize,
}

/// A whole register or one element of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Operand {
    Register(String),
    Indexed(String, usize),
}

impl Operand {
    pub fn register(&self) -> &str {
        match self {
            Operand::Register(r) | Operand::Indexed(r, _) => r,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GateApp {
    pub name: String,
    pub params: Vec<ParamExpr>,
    pub operands: Vec<Operand>,
}

/// Application inside a gate body. Operands name the gate's qubit
/// parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct BodyApp {
    pub name: String,
    pub params: Vec<ParamExpr>,
    pub qubits: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GateDef {
    pub name: String,
    pub param_names: Vec<String>,
    pub qubit_params: Vec<String>,
    pub body: Vec<BodyApp>,
}

/// A gate declared without a body.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpaqueDef {
    pub name: String,
    pub param_names: Vec<String>,
    pub qubit_params: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Statement {
    Gate(GateApp),
    Opaque(GateApp),
    Measure {
        qubit: Operand,
        clbit: Operand,
    },
    Barrier(Vec<Operand>),
    Reset(Operand),
    /// `if (creg == value) op;` where `op` is a gate, opaque, measure or reset.
    Conditional {
        creg: String,
        value: u64,
        body: Box<Statement>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct QasmProgram {
    /// Always `"2.0"`.
    pub version: String,
    pub includes: Vec<String>,
    pub declarations: Vec<RegisterDecl>,
    pub opaque_defs: Vec<OpaqueDef>,
    pub gate_defs: Vec<GateDef>,
    pub statements: Vec<Statement>,
}

impl QasmProgram {
    pub fn register(&self, name: &str) -> Option<&RegisterDecl> {
        self.declarations.iter().find(|d| d.name == name)
    }

    pub fn gate_def(&self, name: &str) -> Option<&GateDef> {
        self.gate_defs.iter().find(|g| g.name == name)
    }

    pub fn opaque_def(&self, name: &str) -> Option<&OpaqueDef> {
        self.opaque_defs.iter().find(|g| g.name == name)
    }
}
