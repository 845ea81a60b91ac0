// Copyright contributors to the qact project
// SPDX-License-Identifier: Apache-2.0

//! Canonical OpenQASM 2.0 printer. The output of [`print_program`] parses
//! back to an equal [`QasmProgram`].

use std::fmt::{self, Write};

use super::ast::*;

impl fmt::Display for Operand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operand::Register(r) => f.write_str(r),
            Operand::Indexed(r, i) => write!(f, "{r}[{i}]"),
        }
    }
}

fn join<T: fmt::Display>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn params<T: fmt::Display>(items: &[T]) -> String {
    if items.is_empty() {
        String::new()
    } else {
        format!("({})", join(items, ", "))
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Gate(app) | Statement::Opaque(app) => write!(
                f,
                "{}{} {};",
                app.name,
                params(&app.params),
                join(&app.operands, ", ")
            ),
            Statement::Measure { qubit, clbit } => write!(f, "measure {qubit} -> {clbit};"),
            Statement::Barrier(ops) => write!(f, "barrier {};", join(ops, ", ")),
            Statement::Reset(q) => write!(f, "reset {q};"),
            Statement::Conditional { creg, value, body } => {
                write!(f, "if ({creg} == {value}) {body}")
            }
        }
    }
}

pub fn print_program(program: &QasmProgram) -> String {
    let mut out = String::new();
    writeln!(out, "OPENQASM {};", program.version).unwrap();
    for inc in &program.includes {
        writeln!(out, "include \"{inc}\";").unwrap();
    }
    for d in &program.declarations {
        let kw = match d.kind {
            RegisterKind::Quantum => "qreg",
            RegisterKind::Classical => "creg",
        };
        writeln!(out, "{kw} {}[{}];", d.name, d.size).unwrap();
    }
    for o in &program.opaque_defs {
        writeln!(
            out,
            "opaque {}{} {};",
            o.name,
            params(&o.param_names),
            o.qubit_params.join(", ")
        )
        .unwrap();
    }
    for g in &program.gate_defs {
        let header_params = if g.param_names.is_empty() {
            String::new()
        } else {
            format!("({})", g.param_names.join(", "))
        };
        writeln!(
            out,
            "gate {}{} {} {{",
            g.name,
            header_params,
            g.qubit_params.join(", ")
        )
        .unwrap();
        for app in &g.body {
            writeln!(
                out,
                "  {}{} {};",
                app.name,
                params(&app.params),
                app.qubits.join(", ")
            )
            .unwrap();
        }
        writeln!(out, "}}").unwrap();
    }
    for s in &program.statements {
        writeln!(out, "{s}").unwrap();
    }
    out
}
