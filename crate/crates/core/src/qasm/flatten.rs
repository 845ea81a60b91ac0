// Copyright contributors to the qact project
// SPDX-License-Identifier: Apache-2.0

//! Lowering of a parsed program to a flat list of operations on global
//! qubit and clbit indices.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::ast::*;
use super::error::FlattenError;
use super::expr::{eval_param_expr, ParamExpr};
use super::gates;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OpKind {
    BuiltinGate,
    OpaqueGate,
    Measure,
    Reset,
    Barrier,
}

/// Classical condition guarding an op: the clbits of the tested register
/// and the value it is compared against.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub clbits: Vec<usize>,
    pub value: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FlatOp {
    pub kind: OpKind,
    pub name: String,
    pub params: Vec<f64>,
    pub qubits: Vec<usize>,
    pub clbits: Vec<usize>,
    pub condition: Option<Condition>,
}

impl FlatOp {
    pub fn gate(name: &str, qubits: &[usize]) -> Self {
        FlatOp {
            kind: OpKind::BuiltinGate,
            name: name.to_string(),
            params: Vec::new(),
            qubits: qubits.to_vec(),
            clbits: Vec::new(),
            condition: None,
        }
    }

    pub fn opaque(name: &str, qubits: &[usize]) -> Self {
        FlatOp {
            kind: OpKind::OpaqueGate,
            ..FlatOp::gate(name, qubits)
        }
    }

    pub fn measure(qubit: usize, clbit: usize) -> Self {
        FlatOp {
            kind: OpKind::Measure,
            name: "measure".to_string(),
            params: Vec::new(),
            qubits: vec![qubit],
            clbits: vec![clbit],
            condition: None,
        }
    }

    pub fn reset(qubit: usize) -> Self {
        FlatOp {
            kind: OpKind::Reset,
            ..FlatOp::gate("reset", &[qubit])
        }
    }

    pub fn barrier(qubits: &[usize]) -> Self {
        FlatOp {
            kind: OpKind::Barrier,
            ..FlatOp::gate("barrier", qubits)
        }
    }

    pub fn with_params(mut self, params: Vec<f64>) -> Self {
        self.params = params;
        self
    }

    pub fn with_condition(mut self, clbits: Vec<usize>, value: u64) -> Self {
        self.condition = Some(Condition { clbits, value });
        self
    }

    pub fn is_conditional(&self) -> bool {
        self.condition.is_some()
    }

    pub fn is_gate(&self) -> bool {
        matches!(self.kind, OpKind::BuiltinGate | OpKind::OpaqueGate)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct FlatCircuit {
    pub num_qubits: usize,
    pub num_clbits: usize,
    pub ops: Vec<FlatOp>,
}

impl FlatCircuit {
    pub fn new(num_qubits: usize, num_clbits: usize) -> Self {
        FlatCircuit {
            num_qubits,
            num_clbits,
            ops: Vec::new(),
        }
    }

    pub fn push(&mut self, op: FlatOp) -> &mut Self {
        self.ops.push(op);
        self
    }
}

/// Expands register shorthand, inlines user-defined gates down to built-in
/// ones and resolves every parameter to a number. Conditions are copied to
/// each op they expand into. Opaque gates stay atomic.
pub fn flatten(program: &QasmProgram) -> Result<FlatCircuit, FlattenError> {
    let mut qregs = HashMap::new();
    let mut cregs = HashMap::new();
    let (mut num_qubits, mut num_clbits) = (0, 0);
    for d in &program.declarations {
        match d.kind {
            RegisterKind::Quantum => {
                qregs.insert(d.name.as_str(), (num_qubits, d.size));
                num_qubits += d.size;
            }
            RegisterKind::Classical => {
                cregs.insert(d.name.as_str(), (num_clbits, d.size));
                num_clbits += d.size;
            }
        }
    }
    let mut flattener = Flattener {
        program,
        qregs,
        cregs,
        ops: Vec::new(),
    };
    for stmt in &program.statements {
        flattener.statement(stmt, None)?;
    }
    Ok(FlatCircuit {
        num_qubits,
        num_clbits,
        ops: flattener.ops,
    })
}

struct Flattener<'p> {
    program: &'p QasmProgram,
    qregs: HashMap<&'p str, (usize, usize)>,
    cregs: HashMap<&'p str, (usize, usize)>,
    ops: Vec<FlatOp>,
}

/// One resolved operand: a single index, or a whole register.
enum Resolved {
    One(usize),
    Many(usize, usize),
}

impl Resolved {
    fn at(&self, i: usize) -> usize {
        match *self {
            Resolved::One(idx) => idx,
            Resolved::Many(start, _) => start + i,
        }
    }
}

impl<'p> Flattener<'p> {
    fn resolve(
        table: &HashMap<&str, (usize, usize)>,
        operand: &Operand,
    ) -> Result<Resolved, FlattenError> {
        let (start, size) = *table
            .get(operand.register())
            .ok_or_else(|| FlattenError::UnknownRegister(operand.register().to_string()))?;
        match operand {
            Operand::Register(_) => Ok(Resolved::Many(start, size)),
            Operand::Indexed(r, i) if *i < size => Ok(Resolved::One(start + i)),
            Operand::Indexed(r, i) => Err(FlattenError::IndexOutOfRange {
                register: r.clone(),
                index: *i,
            }),
        }
    }

    /// Number of index-wise repetitions for a set of operands.
    fn broadcast_len(gate: &str, operands: &[Resolved]) -> Result<usize, FlattenError> {
        let mut len = None;
        for o in operands {
            if let Resolved::Many(_, size) = o {
                match len {
                    None => len = Some(*size),
                    Some(l) if l == *size => {}
                    Some(_) => {
                        return Err(FlattenError::UnequalRegisterSizes {
                            gate: gate.to_string(),
                        })
                    }
                }
            }
        }
        Ok(len.unwrap_or(1))
    }

    fn condition(&self, creg: &str, value: u64) -> Result<Condition, FlattenError> {
        let (start, size) = *self
            .cregs
            .get(creg)
            .ok_or_else(|| FlattenError::UnknownRegister(creg.to_string()))?;
        Ok(Condition {
            clbits: (start..start + size).collect(),
            value,
        })
    }

    fn statement(
        &mut self,
        stmt: &Statement,
        cond: Option<&Condition>,
    ) -> Result<(), FlattenError> {
        match stmt {
            Statement::Gate(app) | Statement::Opaque(app) => {
                let params = app
                    .params
                    .iter()
                    .map(|p| eval(&app.name, p, &HashMap::new()))
                    .collect::<Result<Vec<_>, _>>()?;
                let operands = app
                    .operands
                    .iter()
                    .map(|o| Self::resolve(&self.qregs, o))
                    .collect::<Result<Vec<_>, _>>()?;
                let reps = Self::broadcast_len(&app.name, &operands)?;
                for i in 0..reps {
                    let qubits: Vec<usize> = operands.iter().map(|o| o.at(i)).collect();
                    for (k, q) in qubits.iter().enumerate() {
                        if qubits[..k].contains(q) {
                            return Err(FlattenError::RepeatedQubit(app.name.clone()));
                        }
                    }
                    self.apply(&app.name, &params, &qubits, cond, &mut Vec::new())?;
                }
            }
            Statement::Measure { qubit, clbit } => {
                let q = Self::resolve(&self.qregs, qubit)?;
                let c = Self::resolve(&self.cregs, clbit)?;
                let reps = match (&q, &c) {
                    (Resolved::One(_), Resolved::One(_)) => 1,
                    (Resolved::Many(_, a), Resolved::Many(_, b)) if a == b => *a,
                    _ => {
                        return Err(FlattenError::UnequalRegisterSizes {
                            gate: "measure".to_string(),
                        })
                    }
                };
                for i in 0..reps {
                    self.emit(FlatOp::measure(q.at(i), c.at(i)), cond);
                }
            }
            Statement::Reset(operand) => {
                let q = Self::resolve(&self.qregs, operand)?;
                let reps = Self::broadcast_len("reset", std::slice::from_ref(&q))?;
                for i in 0..reps {
                    self.emit(FlatOp::reset(q.at(i)), cond);
                }
            }
            Statement::Barrier(operands) => {
                let mut qubits = Vec::new();
                for o in operands {
                    let r = Self::resolve(&self.qregs, o)?;
                    let n = Self::broadcast_len("barrier", std::slice::from_ref(&r))?;
                    for i in 0..n {
                        let q = r.at(i);
                        if !qubits.contains(&q) {
                            qubits.push(q);
                        }
                    }
                }
                self.emit(FlatOp::barrier(&qubits), cond);
            }
            Statement::Conditional { creg, value, body } => {
                let c = self.condition(creg, *value)?;
                self.statement(body, Some(&c))?;
            }
        }
        Ok(())
    }

    fn emit(&mut self, mut op: FlatOp, cond: Option<&Condition>) {
        op.condition = cond.cloned();
        self.ops.push(op);
    }

    fn apply(
        &mut self,
        name: &str,
        params: &[f64],
        qubits: &[usize],
        cond: Option<&Condition>,
        stack: &mut Vec<String>,
    ) -> Result<(), FlattenError> {
        if let Some(g) = gates::builtin(name) {
            check_arity(name, g.num_params, g.num_qubits, params, qubits)?;
            self.emit(
                FlatOp::gate(name, qubits).with_params(params.to_vec()),
                cond,
            );
            return Ok(());
        }
        if let Some(def) = self.program.gate_def(name) {
            check_arity(
                name,
                def.param_names.len(),
                def.qubit_params.len(),
                params,
                qubits,
            )?;
            if stack.iter().any(|s| s == name) {
                return Err(FlattenError::Recursive(name.to_string()));
            }
            stack.push(name.to_string());
            let bindings: HashMap<String, f64> = def
                .param_names
                .iter()
                .cloned()
                .zip(params.iter().copied())
                .collect();
            for app in &def.body {
                let inner_params = app
                    .params
                    .iter()
                    .map(|p| eval(&app.name, p, &bindings))
                    .collect::<Result<Vec<_>, _>>()?;
                let inner_qubits = app
                    .qubits
                    .iter()
                    .map(|q| {
                        def.qubit_params
                            .iter()
                            .position(|d| d == q)
                            .map(|i| qubits[i])
                            .ok_or_else(|| FlattenError::UnknownOperand(q.clone()))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                self.apply(&app.name, &inner_params, &inner_qubits, cond, stack)?;
            }
            stack.pop();
            return Ok(());
        }
        if let Some(def) = self.program.opaque_def(name) {
            check_arity(
                name,
                def.param_names.len(),
                def.qubit_params.len(),
                params,
                qubits,
            )?;
            self.emit(
                FlatOp::opaque(name, qubits).with_params(params.to_vec()),
                cond,
            );
            return Ok(());
        }
        Err(FlattenError::UnknownGate(name.to_string()))
    }
}

fn eval(
    gate: &str,
    expr: &ParamExpr,
    bindings: &HashMap<String, f64>,
) -> Result<f64, FlattenError> {
    eval_param_expr(expr, bindings).map_err(|source| FlattenError::Param {
        gate: gate.to_string(),
        source,
    })
}

fn check_arity(
    gate: &str,
    num_params: usize,
    num_qubits: usize,
    params: &[f64],
    qubits: &[usize],
) -> Result<(), FlattenError> {
    if qubits.len() != num_qubits {
        return Err(FlattenError::QubitArity {
            gate: gate.to_string(),
            expected: num_qubits,
            found: qubits.len(),
        });
    }
    if params.len() != num_params {
        return Err(FlattenError::ParamArity {
            gate: gate.to_string(),
            expected: num_params,
            found: params.len(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qasm::parse_program;

    fn flat(src: &str) -> FlatCircuit {
        flatten(&parse_program(src).unwrap()).unwrap()
    }

    fn names(c: &FlatCircuit) -> Vec<&str> {
        c.ops.iter().map(|o| o.name.as_str()).collect()
    }

    #[test]
    fn one_level_inlining() {
        let c = flat("OPENQASM 2.0; qreg q[2]; gate mygate a,b { h a; cx a,b; } mygate q[0],q[1];");
        assert_eq!(names(&c), vec!["h", "cx"]);
        assert_eq!(c.ops[1].qubits, vec![0, 1]);
    }

    #[test]
    fn register_shorthand_expands_indexwise() {
        let c = flat("OPENQASM 2.0; qreg q[3]; h q;");
        assert_eq!(c.ops.len(), 3);
        for (i, op) in c.ops.iter().enumerate() {
            assert_eq!(op.name, "h");
            assert_eq!(op.qubits, vec![i]);
        }
    }

    #[test]
    fn bell_expansion() {
        let c = flat("OPENQASM 2.0; qreg q[2]; creg c[2]; h q[0]; cx q[0],q[1]; measure q -> c;");
        assert_eq!(c.num_qubits, 2);
        assert_eq!(c.num_clbits, 2);
        assert_eq!(
            c.ops,
            vec![
                FlatOp::gate("h", &[0]),
                FlatOp::gate("cx", &[0, 1]),
                FlatOp::measure(0, 0),
                FlatOp::measure(1, 1),
            ]
        );
    }

    #[test]
    fn registers_map_to_contiguous_indices() {
        let c = flat("OPENQASM 2.0; qreg a[2]; creg m[1]; qreg b[2]; creg n[2]; cx a, b; measure b[1] -> n[0];");
        assert_eq!(c.num_qubits, 4);
        assert_eq!(c.ops[0].qubits, vec![0, 2]);
        assert_eq!(c.ops[1].qubits, vec![1, 3]);
        assert_eq!(c.ops[2].qubits, vec![3]);
        assert_eq!(c.ops[2].clbits, vec![1]);
    }

    #[test]
    fn nested_inlining_resolves_parameters() {
        let c = flat(
            "OPENQASM 2.0; qreg q[2];\n\
             gate half(t) a { rz(t/2) a; }\n\
             gate twice(t) a, b { half(2*t) a; crz(t) b, a; }\n\
             twice(pi) q[1], q[0];",
        );
        assert_eq!(names(&c), vec!["rz", "crz"]);
        assert_eq!(c.ops[0].params, vec![std::f64::consts::PI]);
        assert_eq!(c.ops[0].qubits, vec![1]);
        assert_eq!(c.ops[1].qubits, vec![0, 1]);
    }

    #[test]
    fn conditions_and_opaque_survive() {
        let c = flat(
            "OPENQASM 2.0; qreg q[2]; creg x[1]; creg c[2]; opaque v a;\n\
             gate pair a, b { x a; v b; }\n\
             if (c==2) pair q[0], q[1]; barrier q; reset q;",
        );
        assert_eq!(names(&c), vec!["x", "v", "barrier", "reset", "reset"]);
        assert_eq!(c.ops[1].kind, OpKind::OpaqueGate);
        let cond = c.ops[0].condition.as_ref().unwrap();
        assert_eq!(cond.clbits, vec![1, 2]);
        assert_eq!(cond.value, 2);
        assert!(c.ops[1].is_conditional());
        assert!(!c.ops[2].is_conditional());
        assert_eq!(c.ops[2].qubits, vec![0, 1]);
    }

    #[test]
    fn hand_built_programs_report_flatten_errors() {
        let mut p = parse_program(
            "OPENQASM 2.0; qreg a[2]; qreg b[3]; gate g x, y { cx x, y; } g a[0], b[0];",
        )
        .unwrap();
        if let Statement::Gate(app) = &mut p.statements[0] {
            app.operands = vec![Operand::Register("a".into()), Operand::Register("b".into())];
        }
        assert!(matches!(
            flatten(&p),
            Err(FlattenError::UnequalRegisterSizes { .. })
        ));
        if let Statement::Gate(app) = &mut p.statements[0] {
            app.operands = vec![Operand::Indexed("a".into(), 0)];
        }
        assert!(matches!(
            flatten(&p),
            Err(FlattenError::QubitArity {
                expected: 2,
                found: 1,
                ..
            })
        ));
        if let Statement::Gate(app) = &mut p.statements[0] {
            app.name = "nope".into();
        }
        assert!(matches!(flatten(&p), Err(FlattenError::UnknownGate(_))));
    }

    #[test]
    fn parameter_errors_surface() {
        let p = parse_program("OPENQASM 2.0; qreg q[1]; rx(1/0) q[0];").unwrap();
        assert!(matches!(flatten(&p), Err(FlattenError::Param { .. })));
    }
}
