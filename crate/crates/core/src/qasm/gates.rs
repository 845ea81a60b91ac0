// Copyright contributors to the qact project
// SPDX-License-Identifier: Apache-2.0

/// Built-in gate: name, parameter count, qubit count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuiltinGate {
    pub name: &'static str,
    pub num_params: usize,
    pub num_qubits: usize,
}

const fn gate(name: &'static str, num_params: usize, num_qubits: usize) -> BuiltinGate {
    BuiltinGate {
        name,
        num_params,
        num_qubits,
    }
}

/// The standard gate library. Available whether or not `qelib1.inc` is
/// included.
pub const BUILTIN_GATES: [BuiltinGate; 24] = [
    gate("u1", 1, 1),
    gate("u2", 2, 1),
    gate("u3", 3, 1),
    gate("id", 0, 1),
    gate("x", 0, 1),
    gate("y", 0, 1),
    gate("z", 0, 1),
    gate("h", 0, 1),
    gate("s", 0, 1),
    gate("sdg", 0, 1),
    gate("t", 0, 1),
    gate("tdg", 0, 1),
    gate("rx", 1, 1),
    gate("ry", 1, 1),
    gate("rz", 1, 1),
    gate("cx", 0, 2),
    gate("cz", 0, 2),
    gate("cy", 0, 2),
    gate("ch", 0, 2),
    gate("swap", 0, 2),
    gate("crz", 1, 2),
    gate("cu1", 1, 2),
    gate("cu3", 3, 2),
    gate("ccx", 0, 3),
];

pub fn builtin(name: &str) -> Option<BuiltinGate> {
    BUILTIN_GATES.iter().copied().find(|g| g.name == name)
}
