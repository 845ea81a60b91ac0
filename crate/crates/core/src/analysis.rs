// Copyright contributors to the qact project
// SPDX-License-Identifier: Apache-2.0

//! Resource metrics of a flattened circuit.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::qasm::{FlatCircuit, OpKind};

/// Static resource figures for one circuit.
///
/// `gate_histogram` and `counts_by_arity` cover built-in and opaque gates
/// only. Measures are tallied in `measure_count`; resets and barriers are
/// not gates and appear in neither.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircuitMetrics {
    /// Declared qubits.
    pub num_qubits: usize,
    /// Qubits touched by at least one non-barrier op.
    pub width: usize,
    pub num_clbits: usize,
    pub depth: usize,
    pub gate_histogram: BTreeMap<String, usize>,
    pub counts_by_arity: BTreeMap<usize, usize>,
    pub two_qubit_gate_count: usize,
    pub t_count: usize,
    pub measure_count: usize,
    pub has_opaque: bool,
    pub uses_mid_circuit_control: bool,
    pub log2_qv_required: usize,
}

impl CircuitMetrics {
    pub fn total_gate_count(&self) -> usize {
        self.gate_histogram.values().sum()
    }
}

/// Log2 of the quantum volume needed to run a circuit of the given shape,
/// taking the square-circuit convention `QV = 2^n` for an `n x n` circuit.
pub fn qv_requirement(width: usize, depth: usize) -> usize {
    width.max(depth)
}

/// As-soon-as-possible layer count.
///
/// Each wire (qubit or clbit) remembers the layer of the last op on it. A
/// non-barrier op lands one layer after the latest of its wires: its
/// qubits, the clbits it writes, and the clbits of its condition. A barrier
/// lifts all its qubits to their common maximum without taking a layer.
pub fn compute_depth(circuit: &FlatCircuit) -> usize {
    let mut qubit_layer = vec![0usize; circuit.num_qubits];
    let mut clbit_layer = vec![0usize; circuit.num_clbits];
    let mut depth = 0;
    for op in &circuit.ops {
        let cond_bits = op.condition.as_ref().map_or(&[][..], |c| &c.clbits[..]);
        let latest = op
            .qubits
            .iter()
            .map(|&q| qubit_layer[q])
            .chain(op.clbits.iter().chain(cond_bits).map(|&c| clbit_layer[c]))
            .max()
            .unwrap_or(0);
        let layer = if op.kind == OpKind::Barrier {
            latest
        } else {
            latest + 1
        };
        for &q in &op.qubits {
            qubit_layer[q] = layer;
        }
        if op.kind != OpKind::Barrier {
            for &c in op.clbits.iter().chain(cond_bits) {
                clbit_layer[c] = layer;
            }
        }
        depth = depth.max(layer);
    }
    depth
}

pub fn compute_metrics(circuit: &FlatCircuit) -> CircuitMetrics {
    let mut touched = BTreeSet::new();
    let mut gate_histogram = BTreeMap::new();
    let mut counts_by_arity = BTreeMap::new();
    let mut measured = HashSet::new();
    let mut measure_count = 0;
    let mut has_opaque = false;
    let mut mid_circuit = false;

    for op in &circuit.ops {
        if op.kind == OpKind::Barrier {
            continue;
        }
        touched.extend(op.qubits.iter().copied());
        if op.is_conditional() {
            mid_circuit = true;
        }
        match op.kind {
            OpKind::Measure => {
                measure_count += 1;
                measured.extend(op.qubits.iter().copied());
            }
            OpKind::Reset | OpKind::BuiltinGate | OpKind::OpaqueGate => {
                if op.qubits.iter().any(|q| measured.contains(q)) {
                    mid_circuit = true;
                }
                if op.is_gate() {
                    *gate_histogram.entry(op.name.clone()).or_insert(0) += 1;
                    *counts_by_arity.entry(op.qubits.len()).or_insert(0) += 1;
                    has_opaque |= op.kind == OpKind::OpaqueGate;
                }
            }
            OpKind::Barrier => unreachable!(),
        }
    }

    let width = touched.len();
    let depth = compute_depth(circuit);
    let t_count = ["t", "tdg"]
        .iter()
        .filter_map(|g| gate_histogram.get(*g))
        .sum();
    CircuitMetrics {
        num_qubits: circuit.num_qubits,
        width,
        num_clbits: circuit.num_clbits,
        depth,
        two_qubit_gate_count: counts_by_arity.get(&2).copied().unwrap_or(0),
        gate_histogram,
        counts_by_arity,
        t_count,
        measure_count,
        has_opaque,
        uses_mid_circuit_control: mid_circuit,
        log2_qv_required: qv_requirement(width, depth),
    }
}
