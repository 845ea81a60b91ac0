// Copyright contributors to the qact project
// SPDX-License-Identifier: Apache-2.0

//! Static resource analysis of an OpenQASM 2.0 circuit.
//!
//! ```text
//! cargo run --example analyze_circuit [path/to/circuit.qasm]
//! ```

use qact::{compute_metrics, flatten, parse_program};

const BELL: &str = r#"
OPENQASM 2.0;
include "qelib1.inc";
qreg q[2];
creg c[2];
h q[0];
cx q[0], q[1];
measure q -> c;
"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let source = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => BELL.to_string(),
    };
    let program = parse_program(&source)?;
    let circuit = flatten(&program)?;
    let m = compute_metrics(&circuit);

    println!("width            {}", m.width);
    println!("depth            {}", m.depth);
    println!("gates            {}", m.total_gate_count());
    println!("two-qubit gates  {}", m.two_qubit_gate_count);
    println!("T-count          {}", m.t_count);
    println!("measurements     {}", m.measure_count);
    println!("log2 QV needed   {}", m.log2_qv_required);
    for (gate, n) in &m.gate_histogram {
        println!("  {gate:<6} x{n}");
    }
    Ok(())
}
