// Copyright contributors to the qact project
// SPDX-License-Identifier: Apache-2.0

//! Inlining user-defined gates and expanding register shorthand.

use qact::qasm::{flatten, parse_program, print_program};

const SOURCE: &str = r#"
OPENQASM 2.0;
include "qelib1.inc";
gate majority a, b, c {
  cx c, b;
  cx c, a;
  ccx a, b, c;
}
gate phase_pair(theta) a, b {
  rz(theta / 2) a;
  rz(-theta / 2) b;
}
qreg q[3];
qreg anc[3];
creg out[3];
majority q[0], q[1], q[2];
phase_pair(pi) q[0], anc[0];
cx q, anc;
measure anc -> out;
if (out == 5) x q[2];
"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let program = parse_program(SOURCE)?;
    println!("canonical source:\n{}", print_program(&program));

    let circuit = flatten(&program)?;
    println!(
        "{} qubits, {} clbits",
        circuit.num_qubits, circuit.num_clbits
    );
    for op in &circuit.ops {
        let params: Vec<String> = op.params.iter().map(|p| format!("{p:.4}")).collect();
        let mut line = format!("{:<8} q{:?}", op.name, op.qubits);
        if !params.is_empty() {
            line.push_str(&format!(" ({})", params.join(", ")));
        }
        if !op.clbits.is_empty() {
            line.push_str(&format!(" -> c{:?}", op.clbits));
        }
        if let Some(cond) = &op.condition {
            line.push_str(&format!(" if c{:?} == {}", cond.clbits, cond.value));
        }
        println!("{line}");
    }
    Ok(())
}
