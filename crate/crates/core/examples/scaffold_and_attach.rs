// Copyright contributors to the qact project
// SPDX-License-Identifier: Apache-2.0

//! Starting a card and filling its derived fields from a circuit.

use qact::generator::{attach_circuit, derived_changes, sha256_hex};
use qact::{compute_metrics, flatten, parse_program, scaffold_card, serialize_card};

const GROVER: &str = r#"
OPENQASM 2.0;
include "qelib1.inc";
qreg q[2];
creg c[2];
h q;
cz q[0], q[1];
h q;
z q;
cz q[0], q[1];
h q;
measure q -> c;
"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let card = scaffold_card("grover-search")?;
    let metrics = compute_metrics(&flatten(&parse_program(GROVER)?)?);
    let attached = attach_circuit(
        &card,
        &metrics,
        "grover2.qasm",
        &sha256_hex(GROVER.as_bytes()),
    )?;

    for change in derived_changes(&card, &attached) {
        println!(
            "{}: {} -> {}",
            change.path,
            change.before.as_deref().unwrap_or("(absent)"),
            change.after
        );
    }
    // Attaching the same circuit again is a no-op.
    let again = attach_circuit(
        &attached,
        &metrics,
        "grover2.qasm",
        &sha256_hex(GROVER.as_bytes()),
    )?;
    assert_eq!(again, attached);

    print!("{}", serialize_card(&attached));
    Ok(())
}
