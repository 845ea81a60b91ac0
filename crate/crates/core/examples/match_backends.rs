// Copyright contributors to the qact project
// SPDX-License-Identifier: Apache-2.0

//! Ranking backends for a card by fit and cost.

use std::num::NonZeroU64;

use qact::hardware::parse_profiles;
use qact::{compute_metrics, flatten, parse_card, parse_program, rank_backends};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fixtures = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let card = parse_card(&std::fs::read_to_string(
        fixtures.join("cards/grover.json"),
    )?)?;
    let profiles = parse_profiles(&std::fs::read_to_string(
        fixtures.join("profiles/backends.json"),
    )?)?;
    let circuit = flatten(&parse_program(&std::fs::read_to_string(
        fixtures.join("qasm/grover2.qasm"),
    )?)?)?;
    let metrics = compute_metrics(&circuit);

    let shots = NonZeroU64::new(2000);
    for (rank, report) in rank_backends(&card, &profiles, shots, Some(&metrics))?
        .iter()
        .enumerate()
    {
        let verdict = if report.fits { "fits" } else { "does not fit" };
        match report.estimated_cost {
            Some(cost) => println!(
                "{}. {} {verdict}, {cost:.2} for {} shots",
                rank + 1,
                report.backend,
                shots.unwrap()
            ),
            None => println!("{}. {} {verdict}", rank + 1, report.backend),
        }
        for check in report.checks.iter().filter(|c| !c.pass) {
            println!(
                "   {} needs {}, has {}",
                check.name, check.required, check.available
            );
        }
        for note in &report.notes {
            println!("   {note}");
        }
    }
    Ok(())
}
