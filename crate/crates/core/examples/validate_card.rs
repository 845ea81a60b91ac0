// Copyright contributors to the qact project
// SPDX-License-Identifier: Apache-2.0

//! Checking a card against each audience's required sections.

use qact::card::{Limitation, Reference};
use qact::{scaffold_card, validate_card, Audience};

fn main() {
    let mut card = scaffold_card("bell-pair").expect("non-empty name");
    card.overview.description = "Prepares a maximally entangled pair".into();
    card.limitations = Some(vec![Limitation {
        scenario: "Noisy two-qubit gates".into(),
        failure_mode: "Fidelity drops below the entanglement witness bound".into(),
    }]);
    card.references = Some(vec![Reference {
        citation: "Nielsen and Chuang, Quantum Computation and Quantum Information".into(),
        url: None,
    }]);

    for audience in Audience::ALL {
        let report = validate_card(&card, Some(audience));
        println!("{audience} ({}): {report}", audience.description());
    }

    // Field invariants are checked whatever the audience.
    card.overview.version = "1.0".into();
    print!("all audiences: {}", validate_card(&card, None));
}
