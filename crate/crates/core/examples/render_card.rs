// Copyright contributors to the qact project
// SPDX-License-Identifier: Apache-2.0

//! Rendering a card as Markdown for each audience.
//!
//! ```text
//! cargo run --example render_card [card.json] [T|D|O]
//! ```

use std::path::PathBuf;

use qact::{parse_card, render_markdown, Audience};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let path = args.next().map(PathBuf::from).unwrap_or_else(|| {
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/cards/grover.json")
    });
    let audience: Option<Audience> = args.next().map(|a| a.parse()).transpose()?;
    let card = parse_card(&std::fs::read_to_string(&path)?)?;

    match audience {
        Some(a) => print!("{}", render_markdown(&card, Some(a))?),
        None => {
            for a in Audience::ALL {
                match render_markdown(&card, Some(a)) {
                    Ok(doc) => println!("{doc}\n---\n"),
                    Err(e) => eprintln!("{a}: {e}"),
                }
            }
        }
    }
    Ok(())
}
