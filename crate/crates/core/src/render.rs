// Copyright contributors to the qact project
// SPDX-License-Identifier: Apache-2.0

//! CommonMark rendering of cards.

use std::fmt::Write;

use thiserror::Error;

use crate::card::{
    audience_sections, validate::field_errors, validate_card, Audience, IoSpec,
    QuantumAlgorithmCard, Section, ValidationReport,
};

#[derive(Debug, Clone, Error)]
#[error("card is not valid for rendering:\n{report}")]
pub struct RenderError {
    pub report: ValidationReport,
}

/// Renders `card` as Markdown.
///
/// With an audience, exactly that audience's sections are rendered and the
/// card must validate for it. Without one, every present section is
/// rendered and only field invariants are checked.
pub fn render_markdown(
    card: &QuantumAlgorithmCard,
    audience: Option<Audience>,
) -> Result<String, RenderError> {
    let sections = match audience {
        Some(a) => {
            let report = validate_card(card, Some(a));
            if !report.valid {
                return Err(RenderError { report });
            }
            audience_sections(a)
        }
        None => {
            let errors = field_errors(card);
            if !errors.is_empty() {
                return Err(RenderError {
                    report: ValidationReport {
                        valid: false,
                        missing_sections: Vec::new(),
                        field_errors: errors,
                    },
                });
            }
            card.present_sections()
        }
    };

    let mut out = String::new();
    let o = &card.overview;
    writeln!(out, "# {} v{}", inline(&o.name), o.version).unwrap();
    writeln!(out).unwrap();
    match audience {
        Some(a) => writeln!(
            out,
            "_Quantum algorithm card for {} ({a})._",
            a.description()
        ),
        None => writeln!(out, "_Quantum algorithm card._"),
    }
    .unwrap();
    for section in sections {
        writeln!(out).unwrap();
        writeln!(out, "## {}", section.title()).unwrap();
        writeln!(out).unwrap();
        render_section(&mut out, card, section);
    }
    Ok(out)
}

fn render_section(out: &mut String, card: &QuantumAlgorithmCard, section: Section) {
    match section {
        Section::Overview => {
            let o = &card.overview;
            for (label, value) in [
                ("Provider", &o.provider),
                ("Maintainer", &o.maintainer),
                ("Description", &o.description),
                ("Approach", &o.approach),
                ("Complexity", &o.complexity),
            ] {
                writeln!(out, "- **{label}:** {}", inline(value)).unwrap();
            }
        }
        Section::IntendedUse => {
            let u = card.intended_use.as_ref().expect("section present");
            bullet_block(out, "Tasks", &u.tasks);
            writeln!(out).unwrap();
            bullet_block(out, "Scenarios", &u.scenarios);
        }
        Section::UsageDetails => {
            let u = card.usage_details.as_ref().expect("section present");
            io_table(out, "Inputs", &u.inputs);
            writeln!(out).unwrap();
            io_table(out, "Outputs", &u.outputs);
            writeln!(out).unwrap();
            writeln!(out, "**Requirements**").unwrap();
            writeln!(out).unwrap();
            writeln!(out, "| Requirement | Value |").unwrap();
            writeln!(out, "| --- | --- |").unwrap();
            writeln!(out, "| Qubits | {} |", u.qubits_required).unwrap();
            writeln!(out, "| Circuit depth | {} |", u.circuit_depth).unwrap();
            writeln!(out, "| Quantum volume (log2) | {} |", u.log2_qv_required).unwrap();
            let mid = if u.uses_mid_circuit_control {
                "yes"
            } else {
                "no"
            };
            writeln!(out, "| Mid-circuit control | {mid} |").unwrap();
            if let Some(r) = &u.circuit_ref {
                writeln!(out, "| Circuit | `{}` |", cell(&r.path)).unwrap();
                writeln!(out, "| Circuit SHA-256 | `{}` |", r.sha256).unwrap();
            }
        }
        Section::PerformanceMetrics => {
            let metrics = card.performance_metrics.as_ref().expect("section present");
            writeln!(out, "| Metric | Description | Threshold | Direction |").unwrap();
            writeln!(out, "| --- | --- | --- | --- |").unwrap();
            for m in metrics {
                let threshold = m
                    .threshold
                    .map_or_else(|| "n/a".to_string(), |t| t.to_string());
                writeln!(
                    out,
                    "| {} | {} | {threshold} | {} |",
                    cell(&m.name),
                    cell(&m.description),
                    m.direction
                )
                .unwrap();
            }
        }
        Section::Limitations => {
            for l in card.limitations.as_ref().expect("section present") {
                writeln!(
                    out,
                    "- **{}:** {}",
                    inline(&l.scenario),
                    inline(&l.failure_mode)
                )
                .unwrap();
            }
        }
        Section::References => {
            for (i, r) in card
                .references
                .as_ref()
                .expect("section present")
                .iter()
                .enumerate()
            {
                match &r.url {
                    Some(url) => writeln!(out, "{}. {} <{url}>", i + 1, inline(&r.citation)),
                    None => writeln!(out, "{}. {}", i + 1, inline(&r.citation)),
                }
                .unwrap();
            }
        }
        Section::Caveats => {
            for c in card.caveats.as_ref().expect("section present") {
                writeln!(out, "- {}", inline(c)).unwrap();
            }
        }
    }
}

fn bullet_block(out: &mut String, label: &str, items: &[String]) {
    writeln!(out, "**{label}**").unwrap();
    writeln!(out).unwrap();
    for item in items {
        writeln!(out, "- {}", inline(item)).unwrap();
    }
}

fn io_table(out: &mut String, label: &str, items: &[IoSpec]) {
    writeln!(out, "**{label}**").unwrap();
    writeln!(out).unwrap();
    if items.is_empty() {
        writeln!(out, "_None declared._").unwrap();
        return;
    }
    writeln!(out, "| Name | Type | Description |").unwrap();
    writeln!(out, "| --- | --- | --- |").unwrap();
    for io in items {
        writeln!(
            out,
            "| {} | {} | {} |",
            cell(&io.name),
            cell(&io.type_description),
            cell(&io.description)
        )
        .unwrap();
    }
}

/// Collapses line breaks so a value stays on one Markdown line.
fn inline(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn cell(text: &str) -> String {
    inline(text).replace('|', "\\|")
}
