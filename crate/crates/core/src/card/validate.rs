// Copyright contributors to the qact project
// SPDX-License-Identifier: Apache-2.0

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use super::{audience_sections, Audience, QuantumAlgorithmCard, Section};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldError {
    pub path: String,
    pub message: String,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub missing_sections: Vec<Section>,
    pub field_errors: Vec<FieldError>,
}

impl ValidationReport {
    fn new(missing_sections: Vec<Section>, field_errors: Vec<FieldError>) -> Self {
        ValidationReport {
            valid: missing_sections.is_empty() && field_errors.is_empty(),
            missing_sections,
            field_errors,
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid {
            return writeln!(f, "valid");
        }
        writeln!(f, "invalid")?;
        for s in &self.missing_sections {
            writeln!(f, "  missing section: {s}")?;
        }
        for e in &self.field_errors {
            writeln!(f, "  field error: {e}")?;
        }
        Ok(())
    }
}

/// Checks that the sections `audience` reads are present and that every
/// present field satisfies its invariants. Without an audience all seven
/// sections are required.
pub fn validate_card(card: &QuantumAlgorithmCard, audience: Option<Audience>) -> ValidationReport {
    let required = match audience {
        Some(a) => audience_sections(a),
        None => Section::ALL.to_vec(),
    };
    let missing = required
        .into_iter()
        .filter(|s| !card.has_section(*s))
        .collect();
    ValidationReport::new(missing, field_errors(card))
}

/// Invariant violations only, regardless of section presence.
pub(crate) fn field_errors(card: &QuantumAlgorithmCard) -> Vec<FieldError> {
    let mut errors = Errors::default();
    let o = &card.overview;
    errors.non_empty("overview.name", &o.name);
    if !is_semver(&o.version) {
        errors.push(
            "overview.version",
            format!("{:?} is not MAJOR.MINOR.PATCH", o.version),
        );
    }

    if let Some(use_) = &card.intended_use {
        errors.non_empty_list("intended_use.tasks", &use_.tasks);
        errors.non_empty_list("intended_use.scenarios", &use_.scenarios);
    }

    if let Some(usage) = &card.usage_details {
        for (label, list) in [("inputs", &usage.inputs), ("outputs", &usage.outputs)] {
            for (i, io) in list.iter().enumerate() {
                errors.non_empty(&format!("usage_details.{label}[{i}].name"), &io.name);
            }
        }
        if usage.qubits_required < 1 {
            errors.push("usage_details.qubits_required", "must be at least 1");
        }
        if let Some(r) = &usage.circuit_ref {
            errors.non_empty("usage_details.circuit_ref.path", &r.path);
            if !is_sha256_hex(&r.sha256) {
                errors.push(
                    "usage_details.circuit_ref.sha256",
                    "must be 64 lowercase hex characters",
                );
            }
        }
    }

    if let Some(metrics) = &card.performance_metrics {
        errors.at_least_one("performance_metrics", metrics.len());
        let mut seen = HashSet::new();
        for (i, m) in metrics.iter().enumerate() {
            let path = format!("performance_metrics[{i}].name");
            errors.non_empty(&path, &m.name);
            if !seen.insert(m.name.as_str()) {
                errors.push(&path, format!("duplicate metric name {:?}", m.name));
            }
            if m.threshold.is_some_and(|t| !t.is_finite()) {
                errors.push(
                    &format!("performance_metrics[{i}].threshold"),
                    "must be finite",
                );
            }
        }
    }

    if let Some(limits) = &card.limitations {
        errors.at_least_one("limitations", limits.len());
        for (i, l) in limits.iter().enumerate() {
            errors.non_empty(&format!("limitations[{i}].scenario"), &l.scenario);
            errors.non_empty(&format!("limitations[{i}].failure_mode"), &l.failure_mode);
        }
    }

    if let Some(refs) = &card.references {
        errors.at_least_one("references", refs.len());
        for (i, r) in refs.iter().enumerate() {
            errors.non_empty(&format!("references[{i}].citation"), &r.citation);
        }
    }

    if let Some(caveats) = &card.caveats {
        errors.non_empty_list("caveats", caveats);
    }

    errors.0
}

#[derive(Default)]
struct Errors(Vec<FieldError>);

impl Errors {
    fn push(&mut self, path: &str, message: impl Into<String>) {
        self.0.push(FieldError {
            path: path.to_string(),
            message: message.into(),
        });
    }

    fn non_empty(&mut self, path: &str, value: &str) {
        if value.trim().is_empty() {
            self.push(path, "must not be empty");
        }
    }

    fn at_least_one(&mut self, path: &str, len: usize) {
        if len == 0 {
            self.push(path, "must contain at least one entry");
        }
    }

    fn non_empty_list(&mut self, path: &str, items: &[String]) {
        self.at_least_one(path, items.len());
        for (i, item) in items.iter().enumerate() {
            self.non_empty(&format!("{path}[{i}]"), item);
        }
    }
}

pub(crate) fn is_semver(version: &str) -> bool {
    let parts: Vec<&str> = version.split('.').collect();
    parts.len() == 3
        && parts.iter().all(|p| {
            !p.is_empty()
                && p.bytes().all(|b| b.is_ascii_digit())
                && (p.len() == 1 || !p.starts_with('0'))
        })
}

pub(crate) fn is_sha256_hex(digest: &str) -> bool {
    digest.len() == 64
        && digest
            .bytes()
            .all(|b| b.is_ascii_digit() || (b'a'..=b'f').contains(&b))
}
