// Copyright contributors to the qact project
// SPDX-License-Identifier: Apache-2.0

//! The quantum algorithm card data model and its canonical JSON form.
//!
//! A card has seven sections. Only the overview is mandatory at parse time;
//! which of the others must be present depends on who is reading the card
//! (see [`Audience`] and [`validate_card`]).
//!
//! The canonical form is pretty-printed JSON (two-space indent, trailing
//! newline) with keys in declaration order and absent sections omitted.
//! Serializing a parsed canonical document reproduces it byte for byte.

mod section;
pub(crate) mod validate;

pub use section::{audience_sections, Audience, ParseAudienceError, Section};
pub use validate::{validate_card, FieldError, ValidationReport};

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// The only card format version this crate reads and writes.
pub const QAC_VERSION: &str = "0.1";

/// Marker for the card format version. Serializes as `"0.1"` and refuses
/// anything else on the way in.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct FormatVersion;

impl fmt::Display for FormatVersion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(QAC_VERSION)
    }
}

impl Serialize for FormatVersion {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(QAC_VERSION)
    }
}

impl<'de> Deserialize<'de> for FormatVersion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = String::deserialize(deserializer)?;
        if raw == QAC_VERSION {
            Ok(FormatVersion)
        } else {
            Err(serde::de::Error::custom(format!(
                "unsupported qac_version \"{raw}\", expected \"{QAC_VERSION}\""
            )))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuantumAlgorithmCard {
    pub qac_version: FormatVersion,
    pub overview: Overview,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub intended_use: Option<IntendedUse>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub usage_details: Option<UsageDetails>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub performance_metrics: Option<Vec<MetricSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub limitations: Option<Vec<Limitation>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub references: Option<Vec<Reference>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub caveats: Option<Vec<String>>,
}

/// Administrative information plus a summary of what the algorithm does
/// and how expensive it is.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Overview {
    pub name: String,
    /// `MAJOR.MINOR.PATCH`.
    pub version: String,
    pub provider: String,
    pub maintainer: String,
    pub description: String,
    /// High-level architecture or approach.
    pub approach: String,
    /// Free text, e.g. `O(sqrt(N)) oracle queries`.
    pub complexity: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntendedUse {
    pub tasks: Vec<String>,
    pub scenarios: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IoSpec {
    pub name: String,
    #[serde(rename = "type")]
    pub type_description: String,
    pub description: String,
}

/// How to call the algorithm and what it needs to run. The numeric fields
/// are normally filled in from circuit analysis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UsageDetails {
    pub inputs: Vec<IoSpec>,
    pub outputs: Vec<IoSpec>,
    pub qubits_required: u64,
    pub circuit_depth: u64,
    pub log2_qv_required: u64,
    pub uses_mid_circuit_control: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circuit_ref: Option<CircuitRef>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircuitRef {
    pub path: String,
    /// Lowercase hex digest of the circuit file bytes.
    pub sha256: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    HigherIsBetter,
    LowerIsBetter,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::HigherIsBetter => "higher is better",
            Direction::LowerIsBetter => "lower is better",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetricSpec {
    pub name: String,
    pub description: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threshold: Option<f64>,
    pub direction: Direction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Limitation {
    pub scenario: String,
    pub failure_mode: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Reference {
    pub citation: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub url: Option<String>,
}

impl QuantumAlgorithmCard {
    /// A card holding only an overview.
    pub fn new(overview: Overview) -> Self {
        QuantumAlgorithmCard {
            qac_version: FormatVersion,
            overview,
            intended_use: None,
            usage_details: None,
            performance_metrics: None,
            limitations: None,
            references: None,
            caveats: None,
        }
    }

    /// Whether `section` is present in this card.
    pub fn has_section(&self, section: Section) -> bool {
        match section {
            Section::Overview => true,
            Section::IntendedUse => self.intended_use.is_some(),
            Section::UsageDetails => self.usage_details.is_some(),
            Section::PerformanceMetrics => self.performance_metrics.is_some(),
            Section::Limitations => self.limitations.is_some(),
            Section::References => self.references.is_some(),
            Section::Caveats => self.caveats.is_some(),
        }
    }

    pub fn present_sections(&self) -> Vec<Section> {
        Section::ALL
            .into_iter()
            .filter(|s| self.has_section(*s))
            .collect()
    }
}

#[derive(Debug, Error)]
pub enum CardParseError {
    #[error("malformed card document at line {line}, column {column}: {message}")]
    Malformed {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("card document is not a JSON object")]
    NotAnObject,
    #[error("missing qac_version")]
    MissingVersion,
    #[error("unsupported qac_version {found}, expected \"{QAC_VERSION}\"")]
    UnsupportedVersion { found: String },
    #[error("invalid card at line {line}, column {column}: {message}")]
    Invalid {
        line: usize,
        column: usize,
        message: String,
    },
}

/// Parses a card document.
///
/// Syntax errors and type mismatches carry the 1-based position reported by
/// the JSON reader. Unknown keys at any level are rejected.
pub fn parse_card(text: &str) -> Result<QuantumAlgorithmCard, CardParseError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| CardParseError::Malformed {
            line: e.line(),
            column: e.column(),
            message: strip_position(&e),
        })?;
    let object = value.as_object().ok_or(CardParseError::NotAnObject)?;
    match object.get("qac_version") {
        None => return Err(CardParseError::MissingVersion),
        Some(serde_json::Value::String(v)) if v == QAC_VERSION => {}
        Some(other) => {
            return Err(CardParseError::UnsupportedVersion {
                found: other.to_string(),
            })
        }
    }
    serde_json::from_str(text).map_err(|e| CardParseError::Invalid {
        line: e.line(),
        column: e.column(),
        message: strip_position(&e),
    })
}

fn strip_position(e: &serde_json::Error) -> String {
    let full = e.to_string();
    match full.rfind(" at line ") {
        Some(idx) => full[..idx].to_string(),
        None => full,
    }
}

/// Canonical serialization: sections in table order, keys in field order,
/// two-space indentation, trailing newline.
pub fn serialize_card(card: &QuantumAlgorithmCard) -> String {
    let mut out = serde_json::to_string_pretty(card).expect("card serialization is infallible");
    out.push('\n');
    out
}
