// Copyright contributors to the qact project
// SPDX-License-Identifier: Apache-2.0

//! Matching card requirements against backend profiles.
//!
//! A backend fits when it has enough qubits, enough quantum volume, and
//! mid-circuit control if the card needs it. Every comparison includes the
//! boundary. Native gate sets never disqualify a backend because a compiler
//! can retarget the circuit; differences are reported as notes.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::num::NonZeroU64;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::CircuitMetrics;
use crate::card::{QuantumAlgorithmCard, UsageDetails};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HardwareProfile {
    pub name: String,
    pub num_qubits: u64,
    pub log2_quantum_volume: u64,
    pub native_gates: Vec<String>,
    pub supports_mid_circuit_control: bool,
    /// Abstract currency units per shot.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cost_per_shot: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckName {
    Qubits,
    QuantumVolume,
    MidCircuitControl,
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckName::Qubits => "qubits",
            CheckName::QuantumVolume => "quantum_volume",
            CheckName::MidCircuitControl => "mid_circuit_control",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CheckValue {
    Count(u64),
    Flag(bool),
}

impl fmt::Display for CheckValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckValue::Count(n) => write!(f, "{n}"),
            CheckValue::Flag(b) => write!(f, "{}", if *b { "yes" } else { "no" }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: CheckName,
    pub required: CheckValue,
    pub available: CheckValue,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitReport {
    pub backend: String,
    pub fits: bool,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub estimated_cost: Option<f64>,
}

#[derive(Debug, Error)]
pub enum MatchError {
    #[error("card `{0}` has no usage_details section to match against")]
    NoUsageDetails(String),
    #[error("no backend profiles given")]
    NoProfiles,
}

#[derive(Debug, Error)]
pub enum ProfileError {
    #[error("malformed profile file at line {line}, column {column}: {message}")]
    Malformed {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("duplicate backend name `{0}`")]
    DuplicateName(String),
    #[error("profile {index}: {message}")]
    Invalid { index: usize, message: String },
}

/// Reads a JSON array of profiles and checks names are unique and values
/// are in range.
pub fn parse_profiles(text: &str) -> Result<Vec<HardwareProfile>, ProfileError> {
    let profiles: Vec<HardwareProfile> =
        serde_json::from_str(text).map_err(|e| ProfileError::Malformed {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
    let mut seen = HashSet::new();
    for (index, p) in profiles.iter().enumerate() {
        let invalid = |message: &str| ProfileError::Invalid {
            index,
            message: message.to_string(),
        };
        if p.name.trim().is_empty() {
            return Err(invalid("name must not be empty"));
        }
        if p.num_qubits == 0 {
            return Err(invalid("num_qubits must be at least 1"));
        }
        if p.cost_per_shot
            .is_some_and(|c| !(c >= 0.0 && c.is_finite()))
        {
            return Err(invalid("cost_per_shot must be a nonnegative number"));
        }
        if !seen.insert(p.name.as_str()) {
            return Err(ProfileError::DuplicateName(p.name.clone()));
        }
    }
    Ok(profiles)
}

fn usage(card: &QuantumAlgorithmCard) -> Result<&UsageDetails, MatchError> {
    card.usage_details
        .as_ref()
        .ok_or_else(|| MatchError::NoUsageDetails(card.overview.name.clone()))
}

/// Checks one backend. `circuit`, when known, lets the report note gates
/// the backend does not execute natively.
pub fn match_card(
    card: &QuantumAlgorithmCard,
    profile: &HardwareProfile,
    shots: Option<NonZeroU64>,
    circuit: Option<&CircuitMetrics>,
) -> Result<FitReport, MatchError> {
    let usage = usage(card)?;
    let checks = vec![
        Check {
            name: CheckName::Qubits,
            required: CheckValue::Count(usage.qubits_required),
            available: CheckValue::Count(profile.num_qubits),
            pass: profile.num_qubits >= usage.qubits_required,
        },
        Check {
            name: CheckName::QuantumVolume,
            required: CheckValue::Count(usage.log2_qv_required),
            available: CheckValue::Count(profile.log2_quantum_volume),
            pass: profile.log2_quantum_volume >= usage.log2_qv_required,
        },
        Check {
            name: CheckName::MidCircuitControl,
            required: CheckValue::Flag(usage.uses_mid_circuit_control),
            available: CheckValue::Flag(profile.supports_mid_circuit_control),
            pass: !usage.uses_mid_circuit_control || profile.supports_mid_circuit_control,
        },
    ];

    let mut notes = Vec::new();
    if let Some(metrics) = circuit {
        let foreign: Vec<&str> = metrics
            .gate_histogram
            .keys()
            .map(String::as_str)
            .filter(|g| !profile.native_gates.iter().any(|n| n == g))
            .collect();
        if !foreign.is_empty() {
            notes.push(format!(
                "non-native gates require transpilation: {}",
                foreign.join(", ")
            ));
        }
    }
    let estimated_cost = match (profile.cost_per_shot, shots) {
        (Some(per_shot), Some(n)) => Some(per_shot * n.get() as f64),
        (None, _) => {
            notes.push("no cost information for this backend".to_string());
            None
        }
        (Some(_), None) => None,
    };

    Ok(FitReport {
        backend: profile.name.clone(),
        fits: checks.iter().all(|c| c.pass),
        checks,
        notes,
        estimated_cost,
    })
}

/// Reports for every profile, fitting backends first, then cheapest
/// (unknown cost last), then by name.
pub fn rank_backends(
    card: &QuantumAlgorithmCard,
    profiles: &[HardwareProfile],
    shots: Option<NonZeroU64>,
    circuit: Option<&CircuitMetrics>,
) -> Result<Vec<FitReport>, MatchError> {
    if profiles.is_empty() {
        return Err(MatchError::NoProfiles);
    }
    let mut reports = profiles
        .iter()
        .map(|p| match_card(card, p, shots, circuit))
        .collect::<Result<Vec<_>, _>>()?;
    reports.sort_by(rank_order);
    Ok(reports)
}

fn rank_order(a: &FitReport, b: &FitReport) -> Ordering {
    b.fits
        .cmp(&a.fits)
        .then_with(|| match (a.estimated_cost, b.estimated_cost) {
            (Some(x), Some(y)) => x.total_cmp(&y),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => Ordering::Equal,
        })
        .then_with(|| a.backend.cmp(&b.backend))
}
