// Copyright contributors to the qact project
// SPDX-License-Identifier: Apache-2.0

//! Card scaffolding and circuit attachment.

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::analysis::CircuitMetrics;
use crate::card::{CircuitRef, Overview, QuantumAlgorithmCard, UsageDetails};

/// Placeholder written into overview fields nobody has authored yet.
pub const PLACEHOLDER: &str = "TODO";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("card name must not be empty")]
    EmptyName,
    #[error("circuit touches no qubits; a card needs at least one")]
    EmptyCircuit,
}

/// A fresh card with only an overview, versioned `0.1.0`.
pub fn scaffold_card(name: &str) -> Result<QuantumAlgorithmCard, GeneratorError> {
    if name.trim().is_empty() {
        return Err(GeneratorError::EmptyName);
    }
    Ok(QuantumAlgorithmCard::new(Overview {
        name: name.to_string(),
        version: "0.1.0".to_string(),
        provider: PLACEHOLDER.to_string(),
        maintainer: PLACEHOLDER.to_string(),
        description: PLACEHOLDER.to_string(),
        approach: PLACEHOLDER.to_string(),
        complexity: PLACEHOLDER.to_string(),
    }))
}

/// Writes circuit-derived numbers into the usage details.
///
/// Derived fields are overwritten; authored inputs and outputs are kept.
/// Every other section is returned untouched.
pub fn attach_circuit(
    card: &QuantumAlgorithmCard,
    metrics: &CircuitMetrics,
    circuit_path: &str,
    circuit_sha256: &str,
) -> Result<QuantumAlgorithmCard, GeneratorError> {
    if metrics.width == 0 {
        return Err(GeneratorError::EmptyCircuit);
    }
    let (inputs, outputs) = card
        .usage_details
        .as_ref()
        .map(|u| (u.inputs.clone(), u.outputs.clone()))
        .unwrap_or_default();
    let mut out = card.clone();
    out.usage_details = Some(UsageDetails {
        inputs,
        outputs,
        qubits_required: metrics.width as u64,
        circuit_depth: metrics.depth as u64,
        log2_qv_required: metrics.log2_qv_required as u64,
        uses_mid_circuit_control: metrics.uses_mid_circuit_control,
        circuit_ref: Some(CircuitRef {
            path: circuit_path.to_string(),
            sha256: circuit_sha256.to_string(),
        }),
    });
    Ok(out)
}

/// Lowercase hex SHA-256 of `bytes`.
pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// One derived field that `attach_circuit` changed, for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldChange {
    pub path: &'static str,
    pub before: Option<String>,
    pub after: String,
}

/// The derived usage-detail fields that differ between two versions of a
/// card.
pub fn derived_changes(
    before: &QuantumAlgorithmCard,
    after: &QuantumAlgorithmCard,
) -> Vec<FieldChange> {
    fn fields(u: Option<&UsageDetails>) -> [(&'static str, Option<String>); 6] {
        let r = u.and_then(|u| u.circuit_ref.as_ref());
        [
            (
                "usage_details.qubits_required",
                u.map(|u| u.qubits_required.to_string()),
            ),
            (
                "usage_details.circuit_depth",
                u.map(|u| u.circuit_depth.to_string()),
            ),
            (
                "usage_details.log2_qv_required",
                u.map(|u| u.log2_qv_required.to_string()),
            ),
            (
                "usage_details.uses_mid_circuit_control",
                u.map(|u| u.uses_mid_circuit_control.to_string()),
            ),
            ("usage_details.circuit_ref.path", r.map(|r| r.path.clone())),
            (
                "usage_details.circuit_ref.sha256",
                r.map(|r| r.sha256.clone()),
            ),
        ]
    }
    fields(before.usage_details.as_ref())
        .into_iter()
        .zip(fields(after.usage_details.as_ref()))
        .filter(|((_, b), (_, a))| b != a)
        .filter_map(|((path, before), (_, after))| {
            after.map(|after| FieldChange {
                path,
                before,
                after,
            })
        })
        .collect()
}
