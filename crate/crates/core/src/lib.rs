// Copyright contributors to the qact project
// SPDX-License-Identifier: Apache-2.0

//! Quantum algorithm cards.
//!
//! A card documents a quantum algorithm implementation for three kinds of
//! reader: technology management and architects, software developers, and
//! operations. This crate
//!
//! * defines the card model and its canonical JSON form ([`card`]),
//! * parses OpenQASM 2.0 circuits and flattens them ([`qasm`]),
//! * derives resource metrics from a circuit ([`analysis`]),
//! * scaffolds cards and fills in circuit-derived numbers ([`generator`]),
//! * renders cards to Markdown for a given reader ([`render`]),
//! * and matches card requirements against backend profiles ([`hardware`]).
//!
//! The `qact` binary wraps all of this behind a small command line ([`cli`]).

pub mod analysis;
pub mod card;
pub mod cli;
pub mod generator;
pub mod hardware;
pub mod qasm;
pub mod render;

pub use analysis::{compute_depth, compute_metrics, qv_requirement, CircuitMetrics};
pub use card::{
    audience_sections, parse_card, serialize_card, validate_card, Audience, QuantumAlgorithmCard,
    Section, ValidationReport,
};
pub use generator::{attach_circuit, scaffold_card};
pub use hardware::{match_card, rank_backends, FitReport, HardwareProfile};
pub use qasm::{flatten, parse_program, FlatCircuit, QasmProgram};
pub use render::render_markdown;
