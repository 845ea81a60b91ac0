// Copyright contributors to the qact project
// SPDX-License-Identifier: Apache-2.0

//! The `qact` command line.
//!
//! Exit codes: 0 on success, 1 when the command ran but the answer is
//! negative (card invalid, nothing fits), 2 when it could not run (bad
//! usage, unreadable or unparsable input).

use std::fs;
use std::io::Write;
use std::num::NonZeroU64;
use std::path::{Component, Path, PathBuf};

use clap::{Parser, Subcommand};
use thiserror::Error;

use crate::analysis::{compute_metrics, CircuitMetrics};
use crate::card::{parse_card, serialize_card, validate_card, Audience, QuantumAlgorithmCard};
use crate::generator::{attach_circuit, derived_changes, scaffold_card, sha256_hex};
use crate::hardware::{parse_profiles, rank_backends, FitReport};
use crate::qasm::{flatten, parse_program};
use crate::render::render_markdown;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qact", version, about = "Quantum algorithm card toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print resource metrics of an OpenQASM 2.0 circuit.
    Analyze {
        circuit: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write a new card scaffold.
    Init {
        name: String,
        #[arg(short, long)]
        output: PathBuf,
        /// Overwrite an existing file.
        #[arg(long)]
        force: bool,
    },
    /// Analyze a circuit and record its numbers in the card, in place.
    Attach { card: PathBuf, circuit: PathBuf },
    /// Check a card, for one audience or for all.
    Validate {
        card: PathBuf,
        #[arg(long)]
        audience: Option<Audience>,
        #[arg(long)]
        json: bool,
    },
    /// Render a card to Markdown.
    Render {
        card: PathBuf,
        #[arg(long)]
        audience: Option<Audience>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Rank backend profiles by fit and cost.
    Match {
        card: PathBuf,
        profiles: PathBuf,
        #[arg(long)]
        shots: Option<NonZeroU64>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Input { path: PathBuf, message: String },
    #[error("{0}")]
    Output(#[from] std::io::Error),
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn input_error(path: &Path, message: impl ToString) -> CliError {
    CliError::Input {
        path: path.to_path_buf(),
        message: message.to_string(),
    }
}

fn load_card(path: &Path) -> Result<QuantumAlgorithmCard, CliError> {
    parse_card(&read(path)?).map_err(|e| input_error(path, e))
}

fn analyze_file(path: &Path) -> Result<(CircuitMetrics, String), CliError> {
    let bytes = fs::read(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let source = std::str::from_utf8(&bytes).map_err(|e| input_error(path, e))?;
    let program = parse_program(source).map_err(|e| input_error(path, e))?;
    let circuit = flatten(&program).map_err(|e| input_error(path, e))?;
    Ok((compute_metrics(&circuit), sha256_hex(&bytes)))
}

/// Runs the command line with `args` (including the program name) and
/// returns the process exit code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match run(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn run(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Analyze { circuit, json } => {
            let (metrics, _) = analyze_file(&circuit)?;
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&metrics).expect("metrics serialize")
                )?;
            } else {
                write_metrics_table(out, &metrics)?;
            }
            Ok(EXIT_OK)
        }
        Command::Init {
            name,
            output,
            force,
        } => {
            let card = match scaffold_card(&name) {
                Ok(card) => card,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_ERROR);
                }
            };
            if output.exists() && !force {
                writeln!(
                    err,
                    "error: {} already exists (use --force to overwrite)",
                    output.display()
                )?;
                return Ok(EXIT_ERROR);
            }
            write(&output, &serialize_card(&card))?;
            writeln!(out, "wrote {}", output.display())?;
            Ok(EXIT_OK)
        }
        Command::Attach { card, circuit } => {
            let before_text = read(&card)?;
            let before = parse_card(&before_text).map_err(|e| input_error(&card, e))?;
            let (metrics, sha) = analyze_file(&circuit)?;
            let circuit_ref = relative_to_card(&card, &circuit);
            let after = match attach_circuit(&before, &metrics, &circuit_ref, &sha) {
                Ok(after) => after,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_DOMAIN);
                }
            };
            let after_text = serialize_card(&after);
            if after_text != before_text {
                write(&card, &after_text)?;
            }
            let changes = derived_changes(&before, &after);
            if changes.is_empty() {
                writeln!(out, "no changes")?;
            }
            for c in changes {
                let before = c.before.as_deref().unwrap_or("(absent)");
                writeln!(out, "{}: {} -> {}", c.path, before, c.after)?;
            }
            Ok(EXIT_OK)
        }
        Command::Validate {
            card,
            audience,
            json,
        } => {
            let parsed = load_card(&card)?;
            let report = validate_card(&parsed, audience);
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                )?;
            } else {
                write!(out, "{report}")?;
            }
            Ok(if report.valid { EXIT_OK } else { EXIT_DOMAIN })
        }
        Command::Render {
            card,
            audience,
            output,
        } => {
            let parsed = load_card(&card)?;
            let doc = match render_markdown(&parsed, audience) {
                Ok(doc) => doc,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_DOMAIN);
                }
            };
            match output {
                Some(path) => write(&path, &doc)?,
                None => out.write_all(doc.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::Match {
            card,
            profiles,
            shots,
            json,
        } => {
            let parsed = load_card(&card)?;
            let backends =
                parse_profiles(&read(&profiles)?).map_err(|e| input_error(&profiles, e))?;
            let circuit = attached_circuit(&card, &parsed, err)?;
            let mut reports =
                match rank_backends(&parsed, &backends, shots, circuit.as_ref().map(|c| &c.0)) {
                    Ok(r) => r,
                    Err(e) => {
                        writeln!(err, "error: {e}")?;
                        return Ok(EXIT_DOMAIN);
                    }
                };
            if let Some((_, false)) = circuit {
                for r in &mut reports {
                    r.notes.push(
                        "attached circuit changed since the card was last updated".to_string(),
                    );
                }
            }
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&reports).expect("reports serialize")
                )?;
            } else {
                write_reports(out, &reports)?;
            }
            Ok(if reports.iter().any(|r| r.fits) {
                EXIT_OK
            } else {
                EXIT_DOMAIN
            })
        }
    }
}

/// Metrics of the card's referenced circuit, and whether its digest still
/// matches. `None` when the card has no circuit or the file is unusable.
fn attached_circuit(
    card_path: &Path,
    card: &QuantumAlgorithmCard,
    err: &mut dyn Write,
) -> Result<Option<(CircuitMetrics, bool)>, CliError> {
    let Some(r) = card
        .usage_details
        .as_ref()
        .and_then(|u| u.circuit_ref.as_ref())
    else {
        return Ok(None);
    };
    let path = card_dir(card_path).join(&r.path);
    match analyze_file(&path) {
        Ok((metrics, sha)) => Ok(Some((metrics, sha == r.sha256))),
        Err(e) => {
            writeln!(err, "warning: skipping gate-set notes: {e}")?;
            Ok(None)
        }
    }
}

fn card_dir(card_path: &Path) -> PathBuf {
    match card_path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    }
}

/// Path of `circuit` as seen from the directory holding `card`, with `/`
/// separators.
fn relative_to_card(card: &Path, circuit: &Path) -> String {
    let (Ok(base), Ok(target)) = (
        std::path::absolute(card_dir(card)),
        std::path::absolute(circuit),
    ) else {
        return circuit.to_string_lossy().replace('\\', "/");
    };
    let base = normalize(&base);
    let target = normalize(&target);
    let common = base.iter().zip(&target).take_while(|(a, b)| a == b).count();
    let mut parts: Vec<String> = vec!["..".to_string(); base.len() - common];
    parts.extend(target[common..].iter().cloned());
    parts.join("/")
}

fn normalize(path: &Path) -> Vec<String> {
    let mut parts: Vec<String> = Vec::new();
    for c in path.components() {
        match c {
            Component::CurDir => {}
            Component::ParentDir => {
                parts.pop();
            }
            other => parts.push(other.as_os_str().to_string_lossy().into_owned()),
        }
    }
    parts
}

fn write_metrics_table(out: &mut dyn Write, m: &CircuitMetrics) -> std::io::Result<()> {
    let histogram = m
        .gate_histogram
        .iter()
        .map(|(g, n)| format!("{g}={n}"))
        .collect::<Vec<_>>()
        .join(" ");
    let arity = m
        .counts_by_arity
        .iter()
        .map(|(a, n)| format!("{a}q={n}"))
        .collect::<Vec<_>>()
        .join(" ");
    let rows: [(&str, String); 12] = [
        ("declared qubits", m.num_qubits.to_string()),
        ("width", m.width.to_string()),
        ("clbits", m.num_clbits.to_string()),
        ("depth", m.depth.to_string()),
        ("gates", histogram),
        ("gates by arity", arity),
        ("two-qubit gates", m.two_qubit_gate_count.to_string()),
        ("t-count", m.t_count.to_string()),
        ("measurements", m.measure_count.to_string()),
        ("opaque gates", yes_no(m.has_opaque).to_string()),
        (
            "mid-circuit control",
            yes_no(m.uses_mid_circuit_control).to_string(),
        ),
        ("log2 QV required", m.log2_qv_required.to_string()),
    ];
    for (label, value) in rows {
        writeln!(out, "{label:<20} {value}")?;
    }
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn write_reports(out: &mut dyn Write, reports: &[FitReport]) -> std::io::Result<()> {
    for (i, r) in reports.iter().enumerate() {
        let verdict = if r.fits { "fits" } else { "does not fit" };
        match r.estimated_cost {
            Some(cost) => writeln!(
                out,
                "{}. {} ({verdict}, estimated cost {cost})",
                i + 1,
                r.backend
            )?,
            None => writeln!(out, "{}. {} ({verdict})", i + 1, r.backend)?,
        }
        for c in &r.checks {
            let mark = if c.pass { "ok" } else { "FAIL" };
            writeln!(
                out,
                "   {:<20} required {:<5} available {:<5} {mark}",
                c.name.to_string(),
                c.required.to_string(),
                c.available.to_string()
            )?;
        }
        for n in &r.notes {
            writeln!(out, "   note: {n}")?;
        }
    }
    Ok(())
}
