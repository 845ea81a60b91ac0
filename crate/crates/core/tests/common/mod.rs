// Copyright contributors to the qact project
// SPDX-License-Identifier: Apache-2.0

//! Helpers shared by the integration tests: fixture paths, random circuit
//! and program generators, and a brute-force depth oracle that does not
//! share code with the library's layering routine.

#![allow(dead_code)]

use std::path::{Path, PathBuf};

use proptest::prelude::*;
use qact::card::{
    CircuitRef, Direction, IntendedUse, IoSpec, Limitation, MetricSpec, Overview, Reference,
    UsageDetails,
};
use qact::qasm::{FlatCircuit, FlatOp, OpKind};
use qact::QuantumAlgorithmCard;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn fixture(rel: &str) -> PathBuf {
    fixtures().join(rel)
}

pub fn read_fixture(rel: &str) -> String {
    std::fs::read_to_string(fixture(rel)).unwrap_or_else(|e| panic!("{rel}: {e}"))
}

pub fn files_with_extension(dir: &str, ext: &str) -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(fixture(dir))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == ext))
        .collect();
    files.sort();
    files
}

const ONE_QUBIT: &[&str] = &["h", "x", "z", "t", "tdg", "s", "rz"];
const TWO_QUBIT: &[&str] = &["cx", "cz", "swap", "cu1"];

/// Random valid flat circuit with at most 6 qubits and 40 ops, mixing
/// gates, opaque gates, measures, resets, barriers and conditionals.
pub fn random_flat_circuit(seed: u64) -> FlatCircuit {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nq = rng.gen_range(1..=6);
    let nc = rng.gen_range(0..=4);
    let nops = rng.gen_range(0..=40);
    let mut circuit = FlatCircuit::new(nq, nc);
    let qubits: Vec<usize> = (0..nq).collect();
    for _ in 0..nops {
        let roll = rng.gen_range(0..100);
        let mut op = match roll {
            0..=34 => FlatOp::gate(ONE_QUBIT.choose(&mut rng).unwrap(), &[rng.gen_range(0..nq)]),
            35..=54 if nq >= 2 => {
                let pick: Vec<usize> = qubits.choose_multiple(&mut rng, 2).copied().collect();
                FlatOp::gate(TWO_QUBIT.choose(&mut rng).unwrap(), &pick)
            }
            55..=59 if nq >= 3 => {
                let pick: Vec<usize> = qubits.choose_multiple(&mut rng, 3).copied().collect();
                FlatOp::gate("ccx", &pick)
            }
            60..=64 => {
                let k = rng.gen_range(1..=nq.min(2));
                let pick: Vec<usize> = qubits.choose_multiple(&mut rng, k).copied().collect();
                FlatOp::opaque("vendor", &pick)
            }
            65..=79 if nc > 0 => FlatOp::measure(rng.gen_range(0..nq), rng.gen_range(0..nc)),
            80..=84 => FlatOp::reset(rng.gen_range(0..nq)),
            85..=99 => {
                let k = rng.gen_range(1..=nq);
                let pick: Vec<usize> = qubits.choose_multiple(&mut rng, k).copied().collect();
                FlatOp::barrier(&pick)
            }
            _ => FlatOp::gate("h", &[rng.gen_range(0..nq)]),
        };
        if op.kind != OpKind::Barrier && nc > 0 && rng.gen_bool(0.15) {
            let start = rng.gen_range(0..nc);
            let len = rng.gen_range(1..=nc - start);
            op = op.with_condition((start..start + len).collect(), rng.gen_range(0..4));
        }
        circuit.push(op);
    }
    circuit
}

/// Depth by explicit precedence graph: op `j` precedes op `i` when `j < i`
/// and they share a wire (qubit, written clbit, or condition clbit), closed
/// transitively. An op's slot is one more than the latest slot among its
/// non-barrier predecessors; barriers occupy no slot. The depth is the
/// latest slot.
#[allow(clippy::needless_range_loop)]
pub fn brute_force_depth(circuit: &FlatCircuit) -> usize {
    let n = circuit.ops.len();
    let wires: Vec<Vec<usize>> = circuit
        .ops
        .iter()
        .map(|op| {
            let mut w: Vec<usize> = op.qubits.clone();
            if op.kind != OpKind::Barrier {
                w.extend(op.clbits.iter().map(|c| circuit.num_qubits + c));
                if let Some(cond) = &op.condition {
                    w.extend(cond.clbits.iter().map(|c| circuit.num_qubits + c));
                }
            }
            w
        })
        .collect();
    let mut reach = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..i {
            reach[j][i] = wires[j].iter().any(|w| wires[i].contains(w));
        }
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    let mut slot = vec![0usize; n];
    let mut depth = 0;
    for i in 0..n {
        if circuit.ops[i].kind == OpKind::Barrier {
            continue;
        }
        let latest = (0..n)
            .filter(|&j| reach[j][i] && circuit.ops[j].kind != OpKind::Barrier)
            .map(|j| slot[j])
            .max()
            .unwrap_or(0);
        slot[i] = latest + 1;
        depth = depth.max(slot[i]);
    }
    depth
}

/// Random valid OpenQASM 2.0 program text. Covers registers, gate and
/// opaque definitions with parameters, register shorthand, measures,
/// resets, barriers and conditionals.
pub fn random_program(seed: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut src = String::from("OPENQASM 2.0;\n");
    if rng.gen_bool(0.7) {
        src.push_str("include \"qelib1.inc\";\n");
    }
    let nqregs = rng.gen_range(1..=3);
    let qregs: Vec<(String, usize)> = (0..nqregs)
        .map(|i| (format!("q{i}"), rng.gen_range(1..=3)))
        .collect();
    let ncregs = rng.gen_range(0..=2);
    let cregs: Vec<(String, usize)> = (0..ncregs)
        .map(|i| (format!("c{i}"), rng.gen_range(1..=3)))
        .collect();
    for (name, size) in &qregs {
        src.push_str(&format!("qreg {name}[{size}];\n"));
    }
    for (name, size) in &cregs {
        src.push_str(&format!("creg {name}[{size}];\n"));
    }

    // (name, params, qubits)
    let mut callable: Vec<(String, usize, usize)> = vec![
        ("h".into(), 0, 1),
        ("x".into(), 0, 1),
        ("t".into(), 0, 1),
        ("rz".into(), 1, 1),
        ("u3".into(), 3, 1),
        ("cx".into(), 0, 2),
        ("crz".into(), 1, 2),
        ("ccx".into(), 0, 3),
    ];
    if rng.gen_bool(0.3) {
        src.push_str("opaque magic(theta) a, b;\n");
        callable.push(("magic".into(), 1, 2));
    }
    for g in 0..rng.gen_range(0..=2) {
        let nparams = rng.gen_range(0..=2);
        let nqubits = rng.gen_range(1..=3);
        let params: Vec<String> = (0..nparams).map(|i| format!("p{i}")).collect();
        let args: Vec<String> = (0..nqubits).map(|i| format!("a{i}")).collect();
        let header = if params.is_empty() {
            String::new()
        } else {
            format!("({})", params.join(", "))
        };
        let mut body = String::new();
        for _ in 0..rng.gen_range(1..=4) {
            let fits: Vec<&(String, usize, usize)> =
                callable.iter().filter(|c| c.2 <= nqubits).collect();
            let (name, np, nq) = fits.choose(&mut rng).unwrap();
            let qs: Vec<&String> = args.choose_multiple(&mut rng, *nq).collect();
            let ps: Vec<String> = (0..*np)
                .map(|_| random_expr(&mut rng, &params, 2))
                .collect();
            body.push_str(&format!(
                "  {name}{} {};\n",
                if ps.is_empty() {
                    String::new()
                } else {
                    format!("({})", ps.join(", "))
                },
                qs.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(", ")
            ));
        }
        let name = format!("g{g}");
        src.push_str(&format!(
            "gate {name}{header} {} {{\n{body}}}\n",
            args.join(", ")
        ));
        callable.push((name, nparams, nqubits));
    }

    let all_qubits: Vec<(String, usize)> = qregs
        .iter()
        .flat_map(|(n, s)| (0..*s).map(move |i| (n.clone(), i)))
        .collect();
    for _ in 0..rng.gen_range(0..=15) {
        let roll = rng.gen_range(0..100);
        let cond = if !cregs.is_empty() && rng.gen_bool(0.15) {
            let (c, size) = cregs.choose(&mut rng).unwrap();
            format!("if ({c} == {}) ", rng.gen_range(0..(1u64 << size)))
        } else {
            String::new()
        };
        let line = match roll {
            0..=59 => {
                let fits: Vec<&(String, usize, usize)> = callable
                    .iter()
                    .filter(|c| c.2 <= all_qubits.len())
                    .collect();
                let (name, np, nq) = fits.choose(&mut rng).unwrap();
                let ps: Vec<String> = (0..*np).map(|_| random_expr(&mut rng, &[], 3)).collect();
                let psrc = if ps.is_empty() {
                    String::new()
                } else {
                    format!("({})", ps.join(", "))
                };
                // Whole-register shorthand for single-qubit gates sometimes.
                if *nq == 1 && rng.gen_bool(0.3) {
                    let (r, _) = qregs.choose(&mut rng).unwrap();
                    format!("{cond}{name}{psrc} {r};")
                } else {
                    let qs: Vec<String> = all_qubits
                        .choose_multiple(&mut rng, *nq)
                        .map(|(r, i)| format!("{r}[{i}]"))
                        .collect();
                    format!("{cond}{name}{psrc} {};", qs.join(", "))
                }
            }
            60..=74 if !cregs.is_empty() => {
                let (c, csize) = cregs.choose(&mut rng).unwrap();
                let same: Vec<&(String, usize)> =
                    qregs.iter().filter(|(_, s)| s == csize).collect();
                if !same.is_empty() && rng.gen_bool(0.3) {
                    format!("{cond}measure {} -> {c};", same.choose(&mut rng).unwrap().0)
                } else {
                    let (r, i) = all_qubits.choose(&mut rng).unwrap();
                    format!(
                        "{cond}measure {r}[{i}] -> {c}[{}];",
                        rng.gen_range(0..*csize)
                    )
                }
            }
            75..=84 => {
                let (r, i) = all_qubits.choose(&mut rng).unwrap();
                if rng.gen_bool(0.3) {
                    format!("{cond}reset {r};")
                } else {
                    format!("{cond}reset {r}[{i}];")
                }
            }
            _ => {
                let (r, i) = all_qubits.choose(&mut rng).unwrap();
                let (r2, _) = qregs.choose(&mut rng).unwrap();
                format!("barrier {r}[{i}], {r2};")
            }
        };
        src.push_str(&line);
        src.push('\n');
    }
    src
}

fn random_expr(rng: &mut ChaCha8Rng, names: &[String], depth: u32) -> String {
    if depth == 0 || rng.gen_bool(0.4) {
        return match rng.gen_range(0..4) {
            0 => "pi".to_string(),
            1 if !names.is_empty() => names.choose(rng).unwrap().clone(),
            2 => format!("{}.{}", rng.gen_range(0..10), rng.gen_range(0..100)),
            _ => rng.gen_range(1..20).to_string(),
        };
    }
    let a = random_expr(rng, names, depth - 1);
    let b = random_expr(rng, names, depth - 1);
    match rng.gen_range(0..7) {
        0 => format!("{a} + {b}"),
        1 => format!("({a}) - {b}"),
        2 => format!("({a})*({b})"),
        // Keep divisors away from zero.
        3 => format!("({a})/(2 + cos({b}))"),
        4 => format!("-({a})"),
        5 => format!("sin({a})"),
        _ => format!("({a})^2"),
    }
}

/// Card with random usage requirements and otherwise scaffold content.
pub fn random_requirements_card(rng: &mut ChaCha8Rng) -> QuantumAlgorithmCard {
    let mut card = qact::scaffold_card("random").unwrap();
    let qubits = rng.gen_range(1..=40);
    let depth = rng.gen_range(0..=40);
    card.usage_details = Some(UsageDetails {
        inputs: vec![],
        outputs: vec![],
        qubits_required: qubits,
        circuit_depth: depth,
        log2_qv_required: qubits.max(depth),
        uses_mid_circuit_control: rng.gen_bool(0.3),
        circuit_ref: None,
    });
    card
}

pub fn random_profile(rng: &mut ChaCha8Rng, name: String) -> qact::HardwareProfile {
    let gates = ["h", "cx", "rz", "sx", "x", "cz", "t"];
    let ngates = rng.gen_range(0..=gates.len());
    qact::HardwareProfile {
        name,
        num_qubits: rng.gen_range(1..=48),
        log2_quantum_volume: rng.gen_range(0..=48),
        native_gates: gates
            .choose_multiple(rng, ngates)
            .map(|g| g.to_string())
            .collect(),
        supports_mid_circuit_control: rng.gen_bool(0.5),
        cost_per_shot: if rng.gen_bool(0.8) {
            Some(rng.gen_range(0..1000) as f64 / 10_000.0)
        } else {
            None
        },
    }
}

/// The same profile with one or more capabilities raised.
pub fn raise_capabilities(
    rng: &mut ChaCha8Rng,
    p: &qact::HardwareProfile,
) -> qact::HardwareProfile {
    let mut q = p.clone();
    loop {
        let mut changed = false;
        if rng.gen_bool(0.5) {
            q.num_qubits += rng.gen_range(1..=10);
            changed = true;
        }
        if rng.gen_bool(0.5) {
            q.log2_quantum_volume += rng.gen_range(1..=10);
            changed = true;
        }
        if rng.gen_bool(0.5) && !q.supports_mid_circuit_control {
            q.supports_mid_circuit_control = true;
            changed = true;
        }
        if changed {
            return q;
        }
    }
}

/// Checks the ranking contract pairwise on adjacent reports: fitting
/// before non-fitting, then known cost ascending, then unknown cost, then
/// name.
pub fn check_rank_order(reports: &[qact::FitReport]) -> Result<(), String> {
    for pair in reports.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        let ok = if a.fits != b.fits {
            a.fits
        } else {
            match (a.estimated_cost, b.estimated_cost) {
                (Some(x), Some(y)) if x != y => x < y,
                (Some(_), None) => true,
                (None, Some(_)) => false,
                _ => a.backend < b.backend,
            }
        };
        if !ok {
            return Err(format!("{} ranked before {}", a.backend, b.backend));
        }
    }
    Ok(())
}

fn text() -> impl Strategy<Value = String> {
    "[a-zA-Z0-9 .,:()|\\-\"\\\\/\n\u{e9}\u{3c0}]{0,24}"
}

fn io_spec() -> impl Strategy<Value = IoSpec> {
    (text(), text(), text()).prop_map(|(name, type_description, description)| IoSpec {
        name,
        type_description,
        description,
    })
}

fn threshold() -> impl Strategy<Value = f64> {
    prop_oneof![
        prop::num::f64::NORMAL,
        prop::num::f64::SUBNORMAL,
        Just(0.0),
        (-1000i32..1000).prop_map(f64::from),
    ]
}

/// Arbitrary well-typed card, valid or not.
pub fn arb_card() -> impl Strategy<Value = QuantumAlgorithmCard> {
    let overview = (
        text(),
        (0u32..50, 0u32..50, 0u32..50),
        text(),
        text(),
        text(),
        text(),
        text(),
    )
        .prop_map(
            |(name, (a, b, c), provider, maintainer, description, approach, complexity)| Overview {
                name,
                version: format!("{a}.{b}.{c}"),
                provider,
                maintainer,
                description,
                approach,
                complexity,
            },
        );
    let intended_use = (
        prop::collection::vec(text(), 0..3),
        prop::collection::vec(text(), 0..3),
    )
        .prop_map(|(tasks, scenarios)| IntendedUse { tasks, scenarios });
    let circuit_ref =
        (text(), "[0-9a-f]{64}").prop_map(|(path, sha256)| CircuitRef { path, sha256 });
    let usage = (
        prop::collection::vec(io_spec(), 0..3),
        prop::collection::vec(io_spec(), 0..3),
        any::<u64>(),
        any::<u64>(),
        any::<u64>(),
        any::<bool>(),
        prop::option::of(circuit_ref),
    )
        .prop_map(
            |(inputs, outputs, q, d, v, mid, circuit_ref)| UsageDetails {
                inputs,
                outputs,
                qubits_required: q,
                circuit_depth: d,
                log2_qv_required: v,
                uses_mid_circuit_control: mid,
                circuit_ref,
            },
        );
    let metric = (text(), text(), prop::option::of(threshold()), any::<bool>()).prop_map(
        |(name, description, threshold, higher)| MetricSpec {
            name,
            description,
            threshold,
            direction: if higher {
                Direction::HigherIsBetter
            } else {
                Direction::LowerIsBetter
            },
        },
    );
    let limitation = (text(), text()).prop_map(|(scenario, failure_mode)| Limitation {
        scenario,
        failure_mode,
    });
    let reference =
        (text(), prop::option::of(text())).prop_map(|(citation, url)| Reference { citation, url });
    (
        overview,
        prop::option::of(intended_use),
        prop::option::of(usage),
        prop::option::of(prop::collection::vec(metric, 0..3)),
        prop::option::of(prop::collection::vec(limitation, 0..3)),
        prop::option::of(prop::collection::vec(reference, 0..3)),
        prop::option::of(prop::collection::vec(text(), 0..3)),
    )
        .prop_map(
            |(overview, intended_use, usage_details, metrics, limitations, references, caveats)| {
                let mut card = QuantumAlgorithmCard::new(overview);
                card.intended_use = intended_use;
                card.usage_details = usage_details;
                card.performance_metrics = metrics;
                card.limitations = limitations;
                card.references = references;
                card.caveats = caveats;
                card
            },
        )
}
