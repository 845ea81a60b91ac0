// Copyright contributors to the qact project
// SPDX-License-Identifier: Apache-2.0

mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;
use qact::qasm::{flatten, parse_program, print_program, OpKind};
use qact::{parse_card, serialize_card};

#[test]
fn card_corpus_serializes_back_to_identical_bytes() {
    let files = common::files_with_extension("cards", "json");
    assert!(files.len() >= 10, "only {} card fixtures", files.len());
    for path in files {
        let text = std::fs::read_to_string(&path).unwrap();
        let card = parse_card(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(serialize_card(&card), text, "{}", path.display());
    }
}

#[test]
fn qasm_corpus_reparses_to_equal_ast() {
    let files = common::files_with_extension("qasm", "qasm");
    assert!(files.len() >= 20, "only {} qasm fixtures", files.len());
    for path in files {
        let text = std::fs::read_to_string(&path).unwrap();
        let ast = parse_program(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let printed = print_program(&ast);
        let again = parse_program(&printed)
            .unwrap_or_else(|e| panic!("{}: {e}\n{printed}", path.display()));
        assert_eq!(again, ast, "{}", path.display());
        assert_eq!(print_program(&again), printed, "{}", path.display());
    }
}

#[test]
fn qasm_corpus_flattens_in_range() {
    for path in common::files_with_extension("qasm", "qasm") {
        let ast = parse_program(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let flat = flatten(&ast).unwrap();
        for op in &flat.ops {
            assert!(
                op.qubits.iter().all(|&q| q < flat.num_qubits),
                "{}",
                path.display()
            );
            assert!(
                op.clbits.iter().all(|&c| c < flat.num_clbits),
                "{}",
                path.display()
            );
        }
    }
}

proptest! {
    #[test]
    fn generated_cards_round_trip(card in common::arb_card()) {
        let text = serialize_card(&card);
        let back = parse_card(&text).unwrap();
        prop_assert_eq!(&back, &card);
        prop_assert_eq!(serialize_card(&back), text);
    }

    #[test]
    fn generated_cards_keep_table_key_order(card in common::arb_card()) {
        let text = serialize_card(&card);
        let keys: Vec<&str> = text
            .lines()
            .filter_map(|l| l.strip_prefix("  \""))
            .filter_map(|l| l.split_once("\":").map(|(k, _)| k))
            .collect();
        let mut expected = vec!["qac_version"];
        expected.extend(card.present_sections().iter().map(|s| s.key()));
        prop_assert_eq!(keys, expected);
    }

    #[test]
    fn generated_programs_print_and_reparse(seed in any::<u64>()) {
        let src = common::random_program(seed);
        let ast = parse_program(&src).map_err(|e| TestCaseError::fail(format!("{e}\n{src}")))?;
        let again = parse_program(&print_program(&ast)).unwrap();
        prop_assert_eq!(again, ast);
    }

    #[test]
    fn generated_programs_flatten_in_range(seed in any::<u64>()) {
        let ast = parse_program(&common::random_program(seed)).unwrap();
        let flat = flatten(&ast).unwrap();
        for op in &flat.ops {
            prop_assert!(op.qubits.iter().all(|&q| q < flat.num_qubits));
            prop_assert!(op.clbits.iter().all(|&c| c < flat.num_clbits));
            if let Some(cond) = &op.condition {
                prop_assert!(cond.clbits.iter().all(|&c| c < flat.num_clbits));
            }
            let known = qact::qasm::builtin(&op.name).is_some()
                || ast.opaque_defs.iter().any(|o| o.name == op.name)
                || matches!(op.kind, OpKind::Measure | OpKind::Reset | OpKind::Barrier);
            prop_assert!(known, "unexpected op {}", op.name);
        }
    }

    /// Flattening the first k statements yields a prefix of the full op
    /// list, so each op can be traced to its source statement. Along every
    /// qubit those statement indices never go backwards.
    #[test]
    fn flattening_preserves_per_qubit_order(seed in any::<u64>()) {
        let mut ast = parse_program(&common::random_program(seed)).unwrap();
        let statements = std::mem::take(&mut ast.statements);
        let full = {
            let mut p = ast.clone();
            p.statements = statements.clone();
            flatten(&p).unwrap()
        };
        let mut origin = Vec::new();
        for k in 0..statements.len() {
            let mut p = ast.clone();
            p.statements = statements[..=k].to_vec();
            let flat = flatten(&p).unwrap();
            prop_assert_eq!(&flat.ops[..], &full.ops[..flat.ops.len()]);
            origin.resize(flat.ops.len(), k);
        }
        let mut last: BTreeMap<usize, usize> = BTreeMap::new();
        for (op, &src) in full.ops.iter().zip(&origin) {
            for q in &op.qubits {
                let prev = last.insert(*q, src).unwrap_or(0);
                prop_assert!(prev <= src);
            }
        }
    }

    /// A flat circuit written back as indexed built-in gate statements
    /// flattens to the same op list.
    #[test]
    fn reflattening_builtin_statements_is_isomorphic(seed in any::<u64>()) {
        let ast = parse_program(&common::random_program(seed)).unwrap();
        let flat = flatten(&ast).unwrap();
        let mut src = format!("OPENQASM 2.0;\nqreg q[{}];\n", flat.num_qubits);
        let mut kept = Vec::new();
        for op in flat.ops.iter().filter(|o| o.kind == OpKind::BuiltinGate && o.condition.is_none()) {
            let params: Vec<String> = op.params.iter().map(|p| format!("{p:?}")).collect();
            let args: Vec<String> = op.qubits.iter().map(|q| format!("q[{q}]")).collect();
            let params = if params.is_empty() { String::new() } else { format!("({})", params.join(", ")) };
            src.push_str(&format!("{}{params} {};\n", op.name, args.join(", ")));
            kept.push(op.clone());
        }
        let again = flatten(&parse_program(&src).unwrap()).unwrap();
        prop_assert_eq!(again.ops.len(), kept.len());
        for (a, b) in again.ops.iter().zip(&kept) {
            prop_assert_eq!(&a.name, &b.name);
            prop_assert_eq!(&a.qubits, &b.qubits);
            prop_assert_eq!(&a.params, &b.params);
        }
    }
}
