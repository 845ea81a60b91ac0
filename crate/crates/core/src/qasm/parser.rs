// Copyright contributors to the qact project
// SPDX-License-Identifier: Apache-2.0

//! Recursive-descent parser for OpenQASM 2.0.
//!
//! Besides building the AST the parser resolves every name it sees:
//! registers must be declared before use, gates must be built in, defined
//! or declared opaque before use, and indices must be in range. A gate body
//! may only call gates that already exist, so definitions are acyclic by
//! construction; a body that calls its own gate is reported as recursive.

use std::collections::HashSet;

use super::ast::*;
use super::error::{Position, QasmError};
use super::expr::{BinaryOp, Function, ParamExpr};
use super::gates;
use super::lexer::{tokenize, Token, TokenKind};

const RESERVED: &[&str] = &[
    "OPENQASM", "include", "qreg", "creg", "gate", "opaque", "measure", "reset", "barrier", "if",
    "pi", "sin", "cos", "tan", "exp", "ln", "sqrt",
];

pub(crate) struct TokenCursor<'t> {
    tokens: &'t [Token],
    idx: usize,
}

impl<'t> TokenCursor<'t> {
    pub(crate) fn new(tokens: &'t [Token]) -> Self {
        TokenCursor { tokens, idx: 0 }
    }

    fn peek(&self) -> &'t TokenKind {
        &self.tokens[self.idx].kind
    }

    fn pos(&self) -> Position {
        self.tokens[self.idx].pos
    }

    fn advance(&mut self) -> &'t Token {
        let tok = &self.tokens[self.idx];
        if self.idx + 1 < self.tokens.len() {
            self.idx += 1;
        }
        tok
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek() == kind {
            self.advance();
            true
        } else {
            false
        }
    }

    fn unexpected(&self, expected: &str) -> QasmError {
        QasmError::syntax(
            self.pos(),
            format!("expected {expected}, found {}", self.peek()),
        )
    }

    pub(crate) fn expect(&mut self, kind: &TokenKind) -> Result<(), QasmError> {
        if self.eat(kind) {
            Ok(())
        } else {
            Err(self.unexpected(&kind.to_string()))
        }
    }

    fn ident(&mut self) -> Result<(String, Position), QasmError> {
        let pos = self.pos();
        match self.peek() {
            TokenKind::Ident(name) => {
                self.advance();
                Ok((name.clone(), pos))
            }
            _ => Err(self.unexpected("identifier")),
        }
    }

    /// An identifier that may be used as a user-chosen name.
    fn user_ident(&mut self) -> Result<(String, Position), QasmError> {
        let (name, pos) = self.ident()?;
        if RESERVED.contains(&name.as_str()) {
            return Err(QasmError::syntax(
                pos,
                format!("`{name}` is a reserved word"),
            ));
        }
        Ok((name, pos))
    }

    fn uint<T: std::str::FromStr>(&mut self) -> Result<T, QasmError> {
        let pos = self.pos();
        match self.peek() {
            TokenKind::Int(text) => {
                self.advance();
                text.parse()
                    .map_err(|_| QasmError::syntax(pos, format!("integer `{text}` is too large")))
            }
            _ => Err(self.unexpected("integer")),
        }
    }

    // expr  := term (('+' | '-') term)*
    // term  := unary (('*' | '/') unary)*
    // unary := '-' unary | power
    // power := atom ('^' unary)?
    pub(crate) fn expr(&mut self) -> Result<ParamExpr, QasmError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                TokenKind::Plus => BinaryOp::Add,
                TokenKind::Minus => BinaryOp::Sub,
                _ => return Ok(lhs),
            };
            self.advance();
            let rhs = self.term()?;
            lhs = ParamExpr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self) -> Result<ParamExpr, QasmError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                TokenKind::Star => BinaryOp::Mul,
                TokenKind::Slash => BinaryOp::Div,
                _ => return Ok(lhs),
            };
            self.advance();
            let rhs = self.unary()?;
            lhs = ParamExpr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<ParamExpr, QasmError> {
        if self.eat(&TokenKind::Minus) {
            return Ok(ParamExpr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat(&TokenKind::Caret) {
            let exponent = self.unary()?;
            return Ok(ParamExpr::Binary(
                BinaryOp::Pow,
                Box::new(base),
                Box::new(exponent),
            ));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ParamExpr, QasmError> {
        let pos = self.pos();
        match self.peek() {
            TokenKind::Int(text) => {
                self.advance();
                let v: f64 = text.parse().expect("digits parse as f64");
                if !v.is_finite() {
                    return Err(QasmError::syntax(pos, "number out of range"));
                }
                Ok(ParamExpr::Number(v))
            }
            TokenKind::Real(v) => {
                self.advance();
                Ok(ParamExpr::Number(*v))
            }
            TokenKind::LParen => {
                self.advance();
                let e = self.expr()?;
                self.expect(&TokenKind::RParen)?;
                Ok(e)
            }
            TokenKind::Ident(name) if name == "pi" => {
                self.advance();
                Ok(ParamExpr::Pi)
            }
            TokenKind::Ident(name) => {
                if let Some(func) = Function::from_name(name) {
                    self.advance();
                    self.expect(&TokenKind::LParen)?;
                    let arg = self.expr()?;
                    self.expect(&TokenKind::RParen)?;
                    return Ok(ParamExpr::Call(func, Box::new(arg)));
                }
                if RESERVED.contains(&name.as_str()) {
                    return Err(self.unexpected("expression"));
                }
                self.advance();
                Ok(ParamExpr::Name(name.clone()))
            }
            _ => Err(self.unexpected("expression")),
        }
    }
}

/// Arity of anything callable by name.
#[derive(Clone, Copy)]
struct Signature {
    num_params: usize,
    num_qubits: usize,
    opaque: bool,
}

struct Parser<'t> {
    cursor: TokenCursor<'t>,
    program: QasmProgram,
}

/// Parses OpenQASM 2.0 source.
pub fn parse_program(source: &str) -> Result<QasmProgram, QasmError> {
    let tokens = tokenize(source)?;
    let mut parser = Parser {
        cursor: TokenCursor::new(&tokens),
        program: QasmProgram {
            version: "2.0".to_string(),
            includes: Vec::new(),
            declarations: Vec::new(),
            opaque_defs: Vec::new(),
            gate_defs: Vec::new(),
            statements: Vec::new(),
        },
    };
    parser.header()?;
    while *parser.cursor.peek() != TokenKind::Eof {
        parser.top_level()?;
    }
    Ok(parser.program)
}

impl<'t> Parser<'t> {
    fn header(&mut self) -> Result<(), QasmError> {
        let c = &mut self.cursor;
        match c.peek() {
            TokenKind::Ident(kw) if kw == "OPENQASM" => {
                c.advance();
            }
            _ => return Err(c.unexpected("`OPENQASM 2.0;` header")),
        }
        let pos = c.pos();
        match c.peek() {
            TokenKind::Real(v) if *v == 2.0 => {
                c.advance();
            }
            TokenKind::Real(_) | TokenKind::Int(_) => {
                return Err(QasmError::syntax(pos, "only OpenQASM 2.0 is supported"))
            }
            _ => return Err(c.unexpected("version number")),
        }
        c.expect(&TokenKind::Semicolon)
    }

    fn top_level(&mut self) -> Result<(), QasmError> {
        let pos = self.cursor.pos();
        let keyword = match self.cursor.peek() {
            TokenKind::Ident(name) => name.as_str(),
            _ => return Err(self.cursor.unexpected("statement")),
        };
        match keyword {
            "include" => self.include(),
            "qreg" => self.register(RegisterKind::Quantum),
            "creg" => self.register(RegisterKind::Classical),
            "gate" => self.gate_def(),
            "opaque" => self.opaque_def(),
            "OPENQASM" => Err(QasmError::syntax(pos, "duplicate OPENQASM header")),
            _ => {
                let stmt = self.quantum_statement(true)?;
                self.program.statements.push(stmt);
                Ok(())
            }
        }
    }

    fn include(&mut self) -> Result<(), QasmError> {
        self.cursor.advance();
        let pos = self.cursor.pos();
        let file = match self.cursor.peek() {
            TokenKind::Str(s) => s.clone(),
            _ => return Err(self.cursor.unexpected("file name string")),
        };
        self.cursor.advance();
        self.cursor.expect(&TokenKind::Semicolon)?;
        if file != "qelib1.inc" {
            return Err(QasmError::UnsupportedInclude { pos, file });
        }
        self.program.includes.push(file);
        Ok(())
    }

    fn register(&mut self, kind: RegisterKind) -> Result<(), QasmError> {
        self.cursor.advance();
        let (name, pos) = self.cursor.user_ident()?;
        self.cursor.expect(&TokenKind::LBracket)?;
        let size_pos = self.cursor.pos();
        let size: usize = self.cursor.uint()?;
        self.cursor.expect(&TokenKind::RBracket)?;
        self.cursor.expect(&TokenKind::Semicolon)?;
        if size == 0 {
            return Err(QasmError::semantic(
                size_pos,
                "register size must be at least 1",
            ));
        }
        if self.program.register(&name).is_some() {
            return Err(QasmError::DuplicateRegister { pos, name });
        }
        self.program
            .declarations
            .push(RegisterDecl { kind, name, size });
        Ok(())
    }

    fn signature(&self, name: &str) -> Option<Signature> {
        if let Some(g) = gates::builtin(name) {
            return Some(Signature {
                num_params: g.num_params,
                num_qubits: g.num_qubits,
                opaque: false,
            });
        }
        if let Some(g) = self.program.gate_def(name) {
            return Some(Signature {
                num_params: g.param_names.len(),
                num_qubits: g.qubit_params.len(),
                opaque: false,
            });
        }
        self.program.opaque_def(name).map(|g| Signature {
            num_params: g.param_names.len(),
            num_qubits: g.qubit_params.len(),
            opaque: true,
        })
    }

    /// `name(params) qubits` shared by `gate` and `opaque` declarations.
    fn gate_header(&mut self) -> Result<(String, Vec<String>, Vec<String>), QasmError> {
        self.cursor.advance();
        let (name, pos) = self.cursor.user_ident()?;
        if self.signature(&name).is_some() {
            return Err(QasmError::DuplicateGate { pos, name });
        }
        let mut seen = HashSet::new();
        let mut params = Vec::new();
        if self.cursor.eat(&TokenKind::LParen) && !self.cursor.eat(&TokenKind::RParen) {
            loop {
                let (p, ppos) = self.cursor.user_ident()?;
                if !seen.insert(p.clone()) {
                    return Err(QasmError::semantic(ppos, format!("duplicate name `{p}`")));
                }
                params.push(p);
                if self.cursor.eat(&TokenKind::RParen) {
                    break;
                }
                self.cursor.expect(&TokenKind::Comma)?;
            }
        }
        let mut qubits = Vec::new();
        loop {
            let (q, qpos) = self.cursor.user_ident()?;
            if !seen.insert(q.clone()) {
                return Err(QasmError::semantic(qpos, format!("duplicate name `{q}`")));
            }
            qubits.push(q);
            if !self.cursor.eat(&TokenKind::Comma) {
                break;
            }
        }
        Ok((name, params, qubits))
    }

    fn opaque_def(&mut self) -> Result<(), QasmError> {
        let (name, param_names, qubit_params) = self.gate_header()?;
        self.cursor.expect(&TokenKind::Semicolon)?;
        self.program.opaque_defs.push(OpaqueDef {
            name,
            param_names,
            qubit_params,
        });
        Ok(())
    }

    fn gate_def(&mut self) -> Result<(), QasmError> {
        let (name, param_names, qubit_params) = self.gate_header()?;
        self.cursor.expect(&TokenKind::LBrace)?;
        let mut body = Vec::new();
        while !self.cursor.eat(&TokenKind::RBrace) {
            let pos = self.cursor.pos();
            let (callee, callee_pos) = self.cursor.ident()?;
            if callee == name {
                return Err(QasmError::RecursiveGate {
                    pos: callee_pos,
                    name: callee,
                });
            }
            let sig = self
                .signature(&callee)
                .ok_or_else(|| QasmError::UnknownGate {
                    pos: callee_pos,
                    name: callee.clone(),
                })?;
            let params = self.param_list()?;
            for p in &params {
                if let Some(free) = p
                    .free_names()
                    .into_iter()
                    .find(|n| !param_names.iter().any(|d| d == n))
                {
                    return Err(QasmError::semantic(
                        pos,
                        format!("unknown parameter `{free}`"),
                    ));
                }
            }
            let mut qubits: Vec<String> = Vec::new();
            loop {
                let (q, qpos) = self.cursor.ident()?;
                if !qubit_params.contains(&q) {
                    return Err(QasmError::semantic(
                        qpos,
                        format!("unknown qubit argument `{q}`"),
                    ));
                }
                if qubits.contains(&q) {
                    return Err(QasmError::RepeatedQubit {
                        pos: qpos,
                        gate: callee,
                    });
                }
                qubits.push(q);
                if !self.cursor.eat(&TokenKind::Comma) {
                    break;
                }
            }
            self.cursor.expect(&TokenKind::Semicolon)?;
            check_arity(pos, &callee, sig, params.len(), qubits.len())?;
            body.push(BodyApp {
                name: callee,
                params,
                qubits,
            });
        }
        self.program.gate_defs.push(GateDef {
            name,
            param_names,
            qubit_params,
            body,
        });
        Ok(())
    }

    fn param_list(&mut self) -> Result<Vec<ParamExpr>, QasmError> {
        let mut params = Vec::new();
        if self.cursor.eat(&TokenKind::LParen) {
            if self.cursor.eat(&TokenKind::RParen) {
                return Ok(params);
            }
            loop {
                params.push(self.cursor.expr()?);
                if self.cursor.eat(&TokenKind::RParen) {
                    break;
                }
                self.cursor.expect(&TokenKind::Comma)?;
            }
        }
        Ok(params)
    }

    fn quantum_statement(&mut self, allow_barrier_and_if: bool) -> Result<Statement, QasmError> {
        let pos = self.cursor.pos();
        let (keyword, kpos) = self.cursor.ident()?;
        match keyword.as_str() {
            "measure" => {
                let qubit = self.operand(RegisterKind::Quantum)?;
                self.cursor.expect(&TokenKind::Arrow)?;
                let clbit = self.operand(RegisterKind::Classical)?;
                self.cursor.expect(&TokenKind::Semicolon)?;
                match (&qubit, &clbit) {
                    (Operand::Indexed(..), Operand::Indexed(..)) => {}
                    (Operand::Register(q), Operand::Register(c)) => {
                        if self.size_of(q) != self.size_of(c) {
                            return Err(QasmError::semantic(
                                pos,
                                format!("registers `{q}` and `{c}` have different sizes"),
                            ));
                        }
                    }
                    _ => {
                        return Err(QasmError::semantic(
                            pos,
                            "measure must map a register to a register or a bit to a bit",
                        ))
                    }
                }
                Ok(Statement::Measure { qubit, clbit })
            }
            "reset" => {
                let q = self.operand(RegisterKind::Quantum)?;
                self.cursor.expect(&TokenKind::Semicolon)?;
                Ok(Statement::Reset(q))
            }
            "barrier" if allow_barrier_and_if => {
                let mut operands = vec![self.operand(RegisterKind::Quantum)?];
                while self.cursor.eat(&TokenKind::Comma) {
                    operands.push(self.operand(RegisterKind::Quantum)?);
                }
                self.cursor.expect(&TokenKind::Semicolon)?;
                Ok(Statement::Barrier(operands))
            }
            "if" if allow_barrier_and_if => {
                self.cursor.expect(&TokenKind::LParen)?;
                let (creg, cpos) = self.cursor.ident()?;
                match self.program.register(&creg) {
                    Some(d) if d.kind == RegisterKind::Classical => {}
                    _ => {
                        return Err(QasmError::semantic(
                            cpos,
                            format!("`{creg}` is not a classical register"),
                        ))
                    }
                }
                self.cursor.expect(&TokenKind::EqEq)?;
                let value: u64 = self.cursor.uint()?;
                self.cursor.expect(&TokenKind::RParen)?;
                let body = self.quantum_statement(false)?;
                Ok(Statement::Conditional {
                    creg,
                    value,
                    body: Box::new(body),
                })
            }
            "barrier" | "if" => Err(QasmError::syntax(
                kpos,
                format!("`{keyword}` cannot be conditioned"),
            )),
            _ if RESERVED.contains(&keyword.as_str()) => {
                Err(QasmError::syntax(kpos, format!("unexpected `{keyword}`")))
            }
            _ => {
                let sig = self
                    .signature(&keyword)
                    .ok_or_else(|| QasmError::UnknownGate {
                        pos: kpos,
                        name: keyword.clone(),
                    })?;
                let params = self.param_list()?;
                for p in &params {
                    if let Some(free) = p.free_names().first() {
                        return Err(QasmError::semantic(
                            pos,
                            format!("unknown parameter `{free}`"),
                        ));
                    }
                }
                let mut operands = vec![self.operand(RegisterKind::Quantum)?];
                while self.cursor.eat(&TokenKind::Comma) {
                    operands.push(self.operand(RegisterKind::Quantum)?);
                }
                self.cursor.expect(&TokenKind::Semicolon)?;
                check_arity(pos, &keyword, sig, params.len(), operands.len())?;
                self.check_broadcast(pos, &keyword, &operands)?;
                let app = GateApp {
                    name: keyword,
                    params,
                    operands,
                };
                Ok(if sig.opaque {
                    Statement::Opaque(app)
                } else {
                    Statement::Gate(app)
                })
            }
        }
    }

    fn size_of(&self, register: &str) -> usize {
        self.program.register(register).map_or(0, |d| d.size)
    }

    /// Operands must not overlap and whole-register operands must agree in
    /// size.
    fn check_broadcast(
        &self,
        pos: Position,
        gate: &str,
        operands: &[Operand],
    ) -> Result<(), QasmError> {
        for (i, a) in operands.iter().enumerate() {
            for b in &operands[i + 1..] {
                let overlap = match (a, b) {
                    (Operand::Indexed(r1, i1), Operand::Indexed(r2, i2)) => r1 == r2 && i1 == i2,
                    _ => a.register() == b.register(),
                };
                if overlap {
                    return Err(QasmError::RepeatedQubit {
                        pos,
                        gate: gate.to_string(),
                    });
                }
            }
        }
        let mut sizes = operands.iter().filter_map(|o| match o {
            Operand::Register(r) => Some(self.size_of(r)),
            Operand::Indexed(..) => None,
        });
        if let Some(first) = sizes.next() {
            if sizes.any(|s| s != first) {
                return Err(QasmError::semantic(
                    pos,
                    format!(
                        "register-wide application of `{gate}` over registers of unequal sizes"
                    ),
                ));
            }
        }
        Ok(())
    }

    fn operand(&mut self, expected: RegisterKind) -> Result<Operand, QasmError> {
        let (name, pos) = self.cursor.ident()?;
        let decl = self
            .program
            .register(&name)
            .ok_or_else(|| QasmError::semantic(pos, format!("unknown register `{name}`")))?;
        if decl.kind != expected {
            let want = match expected {
                RegisterKind::Quantum => "quantum",
                RegisterKind::Classical => "classical",
            };
            return Err(QasmError::semantic(
                pos,
                format!("`{name}` is not a {want} register"),
            ));
        }
        let size = decl.size;
        if !self.cursor.eat(&TokenKind::LBracket) {
            return Ok(Operand::Register(name));
        }
        let index_pos = self.cursor.pos();
        let index: usize = self.cursor.uint()?;
        self.cursor.expect(&TokenKind::RBracket)?;
        if index >= size {
            return Err(QasmError::IndexOutOfRange {
                pos: index_pos,
                register: name,
                index,
                size,
            });
        }
        Ok(Operand::Indexed(name, index))
    }
}

fn check_arity(
    pos: Position,
    gate: &str,
    sig: Signature,
    num_params: usize,
    num_qubits: usize,
) -> Result<(), QasmError> {
    if sig.num_params != num_params {
        return Err(QasmError::semantic(
            pos,
            format!(
                "`{gate}` expects {} parameter(s), got {num_params}",
                sig.num_params
            ),
        ));
    }
    if sig.num_qubits != num_qubits {
        return Err(QasmError::semantic(
            pos,
            format!(
                "`{gate}` expects {} qubit(s), got {num_qubits}",
                sig.num_qubits
            ),
        ));
    }
    Ok(())
}
