// starzx - contraction of ZX diagrams with star edges
// Copyright (C) 2026 The starzx authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Circuit text formats.
//!
//! Simple format: `#` comments, an optional `qubits N` line, then one gate
//! per line as a mnemonic and qubit indices. `rz` takes its angle in units
//! of π first (`rz 1/4 0`), `mcx k c1 .. ck t` takes a control count.
//!
//! QASM: an OpenQASM 2 subset with `qreg`, the gates of [`Gate`] except
//! `mcx`, and angles of the form `[-][k*]pi[/d]` or `0`.

use std::collections::HashMap;

use thiserror::Error;

use super::{Gate, GateIR};
use crate::phase::Phase;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Simple,
    Qasm,
}

impl Format {
    pub fn detect(text: &str) -> Format {
        if text.trim_start().to_ascii_uppercase().starts_with("OPENQASM") {
            Format::Qasm
        } else {
            Format::Simple
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("{line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: unsupported gate `{name}`")]
    Unsupported { line: usize, col: usize, name: String },
    #[error("{line}: qubit {index} out of range for {n} qubits")]
    QubitRange { line: usize, index: usize, n: usize },
    #[error("{line}: gate repeats a qubit")]
    Repeated { line: usize },
}

pub fn parse(text: &str, format: Format) -> Result<GateIR, ParseError> {
    match format {
        Format::Simple => parse_simple(text),
        Format::Qasm => parse_qasm(text),
    }
}

fn arity(name: &str) -> Option<usize> {
    Some(match name {
        "h" | "s" | "sdg" | "t" | "tdg" | "z" | "x" | "rz" => 1,
        "cx" | "cnot" | "cz" => 2,
        "ccz" | "cswap" => 3,
        _ => return None,
    })
}

fn build(name: &str, qs: &[usize], phase: Option<Phase>) -> Gate {
    match name {
        "h" => Gate::H(qs[0]),
        "s" => Gate::S(qs[0]),
        "sdg" => Gate::Sdg(qs[0]),
        "t" => Gate::T(qs[0]),
        "tdg" => Gate::Tdg(qs[0]),
        "z" => Gate::Z(qs[0]),
        "x" => Gate::X(qs[0]),
        "rz" => Gate::Rz(phase.expect("rz angle"), qs[0]),
        "cx" | "cnot" => Gate::Cx(qs[0], qs[1]),
        "cz" => Gate::Cz(qs[0], qs[1]),
        "ccz" => Gate::Ccz(qs[0], qs[1], qs[2]),
        "cswap" => Gate::Cswap(qs[0], qs[1], qs[2]),
        _ => unreachable!("{name}"),
    }
}

fn check_qubits(qs: &[usize], n: Option<usize>, line: usize) -> Result<(), ParseError> {
    if let Some(n) = n {
        if let Some(&index) = qs.iter().find(|&&q| q >= n) {
            return Err(ParseError::QubitRange { line, index, n });
        }
    }
    let mut s = qs.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.len() != qs.len() {
        return Err(ParseError::Repeated { line });
    }
    Ok(())
}

fn parse_simple(text: &str) -> Result<GateIR, ParseError> {
    let mut n: Option<usize> = None;
    let mut gates = Vec::new();
    let mut max_q = 0usize;
    for (li, raw) in text.lines().enumerate() {
        let line = li + 1;
        let body = raw.split('#').next().unwrap_or("");
        // (column, token)
        let toks: Vec<(usize, &str)> = body
            .char_indices()
            .filter(|&(i, c)| !c.is_whitespace() && (i == 0 || body[..i].ends_with(char::is_whitespace)))
            .map(|(i, _)| (i + 1, body[i..].split_whitespace().next().unwrap()))
            .collect();
        let Some(&(col, head)) = toks.first() else { continue };
        let name = head.to_ascii_lowercase();
        let int = |k: usize| -> Result<usize, ParseError> {
            let (c, t) = toks.get(k).copied().ok_or(ParseError::Syntax {
                line,
                col: body.len() + 1,
                msg: "missing operand".into(),
            })?;
            t.parse().map_err(|_| ParseError::Syntax { line, col: c, msg: format!("expected an integer, got `{t}`") })
        };
        let expect_len = |want: usize| -> Result<(), ParseError> {
            if toks.len() != want {
                let c = toks.get(want).map_or(body.len() + 1, |t| t.0);
                return Err(ParseError::Syntax { line, col: c, msg: format!("`{name}` takes {} operands", want - 1) });
            }
            Ok(())
        };
        if name == "qubits" {
            expect_len(2)?;
            n = Some(int(1)?);
            continue;
        }
        let (gate, qs) = if name == "mcx" {
            let k = int(1)?;
            if k == 0 {
                return Err(ParseError::Syntax { line, col: toks[1].0, msg: "mcx needs at least one control".into() });
            }
            expect_len(k + 3)?;
            let qs: Vec<usize> = (2..k + 3).map(int).collect::<Result<_, _>>()?;
            (Gate::Mcx(qs[..k].to_vec(), qs[k]), qs)
        } else if name == "rz" {
            expect_len(3)?;
            let (c, t) = toks[1];
            let p: Phase =
                t.parse().map_err(|_| ParseError::Syntax { line, col: c, msg: format!("bad angle `{t}`") })?;
            let q = int(2)?;
            (Gate::Rz(p, q), vec![q])
        } else {
            let Some(a) = arity(&name) else {
                return Err(ParseError::Unsupported { line, col, name });
            };
            expect_len(a + 1)?;
            let qs: Vec<usize> = (1..=a).map(int).collect::<Result<_, _>>()?;
            (build(&name, &qs, None), qs)
        };
        check_qubits(&qs, n, line)?;
        max_q = max_q.max(qs.iter().copied().max().unwrap_or(0) + 1);
        gates.push(gate);
    }
    Ok(GateIR { n: n.unwrap_or(max_q), gates })
}

/// Statements of a QASM text with the position of their first character.
fn statements(text: &str) -> Vec<(usize, usize, String)> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut start: Option<(usize, usize)> = None;
    for (li, raw) in text.lines().enumerate() {
        let body = raw.split("//").next().unwrap_or("");
        for (ci, ch) in body.char_indices() {
            if ch == ';' {
                if let Some((l, c)) = start.take() {
                    out.push((l, c, std::mem::take(&mut cur)));
                }
                continue;
            }
            if start.is_none() {
                if ch.is_whitespace() {
                    continue;
                }
                start = Some((li + 1, ci + 1));
            }
            cur.push(ch);
        }
        if start.is_some() {
            cur.push(' ');
        }
    }
    if let Some((l, c)) = start {
        if !cur.trim().is_empty() {
            out.push((l, c, cur));
        }
    }
    out
}

/// `[-][k*]pi[/d]`, `[-]k*pi/d`, or `0`.
fn parse_angle(s: &str) -> Option<Phase> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t == "0" || t == "-0" {
        return Some(Phase::zero());
    }
    let (neg, t) = match t.strip_prefix('-') {
        Some(r) => (true, r.to_string()),
        None => (false, t),
    };
    let (num_part, den) = match t.split_once('/') {
        Some((a, b)) => (a.to_string(), b.parse::<i64>().ok()?),
        None => (t.clone(), 1),
    };
    let k = match num_part.as_str() {
        "pi" => 1,
        p => p.strip_suffix("*pi")?.parse::<i64>().ok()?,
    };
    if den == 0 {
        return None;
    }
    Some(Phase::new(if neg { -k } else { k }, den))
}

fn parse_qasm(text: &str) -> Result<GateIR, ParseError> {
    let mut regs: HashMap<String, (usize, usize)> = HashMap::new();
    let mut n = 0usize;
    let mut gates = Vec::new();
    let mut header = false;
    for (line, col, st) in statements(text) {
        let st = st.trim();
        let syntax = |msg: String| ParseError::Syntax { line, col, msg };
        let head_end = st.find(|c: char| c.is_whitespace() || c == '(').unwrap_or(st.len());
        let head = &st[..head_end];
        let rest = st[head_end..].trim();
        match head {
            "OPENQASM" => {
                header = true;
                continue;
            }
            "include" => continue,
            "qreg" => {
                let (name, size) = rest
                    .strip_suffix(']')
                    .and_then(|r| r.split_once('['))
                    .ok_or_else(|| syntax(format!("bad register declaration `{st}`")))?;
                let size: usize = size.trim().parse().map_err(|_| syntax(format!("bad register size `{size}`")))?;
                regs.insert(name.trim().to_string(), (n, size));
                n += size;
                continue;
            }
            _ => {}
        }
        if !header {
            return Err(syntax("missing OPENQASM header".into()));
        }
        let name = head.to_ascii_lowercase();
        let (angle, operands) = if let Some(r) = rest.strip_prefix('(') {
            let (a, o) = r.split_once(')').ok_or_else(|| syntax("unclosed `(`".into()))?;
            (Some(a), o.trim())
        } else {
            (None, rest)
        };
        let Some(a) = arity(&name) else {
            return Err(ParseError::Unsupported { line, col, name: head.to_string() });
        };
        let phase = match (name.as_str(), angle) {
            ("rz", Some(a)) => Some(parse_angle(a).ok_or_else(|| syntax(format!("unsupported angle `{a}`")))?),
            ("rz", None) => return Err(syntax("rz needs an angle".into())),
            (_, Some(_)) => return Err(syntax(format!("`{name}` takes no angle"))),
            _ => None,
        };
        let mut qs = Vec::new();
        for op in operands.split(',') {
            let op = op.trim();
            let (r, i) = op
                .strip_suffix(']')
                .and_then(|o| o.split_once('['))
                .ok_or_else(|| syntax(format!("bad operand `{op}`")))?;
            let &(off, size) = regs.get(r.trim()).ok_or_else(|| syntax(format!("unknown register `{r}`")))?;
            let i: usize = i.trim().parse().map_err(|_| syntax(format!("bad index `{i}`")))?;
            if i >= size {
                return Err(ParseError::QubitRange { line, index: i, n: size });
            }
            qs.push(off + i);
        }
        if qs.len() != a {
            return Err(syntax(format!("`{name}` takes {a} qubits, got {}", qs.len())));
        }
        check_qubits(&qs, Some(n), line)?;
        gates.push(build(&name, &qs, phase));
    }
    Ok(GateIR { n, gates })
}
