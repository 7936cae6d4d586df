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

//! Gate-level circuits and their translation to diagrams.

pub mod gen;
pub mod parse;
pub mod sim;
pub mod synth;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::phase::Phase;

pub use gen::{gen_hidden_shift, gen_random, GenError, HiddenShift, RandomParams};
pub use parse::{parse, Format, ParseError};
pub use synth::{mcx_ladder, plug_basis, plug_plus_amplitude, to_zx, CczMode};

/// `Rz(α)` is `diag(1, e^{iα})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Gate {
    H(usize),
    S(usize),
    Sdg(usize),
    T(usize),
    Tdg(usize),
    Z(usize),
    X(usize),
    Cx(usize, usize),
    Cz(usize, usize),
    Ccz(usize, usize, usize),
    /// Control, then the two swapped wires.
    Cswap(usize, usize, usize),
    Rz(Phase, usize),
    /// Controls, target.
    Mcx(Vec<usize>, usize),
}

impl Gate {
    pub fn qubits(&self) -> Vec<usize> {
        match self {
            Gate::H(q) | Gate::S(q) | Gate::Sdg(q) | Gate::T(q) | Gate::Tdg(q) | Gate::Z(q) | Gate::X(q) => {
                vec![*q]
            }
            Gate::Rz(_, q) => vec![*q],
            Gate::Cx(a, b) | Gate::Cz(a, b) => vec![*a, *b],
            Gate::Ccz(a, b, c) | Gate::Cswap(a, b, c) => vec![*a, *b, *c],
            Gate::Mcx(cs, t) => cs.iter().copied().chain([*t]).collect(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Gate::H(_) => "h",
            Gate::S(_) => "s",
            Gate::Sdg(_) => "sdg",
            Gate::T(_) => "t",
            Gate::Tdg(_) => "tdg",
            Gate::Z(_) => "z",
            Gate::X(_) => "x",
            Gate::Cx(..) => "cx",
            Gate::Cz(..) => "cz",
            Gate::Ccz(..) => "ccz",
            Gate::Cswap(..) => "cswap",
            Gate::Rz(..) => "rz",
            Gate::Mcx(..) => "mcx",
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IrError {
    #[error("gate {index} ({name}) uses qubit {qubit} but the circuit has {n}")]
    QubitRange { index: usize, name: &'static str, qubit: usize, n: usize },
    #[error("gate {index} ({name}) repeats a qubit")]
    Repeated { index: usize, name: &'static str },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateIR {
    pub n: usize,
    pub gates: Vec<Gate>,
}

impl GateIR {
    pub fn new(n: usize) -> Self {
        GateIR { n, gates: Vec::new() }
    }

    pub fn push(&mut self, g: Gate) {
        self.gates.push(g);
    }

    pub fn validate(&self) -> Result<(), IrError> {
        for (index, g) in self.gates.iter().enumerate() {
            let qs = g.qubits();
            if let Some(&qubit) = qs.iter().find(|&&q| q >= self.n) {
                return Err(IrError::QubitRange { index, name: g.name(), qubit, n: self.n });
            }
            let mut s = qs.clone();
            s.sort_unstable();
            s.dedup();
            if s.len() != qs.len() {
                return Err(IrError::Repeated { index, name: g.name() });
            }
        }
        Ok(())
    }

    pub fn count(&self, name: &str) -> usize {
        self.gates.iter().filter(|g| g.name() == name).count()
    }

    /// Simple text format, one gate per line.
    pub fn to_simple(&self) -> String {
        let mut s = format!("qubits {}\n", self.n);
        for g in &self.gates {
            let line = match g {
                Gate::Rz(p, q) => format!("rz {p} {q}"),
                Gate::Mcx(cs, t) => {
                    let qs: Vec<String> = cs.iter().chain([t]).map(|q| q.to_string()).collect();
                    format!("mcx {} {}", cs.len(), qs.join(" "))
                }
                _ => {
                    let qs: Vec<String> = g.qubits().iter().map(|q| q.to_string()).collect();
                    format!("{} {}", g.name(), qs.join(" "))
                }
            };
            s.push_str(&line);
            s.push('\n');
        }
        s
    }

    /// OpenQASM 2 text. Multi-controlled X has no form there and is refused.
    pub fn to_qasm(&self) -> Option<String> {
        let mut s = format!("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[{}];\n", self.n);
        for g in &self.gates {
            let qs: Vec<String> = g.qubits().iter().map(|q| format!("q[{q}]")).collect();
            let head = match g {
                Gate::Mcx(..) => return None,
                Gate::Rz(p, _) => format!("rz({}*pi/{})", p.numer(), p.denom()),
                _ => g.name().to_string(),
            };
            s.push_str(&format!("{head} {};\n", qs.join(",")));
        }
        Some(s)
    }
}

impl fmt::Display for GateIR {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_simple())
    }
}
