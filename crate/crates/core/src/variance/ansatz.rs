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

//! Parametrised circuits, Pauli observables and the built-in ansätze.

use std::fmt;
use std::str::FromStr;

use super::VarianceError;
use crate::circuits::{parse, Format, Gate, GateIR};

/// Rotations take `(parameter, qubit)`. `Rz(θ) = diag(1, e^{iθ})`,
/// `Rx = H Rz H` and `Ry = S Rx S†`, all equal to `e^{-iθP/2}` up to phase.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AGate {
    Fixed(Gate),
    Rz(usize, usize),
    Rx(usize, usize),
    Ry(usize, usize),
}

impl AGate {
    pub fn param(&self) -> Option<usize> {
        match self {
            AGate::Fixed(_) => None,
            AGate::Rz(k, _) | AGate::Rx(k, _) | AGate::Ry(k, _) => Some(*k),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AnsatzIR {
    pub n: usize,
    pub p: usize,
    pub gates: Vec<AGate>,
}

impl AnsatzIR {
    pub fn new(n: usize) -> Self {
        AnsatzIR { n, p: 0, gates: Vec::new() }
    }

    pub fn fixed(&mut self, g: Gate) -> &mut Self {
        self.gates.push(AGate::Fixed(g));
        self
    }

    fn fresh(&mut self) -> usize {
        self.p += 1;
        self.p - 1
    }

    /// Rotations below take the next free parameter id.
    pub fn rz(&mut self, q: usize) -> &mut Self {
        let k = self.fresh();
        self.gates.push(AGate::Rz(k, q));
        self
    }

    pub fn rx(&mut self, q: usize) -> &mut Self {
        let k = self.fresh();
        self.gates.push(AGate::Rx(k, q));
        self
    }

    pub fn ry(&mut self, q: usize) -> &mut Self {
        let k = self.fresh();
        self.gates.push(AGate::Ry(k, q));
        self
    }

    pub fn validate(&self) -> Result<(), VarianceError> {
        let mut seen = vec![false; self.p];
        let mut fixed = GateIR::new(self.n);
        for (index, g) in self.gates.iter().enumerate() {
            match g {
                AGate::Fixed(g) => {
                    let ok = match g {
                        Gate::H(_) | Gate::S(_) | Gate::Sdg(_) | Gate::Z(_) | Gate::X(_) | Gate::Cx(..) | Gate::Cz(..) => true,
                        Gate::Rz(p, _) => p.is_clifford(),
                        _ => false,
                    };
                    if !ok {
                        return Err(VarianceError::NonClifford { index, name: g.name() });
                    }
                    fixed.push(g.clone());
                }
                AGate::Rz(k, q) | AGate::Rx(k, q) | AGate::Ry(k, q) => {
                    if *k >= self.p {
                        return Err(VarianceError::InvalidParam { j: *k, p: self.p });
                    }
                    if seen[*k] {
                        return Err(VarianceError::RepeatedParam(*k));
                    }
                    seen[*k] = true;
                    fixed.push(Gate::Z(*q));
                }
            }
        }
        fixed.validate()?;
        if let Some(k) = seen.iter().position(|s| !s) {
            return Err(VarianceError::MissingParam { missing: k, p: self.p });
        }
        Ok(())
    }

    /// Gate-level form with every rotation expanded around a single `Rz`.
    /// Returns the gates and, per parameter, the index of its `Rz`.
    pub(crate) fn expand(&self) -> (Vec<Gate>, Vec<usize>) {
        let mut out = Vec::new();
        let mut at = vec![0; self.p];
        for g in &self.gates {
            match *g {
                AGate::Fixed(ref g) => out.push(g.clone()),
                AGate::Rz(k, q) => {
                    at[k] = out.len();
                    out.push(Gate::Rz(Default::default(), q));
                }
                AGate::Rx(k, q) => {
                    out.push(Gate::H(q));
                    at[k] = out.len();
                    out.push(Gate::Rz(Default::default(), q));
                    out.push(Gate::H(q));
                }
                AGate::Ry(k, q) => {
                    out.extend([Gate::Sdg(q), Gate::H(q)]);
                    at[k] = out.len();
                    out.push(Gate::Rz(Default::default(), q));
                    out.extend([Gate::H(q), Gate::S(q)]);
                }
            }
        }
        (out, at)
    }

    /// Simple circuit format with three extra mnemonics, `prx q`, `pry q`
    /// and `prz q`, each a rotation with the next parameter id.
    pub fn parse(text: &str) -> Result<Self, VarianceError> {
        let mut kinds = Vec::new();
        let mut body = String::with_capacity(text.len());
        for raw in text.lines() {
            let code = raw.split('#').next().unwrap_or("");
            let head = code.split_whitespace().next().map(str::to_ascii_lowercase);
            let line = match head.as_deref() {
                Some(h @ ("prx" | "pry" | "prz")) => {
                    kinds.push(Some(h.as_bytes()[2]));
                    // same width keeps error columns right
                    raw.replacen(&raw.trim_start()[..3], "z  ", 1)
                }
                Some(h) if h != "qubits" => {
                    kinds.push(None);
                    raw.to_string()
                }
                _ => raw.to_string(),
            };
            body.push_str(&line);
            body.push('\n');
        }
        let c = parse(&body, Format::Simple)?;
        let mut a = AnsatzIR::new(c.n);
        for (g, kind) in c.gates.into_iter().zip(kinds) {
            match (kind, g.qubits()[0]) {
                (Some(b'x'), q) => a.rx(q),
                (Some(b'y'), q) => a.ry(q),
                (Some(_), q) => a.rz(q),
                (None, _) => a.fixed(g),
            };
        }
        a.validate()?;
        Ok(a)
    }

    /// Built-in ansätze by name: `sim-circuit-1` to `sim-circuit-4` and `tree`.
    pub fn builtin(name: &str, n: usize, layers: usize) -> Result<Self, VarianceError> {
        let a = match name {
            "sim-circuit-1" | "sim10" => sim10(n, layers),
            "sim-circuit-2" | "sim11" => sim11(n, layers),
            "sim-circuit-3" | "sim15" => sim15(n, layers),
            "sim-circuit-4" | "sim2" => sim2(n, layers),
            "tree" => tree(n)?,
            _ => return Err(VarianceError::UnknownAnsatz(name.to_string())),
        };
        a.validate()?;
        Ok(a)
    }
}

pub const BUILTIN: [&str; 5] = ["sim-circuit-1", "sim-circuit-2", "sim-circuit-3", "sim-circuit-4", "tree"];

/// RY layer, then per layer a CZ ring and another RY layer.
pub fn sim10(n: usize, layers: usize) -> AnsatzIR {
    let mut a = AnsatzIR::new(n);
    (0..n).for_each(|q| {
        a.ry(q);
    });
    for _ in 0..layers {
        ring(n).for_each(|(x, y)| {
            a.fixed(Gate::Cz(x, y));
        });
        (0..n).for_each(|q| {
            a.ry(q);
        });
    }
    a
}

fn ring(n: usize) -> impl Iterator<Item = (usize, usize)> {
    let wrap = if n > 2 { Some((n - 1, 0)) } else { None };
    (0..n.saturating_sub(1)).map(|i| (i, i + 1)).chain(wrap)
}

/// RY and RZ on every qubit, CNOTs on even pairs, then RY and RZ on the
/// inner qubits and CNOTs on odd pairs.
pub fn sim11(n: usize, layers: usize) -> AnsatzIR {
    let mut a = AnsatzIR::new(n);
    for _ in 0..layers {
        for q in 0..n {
            a.ry(q).rz(q);
        }
        for i in (0..n.saturating_sub(1)).step_by(2) {
            a.fixed(Gate::Cx(i + 1, i));
        }
        for q in 1..n.saturating_sub(1) {
            a.ry(q).rz(q);
        }
        for i in (1..n.saturating_sub(1)).step_by(2) {
            a.fixed(Gate::Cx(i + 1, i));
        }
    }
    a
}

/// RY layer, CNOT ring, RY layer, CNOT ring in the other direction.
pub fn sim15(n: usize, layers: usize) -> AnsatzIR {
    let mut a = AnsatzIR::new(n);
    for _ in 0..layers {
        (0..n).for_each(|q| {
            a.ry(q);
        });
        for i in (0..n).rev() {
            let t = (i + 1) % n;
            if t != i {
                a.fixed(Gate::Cx(i, t));
            }
        }
        (0..n).for_each(|q| {
            a.ry(q);
        });
        for i in 0..n {
            let t = (i + n - 1) % n;
            if t != i {
                a.fixed(Gate::Cx(i, t));
            }
        }
    }
    a
}

/// RX and RZ on every qubit, then a CNOT cascade.
pub fn sim2(n: usize, layers: usize) -> AnsatzIR {
    let mut a = AnsatzIR::new(n);
    for _ in 0..layers {
        for q in 0..n {
            a.rx(q).rz(q);
        }
        for i in (0..n.saturating_sub(1)).rev() {
            a.fixed(Gate::Cx(i + 1, i));
        }
    }
    a
}

/// Binary tree over `n = 2^k` qubits: each pair gets RY on both wires and a
/// CNOT into the second, which moves up a level. The root is qubit `n - 1`.
pub fn tree(n: usize) -> Result<AnsatzIR, VarianceError> {
    if n < 2 || !n.is_power_of_two() {
        return Err(VarianceError::TreeSize(n));
    }
    let mut a = AnsatzIR::new(n);
    let mut live: Vec<usize> = (0..n).collect();
    while live.len() > 1 {
        let mut next = Vec::new();
        for pair in live.chunks(2) {
            let (x, y) = (pair[0], pair[1]);
            a.ry(x).ry(y).fixed(Gate::Cx(x, y));
            next.push(y);
        }
        live = next;
    }
    Ok(a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PauliObservable(pub Vec<Pauli>);

impl PauliObservable {
    pub fn all_z(n: usize) -> Self {
        PauliObservable(vec![Pauli::Z; n])
    }

    /// `I ⊗ … ⊗ I ⊗ Z`.
    pub fn last_z(n: usize) -> Self {
        let mut v = vec![Pauli::I; n];
        if let Some(l) = v.last_mut() {
            *l = Pauli::Z;
        }
        PauliObservable(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromStr for PauliObservable {
    type Err = VarianceError;
    fn from_str(s: &str) -> Result<Self, VarianceError> {
        s.chars()
            .map(|c| match c.to_ascii_uppercase() {
                'I' => Ok(Pauli::I),
                'X' => Ok(Pauli::X),
                'Y' => Ok(Pauli::Y),
                'Z' => Ok(Pauli::Z),
                _ => Err(VarianceError::Observable(s.to_string())),
            })
            .collect::<Result<_, _>>()
            .map(PauliObservable)
    }
}

impl fmt::Display for PauliObservable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.0 {
            write!(f, "{p:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_validate() {
        for name in BUILTIN {
            for n in [4, 8] {
                let a = AnsatzIR::builtin(name, n, 2).unwrap();
                assert!(a.p > 0, "{name}");
            }
        }
        assert_eq!(AnsatzIR::builtin("sim-circuit-1", 5, 1).unwrap().p, 10);
        assert_eq!(AnsatzIR::builtin("tree", 8, 1).unwrap().p, 14);
        assert!(AnsatzIR::builtin("tree", 6, 1).is_err());
        assert!(AnsatzIR::builtin("nope", 6, 1).is_err());
    }

    #[test]
    fn validation_errors() {
        let mut a = AnsatzIR::new(2);
        a.rz(0);
        a.gates.push(AGate::Rx(0, 1));
        assert!(matches!(a.validate(), Err(VarianceError::RepeatedParam(0))));
        let mut a = AnsatzIR::new(2);
        a.fixed(Gate::T(0));
        assert!(matches!(a.validate(), Err(VarianceError::NonClifford { .. })));
        let mut a = AnsatzIR::new(2);
        a.rz(3);
        assert!(a.validate().is_err());
        let mut a = AnsatzIR::new(2);
        a.p = 2;
        a.gates.push(AGate::Rz(1, 0));
        assert!(matches!(a.validate(), Err(VarianceError::MissingParam { missing: 0, .. })));
    }

    #[test]
    fn parse_file() {
        let a = AnsatzIR::parse("qubits 2\npry 0\n  prx 1 # c\ncz 0 1\nprz 1\n").unwrap();
        assert_eq!(a.gates, vec![AGate::Ry(0, 0), AGate::Rx(1, 1), AGate::Fixed(Gate::Cz(0, 1)), AGate::Rz(2, 1)]);
        assert!(matches!(AnsatzIR::parse("qubits 2\nprx 5\n"), Err(VarianceError::Parse(_))));
        assert!(matches!(AnsatzIR::parse("qubits 2\nt 0\n"), Err(VarianceError::NonClifford { .. })));
    }

    #[test]
    fn observables() {
        let h: PauliObservable = "IZxy".parse().unwrap();
        assert_eq!(h.to_string(), "IZXY");
        assert!("IQ".parse::<PauliObservable>().is_err());
        assert_eq!(PauliObservable::last_z(3).to_string(), "IIZ");
    }
}
