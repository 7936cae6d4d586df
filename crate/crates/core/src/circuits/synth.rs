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

//! Circuit to diagram.
//!
//! Diagrams have the `n` inputs followed by the `n` outputs as boundaries.
//! Every gate is encoded exactly, global scalars included.

use serde::{Deserialize, Serialize};

use super::{Gate, GateIR};
use crate::decompose::RuleSet;
use crate::diagram::{Diagram, EdgeKind, VertexData, V};
use crate::phase::Phase;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CczMode {
    /// Two triangles per CCZ; multi-controlled X as a triangle fan.
    Triangles,
    /// Seven T spiders per CCZ; triangles expanded into T spiders.
    SevenT,
}

impl CczMode {
    /// Seven-T mode stands in for a T-only simulator, so the star suite is off.
    pub fn rules(self) -> RuleSet {
        match self {
            CczMode::Triangles => RuleSet::default(),
            CczMode::SevenT => RuleSet { star_suite: false, t_suite: true },
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CczMode::Triangles => "triangles",
            CczMode::SevenT => "seven_t",
        }
    }
}

impl std::fmt::Display for CczMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for CczMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "triangles" => Ok(CczMode::Triangles),
            "seven_t" | "seven-t" => Ok(CczMode::SevenT),
            _ => Err(format!("unknown mode `{s}`")),
        }
    }
}

pub(crate) struct Builder {
    pub(crate) d: Diagram,
    inputs: Vec<V>,
    front: Vec<(V, EdgeKind)>,
    mode: CczMode,
}

impl Builder {
    pub(crate) fn new(n: usize, mode: CczMode) -> Self {
        let mut d = Diagram::new();
        let inputs: Vec<V> = (0..n).map(|_| d.add_boundary()).collect();
        let front = inputs.iter().map(|&b| (b, EdgeKind::Plain)).collect();
        Builder { d, inputs, front, mode }
    }

    fn attach(&mut self, q: usize, data: VertexData) -> V {
        let v = self.d.add_vertex(data);
        let (u, k) = self.front[q];
        self.d.add_edge(u, v, k);
        self.front[q] = (v, EdgeKind::Plain);
        v
    }

    pub(crate) fn z(&mut self, q: usize, p: Phase) -> V {
        self.attach(q, VertexData::Z(p))
    }

    pub(crate) fn x(&mut self, q: usize, p: Phase) -> V {
        self.attach(q, VertexData::X(p))
    }

    pub(crate) fn h(&mut self, q: usize) {
        let (v, k) = self.front[q];
        let k = if k == EdgeKind::Hadamard { EdgeKind::Plain } else { EdgeKind::Hadamard };
        self.front[q] = (v, k);
    }

    pub(crate) fn gate(&mut self, g: &Gate) {
        let q4 = |k: i64| Phase::new(k, 4);
        match g {
            Gate::H(q) => self.h(*q),
            Gate::S(q) => {
                self.z(*q, q4(2));
            }
            Gate::Sdg(q) => {
                self.z(*q, q4(-2));
            }
            Gate::T(q) => {
                self.z(*q, q4(1));
            }
            Gate::Tdg(q) => {
                self.z(*q, q4(-1));
            }
            Gate::Z(q) => {
                self.z(*q, Phase::pi());
            }
            Gate::Rz(p, q) => {
                self.z(*q, *p);
            }
            Gate::X(q) => {
                self.x(*q, Phase::pi());
            }
            Gate::Cx(c, t) => {
                let a = self.z(*c, Phase::zero());
                let b = self.x(*t, Phase::zero());
                self.d.add_edge(a, b, EdgeKind::Plain);
                self.d.mul_sqrt2_pow(1);
            }
            Gate::Cz(a, b) => {
                let u = self.z(*a, Phase::zero());
                let w = self.z(*b, Phase::zero());
                self.d.add_edge(u, w, EdgeKind::Hadamard);
                self.d.mul_sqrt2_pow(1);
            }
            Gate::Ccz(a, b, c) => match self.mode {
                CczMode::Triangles => self.ccz_triangles(*a, *b, *c),
                CczMode::SevenT => self.ccz_seven_t(*a, *b, *c),
            },
            Gate::Cswap(c, a, b) => {
                for g in [Gate::Cx(*b, *a), Gate::H(*b), Gate::Ccz(*c, *a, *b), Gate::H(*b), Gate::Cx(*b, *a)] {
                    self.gate(&g);
                }
            }
            Gate::Mcx(cs, t) => match (self.mode, cs.len()) {
                (CczMode::SevenT, 1) => self.gate(&Gate::Cx(cs[0], *t)),
                (CczMode::SevenT, 2) => {
                    for g in [Gate::H(*t), Gate::Ccz(cs[0], cs[1], *t), Gate::H(*t)] {
                        self.gate(&g);
                    }
                }
                (CczMode::SevenT, _) => {
                    let tris = self.mcx_fan(cs, *t);
                    for tri in tris {
                        expand_triangle(&mut self.d, tri);
                    }
                }
                (CczMode::Triangles, _) => {
                    self.mcx_fan(cs, *t);
                }
            },
        }
    }

    fn triangle(&mut self, input: V, output: V) -> V {
        let t = self.d.add_vertex(VertexData::Triangle { input, output });
        self.d.add_edge(input, t, EdgeKind::Plain);
        self.d.add_edge(t, output, EdgeKind::Plain);
        t
    }

    /// `(-1)^{abc}` from a triangle pair around three inner spiders.
    fn ccz_triangles(&mut self, a: usize, b: usize, c: usize) {
        let va = self.z(a, Phase::zero());
        let vb = self.z(b, Phase::zero());
        let vc = self.z(c, Phase::zero());
        let p = self.d.add_z(Phase::zero());
        let q = self.d.add_z(Phase::pi());
        let w = self.d.add_z(Phase::zero());
        self.triangle(va, p);
        self.triangle(w, va);
        for (x, y) in [(q, w), (vb, q), (vc, p), (p, q)] {
            self.d.add_edge(x, y, EdgeKind::Hadamard);
        }
        self.d.mul_sqrt2_pow(2);
    }

    /// Phase polynomial `π/4 (a + b + c - a⊕b - a⊕c - b⊕c + a⊕b⊕c)`.
    fn ccz_seven_t(&mut self, a: usize, b: usize, c: usize) {
        let va = self.z(a, Phase::new(1, 4));
        let vb = self.z(b, Phase::new(1, 4));
        let vc = self.z(c, Phase::new(1, 4));
        add_gadget(&mut self.d, &[va, vb], Phase::new(-1, 4));
        add_gadget(&mut self.d, &[va, vc], Phase::new(-1, 4));
        add_gadget(&mut self.d, &[vb, vc], Phase::new(-1, 4));
        add_gadget(&mut self.d, &[va, vb, vc], Phase::new(1, 4));
        self.d.mul_sqrt2_pow(5);
    }

    /// Triangles from each control into a hub, then an inverse triangle to
    /// a copy of the conjunction, which is XORed onto the target.
    fn mcx_fan(&mut self, cs: &[usize], t: usize) -> Vec<V> {
        let ctrl: Vec<V> = cs.iter().map(|&c| self.z(c, Phase::zero())).collect();
        let m = self.d.add_z(Phase::pi());
        let mut tris: Vec<V> = ctrl.iter().map(|&v| self.triangle(v, m)).collect();
        let y = self.d.add_z(Phase::pi());
        tris.push(self.triangle(m, y));
        let vt = self.x(t, Phase::zero());
        self.d.add_edge(y, vt, EdgeKind::Plain);
        self.d.mul_sqrt2_pow(1);
        tris
    }

    pub(crate) fn finish(mut self) -> Diagram {
        let mut bs = self.inputs.clone();
        for &(v, k) in &self.front {
            let b = self.d.add_boundary();
            self.d.add_edge(v, b, k);
            bs.push(b);
        }
        self.d.set_boundaries(bs);
        self.d
    }
}

/// Hub with Hadamard edges to `targets` and to a leaf of phase `p`:
/// `2^{(1-|targets|)/2} e^{ip·parity}`.
fn add_gadget(d: &mut Diagram, targets: &[V], p: Phase) {
    let hub = d.add_z(Phase::zero());
    let leaf = d.add_z(p);
    d.add_edge(hub, leaf, EdgeKind::Hadamard);
    for &t in targets {
        d.add_edge(hub, t, EdgeKind::Hadamard);
    }
}

/// Replaces a triangle with four T spiders:
/// `Σ_z ω^{z - z⊕o + z⊕i - z⊕o⊕i} = 2·[o ≤ i]`.
pub fn expand_triangle(d: &mut Diagram, t: V) {
    let VertexData::Triangle { input, output } = d.data(t) else {
        panic!("vertex {t} is not a triangle");
    };
    let kin = d.edge_kind(input, t).expect("triangle input edge");
    let kout = d.edge_kind(t, output).expect("triangle output edge");
    d.remove_vertex(t);
    let i = d.add_z(Phase::zero());
    let o = d.add_z(Phase::zero());
    d.add_edge(input, i, kin);
    d.add_edge(o, output, kout);
    let z = d.add_z(Phase::new(1, 4));
    add_gadget(d, &[z, o], Phase::new(-1, 4));
    add_gadget(d, &[z, i], Phase::new(1, 4));
    add_gadget(d, &[z, o, i], Phase::new(-1, 4));
    d.mul_sqrt2_pow(2);
}

/// Replaces every triangle with its four-T form.
pub fn expand_triangles(d: &mut Diagram) {
    let ts: Vec<V> = d.vertices().filter(|&v| matches!(d.data(v), VertexData::Triangle { .. })).collect();
    for t in ts {
        expand_triangle(d, t);
    }
}

pub fn to_zx(c: &GateIR, mode: CczMode) -> Diagram {
    let mut b = Builder::new(c.n, mode);
    for g in &c.gates {
        b.gate(g);
    }
    b.finish()
}

/// Multi-controlled X on `k + 1` wires, target last.
pub fn mcx_ladder(k: usize) -> Diagram {
    assert!(k >= 1, "mcx needs a control");
    let c = GateIR { n: k + 1, gates: vec![Gate::Mcx((0..k).collect(), k)] };
    to_zx(&c, CczMode::Triangles)
}

fn cap(d: &mut Diagram, data: impl Fn(usize) -> VertexData) {
    let bs = d.boundaries().to_vec();
    for (i, &b) in bs.iter().enumerate() {
        d.set_data(b, data(i));
        d.mul_sqrt2_pow(-1);
    }
    d.set_boundaries(Vec::new());
}

/// `⟨+|^n D |+⟩^n`: every boundary becomes a phase-free Z spider, `√2|+⟩`.
pub fn plug_plus_amplitude(d: &Diagram) -> Diagram {
    let mut g = d.clone();
    cap(&mut g, |_| VertexData::Z(Phase::zero()));
    g
}

/// `⟨output| D |input⟩` for a diagram with inputs then outputs.
pub fn plug_basis(d: &Diagram, input: &[bool], output: &[bool]) -> Diagram {
    assert_eq!(input.len() + output.len(), d.boundaries().len());
    let bits: Vec<bool> = input.iter().chain(output).copied().collect();
    let mut g = d.clone();
    cap(&mut g, |i| VertexData::X(if bits[i] { Phase::pi() } else { Phase::zero() }));
    g
}
