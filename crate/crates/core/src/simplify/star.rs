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

//! Rules that copy Pauli states and remove star edges.

use crate::diagram::{Diagram, EdgeKind, V};
use crate::graphlike::force_zero;
use crate::phase::Phase;
use crate::scalar::ScalarExact;

/// The single neighbour of a degree-1 Z spider.
fn leaf_edge(d: &Diagram, v: V) -> Option<(V, EdgeKind)> {
    if d.is_z(v) && d.degree(v) == 1 {
        let (w, k) = d.neighbors(v)[0];
        if w != v && d.is_z(w) {
            return Some((w, k));
        }
    }
    None
}

fn copy_target_ok(d: &Diagram, v: V) -> bool {
    d.neighbors(v).iter().all(|&(w, k)| k != EdgeKind::Plain && d.is_z(w))
}

/// Copies one Pauli leaf through its neighbour. Returns false if the
/// pattern does not match at `leaf`.
pub fn copy_leaf(d: &mut Diagram, leaf: V) -> bool {
    let Some((v, EdgeKind::Hadamard)) = leaf_edge(d, leaf) else { return false };
    let lp = d.phase(leaf);
    if !lp.is_pauli() || !copy_target_ok(d, v) {
        return false;
    }
    if lp.is_zero() {
        d.remove_vertex(leaf);
        d.mul_sqrt2_pow(1);
        force_zero(d, v);
        return true;
    }
    let Ok(e) = ScalarExact::from_phase(d.phase(v)) else { return false };
    d.remove_vertex(leaf);
    d.mul_sqrt2_pow(1);
    d.mul_scalar(&e);
    for (w, k) in d.neighbors(v).to_vec() {
        match k {
            EdgeKind::Hadamard => {
                d.add_to_phase(w, Phase::pi());
                d.mul_sqrt2_pow(-1);
            }
            EdgeKind::Star => {
                let z = d.add_z(Phase::zero());
                d.add_edge(w, z, EdgeKind::Hadamard);
                d.mul_sqrt2_pow(-1);
            }
            EdgeKind::Plain => unreachable!(),
        }
    }
    d.remove_vertex(v);
    true
}

pub fn copy_simp(d: &mut Diagram) -> bool {
    let mut changed = false;
    let mut stack: Vec<V> = d.vertex_list();
    stack.reverse();
    while let Some(v) = stack.pop() {
        if !d.contains(v) {
            continue;
        }
        let before = d.capacity();
        if copy_leaf(d, v) {
            changed = true;
            // new leaves from the π case cascade
            stack.extend(before..d.capacity());
        }
    }
    changed
}

/// A π leaf on a star edge: the star becomes a Hadamard edge.
pub fn star_state_simp(d: &mut Diagram) -> bool {
    let mut changed = false;
    for v in d.vertex_list() {
        if !d.contains(v) {
            continue;
        }
        if let Some((w, EdgeKind::Star)) = leaf_edge(d, v) {
            if d.phase(v) == Phase::pi() {
                d.remove_edge(v, w, EdgeKind::Star);
                d.add_edge(v, w, EdgeKind::Hadamard);
                d.mul_sqrt2_pow(-1);
                changed = true;
            }
        }
    }
    changed
}

/// `u -star- π -star- v` becomes
/// `u -H- π -H- 0 -star- 0 -H- π -H- v`.
pub fn star_pi_star_simp(d: &mut Diagram) -> bool {
    let mut changed = false;
    for p in d.vertex_list() {
        if !d.contains(p) || !d.is_z(p) || d.degree(p) != 2 || d.phase(p) != Phase::pi() {
            continue;
        }
        let [(u, ku), (v, kv)] = [d.neighbors(p)[0], d.neighbors(p)[1]];
        if ku != EdgeKind::Star || kv != EdgeKind::Star || u == v || !d.is_z(u) || !d.is_z(v) {
            continue;
        }
        d.remove_vertex(p);
        let a = d.add_z(Phase::pi());
        let b = d.add_z(Phase::zero());
        let c = d.add_z(Phase::zero());
        let e = d.add_z(Phase::pi());
        d.add_edge(u, a, EdgeKind::Hadamard);
        d.add_edge(a, b, EdgeKind::Hadamard);
        d.add_edge(b, c, EdgeKind::Star);
        d.add_edge(c, e, EdgeKind::Hadamard);
        d.add_edge(e, v, EdgeKind::Hadamard);
        changed = true;
    }
    changed
}

/// Deletes edgeless spiders, multiplying by `1 + e^{iα}`.
pub fn remove_isolated(d: &mut Diagram) -> bool {
    let mut changed = false;
    for v in d.vertex_list() {
        if d.is_z(v) && d.degree(v) == 0 {
            if let Ok(s) = ScalarExact::one_plus_phase(d.phase(v)) {
                d.mul_scalar(&s);
                d.remove_vertex(v);
                changed = true;
            }
        }
    }
    changed
}
