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

//! Phase gadgets: normalisation, fusion and gadgetisation by pivoting.

use std::collections::HashMap;

use crate::diagram::{Diagram, EdgeKind, V};
use crate::phase::Phase;
use crate::scalar::ScalarExact;

use super::clifford::pivot;
use super::{gadget_leaf, has_star, is_interior};

/// Hubs carrying π are flipped to 0 by negating the leaf.
pub fn normalize_hubs(d: &mut Diagram) -> bool {
    let mut changed = false;
    for h in d.vertex_list() {
        if !d.contains(h) || d.phase(h) != Phase::pi() {
            continue;
        }
        let Some(l) = gadget_leaf(d, h) else { continue };
        let g = d.phase(l);
        let Ok(e) = ScalarExact::from_phase(g) else { continue };
        d.set_phase(h, Phase::zero());
        d.set_phase(l, -g);
        d.mul_scalar(&e);
        changed = true;
    }
    changed
}

/// Gadgets on the same targets fuse; a gadget on one target merges into it.
pub fn fuse_gadgets(d: &mut Diagram) -> bool {
    let mut changed = false;
    let mut seen: HashMap<Vec<V>, (V, V)> = HashMap::new();
    for h in d.vertex_list() {
        if !d.contains(h) || !d.phase(h).is_zero() {
            continue;
        }
        let Some(l) = gadget_leaf(d, h) else { continue };
        let mut targets: Vec<V> = d.neighbors(h).iter().map(|e| e.0).filter(|&w| w != l).collect();
        targets.sort_unstable();
        if targets.len() == 1 {
            let g = d.phase(l);
            d.add_to_phase(targets[0], g);
            d.remove_vertex(l);
            d.remove_vertex(h);
            changed = true;
            continue;
        }
        match seen.get(&targets) {
            Some(&(_, l0)) if d.contains(l0) => {
                let g = d.phase(l);
                d.add_to_phase(l0, g);
                d.remove_vertex(l);
                d.remove_vertex(h);
                d.mul_sqrt2_pow(1 - targets.len() as i32);
                changed = true;
            }
            _ => {
                seen.insert(targets, (h, l));
            }
        }
    }
    changed
}

fn has_leaf(d: &Diagram, v: V) -> bool {
    d.neighbors(v).iter().any(|&(w, _)| d.degree(w) == 1)
}

fn gadgetize_ok(d: &Diagram, v: V) -> bool {
    d.is_z(v)
        && !has_leaf(d, v)
        && !d.phase(v).is_clifford()
        && d.degree(v) > 1
        && is_interior(d, v)
        && !has_star(d, v)
        && d.neighbors(v).iter().all(|&(_, k)| k == EdgeKind::Hadamard)
}

/// Moves the phase of a non-Clifford spider with a Pauli neighbour onto a
/// fresh gadget, then pivots the pair away.
pub fn gadgetize_simp(d: &mut Diagram) -> bool {
    let mut changed = false;
    for v in d.vertex_list() {
        if !d.contains(v) || !gadgetize_ok(d, v) {
            continue;
        }
        let partner = d.neighbors(v).iter().map(|e| e.0).find(|&u| {
            d.phase(u).is_pauli() && d.degree(u) > 1 && is_interior(d, u) && !has_star(d, u) && !has_leaf(d, u)
        });
        let Some(u) = partner else { continue };
        let a = d.phase(v);
        d.set_phase(v, Phase::zero());
        let h = d.add_z(Phase::zero());
        let g = d.add_z(a);
        d.add_edge(v, h, EdgeKind::Hadamard);
        d.add_edge(h, g, EdgeKind::Hadamard);
        pivot(d, u, v);
        changed = true;
    }
    changed
}

/// Gadget normalisation, fusion and gadgetisation to fixpoint.
pub fn reduce_tcount(d: &mut Diagram) -> bool {
    let mut changed = false;
    loop {
        let mut c = normalize_hubs(d);
        c |= fuse_gadgets(d);
        c |= gadgetize_simp(d);
        if !c {
            return changed;
        }
        changed = true;
    }
}
