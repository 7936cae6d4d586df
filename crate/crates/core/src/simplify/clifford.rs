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

//! Local complementation, pivoting and identity removal on spiders without
//! star edges.

use crate::diagram::{Diagram, EdgeKind, V};
use crate::graphlike::{add_edge_merged, remove_self_loop};
use crate::phase::Phase;
use crate::scalar::ScalarExact;

use super::{has_star, is_hub, is_interior};

/// Multiplies the diagram by `(-1)^{x_u x_w}`.
pub fn toggle_cz(d: &mut Diagram, u: V, w: V) {
    match d.edge_kind(u, w) {
        None => {
            d.add_edge(u, w, EdgeKind::Hadamard);
            d.mul_sqrt2_pow(1);
        }
        Some(EdgeKind::Hadamard) => {
            d.remove_edge(u, w, EdgeKind::Hadamard);
            d.mul_sqrt2_pow(-1);
        }
        Some(EdgeKind::Star) => {}
        Some(EdgeKind::Plain) => panic!("plain edge between spiders {u} and {w}"),
    }
}

fn all_hadamard(d: &Diagram, v: V) -> bool {
    d.neighbors(v).iter().all(|&(w, k)| k == EdgeKind::Hadamard && d.is_z(w))
}

pub fn lc_applies(d: &Diagram, v: V) -> bool {
    d.is_z(v) && d.phase(v).is_proper_clifford() && all_hadamard(d, v)
}

/// Removes a ±π/2 spider by local complementation of its neighbourhood.
pub fn local_complement(d: &mut Diagram, v: V) {
    let p = d.phase(v);
    // e^{iα/2} with α taken in (-π, π]
    let w = if p == Phase::new(1, 2) { 1 } else { -1 };
    let ns: Vec<V> = d.neighbors(v).iter().map(|e| e.0).collect();
    d.remove_vertex(v);
    for &w in &ns {
        d.add_to_phase(w, -p);
    }
    for i in 0..ns.len() {
        for j in i + 1..ns.len() {
            toggle_cz(d, ns[i], ns[j]);
        }
    }
    d.mul_sqrt2_pow(1 - ns.len() as i32);
    d.mul_scalar(&ScalarExact::omega_pow(w));
}

pub fn local_complement_simp(d: &mut Diagram) -> bool {
    let mut changed = false;
    loop {
        let cand: Vec<V> = d.vertices().filter(|&v| lc_applies(d, v)).collect();
        if cand.is_empty() {
            return changed;
        }
        for v in cand {
            if d.contains(v) && lc_applies(d, v) {
                local_complement(d, v);
                changed = true;
            }
        }
    }
}

fn pivot_vertex_ok(d: &Diagram, v: V) -> bool {
    d.is_z(v) && d.phase(v).is_pauli() && is_interior(d, v) && !has_star(d, v) && !is_hub(d, v)
}

pub fn pivot_applies(d: &Diagram, u: V, v: V) -> bool {
    u != v && pivot_vertex_ok(d, u) && pivot_vertex_ok(d, v) && d.edge_kind(u, v) == Some(EdgeKind::Hadamard)
}

/// Pivots along the Hadamard edge between Pauli spiders `u` and `v`,
/// removing both. Neither may carry a star edge.
pub fn pivot(d: &mut Diagram, u: V, v: V) {
    let a = d.phase(u);
    let b = d.phase(v);
    let nu: Vec<V> = d.neighbors(u).iter().map(|e| e.0).filter(|&w| w != v).collect();
    let nv: Vec<V> = d.neighbors(v).iter().map(|e| e.0).filter(|&w| w != u).collect();
    let mut in_u = vec![false; d.capacity()];
    let mut in_v = vec![false; d.capacity()];
    for &w in &nu {
        in_u[w] = true;
    }
    for &w in &nv {
        in_v[w] = true;
    }
    let only_u: Vec<V> = nu.iter().copied().filter(|&w| !in_v[w]).collect();
    let only_v: Vec<V> = nv.iter().copied().filter(|&w| !in_u[w]).collect();
    let both: Vec<V> = nu.iter().copied().filter(|&w| in_v[w]).collect();
    let sign = !a.is_zero() && !b.is_zero();
    let k = nu.len() + nv.len();
    d.remove_vertex(u);
    d.remove_vertex(v);
    for &w in &nv {
        d.add_to_phase(w, a);
    }
    for &w in &nu {
        d.add_to_phase(w, b);
    }
    for &w in &both {
        d.add_to_phase(w, Phase::pi());
    }
    for &x in &only_u {
        for &y in &only_v {
            toggle_cz(d, x, y);
        }
        for &y in &both {
            toggle_cz(d, x, y);
        }
    }
    for &x in &both {
        for &y in &only_v {
            toggle_cz(d, x, y);
        }
    }
    d.mul_sqrt2_pow(1 - k as i32);
    if sign {
        d.mul_scalar(&ScalarExact::from_int(-1));
    }
}

pub fn pivot_simp(d: &mut Diagram) -> bool {
    let mut changed = false;
    loop {
        let mut found = false;
        for u in d.vertex_list() {
            if !d.contains(u) || !pivot_vertex_ok(d, u) {
                continue;
            }
            let partner = d.neighbors(u).iter().map(|e| e.0).find(|&v| pivot_applies(d, u, v));
            if let Some(v) = partner {
                pivot(d, u, v);
                found = true;
            }
        }
        if !found {
            return changed;
        }
        changed = true;
    }
}

/// Moves every edge of `w` onto `u` and deletes `w`, adding its phase.
/// Parallel edges and loops are resolved on the way.
pub fn fuse_into(d: &mut Diagram, u: V, w: V) {
    let p = d.phase(w);
    d.add_to_phase(u, p);
    let mut loops = Vec::new();
    for (x, k) in d.neighbors(w).to_vec() {
        if x == u {
            loops.push(k);
        } else if d.is_z(x) {
            add_edge_merged(d, u, x, k);
        } else {
            d.add_edge(u, x, k);
        }
    }
    d.remove_vertex(w);
    loops.sort();
    for k in loops {
        if !d.contains(u) {
            break;
        }
        d.add_edge(u, u, k);
        remove_self_loop(d, u, k);
    }
}

pub fn id_applies(d: &Diagram, v: V) -> bool {
    d.is_z(v) && d.phase(v).is_zero() && d.degree(v) == 2 && all_hadamard(d, v)
}

/// A phase-0 spider with two Hadamard edges identifies its neighbours.
pub fn id_simp(d: &mut Diagram) -> bool {
    let mut changed = false;
    for v in d.vertex_list() {
        if !d.contains(v) || !id_applies(d, v) {
            continue;
        }
        let u = d.neighbors(v)[0].0;
        let w = d.neighbors(v)[1].0;
        d.remove_vertex(v);
        fuse_into(d, u, w);
        changed = true;
    }
    changed
}
