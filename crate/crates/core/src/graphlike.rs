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

//! Conversion to graph-like form.
//!
//! A graph-like diagram has only Z spiders, joined by Hadamard or star
//! edges, with no parallel edges or self-loops. Boundaries hang off a Z
//! spider by a plain edge.

use crate::diagram::{Diagram, EdgeKind, VertexData, V};
use crate::phase::Phase;

/// Replaces each triangle by `in -X(π)- a -star- b - out`, keeping the
/// kinds of the two original edges.
pub fn replace_triangles(d: &mut Diagram) {
    let tris: Vec<V> = d.vertices().filter(|&v| matches!(d.data(v), VertexData::Triangle { .. })).collect();
    for t in tris {
        let VertexData::Triangle { input, output } = d.data(t) else { unreachable!() };
        let nbrs = d.neighbors(t).to_vec();
        let (ki, ko) = if input == output {
            (nbrs[0].1, nbrs[1].1)
        } else {
            let ki = nbrs.iter().find(|e| e.0 == input).expect("triangle input edge").1;
            let ko = nbrs.iter().find(|e| e.0 == output).expect("triangle output edge").1;
            (ki, ko)
        };
        d.remove_vertex(t);
        let not = d.add_x(Phase::pi());
        let a = d.add_z(Phase::zero());
        let b = d.add_z(Phase::zero());
        d.add_edge(input, not, ki);
        d.add_edge(not, a, EdgeKind::Plain);
        d.add_edge(a, b, EdgeKind::Star);
        d.add_edge(b, output, ko);
        for v in [input, output] {
            retarget_neighbor_triangle(d, v, t, if v == input { not } else { b });
        }
    }
}

// a triangle adjacent to a replaced triangle names it as a neighbour
fn retarget_neighbor_triangle(d: &mut Diagram, v: V, old: V, new: V) {
    if matches!(d.vertex(v), Some(VertexData::Triangle { .. })) {
        d.retarget_triangle(v, old, new);
    }
}

fn split_edge(d: &mut Diagram, u: V, w: V, k: EdgeKind, near_u: EdgeKind, near_w: EdgeKind) -> V {
    d.remove_edge(u, w, k);
    let m = d.add_z(Phase::zero());
    d.add_edge(u, m, near_u);
    d.add_edge(m, w, near_w);
    if matches!(d.vertex(w), Some(VertexData::Triangle { .. })) {
        d.retarget_triangle(w, u, m);
    }
    if matches!(d.vertex(u), Some(VertexData::Triangle { .. })) {
        d.retarget_triangle(u, w, m);
    }
    m
}

/// Puts a phase-0 Z spider between a star or Hadamard edge and anything
/// that is not a Z spider, so that later colour changes and boundaries
/// never compose a Hadamard with a star on one wire.
pub fn insert_buffer_spiders(d: &mut Diagram) {
    for (u, w, k) in d.edges() {
        if k == EdgeKind::Plain {
            continue;
        }
        let needs = |v: V| match d.data(v) {
            VertexData::Z(_) => false,
            VertexData::X(_) => k == EdgeKind::Star,
            _ => true,
        };
        if u == w {
            if needs(u) {
                let m = split_edge(d, u, u, k, EdgeKind::Plain, k);
                split_edge(d, m, u, k, k, EdgeKind::Plain);
            }
            continue;
        }
        let (nu, nw) = (needs(u), needs(w));
        match (nu, nw) {
            (false, false) => {}
            (true, false) => {
                split_edge(d, u, w, k, EdgeKind::Plain, k);
            }
            (false, true) => {
                split_edge(d, u, w, k, k, EdgeKind::Plain);
            }
            (true, true) => {
                let m = split_edge(d, u, w, k, EdgeKind::Plain, k);
                split_edge(d, m, w, k, k, EdgeKind::Plain);
            }
        }
    }
}

fn toggle(k: EdgeKind) -> EdgeKind {
    match k {
        EdgeKind::Plain => EdgeKind::Hadamard,
        EdgeKind::Hadamard => EdgeKind::Plain,
        EdgeKind::Star => EdgeKind::Star,
    }
}

/// X(α) becomes Z(α) with a Hadamard on every leg.
pub fn color_change(d: &mut Diagram) {
    let xs: Vec<V> = d.vertices().filter(|&v| matches!(d.data(v), VertexData::X(_))).collect();
    if xs.is_empty() {
        return;
    }
    let mut is_x = vec![false; d.capacity()];
    for &v in &xs {
        is_x[v] = true;
    }
    for (u, w, k) in d.edges() {
        let flips = is_x[u] as usize + is_x[w] as usize;
        if flips % 2 == 1 {
            assert!(k != EdgeKind::Star, "star edge at an X spider needs a buffer first");
            d.remove_edge(u, w, k);
            d.add_edge(u, w, toggle(k));
        }
    }
    for v in xs {
        let p = d.phase(v);
        d.set_data(v, VertexData::Z(p));
    }
}

/// Fuses Z spiders joined by plain edges. Returns true if anything fused.
pub fn fuse_plain(d: &mut Diagram) -> bool {
    let mut changed = false;
    let mut stack: Vec<V> = d.vertex_list();
    while let Some(u) = stack.pop() {
        if !d.is_z(u) {
            continue;
        }
        loop {
            let nb = d.neighbors(u).iter().find(|&&(w, k)| k == EdgeKind::Plain && d.is_z(w)).copied();
            let Some((w, _)) = nb else { break };
            if w == u {
                // plain self-loop is the identity
                d.remove_edge(u, u, EdgeKind::Plain);
                continue;
            }
            d.remove_edge(u, w, EdgeKind::Plain);
            let p = d.phase(w);
            d.add_to_phase(u, p);
            for (x, k) in d.neighbors(w).to_vec() {
                let x2 = if x == w { u } else { x };
                if x == w {
                    // each loop is listed twice; move it once
                    if d.remove_edge(w, w, k) {
                        d.add_edge(u, u, k);
                    }
                    continue;
                }
                d.remove_edge(w, x, k);
                d.add_edge(u, x2, k);
                if matches!(d.vertex(x), Some(VertexData::Triangle { .. })) {
                    d.retarget_triangle(x, w, u);
                }
            }
            d.remove_vertex(w);
            changed = true;
        }
    }
    changed
}

/// Resolves a self-loop of kind `k` on Z spider `v`. Returns false if `v`
/// was deleted.
pub fn remove_self_loop(d: &mut Diagram, v: V, k: EdgeKind) -> bool {
    d.remove_edge(v, v, k);
    match k {
        EdgeKind::Plain => true,
        EdgeKind::Hadamard => {
            d.add_to_phase(v, Phase::pi());
            d.mul_sqrt2_pow(-1);
            true
        }
        EdgeKind::Star => {
            force_zero(d, v);
            d.contains(v)
        }
    }
}

/// Z spider `v` is projected onto |0>: its phase no longer matters,
/// Hadamard edges become constants and star edges become 1.
pub fn force_zero(d: &mut Diagram, v: V) {
    let mut keep = false;
    for (w, k) in d.neighbors(v).to_vec() {
        if w == v {
            if d.remove_edge(v, v, k) && k == EdgeKind::Hadamard {
                d.mul_sqrt2_pow(-1);
            }
            continue;
        }
        match k {
            EdgeKind::Hadamard => {
                d.remove_edge(v, w, k);
                d.mul_sqrt2_pow(-1);
            }
            EdgeKind::Star => {
                d.remove_edge(v, w, k);
            }
            EdgeKind::Plain => keep = true,
        }
    }
    if keep {
        d.set_phase(v, Phase::zero());
        let leaf = d.add_z(Phase::zero());
        d.add_edge(v, leaf, EdgeKind::Hadamard);
        d.mul_sqrt2_pow(-1);
    } else {
        d.remove_vertex(v);
    }
}

/// Adds an edge of kind `k` between Z spiders `u != w`, merging it with
/// an existing edge.
pub fn add_edge_merged(d: &mut Diagram, u: V, w: V, k: EdgeKind) {
    debug_assert!(u != w);
    match (d.edge_kind(u, w), k) {
        (None, _) => d.add_edge(u, w, k),
        (Some(EdgeKind::Hadamard), EdgeKind::Hadamard) => {
            d.remove_edge(u, w, EdgeKind::Hadamard);
            d.mul_sqrt2_pow(-2);
        }
        (Some(EdgeKind::Star), EdgeKind::Star) => {}
        (Some(EdgeKind::Star), EdgeKind::Hadamard) => d.mul_sqrt2_pow(-1),
        (Some(EdgeKind::Hadamard), EdgeKind::Star) => {
            d.remove_edge(u, w, EdgeKind::Hadamard);
            d.add_edge(u, w, EdgeKind::Star);
            d.mul_sqrt2_pow(-1);
        }
        (Some(e), k) => panic!("cannot merge {e:?} with {k:?} between {u} and {w}"),
    }
}

/// Removes parallel edges and self-loops between Z spiders.
pub fn remove_parallel_and_loops(d: &mut Diagram) -> bool {
    let mut changed = false;
    for v in d.vertex_list() {
        if !d.contains(v) || !d.is_z(v) {
            continue;
        }
        // star loops first: they delete most structure around v
        while d.contains(v) && d.neighbors(v).iter().any(|&(w, k)| w == v && k == EdgeKind::Star) {
            remove_self_loop(d, v, EdgeKind::Star);
            changed = true;
        }
        if !d.contains(v) {
            continue;
        }
        while let Some(&(_, k)) = d.neighbors(v).iter().find(|&&(w, _)| w == v) {
            remove_self_loop(d, v, k);
            changed = true;
        }
        let mut seen: Vec<V> = Vec::new();
        for (w, _) in d.neighbors(v).to_vec() {
            if w == v || seen.contains(&w) || !d.is_z(w) {
                continue;
            }
            seen.push(w);
            let kinds = d.remove_edges_between(v, w);
            if kinds.len() > 1 {
                changed = true;
            }
            for k in kinds {
                add_edge_merged(d, v, w, k);
            }
        }
    }
    changed
}

/// Graph-like predicate.
pub fn is_graph_like(d: &Diagram) -> bool {
    for v in d.vertices() {
        match d.data(v) {
            VertexData::Z(_) => {}
            VertexData::Boundary => continue,
            _ => return false,
        }
        let mut seen = std::collections::HashSet::new();
        for &(w, k) in d.neighbors(v) {
            if w == v || !seen.insert(w) {
                return false;
            }
            let ok = if d.is_boundary(w) { k == EdgeKind::Plain } else { k != EdgeKind::Plain };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Full conversion: triangles, buffers, colour change, fusion and
/// multi-edge cleanup.
pub fn to_graph_like(d: &mut Diagram) {
    replace_triangles(d);
    insert_buffer_spiders(d);
    color_change(d);
    loop {
        fuse_plain(d);
        // Hadamard or star edges straight onto a boundary, or boundary to boundary
        insert_boundary_buffers(d);
        let c = remove_parallel_and_loops(d);
        if !c && !d.vertices().any(|v| d.is_z(v) && d.neighbors(v).iter().any(|&(w, k)| k == EdgeKind::Plain && d.is_z(w))) {
            break;
        }
    }
    debug_assert!(is_graph_like(d));
}

fn insert_boundary_buffers(d: &mut Diagram) {
    for (u, w, k) in d.edges() {
        let (bu, bw) = (d.is_boundary(u), d.is_boundary(w));
        if !bu && !bw {
            continue;
        }
        if bu && bw {
            if k != EdgeKind::Plain {
                let m = split_edge(d, u, w, k, EdgeKind::Plain, k);
                split_edge(d, m, w, k, k, EdgeKind::Plain);
            }
            continue;
        }
        if k != EdgeKind::Plain {
            if bu {
                split_edge(d, u, w, k, EdgeKind::Plain, k);
            } else {
                split_edge(d, u, w, k, k, EdgeKind::Plain);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::{interpret_with, tensors_equal, DenseConfig};
    use crate::scalar::ScalarExact;

    fn check(d: &Diagram) -> Diagram {
        let mut g = d.clone();
        to_graph_like(&mut g);
        assert!(is_graph_like(&g), "{:?}", g.edges());
        let cfg = DenseConfig::unlimited();
        assert!(tensors_equal(&interpret_with(d, &cfg).unwrap(), &interpret_with(&g, &cfg).unwrap(), 1e-10).unwrap());
        g
    }

    #[test]
    fn double_hadamard() {
        let mut d = Diagram::new();
        let a = d.add_z(Phase::new(1, 4));
        let b = d.add_z(Phase::new(1, 2));
        d.add_edge(a, b, EdgeKind::Hadamard);
        d.add_edge(a, b, EdgeKind::Hadamard);
        let g = check(&d);
        assert_eq!(g.num_edges(), 0);
        assert_eq!(*g.scalar(), ScalarExact::sqrt2_pow(-2));
    }

    #[test]
    fn star_and_hadamard() {
        let mut d = Diagram::new();
        let a = d.add_z(Phase::new(1, 4));
        let b = d.add_z(Phase::new(3, 4));
        d.add_edge(a, b, EdgeKind::Hadamard);
        d.add_edge(a, b, EdgeKind::Star);
        let g = check(&d);
        assert_eq!(g.edges(), vec![(a, b, EdgeKind::Star)]);
        assert_eq!(*g.scalar(), ScalarExact::sqrt2_pow(-1));
    }

    #[test]
    fn star_loop() {
        let mut d = Diagram::new();
        let v = d.add_z(Phase::new(1, 4));
        let mut others = Vec::new();
        for _ in 0..3 {
            let w = d.add_z(Phase::new(1, 2));
            d.add_edge(v, w, EdgeKind::Hadamard);
            others.push(w);
        }
        d.add_edge(v, v, EdgeKind::Star);
        let g = check(&d);
        assert!(!g.contains(v));
        assert_eq!(*g.scalar(), ScalarExact::sqrt2_pow(-3));
    }

    #[test]
    fn star_star() {
        let mut d = Diagram::new();
        let a = d.add_z(Phase::new(1, 4));
        let b = d.add_x(Phase::new(3, 4));
        d.add_edge(a, b, EdgeKind::Star);
        d.add_edge(a, b, EdgeKind::Star);
        check(&d);
    }

    #[test]
    fn triangles_and_boundaries() {
        let mut d = Diagram::new();
        let i = d.add_boundary();
        let o = d.add_boundary();
        let x = d.add_x(Phase::new(1, 2));
        let t = d.add_vertex(VertexData::Triangle { input: i, output: x });
        d.add_edge(i, t, EdgeKind::Plain);
        d.add_edge(t, x, EdgeKind::Hadamard);
        d.add_edge(x, o, EdgeKind::Hadamard);
        let g = check(&d);
        assert_eq!(g.star_count(), 1);
        // idempotent
        let mut h = g.clone();
        to_graph_like(&mut h);
        assert_eq!(h.edges(), g.edges());
        assert_eq!(h.scalar(), g.scalar());
    }

    #[test]
    fn bare_wire() {
        let mut d = Diagram::new();
        let i = d.add_boundary();
        let o = d.add_boundary();
        d.add_edge(i, o, EdgeKind::Hadamard);
        check(&d);
    }

    #[test]
    fn plain_wire_unchanged_by_buffers() {
        let mut d = Diagram::new();
        let a = d.add_z(Phase::zero());
        let b = d.add_z(Phase::zero());
        d.add_edge(a, b, EdgeKind::Plain);
        insert_buffer_spiders(&mut d);
        assert_eq!(d.num_vertices(), 2);
    }

    #[test]
    fn random_diagrams_convert() {
        use crate::random::RandomDiagram;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for i in 0..500 {
            let shape = RandomDiagram {
                spiders: 2 + i % 7,
                edges: 2 + i % 9,
                triangles: i % 3,
                boundaries: i % 3,
                ..Default::default()
            };
            let d = shape.sample(&mut rng);
            let g = check(&d);
            let mut h = g.clone();
            to_graph_like(&mut h);
            assert_eq!(h.edges(), g.edges());
        }
    }
}
