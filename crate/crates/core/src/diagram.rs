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

//! ZX diagrams with plain, Hadamard and star edges.
//!
//! Edges form a multiset. A self-loop on `v` shows up twice in `v`'s
//! adjacency list. Vertex ids are never reused.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::phase::Phase;
use crate::scalar::ScalarExact;

pub type V = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Plain,
    Hadamard,
    Star,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexData {
    Z(Phase),
    X(Phase),
    /// `[[1,1],[0,1]]`, output row by input column. The fields name the
    /// neighbour on each end.
    Triangle { input: V, output: V },
    Boundary,
}

impl VertexData {
    pub fn phase(&self) -> Option<Phase> {
        match self {
            VertexData::Z(p) | VertexData::X(p) => Some(*p),
            _ => None,
        }
    }

    pub fn is_z(&self) -> bool {
        matches!(self, VertexData::Z(_))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("unknown vertex {0}")]
    UnknownVertex(V),
    #[error("vertex {0} is not a spider")]
    NotSpider(V),
    #[error("malformed diagram: {0}")]
    Malformed(String),
}

#[derive(Clone, Debug, Default)]
pub struct Diagram {
    verts: Vec<Option<VertexData>>,
    adj: Vec<Vec<(V, EdgeKind)>>,
    nverts: usize,
    nedges: usize,
    boundaries: Vec<V>,
    scalar: ScalarExact,
}

impl Diagram {
    pub fn new() -> Self {
        Diagram { scalar: ScalarExact::one(), ..Default::default() }
    }

    pub fn add_vertex(&mut self, data: VertexData) -> V {
        let v = self.verts.len();
        self.verts.push(Some(data));
        self.adj.push(Vec::new());
        self.nverts += 1;
        v
    }

    /// Put a vertex at a fixed id, growing the table as needed.
    pub fn add_vertex_with_id(&mut self, v: V, data: VertexData) -> Result<(), DiagramError> {
        if v < self.verts.len() && self.verts[v].is_some() {
            return Err(DiagramError::Malformed(format!("duplicate vertex id {v}")));
        }
        while self.verts.len() <= v {
            self.verts.push(None);
            self.adj.push(Vec::new());
        }
        self.verts[v] = Some(data);
        self.nverts += 1;
        Ok(())
    }

    pub fn add_z(&mut self, p: Phase) -> V {
        self.add_vertex(VertexData::Z(p))
    }

    pub fn add_x(&mut self, p: Phase) -> V {
        self.add_vertex(VertexData::X(p))
    }

    /// Adds a boundary vertex and appends it to the boundary list.
    pub fn add_boundary(&mut self) -> V {
        let v = self.add_vertex(VertexData::Boundary);
        self.boundaries.push(v);
        v
    }

    pub fn contains(&self, v: V) -> bool {
        v < self.verts.len() && self.verts[v].is_some()
    }

    fn check(&self, v: V) -> Result<(), DiagramError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(DiagramError::UnknownVertex(v))
        }
    }

    /// Records an edge. No rewriting happens here, so parallel edges and
    /// self-loops are kept as given.
    pub fn add_edge_smart(&mut self, u: V, w: V, k: EdgeKind) -> Result<(), DiagramError> {
        self.check(u)?;
        self.check(w)?;
        self.add_edge(u, w, k);
        Ok(())
    }

    /// Unchecked version of [`Diagram::add_edge_smart`].
    pub fn add_edge(&mut self, u: V, w: V, k: EdgeKind) {
        self.adj[u].push((w, k));
        self.adj[w].push((u, k));
        self.nedges += 1;
    }

    /// Removes one edge (u, w, k). Returns false if none was present.
    pub fn remove_edge(&mut self, u: V, w: V, k: EdgeKind) -> bool {
        let Some(i) = self.adj[u].iter().position(|&e| e == (w, k)) else {
            return false;
        };
        self.adj[u].swap_remove(i);
        let j = self.adj[w].iter().position(|&e| e == (u, k)).expect("adjacency out of sync");
        self.adj[w].swap_remove(j);
        self.nedges -= 1;
        true
    }

    /// Removes every edge between u and w, returning their kinds.
    pub fn remove_edges_between(&mut self, u: V, w: V) -> Vec<EdgeKind> {
        let mut out = Vec::new();
        while let Some(k) = self.edge_kind(u, w) {
            self.remove_edge(u, w, k);
            out.push(k);
        }
        out
    }

    pub fn remove_vertex(&mut self, v: V) {
        let nbrs = std::mem::take(&mut self.adj[v]);
        let mut loops = 0;
        for (w, k) in &nbrs {
            if *w == v {
                loops += 1;
                continue;
            }
            let j = self.adj[*w].iter().position(|&e| e == (v, *k)).expect("adjacency out of sync");
            self.adj[*w].swap_remove(j);
        }
        self.nedges -= nbrs.len() - loops / 2;
        self.verts[v] = None;
        self.nverts -= 1;
        self.boundaries.retain(|&b| b != v);
    }

    pub fn vertex(&self, v: V) -> Option<&VertexData> {
        self.verts.get(v).and_then(|x| x.as_ref())
    }

    pub fn data(&self, v: V) -> VertexData {
        self.verts[v].expect("no such vertex")
    }

    pub fn set_data(&mut self, v: V, d: VertexData) {
        self.verts[v] = Some(d);
    }

    pub fn is_z(&self, v: V) -> bool {
        matches!(self.vertex(v), Some(VertexData::Z(_)))
    }

    pub fn is_boundary(&self, v: V) -> bool {
        matches!(self.vertex(v), Some(VertexData::Boundary))
    }

    /// Phase of a Z or X spider; zero for anything else.
    pub fn phase(&self, v: V) -> Phase {
        self.vertex(v).and_then(|d| d.phase()).unwrap_or_default()
    }

    pub fn set_phase(&mut self, v: V, p: Phase) {
        match &mut self.verts[v] {
            Some(VertexData::Z(q)) | Some(VertexData::X(q)) => *q = p,
            _ => panic!("vertex {v} has no phase"),
        }
    }

    pub fn add_to_phase(&mut self, v: V, p: Phase) {
        let q = self.phase(v);
        self.set_phase(v, q + p);
    }

    pub fn neighbors(&self, v: V) -> &[(V, EdgeKind)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: V) -> usize {
        self.adj[v].len()
    }

    /// Kind of some edge between u and w, if any.
    pub fn edge_kind(&self, u: V, w: V) -> Option<EdgeKind> {
        let (a, b) = if self.adj[u].len() <= self.adj[w].len() { (u, w) } else { (w, u) };
        self.adj[a].iter().find(|e| e.0 == b).map(|e| e.1)
    }

    pub fn connected(&self, u: V, w: V) -> bool {
        self.edge_kind(u, w).is_some()
    }

    pub fn vertices(&self) -> impl Iterator<Item = V> + '_ {
        self.verts.iter().enumerate().filter(|(_, d)| d.is_some()).map(|(v, _)| v)
    }

    pub fn vertex_list(&self) -> Vec<V> {
        self.vertices().collect()
    }

    pub fn num_vertices(&self) -> usize {
        self.nverts
    }

    pub fn num_edges(&self) -> usize {
        self.nedges
    }

    /// One past the largest id ever handed out.
    pub fn capacity(&self) -> usize {
        self.verts.len()
    }

    /// Every edge once, as (min, max, kind), in a deterministic order.
    pub fn edges(&self) -> Vec<(V, V, EdgeKind)> {
        let mut out = Vec::with_capacity(self.nedges);
        for u in self.vertices() {
            let mut loops: Vec<EdgeKind> = Vec::new();
            for &(w, k) in &self.adj[u] {
                if w > u {
                    out.push((u, w, k));
                } else if w == u {
                    loops.push(k);
                }
            }
            loops.sort();
            for pair in loops.chunks(2) {
                out.push((u, u, pair[0]));
            }
        }
        out.sort();
        out
    }

    pub fn scalar(&self) -> &ScalarExact {
        &self.scalar
    }

    pub fn set_scalar(&mut self, s: ScalarExact) {
        self.scalar = s;
    }

    pub fn mul_scalar(&mut self, s: &ScalarExact) {
        self.scalar *= s;
    }

    /// Multiply the global scalar by √2^k.
    pub fn mul_sqrt2_pow(&mut self, k: i32) {
        if k != 0 {
            self.scalar *= &ScalarExact::sqrt2_pow(k);
        }
    }

    pub fn boundaries(&self) -> &[V] {
        &self.boundaries
    }

    pub fn set_boundaries(&mut self, b: Vec<V>) {
        self.boundaries = b;
    }

    pub fn is_scalar_diagram(&self) -> bool {
        self.boundaries.is_empty() && self.vertices().all(|v| !self.is_boundary(v))
    }

    pub fn t_count(&self) -> usize {
        self.vertices().filter(|&v| matches!(self.data(v), VertexData::Z(p) if p.is_t())).count()
    }

    pub fn star_count(&self) -> usize {
        let twice: usize =
            self.vertices().map(|v| self.adj[v].iter().filter(|e| e.1 == EdgeKind::Star).count()).sum();
        twice / 2
    }

    /// (T-spider count, star-edge count).
    pub fn counts(&self) -> (usize, usize) {
        (self.t_count(), self.star_count())
    }

    /// Number of edges of kind `k` at v, self-loops counted twice.
    pub fn degree_of_kind(&self, v: V, k: EdgeKind) -> usize {
        self.adj[v].iter().filter(|e| e.1 == k).count()
    }

    /// Checks id consistency and the per-kind degree constraints.
    pub fn validate(&self) -> Result<(), DiagramError> {
        for v in self.vertices() {
            for &(w, k) in &self.adj[v] {
                self.check(w)?;
                let back = self.adj[w].iter().filter(|&&e| e == (v, k)).count();
                let fwd = self.adj[v].iter().filter(|&&e| e == (w, k)).count();
                if back != fwd {
                    return Err(DiagramError::Malformed(format!("asymmetric edge {v}-{w}")));
                }
            }
            match self.data(v) {
                VertexData::Boundary if self.degree(v) != 1 => {
                    return Err(DiagramError::Malformed(format!("boundary {v} has degree {}", self.degree(v))))
                }
                VertexData::Triangle { input, output } => {
                    if self.degree(v) != 2 {
                        return Err(DiagramError::Malformed(format!("triangle {v} has degree {}", self.degree(v))));
                    }
                    let ns: Vec<V> = self.adj[v].iter().map(|e| e.0).collect();
                    if !(ns.contains(&input) && ns.contains(&output)) {
                        return Err(DiagramError::Malformed(format!("triangle {v} ends do not match its edges")));
                    }
                }
                _ => {}
            }
        }
        let mut seen = std::collections::HashSet::new();
        for &b in &self.boundaries {
            if !self.is_boundary(b) || !seen.insert(b) {
                return Err(DiagramError::Malformed(format!("bad boundary entry {b}")));
            }
        }
        Ok(())
    }

    /// Appends a disjoint copy of `other`, returning the id map. Boundaries
    /// of `other` are appended to ours; scalars multiply.
    pub fn append(&mut self, other: &Diagram) -> Vec<Option<V>> {
        let mut map = vec![None; other.capacity()];
        for v in other.vertices() {
            map[v] = Some(self.add_vertex(other.data(v)));
        }
        for v in other.vertices() {
            if let VertexData::Triangle { input, output } = other.data(v) {
                let nv = map[v].unwrap();
                self.verts[nv] = Some(VertexData::Triangle { input: map[input].unwrap(), output: map[output].unwrap() });
            }
        }
        for (u, w, k) in other.edges() {
            self.add_edge(map[u].unwrap(), map[w].unwrap(), k);
        }
        for &b in &other.boundaries {
            self.boundaries.push(map[b].unwrap());
        }
        self.scalar *= &other.scalar;
        map
    }

    /// Rename a neighbour reference inside a triangle vertex.
    pub fn retarget_triangle(&mut self, t: V, old: V, new: V) {
        if let Some(VertexData::Triangle { input, output }) = &mut self.verts[t] {
            if *input == old {
                *input = new;
            }
            if *output == old {
                *output = new;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_loops_are_recorded() {
        let mut d = Diagram::new();
        let a = d.add_z(Phase::zero());
        let b = d.add_z(Phase::zero());
        d.add_edge_smart(a, b, EdgeKind::Hadamard).unwrap();
        assert_eq!((d.degree(a), d.degree(b)), (1, 1));
        d.add_edge_smart(a, b, EdgeKind::Hadamard).unwrap();
        assert_eq!(d.num_edges(), 2);
        d.add_edge_smart(a, a, EdgeKind::Star).unwrap();
        assert_eq!(d.num_edges(), 3);
        assert_eq!(d.edges().iter().filter(|e| e.0 == e.1).count(), 1);
        assert!(d.add_edge_smart(a, 99, EdgeKind::Plain).is_err());
        d.remove_vertex(a);
        assert_eq!(d.num_edges(), 0);
        assert_eq!(d.degree(b), 0);
    }

    #[test]
    fn counts_examples() {
        let d = Diagram::new();
        assert_eq!(d.counts(), (0, 0));
        let mut d = Diagram::new();
        let a = d.add_z(Phase::zero());
        let b = d.add_z(Phase::new(1, 4));
        d.add_edge(a, b, EdgeKind::Star);
        assert_eq!(d.counts(), (1, 1));
    }
}
