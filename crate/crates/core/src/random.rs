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

//! Random diagrams for tests and benchmarks.

use rand::Rng;

use crate::diagram::{Diagram, EdgeKind, VertexData, V};
use crate::phase::Phase;

#[derive(Clone, Debug)]
pub struct RandomDiagram {
    pub spiders: usize,
    pub edges: usize,
    pub triangles: usize,
    pub boundaries: usize,
    /// Probability that a spider is an X spider.
    pub p_x: f64,
    /// Phases are drawn as k·π/4 for k in this list.
    pub eighths: Vec<i64>,
    /// Edge kinds to draw from.
    pub kinds: Vec<EdgeKind>,
    pub self_loops: bool,
}

impl Default for RandomDiagram {
    fn default() -> Self {
        RandomDiagram {
            spiders: 6,
            edges: 8,
            triangles: 1,
            boundaries: 0,
            p_x: 0.3,
            eighths: (0..8).collect(),
            kinds: vec![EdgeKind::Plain, EdgeKind::Hadamard, EdgeKind::Star],
            self_loops: true,
        }
    }
}

impl RandomDiagram {
    /// Graph-like Clifford+T diagrams with star edges and no boundaries.
    pub fn graph_like(spiders: usize, edges: usize) -> Self {
        RandomDiagram {
            spiders,
            edges,
            triangles: 0,
            boundaries: 0,
            p_x: 0.0,
            kinds: vec![EdgeKind::Hadamard, EdgeKind::Hadamard, EdgeKind::Star],
            self_loops: false,
            ..Default::default()
        }
    }

    pub fn sample<R: Rng>(&self, rng: &mut R) -> Diagram {
        let mut d = Diagram::new();
        let n = self.spiders.max(1);
        let mut sp: Vec<V> = Vec::with_capacity(n);
        for _ in 0..n {
            let k = self.eighths[rng.random_range(0..self.eighths.len())];
            let p = Phase::new(k, 4);
            sp.push(if rng.random_bool(self.p_x) { d.add_x(p) } else { d.add_z(p) });
        }
        let pick_kind = |rng: &mut R| self.kinds[rng.random_range(0..self.kinds.len())];
        for _ in 0..self.edges {
            let a = sp[rng.random_range(0..n)];
            let mut b = sp[rng.random_range(0..n)];
            if a == b && !self.self_loops {
                if n == 1 {
                    continue;
                }
                while b == a {
                    b = sp[rng.random_range(0..n)];
                }
            }
            let k = pick_kind(rng);
            if !self.self_loops && d.connected(a, b) {
                continue;
            }
            d.add_edge(a, b, k);
        }
        for _ in 0..self.triangles {
            let i = sp[rng.random_range(0..n)];
            let o = sp[rng.random_range(0..n)];
            let t = d.add_vertex(VertexData::Triangle { input: i, output: o });
            d.add_edge(i, t, pick_kind(rng));
            d.add_edge(t, o, pick_kind(rng));
        }
        for _ in 0..self.boundaries {
            let v = sp[rng.random_range(0..n)];
            let b = d.add_boundary();
            d.add_edge(b, v, pick_kind(rng));
        }
        d
    }
}
