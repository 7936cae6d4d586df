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

//! Two further star-removing patterns. They are sound but seldom match
//! during contraction, so `full_simp` does not search for them.

use crate::diagram::{Diagram, EdgeKind, V};
use crate::phase::Phase;

fn pi_pair(d: &Diagram, p: V, k: EdgeKind) -> Option<(V, V)> {
    if !d.is_z(p) || d.degree(p) != 2 || d.phase(p) != Phase::pi() {
        return None;
    }
    let [(a, ka), (b, kb)] = [d.neighbors(p)[0], d.neighbors(p)[1]];
    if ka != k || kb != k || a == b || d.edge_kind(a, b) != Some(EdgeKind::Star) {
        return None;
    }
    Some((a, b))
}

/// π spider Hadamard-linked to both ends of a star edge: the star becomes
/// a Hadamard edge, times √2.
pub fn hadamard_triangle(d: &mut Diagram, p: V) -> bool {
    let Some((a, b)) = pi_pair(d, p, EdgeKind::Hadamard) else { return false };
    d.remove_edge(a, b, EdgeKind::Star);
    d.add_edge(a, b, EdgeKind::Hadamard);
    d.mul_sqrt2_pow(1);
    true
}

/// A triangle of star edges through a degree-2 π spider turns into
/// Hadamard edges, times √2.
pub fn star_triangle(d: &mut Diagram, p: V) -> bool {
    let Some((a, b)) = pi_pair(d, p, EdgeKind::Star) else { return false };
    for (x, y) in [(a, b), (p, a), (p, b)] {
        d.remove_edge(x, y, EdgeKind::Star);
        d.add_edge(x, y, EdgeKind::Hadamard);
    }
    d.mul_sqrt2_pow(1);
    true
}
