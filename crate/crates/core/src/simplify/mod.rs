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

//! Simplification of graph-like diagrams.
//!
//! All rules preserve the exact value of the diagram, scalar included.
//! `full_simp` runs them round-robin, cheapest first, until nothing fires.

pub mod clifford;
pub mod gadget;
pub mod rare;
pub mod star;

use crate::diagram::{Diagram, EdgeKind, V};

pub use clifford::{fuse_into, id_simp, local_complement, local_complement_simp, pivot, pivot_simp, toggle_cz};
pub use gadget::{fuse_gadgets, gadgetize_simp, normalize_hubs, reduce_tcount};
pub use star::{copy_simp, remove_isolated, star_pi_star_simp, star_state_simp};

/// No boundary neighbours.
pub fn is_interior(d: &Diagram, v: V) -> bool {
    d.neighbors(v).iter().all(|&(w, _)| d.is_z(w))
}

pub fn has_star(d: &Diagram, v: V) -> bool {
    d.neighbors(v).iter().any(|&(_, k)| k == EdgeKind::Star)
}

/// The non-Clifford leaf of a gadget hub `h`, if `h` is one.
pub fn gadget_leaf(d: &Diagram, h: V) -> Option<V> {
    if !d.is_z(h) || !d.phase(h).is_pauli() || d.degree(h) < 2 {
        return None;
    }
    let mut leaf = None;
    for &(w, k) in d.neighbors(h) {
        if k != EdgeKind::Hadamard || !d.is_z(w) {
            return None;
        }
        if d.degree(w) == 1 && !d.phase(w).is_clifford() {
            if leaf.is_some() {
                return None;
            }
            leaf = Some(w);
        }
    }
    leaf
}

pub fn is_hub(d: &Diagram, v: V) -> bool {
    gadget_leaf(d, v).is_some()
}

/// Lexicographic progress measure: every rule application lowers it.
pub fn measure(d: &Diagram) -> (usize, usize, usize, usize) {
    let mut nonleaf = 0;
    let mut pi_hubs = 0;
    for v in d.vertices() {
        if d.is_z(v) && d.degree(v) != 1 && !d.phase(v).is_clifford() {
            nonleaf += 1;
        }
        if d.phase(v) == crate::phase::Phase::pi() && is_hub(d, v) {
            pi_hubs += 1;
        }
    }
    (d.star_count(), d.num_vertices(), nonleaf, pi_hubs)
}

#[derive(Clone, Copy, Debug)]
pub struct SimpConfig {
    /// Run phase-gadget T-count reduction.
    pub tcount: bool,
}

impl Default for SimpConfig {
    fn default() -> Self {
        SimpConfig { tcount: true }
    }
}

/// Round-robin simplification to a global fixpoint.
pub fn full_simp(d: &mut Diagram) {
    full_simp_with(d, &SimpConfig::default());
}

pub fn full_simp_with(d: &mut Diagram, cfg: &SimpConfig) {
    let mut last = measure(d);
    loop {
        let mut c = copy_simp(d);
        c |= star_state_simp(d);
        c |= star_pi_star_simp(d);
        c |= remove_isolated(d);
        c |= id_simp(d);
        c |= local_complement_simp(d);
        c |= pivot_simp(d);
        if cfg.tcount {
            c |= reduce_tcount(d);
        }
        if !c {
            break;
        }
        let m = measure(d);
        debug_assert!(m < last, "simplification failed to make progress: {last:?} -> {m:?}");
        last = m;
    }
}

/// Clifford-only rules, used to finish terminal terms.
pub fn clifford_simp(d: &mut Diagram) {
    full_simp_with(d, &SimpConfig { tcount: false });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::{interpret_exact, DenseConfig};
    use crate::graphlike::{is_graph_like, to_graph_like};
    use crate::phase::Phase;
    use crate::random::RandomDiagram;
    use crate::scalar::ScalarExact;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn value(d: &Diagram) -> ScalarExact {
        interpret_exact(d, &DenseConfig::unlimited()).unwrap()
    }

    fn random_cases(n: usize, seed: u64) -> Vec<Diagram> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|i| {
                let mut g = RandomDiagram::graph_like(4 + i % 8, 6 + i % 14).sample(&mut rng);
                to_graph_like(&mut g);
                g
            })
            .collect()
    }

    fn check_rule(name: &str, f: fn(&mut Diagram) -> bool) {
        let mut fired = 0;
        for (i, d) in random_cases(300, 7).into_iter().enumerate() {
            let mut e = d.clone();
            if f(&mut e) {
                fired += 1;
            }
            assert_eq!(value(&d), value(&e), "{name} broke case {i}");
            assert!(is_graph_like(&e), "{name} left a non graph-like diagram in case {i}");
        }
        assert!(fired > 0, "{name} never fired");
    }

    #[test]
    fn rules_preserve_value() {
        check_rule("copy", copy_simp);
        check_rule("lc", local_complement_simp);
        check_rule("pivot", pivot_simp);
        check_rule("id", id_simp);
        check_rule("isolated", remove_isolated);
        check_rule("tcount", reduce_tcount);
        check_rule("full", |d| {
            full_simp(d);
            true
        });
    }

    #[test]
    fn star_rules_preserve_value() {
        // build the patterns directly since random graphs rarely contain them
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for case in 0..60 {
            let mut d = random_cases(1, case)[0].clone();
            let vs = d.vertex_list();
            let u = vs[0];
            let w = vs[vs.len() - 1];
            if u == w {
                continue;
            }
            let p = d.add_z(Phase::pi());
            if case % 2 == 0 {
                d.add_edge(p, u, EdgeKind::Star);
                d.add_edge(p, w, EdgeKind::Star);
            } else {
                d.add_edge(p, u, EdgeKind::Star);
            }
            let _ = &mut rng;
            let mut e = d.clone();
            let fired = star_state_simp(&mut e) | star_pi_star_simp(&mut e);
            assert!(fired);
            assert_eq!(value(&d), value(&e));
        }
    }

    #[test]
    fn clifford_reduces_to_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for i in 0..200 {
            let mut shape = RandomDiagram::graph_like(3 + i % 10, 4 + i % 20);
            shape.eighths = vec![0, 2, 4, 6];
            shape.kinds = vec![EdgeKind::Hadamard];
            let mut d = shape.sample(&mut rng);
            to_graph_like(&mut d);
            let want = value(&d);
            full_simp(&mut d);
            assert_eq!(d.num_vertices(), 0, "case {i}: {:?}", d.edges());
            assert_eq!(*d.scalar(), want);
        }
    }

    #[test]
    fn local_complement_example() {
        let mut d = Diagram::new();
        let v = d.add_z(Phase::new(1, 2));
        let a = d.add_z(Phase::zero());
        let b = d.add_z(Phase::zero());
        let x = d.add_z(Phase::new(1, 4));
        d.add_edge(v, a, EdgeKind::Hadamard);
        d.add_edge(v, b, EdgeKind::Hadamard);
        d.add_edge(a, x, EdgeKind::Star);
        d.add_edge(b, x, EdgeKind::Hadamard);
        let want = value(&d);
        local_complement(&mut d, v);
        assert_eq!(d.edge_kind(a, b), Some(EdgeKind::Hadamard));
        assert_eq!(d.phase(a), Phase::new(3, 2));
        assert_eq!(value(&d), want);
    }

    #[test]
    fn gadget_fusion_example() {
        let mut d = Diagram::new();
        let t: Vec<V> = (0..3).map(|_| d.add_z(Phase::new(1, 2))).collect();
        d.add_edge(t[0], t[1], EdgeKind::Star);
        for g in [Phase::new(1, 4), Phase::new(3, 4)] {
            let h = d.add_z(Phase::zero());
            let l = d.add_z(g);
            d.add_edge(h, l, EdgeKind::Hadamard);
            for &x in &t {
                d.add_edge(h, x, EdgeKind::Hadamard);
            }
        }
        let want = value(&d);
        assert!(fuse_gadgets(&mut d));
        assert_eq!(d.t_count(), 0);
        assert_eq!(value(&d), want);
    }

    #[test]
    fn copy_pi_with_stars() {
        let mut d = Diagram::new();
        let l = d.add_z(Phase::pi());
        let v = d.add_z(Phase::new(1, 4));
        let a = d.add_z(Phase::new(3, 4));
        let b = d.add_z(Phase::new(1, 4));
        let c = d.add_z(Phase::new(1, 2));
        d.add_edge(l, v, EdgeKind::Hadamard);
        d.add_edge(v, a, EdgeKind::Star);
        d.add_edge(v, b, EdgeKind::Star);
        d.add_edge(v, c, EdgeKind::Hadamard);
        d.add_edge(a, c, EdgeKind::Hadamard);
        let want = value(&d);
        assert!(copy_simp(&mut d));
        assert_eq!(d.star_count(), 0);
        assert_eq!(value(&d), want);
    }

    #[test]
    fn rare_patterns_hold() {
        for star in [false, true] {
            let mut d = Diagram::new();
            let a = d.add_z(Phase::new(1, 4));
            let b = d.add_z(Phase::new(3, 2));
            let c = d.add_z(Phase::new(1, 2));
            let p = d.add_z(Phase::pi());
            let k = if star { EdgeKind::Star } else { EdgeKind::Hadamard };
            d.add_edge(p, a, k);
            d.add_edge(p, b, k);
            d.add_edge(a, b, EdgeKind::Star);
            d.add_edge(a, c, EdgeKind::Hadamard);
            d.add_edge(b, c, EdgeKind::Star);
            let want = value(&d);
            let fired = if star { rare::star_triangle(&mut d, p) } else { rare::hadamard_triangle(&mut d, p) };
            assert!(fired);
            assert_eq!(value(&d), want);
        }
    }
}
