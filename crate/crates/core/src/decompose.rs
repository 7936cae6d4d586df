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

//! Stabiliser decompositions of star edges and T spiders.
//!
//! Each rule rewrites a diagram into a weighted sum of diagrams with fewer
//! stars or T spiders. `Hk` below is a Z(kπ) leaf on a Hadamard edge,
//! which equals `√2·[x = k]` on the spider it hangs off.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{Diagram, EdgeKind, V};
use crate::graphlike::force_zero;
use crate::phase::Phase;
use crate::scalar::ScalarExact;
use crate::simplify::{fuse_into, has_star, is_interior};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    D1,
    D2,
    D3,
    D4,
    D5,
    D6,
    T1,
    #[serde(rename = "BSS")]
    Bss,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Rule::D1 => "D1",
            Rule::D2 => "D2",
            Rule::D3 => "D3",
            Rule::D4 => "D4",
            Rule::D5 => "D5",
            Rule::D6 => "D6",
            Rule::T1 => "T1",
            Rule::Bss => "BSS",
        };
        f.write_str(s)
    }
}

impl Rule {
    pub fn is_star_rule(&self) -> bool {
        !matches!(self, Rule::T1 | Rule::Bss)
    }
}

/// Where a rule applies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Site {
    /// A spider with star edges (D6) or a single T spider (T1).
    Vertex(V),
    /// Pairwise disjoint star edges (D1, D2, D3).
    Stars(Vec<(V, V)>),
    /// Three degree-1 spiders with equal phase, each on a star edge to a
    /// distinct neighbour (D4, D5).
    Leaves(Vec<V>),
    /// Six T spiders (BSS).
    Ts(Vec<V>),
}

impl Site {
    /// Sorted vertex ids, for tie-breaking.
    pub fn key(&self) -> Vec<V> {
        let mut k: Vec<V> = match self {
            Site::Vertex(v) => vec![*v],
            Site::Stars(es) => es.iter().flat_map(|&(a, b)| [a, b]).collect(),
            Site::Leaves(vs) | Site::Ts(vs) => vs.clone(),
        };
        k.sort_unstable();
        k
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Candidate {
    pub rule: Rule,
    pub site: Site,
    /// Stars or T spiders removed.
    pub units: usize,
    pub terms: usize,
}

impl Candidate {
    fn new(rule: Rule, site: Site, units: usize, terms: usize) -> Self {
        Candidate { rule, site, units, terms }
    }

    /// log2(terms) per unit.
    pub fn exponent(&self) -> f64 {
        (self.terms as f64).log2() / self.units as f64
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecomposeError {
    #[error("rule {0} does not match at {1:?}")]
    SiteMismatch(Rule, Site),
    #[error("no decomposition applies but {0} T spiders and {1} star edges remain")]
    NoCandidate(usize, usize),
}

/// Which parts of the rule set may be used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleSet {
    /// D2 to D6; without it stars are split one at a time by D1.
    pub star_suite: bool,
    /// BSS; without it T spiders are split one at a time by T1.
    pub t_suite: bool,
}

impl Default for RuleSet {
    fn default() -> Self {
        RuleSet { star_suite: true, t_suite: true }
    }
}

pub fn star_edges(d: &Diagram) -> Vec<(V, V)> {
    d.edges().into_iter().filter(|e| e.2 == EdgeKind::Star && e.0 != e.1).map(|e| (e.0, e.1)).collect()
}

pub fn t_spiders(d: &Diagram) -> Vec<V> {
    d.vertices().filter(|&v| d.is_z(v) && d.phase(v).is_t()).collect()
}

fn star_leaf(d: &Diagram, v: V) -> Option<V> {
    if d.is_z(v) && d.degree(v) == 1 {
        let (w, k) = d.neighbors(v)[0];
        if k == EdgeKind::Star && w != v && d.is_z(w) {
            return Some(w);
        }
    }
    None
}

fn disjoint_stars(stars: &[(V, V)], n: usize) -> Option<Vec<(V, V)>> {
    let mut used: Vec<V> = Vec::new();
    let mut out = Vec::new();
    for &(a, b) in stars {
        if used.contains(&a) || used.contains(&b) {
            continue;
        }
        used.extend([a, b]);
        out.push((a, b));
        if out.len() == n {
            return Some(out);
        }
    }
    None
}

/// All applicable decompositions of a graph-like diagram.
pub fn find_candidates(d: &Diagram, rules: &RuleSet) -> Vec<Candidate> {
    let mut out = Vec::new();
    let stars = star_edges(d);
    if !stars.is_empty() {
        if rules.star_suite {
            for v in d.vertices() {
                if !d.is_z(v) || !is_interior(d, v) || !d.phase(v).on_grid() {
                    continue;
                }
                let m = d.degree_of_kind(v, EdgeKind::Star);
                if m >= 2 {
                    out.push(Candidate::new(Rule::D6, Site::Vertex(v), m, 2));
                }
            }
            for (rule, phases) in
                [(Rule::D4, vec![Phase::zero()]), (Rule::D5, vec![Phase::new(1, 2), Phase::new(3, 2)])]
            {
                for p in phases {
                    let mut leaves = Vec::new();
                    let mut targets = Vec::new();
                    for v in d.vertices() {
                        if d.phase(v) != p {
                            continue;
                        }
                        if let Some(w) = star_leaf(d, v) {
                            if !targets.contains(&w) && !leaves.contains(&w) && !targets.contains(&v) {
                                leaves.push(v);
                                targets.push(w);
                            }
                        }
                        if leaves.len() == 3 {
                            break;
                        }
                    }
                    if leaves.len() == 3 {
                        out.push(Candidate::new(rule, Site::Leaves(leaves), 3, 4));
                    }
                }
            }
            if let Some(s) = disjoint_stars(&stars, 3) {
                out.push(Candidate::new(Rule::D3, Site::Stars(s), 3, 5));
            }
            if let Some(s) = disjoint_stars(&stars, 2) {
                out.push(Candidate::new(Rule::D2, Site::Stars(s), 2, 3));
            }
        }
        for &e in &stars {
            out.push(Candidate::new(Rule::D1, Site::Stars(vec![e]), 1, 2));
        }
    }
    let ts = t_spiders(d);
    if rules.t_suite && ts.len() >= 6 {
        out.push(Candidate::new(Rule::Bss, Site::Ts(ts[..6].to_vec()), 6, 7));
    }
    for &v in &ts {
        out.push(Candidate::new(Rule::T1, Site::Vertex(v), 1, 2));
    }
    out
}

/// Lowest exponent; ties go to more units, then to the lowest site.
pub fn select_best(cands: &[Candidate]) -> Option<&Candidate> {
    cands.iter().min_by(|a, b| {
        a.exponent()
            .partial_cmp(&b.exponent())
            .expect("finite exponents")
            .then(b.units.cmp(&a.units))
            .then(a.site.key().cmp(&b.site.key()))
    })
}

fn h_leaf(d: &mut Diagram, v: V, one: bool) {
    let l = d.add_z(if one { Phase::pi() } else { Phase::zero() });
    d.add_edge(v, l, EdgeKind::Hadamard);
}

fn s(coeffs: [i64; 4], pow2: i32) -> ScalarExact {
    ScalarExact::new(coeffs, pow2)
}

fn check_site(d: &Diagram, rule: Rule, site: &Site) -> Result<(), DecomposeError> {
    let bad = || DecomposeError::SiteMismatch(rule, site.clone());
    let ok = match (rule, site) {
        (Rule::D1 | Rule::D2 | Rule::D3, Site::Stars(es)) => {
            let n = match rule {
                Rule::D1 => 1,
                Rule::D2 => 2,
                _ => 3,
            };
            let mut vs: Vec<V> = es.iter().flat_map(|&(a, b)| [a, b]).collect();
            vs.sort_unstable();
            vs.dedup();
            es.len() == n
                && vs.len() == 2 * n
                && es.iter().all(|&(a, b)| d.contains(a) && d.contains(b) && d.edge_kind(a, b) == Some(EdgeKind::Star))
        }
        (Rule::D4 | Rule::D5, Site::Leaves(ls)) => {
            let p = d.phase(ls[0]);
            let phase_ok =
                if rule == Rule::D4 { p.is_zero() } else { p == Phase::new(1, 2) || p == Phase::new(3, 2) };
            let targets: Vec<Option<V>> = ls.iter().map(|&l| star_leaf(d, l)).collect();
            ls.len() == 3
                && phase_ok
                && ls.iter().all(|&l| d.phase(l) == p)
                && targets.iter().all(|t| t.is_some())
                && targets[0] != targets[1]
                && targets[1] != targets[2]
                && targets[0] != targets[2]
                && ls.iter().all(|l| !targets.contains(&Some(*l)))
        }
        (Rule::D6, Site::Vertex(v)) => {
            d.is_z(*v) && is_interior(d, *v) && d.phase(*v).on_grid() && d.degree_of_kind(*v, EdgeKind::Star) >= 2
        }
        (Rule::T1, Site::Vertex(v)) => d.is_z(*v) && d.phase(*v).is_t(),
        (Rule::Bss, Site::Ts(vs)) => {
            let mut u = vs.clone();
            u.sort_unstable();
            u.dedup();
            u.len() == 6 && vs.iter().all(|&v| d.is_z(v) && d.phase(v).is_t())
        }
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(bad())
    }
}

/// Applies `rule` at `site`, returning the terms and their weights.
pub fn apply_rule(d: &Diagram, rule: Rule, site: &Site) -> Result<Vec<(Diagram, ScalarExact)>, DecomposeError> {
    check_site(d, rule, site)?;
    Ok(match (rule, site) {
        (Rule::D1 | Rule::D2 | Rule::D3, Site::Stars(es)) => split_stars(d, es),
        (Rule::D4 | Rule::D5, Site::Leaves(ls)) => star_leaves(d, ls),
        (Rule::D6, Site::Vertex(v)) => cut_star_hub(d, *v),
        (Rule::T1, Site::Vertex(v)) => split_t(d, *v),
        (Rule::Bss, Site::Ts(vs)) => bss(d, vs),
        _ => unreachable!(),
    })
}

/// Disjoint star edges: `Π S(aᵢ,bᵢ) = Π (1 - Xᵢ)` with `Xᵢ = aᵢbᵢ`.
/// Hadamard-edge terms give `1 - 2Xᵢ`; the all-removed term with `H1`
/// leaves gives `Π Xᵢ`.
fn split_stars(d: &Diagram, es: &[(V, V)]) -> Vec<(Diagram, ScalarExact)> {
    let with = |had: &[bool], leaves: bool| {
        let mut g = d.clone();
        for (&(a, b), &h) in es.iter().zip(had) {
            g.remove_edge(a, b, EdgeKind::Star);
            if h {
                g.add_edge(a, b, EdgeKind::Hadamard);
            }
            if leaves {
                h_leaf(&mut g, a, true);
                h_leaf(&mut g, b, true);
            }
        }
        g
    };
    match es.len() {
        1 => vec![(with(&[true], false), ScalarExact::sqrt2_pow(1)), (with(&[false], true), ScalarExact::sqrt2_pow(-2))],
        2 => vec![
            (with(&[true, false], false), ScalarExact::sqrt2_pow(-1)),
            (with(&[false, true], false), ScalarExact::sqrt2_pow(-1)),
            (with(&[false, false], true), ScalarExact::sqrt2_pow(-4)),
        ],
        3 => vec![
            (with(&[true, false, false], false), ScalarExact::sqrt2_pow(-3)),
            (with(&[false, true, false], false), ScalarExact::sqrt2_pow(-3)),
            (with(&[false, false, true], false), ScalarExact::sqrt2_pow(-3)),
            (with(&[true, true, true], false), ScalarExact::sqrt2_pow(-1)),
            (with(&[false, false, false], true), ScalarExact::sqrt2_pow(-6)),
        ],
        _ => unreachable!(),
    }
}

/// Three star leaves of phase α on targets of total weight w contribute
/// `t(w) = (1 + e^{iα})^{3-w}`. The four terms are a constant, `(-1)^w`,
/// `[w = 0]` and `[w = 3]`.
fn star_leaves(d: &Diagram, ls: &[V]) -> Vec<(Diagram, ScalarExact)> {
    let alpha = d.phase(ls[0]);
    let one_plus = ScalarExact::one_plus_phase(alpha).expect("grid phase");
    let t: Vec<ScalarExact> = (0..4)
        .map(|w| (0..3 - w).fold(ScalarExact::one(), |acc, _| &acc * &one_plus))
        .collect();
    let half = ScalarExact::sqrt2_pow(-2);
    let a = &(&t[1] + &t[2]) * &half;
    let dd = &(&t[2] - &t[1]) * &half;
    let b = &(&t[0] - &t[2]) * &ScalarExact::sqrt2_pow(-3);
    let c = &(&t[3] - &t[1]) * &ScalarExact::sqrt2_pow(-3);
    let targets: Vec<V> = ls.iter().map(|&l| star_leaf(d, l).unwrap()).collect();
    let base = {
        let mut g = d.clone();
        for &l in ls {
            g.remove_vertex(l);
        }
        g
    };
    let mut t2 = base.clone();
    for &x in &targets {
        t2.add_to_phase(x, Phase::pi());
    }
    let mut t3 = base.clone();
    let mut t4 = base.clone();
    for &x in &targets {
        h_leaf(&mut t3, x, false);
        h_leaf(&mut t4, x, true);
    }
    vec![(base, a), (t2, dd), (t3, b), (t4, c)]
}

/// Splits a spider on its two basis values.
fn cut_star_hub(d: &Diagram, v: V) -> Vec<(Diagram, ScalarExact)> {
    let alpha = ScalarExact::from_phase(d.phase(v)).expect("grid phase");
    let nbrs = d.neighbors(v).to_vec();
    let nh = nbrs.iter().filter(|e| e.1 == EdgeKind::Hadamard).count() as i32;
    let ns = nbrs.iter().filter(|e| e.1 == EdgeKind::Star).count() as i32;
    let mut t0 = d.clone();
    t0.remove_vertex(v);
    let mut t1 = d.clone();
    t1.remove_vertex(v);
    for &(w, k) in &nbrs {
        match k {
            EdgeKind::Hadamard => t1.add_to_phase(w, Phase::pi()),
            EdgeKind::Star => h_leaf(&mut t1, w, false),
            EdgeKind::Plain => unreachable!(),
        }
    }
    vec![(t0, ScalarExact::sqrt2_pow(-nh)), (t1, &alpha * &ScalarExact::sqrt2_pow(-nh - ns))]
}

/// `e^{iπx/4} = [x = 0] + ω[x = 1]`.
fn split_t(d: &Diagram, v: V) -> Vec<(Diagram, ScalarExact)> {
    let mut t0 = d.clone();
    t0.add_to_phase(v, Phase::new(-1, 4));
    let mut t1 = t0.clone();
    h_leaf(&mut t0, v, false);
    h_leaf(&mut t1, v, true);
    vec![(t0, ScalarExact::sqrt2_pow(-1)), (t1, &ScalarExact::omega_pow(1) * &ScalarExact::sqrt2_pow(-1))]
}

/// Six T spiders into seven stabiliser terms.
fn bss(d: &Diagram, vs: &[V]) -> Vec<(Diagram, ScalarExact)> {
    let shifted = |q: Phase| {
        let mut g = d.clone();
        for &v in vs {
            g.add_to_phase(v, q);
        }
        g
    };
    let b60 = shifted(Phase::new(-1, 4));
    let b66 = shifted(Phase::new(3, 4));
    let star6 = |p: Phase| {
        let mut g = shifted(Phase::new(1, 4));
        let w = g.add_z(p);
        for &v in vs {
            g.add_edge(v, w, EdgeKind::Hadamard);
        }
        g
    };
    let e6 = star6(Phase::pi());
    let o6 = star6(Phase::zero());
    let mut k6 = shifted(Phase::new(-1, 4));
    for &v in &vs[1..] {
        if k6.contains(vs[0]) {
            fuse_into(&mut k6, vs[0], v);
        } else {
            // a star loop pinned the merged spider to 0
            force_zero(&mut k6, v);
        }
    }
    if k6.contains(vs[0]) {
        k6.add_to_phase(vs[0], Phase::new(-1, 2));
    }
    let phi = |order: [usize; 6]| {
        let v: Vec<V> = order.iter().map(|&i| vs[i]).collect();
        let mut g = d.clone();
        let mut ws = Vec::new();
        for &x in &v[..5] {
            let w = g.add_z(Phase::zero());
            g.add_edge(x, w, EdgeKind::Hadamard);
            g.add_edge(w, v[5], EdgeKind::Hadamard);
            g.add_to_phase(x, Phase::new(-1, 4));
            ws.push(w);
        }
        g.add_to_phase(v[5], Phase::new(3, 4));
        for (i, j) in [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)] {
            g.add_edge(ws[i], ws[j], EdgeKind::Hadamard);
        }
        g
    };
    let phi1 = phi([0, 1, 2, 3, 4, 5]);
    let phi2 = phi([0, 1, 3, 4, 5, 2]);
    vec![
        (b60, s([-1, 0, 1, 1], -4)),
        (b66, s([-1, 0, 1, -1], -4)),
        (e6, s([0, -1, 0, 0], 2)),
        (o6, s([-1, 0, -1, 0], 2)),
        (k6, s([1, 0, 0, 0], 2)),
        (phi1, s([1, 0, 1, 0], 6)),
        (phi2, s([1, 0, 1, 0], 6)),
    ]
}

/// True when some vertex still carries a star edge.
pub fn any_star(d: &Diagram) -> bool {
    d.vertices().any(|v| has_star(d, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::{interpret_exact, DenseConfig};

    fn value(d: &Diagram) -> ScalarExact {
        interpret_exact(d, &DenseConfig::unlimited()).unwrap()
    }

    fn check(d: &Diagram, rule: Rule, site: Site) {
        let terms = apply_rule(d, rule, &site).unwrap();
        let sum: ScalarExact = terms.iter().map(|(g, w)| w * &value(g)).sum();
        assert_eq!(sum, value(d), "{rule} at {site:?}");
    }

    fn host() -> (Diagram, Vec<V>) {
        let mut d = Diagram::new();
        let ph = [1, 3, 2, 0, 5, 7, 6, 1, 4, 3];
        let vs: Vec<V> = ph.iter().map(|&k| d.add_z(Phase::new(k, 4))).collect();
        for i in 0..vs.len() {
            d.add_edge(vs[i], vs[(i + 3) % vs.len()], EdgeKind::Hadamard);
        }
        (d, vs)
    }

    #[test]
    fn star_splits() {
        let (mut d, v) = host();
        d.add_edge(v[0], v[1], EdgeKind::Star);
        d.add_edge(v[2], v[4], EdgeKind::Star);
        d.add_edge(v[5], v[7], EdgeKind::Star);
        check(&d, Rule::D1, Site::Stars(vec![(v[0], v[1])]));
        check(&d, Rule::D2, Site::Stars(vec![(v[0], v[1]), (v[2], v[4])]));
        check(&d, Rule::D3, Site::Stars(vec![(v[0], v[1]), (v[2], v[4]), (v[5], v[7])]));
    }

    #[test]
    fn hub_cut() {
        let mut seen = Vec::new();
        for k in 0..8 {
            for m in [2, 3] {
                let (mut d, v) = host();
                d.set_phase(v[0], Phase::new(k, 4));
                for &t in &[v[1], v[4], v[6]][..m] {
                    d.add_edge(v[0], t, EdgeKind::Star);
                }
                check(&d, Rule::D6, Site::Vertex(v[0]));
                seen.push(value(&d));
            }
        }
        seen.dedup();
        assert!(seen.len() > 2, "hub phase must matter");
    }

    #[test]
    fn leaf_triples_both_signs() {
        for (rule, p) in [(Rule::D4, Phase::zero()), (Rule::D5, Phase::new(1, 2)), (Rule::D5, Phase::new(3, 2))] {
            let (mut d, v) = host();
            let ls: Vec<V> = [v[1], v[4], v[6]]
                .iter()
                .map(|&t| {
                    let l = d.add_z(p);
                    d.add_edge(l, t, EdgeKind::Star);
                    l
                })
                .collect();
            check(&d, rule, Site::Leaves(ls));
        }
    }

    #[test]
    fn t_splits() {
        let (d, v) = host();
        check(&d, Rule::T1, Site::Vertex(v[0]));
        let ts = t_spiders(&d);
        assert!(ts.len() >= 6);
        check(&d, Rule::Bss, Site::Ts(ts[..6].to_vec()));
    }

    #[test]
    fn selection() {
        let d1 = Candidate::new(Rule::D1, Site::Stars(vec![(0, 1)]), 1, 2);
        let d3 = Candidate::new(Rule::D3, Site::Stars(vec![(0, 1), (2, 3), (4, 5)]), 3, 5);
        let d6 = Candidate::new(Rule::D6, Site::Vertex(9), 2, 2);
        let d4 = Candidate::new(Rule::D4, Site::Leaves(vec![6, 7, 8]), 3, 4);
        assert_eq!(select_best(&[d1.clone(), d3.clone()]).unwrap().rule, Rule::D3);
        assert_eq!(select_best(&[d3, d6.clone()]).unwrap().rule, Rule::D6);
        assert_eq!(select_best(&[d4, d6]).unwrap().rule, Rule::D6);
        assert!(select_best(&[]).is_none());
        assert!((Candidate::new(Rule::Bss, Site::Ts(vec![]), 6, 7).exponent() - 0.4679).abs() < 1e-3);
    }

    #[test]
    fn every_candidate_on_random_diagrams() {
        use crate::graphlike::to_graph_like;
        use crate::random::RandomDiagram;
        use crate::simplify::full_simp;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let gens = [
            RandomDiagram { spiders: 9, edges: 14, triangles: 2, boundaries: 0, ..Default::default() },
            RandomDiagram { kinds: vec![EdgeKind::Star, EdgeKind::Hadamard], ..RandomDiagram::graph_like(12, 24) },
        ];
        for i in 0..400 {
            let mut d = gens[i % 2].sample(&mut rng);
            to_graph_like(&mut d);
            full_simp(&mut d);
            for c in find_candidates(&d, &RuleSet::default()) {
                check(&d, c.rule, c.site);
            }
        }
    }

    #[test]
    fn mismatch_is_reported() {
        let (d, v) = host();
        assert!(apply_rule(&d, Rule::D1, &Site::Stars(vec![(v[0], v[1])])).is_err());
    }
}
