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

//! Recursive contraction: simplify, decompose, recurse, sum.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decompose::{apply_rule, find_candidates, select_best, DecomposeError, Rule, RuleSet};
use crate::dense::{interpret_exact, DenseConfig, DenseError};
use crate::diagram::Diagram;
use crate::graphlike::to_graph_like;
use crate::scalar::{ScalarError, ScalarExact};
use crate::simplify::{clifford_simp, full_simp_with, SimpConfig};

/// Exponent per T spider of the six-T decomposition.
pub const ALPHA: f64 = 0.468;
/// Exponent per star edge of the three-star decomposition.
pub const BETA: f64 = 0.774;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("timeout after {0:?}")]
    Timeout(Duration),
    #[error("diagram has {0} boundaries, expected none")]
    NotScalar(usize),
    #[error("phase of vertex {0} is not a multiple of pi/4")]
    OffGrid(usize),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Dense(#[from] DenseError),
    #[error(transparent)]
    Decompose(#[from] DecomposeError),
    #[error("could not build worker pool: {0}")]
    Pool(String),
}

#[derive(Clone, Debug)]
pub struct EngineConfig {
    pub workers: usize,
    pub timeout: Option<Duration>,
    pub rules: RuleSet,
    pub simp: SimpConfig,
    /// Contract a diagram densely once only single-unit splits remain.
    pub remainder: bool,
    /// Largest intermediate tensor rank for such a dense contraction.
    pub remainder_rank: usize,
    /// Terminal diagrams bigger than this after simplification are logged.
    pub fallback_vertices: usize,
    /// Branches below this depth run in parallel.
    pub parallel_depth: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            workers: 1,
            timeout: None,
            rules: RuleSet::default(),
            simp: SimpConfig::default(),
            remainder: true,
            remainder_rank: 16,
            fallback_vertices: 20,
            parallel_depth: 16,
        }
    }
}

mod secs {
    use serde::{Deserialize, Deserializer, Serializer};
    use std::time::Duration;

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        let x = f64::deserialize(d)?;
        Duration::try_from_secs_f64(x).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ContractionStats {
    pub terminal_terms: u64,
    pub decomposition_trace: BTreeMap<Rule, u64>,
    pub max_depth: usize,
    #[serde(with = "secs")]
    pub wall_time: Duration,
    pub initial_t_count: usize,
    pub initial_star_count: usize,
    /// Terminal Clifford diagrams that simplification could not empty.
    pub dense_fallbacks: u64,
    /// Non-Clifford remainders contracted densely.
    pub dense_remainders: u64,
}

impl ContractionStats {
    /// log2 of the guaranteed term bound.
    pub fn bound_exponent(&self) -> f64 {
        ALPHA * self.initial_t_count as f64 + BETA * self.initial_star_count as f64
    }

    pub fn within_bound(&self) -> bool {
        (self.terminal_terms as f64).log2() <= self.bound_exponent() + 1e-9
    }

    /// Equality ignoring wall time.
    pub fn same_work(&self, o: &ContractionStats) -> bool {
        ContractionStats { wall_time: Duration::ZERO, ..self.clone() }
            == ContractionStats { wall_time: Duration::ZERO, ..o.clone() }
    }
}

struct Partial {
    value: ScalarExact,
    terms: u64,
    trace: BTreeMap<Rule, u64>,
    depth: usize,
    fallbacks: u64,
    remainders: u64,
}

impl Partial {
    fn leaf(value: ScalarExact, depth: usize) -> Self {
        Partial { value, terms: 1, trace: BTreeMap::new(), depth, fallbacks: 0, remainders: 0 }
    }

    fn empty() -> Self {
        Partial { value: ScalarExact::zero(), terms: 0, trace: BTreeMap::new(), depth: 0, fallbacks: 0, remainders: 0 }
    }

    fn merge(mut self, o: Partial) -> Result<Self, ScalarError> {
        self.value = self.value.try_add(&o.value)?;
        self.terms += o.terms;
        for (r, n) in o.trace {
            *self.trace.entry(r).or_default() += n;
        }
        self.depth = self.depth.max(o.depth);
        self.fallbacks += o.fallbacks;
        self.remainders += o.remainders;
        Ok(self)
    }
}

struct Run<'a> {
    cfg: &'a EngineConfig,
    start: Instant,
    deadline: Option<Instant>,
}

fn terminal(d: &mut Diagram, limit: usize) -> Result<(ScalarExact, bool), EngineError> {
    clifford_simp(d);
    if d.num_vertices() == 0 {
        return Ok((d.scalar().clone(), false));
    }
    if d.num_vertices() > limit {
        log::warn!("terminal diagram kept {} vertices after simplification; using dense contraction", d.num_vertices());
    }
    Ok((interpret_exact(d, &DenseConfig::unlimited())?, true))
}

/// Value of a diagram without T spiders or star edges.
pub fn evaluate_terminal(d: &Diagram) -> Result<ScalarExact, EngineError> {
    let mut g = d.clone();
    Ok(terminal(&mut g, EngineConfig::default().fallback_vertices)?.0)
}

impl Run<'_> {
    fn check_time(&self) -> Result<(), EngineError> {
        match self.deadline {
            Some(t) if Instant::now() > t => Err(EngineError::Timeout(self.start.elapsed())),
            _ => Ok(()),
        }
    }

    /// `d` is simplified on entry.
    fn expand(&self, mut d: Diagram, depth: usize) -> Result<Partial, EngineError> {
        self.check_time()?;
        if d.scalar().is_zero() {
            return Ok(Partial::leaf(ScalarExact::zero(), depth));
        }
        let cands = find_candidates(&d, &self.cfg.rules);
        let Some(best) = select_best(&cands) else {
            let (v, fell_back) = terminal(&mut d, self.cfg.fallback_vertices)?;
            let mut p = Partial::leaf(v, depth);
            p.fallbacks = fell_back as u64;
            return Ok(p);
        };
        if self.cfg.remainder && matches!(best.rule, Rule::D1 | Rule::D2 | Rule::T1) {
            let dc = DenseConfig { max_vertices: usize::MAX, max_rank: self.cfg.remainder_rank };
            match interpret_exact(&d, &dc) {
                Ok(v) => {
                    let mut p = Partial::leaf(v, depth);
                    p.remainders = 1;
                    return Ok(p);
                }
                Err(DenseError::RankCap(..)) => {}
                Err(e) => return Err(e.into()),
            }
        }
        let terms = apply_rule(&d, best.rule, &best.site)?;
        drop(d);
        let child = |(mut g, w): (Diagram, ScalarExact)| -> Result<Partial, EngineError> {
            let s = g.scalar().try_mul(&w)?;
            g.set_scalar(s);
            full_simp_with(&mut g, &self.cfg.simp);
            self.expand(g, depth + 1)
        };
        let parts: Vec<Result<Partial, EngineError>> =
            if self.cfg.workers > 1 && depth < self.cfg.parallel_depth {
                terms.into_par_iter().map(child).collect()
            } else {
                terms.into_iter().map(child).collect()
            };
        let mut acc = Partial::empty();
        for p in parts {
            acc = acc.merge(p?)?;
        }
        *acc.trace.entry(best.rule).or_default() += 1;
        Ok(acc)
    }
}

/// Prepares a diagram for contraction: graph-like form and a first simplification.
pub fn prepare(d: &Diagram, simp: &SimpConfig) -> Result<Diagram, EngineError> {
    if !d.boundaries().is_empty() {
        return Err(EngineError::NotScalar(d.boundaries().len()));
    }
    let mut g = d.clone();
    to_graph_like(&mut g);
    if let Some(v) = g.vertices().find(|&v| !g.phase(v).on_grid()) {
        return Err(EngineError::OffGrid(v));
    }
    full_simp_with(&mut g, simp);
    Ok(g)
}

/// Exact value of a scalar diagram.
pub fn contract(d: &Diagram, cfg: &EngineConfig) -> Result<(ScalarExact, ContractionStats), EngineError> {
    let start = Instant::now();
    let run = Run { cfg, start, deadline: cfg.timeout.map(|t| start + t) };
    let g = prepare(d, &cfg.simp)?;
    let (t0, m0) = g.counts();
    let p = if cfg.workers > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .map_err(|e| EngineError::Pool(e.to_string()))?;
        pool.install(|| run.expand(g, 0))?
    } else {
        run.expand(g, 0)?
    };
    let stats = ContractionStats {
        terminal_terms: p.terms,
        decomposition_trace: p.trace,
        max_depth: p.depth,
        wall_time: start.elapsed(),
        initial_t_count: t0,
        initial_star_count: m0,
        dense_fallbacks: p.fallbacks,
        dense_remainders: p.remainders,
    };
    Ok((p.value, stats))
}

/// [`contract`] on `workers` threads.
pub fn contract_parallel(
    d: &Diagram,
    cfg: &EngineConfig,
    workers: usize,
) -> Result<(ScalarExact, ContractionStats), EngineError> {
    contract(d, &EngineConfig { workers, ..cfg.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::EdgeKind;
    use crate::phase::Phase;
    use crate::random::RandomDiagram;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn oracle(d: &Diagram) -> ScalarExact {
        interpret_exact(d, &DenseConfig::unlimited()).unwrap()
    }

    #[test]
    fn empty_diagram() {
        let mut d = Diagram::new();
        d.set_scalar(ScalarExact::new([3, 1, 0, 0], -1));
        let (v, s) = contract(&d, &EngineConfig::default()).unwrap();
        assert_eq!(v, *d.scalar());
        assert_eq!(s.terminal_terms, 1);
    }

    #[test]
    fn lone_spider_terminal() {
        let mut d = Diagram::new();
        d.add_z(Phase::zero());
        assert_eq!(evaluate_terminal(&d).unwrap(), ScalarExact::from_int(2));
    }

    #[test]
    fn random_diagrams_match_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let gen = RandomDiagram { spiders: 9, edges: 14, triangles: 2, boundaries: 0, ..Default::default() };
        for _ in 0..150 {
            let d = gen.sample(&mut rng);
            for remainder in [true, false] {
                let cfg = EngineConfig { remainder, ..Default::default() };
                let (v, s) = contract(&d, &cfg).unwrap();
                assert_eq!(v, oracle(&d));
                assert!(!remainder || s.within_bound(), "{s:?}");
            }
        }
    }

    #[test]
    fn workers_do_not_change_result() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let gen = RandomDiagram::graph_like(14, 30);
        for _ in 0..20 {
            let d = gen.sample(&mut rng);
            let cfg = EngineConfig { remainder: false, ..Default::default() };
            let a = contract_parallel(&d, &cfg, 1).unwrap();
            let b = contract_parallel(&d, &cfg, 4).unwrap();
            assert_eq!(a.0, b.0);
            assert!(a.1.same_work(&b.1));
        }
    }

    #[test]
    fn star_only_modes_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let gen = RandomDiagram { kinds: vec![EdgeKind::Star, EdgeKind::Hadamard], ..RandomDiagram::graph_like(12, 24) };
        for _ in 0..30 {
            let d = gen.sample(&mut rng);
            let full = contract(&d, &EngineConfig { remainder: false, ..Default::default() }).unwrap();
            let base = EngineConfig {
                remainder: false,
                rules: RuleSet { star_suite: false, t_suite: false },
                ..Default::default()
            };
            assert_eq!(full.0, contract(&d, &base).unwrap().0);
        }
    }

    #[test]
    fn boundaries_rejected() {
        let mut d = Diagram::new();
        let b = d.add_boundary();
        let z = d.add_z(Phase::zero());
        d.add_edge(b, z, EdgeKind::Plain);
        d.set_boundaries(vec![b]);
        assert!(matches!(contract(&d, &EngineConfig::default()), Err(EngineError::NotScalar(1))));
    }

    #[test]
    fn stats_serialize() {
        let mut d = Diagram::new();
        let a = d.add_z(Phase::new(1, 4));
        let b = d.add_z(Phase::zero());
        d.add_edge(a, b, EdgeKind::Star);
        let (_, s) = contract(&d, &EngineConfig::default()).unwrap();
        let j = serde_json::to_string(&s).unwrap();
        assert!(j.contains("terminal_terms") && j.contains("wall_time"));
        let back: ContractionStats = serde_json::from_str(&j).unwrap();
        assert!(back.same_work(&s));
    }
}
