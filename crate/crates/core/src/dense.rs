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

//! Dense interpretation of small diagrams by variable elimination.
//!
//! Every spider, triangle end and boundary is a binary variable. A Z spider
//! is one variable with the unary factor `(1, e^{iα})`. An X spider of
//! degree k is a variable `y` with the same unary factor plus one variable
//! per leg, tied to `y` by `(-1)^{y·ℓ}`, times `2^{-k/2}`. Plain edges
//! identify variables, Hadamard edges contribute `(-1)^{xy}/√2` and star
//! edges `1 - xy`.
//!
//! Tensors are indexed with the first boundary as the most significant bit.

use std::collections::{BTreeMap, HashMap};

use num_complex::Complex64;
use thiserror::Error;

use crate::diagram::{Diagram, EdgeKind, VertexData, V};
use crate::phase::Phase;
use crate::scalar::ScalarExact;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DenseError {
    #[error("diagram has {0} vertices, more than the limit {1}")]
    TooManyVertices(usize, usize),
    #[error("intermediate tensor of rank {0} exceeds the cap {1}")]
    RankCap(usize, usize),
    #[error("phase {0} cannot be represented exactly")]
    OffGrid(Phase),
    #[error("shape mismatch: {0:?} vs {1:?}")]
    ShapeMismatch(Vec<usize>, Vec<usize>),
    #[error("diagram is not a scalar diagram")]
    NotScalar,
}

/// Values the contraction can run over.
pub trait DenseScalar: Clone + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn phase(p: Phase) -> Option<Self>;
    fn sqrt2_pow(k: i32) -> Self;
    fn from_exact(s: &ScalarExact) -> Self;
    fn is_zero(&self) -> bool;
}

impl DenseScalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn phase(p: Phase) -> Option<Self> {
        match p.eighths() {
            // exact table keeps grid phases free of trig rounding
            Some(k) => Some(ScalarExact::omega_pow(k as i64).to_complex()),
            None => Some(Complex64::from_polar(1.0, p.to_radians())),
        }
    }
    fn sqrt2_pow(k: i32) -> Self {
        Complex64::new(2f64.powf(k as f64 / 2.0), 0.0)
    }
    fn from_exact(s: &ScalarExact) -> Self {
        s.to_complex()
    }
    fn is_zero(&self) -> bool {
        *self == Complex64::new(0.0, 0.0)
    }
}

impl DenseScalar for ScalarExact {
    fn zero() -> Self {
        ScalarExact::zero()
    }
    fn one() -> Self {
        ScalarExact::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn phase(p: Phase) -> Option<Self> {
        ScalarExact::from_phase(p).ok()
    }
    fn sqrt2_pow(k: i32) -> Self {
        ScalarExact::sqrt2_pow(k)
    }
    fn from_exact(s: &ScalarExact) -> Self {
        s.clone()
    }
    fn is_zero(&self) -> bool {
        ScalarExact::is_zero(self)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct DenseConfig {
    /// Refuse diagrams with more vertices than this.
    pub max_vertices: usize,
    /// Largest intermediate tensor rank allowed.
    pub max_rank: usize,
}

impl Default for DenseConfig {
    fn default() -> Self {
        DenseConfig { max_vertices: 24, max_rank: 22 }
    }
}

impl DenseConfig {
    pub fn unlimited() -> Self {
        DenseConfig { max_vertices: usize::MAX, max_rank: 22 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DenseTensor {
    pub shape: Vec<usize>,
    pub entries: Vec<Complex64>,
}

impl DenseTensor {
    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    /// The single entry of a rank-0 tensor.
    pub fn scalar(&self) -> Option<Complex64> {
        if self.shape.is_empty() {
            Some(self.entries[0])
        } else {
            None
        }
    }

    pub fn scale(&self, c: Complex64) -> DenseTensor {
        DenseTensor { shape: self.shape.clone(), entries: self.entries.iter().map(|x| x * c).collect() }
    }

    /// Reads a tensor whose boundaries are `n` inputs followed by `m`
    /// outputs as the `2^m × 2^n` matrix, row-major.
    pub fn as_matrix(&self, n_in: usize) -> Vec<Vec<Complex64>> {
        let n_out = self.rank() - n_in;
        let mut m = vec![vec![Complex64::new(0.0, 0.0); 1 << n_in]; 1 << n_out];
        for (idx, x) in self.entries.iter().enumerate() {
            let i = idx >> n_out;
            let o = idx & ((1 << n_out) - 1);
            m[o][i] = *x;
        }
        m
    }
}

/// Max-norm comparison.
pub fn tensors_equal(a: &DenseTensor, b: &DenseTensor, tol: f64) -> Result<bool, DenseError> {
    if a.shape != b.shape {
        return Err(DenseError::ShapeMismatch(a.shape.clone(), b.shape.clone()));
    }
    Ok(a.entries.iter().zip(&b.entries).all(|(x, y)| (x - y).norm() <= tol))
}

#[derive(Clone, Debug)]
struct Factor<S> {
    vars: Vec<usize>,
    data: Vec<S>,
}

impl<S: DenseScalar> Factor<S> {
    fn get(&self, assign: &[u8]) -> S {
        let mut idx = 0;
        for (i, &v) in self.vars.iter().enumerate() {
            idx |= (assign[v] as usize) << i;
        }
        self.data[idx].clone()
    }
}

struct Network<S> {
    nvars: usize,
    factors: Vec<Factor<S>>,
    sqrt2: i32,
    open: Vec<usize>,
    live: Vec<bool>,
}

fn union_find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let n = parent[y];
        parent[y] = r;
        y = n;
    }
    r
}

fn build<S: DenseScalar>(d: &Diagram) -> Result<Network<S>, DenseError> {
    let mut nvars = 0;
    let mut fresh = || {
        nvars += 1;
        nvars - 1
    };
    let mut unary: Vec<(usize, Phase)> = Vec::new();
    let mut binary: Vec<(usize, usize, [i8; 4])> = Vec::new();
    let mut sqrt2 = 0;
    // ports per vertex, keyed by (neighbour, kind)
    let mut ports: HashMap<(V, V, EdgeKind), Vec<usize>> = HashMap::new();
    let mut bvar: BTreeMap<V, usize> = BTreeMap::new();
    const PHASE_XY: [i8; 4] = [1, 1, 1, -1];
    const STAR: [i8; 4] = [1, 1, 1, 0];
    const TRI: [i8; 4] = [1, 1, 0, 1]; // bit0 = input, bit1 = output: [o <= i]

    for v in d.vertices() {
        match d.data(v) {
            VertexData::Z(p) => {
                let x = fresh();
                if !p.is_zero() {
                    unary.push((x, p));
                }
                for &(w, k) in d.neighbors(v) {
                    ports.entry((v, w, k)).or_default().push(x);
                }
            }
            VertexData::X(p) => {
                let y = fresh();
                if !p.is_zero() {
                    unary.push((y, p));
                }
                for &(w, k) in d.neighbors(v) {
                    let l = fresh();
                    binary.push((y, l, PHASE_XY));
                    sqrt2 -= 1;
                    ports.entry((v, w, k)).or_default().push(l);
                }
            }
            VertexData::Boundary => {
                let b = fresh();
                bvar.insert(v, b);
                for &(w, k) in d.neighbors(v) {
                    ports.entry((v, w, k)).or_default().push(b);
                }
            }
            VertexData::Triangle { input, output } => {
                let i = fresh();
                let o = fresh();
                binary.push((i, o, TRI));
                let mut used_in = false;
                for &(w, k) in d.neighbors(v) {
                    let port = if w == input && !used_in {
                        used_in = true;
                        i
                    } else if w == output {
                        o
                    } else {
                        i
                    };
                    ports.entry((v, w, k)).or_default().push(port);
                }
            }
        }
    }
    for list in ports.values_mut() {
        list.reverse();
    }

    let mut parent: Vec<usize> = (0..nvars).collect();
    for (u, w, k) in d.edges() {
        let pu = ports.get_mut(&(u, w, k)).and_then(|l| l.pop()).expect("port");
        let pw = ports.get_mut(&(w, u, k)).and_then(|l| l.pop()).expect("port");
        match k {
            EdgeKind::Plain => {
                let a = union_find(&mut parent, pu);
                let b = union_find(&mut parent, pw);
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
            EdgeKind::Hadamard => {
                binary.push((pu, pw, PHASE_XY));
                sqrt2 -= 1;
            }
            EdgeKind::Star => binary.push((pu, pw, STAR)),
        }
    }

    let mut factors = Vec::new();
    for (x, p) in unary {
        let e = S::phase(p).ok_or(DenseError::OffGrid(p))?;
        factors.push(Factor { vars: vec![union_find(&mut parent, x)], data: vec![S::one(), e] });
    }
    let minus = S::phase(Phase::pi()).expect("π is on the grid");
    let val = |c: i8| match c {
        0 => S::zero(),
        1 => S::one(),
        _ => minus.clone(),
    };
    for (a, b, t) in binary {
        let a = union_find(&mut parent, a);
        let b = union_find(&mut parent, b);
        if a == b {
            // diagonal of the 2x2 table
            factors.push(Factor { vars: vec![a], data: vec![val(t[0]), val(t[3])] });
        } else if a < b {
            factors.push(Factor { vars: vec![a, b], data: t.iter().map(|&c| val(c)).collect() });
        } else {
            factors.push(Factor { vars: vec![b, a], data: vec![val(t[0]), val(t[2]), val(t[1]), val(t[3])] });
        }
    }
    let open: Vec<usize> = d.boundaries().iter().map(|b| union_find(&mut parent, bvar[b])).collect();
    // variables merged into another are not summed separately
    let live: Vec<bool> = (0..nvars).map(|x| union_find(&mut parent, x) == x).collect();
    Ok(Network { nvars, factors, sqrt2, open, live })
}

fn contract_network<S: DenseScalar>(mut net: Network<S>, max_rank: usize) -> Result<(Vec<S>, Vec<usize>), DenseError> {
    let is_open = {
        let mut o = vec![false; net.nvars];
        for &x in &net.open {
            o[x] = true;
        }
        o
    };
    let mut remaining: Vec<bool> = (0..net.nvars).map(|x| net.live[x] && !is_open[x]).collect();
    let mut scalar = S::one();
    loop {
        // greedy: pick the variable whose elimination makes the smallest factor
        let mut best: Option<(usize, usize)> = None;
        let mut touching: Vec<Vec<usize>> = vec![Vec::new(); net.nvars];
        for (fi, f) in net.factors.iter().enumerate() {
            for &v in &f.vars {
                touching[v].push(fi);
            }
        }
        for x in 0..net.nvars {
            if !remaining[x] {
                continue;
            }
            let mut u: Vec<usize> = touching[x].iter().flat_map(|&fi| net.factors[fi].vars.iter().copied()).collect();
            u.sort_unstable();
            u.dedup();
            let size = u.len();
            if best.is_none_or(|(_, s)| size < s) {
                best = Some((x, size));
            }
        }
        let Some((x, size)) = best else { break };
        if size > max_rank + 1 {
            return Err(DenseError::RankCap(size - 1, max_rank));
        }
        remaining[x] = false;
        let idx: Vec<usize> = touching[x].clone();
        if idx.is_empty() {
            scalar = scalar.mul(&S::sqrt2_pow(2));
            continue;
        }
        let mut group = Vec::with_capacity(idx.len());
        for &fi in idx.iter().rev() {
            group.push(net.factors.swap_remove(fi));
        }
        let mut vars: Vec<usize> = group.iter().flat_map(|f| f.vars.iter().copied()).filter(|&v| v != x).collect();
        vars.sort_unstable();
        vars.dedup();
        let mut assign = vec![0u8; net.nvars];
        let mut data = Vec::with_capacity(1 << vars.len());
        for idx in 0..(1usize << vars.len()) {
            for (i, &v) in vars.iter().enumerate() {
                assign[v] = ((idx >> i) & 1) as u8;
            }
            let mut acc = S::zero();
            for bit in 0..2u8 {
                assign[x] = bit;
                let mut p = S::one();
                for f in &group {
                    p = p.mul(&f.get(&assign));
                    if p.is_zero() {
                        break;
                    }
                }
                acc = acc.add(&p);
            }
            data.push(acc);
        }
        if vars.is_empty() {
            scalar = scalar.mul(&data[0]);
        } else {
            net.factors.push(Factor { vars, data });
        }
    }
    scalar = scalar.mul(&S::sqrt2_pow(net.sqrt2));
    // remaining factors live on open variables only
    let nb = net.open.len();
    let mut out = Vec::with_capacity(1 << nb);
    let mut assign = vec![0u8; net.nvars];
    'outer: for idx in 0..(1usize << nb) {
        for (k, &x) in net.open.iter().enumerate() {
            let bit = ((idx >> (nb - 1 - k)) & 1) as u8;
            if net.open[..k].contains(&x) && assign[x] != bit {
                out.push(S::zero());
                continue 'outer;
            }
            assign[x] = bit;
        }
        let mut p = scalar.clone();
        for f in &net.factors {
            p = p.mul(&f.get(&assign));
        }
        out.push(p);
    }
    Ok((out, vec![2; nb]))
}

/// Contracts `d` over any [`DenseScalar`], including the diagram's scalar.
pub fn contract_dense<S: DenseScalar>(d: &Diagram, cfg: &DenseConfig) -> Result<Vec<S>, DenseError> {
    if d.num_vertices() > cfg.max_vertices {
        return Err(DenseError::TooManyVertices(d.num_vertices(), cfg.max_vertices));
    }
    let net = build::<S>(d)?;
    let (mut data, _) = contract_network(net, cfg.max_rank)?;
    let s = S::from_exact(d.scalar());
    for x in data.iter_mut() {
        *x = x.mul(&s);
    }
    Ok(data)
}

pub fn interpret_with(d: &Diagram, cfg: &DenseConfig) -> Result<DenseTensor, DenseError> {
    let entries = contract_dense::<Complex64>(d, cfg)?;
    Ok(DenseTensor { shape: vec![2; d.boundaries().len()], entries })
}

/// Dense tensor of `d` under the default size limit.
pub fn interpret(d: &Diagram) -> Result<DenseTensor, DenseError> {
    interpret_with(d, &DenseConfig::default())
}

/// Exact value of a scalar diagram.
pub fn interpret_exact(d: &Diagram, cfg: &DenseConfig) -> Result<ScalarExact, DenseError> {
    if !d.boundaries().is_empty() {
        return Err(DenseError::NotScalar);
    }
    Ok(contract_dense::<ScalarExact>(d, cfg)?.remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: &[Complex64], b: &[Complex64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).norm() < 1e-10)
    }

    fn wire(k: EdgeKind) -> Diagram {
        let mut d = Diagram::new();
        let a = d.add_boundary();
        let b = d.add_boundary();
        let za = d.add_z(Phase::zero());
        let zb = d.add_z(Phase::zero());
        d.add_edge(a, za, EdgeKind::Plain);
        d.add_edge(za, zb, k);
        d.add_edge(zb, b, EdgeKind::Plain);
        d
    }

    #[test]
    fn star_edge_matrix() {
        let t = interpret(&wire(EdgeKind::Star)).unwrap();
        assert!(close(&t.entries, &[c(1., 0.), c(1., 0.), c(1., 0.), c(0., 0.)]));
    }

    #[test]
    fn hadamard_edge_matrix() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let t = interpret(&wire(EdgeKind::Hadamard)).unwrap();
        assert!(close(&t.entries, &[c(h, 0.), c(h, 0.), c(h, 0.), c(-h, 0.)]));
    }

    #[test]
    fn pi_state() {
        let mut d = Diagram::new();
        let b = d.add_boundary();
        let z = d.add_z(Phase::pi());
        d.add_edge(b, z, EdgeKind::Plain);
        let t = interpret(&d).unwrap();
        assert!(close(&t.entries, &[c(1., 0.), c(-1., 0.)]));
    }

    #[test]
    fn triangle_and_transpose() {
        let mut d = Diagram::new();
        let i = d.add_boundary();
        let o = d.add_boundary();
        let t = d.add_vertex(VertexData::Triangle { input: i, output: o });
        d.add_edge(i, t, EdgeKind::Plain);
        d.add_edge(t, o, EdgeKind::Plain);
        let m = interpret(&d).unwrap().as_matrix(1);
        assert!(close(&m.concat(), &[c(1., 0.), c(1., 0.), c(0., 0.), c(1., 0.)]));
        d.set_boundaries(vec![o, i]);
        let m = interpret(&d).unwrap().as_matrix(1);
        assert!(close(&m.concat(), &[c(1., 0.), c(0., 0.), c(1., 0.), c(1., 0.)]));
    }

    #[test]
    fn x_spider_states() {
        // X(0) with one leg is √2|0>, X(π) is √2|1>
        for (p, want) in [(Phase::zero(), [1.0, 0.0]), (Phase::pi(), [0.0, 1.0])] {
            let mut d = Diagram::new();
            let b = d.add_boundary();
            let x = d.add_x(p);
            d.add_edge(b, x, EdgeKind::Plain);
            let t = interpret(&d).unwrap();
            let s = std::f64::consts::SQRT_2;
            assert!(close(&t.entries, &[c(s * want[0], 0.), c(s * want[1], 0.)]));
        }
    }

    #[test]
    fn lone_spiders() {
        let mut d = Diagram::new();
        d.add_z(Phase::zero());
        assert_eq!(interpret_exact(&d, &DenseConfig::default()).unwrap(), ScalarExact::from_int(2));
        let mut d = Diagram::new();
        d.add_z(Phase::new(1, 2));
        let v = interpret(&d).unwrap().scalar().unwrap();
        assert!((v - c(1., 1.)).norm() < 1e-12);
    }

    #[test]
    fn exact_and_float_agree() {
        let mut d = Diagram::new();
        let a = d.add_z(Phase::new(1, 4));
        let b = d.add_z(Phase::new(3, 4));
        let x = d.add_x(Phase::new(1, 2));
        d.add_edge(a, b, EdgeKind::Star);
        d.add_edge(a, x, EdgeKind::Hadamard);
        d.add_edge(b, x, EdgeKind::Plain);
        d.add_edge(a, a, EdgeKind::Hadamard);
        let e = interpret_exact(&d, &DenseConfig::default()).unwrap().to_complex();
        let f = interpret(&d).unwrap().scalar().unwrap();
        assert!((e - f).norm() < 1e-10);
    }

    #[test]
    fn plain_boundary_wire() {
        let mut d = Diagram::new();
        let a = d.add_boundary();
        let b = d.add_boundary();
        d.add_edge(a, b, EdgeKind::Plain);
        let t = interpret(&d).unwrap();
        assert!(close(&t.entries, &[c(1., 0.), c(0., 0.), c(0., 0.), c(1., 0.)]));
    }

    #[test]
    fn tolerance() {
        let a = DenseTensor { shape: vec![2], entries: vec![c(1., 0.), c(0., 0.)] };
        let b = DenseTensor { shape: vec![2], entries: vec![c(1. + 1e-6, 0.), c(0., 0.)] };
        assert!(tensors_equal(&a, &a, 1e-10).unwrap());
        assert!(!tensors_equal(&a, &b, 1e-10).unwrap());
        let s = DenseTensor { shape: vec![], entries: vec![c(1., 0.)] };
        assert!(tensors_equal(&a, &s, 1e-10).is_err());
    }
}
