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

//! Benchmark circuit families.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Gate, GateIR};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenError {
    #[error("CCZ gates need at least 3 qubits, got {0}")]
    TooFewQubits(usize),
    #[error("gate probabilities must be non-negative and sum to at most 1 (T {0}, CCZ {1})")]
    Probabilities(f64, f64),
    #[error("bad gate count range {0}..={1}")]
    Range(usize, usize),
    #[error("hidden shift needs an even qubit count, got {0}")]
    OddQubits(usize),
    #[error("controlled swaps need at least 6 qubits, got {0}")]
    TooSmallForSwaps(usize),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RandomParams {
    pub n: usize,
    pub min_gates: usize,
    pub max_gates: usize,
    pub p_t: f64,
    pub p_ccz: f64,
    pub seed: u64,
}

impl RandomParams {
    pub fn generate(&self) -> Result<GateIR, GenError> {
        gen_random(self.n, (self.min_gates, self.max_gates), self.p_t, self.p_ccz, self.seed)
    }
}

/// A gate count drawn from the closed range, then each gate is T with
/// probability `p_t`, CCZ with `p_ccz`, and otherwise one of CX, CZ, H, S.
pub fn gen_random(n: usize, gates: (usize, usize), p_t: f64, p_ccz: f64, seed: u64) -> Result<GateIR, GenError> {
    if !(p_t >= 0.0 && p_ccz >= 0.0 && p_t + p_ccz <= 1.0) {
        return Err(GenError::Probabilities(p_t, p_ccz));
    }
    if p_ccz > 0.0 && n < 3 {
        return Err(GenError::TooFewQubits(n));
    }
    if gates.0 > gates.1 || (n < 2 && gates.1 > 0) {
        return Err(GenError::Range(gates.0, gates.1));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.random_range(gates.0..=gates.1);
    let mut c = GateIR::new(n);
    for _ in 0..count {
        let r: f64 = rng.random();
        let g = if r < p_t {
            Gate::T(rng.random_range(0..n))
        } else if r < p_t + p_ccz {
            let q = sample(&mut rng, n, 3).into_vec();
            Gate::Ccz(q[0], q[1], q[2])
        } else {
            match rng.random_range(0..4) {
                0 => {
                    let q = sample(&mut rng, n, 2).into_vec();
                    Gate::Cx(q[0], q[1])
                }
                1 => {
                    let q = sample(&mut rng, n, 2).into_vec();
                    Gate::Cz(q[0], q[1])
                }
                2 => Gate::H(rng.random_range(0..n)),
                _ => Gate::S(rng.random_range(0..n)),
            }
        };
        c.push(g);
    }
    Ok(c)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HiddenShift {
    pub circuit: GateIR,
    pub shift: Vec<bool>,
    /// Diagonal part of the oracle on the first half, before mirroring.
    pub oracle: Vec<Gate>,
}

fn random_diag(rng: &mut ChaCha8Rng, m: usize, count: usize, touch: &[usize]) -> Vec<Gate> {
    (0..count)
        .map(|k| {
            // the first gate touches a swapped wire so a swap pair never cancels
            let a = if k == 0 && !touch.is_empty() { touch[rng.random_range(0..touch.len())] } else { rng.random_range(0..m) };
            if m > 1 && rng.random_bool(0.6) {
                let mut b = rng.random_range(0..m - 1);
                if b >= a {
                    b += 1;
                }
                Gate::Cz(a, b)
            } else {
                Gate::Z(a)
            }
        })
        .collect()
}

fn relabel(g: &Gate, f: impl Fn(usize) -> usize) -> Gate {
    match g {
        Gate::Z(a) => Gate::Z(f(*a)),
        Gate::Cz(a, b) => Gate::Cz(f(*a), f(*b)),
        Gate::Cswap(a, b, c) => Gate::Cswap(f(*a), f(*b), f(*c)),
        _ => unreachable!("oracle gates are Z, CZ and CSWAP"),
    }
}

/// Hidden shift over a Maiorana-McFarland function `f(x, y) = x·y ⊕ g(x)`.
///
/// `g` is a sequence of Z and CZ gates on the first half of the wires with
/// `pairs` blocks `CSWAP · D · CSWAP` inserted at random positions. Each
/// block is diagonal, so `g` stays a Boolean function and the dual
/// `x·y ⊕ g(y)` is obtained by mirroring the sequence onto the second half.
/// The circuit is `H · O_dual · H · X^s O_f X^s · H` and maps `|0⟩` to `|s⟩`.
pub fn gen_hidden_shift(n: usize, pairs: usize, seed: u64) -> Result<HiddenShift, GenError> {
    if n % 2 == 1 || n == 0 {
        return Err(GenError::OddQubits(n));
    }
    let m = n / 2;
    if pairs > 0 && m < 3 {
        return Err(GenError::TooSmallForSwaps(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shift: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();
    let mut blocks: Vec<Vec<Gate>> = random_diag(&mut rng, m, 2 * m, &[]).into_iter().map(|g| vec![g]).collect();
    for _ in 0..pairs {
        let q = sample(&mut rng, m, 3).into_vec();
        let sw = Gate::Cswap(q[0], q[1], q[2]);
        let mut block = vec![sw.clone()];
        block.extend(random_diag(&mut rng, m, 2, &q[1..]));
        block.push(sw);
        let at = rng.random_range(0..=blocks.len());
        blocks.insert(at, block);
    }
    let oracle: Vec<Gate> = blocks.into_iter().flatten().collect();

    let mut c = GateIR::new(n);
    let hall = |c: &mut GateIR| (0..n).for_each(|q| c.push(Gate::H(q)));
    let xs = |c: &mut GateIR| (0..n).filter(|&q| shift[q]).for_each(|q| c.push(Gate::X(q)));
    hall(&mut c);
    xs(&mut c);
    for g in &oracle {
        c.push(g.clone());
    }
    (0..m).for_each(|i| c.push(Gate::Cz(i, m + i)));
    xs(&mut c);
    hall(&mut c);
    for g in &oracle {
        c.push(relabel(g, |q| q + m));
    }
    (0..m).for_each(|i| c.push(Gate::Cz(i, m + i)));
    hall(&mut c);
    Ok(HiddenShift { circuit: c, shift, oracle })
}
