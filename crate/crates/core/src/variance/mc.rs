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

//! Statevector oracles for the gradient variance.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ansatz::{AnsatzIR, Pauli, PauliObservable};
use super::VarianceError;
use crate::circuits::sim::State;
use crate::circuits::Gate;

pub const MAX_QUBITS: usize = 12;
const CHUNK: usize = 2048;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct McEstimate {
    pub samples: usize,
    pub mean: f64,
    pub mean_stderr: f64,
    pub variance: f64,
    pub variance_stderr: f64,
}

struct Program {
    n: usize,
    gates: Vec<Gate>,
    at: Vec<usize>,
    h: PauliObservable,
}

impl Program {
    fn new(a: &AnsatzIR, h: &PauliObservable, j: usize) -> Result<Self, VarianceError> {
        a.validate()?;
        if h.len() != a.n {
            return Err(VarianceError::ObservableLength { got: h.len(), n: a.n });
        }
        if a.n > MAX_QUBITS {
            return Err(VarianceError::TooLarge(a.n));
        }
        if j >= a.p {
            return Err(VarianceError::InvalidParam { j, p: a.p });
        }
        let (gates, at) = a.expand();
        Ok(Program { n: a.n, gates, at, h: h.clone() })
    }

    fn run(&self, s: &mut State, range: std::ops::Range<usize>, theta: &[f64], slot: &[Option<usize>]) {
        for i in range {
            match (&self.gates[i], slot[i]) {
                (Gate::Rz(_, q), Some(k)) => s.rz(*q, theta[k]),
                (g, _) => s.apply(g),
            }
        }
    }

    fn observe(&self, s: &State) -> f64 {
        let mut t = s.clone();
        let mut scale = Complex64::new(1.0, 0.0);
        for (q, p) in self.h.0.iter().enumerate() {
            match p {
                Pauli::I => {}
                Pauli::Z => t.apply(&Gate::Z(q)),
                Pauli::X => t.apply(&Gate::X(q)),
                Pauli::Y => {
                    t.apply(&Gate::Z(q));
                    t.apply(&Gate::X(q));
                    scale *= Complex64::i();
                }
            }
        }
        (s.inner(&t) * scale).re
    }

    fn slots(&self) -> Vec<Option<usize>> {
        let mut slot = vec![None; self.gates.len()];
        for (k, &i) in self.at.iter().enumerate() {
            slot[i] = Some(k);
        }
        slot
    }

    /// Parameter shift: `(f(θ_j + π/2) - f(θ_j - π/2)) / 2`.
    fn gradient(&self, j: usize, theta: &mut [f64], slot: &[Option<usize>]) -> f64 {
        let cut = self.at[j];
        let mut pre = State::basis(self.n, &vec![false; self.n]);
        self.run(&mut pre, 0..cut, theta, slot);
        let t0 = theta[j];
        let mut f = [0.0; 2];
        for (i, shift) in [FRAC_PI_2, -FRAC_PI_2].into_iter().enumerate() {
            theta[j] = t0 + shift;
            let mut s = pre.clone();
            self.run(&mut s, cut..self.gates.len(), theta, slot);
            f[i] = self.observe(&s);
        }
        theta[j] = t0;
        (f[0] - f[1]) / 2.0
    }
}

/// `⟨0|U†(θ) H U(θ)|0⟩` by statevector.
pub fn expectation(a: &AnsatzIR, h: &PauliObservable, theta: &[f64]) -> Result<f64, VarianceError> {
    let prog = Program::new(a, h, 0)?;
    let mut s = State::basis(a.n, &vec![false; a.n]);
    prog.run(&mut s, 0..prog.gates.len(), theta, &prog.slots());
    Ok(prog.observe(&s))
}

/// Monte-Carlo estimate of the gradient variance from `samples` uniform
/// parameter points. Samples are drawn in fixed chunks, each from its own
/// stream, so the result does not depend on the thread count.
pub fn mc_variance_oracle(
    a: &AnsatzIR,
    h: &PauliObservable,
    j: usize,
    samples: usize,
    seed: u64,
) -> Result<McEstimate, VarianceError> {
    let prog = Program::new(a, h, j)?;
    let slot = prog.slots();
    let chunks: Vec<usize> = (0..samples.div_ceil(CHUNK)).collect();
    let grads: Vec<Vec<f64>> = chunks
        .par_iter()
        .map(|&c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c as u64);
            let len = CHUNK.min(samples - c * CHUNK);
            let mut theta = vec![0.0; a.p];
            (0..len)
                .map(|_| {
                    theta.iter_mut().for_each(|t| *t = rng.random_range(-PI..PI));
                    prog.gradient(j, &mut theta, &slot)
                })
                .collect()
        })
        .collect();
    let g: Vec<f64> = grads.into_iter().flatten().collect();
    Ok(summarize(&g))
}

fn summarize(g: &[f64]) -> McEstimate {
    let n = g.len() as f64;
    let mean = g.iter().sum::<f64>() / n;
    let m2 = g.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n;
    let m4 = g.iter().map(|x| (x - mean).powi(4)).sum::<f64>() / n;
    let variance = m2 * n / (n - 1.0);
    McEstimate {
        samples: g.len(),
        mean,
        mean_stderr: (variance / n).sqrt(),
        variance,
        variance_stderr: ((m4 - m2 * m2 * (n - 3.0) / (n - 1.0)) / n).max(0.0).sqrt(),
    }
}

/// Exact variance by averaging over a 5-point grid per parameter. The
/// squared gradient has frequencies in `-2..=2` in every `θ_k`, which the
/// grid integrates exactly. Cost is `5^p` statevector runs.
pub fn grid_variance(a: &AnsatzIR, h: &PauliObservable, j: usize) -> Result<f64, VarianceError> {
    const MAX_PARAMS: usize = 8;
    let prog = Program::new(a, h, j)?;
    if a.p > MAX_PARAMS {
        return Err(VarianceError::GridTooLarge(a.p));
    }
    let slot = prog.slots();
    let total = 5usize.pow(a.p as u32);
    let sum: f64 = (0..total)
        .into_par_iter()
        .map(|mut m| {
            let mut theta = vec![0.0; a.p];
            for t in theta.iter_mut() {
                *t = 2.0 * PI * (m % 5) as f64 / 5.0;
                m /= 5;
            }
            prog.gradient(j, &mut theta, &slot).powi(2)
        })
        .sum();
    Ok(sum / total as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_rotation() {
        // ⟨Z⟩ = cos θ after Rx, so Var(-sin θ) = 1/2
        let mut a = AnsatzIR::new(1);
        a.rx(0);
        let h = PauliObservable::all_z(1);
        assert!((expectation(&a, &h, &[0.3]).unwrap() - 0.3f64.cos()).abs() < 1e-12);
        assert!((grid_variance(&a, &h, 0).unwrap() - 0.5).abs() < 1e-12);
        let e = mc_variance_oracle(&a, &h, 0, 20000, 1).unwrap();
        assert!((e.variance - 0.5).abs() < 4.0 * e.variance_stderr, "{e:?}");
        assert!(e.mean.abs() < 4.0 * e.mean_stderr);
    }

    #[test]
    fn reproducible_and_shrinking() {
        let a = AnsatzIR::builtin("sim-circuit-1", 3, 1).unwrap();
        let h = PauliObservable::all_z(3);
        let e1 = mc_variance_oracle(&a, &h, 0, 5000, 7).unwrap();
        assert_eq!(e1, mc_variance_oracle(&a, &h, 0, 5000, 7).unwrap());
        let e2 = mc_variance_oracle(&a, &h, 0, 20000, 7).unwrap();
        let ratio = e2.variance_stderr / e1.variance_stderr;
        assert!((ratio - 0.5).abs() < 0.1, "{ratio}");
    }

    #[test]
    fn limits() {
        let a = AnsatzIR::builtin("sim-circuit-1", 13, 1).unwrap();
        assert!(matches!(
            mc_variance_oracle(&a, &PauliObservable::all_z(13), 0, 10, 0),
            Err(VarianceError::TooLarge(13))
        ));
        let a = AnsatzIR::builtin("sim-circuit-1", 5, 1).unwrap();
        assert!(matches!(grid_variance(&a, &PauliObservable::all_z(5), 0), Err(VarianceError::GridTooLarge(10))));
    }
}
