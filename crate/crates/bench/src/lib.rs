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

//! Fixed workloads for the benchmarks. Each returns a scalar diagram.

use starzx::circuits::{gen_hidden_shift, gen_random, plug_basis, plug_plus_amplitude, to_zx, CczMode};
use starzx::diagram::Diagram;
use starzx::variance::{build_variance_diagram, AnsatzIR, PauliObservable};

/// `⟨+|C|+⟩` of a random Clifford+T+CCZ circuit.
pub fn random_amplitude(n: usize, gates: usize, seed: u64, mode: CczMode) -> Diagram {
    let c = gen_random(n, (gates, gates), 0.05, 0.05, seed).expect("valid parameters");
    plug_plus_amplitude(&to_zx(&c, mode))
}

/// `⟨s|C|0⟩` of a hidden-shift instance.
pub fn hidden_shift(n: usize, pairs: usize, seed: u64, mode: CczMode) -> Diagram {
    let hs = gen_hidden_shift(n, pairs, seed).expect("valid parameters");
    plug_basis(&to_zx(&hs.circuit, mode), &vec![false; n], &hs.shift)
}

/// Gradient variance of the first parameter of a built-in ansatz.
pub fn variance(name: &str, n: usize) -> Diagram {
    let a = AnsatzIR::builtin(name, n, 1).expect("known ansatz");
    let h = if name == "tree" { PauliObservable::last_z(n) } else { PauliObservable::all_z(n) };
    build_variance_diagram(&a, &h, 0).expect("valid ansatz")
}

#[cfg(test)]
mod tests {
    use super::*;
    use starzx::engine::{contract, EngineConfig};

    #[test]
    fn fixtures_contract() {
        for mode in [CczMode::Triangles, CczMode::SevenT] {
            let cfg = EngineConfig { rules: mode.rules(), ..Default::default() };
            contract(&random_amplitude(6, 30, 1, mode), &cfg).unwrap();
            let (v, _) = contract(&hidden_shift(8, 1, 1, mode), &cfg).unwrap();
            assert!((v.to_complex().re - 1.0).abs() < 1e-12);
        }
        let (v, _) = contract(&variance("sim-circuit-1", 3), &EngineConfig::default()).unwrap();
        assert!((v.to_complex().re - 0.09375).abs() < 1e-12);
    }
}
