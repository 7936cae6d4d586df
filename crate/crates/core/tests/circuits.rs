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

use starzx::circuits::{gen_hidden_shift, gen_random, plug_basis, plug_plus_amplitude, sim, to_zx, CczMode};
use starzx::engine::{contract, EngineConfig};

fn cfg(mode: CczMode) -> EngineConfig {
    EngineConfig { rules: mode.rules(), ..EngineConfig::default() }
}

#[test]
fn random_amplitudes_match_statevector() {
    for seed in 0..60 {
        let n = 3 + (seed as usize % 6);
        let c = gen_random(n, (10, 40), 0.1, 0.1, seed).unwrap();
        let want = sim::plus_amplitude(&c);
        let mut vals = Vec::new();
        for mode in [CczMode::Triangles, CczMode::SevenT] {
            let d = plug_plus_amplitude(&to_zx(&c, mode));
            let (v, stats) = contract(&d, &cfg(mode)).unwrap();
            assert!((v.to_complex() - want).norm() < 1e-10, "seed {seed} {mode}: {} vs {want}", v.to_complex());
            assert!(stats.within_bound(), "seed {seed} {mode}: {stats:?}");
            vals.push(v);
        }
        assert_eq!(vals[0], vals[1], "seed {seed}");
    }
}

#[test]
fn hidden_shift_amplitudes() {
    for (pairs, seed) in [(0, 1), (1, 2), (2, 3)] {
        let hs = gen_hidden_shift(8, pairs, seed).unwrap();
        let want = sim::basis_amplitude(&hs.circuit, &[false; 8], &hs.shift);
        for mode in [CczMode::Triangles, CczMode::SevenT] {
            let d = plug_basis(&to_zx(&hs.circuit, mode), &[false; 8], &hs.shift);
            let (v, _) = contract(&d, &cfg(mode)).unwrap();
            assert!((v.to_complex() - want).norm() < 1e-10, "pairs {pairs} {mode}: {}", v.to_complex());
        }
    }
}
