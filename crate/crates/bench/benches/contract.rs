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

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use starzx::circuits::CczMode;
use starzx::engine::{contract, EngineConfig};
use starzx_bench::{hidden_shift, random_amplitude, variance};

fn cfg(mode: CczMode) -> EngineConfig {
    EngineConfig { rules: mode.rules(), ..Default::default() }
}

fn random(c: &mut Criterion) {
    let mut g = c.benchmark_group("random_n10");
    g.sample_size(10);
    for mode in [CczMode::Triangles, CczMode::SevenT] {
        let d = random_amplitude(10, 60, 7, mode);
        g.bench_with_input(BenchmarkId::new(mode.name(), 60), &d, |b, d| b.iter(|| contract(d, &cfg(mode)).unwrap()));
    }
    g.finish();
}

fn shift(c: &mut Criterion) {
    let mut g = c.benchmark_group("hidden_shift_n20");
    g.sample_size(10);
    for pairs in [1, 2, 3] {
        for mode in [CczMode::Triangles, CczMode::SevenT] {
            let d = hidden_shift(20, pairs, 3, mode);
            g.bench_with_input(BenchmarkId::new(mode.name(), pairs), &d, |b, d| {
                b.iter(|| contract(d, &cfg(mode)).unwrap())
            });
        }
    }
    g.finish();
}

fn gradient(c: &mut Criterion) {
    let mut g = c.benchmark_group("variance");
    g.sample_size(10);
    for (name, n) in [("sim-circuit-1", 8), ("tree", 8)] {
        let d = variance(name, n);
        g.bench_with_input(BenchmarkId::new(name, n), &d, |b, d| {
            b.iter(|| contract(d, &EngineConfig::default()).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, random, shift, gradient);
criterion_main!(benches);
