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

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use starzx::circuits::{parse, plug_plus_amplitude, sim, to_zx, CczMode, Format, Gate, GateIR};
use starzx::dense::{interpret_exact, interpret_with, tensors_equal, DenseConfig};
use starzx::engine::{contract, EngineConfig};
use starzx::graphlike::{is_graph_like, to_graph_like};
use starzx::json::{from_json, to_json};
use starzx::random::RandomDiagram;
use starzx::{Phase, ScalarExact};

fn gate(n: usize) -> impl Strategy<Value = Gate> {
    let q = 0..n;
    let distinct = |k: usize| proptest::sample::subsequence((0..n).collect::<Vec<_>>(), k).prop_shuffle();
    let mut opts: Vec<BoxedStrategy<Gate>> = vec![
        q.clone().prop_map(Gate::H).boxed(),
        q.clone().prop_map(Gate::S).boxed(),
        q.clone().prop_map(Gate::Sdg).boxed(),
        q.clone().prop_map(Gate::T).boxed(),
        q.clone().prop_map(Gate::Tdg).boxed(),
        q.clone().prop_map(Gate::X).boxed(),
        (0..8i64, q).prop_map(|(k, q)| Gate::Rz(Phase::new(k, 4), q)).boxed(),
    ];
    if n >= 2 {
        opts.push(distinct(2).prop_map(|v| Gate::Cx(v[0], v[1])).boxed());
        opts.push(distinct(2).prop_map(|v| Gate::Cz(v[0], v[1])).boxed());
    }
    if n >= 3 {
        opts.push(distinct(3).prop_map(|v| Gate::Ccz(v[0], v[1], v[2])).boxed());
        opts.push(distinct(3).prop_map(|v| Gate::Cswap(v[0], v[1], v[2])).boxed());
        opts.push(distinct(3).prop_map(|v| Gate::Mcx(vec![v[0], v[1]], v[2])).boxed());
    }
    proptest::strategy::Union::new(opts)
}

fn circuit(max_n: usize, max_gates: usize) -> impl Strategy<Value = GateIR> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(gate(n), 0..=max_gates).prop_map(move |gates| GateIR { n, gates })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn diagrams_match_unitary(c in circuit(5, 12), seven in any::<bool>()) {
        let mode = if seven { CczMode::SevenT } else { CczMode::Triangles };
        let m = interpret_with(&to_zx(&c, mode), &DenseConfig::unlimited()).unwrap().as_matrix(c.n);
        for (r, row) in sim::unitary(&c).iter().enumerate() {
            for (k, x) in row.iter().enumerate() {
                prop_assert!((m[r][k] - x).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn contraction_matches_statevector(c in circuit(6, 25)) {
        let want = sim::plus_amplitude(&c);
        let mut vals = Vec::new();
        for mode in [CczMode::Triangles, CczMode::SevenT] {
            let cfg = EngineConfig { rules: mode.rules(), ..EngineConfig::default() };
            let (v, st) = contract(&plug_plus_amplitude(&to_zx(&c, mode)), &cfg).unwrap();
            prop_assert!((v.to_complex() - want).norm() < 1e-10);
            prop_assert!(st.within_bound());
            vals.push(v);
        }
        prop_assert_eq!(&vals[0], &vals[1]);
    }

    #[test]
    fn text_formats_roundtrip(c in circuit(6, 20)) {
        prop_assert_eq!(&parse(&c.to_simple(), Format::Simple).unwrap(), &c);
        if let Some(q) = c.to_qasm() {
            prop_assert_eq!(&parse(&q, Format::detect(&q)).unwrap(), &c);
        }
    }

    #[test]
    fn phases_roundtrip(k in -64i64..64, d in prop::sample::select(vec![1i64, 2, 4, 8, 3])) {
        let p = Phase::new(k, d);
        prop_assert_eq!(p.to_string().parse::<Phase>().unwrap(), p);
        prop_assert_eq!(p + (-p), Phase::zero());
    }

    #[test]
    fn scalars_agree_with_floats(a in prop::array::uniform4(-50i64..50), b in prop::array::uniform4(-50i64..50), pa in -6i32..6, pb in -6i32..6) {
        let x = ScalarExact::new(a, pa);
        let y = ScalarExact::new(b, pb);
        prop_assert!(((&x * &y).to_complex() - x.to_complex() * y.to_complex()).norm() < 1e-9);
        prop_assert!(((&x + &y).to_complex() - (x.to_complex() + y.to_complex())).norm() < 1e-9);
    }

    #[test]
    fn random_diagrams(seed in any::<u64>(), spiders in 2usize..8, edges in 1usize..12, tris in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = RandomDiagram { spiders, edges, triangles: tris, boundaries: 0, ..Default::default() }.sample(&mut rng);
        let mut g = d.clone();
        to_graph_like(&mut g);
        prop_assert!(is_graph_like(&g));
        let cfg = DenseConfig::unlimited();
        let want = interpret_exact(&d, &cfg).unwrap();
        prop_assert_eq!(&interpret_exact(&g, &cfg).unwrap(), &want);
        prop_assert_eq!(&contract(&d, &EngineConfig::default()).unwrap().0, &want);
        let back = from_json(&to_json(&d)).unwrap();
        prop_assert!(tensors_equal(&interpret_with(&back, &cfg).unwrap(), &interpret_with(&d, &cfg).unwrap(), 1e-12).unwrap());
    }
}
