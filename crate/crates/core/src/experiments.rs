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

//! Benchmark sweeps shared by the command line and the test suites.
//!
//! Every sweep reports rows through a callback as they finish and returns
//! them at the end. Non-timing columns depend only on the seed.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::circuits::{gen_hidden_shift, gen_random, plug_basis, plug_plus_amplitude, to_zx, CczMode, GateIR, GenError};
use crate::diagram::Diagram;
use crate::engine::{contract, prepare, ContractionStats, EngineConfig, EngineError};
use crate::scalar::ScalarExact;
use crate::variance::{exact_variance, AnsatzIR, PauliObservable, VarianceError};

/// Least-squares line `y = slope·x + intercept`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Fit {
    pub slope: f64,
    pub intercept: f64,
    pub points: usize,
}

pub fn least_squares(xs: &[f64], ys: &[f64]) -> Option<Fit> {
    let n = xs.len();
    if n < 2 || ys.len() != n {
        return None;
    }
    let mx = xs.iter().sum::<f64>() / n as f64;
    let my = ys.iter().sum::<f64>() / n as f64;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    Some(Fit { slope, intercept: my - slope * mx, points: n })
}

/// Outcome of one contraction. A timeout leaves `value` and `stats` empty.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Outcome {
    pub mode: CczMode,
    pub seconds: f64,
    pub timed_out: bool,
    pub value: Option<ScalarExact>,
    pub stats: Option<ContractionStats>,
}

impl Outcome {
    pub fn terms(&self) -> Option<u64> {
        self.stats.as_ref().map(|s| s.terminal_terms)
    }

    pub fn amplitude(&self) -> Option<Complex64> {
        self.value.as_ref().map(|v| v.to_complex())
    }

    /// Identical up to wall time.
    pub fn same_work(&self, o: &Outcome) -> bool {
        self.mode == o.mode
            && self.timed_out == o.timed_out
            && self.value == o.value
            && match (&self.stats, &o.stats) {
                (Some(a), Some(b)) => a.same_work(b),
                (None, None) => true,
                _ => false,
            }
    }
}

pub fn run_mode(d: &Diagram, mode: CczMode, base: &EngineConfig) -> Result<Outcome, EngineError> {
    let cfg = EngineConfig { rules: mode.rules(), ..base.clone() };
    let start = Instant::now();
    match contract(d, &cfg) {
        Ok((v, st)) => Ok(Outcome {
            mode,
            seconds: start.elapsed().as_secs_f64(),
            timed_out: false,
            value: Some(v),
            stats: Some(st),
        }),
        Err(EngineError::Timeout(t)) => {
            Ok(Outcome { mode, seconds: t.as_secs_f64(), timed_out: true, value: None, stats: None })
        }
        Err(e) => Err(e),
    }
}

fn circuit_seed(seed: u64, index: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(index as u64)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RandomBench {
    pub n: usize,
    pub count: usize,
    pub min_gates: usize,
    pub max_gates: usize,
    pub p_t: f64,
    pub p_ccz: f64,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RandomRow {
    pub index: usize,
    pub seed: u64,
    pub gates: usize,
    /// T count after the initial simplification of the seven-T diagram.
    pub t_count: usize,
    pub triangles: Outcome,
    pub seven_t: Outcome,
}

impl RandomRow {
    pub fn outcome(&self, mode: CczMode) -> &Outcome {
        match mode {
            CczMode::Triangles => &self.triangles,
            CczMode::SevenT => &self.seven_t,
        }
    }

    pub fn same_work(&self, o: &RandomRow) -> bool {
        (self.index, self.seed, self.gates, self.t_count) == (o.index, o.seed, o.gates, o.t_count)
            && self.triangles.same_work(&o.triangles)
            && self.seven_t.same_work(&o.seven_t)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ExperimentError {
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Variance(#[from] VarianceError),
}

pub fn random_circuit(b: &RandomBench, index: usize) -> Result<(u64, GateIR), GenError> {
    let s = circuit_seed(b.seed, index);
    Ok((s, gen_random(b.n, (b.min_gates, b.max_gates), b.p_t, b.p_ccz, s)?))
}

pub fn bench_random(
    b: &RandomBench,
    cfg: &EngineConfig,
    mut on_row: impl FnMut(&RandomRow),
) -> Result<Vec<RandomRow>, ExperimentError> {
    let mut rows = Vec::with_capacity(b.count);
    for index in 0..b.count {
        let (seed, c) = random_circuit(b, index)?;
        let dt = plug_plus_amplitude(&to_zx(&c, CczMode::Triangles));
        let ds = plug_plus_amplitude(&to_zx(&c, CczMode::SevenT));
        let t_count = prepare(&ds, &cfg.simp)?.t_count();
        let row = RandomRow {
            index,
            seed,
            gates: c.gates.len(),
            t_count,
            triangles: run_mode(&dt, CczMode::Triangles, cfg)?,
            seven_t: run_mode(&ds, CczMode::SevenT, cfg)?,
        };
        on_row(&row);
        rows.push(row);
    }
    Ok(rows)
}

/// Fit of `log2(terms)` against the post-simplification T count over the
/// runs that finished.
pub fn random_fit(rows: &[RandomRow], mode: CczMode) -> Option<Fit> {
    let (xs, ys): (Vec<f64>, Vec<f64>) = rows
        .iter()
        .filter_map(|r| r.outcome(mode).terms().map(|t| (r.t_count as f64, (t as f64).log2())))
        .unzip();
    least_squares(&xs, &ys)
}

pub const RANDOM_HEADER: &str =
    "index,seed,gates,t_count,triangles_terms,triangles_seconds,triangles_timeout,seven_t_terms,seven_t_seconds,seven_t_timeout";

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

pub fn random_csv_row(r: &RandomRow) -> String {
    let o = |m: &Outcome| format!("{},{:.6},{}", opt(m.terms()), m.seconds, m.timed_out);
    format!("{},{},{},{},{},{}", r.index, r.seed, r.gates, r.t_count, o(&r.triangles), o(&r.seven_t))
}

pub fn fit_line(label: &str, f: Option<Fit>) -> String {
    match f {
        Some(f) => format!("# fit {label}: exponent={:.4} intercept={:.4} points={}", f.slope, f.intercept, f.points),
        None => format!("# fit {label}: insufficient data"),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShiftBench {
    pub n: usize,
    pub pairs: Vec<usize>,
    pub count: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShiftRow {
    pub pairs: usize,
    pub index: usize,
    pub seed: u64,
    pub outcome: Outcome,
}

impl ShiftRow {
    pub fn same_work(&self, o: &ShiftRow) -> bool {
        (self.pairs, self.index, self.seed) == (o.pairs, o.index, o.seed) && self.outcome.same_work(&o.outcome)
    }
}

/// `⟨s|C|0⟩` for every pair count, instance and mode.
pub fn bench_hidden_shift(
    b: &ShiftBench,
    cfg: &EngineConfig,
    mut on_row: impl FnMut(&ShiftRow),
) -> Result<Vec<ShiftRow>, ExperimentError> {
    let mut rows = Vec::new();
    for &pairs in &b.pairs {
        for index in 0..b.count {
            let seed = circuit_seed(b.seed, pairs * b.count + index);
            let hs = gen_hidden_shift(b.n, pairs, seed)?;
            for mode in [CczMode::Triangles, CczMode::SevenT] {
                let d = plug_basis(&to_zx(&hs.circuit, mode), &vec![false; b.n], &hs.shift);
                let row = ShiftRow { pairs, index, seed, outcome: run_mode(&d, mode, cfg)? };
                on_row(&row);
                rows.push(row);
            }
        }
    }
    Ok(rows)
}

/// Fit of `log2(terms)` against the number of CSWAP pairs.
pub fn shift_fit(rows: &[ShiftRow], mode: CczMode) -> Option<Fit> {
    let (xs, ys): (Vec<f64>, Vec<f64>) = rows
        .iter()
        .filter(|r| r.outcome.mode == mode)
        .filter_map(|r| r.outcome.terms().map(|t| (r.pairs as f64, (t as f64).log2())))
        .unzip();
    least_squares(&xs, &ys)
}

pub const SHIFT_HEADER: &str = "s,index,seed,mode,seconds,terms,timeout,amplitude";

pub fn shift_csv_row(r: &ShiftRow) -> String {
    let o = &r.outcome;
    let amp = o.amplitude().map(|a| format!("{:.12}{:+.12}i", a.re, a.im)).unwrap_or_default();
    format!("{},{},{},{},{:.6},{},{},{}", r.pairs, r.index, r.seed, o.mode, o.seconds, opt(o.terms()), o.timed_out, amp)
}

/// The observable used for a built-in ansatz unless one is given:
/// `I⊗…⊗Z` for the tree, `Z^⊗n` otherwise.
pub fn default_observable(ansatz: &str, n: usize) -> PauliObservable {
    if ansatz == "tree" {
        PauliObservable::last_z(n)
    } else {
        PauliObservable::all_z(n)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VarianceRow {
    pub ansatz: String,
    pub n: usize,
    pub layers: usize,
    pub j: usize,
    pub params: usize,
    pub exact: ScalarExact,
    pub variance: f64,
    pub terms: u64,
    pub seconds: f64,
}

impl VarianceRow {
    pub fn same_work(&self, o: &VarianceRow) -> bool {
        VarianceRow { seconds: 0.0, ..self.clone() } == VarianceRow { seconds: 0.0, ..o.clone() }
    }
}

pub fn variance_point(
    name: &str,
    a: &AnsatzIR,
    h: &PauliObservable,
    layers: usize,
    j: usize,
    cfg: &EngineConfig,
) -> Result<VarianceRow, ExperimentError> {
    let start = Instant::now();
    let (v, st) = exact_variance(a, h, j, cfg)?;
    Ok(VarianceRow {
        ansatz: name.to_string(),
        n: a.n,
        layers,
        j,
        params: a.p,
        variance: v.to_complex().re,
        exact: v,
        terms: st.terminal_terms,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Variance of a built-in ansatz for each qubit count.
pub fn variance_sweep(
    name: &str,
    ns: &[usize],
    layers: usize,
    j: usize,
    observable: Option<&PauliObservable>,
    cfg: &EngineConfig,
    mut on_row: impl FnMut(&VarianceRow),
) -> Result<Vec<VarianceRow>, ExperimentError> {
    let mut rows = Vec::new();
    for &n in ns {
        let a = AnsatzIR::builtin(name, n, layers)?;
        let h = observable.cloned().unwrap_or_else(|| default_observable(name, n));
        let row = variance_point(name, &a, &h, layers, j, cfg)?;
        on_row(&row);
        rows.push(row);
    }
    Ok(rows)
}

pub const VARIANCE_HEADER: &str = "ansatz,n,layers,j,variance,terms,seconds";

pub fn variance_csv_row(r: &VarianceRow) -> String {
    format!("{},{},{},{},{:.12e},{},{:.6}", r.ansatz, r.n, r.layers, r.j, r.variance, r.terms, r.seconds)
}

/// Average drop of `log2(variance)` per step of `key` between consecutive rows.
pub fn mean_log2_drop(rows: &[VarianceRow], key: impl Fn(&VarianceRow) -> f64) -> Option<f64> {
    if rows.len() < 2 {
        return None;
    }
    let first = &rows[0];
    let last = &rows[rows.len() - 1];
    Some((first.variance.log2() - last.variance.log2()) / (key(last) - key(first)))
}

/// Renders rows with a header and trailing comment lines.
pub fn csv(header: &str, rows: impl IntoIterator<Item = String>, notes: &[String]) -> String {
    let mut s = String::new();
    writeln!(s, "{header}").unwrap();
    for r in rows {
        writeln!(s, "{r}").unwrap();
    }
    for n in notes {
        writeln!(s, "{n}").unwrap();
    }
    s
}

/// Seconds as a timeout, where 0 or negative means none.
pub fn timeout_secs(s: f64) -> Option<Duration> {
    (s > 0.0).then(|| Duration::from_secs_f64(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fit_recovers_line() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        let ys: Vec<f64> = xs.iter().map(|x| 0.5 * x - 1.0).collect();
        let f = least_squares(&xs, &ys).unwrap();
        assert!((f.slope - 0.5).abs() < 1e-12 && (f.intercept + 1.0).abs() < 1e-12);
        assert!(least_squares(&[1.0], &[1.0]).is_none());
        assert!(least_squares(&[2.0, 2.0], &[1.0, 3.0]).is_none());
    }

    #[test]
    fn small_random_bench() {
        let b = RandomBench { n: 6, count: 4, min_gates: 20, max_gates: 30, p_t: 0.1, p_ccz: 0.1, seed: 5 };
        let mut seen = 0;
        let rows = bench_random(&b, &EngineConfig::default(), |_| seen += 1).unwrap();
        assert_eq!(seen, 4);
        for r in &rows {
            assert_eq!(r.triangles.value, r.seven_t.value);
        }
        let again = bench_random(&b, &EngineConfig::default(), |_| {}).unwrap();
        assert!(rows.iter().zip(&again).all(|(a, b)| a.same_work(b)));
        let text = csv(RANDOM_HEADER, rows.iter().map(random_csv_row), &[fit_line("triangles", random_fit(&rows, CczMode::Triangles))]);
        assert_eq!(text.lines().count(), 6);
    }

    #[test]
    fn shift_rows_are_one() {
        let b = ShiftBench { n: 8, pairs: vec![0, 1], count: 2, seed: 3 };
        let rows = bench_hidden_shift(&b, &EngineConfig::default(), |_| {}).unwrap();
        assert_eq!(rows.len(), 8);
        for r in rows {
            assert!((r.outcome.amplitude().unwrap() - 1.0).norm() < 1e-10, "{r:?}");
        }
    }

    #[test]
    fn sweep_rows() {
        let rows = variance_sweep("sim-circuit-1", &[3, 4], 1, 0, None, &EngineConfig::default(), |_| {}).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows[1].variance < rows[0].variance);
        assert!(variance_csv_row(&rows[0]).starts_with("sim-circuit-1,3,1,0,"));
    }
}
