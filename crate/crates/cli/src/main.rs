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

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use starzx::circuits::{parse, plug_basis, plug_plus_amplitude, to_zx, CczMode, Format, ParseError};
use starzx::engine::{contract, EngineConfig, EngineError};
use starzx::experiments::{self as ex, ExperimentError, RandomBench, ShiftBench};
use starzx::variance::{mc_variance_oracle, AnsatzIR, PauliObservable, VarianceError};

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("{path}:{source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("timed out after {0:.3}s")]
    Timeout(f64),
    #[error(transparent)]
    Engine(EngineError),
    #[error(transparent)]
    Variance(VarianceError),
    #[error("cannot write output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Read { .. } | CliError::Parse { .. } => 2,
            CliError::Variance(VarianceError::Engine(EngineError::Timeout(_))) => 3,
            CliError::Variance(_) => 2,
            CliError::Timeout(_) => 3,
            CliError::Engine(_) | CliError::Output(_) => 1,
        }
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::Timeout(t) => CliError::Timeout(t.as_secs_f64()),
            EngineError::OffGrid(_) => CliError::Input(e.to_string()),
            e => CliError::Engine(e),
        }
    }
}

impl From<VarianceError> for CliError {
    fn from(e: VarianceError) -> Self {
        match e {
            VarianceError::Engine(e) => e.into(),
            e => CliError::Variance(e),
        }
    }
}

impl From<ExperimentError> for CliError {
    fn from(e: ExperimentError) -> Self {
        match e {
            ExperimentError::Gen(e) => CliError::Input(e.to_string()),
            ExperimentError::Engine(e) => e.into(),
            ExperimentError::Variance(e) => e.into(),
        }
    }
}

#[derive(Parser)]
#[command(name = "starzx", version, about = "Exact contraction of ZX diagrams with star edges")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Common {
    /// Worker threads for branch-parallel contraction.
    #[arg(long, global = true, env = "STARZX_WORKERS", default_value_t = 1)]
    workers: usize,
    /// Seconds per contraction; 0 disables the limit.
    #[arg(long, global = true)]
    timeout: Option<f64>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print machine-readable results to stderr.
    #[arg(long, global = true)]
    json: bool,
    /// Write machine-readable results to a file.
    #[arg(long, global = true, value_name = "PATH")]
    json_out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Auto,
    Simple,
    Qasm,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Triangles,
    #[value(name = "seven_t", alias = "seven-t")]
    SevenT,
}

impl From<ModeArg> for CczMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Triangles => CczMode::Triangles,
            ModeArg::SevenT => CczMode::SevenT,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// One amplitude of a circuit. Without bitstrings, `⟨+…+|C|+…+⟩`.
    Simulate {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        format: FormatArg,
        #[arg(long, value_enum, default_value = "triangles")]
        mode: ModeArg,
        /// Input basis state such as `0110`; zeros when only `--output` is given.
        #[arg(long)]
        input: Option<String>,
        #[arg(long)]
        output: Option<String>,
    },
    /// Random Clifford+T+CCZ circuits in both modes.
    BenchRandom {
        #[arg(long, default_value_t = 30)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 300)]
        min_gates: usize,
        #[arg(long, default_value_t = 500)]
        max_gates: usize,
        #[arg(long, default_value_t = 0.05)]
        p_t: f64,
        #[arg(long, default_value_t = 0.05)]
        p_ccz: f64,
    },
    /// Hidden-shift circuits with a growing number of CSWAP pairs.
    BenchHiddenshift {
        #[arg(long, default_value_t = 20)]
        n: usize,
        /// Pair counts, e.g. `1..6` or `1,3,5`.
        #[arg(long, default_value = "1..6")]
        pairs: String,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Exact gradient variance of a parametrised circuit.
    Variance {
        /// Built-in ansatz: sim-circuit-1 to sim-circuit-4 or tree.
        #[arg(long, conflicts_with = "circuit", required_unless_present = "circuit")]
        ansatz: Option<String>,
        /// Circuit file in the simple format with `prx`, `pry`, `prz` lines.
        #[arg(long)]
        circuit: Option<PathBuf>,
        /// Qubit counts for a built-in ansatz, e.g. `4..16` or `4,8,16`.
        #[arg(long, default_value = "4")]
        n: String,
        #[arg(long, default_value_t = 1)]
        layers: usize,
        /// Differentiated parameter.
        #[arg(long, default_value_t = 0)]
        j: usize,
        /// Pauli string such as `ZZII`.
        #[arg(long)]
        observable: Option<String>,
        /// Also run the Monte-Carlo oracle with this many samples.
        #[arg(long)]
        mc_samples: Option<usize>,
    },
}

/// `a..b` (inclusive) and comma-separated values, mixed freely.
fn parse_list(s: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Input(format!("cannot parse list `{s}`"));
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once("..") {
            Some((a, b)) => {
                let a: usize = a.trim().parse().map_err(|_| bad())?;
                let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
                if a > b {
                    return Err(bad());
                }
                out.extend(a..=b);
            }
            None => out.push(part.parse().map_err(|_| bad())?),
        }
    }
    if out.is_empty() {
        return Err(bad());
    }
    Ok(out)
}

fn parse_bits(s: &str, n: usize, what: &str) -> Result<Vec<bool>, CliError> {
    if s.len() != n {
        return Err(CliError::Input(format!("{what} has {} bits but the circuit has {n} qubits", s.len())));
    }
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(CliError::Input(format!("{what} `{s}` is not a bitstring"))),
        })
        .collect()
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_owned(), source })
}

struct Ctx {
    common: Common,
    cfg: EngineConfig,
}

impl Ctx {
    fn emit(&self, value: serde_json::Value) -> Result<(), CliError> {
        if self.common.json {
            eprintln!("{value}");
        }
        if let Some(p) = &self.common.json_out {
            fs::write(p, serde_json::to_string_pretty(&value).expect("json") + "\n")?;
        }
        Ok(())
    }
}

fn simulate(
    ctx: &Ctx,
    file: &Path,
    format: FormatArg,
    mode: CczMode,
    input: Option<&str>,
    output: Option<&str>,
) -> Result<(), CliError> {
    let text = read(file)?;
    let format = match format {
        FormatArg::Auto => Format::detect(&text),
        FormatArg::Simple => Format::Simple,
        FormatArg::Qasm => Format::Qasm,
    };
    let c = parse(&text, format).map_err(|source| CliError::Parse { path: file.to_owned(), source })?;
    let d = to_zx(&c, mode);
    let d = if input.is_none() && output.is_none() {
        plug_plus_amplitude(&d)
    } else {
        let zeros = "0".repeat(c.n);
        let i = parse_bits(input.unwrap_or(&zeros), c.n, "input")?;
        let o = parse_bits(output.unwrap_or(&zeros), c.n, "output")?;
        plug_basis(&d, &i, &o)
    };
    let cfg = EngineConfig { rules: mode.rules(), ..ctx.cfg.clone() };
    let (v, stats) = contract(&d, &cfg)?;
    let z = v.to_complex();
    println!("{v}");
    println!("{:.15}{:+.15}i", z.re, z.im);
    log::info!("{} terms in {:.3}s", stats.terminal_terms, stats.wall_time.as_secs_f64());
    ctx.emit(json!({
        "file": file,
        "qubits": c.n,
        "gates": c.gates.len(),
        "mode": mode.name(),
        "value": v,
        "re": z.re,
        "im": z.im,
        "stats": stats,
    }))
}

fn print_csv(header: &str, rows: impl IntoIterator<Item = String>, notes: &[String]) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    out.write_all(ex::csv(header, rows, notes).as_bytes())?;
    Ok(())
}

fn bench_random(ctx: &Ctx, b: RandomBench) -> Result<(), CliError> {
    let rows = ex::bench_random(&b, &ctx.cfg, |r| {
        log::info!("circuit {} of {}: t_count {}", r.index + 1, b.count, r.t_count);
    })?;
    let fits = [CczMode::Triangles, CczMode::SevenT].map(|m| (m, ex::random_fit(&rows, m)));
    let notes: Vec<String> = fits.iter().map(|(m, f)| ex::fit_line(m.name(), *f)).collect();
    print_csv(ex::RANDOM_HEADER, rows.iter().map(ex::random_csv_row), &notes)?;
    ctx.emit(json!({ "bench": b, "rows": rows, "fits": {
        "triangles": fits[0].1, "seven_t": fits[1].1,
    }}))
}

fn bench_shift(ctx: &Ctx, b: ShiftBench) -> Result<(), CliError> {
    let rows = ex::bench_hidden_shift(&b, &ctx.cfg, |r| {
        log::info!("s={} instance {} {}: {:.3}s", r.pairs, r.index, r.outcome.mode, r.outcome.seconds);
    })?;
    let fits = [CczMode::Triangles, CczMode::SevenT].map(|m| (m, ex::shift_fit(&rows, m)));
    let notes: Vec<String> = fits.iter().map(|(m, f)| ex::fit_line(m.name(), *f)).collect();
    print_csv(ex::SHIFT_HEADER, rows.iter().map(ex::shift_csv_row), &notes)?;
    ctx.emit(json!({ "bench": b, "rows": rows, "fits": {
        "triangles": fits[0].1, "seven_t": fits[1].1,
    }}))
}

#[allow(clippy::too_many_arguments)]
fn variance(
    ctx: &Ctx,
    ansatz: Option<&str>,
    circuit: Option<&Path>,
    ns: &str,
    layers: usize,
    j: usize,
    observable: Option<&str>,
    mc: Option<usize>,
) -> Result<(), CliError> {
    let h: Option<PauliObservable> = observable.map(str::parse).transpose()?;
    let cases: Vec<(String, AnsatzIR)> = match (ansatz, circuit) {
        (_, Some(path)) => {
            let a = AnsatzIR::parse(&read(path)?).map_err(|e| match e {
                VarianceError::Parse(source) => CliError::Parse { path: path.to_owned(), source },
                e => e.into(),
            })?;
            let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            vec![(name, a)]
        }
        (Some(name), None) => parse_list(ns)?
            .into_iter()
            .map(|n| Ok((name.to_string(), AnsatzIR::builtin(name, n, layers)?)))
            .collect::<Result<_, VarianceError>>()?,
        (None, None) => return Err(CliError::Input("give --ansatz or --circuit".into())),
    };
    let mut header = ex::VARIANCE_HEADER.to_string();
    if mc.is_some() {
        header.push_str(",mc_variance,mc_stderr");
    }
    let mut lines = Vec::new();
    let mut records = Vec::new();
    for (name, a) in &cases {
        let h = h.clone().unwrap_or_else(|| ex::default_observable(name, a.n));
        let row = ex::variance_point(name, a, &h, layers, j, &ctx.cfg)?;
        let mut line = ex::variance_csv_row(&row);
        let est = match mc {
            Some(samples) => {
                let e = mc_variance_oracle(a, &h, j, samples, ctx.common.seed)?;
                line.push_str(&format!(",{:.12e},{:.12e}", e.variance, e.variance_stderr));
                Some(e)
            }
            None => None,
        };
        log::info!("{name} n={}: {:.6e}", a.n, row.variance);
        lines.push(line);
        records.push(json!({ "observable": h.to_string(), "row": row, "mc": est }));
    }
    print_csv(&header, lines, &[])?;
    ctx.emit(json!({ "rows": records }))
}

fn run(cli: Cli) -> Result<(), CliError> {
    if cli.common.workers == 0 {
        return Err(CliError::Input("--workers must be at least 1".into()));
    }
    let timeout = match (&cli.cmd, cli.common.timeout) {
        (_, Some(t)) => t,
        (Cmd::BenchRandom { .. } | Cmd::BenchHiddenshift { .. }, None) => 300.0,
        (_, None) => 0.0,
    };
    if !timeout.is_finite() {
        return Err(CliError::Input("--timeout must be finite".into()));
    }
    let cfg = EngineConfig { workers: cli.common.workers, timeout: ex::timeout_secs(timeout), ..Default::default() };
    let seed = cli.common.seed;
    let ctx = Ctx { common: cli.common, cfg };
    match cli.cmd {
        Cmd::Simulate { file, format, mode, input, output } => {
            simulate(&ctx, &file, format, mode.into(), input.as_deref(), output.as_deref())
        }
        Cmd::BenchRandom { n, count, min_gates, max_gates, p_t, p_ccz } => {
            bench_random(&ctx, RandomBench { n, count, min_gates, max_gates, p_t, p_ccz, seed })
        }
        Cmd::BenchHiddenshift { n, pairs, count } => {
            bench_shift(&ctx, ShiftBench { n, pairs: parse_list(&pairs)?, count, seed })
        }
        Cmd::Variance { ansatz, circuit, n, layers, j, observable, mc_samples } => variance(
            &ctx,
            ansatz.as_deref(),
            circuit.as_deref(),
            &n,
            layers,
            j,
            observable.as_deref(),
            mc_samples,
        ),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists() {
        assert_eq!(parse_list("1..4").unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(parse_list("4,8, 16").unwrap(), vec![4, 8, 16]);
        assert_eq!(parse_list("1..=2,5").unwrap(), vec![1, 2, 5]);
        assert!(parse_list("3..1").is_err());
        assert!(parse_list("x").is_err());
    }

    #[test]
    fn bits() {
        assert_eq!(parse_bits("01", 2, "input").unwrap(), vec![false, true]);
        assert!(parse_bits("012", 3, "input").is_err());
        assert!(parse_bits("0", 2, "input").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::from(EngineError::Timeout(Default::default())).code(), 3);
        assert_eq!(CliError::Input(String::new()).code(), 2);
        let e = VarianceError::Engine(EngineError::Timeout(Default::default()));
        assert_eq!(CliError::from(e).code(), 3);
    }

    #[test]
    fn cli_shape() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
