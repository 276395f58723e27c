use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use edet_core::combinatorics::GammaAssignment;
use edet_core::engines::{determinant, identity_residual_with, singularity_check_with, DetMethod};
use edet_core::verification::search::{search_counterexample, Claim, SearchOutcome};
use edet_core::verification::suites::{run_property_suite, PropertyReport, Suite};
use edet_core::verification::{bench, measure, Witness};
use edet_core::Ring;
use serde_json::{json, Value};

use crate::args::{BenchArgs, CheckArgs, DetArgs, GammaArgs, SearchArgs, SuiteArgs};
use crate::error::{CliError, CliResult};
use crate::matrix_file::{read_json, write_text, MatrixFile};
use crate::rings::{dispatch, RingSpec, RingTask};

pub const BENCH_CAP: usize = 7;

/// What a subcommand prints and the status it exits with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn parse_method(s: &str) -> CliResult<DetMethod> {
    s.parse().map_err(|_| CliError::Input(format!("unknown method `{s}`")))
}

fn load_matrix(path: &Path) -> CliResult<(MatrixFile, RingSpec, Option<PathBuf>)> {
    let file = MatrixFile::read(path)?;
    let spec = file.spec()?;
    let base = path.parent().map(Path::to_path_buf);
    Ok((file, spec, base))
}

enum GammaInput {
    Zero,
    Constant(Value),
    Seeded(u64),
    Explicit(Value),
}

impl GammaInput {
    fn from_args(g: &GammaArgs) -> CliResult<Self> {
        if let Some(text) = &g.gamma_constant {
            let v = serde_json::from_str(text).unwrap_or_else(|_| Value::String(text.clone()));
            return Ok(GammaInput::Constant(v));
        }
        if let Some(seed) = g.gamma_seed {
            return Ok(GammaInput::Seeded(seed));
        }
        if let Some(path) = &g.gamma_file {
            return Ok(GammaInput::Explicit(read_json(path)?));
        }
        Ok(GammaInput::Zero)
    }

    fn resolve<R: Ring>(&self, ring: &R) -> CliResult<GammaAssignment<R::Elem>> {
        Ok(match self {
            GammaInput::Zero => GammaAssignment::Zero,
            GammaInput::Constant(v) => GammaAssignment::Constant(ring.decode(v)?),
            GammaInput::Seeded(s) => GammaAssignment::Seeded(*s),
            GammaInput::Explicit(v) => {
                let items = v
                    .as_array()
                    .ok_or_else(|| CliError::Input("gamma file must hold a JSON array".into()))?;
                GammaAssignment::Explicit(items.iter().map(|x| ring.decode(x)).collect::<Result<_, _>>()?)
            }
        })
    }
}

struct DetTask {
    file: MatrixFile,
    method: DetMethod,
    gamma: GammaInput,
    count_ops: bool,
    workers: usize,
}

impl RingTask for DetTask {
    type Output = Outcome;

    fn run<R: Ring>(self, ring: &R) -> CliResult<Outcome> {
        let a = self.file.decode(ring)?;
        let gamma = self.gamma.resolve(ring)?;
        if self.count_ops {
            let (value, report) = measure(ring, self.method, &a, &gamma, self.workers)?;
            let mut out = ring.render(&value);
            out.push('\n');
            out.push_str(&pretty(&report.to_json()));
            return Ok(Outcome::ok(out));
        }
        let value = determinant(ring, &a, self.method, &gamma, self.workers)?;
        Ok(Outcome::ok(format!("{}\n", ring.render(&value))))
    }
}

pub fn det(args: &DetArgs, workers: usize) -> CliResult<Outcome> {
    let (file, spec, base) = load_matrix(&args.input)?;
    let task = DetTask {
        file,
        method: parse_method(&args.method)?,
        gamma: GammaInput::from_args(&args.gamma)?,
        count_ops: args.count_ops,
        workers,
    };
    dispatch(&spec, base.as_deref(), task)
}

struct CheckTask {
    file: MatrixFile,
    corollary: u8,
    workers: usize,
}

impl RingTask for CheckTask {
    type Output = Outcome;

    fn run<R: Ring>(self, ring: &R) -> CliResult<Outcome> {
        let d = ring.descriptor();
        if !d.is_commutative {
            return Err(edet_core::Error::RingNotCommutative(d.name.clone()).into());
        }
        let a = self.file.decode(ring)?;
        let n = a.order();
        if self.corollary == 1 {
            let residuals = (1..n as u32)
                .map(|t| identity_residual_with(ring, &a, t, self.workers).map(|r| ring.render(&r)))
                .collect::<Result<Vec<_>, _>>()?;
            let listing = if residuals.is_empty() {
                "none".to_string()
            } else {
                residuals.join(", ")
            };
            return Ok(Outcome::ok(format!("residuals: {listing}\n")));
        }
        let v = singularity_check_with(ring, &a, self.workers)?;
        Ok(Outcome::ok(format!(
            "{}\nfull difference: {}\nsubdiagonal difference: {}\n",
            if v.singular { "singular" } else { "nonsingular" },
            ring.render(&v.full_difference),
            ring.render(&v.sub_difference),
        )))
    }
}

pub fn check(args: &CheckArgs, workers: usize) -> CliResult<Outcome> {
    let (file, spec, base) = load_matrix(&args.input)?;
    let task = CheckTask {
        file,
        corollary: args.corollary,
        workers,
    };
    dispatch(&spec, base.as_deref(), task)
}

struct BenchTask {
    method: DetMethod,
    orders: std::ops::RangeInclusive<usize>,
    trials: usize,
    seed: u64,
    workers: usize,
}

fn ratio_cell(r: Option<f64>) -> String {
    r.map_or_else(|| "-".to_string(), |r| format!("{r:.4}"))
}

impl RingTask for BenchTask {
    type Output = (String, Value);

    fn run<R: Ring>(self, ring: &R) -> CliResult<(String, Value)> {
        let rows = bench(ring, self.method, self.orders, self.seed, self.trials, self.workers)?;
        let mut table = String::new();
        writeln!(
            table,
            "{:>2}  {:>10}  {:>10}  {:>7}  {:>10}  {:>10}  {:>7}  {:>7}  {:>10}  {:>6}",
            "n", "add+sub", "predicted", "ratio", "mul", "predicted", "ratio", "curve", "in-pow", "stable"
        )
        .unwrap();
        for row in &rows {
            let r = &row.report;
            let c = &r.counts;
            writeln!(
                table,
                "{:>2}  {:>10}  {:>10}  {:>7}  {:>10}  {:>10}  {:>7}  {:>7}  {:>10}  {:>6}",
                r.n,
                c.additions + c.subtractions,
                r.predicted_additions,
                ratio_cell(r.addition_ratio()),
                c.multiplications,
                r.predicted_multiplications,
                ratio_cell(r.multiplication_ratio()),
                ratio_cell(r.reference_multiplication_ratio()),
                c.multiplications_inside_pow,
                if row.counts_stable { "yes" } else { "no" },
            )
            .unwrap();
        }
        let json = Value::Array(
            rows.iter()
                .map(|row| {
                    let mut v = row.report.to_json();
                    v["trials"] = json!(row.trials.to_string());
                    v["counts_stable"] = json!(row.counts_stable);
                    v
                })
                .collect(),
        );
        Ok((table, json))
    }
}

pub fn bench_cmd(args: &BenchArgs, seed: u64, workers: usize) -> CliResult<Outcome> {
    if args.from == 0 || args.from > args.to {
        return Err(CliError::Input(format!("empty order range {}..={}", args.from, args.to)));
    }
    if args.to > BENCH_CAP && !args.force {
        return Err(CliError::BenchCap {
            n: args.to,
            max: BENCH_CAP,
        });
    }
    let spec: RingSpec = args.ring.parse()?;
    let task = BenchTask {
        method: parse_method(&args.method)?,
        orders: args.from..=args.to,
        trials: args.trials,
        seed,
        workers,
    };
    let (table, json) = dispatch(&spec, None, task)?;
    if let Some(path) = &args.json {
        write_text(path, &pretty(&json))?;
    }
    Ok(Outcome::ok(table))
}

/// Witness JSON with each input matrix written as a standalone matrix file.
fn witness_json(w: &Witness) -> Value {
    let mut v = w.to_json();
    let files: serde_json::Map<String, Value> = w
        .matrices
        .iter()
        .map(|(name, entries)| {
            let file = MatrixFile {
                ring: w.ring.clone(),
                n: w.n,
                entries: entries.clone(),
            };
            (name.clone(), file.to_json())
        })
        .collect();
    v["matrices"] = Value::Object(files);
    v
}

struct SearchTask {
    claim: Claim,
    n: usize,
    seed: u64,
    max_trials: u64,
    workers: usize,
}

impl RingTask for SearchTask {
    type Output = (Value, bool);

    fn run<R: Ring>(self, ring: &R) -> CliResult<(Value, bool)> {
        let outcome = search_counterexample(ring, self.claim, self.n, self.seed, self.max_trials, self.workers)?;
        Ok(match outcome {
            SearchOutcome::Found { trial, witness } => (
                json!({
                    "outcome": "witness",
                    "claim": self.claim.as_str(),
                    "trial": trial.to_string(),
                    "witness": witness_json(&witness),
                }),
                true,
            ),
            SearchOutcome::Exhausted { trials } => (
                json!({
                    "outcome": "exhausted",
                    "claim": self.claim.as_str(),
                    "ring": ring.name(),
                    "n": self.n,
                    "seed": self.seed.to_string(),
                    "trials": trials.to_string(),
                }),
                false,
            ),
        })
    }
}

pub fn search(args: &SearchArgs, seed: u64, workers: usize) -> CliResult<Outcome> {
    let claim: Claim = args
        .claim
        .parse()
        .map_err(|_| CliError::Input(format!("unknown claim `{}`", args.claim)))?;
    let spec: RingSpec = args.ring.parse()?;
    let task = SearchTask {
        claim,
        n: args.n,
        seed,
        max_trials: args.max_trials,
        workers,
    };
    let (json, found) = dispatch(&spec, None, task)?;
    let text = pretty(&json);
    if let Some(path) = &args.output {
        write_text(path, &text)?;
    }
    Ok(Outcome {
        stdout: text,
        code: if found { 0 } else { 1 },
    })
}

struct SuiteTask {
    suite: Suite,
    n: usize,
    trials: u64,
    seed: u64,
    workers: usize,
}

impl RingTask for SuiteTask {
    type Output = Vec<PropertyReport>;

    fn run<R: Ring>(self, ring: &R) -> CliResult<Vec<PropertyReport>> {
        Ok(run_property_suite(ring, self.suite, self.n, self.trials, self.seed, self.workers)?)
    }
}

pub fn suite(args: &SuiteArgs, seed: u64, workers: usize) -> CliResult<Outcome> {
    let suite: Suite = args
        .suite
        .parse()
        .map_err(|_| CliError::Input(format!("unknown suite `{}`", args.suite)))?;
    let spec: RingSpec = args.ring.parse()?;
    let task = SuiteTask {
        suite,
        n: args.n,
        trials: args.trials,
        seed,
        workers,
    };
    let reports = dispatch(&spec, None, task)?;
    let mut text = String::new();
    for r in &reports {
        writeln!(
            text,
            "{:<26} {} n={} trials={} failures={} expected={} {}",
            r.property,
            r.ring,
            r.n,
            r.trials,
            r.failures,
            r.expectation.as_str(),
            if r.meets_expectation() { "ok" } else { "MISMATCH" },
        )
        .unwrap();
    }
    if let Some(path) = &args.output {
        let json = Value::Array(
            reports
                .iter()
                .map(|r| {
                    let mut v = r.to_json();
                    if let Some(w) = &r.witness {
                        v["witness"] = witness_json(w);
                    }
                    v
                })
                .collect(),
        );
        write_text(path, &pretty(&json))?;
    }
    let all_met = reports.iter().all(PropertyReport::meets_expectation);
    Ok(Outcome {
        stdout: text,
        code: if all_met { 0 } else { 1 },
    })
}
