use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gotzmann::chern::check_chern_bound;
use gotzmann::lex::{lexify, saturated_lex_ideal, saturated_lex_module, HilbertFunctionSpec};
use gotzmann::numpoly::{
    adjusted_gotzmann_rep, gotzmann_rep, grassmannian_embedding_dims, GotzmannMode, GotzmannRep,
};
use gotzmann::resolution::{koszul_betti, regularity, RegularityOf};
use gotzmann::theorems::{self, CheckReport, GasharovKind, Tally};
use gotzmann::{
    green_transform, macaulay_rep, macaulay_transform, GradedFreeModule, MonomialSubmodule, NumPoly,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "gotzmann", version, about = "Macaulay, Green and Gotzmann bounds for monomial submodules")]
struct Cli {
    /// Seed for random hyperplanes and generated instances.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Hyperplane samples; the minimum over samples is reported.
    #[arg(long, global = true, default_value_t = 3)]
    samples: usize,
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    #[arg(long, global = true)]
    text: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// d-th Macaulay representation of A.
    MacaulayRep { a: BigInt, d: u32 },
    /// A^<d>.
    MacaulayTransform { a: BigInt, d: u32 },
    /// A_<d>.
    GreenTransform { a: BigInt, d: u32 },
    GotzmannRep {
        #[arg(long)]
        poly: String,
    },
    GotzmannNumber {
        #[arg(long)]
        poly: String,
    },
    /// Rank-and-degree adjusted Gotzmann representation.
    AdjustedRep {
        #[arg(long)]
        poly: String,
        /// Module or module shape supplying n and the generator degrees.
        #[arg(long)]
        module: String,
        #[arg(long)]
        rank: usize,
    },
    Hilbert(HilbertArgs),
    Saturate {
        #[arg(long)]
        module: String,
    },
    Rank {
        #[arg(long)]
        module: String,
    },
    /// Free part and ρ_d of H(F/N, d).
    Rho {
        #[arg(long)]
        module: String,
        #[arg(long, allow_hyphen_values = true)]
        degree: i64,
    },
    Lexify {
        #[arg(long)]
        module_shape: String,
        #[arg(long)]
        hf: String,
    },
    LexIdeal {
        #[arg(long)]
        gotzmann: String,
        #[arg(long)]
        n: u32,
    },
    LexModule {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        module_shape: String,
        #[arg(long)]
        rank: usize,
    },
    Betti {
        #[arg(long)]
        module: String,
        /// Betti numbers of N rather than F/N.
        #[arg(long)]
        submodule: bool,
    },
    Regularity {
        #[arg(long)]
        module: String,
        #[arg(long)]
        submodule: bool,
    },
    /// Run a checker; prints one JSON report per line.
    #[command(subcommand)]
    Check(Check),
    QuotDims {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        module_shape: String,
        #[arg(long)]
        rank: usize,
        #[arg(long, value_enum)]
        mode: Mode,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct HilbertWhat {
    /// H(F/N, d) for D0 ≤ d ≤ D1.
    #[arg(long, num_args = 2, value_names = ["D0", "D1"], allow_hyphen_values = true)]
    function: Option<Vec<i64>>,
    #[arg(long)]
    series: bool,
    #[arg(long)]
    polynomial: bool,
    /// Least degree from which H agrees with the Hilbert polynomial.
    #[arg(long)]
    stabilize: bool,
}

#[derive(Args)]
struct HilbertArgs {
    #[arg(long)]
    module: String,
    #[command(flatten)]
    what: HilbertWhat,
}

#[derive(Args)]
struct Degrees {
    #[arg(long, allow_hyphen_values = true)]
    degree: i64,
    /// Repeat the check for every degree up to this one.
    #[arg(long, allow_hyphen_values = true)]
    to: Option<i64>,
}

impl Degrees {
    fn range(&self) -> std::ops::RangeInclusive<i64> {
        self.degree..=self.to.unwrap_or(self.degree)
    }
}

#[derive(Subcommand)]
enum Check {
    Macaulay {
        #[arg(long)]
        module: String,
        #[command(flatten)]
        degrees: Degrees,
    },
    Green {
        #[arg(long)]
        module: String,
        #[command(flatten)]
        degrees: Degrees,
    },
    Persistence {
        #[arg(long)]
        module: String,
        #[command(flatten)]
        degrees: Degrees,
        #[arg(long, default_value_t = 1)]
        horizon: u32,
    },
    Regularity {
        #[arg(long)]
        module: String,
    },
    Sharpness {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        module_shape: String,
        #[arg(long)]
        rank: usize,
    },
    Gasharov {
        #[arg(long)]
        module: String,
        #[command(flatten)]
        degrees: Degrees,
        #[arg(long, default_value_t = 0)]
        p: u32,
        #[arg(long, value_enum, default_value_t = Kind::Macaulay)]
        kind: Kind,
    },
    Chern {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        module_shape: String,
        #[arg(long)]
        rank: u32,
    },
    /// Every module checker over seeded random submodules.
    Sweep {
        #[arg(long, default_value_t = 20)]
        instances: u64,
        #[arg(long, default_value_t = 6)]
        width: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Macaulay,
    Green,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Standard,
    Adjusted,
}

/// Result of a subcommand: a JSON value, or a stream of check reports.
enum Output {
    Value(Value),
    Reports(Vec<CheckReport>),
}

/// Reads a JSON argument: inline when it starts with `{` or `[`, else a file.
fn load<T: serde::de::DeserializeOwned>(flag: &str, arg: &str) -> anyhow::Result<T> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        arg.to_string()
    } else {
        std::fs::read_to_string(Path::new(arg)).with_context(|| format!("--{flag}: cannot read {arg}"))?
    };
    serde_json::from_str(&text).map_err(|e| anyhow!("--{flag}: {e}"))
}

fn int(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(x) => json!(x),
        Err(_) => json!(v.to_string()),
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

fn load_gotzmann(arg: &str) -> anyhow::Result<GotzmannRep> {
    let v: Value = load("gotzmann", arg)?;
    let v = if v.is_array() { json!({ "a": v }) } else { v };
    serde_json::from_value(v).map_err(|e| anyhow!("--gotzmann: {e}"))
}

fn check_ad(a: &BigInt, d: u32) -> anyhow::Result<u32> {
    if a.sign() == num_bigint::Sign::Minus {
        bail!("A: must be ≥ 0, got {a}");
    }
    if d == 0 {
        bail!("D: must be ≥ 1");
    }
    Ok(d)
}

fn run(cli: &Cli) -> anyhow::Result<Output> {
    let (seed, samples) = (cli.seed, cli.samples);
    let value = match &cli.cmd {
        Cmd::MacaulayRep { a, d } => {
            check_ad(a, *d)?;
            let rep = macaulay_rep(a, *d);
            json!({ "rep": to_value(&rep), "display": rep.to_string() })
        }
        Cmd::MacaulayTransform { a, d } => int(&macaulay_transform(a, check_ad(a, *d)?)),
        Cmd::GreenTransform { a, d } => int(&green_transform(a, check_ad(a, *d)?)),
        Cmd::GotzmannRep { poly } => {
            let g = gotzmann_rep(&load::<NumPoly>("poly", poly)?)?;
            json!({ "a": g.a, "s": g.len(), "display": g.to_string() })
        }
        Cmd::GotzmannNumber { poly } => json!(gotzmann_rep(&load::<NumPoly>("poly", poly)?)?.len()),
        Cmd::AdjustedRep { poly, module, rank } => {
            let f: GradedFreeModule = load("module", module)?;
            let adj = adjusted_gotzmann_rep(&load("poly", poly)?, f.n, f.degrees(), *rank)?;
            json!({
                "free_degrees": adj.free_degrees,
                "q": adj.q.a,
                "adjusted_number": adj.adjusted_number(),
                "display": format!("free {:?} + {}", adj.free_degrees, adj.q),
            })
        }
        Cmd::Hilbert(h) => {
            let n: MonomialSubmodule = load("module", &h.module)?;
            let w = &h.what;
            if let Some(range) = &w.function {
                let values: Vec<Value> = (range[0]..=range[1]).map(|d| json!([d, int(&n.hf_direct(d))])).collect();
                json!({ "values": values })
            } else if w.series {
                to_value(&n.hilbert_series()?)
            } else if w.polynomial {
                let p = n.hilbert_polynomial()?;
                json!({ "poly": to_value(&p), "display": p.to_string() })
            } else {
                json!({ "stabilization_degree": n.stabilization_degree()? })
            }
        }
        Cmd::Saturate { module } => to_value(&load::<MonomialSubmodule>("module", module)?.saturate()),
        Cmd::Rank { module } => json!(load::<MonomialSubmodule>("module", module)?.rank()),
        Cmd::Rho { module, degree } => {
            let n: MonomialSubmodule = load("module", module)?;
            let (free, rho) = n.adjusted_hf_decomposition(*degree)?;
            json!({ "free_part": int(&free), "rho": int(&rho) })
        }
        Cmd::Lexify { module_shape, hf } => {
            let f: GradedFreeModule = load("module-shape", module_shape)?;
            let h: HilbertFunctionSpec = load("hf", hf)?;
            to_value(&lexify(&f, &h)?)
        }
        Cmd::LexIdeal { gotzmann, n } => {
            let i = saturated_lex_ideal(&load_gotzmann(gotzmann)?, *n)?;
            let gens: Vec<String> = i.gens().iter().map(ToString::to_string).collect();
            json!({ "gens": gens })
        }
        Cmd::LexModule { poly, module_shape, rank } => {
            let f: GradedFreeModule = load("module-shape", module_shape)?;
            to_value(&saturated_lex_module(&load("poly", poly)?, &f, *rank)?)
        }
        Cmd::Betti { module, submodule } => {
            to_value(&koszul_betti(&load("module", module)?, !*submodule))
        }
        Cmd::Regularity { module, submodule } => {
            let of = if *submodule { RegularityOf::Submodule } else { RegularityOf::Quotient };
            json!(regularity(&load("module", module)?, of)?)
        }
        Cmd::QuotDims { poly, module_shape, rank, mode } => {
            let f: GradedFreeModule = load("module-shape", module_shape)?;
            let mode = match mode {
                Mode::Standard => GotzmannMode::Standard,
                Mode::Adjusted => GotzmannMode::Adjusted,
            };
            to_value(&grassmannian_embedding_dims(&load("poly", poly)?, f.n, f.degrees(), *rank, mode)?)
        }
        Cmd::Check(c) => return check(c, seed, samples),
    };
    Ok(Output::Value(value))
}

fn check(c: &Check, seed: u64, samples: usize) -> anyhow::Result<Output> {
    let reports = match c {
        Check::Macaulay { module, degrees } => {
            let n: MonomialSubmodule = load("module", module)?;
            degrees.range().map(|d| theorems::check_macaulay_adjusted(&n, d)).collect::<Result<_, _>>()?
        }
        Check::Green { module, degrees } => {
            let n: MonomialSubmodule = load("module", module)?;
            degrees
                .range()
                .map(|d| theorems::check_green_adjusted(&n, d, samples, seed))
                .collect::<Result<_, _>>()?
        }
        Check::Persistence { module, degrees, horizon } => {
            let n: MonomialSubmodule = load("module", module)?;
            degrees
                .range()
                .map(|d| theorems::check_persistence_adjusted(&n, d, *horizon))
                .collect::<Result<_, _>>()?
        }
        Check::Regularity { module } => {
            vec![theorems::check_gotzmann_regularity_adjusted(&load("module", module)?)?]
        }
        Check::Sharpness { poly, module_shape, rank } => {
            let f: GradedFreeModule = load("module-shape", module_shape)?;
            vec![theorems::check_sharpness(&load("poly", poly)?, &f, *rank)?]
        }
        Check::Gasharov { module, degrees, p, kind } => {
            let n: MonomialSubmodule = load("module", module)?;
            let kind = match kind {
                Kind::Macaulay => GasharovKind::Macaulay,
                Kind::Green => GasharovKind::Green,
            };
            degrees
                .range()
                .map(|d| theorems::check_gasharov(&n, d, *p, kind, samples, seed))
                .collect::<Result<_, _>>()?
        }
        Check::Chern { poly, module_shape, rank } => {
            let f: GradedFreeModule = load("module-shape", module_shape)?;
            let r = check_chern_bound(&load("poly", poly)?, f.n, *rank, f.degrees())?;
            let violated = r.is_violation();
            let v = json!({
                "c1": r.context["c1"],
                "c2": r.context["c2"],
                "bound_holds": !violated,
                "sharp": r.verdict == theorems::Verdict::Sharp,
                "report": to_value(&r),
            });
            if violated {
                return Ok(Output::Reports(vec![r]));
            }
            return Ok(Output::Value(v));
        }
        Check::Sweep { instances, width } => {
            let mut tally = Tally::default();
            let mut bad = Vec::new();
            for i in 0..*instances {
                let n = theorems::random_submodule(3, 3, 5, 5, seed.wrapping_add(i));
                let (t, v) = theorems::sweep_module(&n, *width, seed.wrapping_add(i));
                tally.merge(&t);
                bad.extend(v);
            }
            eprintln!("{}", to_value(&tally));
            bad
        }
    };
    Ok(Output::Reports(reports))
}

/// Plain-text rendering of the same content as the JSON output.
fn text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}: {s}"),
                other => format!("{k}: {other}"),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        other => other.to_string(),
    }
}

fn report_text(r: &CheckReport) -> String {
    let verdict = serde_json::to_value(r.verdict).expect("serializes");
    format!(
        "{} {} lhs={} rhs={} {}",
        r.name,
        verdict.as_str().unwrap_or_default(),
        r.bound_lhs,
        r.bound_rhs,
        Value::Object(r.context.clone())
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Ok(Output::Value(v)) => {
            println!("{}", if cli.text { text(&v) } else { v.to_string() });
            ExitCode::SUCCESS
        }
        Ok(Output::Reports(rs)) => {
            for r in &rs {
                println!("{}", if cli.text { report_text(r) } else { r.to_json_line() });
            }
            if rs.iter().any(CheckReport::is_violation) {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
    }
}
