//! Command-line front end: generate sets, evaluate their discrepancy, run
//! verification suites and scaling sweeps, and render SVG figures.

mod domain_spec;
mod manifest;
mod svg;
mod verify;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crofton::construct::{disk_construction, steinhaus_clip, steinhaus_for_length};
use crofton::discrepancy::{
    scaling_study, sup_discrepancy_mc, sup_discrepancy_scan, EvaluatorConfig,
};
use crofton::search::{self, SearchConfig};
use crofton::{DiscrepancyReport, Line, RectifiableSet, SteinhausParams};

use domain_spec::{parse_domain, parse_length_list};
use manifest::RunManifest;

const EXIT_VERIFY_FAILED: u8 = 3;
const EXIT_RESOURCE_LIMIT: u8 = 4;

#[derive(Parser)]
#[command(
    name = "crofton",
    version,
    about = "Construct and evaluate low-discrepancy line sets in convex domains",
    after_help = "\
Exit codes:
  0  success (and all verification checks passed)
  1  runtime error (I/O, invalid input, degenerate-only evaluation)
  2  command-line usage error
  3  verification suite failed
  4  resource limit exceeded

Domain specs: disk[:r[:cx,cy]] | square:side[:cx,cy] | polygon:x1,y1;x2,y2;... | reuleaux:width[:cx,cy[,rot]]
The default thread cap comes from CROFTON_THREADS when --threads is not given."
)]
struct Cli {
    /// Cap worker parallelism (default: CROFTON_THREADS or all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a set and write it as JSON.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Evaluate the sup deviation of a set file against a domain.
    Eval(EvalArgs),
    /// Run a named verification suite and print a JSON summary of margins.
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
    /// Parameter sweeps; `scaling` sweeps the length and fits the exponent.
    Scan(ScanArgs),
    /// Render a set (and optional witness line) to SVG.
    Render(RenderArgs),
    /// Local search for a low-discrepancy segment set.
    Optimize(OptimizeArgs),
}

#[derive(Subcommand)]
enum GenKind {
    /// Steinhaus overlay clipped to the domain: n directions, spacing eps.
    Steinhaus {
        /// Number of directions (requires --eps).
        #[arg(long)]
        n: Option<u32>,
        /// Translate spacing (requires --n).
        #[arg(long)]
        eps: Option<f64>,
        /// Target length; picks n = round(L^(1/3)), eps = 1/round(L^(2/3)).
        #[arg(long = "L")]
        length: Option<f64>,
        #[arg(long, default_value = "disk")]
        domain: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Concentric circles in the unit disk with total length exactly L.
    DiskCircles {
        #[arg(long = "L")]
        length: f64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long)]
    set: PathBuf,
    #[arg(long, default_value = "disk")]
    domain: String,
    /// scan (deterministic, certified gap) or mc (sampled lower bound).
    #[arg(long, default_value = "scan")]
    method: String,
    #[arg(long, default_value_t = 4096)]
    theta_count: usize,
    #[arg(long, default_value_t = 1_000_000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also write the report JSON here (stdout always gets it).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum VerifySuite {
    /// Quadrature identities: count integral = 4L, chord integral = 2 pi area.
    Crofton {
        #[arg(long, default_value_t = 2048)]
        resolution: usize,
        #[arg(long, default_value_t = 50)]
        sets: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Scaling inequality between factor error and measured deviation bound.
    Proposition {
        #[arg(long, default_value_t = 1024)]
        theta_count: usize,
    },
    /// Fourier identity and the global |sin|-sum deviation bound.
    Harmonic {
        #[arg(long, default_value_t = 10_000)]
        theta_samples: u32,
        #[arg(long, default_value_t = 1000)]
        terms: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Uniform boundedness of the concentric-circle construction.
    Theorem1 {
        /// Comma-separated lengths.
        #[arg(long = "L", default_value = "100,500,1000,5000")]
        lengths: String,
        #[arg(long, default_value_t = 4096)]
        theta_count: usize,
    },
    /// Longimeter relative-error extremes.
    Longimeter {
        #[arg(long, default_value_t = 6)]
        n: u32,
    },
}

#[derive(Args)]
struct ScanArgs {
    /// Study name; only `scaling` exists.
    study: String,
    /// Comma-separated lengths, e.g. 1e3,1e4,1e5.
    #[arg(long = "L")]
    lengths: String,
    #[arg(long, default_value = "disk")]
    domain: String,
    #[arg(long, default_value_t = 4096)]
    theta_count: usize,
    /// Use Monte Carlo with this many samples instead of the scan.
    #[arg(long)]
    mc_samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// csv or json.
    #[arg(long, default_value = "csv")]
    format: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long)]
    set: PathBuf,
    #[arg(long, default_value = "disk")]
    domain: String,
    #[arg(long)]
    out: PathBuf,
    /// Witness line to highlight, as `theta,offset`.
    #[arg(long)]
    witness: Option<String>,
    /// Pull the witness from an eval report JSON instead.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, default_value_t = 1.0)]
    stroke_width: f64,
    #[arg(long, default_value_t = 800.0)]
    width_px: f64,
}

#[derive(Args)]
struct OptimizeArgs {
    #[arg(long, default_value = "disk")]
    domain: String,
    #[arg(long, default_value_t = 200)]
    segments: usize,
    #[arg(long = "L", default_value_t = 100.0)]
    length: f64,
    #[arg(long, default_value_t = 2000)]
    iterations: usize,
    #[arg(long, default_value_t = 0.05)]
    scale: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// `mc:SAMPLES` or `scan:THETA_COUNT`.
    #[arg(long, default_value = "mc:4096")]
    evaluator: String,
    /// `greedy` or `sa:T0,COOLING`.
    #[arg(long, default_value = "greedy")]
    schedule: String,
    #[arg(long, default_value_t = 1024)]
    certify_theta_count: usize,
    #[arg(long)]
    out: PathBuf,
    /// Optimization trace as JSON lines.
    #[arg(long)]
    history: Option<PathBuf>,
    /// Final certification report JSON.
    #[arg(long)]
    report: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli
        .threads
        .or_else(|| std::env::var("CROFTON_THREADS").ok()?.parse().ok())
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            if matches!(
                err.downcast_ref::<crofton::Error>(),
                Some(crofton::Error::ResourceLimit(_))
            ) {
                ExitCode::from(EXIT_RESOURCE_LIMIT)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Gen { kind } => cmd_gen(kind),
        Command::Eval(args) => cmd_eval(args),
        Command::Verify { suite } => cmd_verify(suite),
        Command::Scan(args) => cmd_scan(args),
        Command::Render(args) => cmd_render(args),
        Command::Optimize(args) => cmd_optimize(args),
    }
}

fn write_set(set: &RectifiableSet, out: &Path, manifest: RunManifest) -> Result<()> {
    std::fs::write(out, set.to_json()?).with_context(|| format!("writing {}", out.display()))?;
    manifest.output(out).write_beside(out)?;
    eprintln!(
        "wrote {} ({} primitives, total length {:.6})",
        out.display(),
        set.primitives.len(),
        set.total_length
    );
    Ok(())
}

fn cmd_gen(kind: GenKind) -> Result<ExitCode> {
    match kind {
        GenKind::Steinhaus {
            n,
            eps,
            length,
            domain,
            out,
        } => {
            let dom = parse_domain(&domain)?;
            let (params, set) = match (n, eps, length) {
                (Some(n), Some(eps), None) => {
                    let params = SteinhausParams::new(n, eps)?;
                    (params, steinhaus_clip(params, &dom)?)
                }
                (None, None, Some(l)) => steinhaus_for_length(l, &dom)?,
                _ => bail!("give either --n with --eps, or --L alone"),
            };
            let config = json!({
                "kind": "steinhaus",
                "n": params.n,
                "epsilon": params.epsilon,
                "target_length": length,
                "realized_length": set.total_length,
                "domain": domain,
            });
            write_set(&set, &out, RunManifest::new("gen steinhaus", config, vec![]))?;
            Ok(ExitCode::SUCCESS)
        }
        GenKind::DiskCircles { length, out } => {
            let set = disk_construction(length)?;
            let config = json!({"kind": "disk-circles", "target_length": length});
            write_set(&set, &out, RunManifest::new("gen disk-circles", config, vec![]))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn read_set(path: &Path) -> Result<RectifiableSet> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(RectifiableSet::from_json(&text)?)
}

fn cmd_eval(args: EvalArgs) -> Result<ExitCode> {
    let set = read_set(&args.set)?;
    let dom = parse_domain(&args.domain)?;
    let report = match args.method.as_str() {
        "scan" => sup_discrepancy_scan(&set, &dom, args.theta_count)?,
        "mc" => sup_discrepancy_mc(&set, &dom, args.samples, args.seed)?,
        other => bail!("unknown method {other:?}; expected scan or mc"),
    };
    let text = report.to_json()?;
    println!("{text}");
    if let Some(out) = &args.out {
        std::fs::write(out, &text).with_context(|| format!("writing {}", out.display()))?;
        let config = json!({
            "set": args.set,
            "domain": args.domain,
            "method": args.method,
            "theta_count": args.theta_count,
            "samples": args.samples,
            "seed": args.seed,
        });
        RunManifest::new("eval", config, vec![args.seed])
            .input(&args.set)
            .output(out)
            .write_beside(out)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(suite: VerifySuite) -> Result<ExitCode> {
    let report = match suite {
        VerifySuite::Crofton {
            resolution,
            sets,
            seed,
        } => verify::crofton_suite(resolution, sets, seed)?,
        VerifySuite::Proposition { theta_count } => verify::proposition_suite(theta_count)?,
        VerifySuite::Harmonic {
            theta_samples,
            terms,
            seed,
        } => verify::harmonic_suite(theta_samples, terms, seed)?,
        VerifySuite::Theorem1 {
            lengths,
            theta_count,
        } => verify::theorem1_suite(&parse_length_list(&lengths)?, theta_count)?,
        VerifySuite::Longimeter { n } => verify::longimeter_suite(n)?,
    };
    println!("{}", serde_json::to_string_pretty(&report)?);
    if report.pass {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_VERIFY_FAILED))
    }
}

fn cmd_scan(args: ScanArgs) -> Result<ExitCode> {
    if args.study != "scaling" {
        bail!("unknown study {:?}; only `scaling` exists", args.study);
    }
    let lengths = parse_length_list(&args.lengths)?;
    let dom = parse_domain(&args.domain)?;
    let evaluator = match args.mc_samples {
        Some(samples) => EvaluatorConfig::Mc {
            samples,
            seed: args.seed,
        },
        None => EvaluatorConfig::Scan {
            theta_count: args.theta_count,
        },
    };
    let study = scaling_study(&dom, &lengths, evaluator)?;
    let body = match args.format.as_str() {
        "json" => serde_json::to_string_pretty(&study)?,
        "csv" => {
            let mut text =
                String::from("l_target,n,epsilon,realized_length,sup_value,sup_over_cbrt\n");
            for (row, ratio) in study.rows.iter().zip(&study.sup_over_cbrt) {
                text.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    row.l_target, row.n, row.epsilon, row.realized_length, row.sup_value, ratio
                ));
            }
            text
        }
        other => bail!("unknown format {other:?}; expected csv or json"),
    };
    match &args.out {
        Some(out) => {
            std::fs::write(out, &body).with_context(|| format!("writing {}", out.display()))?;
            let config = json!({
                "study": "scaling",
                "lengths": lengths,
                "domain": args.domain,
                "evaluator": evaluator,
                "format": args.format,
            });
            RunManifest::new("scan scaling", config, vec![args.seed])
                .output(out)
                .write_beside(out)?;
        }
        None => {
            if body.ends_with('\n') {
                print!("{body}");
            } else {
                println!("{body}");
            }
        }
    }
    // The fit always goes to stdout so sweeps are self-describing.
    let fit = json!({
        "slope": study.slope,
        "intercept": study.intercept,
        "max_sup_over_cbrt": study
            .sup_over_cbrt
            .iter()
            .cloned()
            .fold(f64::NAN, f64::max),
    });
    println!("{fit}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_render(args: RenderArgs) -> Result<ExitCode> {
    let set = read_set(&args.set)?;
    let dom = parse_domain(&args.domain)?;
    let witness = match (&args.witness, &args.report) {
        (Some(spec), None) => {
            let parts: Vec<f64> = spec
                .split(',')
                .map(|s| s.trim().parse::<f64>().map_err(|e| anyhow!("{e}")))
                .collect::<Result<_>>()?;
            match parts.as_slice() {
                [theta, offset] => Some(Line::new(*theta, *offset)?),
                _ => bail!("witness must be theta,offset"),
            }
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let report: DiscrepancyReport = serde_json::from_str(&text)?;
            Some(report.witness)
        }
        (None, None) => None,
        _ => bail!("give at most one of --witness and --report"),
    };
    let style = svg::Style {
        width_px: args.width_px,
        stroke_width: args.stroke_width,
    };
    let body = svg::render_svg(&set, &dom, witness, style);
    std::fs::write(&args.out, &body)
        .with_context(|| format!("writing {}", args.out.display()))?;
    let config = json!({
        "set": args.set,
        "domain": args.domain,
        "witness": args.witness,
        "report": args.report,
        "stroke_width": args.stroke_width,
        "width_px": args.width_px,
    });
    RunManifest::new("render", config, vec![])
        .input(&args.set)
        .output(&args.out)
        .write_beside(&args.out)?;
    eprintln!("wrote {}", args.out.display());
    Ok(ExitCode::SUCCESS)
}

fn cmd_optimize(args: OptimizeArgs) -> Result<ExitCode> {
    let dom = parse_domain(&args.domain)?;
    let evaluator = parse_evaluator(&args.evaluator)?;
    let schedule = parse_schedule(&args.schedule)?;
    let config = SearchConfig {
        segment_count: args.segments,
        length_budget: args.length,
        iterations: args.iterations,
        proposal_scale: args.scale,
        seed: args.seed,
        evaluator,
        schedule,
        certify_theta_count: args.certify_theta_count,
    };
    let outcome = search::optimize(&dom, &config)?;
    let manifest_config = json!({
        "domain": args.domain,
        "search": config,
        "initial_objective": outcome.initial_objective,
        "final_objective": outcome.final_objective,
        "certified_sup": outcome.report.sup_value,
    });
    write_set(
        &outcome.set,
        &args.out,
        RunManifest::new("optimize", manifest_config, vec![args.seed]),
    )?;
    if let Some(path) = &args.history {
        let mut text = String::new();
        for entry in &outcome.history {
            text.push_str(&serde_json::to_string(entry)?);
            text.push('\n');
        }
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(path) = &args.report {
        std::fs::write(path, outcome.report.to_json()?)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    eprintln!(
        "objective {:.4} -> {:.4}; certified scan sup {:.4}",
        outcome.initial_objective, outcome.final_objective, outcome.report.sup_value
    );
    Ok(ExitCode::SUCCESS)
}

fn parse_evaluator(spec: &str) -> Result<search::Evaluator> {
    match spec.split_once(':') {
        Some(("mc", n)) => Ok(search::Evaluator::Mc {
            samples: n.parse().context("mc sample count")?,
        }),
        Some(("scan", n)) => Ok(search::Evaluator::Scan {
            theta_count: n.parse().context("scan theta count")?,
        }),
        _ => bail!("evaluator must be mc:SAMPLES or scan:THETA_COUNT"),
    }
}

fn parse_schedule(spec: &str) -> Result<search::Schedule> {
    if spec == "greedy" {
        return Ok(search::Schedule::Greedy);
    }
    if let Some(("sa", rest)) = spec.split_once(':') {
        if let Some((t0, cooling)) = rest.split_once(',') {
            return Ok(search::Schedule::SimulatedAnnealing {
                t0: t0.parse().context("sa t0")?,
                cooling: cooling.parse().context("sa cooling")?,
            });
        }
    }
    bail!("schedule must be greedy or sa:T0,COOLING")
}
