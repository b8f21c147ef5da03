//! `zadeh`: distances between step fuzzy sets, Zadeh extensions, and the
//! non-contraction counterexample.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use zadeh_core::counterexample::{
    build_instance, oracle_resolution, verify_claim1, verify_claim2, verify_remark9,
    VerificationReport,
};
use zadeh_core::dynamics::{union_extension, zadeh_extend, PlMap};
use zadeh_core::metrics::{
    d0_bruteforce, hausdorff, level_metric_dinf, skorokhod_d0_with, D0Options, DistanceReport,
};
use zadeh_core::rational::{self, q};
use zadeh_core::{IntervalUnion, Rational, StepFuzzySet};

#[derive(Parser)]
#[command(
    name = "zadeh",
    version,
    about = "Exact distances between step fuzzy sets on [0, 1]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Distance between two files: interval unions for hausdorff, fuzzy sets otherwise.
    Dist {
        #[arg(long, value_enum)]
        metric: Metric,
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Epsilon for the d0 lower-bound certificate [default: 15/16 of the value].
        #[arg(long, value_parser = parse_rational)]
        certificate_epsilon: Option<Rational>,
    },
    /// Apply the Zadeh extension of one map, or the union lift of several.
    Extend {
        #[arg(long = "map", required = true)]
        maps: Vec<PathBuf>,
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the depth-N pair and check the three non-contraction statements.
    Counterexample {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        depth: u32,
        #[arg(long, value_parser = parse_rational, default_value = "1/2")]
        lambda: Rational,
        /// Where u.json and v.json are written.
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// CSV of d0 and oracle brackets across depths.
    Convergence {
        /// Inclusive range `a..b` with 2 ≤ a ≤ b.
        #[arg(long, value_parser = parse_depths)]
        depths: (u32, u32),
        /// Oracle resolution; repeat for a schedule [default: 2^-(N+3) per depth].
        #[arg(long = "resolution", value_parser = parse_rational)]
        resolutions: Vec<Rational>,
        /// Write 0 in the runtime column so output is byte-stable.
        #[arg(long)]
        no_timing: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Metric {
    Hausdorff,
    Dinf,
    D0,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    rational::parse(s).map_err(|e| e.to_string())
}

fn parse_depths(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once("..").ok_or("expected a..b")?;
    let a: u32 = a.trim().parse().map_err(|e| format!("{a}: {e}"))?;
    let b: u32 = b.trim().parse().map_err(|e| format!("{b}: {e}"))?;
    if a < 2 {
        return Err(format!("depths start at 2, got {a}"));
    }
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

/// Failed verification, as opposed to bad input.
struct Failed;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Dist {
            metric,
            a,
            b,
            format,
            certificate_epsilon,
        } => cmd_dist(metric, &a, &b, format, certificate_epsilon).map(|()| Ok(())),
        Command::Extend {
            maps,
            input,
            output,
        } => cmd_extend(&maps, &input, output.as_deref()).map(|()| Ok(())),
        Command::Counterexample {
            depth,
            lambda,
            out_dir,
            format,
        } => cmd_counterexample(depth as usize, &lambda, &out_dir, format),
        Command::Convergence {
            depths,
            resolutions,
            no_timing,
        } => cmd_convergence(depths, &resolutions, no_timing).map(|()| Ok(())),
    };
    match outcome {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Failed)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_fuzzy(path: &Path) -> Result<StepFuzzySet> {
    StepFuzzySet::from_json(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn read_union(path: &Path) -> Result<IntervalUnion> {
    serde_json::from_str(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn read_map(path: &Path) -> Result<PlMap> {
    serde_json::from_str(&read(path)?).with_context(|| format!("parsing map {}", path.display()))
}

#[derive(Serialize)]
struct DistOutput<'a> {
    metric: &'static str,
    value: String,
    decimal: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<&'a DistanceReport>,
}

fn cmd_dist(
    metric: Metric,
    a: &Path,
    b: &Path,
    format: Format,
    eps: Option<Rational>,
) -> Result<()> {
    let (name, value, report) = match metric {
        Metric::Hausdorff => (
            "hausdorff",
            hausdorff(&read_union(a)?, &read_union(b)?)?,
            None,
        ),
        Metric::Dinf => (
            "dinf",
            level_metric_dinf(&read_fuzzy(a)?, &read_fuzzy(b)?)?,
            None,
        ),
        Metric::D0 => {
            let (u, v) = (read_fuzzy(a)?, read_fuzzy(b)?);
            let plain = skorokhod_d0_with(&u, &v, &D0Options::default())?;
            let eps = eps.unwrap_or_else(|| &plain.lower * q(15, 16));
            let report = if eps > Rational::from_integer(0.into()) {
                let opts = D0Options {
                    certificate_epsilon: Some(eps),
                    ..D0Options::default()
                };
                skorokhod_d0_with(&u, &v, &opts)?
            } else {
                plain
            };
            ("d0", report.lower.clone(), Some(report))
        }
    };
    match format {
        Format::Json => {
            let out = DistOutput {
                metric: name,
                value: rational::format(&value),
                decimal: rational::decimal(&value),
                report: report.as_ref(),
            };
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        Format::Text => {
            println!(
                "{name} = {} ({})",
                rational::format(&value),
                rational::decimal(&value)
            );
            if let Some(r) = &report {
                print!("{}", describe_d0(r));
            }
        }
    }
    Ok(())
}

fn describe_d0(r: &DistanceReport) -> String {
    let mut s = String::new();
    if !r.attained {
        let _ = writeln!(
            s,
            "bracket [{}, {}]",
            rational::format(&r.lower),
            rational::format(&r.upper)
        );
    }
    if let Some(t) = &r.witness {
        let knots: Vec<String> = t
            .knots()
            .iter()
            .map(|(x, y)| format!("({}, {})", rational::format(x), rational::format(y)))
            .collect();
        let _ = writeln!(s, "witness: {}", knots.join(" "));
    }
    if let Some(c) = &r.certificate {
        let _ = writeln!(
            s,
            "certificate: probe level {}, epsilon {}, band d_H {}",
            rational::format(&c.probe_level),
            rational::format(&c.epsilon),
            rational::format(&c.floor)
        );
    }
    s
}

fn cmd_extend(maps: &[PathBuf], input: &Path, output: Option<&Path>) -> Result<()> {
    let fs: Vec<PlMap> = maps.iter().map(|p| read_map(p)).collect::<Result<_>>()?;
    let u = read_fuzzy(input)?;
    let image = if fs.len() == 1 {
        zadeh_extend(&fs[0], &u)?
    } else {
        union_extension(&fs, &u)?
    };
    let json = image.to_json();
    match output {
        Some(path) => {
            fs::write(path, json + "\n").with_context(|| format!("writing {}", path.display()))?
        }
        None => println!("{json}"),
    }
    Ok(())
}

fn cmd_counterexample(
    depth: usize,
    lambda: &Rational,
    out_dir: &Path,
    format: Format,
) -> Result<std::result::Result<(), Failed>> {
    if *lambda < q(1, 2) || *lambda >= q(1, 1) {
        bail!("lambda = {} must lie in [1/2, 1)", rational::format(lambda));
    }
    let inst = build_instance(depth)?;
    fs::create_dir_all(out_dir).with_context(|| format!("creating {}", out_dir.display()))?;
    for (name, set) in [("u.json", &inst.u), ("v.json", &inst.v)] {
        let path = out_dir.join(name);
        fs::write(&path, set.to_json() + "\n")
            .with_context(|| format!("writing {}", path.display()))?;
    }

    let reports: Vec<VerificationReport> = vec![
        verify_claim1(&inst)?,
        verify_claim2(&inst, lambda)?,
        verify_remark9(&inst)?,
    ];
    let construction_failures: Vec<_> = inst.checks().into_iter().filter(|c| !c.pass).collect();

    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&reports)?),
        Format::Text => {
            for r in &reports {
                let lambda = r
                    .lambda
                    .as_ref()
                    .map(|l| format!(" lambda={}", rational::format(l)))
                    .unwrap_or_default();
                println!(
                    "{} {} depth={}{} value={} expected={}",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.claim,
                    r.depth,
                    lambda,
                    rational::format(&r.value),
                    rational::format(&r.expected)
                );
            }
        }
    }
    for r in &reports {
        for c in r.failed_checks() {
            eprintln!("{}: {} ({})", r.claim, c.name, c.detail);
        }
    }
    for c in &construction_failures {
        eprintln!("construction: {} ({})", c.name, c.detail);
    }
    if reports.iter().all(|r| r.pass) && construction_failures.is_empty() {
        Ok(Ok(()))
    } else {
        Ok(Err(Failed))
    }
}

fn cmd_convergence(
    (first, last): (u32, u32),
    resolutions: &[Rational],
    no_timing: bool,
) -> Result<()> {
    let mut out = String::from("depth,d0_dp,oracle_lower,oracle_upper,runtime_ms\n");
    for depth in first..=last {
        let depth = depth as usize;
        let schedule = if resolutions.is_empty() {
            vec![oracle_resolution(depth)]
        } else {
            resolutions.to_vec()
        };
        let inst = build_instance(depth)?;
        for h in &schedule {
            let start = Instant::now();
            let dp = skorokhod_d0_with(&inst.u, &inst.v, &D0Options::default())?;
            let oracle = d0_bruteforce(&inst.u, &inst.v, h)
                .with_context(|| format!("depth {depth}, resolution {}", rational::format(h)))?;
            let ms = if no_timing {
                0
            } else {
                start.elapsed().as_millis()
            };
            let _ = writeln!(
                out,
                "{depth},{},{},{},{ms}",
                rational::decimal(&dp.lower),
                rational::decimal(&oracle.lower),
                rational::decimal(&oracle.upper)
            );
        }
    }
    print!("{out}");
    Ok(())
}
