//! `qrd`: construct extended quadratic residue codes and verify their hulls,
//! duadic duality and 3-design shells.
//!
//! Exit codes: 0 success (or a theorem that does not apply), 1 verification
//! failure, 2 domain error, 3 resource error.

mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qrd_core::codes::{WeightDistribution, DEFAULT_BUDGET};
use qrd_core::designs::{assmus_mattson, assmus_mattson_weights, AmReport};
use qrd_core::qres::{
    build_qr_pair_general, classify_euclidean, classify_hermitian, survey_shells, verify_duadic_duality,
    verify_intersection, verify_main_theorem, ShellSurvey, TheoremStatus,
};
use qrd_core::{numtheory, Error, ErrorKind, Exec};

#[derive(Parser, Debug)]
#[command(name = "qrd", version, about = "Extended quadratic residue codes and 3-designs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write the report here instead of stdout; a summary line goes to stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Maximum number of codewords to enumerate (`2^28`, `1<<28` or decimal).
    #[arg(long, env = "QRD_BUDGET", value_parser = input::parse_budget, global = true)]
    budget: Option<u64>,
    /// Lift the enumeration budget entirely.
    #[arg(long, global = true)]
    force: bool,
    /// Worker threads for enumeration (1 = sequential).
    #[arg(long, global = true)]
    workers: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum RegimeArg {
    Hermitian,
    Euclidean,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum WhichCode {
    E1,
    E2,
}

/// The base field `F_q`: `--q`, or `--r` with `--exponent` (default 2).
#[derive(Args, Debug)]
struct FieldArgs {
    #[arg(long)]
    r: Option<u64>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    exponent: Option<u32>,
    #[arg(long)]
    p: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the QR code pair and its extensions.
    Construct(FieldArgs),
    /// Check that every non-empty shell of the extended code over F_{r^2} is a 3-design.
    VerifyTheorem {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        p: u64,
    },
    /// Design reports for every shell of an extended QR code.
    Survey {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 3)]
        t: usize,
        #[arg(long, value_enum, default_value_t = WhichCode::E1)]
        code: WhichCode,
    },
    /// Classify and verify the hull of the extended QR code.
    Intersect {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_enum, default_value_t = RegimeArg::Hermitian)]
        regime: RegimeArg,
    },
    /// Check the Hermitian duality of the extended pair under M = diag(1, …, 1, -1/p).
    Duality {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        p: u64,
    },
    /// Assmus-Mattson from weight sets or distribution files.
    Am {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 3)]
        t: usize,
        /// Nonzero dual weights, e.g. `12..38:even`.
        #[arg(long, conflicts_with = "dual_dist", required_unless_present = "dual_dist")]
        dual_weights: Option<String>,
        /// Dual distribution file with lines `weight count`.
        #[arg(long)]
        dual_dist: Option<PathBuf>,
        /// Weights of the code itself; defaults to the dual's (isodual codes).
        #[arg(long, conflicts_with = "dist")]
        weights: Option<String>,
        #[arg(long)]
        dist: Option<PathBuf>,
    },
    /// Odd primes p < pmax with p ≡ 1 (mod 4) and r a non-residue mod p.
    Search {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        pmax: u64,
    },
}

enum Failure {
    Core(Error),
    Usage(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(e) => match e.kind() {
                ErrorKind::Domain => 2,
                ErrorKind::Resource => 3,
                ErrorKind::Internal => 1,
            },
            Failure::Usage(_) => 2,
            Failure::Io(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Usage(s) | Failure::Io(s) => s.clone(),
        }
    }
}

/// Everything a command produces, rendered according to `--format`.
struct Outcome {
    json: String,
    csv_header: Vec<&'static str>,
    csv_rows: Vec<Vec<String>>,
    text: String,
    summary: String,
    ok: bool,
}

impl Outcome {
    fn new(report: &impl Serialize, summary: String, ok: bool) -> Outcome {
        Outcome {
            json: serde_json::to_string_pretty(report).expect("reports serialize") + "\n",
            csv_header: Vec::new(),
            csv_rows: Vec::new(),
            text: String::new(),
            summary,
            ok,
        }
    }

    fn csv(mut self, header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Outcome {
        self.csv_header = header;
        self.csv_rows = rows;
        self
    }

    fn text(mut self, text: String) -> Outcome {
        self.text = text;
        self
    }

    fn render(&self, format: Format) -> Result<String, Failure> {
        match format {
            Format::Json => Ok(self.json.clone()),
            Format::Text => Ok(if self.text.is_empty() {
                format!("{}\n", self.summary)
            } else {
                format!("{}\n{}", self.summary, self.text)
            }),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                let io = |e: csv::Error| Failure::Io(e.to_string());
                w.write_record(&self.csv_header).map_err(io)?;
                for row in &self.csv_rows {
                    w.write_record(row).map_err(io)?;
                }
                let bytes = w.into_inner().map_err(|e| Failure::Io(e.to_string()))?;
                String::from_utf8(bytes).map_err(|e| Failure::Io(e.to_string()))
            }
        }
    }
}

fn opt(x: Option<u64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn join(ws: &[usize]) -> String {
    ws.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn resolve_field(f: &FieldArgs, default_exponent: u32) -> Result<(u64, u32), Failure> {
    match (f.r, f.q) {
        (_, Some(q)) => {
            let (r, k) = input::prime_power(q).map_err(Failure::Usage)?;
            if f.r.is_some_and(|x| x != r) || f.exponent.is_some_and(|e| e != k) {
                return Err(Failure::Usage(format!("--q {q} conflicts with --r/--exponent")));
            }
            Ok((r, k))
        }
        (Some(r), None) => Ok((r, f.exponent.unwrap_or(default_exponent))),
        (None, None) => Err(Failure::Usage("one of --r or --q is required".into())),
    }
}

#[derive(Serialize)]
struct SurveyReport {
    r: u64,
    q: u64,
    p: u64,
    code: &'static str,
    length: usize,
    t: usize,
    design_weights: Vec<usize>,
    shells: Vec<ShellSurvey>,
}

#[derive(Serialize)]
struct SearchReport {
    r: u64,
    pmax: u64,
    count: usize,
    primes: Vec<u64>,
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

/// Support weights, plus the full distribution when one was given.
type AmInput = (Vec<usize>, Option<WeightDistribution>);

fn am_inputs(
    n: usize,
    spec: &Option<String>,
    file: &Option<PathBuf>,
) -> Result<Option<AmInput>, Failure> {
    if let Some(s) = spec {
        let mut ws = input::parse_weights(s).map_err(Failure::Usage)?;
        ws.retain(|&w| w > 0);
        return Ok(Some((ws, None)));
    }
    if let Some(path) = file {
        let d = input::parse_distribution(&read_file(path)?, n).map_err(Failure::Usage)?;
        return Ok(Some((d.support(), Some(d))));
    }
    Ok(None)
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let budget = if cli.force {
        u64::MAX
    } else {
        cli.budget.unwrap_or(DEFAULT_BUDGET)
    };
    let exec = Exec::from_workers(cli.workers);
    match &cli.command {
        Command::Construct(f) => {
            let (r, k) = resolve_field(f, 2)?;
            let pair = build_qr_pair_general(r, k, f.p)?;
            let summary = format!(
                "QR pair over F_{} of length {}: dim D = {}, dim C = {}, extended [{}, {}]",
                pair.q(),
                f.p,
                pair.d1.dim(),
                pair.c1.dim(),
                pair.e1.len(),
                pair.e1.dim()
            );
            let rows = [("D1", &pair.d1), ("D2", &pair.d2), ("C1", &pair.c1), ("C2", &pair.c2), ("E1", &pair.e1), ("E2", &pair.e2)]
                .iter()
                .map(|(name, c)| vec![name.to_string(), c.len().to_string(), c.dim().to_string()])
                .collect();
            Ok(Outcome::new(&pair.descriptor(), summary, true).csv(vec!["code", "n", "k"], rows))
        }
        Command::VerifyTheorem { r, p } => {
            let rep = verify_main_theorem(*r, *p, budget, exec)?;
            let summary = match rep.case {
                TheoremStatus::Pass => format!("PASS: r={r} p={p}: {}", rep.computed),
                TheoremStatus::Fail => format!("FAIL: r={r} p={p}: {}", rep.computed),
                TheoremStatus::Inapplicable => format!("INAPPLICABLE: r={r} p={p}: {}", rep.computed),
            };
            let rows: Vec<Vec<String>> = rep
                .per_shell
                .iter()
                .map(|s| {
                    vec![
                        s.weight.to_string(),
                        s.count.to_string(),
                        opt(s.lambda3),
                        opt(s.lambda2),
                        opt(s.lambda1),
                        s.is_design.to_string(),
                    ]
                })
                .collect();
            let text = rows
                .iter()
                .map(|r| {
                    format!(
                        "  weight {:>3}: {:>8} blocks  λ3={} λ2={} λ1={} design={}\n",
                        r[0], r[1], r[2], r[3], r[4], r[5]
                    )
                })
                .collect();
            let ok = rep.case != TheoremStatus::Fail;
            Ok(Outcome::new(&rep, summary, ok)
                .csv(vec!["weight", "count", "lambda3", "lambda2", "lambda1", "is_design"], rows)
                .text(text))
        }
        Command::Survey { field, t, code } => {
            let (r, k) = resolve_field(field, 2)?;
            let pair = build_qr_pair_general(r, k, field.p)?;
            let (name, c) = match code {
                WhichCode::E1 => ("E1", &pair.e1),
                WhichCode::E2 => ("E2", &pair.e2),
            };
            let shells = survey_shells(c, *t, budget, exec)?;
            let design_weights: Vec<usize> = shells
                .iter()
                .filter(|s| s.report.is_design)
                .map(|s| s.weight)
                .collect();
            let summary = format!(
                "extended QR code over F_{} of length {}: {} of {} shells are {}-designs (weights {})",
                pair.q(),
                c.len(),
                design_weights.len(),
                shells.len(),
                t,
                join(&design_weights)
            );
            let rows: Vec<Vec<String>> = shells
                .iter()
                .map(|s| {
                    vec![
                        s.weight.to_string(),
                        s.count.to_string(),
                        opt(s.report.lambda),
                        s.report.is_design.to_string(),
                    ]
                })
                .collect();
            let rep = SurveyReport {
                r,
                q: pair.q(),
                p: field.p,
                code: name,
                length: c.len(),
                t: *t,
                design_weights,
                shells,
            };
            Ok(Outcome::new(&rep, summary, true).csv(vec!["weight", "count", "lambda", "is_design"], rows))
        }
        Command::Intersect { field, regime } => {
            let (r, k) = resolve_field(field, 2)?;
            let case = match regime {
                RegimeArg::Hermitian => {
                    if k != 2 {
                        return Err(Error::NotSquareOrder { r, k }.into());
                    }
                    classify_hermitian(r, field.p)?
                }
                RegimeArg::Euclidean => classify_euclidean(r, k, field.p)?,
            };
            let pair = build_qr_pair_general(r, k, field.p)?;
            let rep = verify_intersection(&pair, &case)?;
            let dims = rep.computed.iter().map(|c| c.dim.to_string()).collect::<Vec<_>>().join("/");
            let summary = format!(
                "{}: case {}, predicted dim {}, computed dim {} ({})",
                if rep.pass { "CONFIRMED" } else { "MISMATCH" },
                rep.case,
                case.predicted_dim,
                dims,
                if *regime == RegimeArg::Hermitian { "Hermitian" } else { "Euclidean" }
            );
            let rows = rep
                .computed
                .iter()
                .map(|c| {
                    vec![
                        c.code.to_string(),
                        rep.case.to_string(),
                        case.predicted_dim.to_string(),
                        c.dim.to_string(),
                        c.matches_prediction.to_string(),
                    ]
                })
                .collect();
            let ok = rep.pass;
            Ok(Outcome::new(&rep, summary, ok).csv(vec!["code", "case", "predicted_dim", "dim", "matches"], rows))
        }
        Command::Duality { r, p } => {
            let pair = build_qr_pair_general(*r, 2, *p)?;
            let rep = verify_duadic_duality(&pair)?;
            let summary = format!(
                "{}: {} with -1/p = {}: {}",
                if rep.pass { "CONFIRMED" } else { "MISMATCH" },
                rep.case,
                rep.m_entry,
                rep.predicted.join("; ")
            );
            let rows = rep
                .computed
                .iter()
                .map(|c| vec![c.claim.clone(), c.holds.to_string()])
                .collect();
            let ok = rep.pass;
            Ok(Outcome::new(&rep, summary, ok).csv(vec!["claim", "holds"], rows))
        }
        Command::Am {
            n,
            q,
            t,
            dual_weights,
            dual_dist,
            weights,
            dist,
        } => {
            let (dual_ws, dual_d) = am_inputs(*n, dual_weights, dual_dist)?
                .ok_or_else(|| Failure::Usage("--dual-weights or --dual-dist is required".into()))?;
            let (ws, d) = am_inputs(*n, weights, dist)?.unwrap_or_else(|| (dual_ws.clone(), dual_d.clone()));
            let rep: AmReport = match (d, dual_d) {
                (Some(d), Some(dd)) => assmus_mattson(*n, *q, *t, &d, &dd)?,
                _ => assmus_mattson_weights(*n, *q, *t, &ws, &dual_ws)?,
            };
            let summary = if rep.applicable {
                format!(
                    "applicable, s={} <= {}; design weights {} (dual {})",
                    rep.s,
                    rep.d - rep.t,
                    join(&rep.design_weights_primal),
                    join(&rep.design_weights_dual)
                )
            } else {
                format!("inapplicable, s={} > {}", rep.s, rep.d - rep.t)
            };
            let mut rows: Vec<Vec<String>> = rep
                .design_weights_primal
                .iter()
                .map(|w| vec!["code".to_string(), w.to_string()])
                .collect();
            rows.extend(rep.design_weights_dual.iter().map(|w| vec!["dual".to_string(), w.to_string()]));
            Ok(Outcome::new(&rep, summary, true).csv(vec!["side", "weight"], rows))
        }
        Command::Search { r, pmax } => {
            let primes = numtheory::search_params(*r, *pmax)?;
            let list = primes.iter().map(u64::to_string).collect::<Vec<_>>().join(", ");
            let summary = format!("{} primes for r={r} below {pmax}: {list}", primes.len());
            let rows = primes.iter().map(|p| vec![p.to_string()]).collect();
            let rep = SearchReport {
                r: *r,
                pmax: *pmax,
                count: primes.len(),
                primes,
            };
            Ok(Outcome::new(&rep, summary, true).csv(vec!["p"], rows))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = std::panic::catch_unwind(|| {
        let outcome = run(&cli)?;
        let body = outcome.render(cli.format)?;
        match &cli.output {
            Some(path) => {
                std::fs::write(path, body).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
                println!("{}", outcome.summary);
            }
            None => {
                print!("{body}");
                if !matches!(cli.format, Format::Text) {
                    eprintln!("{}", outcome.summary);
                }
            }
        }
        Ok::<bool, Failure>(outcome.ok)
    });
    match result {
        Ok(Ok(true)) => ExitCode::SUCCESS,
        Ok(Ok(false)) => ExitCode::from(1),
        Ok(Err(f)) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
        Err(_) => {
            eprintln!("error: internal failure");
            ExitCode::from(1)
        }
    }
}
