use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use smul_audit::claims::{self, AuditConfig, REGISTRY};
use smul_audit::query::{self, Command, Query};
use smul_audit::report::AuditReport;

#[derive(Parser)]
#[command(name = "smul", version, about = "Strongly multiplicative sets over small commutative rings")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    /// Largest finite ring to work in
    #[arg(long, global = true, env = "SMUL_BUDGET", default_value_t = 64)]
    budget: usize,
    /// Also write the JSON output to this file
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Index bound for the polynomial replays
    #[arg(long, global = true, default_value_t = 16)]
    depth: u32,
    /// Seed for corpus sampling
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct SetArgs {
    ring: String,
    set: String,
}

#[derive(Args)]
struct IdealArgs {
    ring: String,
    set: String,
    ideal: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Both strongly-multiplicative tests, with t and the witness
    Strongmul(SetArgs),
    /// Saturation of S and its classified form
    Saturate(SetArgs),
    /// S-prime test for one ideal, or every S-prime ideal
    Sprime(IdealArgs),
    /// S-minimal primes, over an ideal if one is given
    Sminimal(IdealArgs),
    /// An ideal maximal among those above I that avoid S
    Krull(IdealArgs),
    /// The localization S^-1 R, and S^-1 I if an ideal is given
    Localize(IdealArgs),
    /// Run one replay or one claim id from the registry
    AuditOne { name: String },
    /// Sweep the corpus and evaluate every registered claim
    Audit {
        /// Swap in a broken colon operation to check that the harness notices
        #[arg(long)]
        mutate_colon: bool,
        /// Restrict to these claim ids
        #[arg(long = "claim")]
        claims: Vec<String>,
    },
    /// List the claim registry
    Claims,
}

/// Write to stdout; a closed pipe (e.g. `| head`) is not an error.
fn out(text: &str) -> Result<(), String> {
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.to_string()),
        _ => Ok(()),
    }
}

fn emit(value: &impl Serialize, path: Option<&PathBuf>) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    out(&format!("{text}\n"))?;
    if let Some(p) = path {
        std::fs::write(p, &text).map_err(|e| format!("writing {}: {e}", p.display()))?;
    }
    Ok(())
}

fn replay_id(name: &str) -> String {
    match name {
        "counterexample1" | "counterexample2" | "counterexample3" | "counterexample4" => format!("ex.{name}"),
        "colon" => "ex.colon".into(),
        "oracle-gate" => "cxlab.oracle-gate".into(),
        other => other.into(),
    }
}

fn audit(config: AuditConfig, opts: &Opts, full_json: bool) -> Result<bool, String> {
    let report: AuditReport = claims::run_audit(&config);
    if full_json {
        emit(&report, opts.json.as_ref())?;
    } else {
        out(&report.render_text())?;
        if let Some(p) = &opts.json {
            let text = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
            std::fs::write(p, text).map_err(|e| format!("writing {}: {e}", p.display()))?;
        }
    }
    Ok(!report.has_failures())
}

fn run(cli: Cli) -> Result<bool, String> {
    let opts = &cli.opts;
    let base = AuditConfig { budget: opts.budget, seed: opts.seed, depth: opts.depth, ..AuditConfig::default() };
    let (command, ring, set, ideal) = match cli.command {
        Cmd::Strongmul(a) => (Command::StrongMul, a.ring, a.set, None),
        Cmd::Saturate(a) => (Command::Saturate, a.ring, a.set, None),
        Cmd::Sprime(a) => (Command::SPrime, a.ring, a.set, a.ideal),
        Cmd::Sminimal(a) => (Command::SMinimal, a.ring, a.set, a.ideal),
        Cmd::Krull(a) => (Command::Krull, a.ring, a.set, a.ideal),
        Cmd::Localize(a) => (Command::Localize, a.ring, a.set, a.ideal),
        Cmd::AuditOne { name } => {
            let id = replay_id(&name);
            if claims::find_claim(&id).is_none() {
                return Err(format!("unknown claim '{name}'; `smul claims` lists them"));
            }
            return audit(AuditConfig { only: vec![id], ..base }, opts, true);
        }
        Cmd::Audit { mutate_colon, claims } => {
            if let Some(bad) = claims.iter().find(|c| claims::find_claim(c).is_none()) {
                return Err(format!("unknown claim '{bad}'"));
            }
            return audit(AuditConfig { mutate_colon, only: claims, ..base }, opts, false);
        }
        Cmd::Claims => {
            let list: String = REGISTRY.iter().map(|c| format!("{:<36} {}\n", c.id, c.statement)).collect();
            out(&list)?;
            return Ok(true);
        }
    };
    let q = Query { command, ring, set, ideal, budget: opts.budget };
    match query::run_query(&q) {
        Ok(v) => emit(&v, opts.json.as_ref()).map(|_| true),
        Err(d) => Err(d.render()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("smul: {msg}");
            ExitCode::from(2)
        }
    }
}
