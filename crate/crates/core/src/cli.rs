//! The `shiftaut` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::aut_search::{aut_group_mod_shift, required_depth, CheckStatus, DEFAULT_BUDGET};
use crate::complexity::{
    extension_failure_count, morse_hedlund_flag, nonuniquely_left_extendable_count, profile, right_special_count,
};
use crate::error::{Error, Result};
use crate::models::{PeriodicShift, ShiftSpec};
use crate::periodic_aut::{
    brute_force_aut, classify, closure, full_group_intersection, generators, BRUTE_FORCE_POINTS,
};
use crate::spec_file::{cache_dir_from_env, load_or_generate, load_spec};
use crate::verify::{run_suite, Outcome, SuiteParams, SUITES};
use crate::words::LanguageTable;

#[derive(Parser, Debug)]
#[command(name = "shiftaut", version, about = "Complexity and automorphism groups of subshifts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Shift specification (JSON).
    #[arg(long)]
    spec: PathBuf,
    /// Write a JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tabulate P(n) and its differences.
    Complexity {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 16)]
        max_n: usize,
    },
    /// Special words and unique-extension failures, or the extensions of one word.
    Extensions {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Report the extensions of this word instead of per-length counts.
        #[arg(long)]
        word: Option<String>,
        /// Number of right extension steps.
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// Search range-bounded automorphisms and group them modulo the shift.
    Aut {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        range: usize,
        #[arg(long)]
        inv_range: usize,
        #[arg(long)]
        horizon: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Automorphism group of a periodic shift.
    Classify {
        #[command(flatten)]
        common: Common,
        /// Compare against an exhaustive search over point permutations.
        #[arg(long)]
        brute_force: bool,
    },
    /// Run a verification suite.
    Verify {
        /// Shift specification (JSON); not used by `examples-6`.
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        range: Option<usize>,
        #[arg(long)]
        inv_range: Option<usize>,
        #[arg(long)]
        horizon: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
    },
}

/// Runs the CLI, writing the human-readable report to `out` and diagnostics
/// to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn table_for(spec: &ShiftSpec, max_n: usize) -> Result<LanguageTable> {
    load_or_generate(spec, max_n, cache_dir_from_env().as_deref())
}

fn write_json(path: Option<&Path>, value: &Value) -> Result<()> {
    if let Some(path) = path {
        let mut text = serde_json::to_string_pretty(value).expect("serializable");
        text.push('\n');
        std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn w(out: &mut dyn Write, line: impl AsRef<str>) -> Result<()> {
    writeln!(out, "{}", line.as_ref()).map_err(Error::from)
}

fn execute(command: Command, out: &mut dyn Write) -> Result<bool> {
    match command {
        Command::Complexity { common, max_n } => {
            let spec = load_spec(&common.spec)?;
            let table = table_for(&spec, max_n)?;
            let prof = profile(&table);
            w(out, "n\tP(n)\tdiff")?;
            for n in 1..=max_n {
                let diff = prof.differences.get(n - 1).map_or(String::from("-"), |d| d.to_string());
                w(out, format!("{n}\t{}\t{diff}", prof.p(n)))?;
            }
            w(out, format!("B\t{}", prof.b))?;
            w(out, format!("k_linear\t{}", prof.k_linear))?;
            let flag = morse_hedlund_flag(&prof);
            if let Some(n) = flag {
                w(out, format!("periodic-only\tP({n}) <= {n}"))?;
            }
            let mut report = serde_json::to_value(&prof).expect("serializable");
            report["morse_hedlund"] = json!(flag);
            write_json(common.json.as_deref(), &report)?;
            Ok(true)
        }
        Command::Extensions { common, max_n, word, m } => {
            let spec = load_spec(&common.spec)?;
            let table = table_for(&spec, max_n)?;
            let alphabet = table.alphabet().clone();
            match word {
                Some(text) => {
                    let wd = alphabet.parse_word(&text)?;
                    let right = table.right_extensions(&wd)?;
                    let left = table.left_extensions(&wd)?;
                    let unique = table.extends_uniquely_right(&wd, m)?;
                    let tokens = |s: &[u16]| s.iter().map(|&a| alphabet.token(a).to_string()).collect::<Vec<_>>();
                    w(out, format!("right\t{}", tokens(&right).join(",")))?;
                    w(out, format!("left\t{}", tokens(&left).join(",")))?;
                    w(out, format!("extends-uniquely-{m}\t{unique}"))?;
                    write_json(
                        common.json.as_deref(),
                        &json!({"word": text, "right": tokens(&right), "left": tokens(&left),
                                "m": m, "extends_uniquely": unique}),
                    )?;
                    Ok(true)
                }
                None => {
                    let b = profile(&table).b;
                    w(out, format!("n\tright_special\tleft_special\tfailures(m={m})\tB*m"))?;
                    let mut rows = Vec::new();
                    let mut ok = true;
                    for n in (1..max_n).take_while(|n| n + m <= max_n) {
                        let rs = right_special_count(&table, n)?;
                        let ls = nonuniquely_left_extendable_count(&table, n)?;
                        let f = extension_failure_count(&table, n, m)?;
                        ok &= f <= b * m;
                        w(out, format!("{n}\t{rs}\t{ls}\t{f}\t{}", b * m))?;
                        rows.push(json!({"n": n, "right_special": rs, "left_special": ls, "failures": f}));
                    }
                    write_json(common.json.as_deref(), &json!({"m": m, "B": b, "rows": rows}))?;
                    Ok(ok)
                }
            }
        }
        Command::Aut { common, range, inv_range, horizon, budget } => {
            let spec = load_spec(&common.spec)?;
            let table = table_for(&spec, required_depth(range, inv_range, horizon))?;
            let report = aut_group_mod_shift(&table, range, inv_range, horizon, budget)?;
            let alphabet = table.alphabet();
            w(out, format!("candidates\t{}", report.candidates))?;
            w(out, format!("refuted\t{}", report.refuted_count))?;
            w(out, format!("certified\t{}", report.certified.len()))?;
            for c in &report.certified {
                let label = c.shift_power.map_or(String::new(), |j| format!("\tshift^{j}"));
                w(out, format!("  {}{label}", alphabet.format_word(c.code.outputs())))?;
            }
            w(out, format!("unknown\t{}", report.unknown.len()))?;
            for c in &report.unknown {
                w(out, format!("  {}", alphabet.format_word(c.outputs())))?;
            }
            w(out, format!("cosets_mod_shift\t{}", report.coset_count()))?;
            let growth: Vec<String> =
                report.growth_counts.iter().map(|c| c.map_or("-".into(), |c| c.to_string())).collect();
            w(out, format!("growth_counts\t{}", growth.join(",")))?;
            for inv in &report.invariants {
                let line = match &inv.status {
                    CheckStatus::Pass => format!("pass\t{}", inv.name),
                    CheckStatus::Fail(d) => format!("FAIL\t{}\t{d}", inv.name),
                    CheckStatus::Skipped(d) => format!("skip\t{}\t{d}", inv.name),
                };
                w(out, line)?;
            }
            write_json(common.json.as_deref(), &report.to_json())?;
            Ok(report.invariants_hold())
        }
        Command::Classify { common, brute_force } => {
            let spec = load_spec(&common.spec)?;
            let ps = PeriodicShift::from_spec(&spec)?;
            let desc = classify(&ps)?;
            let factors: Vec<String> = desc.factors.iter().map(|(n, m)| format!("S({n},{m})")).collect();
            w(out, format!("group\t{}", factors.join(" x ")))?;
            w(out, format!("order\t{}", desc.order))?;
            let mut report = desc.to_json();
            let mut ok = true;
            if ps.num_points() <= BRUTE_FORCE_POINTS {
                let full = full_group_intersection(&ps)?;
                w(
                    out,
                    format!(
                        "full_group\torder {}\tabelian {}\tnormal {}\tquotient {}",
                        full.order, full.abelian, full.normal, full.quotient_order
                    ),
                )?;
                ok &= full.abelian && full.normal;
                report["full_group"] = full.to_json();
            }
            if brute_force {
                let group = brute_force_aut(&ps)?;
                let generated = closure(&generators(&ps), ps.num_points())?;
                let order_ok = desc.order == group.len().into();
                let gens_ok = generated.len() == group.len() && group.iter().all(|g| generated.contains(g));
                w(out, format!("brute_force\t{}\t{}", group.len(), if order_ok { "match" } else { "MISMATCH" }))?;
                w(out, format!("generators\t{}", if gens_ok { "generate" } else { "DO NOT GENERATE" }))?;
                ok &= order_ok && gens_ok;
                report["brute_force"] = json!({"order": group.len(), "generators_generate": gens_ok});
            }
            write_json(common.json.as_deref(), &report)?;
            Ok(ok)
        }
        Command::Verify { spec, json, suite, max_n, range, inv_range, horizon, budget } => {
            let spec = spec.as_deref().map(load_spec).transpose()?;
            let params = SuiteParams { max_n, range, inv_range, horizon, budget };
            let report = run_suite(&suite, spec.as_ref(), &params)?;
            for c in &report.checks {
                let tag = match c.outcome {
                    Outcome::Pass => "pass",
                    Outcome::Fail => "FAIL",
                    Outcome::Warning => "warn",
                    Outcome::Skipped => "skip",
                };
                if c.detail.is_empty() {
                    w(out, format!("{tag}\t{}", c.name))?;
                } else {
                    w(out, format!("{tag}\t{}\t{}", c.name, c.detail))?;
                }
            }
            w(out, format!("suite {suite}: {}", if report.passed() { "passed" } else { "FAILED" }))?;
            write_json(json.as_deref(), &report.to_json())?;
            Ok(report.passed())
        }
    }
}
