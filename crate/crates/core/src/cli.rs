//! Command-line front end used by the `monideal` binary.
//!
//! [`run`] parses arguments, runs one subcommand and writes its result to
//! `out` as either a plain-text table or a single JSON document. Diagnostics
//! go to `err`. Exit codes: 0 on success, 1 when a computation fails (or a
//! check reports failures), 2 on usage and parse errors.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cache::PowerCache;
use crate::corpus::run_selftest;
use crate::decomposition::irreducible_decomposition;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::json::{ideal_from_json, IdealDoc, FORMAT_VERSION};
use crate::operators::{expand, localize, weight, ExpansionSpec, WeightSpec};
use crate::parse::{parse_ideal, parse_prime, parse_ring};
use crate::persistence::{
    ass_powers, colon_pattern, detect_fluctuation, family_lmr, observed_spi, spi_witness, spi_witness_check,
    ColonPattern, FluctuationVerdict, Triple, DEFAULT_HORIZON,
};
use crate::prime::MonomialPrime;
use crate::props;
use crate::ring::Ring;

/// Environment variable holding the default power-cache directory.
pub const CACHE_DIR_ENV: &str = "MONIDEAL_CACHE_DIR";

#[derive(Parser, Debug)]
#[command(name = "monideal", version, about = "Exact computation with monomial ideals")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Output::Table, global = true)]
    output: Output,
    /// Directory for persisted ideal powers.
    #[arg(long, env = CACHE_DIR_ENV, global = true)]
    cache_dir: Option<PathBuf>,
    /// Worker threads for parallel scans (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    threads: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Output {
    Table,
    Json,
}

#[derive(Args, Debug)]
struct IdealArgs {
    /// Comma-separated variable names, e.g. `x,y,z`.
    #[arg(long)]
    ring: String,
    /// Generators such as `x^2*y, y^3`, or a JSON ideal document.
    #[arg(long)]
    ideal: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal generators of (I : J).
    Colon {
        #[command(flatten)]
        input: IdealArgs,
        #[arg(long)]
        ideal2: String,
    },
    /// Minimal generators of I^s.
    Power {
        #[command(flatten)]
        input: IdealArgs,
        #[arg(long)]
        exp: u32,
    },
    /// Associated primes of I^s for s = 1..=powers.
    Ass {
        #[command(flatten)]
        input: IdealArgs,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        powers: u32,
    },
    /// Irredundant irreducible decomposition.
    Decompose {
        #[command(flatten)]
        input: IdealArgs,
    },
    /// Colon pattern and observed strong persistence index.
    Spi {
        #[command(flatten)]
        input: IdealArgs,
        #[arg(long, default_value_t = DEFAULT_HORIZON, value_parser = clap::value_parser!(u32).range(2..))]
        horizon: u32,
    },
    /// Colon pattern and fluctuation verdict.
    Fluct {
        #[command(flatten)]
        input: IdealArgs,
        #[arg(long, default_value_t = DEFAULT_HORIZON, value_parser = clap::value_parser!(u32).range(2..))]
        horizon: u32,
    },
    /// Expansion by a tuple of block sizes.
    Expand {
        #[command(flatten)]
        input: IdealArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        tuple: Vec<usize>,
    },
    /// Weighting x_i -> x_i^{w_i}.
    Weight {
        #[command(flatten)]
        input: IdealArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<u64>,
    },
    /// Localization at a monomial prime such as `(x,z)`.
    Localize {
        #[command(flatten)]
        input: IdealArgs,
        #[arg(long)]
        prime: String,
    },
    /// The family ideal L(m, r) in K[x,y,z], optionally analyzed.
    Family {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        r: u64,
        #[arg(long)]
        analyze: bool,
        /// Scan horizon for --analyze (default: max(6, m+3)).
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        horizon: Option<u32>,
    },
    /// Runs the built-in regression corpus.
    Selftest,
    /// Runs the seeded randomized operator suites.
    Props {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
}

/// Rendered result of a subcommand.
struct Report {
    table: String,
    json: Value,
    /// Whether a check-style subcommand found failures.
    failed: bool,
}

impl Report {
    fn ok(table: String, json: Value) -> Self {
        Self { table, json, failed: false }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::InvalidArgument(_)
        | Error::InvalidRing(_)
        | Error::RingMismatch { .. }
        | Error::Json(_)
        | Error::Schema(_) => 2,
        _ => 1,
    }
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };

    let result = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n as usize).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(Error::InvalidArgument(format!("cannot start {n} threads: {e}"))),
        },
        None => execute(&cli),
    };

    match result {
        Ok(report) => {
            let written = match cli.output {
                Output::Table => write!(out, "{}", report.table),
                Output::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report.json).expect("plain data")),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: cannot write output: {e}");
                return 1;
            }
            i32::from(report.failed)
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn read_ideal(text: &str, ring: &Ring, flag: &str) -> Result<MonomialIdeal> {
    let ideal = if text.trim_start().starts_with('{') {
        ideal_from_json(text)?
    } else {
        parse_ideal(text, ring).map_err(|e| Error::InvalidArgument(format!("{flag}: {e}")))?
    };
    ring.ensure_same(ideal.ring())?;
    Ok(ideal)
}

fn read_input(args: &IdealArgs) -> Result<(Ring, MonomialIdeal)> {
    let ring = parse_ring(&args.ring).map_err(|e| Error::InvalidArgument(format!("--ring: {e}")))?;
    let ideal = read_ideal(&args.ideal, &ring, "--ideal")?;
    Ok((ring, ideal))
}

fn doc(ideal: &MonomialIdeal) -> Value {
    serde_json::to_value(IdealDoc::from(ideal)).expect("plain data")
}

fn prime_names(p: &MonomialPrime) -> Value {
    json!(p.names())
}

fn primes_text(primes: &BTreeSet<MonomialPrime>) -> String {
    primes.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
}

fn triple_text(t: Option<Triple>) -> String {
    t.map_or_else(|| "none".to_string(), |(a, b, c)| format!("({a}, {b}, {c})"))
}

fn envelope(command: &str, body: Value) -> Value {
    let mut v = json!({ "format": FORMAT_VERSION, "command": command });
    if let (Value::Object(dst), Value::Object(src)) = (&mut v, body) {
        dst.extend(src);
    }
    v
}

fn ideal_report(command: &str, ideal: &MonomialIdeal) -> Report {
    Report::ok(format!("{ideal}\n"), envelope(command, json!({ "result": doc(ideal) })))
}

fn pattern_json(p: &ColonPattern) -> Value {
    json!({ "horizon": p.horizon, "entries": p.entries, "fingerprint": p.fingerprint })
}

fn fluct_json(v: &FluctuationVerdict) -> Value {
    json!({ "verdict": v.verdict, "case_i": v.case_i.map(|(a, b, c)| [a, b, c]), "case_ii": v.case_ii.map(|(a, b, c)| [a, b, c]) })
}

fn fluct_table(v: &FluctuationVerdict) -> String {
    let verdict = serde_json::to_value(v.verdict).expect("plain data");
    format!(
        "verdict: {}\ncase (i): {}\ncase (ii): {}\n",
        verdict.as_str().unwrap_or_default(),
        triple_text(v.case_i),
        triple_text(v.case_ii)
    )
}

fn ass_report(rows: &[(u32, BTreeSet<MonomialPrime>)]) -> (String, Value) {
    let table = rows.iter().map(|(s, ass)| format!("s={s}: {}\n", primes_text(ass))).collect();
    let json = rows
        .iter()
        .map(|(s, ass)| json!({ "s": s, "primes": ass.iter().map(prime_names).collect::<Vec<_>>() }))
        .collect();
    (table, Value::Array(json))
}

fn open_cache(cli: &Cli) -> Result<PowerCache> {
    match &cli.cache_dir {
        Some(dir) => PowerCache::with_dir(dir),
        None => Ok(PowerCache::new()),
    }
}

fn execute(cli: &Cli) -> Result<Report> {
    let cache = open_cache(cli)?;
    match &cli.command {
        Command::Colon { input, ideal2 } => {
            let (ring, i) = read_input(input)?;
            let j = read_ideal(ideal2, &ring, "--ideal2")?;
            Ok(ideal_report("colon", &i.colon(&j)?))
        }
        Command::Power { input, exp } => {
            let (_, i) = read_input(input)?;
            Ok(ideal_report("power", &*cache.power(&i, *exp)?))
        }
        Command::Ass { input, powers } => {
            let (_, i) = read_input(input)?;
            let (table, rows) = ass_report(&ass_powers(&i, *powers, &cache)?);
            Ok(Report::ok(table, envelope("ass", json!({ "ideal": doc(&i), "powers": rows }))))
        }
        Command::Decompose { input } => {
            let (_, i) = read_input(input)?;
            let d = irreducible_decomposition(&i)?;
            let mut table: String = d.components().iter().map(|c| format!("{c}\n")).collect();
            table.push_str(&format!("ass: {}\n", primes_text(&d.associated_primes())));
            let components: Vec<Value> = d.components().iter().map(|c| doc(&c.to_ideal())).collect();
            let ass: Vec<Value> = d.associated_primes().iter().map(prime_names).collect();
            Ok(Report::ok(
                table,
                envelope("decompose", json!({ "ideal": doc(&i), "components": components, "associated_primes": ass })),
            ))
        }
        Command::Spi { input, horizon } => {
            let (_, i) = read_input(input)?;
            let p = colon_pattern(&i, *horizon, &cache)?;
            let spi = observed_spi(&p);
            Ok(Report::ok(
                format!("pattern: {p}\n{spi}\n"),
                envelope("spi", json!({ "ideal": doc(&i), "pattern": pattern_json(&p), "report": spi })),
            ))
        }
        Command::Fluct { input, horizon } => {
            let (_, i) = read_input(input)?;
            let p = colon_pattern(&i, *horizon, &cache)?;
            let v = detect_fluctuation(&p);
            Ok(Report::ok(
                format!("pattern: {p}\n{}", fluct_table(&v)),
                envelope("fluct", json!({ "ideal": doc(&i), "pattern": pattern_json(&p), "fluctuation": fluct_json(&v) })),
            ))
        }
        Command::Expand { input, tuple } => {
            let (ring, i) = read_input(input)?;
            Ok(ideal_report("expand", &expand(&i, &ExpansionSpec::new(&ring, tuple.clone())?)?))
        }
        Command::Weight { input, weights } => {
            let (_, i) = read_input(input)?;
            Ok(ideal_report("weight", &weight(&i, &WeightSpec::new(weights.clone())?)?))
        }
        Command::Localize { input, prime } => {
            let (ring, i) = read_input(input)?;
            let p = parse_prime(prime, &ring).map_err(|e| Error::InvalidArgument(format!("--prime: {e}")))?;
            Ok(ideal_report("localize", &localize(&i, &p)?))
        }
        Command::Family { m, r, analyze, horizon } => family(*m, *r, *analyze, *horizon, &cache),
        Command::Selftest => {
            let outcomes = run_selftest(&cache);
            let failed = outcomes.iter().any(|o| !o.passed);
            let width = outcomes.iter().map(|o| o.name.len()).max().unwrap_or(0);
            let mut table: String = outcomes
                .iter()
                .map(|o| format!("{} {:width$}  {}\n", if o.passed { "PASS" } else { "FAIL" }, o.name, o.detail))
                .collect();
            let passed = outcomes.iter().filter(|o| o.passed).count();
            table.push_str(&format!("{passed}/{} checks passed\n", outcomes.len()));
            let checks: Vec<Value> = outcomes
                .iter()
                .map(|o| json!({ "name": o.name, "passed": o.passed, "detail": o.detail }))
                .collect();
            Ok(Report { table, json: envelope("selftest", json!({ "checks": checks })), failed })
        }
        Command::Props { seed, count } => {
            let shape = props::Shape::default();
            let suites: [(&str, Result<Vec<String>>); 5] = [
                ("expansion", props::expansion_suite(*seed, *count, shape)),
                ("weighting", props::weighting_suite(*seed, *count, shape)),
                ("localization", props::localization_suite(*seed, *count, shape)),
                ("containment", props::containment_suite(*seed, *count, shape)),
                ("transfer", props::transfer_suite(*seed, (*count).min(50), shape, 4)),
            ];
            let mut table = String::new();
            let mut rows = Vec::new();
            let mut failed = false;
            for (name, res) in suites {
                let failures = res?;
                failed |= !failures.is_empty();
                table.push_str(&format!("{name}: {} failures\n", failures.len()));
                for f in &failures {
                    table.push_str(&format!("  {f}\n"));
                }
                rows.push(json!({ "suite": name, "failures": failures }));
            }
            Ok(Report { table, json: envelope("props", json!({ "seed": seed, "count": count, "suites": rows })), failed })
        }
    }
}

fn family(m: u64, r: u64, analyze: bool, horizon: Option<u32>, cache: &PowerCache) -> Result<Report> {
    let l = family_lmr(m, r)?;
    let mut table = format!("{l}\n");
    let mut body = json!({ "m": m, "r": r, "ideal": doc(&l) });
    if analyze {
        let default = u32::try_from(m + 3).unwrap_or(u32::MAX).max(DEFAULT_HORIZON);
        let horizon = horizon.unwrap_or(default);
        let p = colon_pattern(&l, horizon, cache)?;
        let spi = observed_spi(&p);
        let v = detect_fluctuation(&p);
        let s_max = u32::try_from(m + 2).map_err(|_| Error::InvalidArgument("m is too large".into()))?;
        let (ass_table, ass_json) = ass_report(&ass_powers(&l, s_max, cache)?);
        let mut witnesses = Vec::new();
        table.push_str(&format!("pattern: {p}\n{spi}\n{}", fluct_table(&v)));
        table.push_str(&ass_table);
        for s in 2..=m + 1 {
            let u = spi_witness(m, s)?;
            let ok = spi_witness_check(m, r, s, cache)?;
            table.push_str(&format!("witness s={s}: {} {}\n", u.display(l.ring()), if ok { "ok" } else { "FAILED" }));
            witnesses.push(json!({ "s": s, "witness": u.exponents(), "holds": ok }));
        }
        if let Value::Object(o) = &mut body {
            o.insert("pattern".into(), pattern_json(&p));
            o.insert("report".into(), serde_json::to_value(&spi).expect("plain data"));
            o.insert("fluctuation".into(), fluct_json(&v));
            o.insert("ass_powers".into(), ass_json);
            o.insert("witnesses".into(), Value::Array(witnesses));
        }
    }
    Ok(Report::ok(table, envelope("family", body)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("monideal").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn power_zero_is_unit() {
        assert_eq!(call(&["power", "--ring", "x,y", "--ideal", "x", "--exp", "0"]), (0, "1\n".into(), String::new()));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["power", "--ring", "x,y", "--ideal", "x*q", "--exp", "2"]).0, 2);
        assert_eq!(call(&["nonsense"]).0, 2);
        assert_eq!(call(&["spi", "--ring", "x", "--ideal", "x", "--horizon", "1"]).0, 2);
        assert_eq!(call(&["spi", "--ring", "x", "--ideal", "0"]).0, 1);
        assert_eq!(call(&["weight", "--ring", "x", "--ideal", "x^9223372036854775808", "--weights", "2"]).0, 1);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn json_envelope() {
        let (code, out, _) = call(&["--output", "json", "colon", "--ring", "x,y", "--ideal", "x^2, y", "--ideal2", "x"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["format"], 1);
        assert_eq!(v["result"]["generators"], json!([[1, 0], [0, 1]]));
    }

    #[test]
    fn json_ideal_input() {
        let (code, out, _) = call(&[
            "power", "--ring", "x,y", "--ideal", r#"{"format":1,"ring":["x","y"],"generators":[[1,1]]}"#, "--exp", "2",
        ]);
        assert_eq!((code, out.as_str()), (0, "x^2*y^2\n"));
        assert_eq!(call(&["power", "--ring", "x", "--ideal", r#"{"format":1,"ring":["y"],"generators":[[1]]}"#, "--exp", "1"]).0, 2);
    }
}
