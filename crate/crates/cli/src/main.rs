use std::io::Read;
use std::ops::Range;
use std::path::PathBuf;
use std::process::ExitCode;

use bdg_core::generators::{complete_bipartite, fig1_example, fig2, random_digraph, random_satisfying, Fig2Params};
use bdg_core::oracle::{
    brute_cycle, conjecture_search, count_cycles, decode, exhaustive_verify_parallel, result_line, sharpness_search,
    VerificationStats,
};
use bdg_core::{
    check, run_engine, verify_hamiltonian_cycle, BipartiteDigraph, ConditionReport, ConditionSpec, EngineMode, Error,
    Outcome, Vertex, Witness,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

const WITNESS_NOTE: &str = "condition fails; non-Hamiltonicity NOT implied";

#[derive(Parser)]
#[command(name = "bdg", version, about = "Hamiltonian cycles in balanced bipartite digraphs")]
struct Cli {
    /// Print one JSON document instead of text lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a degree condition.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "a2star")]
        cond: Cond,
        /// Slack for `ak-star` and `a_k`.
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Find a Hamiltonian cycle or a witness pair.
    Hamilton {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "full")]
        mode: Mode,
        /// Print every applied move.
        #[arg(long)]
        trace: bool,
        /// Ask the brute-force oracle when the engine returns a witness.
        #[arg(long)]
        fallback_oracle: bool,
    },
    /// Brute-force search for a cycle of the given length.
    Oracle {
        file: PathBuf,
        /// Defaults to 2·min(a, b).
        #[arg(long)]
        length: Option<usize>,
        /// Count all such cycles instead.
        #[arg(long)]
        count: bool,
    },
    /// Write a generated digraph.
    Gen {
        #[arg(value_enum)]
        family: Family,
        #[arg(long, default_value_t = 3)]
        a: usize,
        #[arg(long)]
        b: Option<usize>,
        /// With `random`, sample until A_k* holds.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run engine and oracle on every digraph with `a` vertices per class.
    VerifyTheorem {
        #[arg(long)]
        a: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, value_enum, default_value = "full")]
        mode: Mode,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Index interval `lo..hi` of the enumeration.
        #[arg(long, value_parser = parse_range)]
        range: Option<Range<u64>>,
    },
    /// List A_k* digraphs without a cycle of length 2a.
    Sharpness {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        k: usize,
    },
    /// List strict-half-sum digraphs (a ≤ b) without a cycle of length 2a.
    Conjecture {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// Print a BDG file in canonical form.
    Fmt { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Cond {
    A2star,
    #[value(name = "ak-star")]
    AkStar,
    #[value(name = "a_k")]
    Ak,
    StrictHalf,
    Dirac,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Full,
    Remark26,
    #[value(name = "remark26-reverse")]
    Remark26Reverse,
}

impl From<Mode> for EngineMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Full => EngineMode::Full,
            Mode::Remark26 => EngineMode::Remark26Forward,
            Mode::Remark26Reverse => EngineMode::Remark26Reverse,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Fig2,
    Fig1,
    Random,
}

enum Failure {
    Usage(String),
    Theorem(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TheoremViolation { .. } => Failure::Theorem(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Run = Result<u8, Failure>;

fn parse_range(s: &str) -> Result<Range<u64>, String> {
    let (lo, hi) = s.split_once("..").ok_or("expected lo..hi")?;
    let lo = lo.parse::<u64>().map_err(|e| e.to_string())?;
    let hi = hi.parse::<u64>().map_err(|e| e.to_string())?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..hi)
}

fn load(path: &PathBuf) -> Result<BipartiteDigraph, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    BipartiteDigraph::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn words(seq: &[Vertex]) -> String {
    seq.iter().map(Vertex::to_string).collect::<Vec<_>>().join(" ")
}

fn emit_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

#[derive(Serialize)]
struct CheckJson<'a> {
    name: String,
    #[serde(flatten)]
    report: &'a ConditionReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'static str>,
}

fn cmd_check(json: bool, file: &PathBuf, cond: Cond, k: usize) -> Run {
    let d = load(file)?;
    let spec = match cond {
        Cond::A2star => ConditionSpec::AkStar(2),
        Cond::AkStar => ConditionSpec::AkStar(k),
        Cond::Ak => ConditionSpec::Ak(k),
        Cond::StrictHalf => ConditionSpec::StrictHalfSum,
        Cond::Dirac => ConditionSpec::DiracBipartite,
    };
    let report = check(&d, spec)?;
    let name = spec.name();
    if json {
        emit_json(&CheckJson { name, report: &report, note: (!report.holds).then_some(WITNESS_NOTE) });
    } else if let Some(w) = report.violations.first() {
        println!("FAIL {name} witness {} {} sum {} bound {}", w.u, w.v, w.sum, report.threshold);
        eprintln!("note: {WITNESS_NOTE}");
    } else {
        println!("PASS {name}");
    }
    Ok(if report.holds { 0 } else { 1 })
}

#[derive(Serialize)]
struct OracleVerdict {
    hamiltonian: bool,
    cycle: Option<Vec<Vertex>>,
}

#[derive(Serialize)]
struct HamiltonJson<'a> {
    outcome: &'a Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'static str>,
}

fn print_witness(w: &Witness) {
    println!("WITNESS {} {} {} sum {} bound {}", w.kind, w.u, w.v, w.sum, w.bound);
}

fn cmd_hamilton(json: bool, file: &PathBuf, mode: Mode, trace: bool, fallback: bool) -> Run {
    let d = load(file)?;
    let run = match run_engine(&d, mode.into()) {
        Err(Error::MatchingAbsent) => {
            if json {
                emit_json(&serde_json::json!({ "outcome": "MatchingAbsent" }));
            } else {
                println!("NO-MATCHING");
            }
            return Ok(1);
        }
        other => other?,
    };
    if let Outcome::Cycle(seq) = &run.outcome {
        if !verify_hamiltonian_cycle(&d, seq) {
            return Err(Failure::Usage(format!("internal error: engine cycle {} fails verification", words(seq))));
        }
    }
    let oracle = match (&run.outcome, fallback) {
        (Outcome::Witness(_), true) => {
            let cycle = brute_cycle(&d, d.order())?;
            Some(OracleVerdict { hamiltonian: cycle.is_some(), cycle })
        }
        _ => None,
    };
    let witness = matches!(run.outcome, Outcome::Witness(_));
    if json {
        emit_json(&HamiltonJson {
            outcome: &run.outcome,
            trace: trace.then(|| run.trace.iter().map(ToString::to_string).collect()),
            oracle,
            note: witness.then_some(WITNESS_NOTE),
        });
    } else {
        if trace {
            run.trace.iter().for_each(|m| println!("{m}"));
        }
        match &run.outcome {
            Outcome::Cycle(seq) => println!("CYCLE {}", words(seq)),
            Outcome::Witness(w) => {
                print_witness(w);
                eprintln!("note: {WITNESS_NOTE}");
            }
        }
        match oracle {
            Some(OracleVerdict { cycle: Some(seq), .. }) => println!("ORACLE CYCLE {}", words(&seq)),
            Some(OracleVerdict { cycle: None, .. }) => println!("ORACLE NONE"),
            None => {}
        }
    }
    Ok(if witness { 1 } else { 0 })
}

fn cmd_oracle(json: bool, file: &PathBuf, length: Option<usize>, count: bool) -> Run {
    let d = load(file)?;
    let length = length.unwrap_or(2 * d.a().min(d.b()));
    if count {
        let n = count_cycles(&d, length)?;
        if json {
            emit_json(&serde_json::json!({ "length": length, "count": n }));
        } else {
            println!("COUNT {n}");
        }
        return Ok(0);
    }
    let cycle = brute_cycle(&d, length)?;
    if json {
        emit_json(&serde_json::json!({ "length": length, "cycle": cycle }));
    } else {
        match &cycle {
            Some(seq) => println!("CYCLE {}", words(seq)),
            None => println!("NONE"),
        }
    }
    Ok(if cycle.is_some() { 0 } else { 1 })
}

fn cmd_gen(json: bool, family: Family, a: usize, b: Option<usize>, k: Option<usize>, p: f64, seed: u64) -> Run {
    let b_or = |default: usize| b.unwrap_or(default);
    let d = match family {
        Family::Complete => complete_bipartite(a, b_or(a)),
        Family::Fig2 => {
            let k = k.unwrap_or(0);
            fig2(Fig2Params { a, b: b_or(a + 2 * k + 2), k })?
        }
        Family::Fig1 => fig1_example()?,
        Family::Random => match k {
            Some(k) => random_satisfying(a, k, seed)?,
            None => random_digraph(a, b_or(a), p, seed)?,
        },
    };
    if json {
        emit_json(&serde_json::json!({ "bdg": d.serialize() }));
    } else {
        print!("{}", d.serialize());
    }
    Ok(0)
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    a: usize,
    k: usize,
    mode: EngineMode,
    #[serde(flatten)]
    stats: &'a VerificationStats,
}

fn cmd_verify(json: bool, a: usize, k: usize, mode: Mode, jobs: usize, range: Option<Range<u64>>) -> Run {
    let stats = exhaustive_verify_parallel(a, k, mode.into(), range, jobs)?;
    if json {
        emit_json(&VerifyJson { a, k, mode: mode.into(), stats: &stats });
    } else {
        println!(
            "checked {} satisfying {} counterexamples {}",
            stats.total,
            stats.satisfying,
            stats.counterexamples.len()
        );
        for &code in &stats.counterexamples {
            println!("COUNTEREXAMPLE {}", result_line(code, &decode(a, a, code)?));
        }
        for f in &stats.engine_failures {
            println!("ENGINE-FAILURE {} {}", f.code, f.reason);
        }
    }
    if stats.engine_failures.iter().any(|f| f.theorem_violation) {
        return Err(Failure::Theorem(format!("{} theorem violation(s)", stats.engine_failures.len())));
    }
    Ok(if stats.is_clean() { 0 } else { 1 })
}

fn print_found(json: bool, a: usize, b: usize, found: &[u64], extra: serde_json::Value) -> Run {
    let lines = found.iter().map(|&c| decode(a, b, c).map(|d| result_line(c, &d))).collect::<Result<Vec<_>, _>>()?;
    if json {
        let mut doc = extra;
        doc["found"] = serde_json::json!(lines);
        emit_json(&doc);
    } else {
        lines.iter().for_each(|l| println!("{l}"));
        println!("found {}", found.len());
    }
    Ok(if found.is_empty() { 0 } else { 1 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    let result = match cli.command {
        Command::Check { file, cond, k } => cmd_check(json, &file, cond, k),
        Command::Hamilton { file, mode, trace, fallback_oracle } => {
            cmd_hamilton(json, &file, mode, trace, fallback_oracle)
        }
        Command::Oracle { file, length, count } => cmd_oracle(json, &file, length, count),
        Command::Gen { family, a, b, k, p, seed } => cmd_gen(json, family, a, b, k, p, seed),
        Command::VerifyTheorem { a, k, mode, jobs, range } => cmd_verify(json, a, k, mode, jobs, range),
        Command::Sharpness { a, k } => sharpness_search(a, k)
            .map_err(Failure::from)
            .and_then(|f| print_found(json, a, a, &f, serde_json::json!({ "a": a, "k": k }))),
        Command::Conjecture { a, b } => conjecture_search(a, b)
            .map_err(Failure::from)
            .and_then(|f| print_found(json, a, b, &f, serde_json::json!({ "a": a, "b": b }))),
        Command::Fmt { file } => load(&file).map(|d| {
            print!("{}", d.serialize());
            0
        }),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Theorem(msg)) => {
            eprintln!("theorem violation: {msg}");
            ExitCode::from(3)
        }
    }
}
