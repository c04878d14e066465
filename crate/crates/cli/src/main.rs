//! `rothe`: command-line access to Rothe diagrams, tableaux, promotion,
//! the word maps, lifting and the verification suites.
//!
//! Exit status: 0 success, 1 verification failure or broken invariant,
//! 2 invalid input, 3 resource cap exceeded.

use std::fs;
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rothe::counting::{count_avoiders_with, gf_coefficients, srt_count_formula, DEFAULT_AVOIDER_CAP};
use rothe::eg::{gamma_star_traced, gamma_traced, omega_traced, WordTrace};
use rothe::jdt::iterate_promotion;
use rothe::lifting::{inject_traced, lift_full, LiftStep};
use rothe::perm::{count_reduced_words, enumerate_reduced_words, DEFAULT_WORD_CAP};
use rothe::tableau::{
    balanced_fillings, count_brt, count_srt, enumerate_srt, TableauDoc, DEFAULT_BRT_CAP_LENGTH,
};
use rothe::verify::{Bounds, Suite, VerificationReport};
use rothe::{Cell, Diagram, Error, Permutation, Tableau};

/// Environment variable holding the default worker count.
const WORKERS_VAR: &str = "ROTHE_WORKERS";

#[derive(Parser, Debug)]
#[command(name = "rothe", version, about = "Rothe diagrams, Rothe tableaux and reduced words")]
struct Cli {
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Include intermediate steps.
    #[arg(long, global = true)]
    trace: bool,
    /// Largest number of objects an enumeration may produce.
    #[arg(long, global = true, default_value_t = DEFAULT_WORD_CAP)]
    limit: usize,
    /// Largest n for count-avoiders and verify.
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Longest permutation whose balanced fillings are brute-forced.
    #[arg(long, global = true)]
    cap_length: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Draw D(w) with the permutation matrix dots.
    Diagram { perm: String },
    /// Lehmer code of w.
    Code { perm: String },
    /// List or count SRT(w), BRT(w) or R(w).
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        perm: String,
        #[arg(long)]
        count_only: bool,
    },
    /// Promotion (or dual-promotion) of a standard Young tableau.
    Promote {
        tableau: String,
        #[arg(long)]
        dual: bool,
        #[arg(long, default_value_t = 1)]
        steps: usize,
    },
    /// Γ of a standard staircase tableau.
    Gamma { tableau: String },
    /// Γ* of a standard staircase tableau.
    GammaStar { tableau: String },
    /// Ω of a standard Young tableau.
    Omega { tableau: String },
    /// Lift T ∈ SRT(w) along first ascents to a dominant permutation.
    Lift { perm: String, tableau: String },
    /// The reduced word of w assigned to T ∈ SRT(w).
    Inject { perm: String, tableau: String },
    /// Closed-form |SRT(w)| for pattern-avoiding w.
    Formula { perm: String },
    /// Table of a_n by exhaustive count.
    CountAvoiders {
        /// Also compare against the generating-function coefficients.
        #[arg(long)]
        gf_check: bool,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Srt,
    Brt,
    Words,
}

/// What a command produced: text, its JSON twin, and whether a check failed.
struct Output {
    text: String,
    json: Value,
    failed: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Output {
        Output {
            text,
            json,
            failed: false,
        }
    }
}

type CmdResult = Result<Output, Error>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = if cli.json {
                serde_json::to_string(&out.json).expect("json output") + "\n"
            } else {
                out.text
            };
            // a closed pipe downstream is not an error of ours
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            ExitCode::from(if out.failed { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidInput(_) => 2,
        Error::ResourceCap(_) => 3,
        Error::ContractViolation(_) | Error::NotApplicable(_) => 1,
    }
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Diagram { perm } => diagram(&parse_perm(perm)?),
        Command::Code { perm } => code(&parse_perm(perm)?),
        Command::Enumerate {
            kind,
            perm,
            count_only,
        } => enumerate(cli, *kind, &parse_perm(perm)?, *count_only),
        Command::Promote {
            tableau,
            dual,
            steps,
        } => promote(cli, &parse_tableau(tableau)?.0, *dual, *steps),
        Command::Gamma { tableau } => word_map(cli, &parse_tableau(tableau)?.0, false),
        Command::GammaStar { tableau } => word_map(cli, &parse_tableau(tableau)?.0, true),
        Command::Omega { tableau } => omega(cli, &parse_tableau(tableau)?.0),
        Command::Lift { perm, tableau } => {
            let (w, t) = perm_and_tableau(perm, tableau)?;
            lift(cli, &w, &t)
        }
        Command::Inject { perm, tableau } => {
            let (w, t) = perm_and_tableau(perm, tableau)?;
            inject(cli, &w, &t)
        }
        Command::Formula { perm } => formula(&parse_perm(perm)?),
        Command::CountAvoiders { gf_check } => count_avoiders(cli, *gf_check),
        Command::Verify { suite } => verify(cli, suite),
    }
}

fn workers() -> Result<usize, Error> {
    match std::env::var(WORKERS_VAR) {
        Err(_) => Ok(1),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&k| k >= 1)
            .ok_or_else(|| Error::InvalidInput(format!("{WORKERS_VAR}={v:?} is not a positive integer"))),
    }
}

fn parse_perm(s: &str) -> Result<Permutation, Error> {
    s.parse()
}

/// Inline JSON, row shorthand `1,3/2`, or a path to a JSON file.
fn parse_tableau(arg: &str) -> Result<(Tableau, Option<Permutation>), Error> {
    let trimmed = arg.trim();
    if trimmed.starts_with('{') {
        return from_doc(trimmed);
    }
    if trimmed.contains('/') && !std::path::Path::new(trimmed).exists() {
        return Ok((Tableau::parse_rows(trimmed)?, None));
    }
    match fs::read_to_string(trimmed) {
        Ok(body) => from_doc(&body),
        Err(_) if !trimmed.contains('/') && trimmed.split(',').all(|x| x.trim().parse::<u32>().is_ok()) => {
            Ok((Tableau::parse_rows(trimmed)?, None))
        }
        Err(e) => Err(Error::InvalidInput(format!("cannot read tableau file {trimmed}: {e}"))),
    }
}

fn from_doc(json: &str) -> Result<(Tableau, Option<Permutation>), Error> {
    let doc = TableauDoc::parse(json)?;
    Ok((doc.tableau()?, doc.permutation()?))
}

fn perm_and_tableau(perm: &str, tableau: &str) -> Result<(Permutation, Tableau), Error> {
    let w = parse_perm(perm)?;
    let (t, doc_perm) = parse_tableau(tableau)?;
    if let Some(p) = doc_perm {
        if p != w {
            return Err(Error::InvalidInput(format!(
                "tableau document is for {p}, not {w}"
            )));
        }
    }
    Ok((w, t))
}

fn cell_json(c: Cell) -> Value {
    json!([c.row, c.col])
}

fn cells_json(cells: impl IntoIterator<Item = Cell>) -> Value {
    Value::Array(cells.into_iter().map(cell_json).collect())
}

fn cells_text(cells: &[Cell]) -> String {
    cells.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

fn doc_json(t: &Tableau, w: Option<&Permutation>) -> Value {
    serde_json::to_value(t.to_doc(None, w)).expect("tableau json")
}

fn diagram(w: &Permutation) -> CmdResult {
    let d = Diagram::rothe(w);
    let text = d.render(Some(w));
    let json = json!({
        "perm": w.word(),
        "n": w.size(),
        "length": d.len(),
        "cells": cells_json(d.cells().iter().copied()),
        "code": w.lehmer_code().entries,
    });
    Ok(Output::ok(text, json))
}

fn code(w: &Permutation) -> CmdResult {
    let c = w.lehmer_code();
    Ok(Output::ok(
        format!("{c}\n"),
        json!({ "perm": w.word(), "code": c.entries }),
    ))
}

fn enumerate(cli: &Cli, kind: Kind, w: &Permutation, count_only: bool) -> CmdResult {
    let cap_length = cli.cap_length.unwrap_or(DEFAULT_BRT_CAP_LENGTH);
    let kind_name = match kind {
        Kind::Srt => "srt",
        Kind::Brt => "brt",
        Kind::Words => "words",
    };
    if count_only {
        let count = match kind {
            Kind::Srt => count_srt(w),
            Kind::Brt => count_brt(w, cap_length)?,
            Kind::Words => count_reduced_words(w),
        };
        return Ok(Output::ok(
            format!("{count}\n"),
            json!({ "perm": w.word(), "kind": kind_name, "count": count.to_string() }),
        ));
    }
    let (lines, items): (Vec<String>, Vec<Value>) = match kind {
        Kind::Words => enumerate_reduced_words(w, cli.limit)?
            .into_iter()
            .map(|r| (r.to_string(), json!(r.letters)))
            .unzip(),
        Kind::Srt | Kind::Brt => {
            let tableaux = if matches!(kind, Kind::Srt) {
                enumerate_srt(w, cli.limit)?
            } else {
                let all = balanced_fillings(&Diagram::rothe(w), cap_length)?;
                if all.len() > cli.limit {
                    return Err(Error::ResourceCap(format!(
                        "{} balanced fillings exceed the limit of {}",
                        all.len(),
                        cli.limit
                    )));
                }
                all
            };
            tableaux
                .iter()
                .map(|t| (t.to_string(), doc_json(t, Some(w))))
                .unzip()
        }
    };
    let mut text = String::new();
    for l in &lines {
        text.push_str(l);
        text.push('\n');
    }
    let json = json!({ "perm": w.word(), "kind": kind_name, "count": items.len().to_string(), "items": items });
    Ok(Output::ok(text, json))
}

fn promote(cli: &Cli, t: &Tableau, dual: bool, steps: usize) -> CmdResult {
    if steps == 0 {
        return Err(Error::InvalidInput("--steps must be at least 1".into()));
    }
    let run = iterate_promotion(t, steps, dual)?;
    let last = &run.last().expect("steps ≥ 1").tableau;
    let mut text = String::new();
    let mut trace = Vec::new();
    if cli.trace {
        for (k, s) in run.iter().enumerate() {
            text.push_str(&format!("step {}: cell {} path {}\n{}", k + 1, s.cell, s.path, s.tableau.render()));
            trace.push(json!({
                "cell": cell_json(s.cell),
                "path": cells_json(s.path.cells.iter().copied()),
                "tableau": doc_json(&s.tableau, None),
            }));
        }
    } else {
        text.push_str(&last.render());
        let cells: Vec<Cell> = run.iter().map(|s| s.cell).collect();
        text.push_str(&format!("cells {}\n", cells_text(&cells)));
    }
    let mut json = json!({
        "operation": if dual { "dual-promotion" } else { "promotion" },
        "steps": steps,
        "tableau": doc_json(last, None),
        "cells": cells_json(run.iter().map(|s| s.cell)),
    });
    if cli.trace {
        json["trace"] = Value::Array(trace);
    }
    Ok(Output::ok(text, json))
}

fn word_map(cli: &Cli, t: &Tableau, star: bool) -> CmdResult {
    let WordTrace { word, steps } = if star { gamma_star_traced(t)? } else { gamma_traced(t)? };
    let cells: Vec<Cell> = steps.iter().map(|s| s.cell).collect();
    let mut text = format!("{word}\n");
    if cli.trace {
        text.push_str(&format!("cells {}\n", cells_text(&cells)));
    }
    let mut json = json!({ "word": word.letters, "n": word.n });
    if cli.trace {
        json["cells"] = cells_json(cells);
    }
    Ok(Output::ok(text, json))
}

fn omega(cli: &Cli, t: &Tableau) -> CmdResult {
    let run = omega_traced(t)?;
    let w = run.perm.trimmed();
    let mut text = format!("{}\n{}\n", run.word, w);
    let mut json = json!({ "word": run.word.letters, "perm": w.word() });
    if cli.trace {
        text.push_str(&format!(
            "packed\n{}added {}\ngamma {}\n",
            run.packed.render(),
            cells_text(&run.added.cells().iter().copied().collect::<Vec<_>>()),
            run.gamma.word
        ));
        json["packed"] = doc_json(&run.packed, None);
        json["added"] = cells_json(run.added.cells().iter().copied());
        json["gamma"] = json!(run.gamma.word.letters);
    }
    Ok(Output::ok(text, json))
}

fn step_text(k: usize, s: &LiftStep) -> String {
    format!(
        "step {}: ascent {} at {} path {}: {} -> {}\n{}",
        k + 1,
        s.ascent,
        s.added,
        s.path,
        s.input,
        s.output,
        s.tableau.render()
    )
}

fn step_json(s: &LiftStep) -> Value {
    json!({
        "ascent": s.ascent,
        "added": cell_json(s.added),
        "path": cells_json(s.path.cells.iter().copied()),
        "perm": s.output.word(),
        "tableau": doc_json(&s.tableau, Some(&s.output)),
    })
}

fn lift(cli: &Cli, w: &Permutation, t: &Tableau) -> CmdResult {
    let (trace, lifted) = lift_full(w, t)?;
    let mut text = String::new();
    if cli.trace {
        for (k, s) in trace.steps.iter().enumerate() {
            text.push_str(&step_text(k, s));
        }
    }
    text.push_str(&format!(
        "suffix {:?}\ntarget {}\n{}",
        trace.suffix,
        trace.target,
        lifted.render()
    ));
    let mut json = json!({
        "suffix": trace.suffix,
        "target": trace.target.word(),
        "tableau": doc_json(&lifted, Some(&trace.target)),
    });
    if cli.trace {
        json["steps"] = Value::Array(trace.steps.iter().map(step_json).collect());
    }
    Ok(Output::ok(text, json))
}

fn inject(cli: &Cli, w: &Permutation, t: &Tableau) -> CmdResult {
    let run = inject_traced(w, t)?;
    let mut text = format!("{}\n", run.word);
    let mut json = json!({ "perm": w.word(), "word": run.word.letters });
    if cli.trace {
        text.push_str(&format!(
            "suffix {:?}\nomega {}\n",
            run.trace.suffix, run.omega.word
        ));
        json["suffix"] = json!(run.trace.suffix);
        json["omega"] = json!(run.omega.word.letters);
    }
    Ok(Output::ok(text, json))
}

fn formula(w: &Permutation) -> CmdResult {
    match srt_count_formula(w) {
        Ok(v) => Ok(Output::ok(
            format!("{v}\n"),
            json!({ "perm": w.word(), "applicable": true, "value": v.to_string() }),
        )),
        Err(Error::NotApplicable(reason)) => Ok(Output::ok(
            format!("not applicable: {reason}\n"),
            json!({ "perm": w.word(), "applicable": false, "reason": reason }),
        )),
        Err(e) => Err(e),
    }
}

fn count_avoiders(cli: &Cli, gf_check: bool) -> CmdResult {
    let max_n = cli.max_n.unwrap_or(Suite::Avoiders.default_max_n());
    if max_n == 0 {
        return Err(Error::InvalidInput("--max-n must be at least 1".into()));
    }
    let workers = workers()?;
    let series = if gf_check { Some(gf_coefficients(max_n)?) } else { None };
    let mut text = String::from(if gf_check { "n\tbrute\tseries\tmatch\n" } else { "n\tbrute\n" });
    let mut rows = Vec::new();
    let mut failed = false;
    for n in 1..=max_n {
        let brute = count_avoiders_with(n, DEFAULT_AVOIDER_CAP, workers)?;
        match &series {
            Some(s) => {
                let ok = s[n - 1] == brute.into();
                failed |= !ok;
                text.push_str(&format!("{n}\t{brute}\t{}\t{}\n", s[n - 1], if ok { "yes" } else { "NO" }));
                rows.push(json!({ "n": n, "brute": brute, "series": s[n - 1].to_string(), "match": ok }));
            }
            None => {
                text.push_str(&format!("{n}\t{brute}\n"));
                rows.push(json!({ "n": n, "brute": brute }));
            }
        }
    }
    Ok(Output {
        text,
        json: json!({ "rows": rows }),
        failed,
    })
}

fn verify(cli: &Cli, suite: &str) -> CmdResult {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse()?]
    };
    let workers = workers()?;
    let mut reports: Vec<VerificationReport> = Vec::new();
    for s in suites {
        let start = Instant::now();
        let mut report = s.run(&Bounds::for_suite(s, cli.max_n, cli.cap_length), workers)?;
        let elapsed = start.elapsed();
        eprintln!("{}: {:.2?}", s, elapsed);
        if cli.trace {
            report.elapsed_ms = Some(elapsed.as_millis() as u64);
        }
        reports.push(report);
    }
    let passed = reports.iter().all(VerificationReport::passed);
    let text = reports.iter().map(|r| r.to_string()).collect::<String>()
        + if passed { "all checks passed\n" } else { "verification FAILED\n" };
    Ok(Output {
        text,
        json: json!({ "passed": passed, "reports": reports }),
        failed: !passed,
    })
}
