//! Command-line front end: reads `.inf` system files and colist literals,
//! runs the engine, and produces deterministic text reports.
//!
//! Exit codes: 0 success (or a true verdict), 1 a negative answer, 2 a
//! disagreement between engine and references, 64 unparsable input or
//! usage, 66 unreadable file, 70 an internal invariant violation.

pub mod syntax;

use std::collections::BTreeSet;
use std::fmt::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use gis_core::predicates::{decide_direct, engine_verdict, spec_oracle};
use gis_core::proof::{
    check_finite, check_rational_in_gen, extract_finite_proof, extract_rational_proof,
};
use gis_core::{CheckReport, ElementPredicate, JudgmentSet, Query};

pub use syntax::{parse_colist, parse_system, render_system, ColistError, ParseError, SystemFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_DISAGREE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_NOINPUT: i32 = 66;
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Debug, Parser)]
#[command(
    name = "gis",
    version,
    about = "Interpretations of inference systems with corules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the inductive interpretation of the rules
    Ind { file: PathBuf },
    /// Print the coinductive interpretation of the rules
    Coind { file: PathBuf },
    /// Print the interpretation generated by the corules
    Gen { file: PathBuf },
    /// Check the file's `spec:` line by bounded coinduction
    Check { file: PathBuf },
    /// Print a derivation of a judgment
    Prove {
        file: PathBuf,
        judgment: String,
        /// Print a rational (cyclic) derivation in the generated interpretation
        #[arg(long)]
        rational: bool,
    },
    /// Evaluate a list predicate by the engine and by two references
    Pred {
        kind: Kind,
        /// Colist literal, e.g. "1 2 | 3"
        #[arg(long, allow_hyphen_values = true)]
        list: String,
        /// Element predicate: positive, even, odd, eq:<n>, gt:<n>
        #[arg(long)]
        p: Option<String>,
        /// Element for `member`, claimed maximum for `max`
        #[arg(long)]
        x: Option<u64>,
        /// Candidate maxima for `max`, comma separated
        #[arg(long, value_delimiter = ',')]
        candidates: Option<Vec<u64>>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Member,
    Allpos,
    Always,
    Eventually,
    Infoften,
    Max,
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn new(code: i32, stdout: String) -> Self {
        Output {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        stderr.push('\n');
        Output {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Runs one command line; `args` includes the program name.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output::fail(EXIT_USAGE, text.trim_end())
            } else {
                Output::new(EXIT_OK, text)
            };
        }
    };
    match cli.command {
        Command::Ind { file } => interpretation(&file, |f| f.system.ind_interpretation(false)),
        Command::Coind { file } => interpretation(&file, |f| f.system.coind_interpretation()),
        Command::Gen { file } => interpretation(&file, |f| f.system.gen_interpretation()),
        Command::Check { file } => check(&file),
        Command::Prove {
            file,
            judgment,
            rational,
        } => prove(&file, &judgment, rational),
        Command::Pred {
            kind,
            list,
            p,
            x,
            candidates,
        } => pred(kind, &list, p.as_deref(), x, candidates),
    }
}

fn load(path: &PathBuf) -> Result<SystemFile, Output> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Output::fail(EXIT_NOINPUT, format!("{}: {e}", path.display())))?;
    parse_system(&text).map_err(|e| Output::fail(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn list_names(file: &SystemFile, set: &JudgmentSet) -> String {
    set.iter().fold(String::new(), |mut out, j| {
        let _ = writeln!(out, "{}", file.system.display_name(j));
        out
    })
}

fn interpretation(path: &PathBuf, f: impl Fn(&SystemFile) -> JudgmentSet) -> Output {
    match load(path) {
        Ok(file) => Output::new(EXIT_OK, list_names(&file, &f(&file))),
        Err(out) => out,
    }
}

fn write_condition(out: &mut String, name: &str, report: &CheckReport, file: &SystemFile) {
    let _ = writeln!(out, "{name}: {}", if report.ok() { "PASS" } else { "FAIL" });
    for failure in &report.failures {
        let _ = writeln!(
            out,
            "  {} {}",
            failure.reason.tag(),
            file.system.display_name(failure.judgment)
        );
    }
}

fn check(path: &PathBuf) -> Output {
    let file = match load(path) {
        Ok(file) => file,
        Err(out) => return out,
    };
    let Some(spec) = &file.spec else {
        return Output::fail(EXIT_USAGE, format!("{}: no `spec:` line", path.display()));
    };
    let report = file.system.bounded_coinduction_check(spec);
    let mut out = String::new();
    write_condition(&mut out, "boundedness", &report.boundedness, &file);
    write_condition(&mut out, "consistency", &report.consistency, &file);
    match report.within_gen {
        Some(true) => out.push_str("spec within gen: PASS\n"),
        Some(false) => {
            return Output::fail(
                EXIT_INTERNAL,
                "internal error: a bounded consistent spec escaped the generated interpretation",
            )
        }
        None => out.push_str("spec within gen: SKIPPED\n"),
    }
    Output::new(if report.ok() { EXIT_OK } else { EXIT_NEGATIVE }, out)
}

fn prove(path: &PathBuf, judgment: &str, rational: bool) -> Output {
    let file = match load(path) {
        Ok(file) => file,
        Err(out) => return out,
    };
    let sys = &file.system;
    let Some(j) = sys.find(judgment) else {
        return Output::fail(EXIT_USAGE, format!("unknown judgment `{judgment}`"));
    };
    let (rendered, valid) = if rational {
        match extract_rational_proof(sys, j) {
            Some(tree) => (tree.render(sys), check_rational_in_gen(&tree, sys)),
            None => return Output::new(EXIT_NEGATIVE, format!("{judgment}: not derivable\n")),
        }
    } else {
        match extract_finite_proof(sys, false, j) {
            Some(tree) => (tree.render(sys), check_finite(&tree, sys, false)),
            None => return Output::new(EXIT_NEGATIVE, format!("{judgment}: not derivable\n")),
        }
    };
    match valid {
        Ok(true) => Output::new(EXIT_OK, rendered),
        _ => Output::fail(
            EXIT_INTERNAL,
            "internal error: extracted derivation was rejected",
        ),
    }
}

fn pred(
    kind: Kind,
    list: &str,
    p: Option<&str>,
    x: Option<u64>,
    candidates: Option<Vec<u64>>,
) -> Output {
    let xs = match parse_colist(list) {
        Ok(xs) => xs,
        Err(e) => return Output::fail(EXIT_USAGE, format!("--list: {e}")),
    };
    let need_p = || -> Result<ElementPredicate, Output> {
        let p = p.ok_or_else(|| Output::fail(EXIT_USAGE, "this predicate needs --p"))?;
        p.parse()
            .map_err(|e: gis_core::Error| Output::fail(EXIT_USAGE, format!("--p: {e}")))
    };
    let need_x = || x.ok_or_else(|| Output::fail(EXIT_USAGE, "this predicate needs --x"));
    let query = match kind {
        Kind::Member => need_x().map(Query::Member),
        Kind::Allpos => Ok(Query::AllPos),
        Kind::Always => need_p().map(Query::Always),
        Kind::Eventually => need_p().map(Query::Eventually),
        Kind::Infoften => need_p().map(Query::InfinitelyOften),
        Kind::Max => need_x().map(|m| Query::MaxElem {
            m,
            candidates: candidates.map(|c| c.into_iter().collect::<BTreeSet<u64>>()),
        }),
    };
    let query = match query {
        Ok(q) => q,
        Err(out) => return out,
    };
    let engine = match engine_verdict(&query, &xs) {
        Ok(v) => v,
        Err(e) => return Output::fail(EXIT_USAGE, e.to_string()),
    };
    let direct = decide_direct(&query, &xs);
    let oracle = spec_oracle(&query, &xs);
    let mut out = format!("engine: {engine}\ndirect: {direct}\noracle: {oracle}\n");
    let code = if engine == direct && direct == oracle {
        let _ = writeln!(out, "verdict: {engine}\nAGREE");
        if engine {
            EXIT_OK
        } else {
            EXIT_NEGATIVE
        }
    } else {
        out.push_str("DISAGREE\n");
        EXIT_DISAGREE
    };
    Output::new(code, out)
}
