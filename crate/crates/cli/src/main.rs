use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use braid3::census::{self, CensusBounds};
use braid3::invariants::{invariant_report, InvariantReport};
use braid3::lspace::{classify, Chirality, Verdict};
use braid3::selfcheck::{self, SuiteResult};
use braid3::{normalize, BraidWord, ParseError, SchreierForm};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "braid3",
    version,
    about = "Invariants, normal forms and L-space classification of closed 3-braids"
)]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct WordArg {
    /// Braid word, e.g. "1 -2 1 -2", "s1^3 s2^-3" or "C^2 s1^5 s2^-1"
    #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
    word: Vec<String>,
}

impl WordArg {
    fn text(&self) -> String {
        self.word.join(" ")
    }
}

#[derive(Subcommand)]
enum Command {
    /// Jones and Alexander polynomials of the closure
    Invariants(WordArg),
    /// Schreier normal form of the conjugacy class
    NormalForm(WordArg),
    /// L-space knot verdict with certificate and obstructions
    Classify(WordArg),
    /// Classify every knot normal form within bounds, as JSON lines
    Enumerate {
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k_min: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k_max: i64,
        #[arg(long, default_value_t = 1)]
        max_s: usize,
        #[arg(long, default_value_t = 4)]
        max_sum: u64,
        /// Output file; stdout when absent
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the closed-form self-check suites
    Selfcheck {
        /// Largest syllable exponent in the coefficient grid
        #[arg(long, default_value_t = 4)]
        grid_max: u64,
        #[arg(long, hide = true)]
        flip_convention: bool,
    },
}

enum Failure {
    Parse { input: String, error: ParseError },
    Selfcheck,
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

#[derive(Serialize)]
struct ReportBundle<'a> {
    input: &'a str,
    word: &'a BraidWord,
    normal_form: SchreierForm,
    invariants: InvariantReport,
    verdict: Verdict,
}

fn parse_word(input: &str) -> Result<BraidWord, Failure> {
    input.parse().map_err(|error| Failure::Parse {
        input: input.to_owned(),
        error,
    })
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn cmd_invariants(json: bool, arg: &WordArg) -> Result<(), Failure> {
    let input = arg.text();
    let word = parse_word(&input)?;
    let report = invariant_report(&word);
    if json {
        return print_json(&ReportBundle {
            input: &input,
            word: &word,
            normal_form: normalize(&word),
            invariants: report,
            verdict: classify(&word),
        });
    }
    println!("word          {word}");
    println!("exponent sum  {}", report.exponent_sum);
    println!("components    {}", report.components);
    println!("jones         {}", report.jones);
    match &report.alexander {
        Some(delta) => println!("alexander     {delta}"),
        None => println!(
            "alexander     undefined ({}-component link)",
            report.components
        ),
    }
    Ok(())
}

fn cmd_normal_form(json: bool, arg: &WordArg) -> Result<(), Failure> {
    let form = normalize(&parse_word(&arg.text())?);
    if json {
        return print_json(&form);
    }
    println!("{form}  ({})", form.class_name());
    Ok(())
}

fn cmd_classify(json: bool, arg: &WordArg) -> Result<(), Failure> {
    let verdict = classify(&parse_word(&arg.text())?);
    if json {
        return print_json(&verdict);
    }
    println!("status        {}", verdict.status);
    if let Some(c) = verdict.chirality {
        let c = match c {
            Chirality::AsGiven => "as-given",
            Chirality::Mirror => "mirror",
        };
        println!("chirality     {c}");
    }
    println!("certificate   {}", verdict.certificate);
    println!("normal form   {}", verdict.normal_form);
    if let Some(r) = &verdict.obstructions {
        println!("obstructions  {r}");
    }
    if let Some(d) = verdict.discrepancy {
        println!("discrepancy   {d:?}");
    }
    Ok(())
}

fn cmd_enumerate(bounds: CensusBounds, out: Option<&PathBuf>) -> Result<(), Failure> {
    let census = census::run(&bounds);
    let mut sink: Box<dyn Write> = match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    for record in &census.records {
        serde_json::to_writer(&mut sink, record)?;
        writeln!(sink)?;
    }
    serde_json::to_writer(&mut sink, &serde_json::json!({ "summary": census.summary }))?;
    writeln!(sink)?;
    sink.flush()?;
    if out.is_some() {
        let s = census.summary;
        eprintln!(
            "{} knots: {} L-space, {} not L-space, {} unknot, {} discrepancies",
            s.total, s.lspace, s.not_lspace, s.unknot, s.discrepancies
        );
    }
    Ok(())
}

fn cmd_selfcheck(json: bool, grid_max: u64, flip_convention: bool) -> Result<(), Failure> {
    let opts = selfcheck::Options {
        grid_max,
        flip_convention,
        ..selfcheck::Options::default()
    };
    let results = selfcheck::run(&opts);
    if json {
        print_json(&results)?;
    } else {
        for r in &results {
            println!("{r}");
        }
    }
    if results.iter().all(SuiteResult::passed) {
        Ok(())
    } else {
        Err(Failure::Selfcheck)
    }
}

fn report_parse_error(input: &str, error: &ParseError) {
    eprintln!("error: {error}");
    eprintln!("  {input}");
    let width = error.token.chars().count().max(1);
    let pad = input[..error.offset].chars().count();
    eprintln!("  {}{}", " ".repeat(pad), "^".repeat(width));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Invariants(arg) => cmd_invariants(cli.json, arg),
        Command::NormalForm(arg) => cmd_normal_form(cli.json, arg),
        Command::Classify(arg) => cmd_classify(cli.json, arg),
        Command::Enumerate {
            k_min,
            k_max,
            max_s,
            max_sum,
            out,
        } => cmd_enumerate(
            CensusBounds {
                k_min: *k_min,
                k_max: *k_max,
                max_s: *max_s,
                max_sum: *max_sum,
            },
            out.as_ref(),
        ),
        Command::Selfcheck {
            grid_max,
            flip_convention,
        } => cmd_selfcheck(cli.json, *grid_max, *flip_convention),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Selfcheck) => ExitCode::from(1),
        Err(Failure::Parse { input, error }) => {
            report_parse_error(&input, &error);
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
