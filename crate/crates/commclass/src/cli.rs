//! Command-line front end.
//!
//! Permutations are given in one-line notation (`3,4,2,1`) or cycle notation
//! (`"(1 3)(2 4 5)"`); words as digit strings (`21232`) or comma-separated
//! letters (`10,9,10`). Exit codes: 0 when everything holds, 1 for usage and
//! input errors, 2 for a counterexample or an oracle disagreement, 3 when a
//! resource limit cut a check short.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use commclass_core::atoms::{
    atoms_bruteforce_with_ceiling, atoms_characterized, phi_reduction, structure_of, AtomHistogram,
};
use commclass_core::coxeter_b::{b_atoms, b_reduced_words, SignedPermutation};
use commclass_core::diagram::{render_ascii, render_svg};
use commclass_core::words::{
    commutation_classes_with_ceiling, count_reduced_words, format_word_list,
    reduced_words_with_ceiling, Word, DEFAULT_CEILING,
};
use commclass_core::{parse_permutation, Permutation};

use crate::records::scan_to_file;
use crate::report::{self, overall, Verdict, VerificationReport};
use crate::scan::{resolve_workers, with_workers};
use crate::verify::{self, Budget};

#[derive(Parser, Debug)]
#[command(
    name = "commclass",
    version,
    about = "Reduced words, commutation classes and one-element commutation classes of permutations",
    after_help = "Exit codes: 0 holds, 1 usage error, 2 counterexample or oracle disagreement, 3 resource-limited."
)]
pub struct Cli {
    #[command(flatten)]
    pub config: CliConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct CliConfig {
    /// Worker threads [default: $COMMCLASS_WORKERS, else machine parallelism]
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,
    /// Largest number of reduced words materialized for one element
    #[arg(long, global = true, default_value_t = DEFAULT_CEILING, value_parser = clap::value_parser!(u64).range(1..))]
    pub ceiling: u64,
    /// Output format; each subcommand accepts a subset
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output to this file instead of standard output
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Seed for sampled checks
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Records,
    Csv,
    Md,
    Svg,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Brute,
    Characterized,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Table,
    FinalRow,
    Bound,
    Spectrum,
    Longest,
    ClassInequality,
    BigClass,
    Equivalence,
    TennerNecessity,
    TennerInsufficiency,
    Structure,
    Oracle,
    Bscan,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the reduced words of a permutation in lexicographic order
    Words { perm: String },
    /// Count the reduced words of a permutation
    Count { perm: String },
    /// List the commutation classes of a permutation
    Classes { perm: String },
    /// List the one-element commutation classes (atoms) of a permutation
    Atoms {
        perm: String,
        #[arg(long, value_enum, default_value_t = Method::Characterized)]
        method: Method,
    },
    /// Show the segment structure of an atom
    Structure { perm: String, word: String },
    /// Draw the line diagram of a word formed by consecutive integers (text or svg)
    Render { word: String },
    /// Add a constant to every letter of a word
    Shift {
        word: String,
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
    /// Atom-count table for n = 1..max-n (text, md, csv or records)
    Table {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Largest n allowed for global atom scans
        #[arg(long, default_value_t = commclass_core::atoms::DEFAULT_MAX_RANK)]
        max_rank: usize,
        /// Keep resumable per-n atom record files in this directory
        #[arg(long)]
        records_dir: Option<PathBuf>,
    },
    /// Run a verification check
    Verify {
        #[arg(value_enum)]
        check: Check,
        /// Rank (permutations of degree n + 1); defaults depend on the check
        #[arg(long)]
        n: Option<usize>,
        /// Run the check for every rank 1..=max-n
        #[arg(long)]
        max_n: Option<usize>,
        /// Permutation for the big-class check
        #[arg(long)]
        perm: Option<String>,
        #[arg(long, default_value_t = 5)]
        max_letter: usize,
        #[arg(long, default_value_t = 15)]
        max_len: usize,
        /// Random permutations sampled by the oracle check
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = commclass_core::atoms::DEFAULT_MAX_RANK)]
        max_rank: usize,
        #[arg(long, default_value_t = 6)]
        max_class_rank: usize,
        #[arg(long, default_value_t = 4)]
        max_b_rank: usize,
    },
    /// Atom histogram of the signed permutation group B_n, or the atoms of one element
    Bscan {
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// A signed permutation such as -2,1,-3
        #[arg(long, allow_hyphen_values = true)]
        element: Option<String>,
        #[arg(long, default_value_t = 4)]
        max_b_rank: usize,
    },
}

/// Output of one command: text and exit code.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

type CmdResult = Result<Outcome, String>;

fn perm(text: &str) -> Result<Permutation, String> {
    parse_permutation(text, None).map_err(|e| format!("invalid permutation {text:?}: {e}"))
}

fn word(text: &str) -> Result<Word, String> {
    text.parse()
        .map_err(|e| format!("invalid word {text:?}: {e}"))
}

fn wrong_format(cmd: &str, f: Format) -> String {
    format!("--format {f:?} is not supported by {cmd}").to_lowercase()
}

/// Parses `args` and runs the command, writing results to `out` (or the
/// `--output` file) and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let workers = match resolve_workers(cli.config.workers.map(|w| w as usize)) {
        Ok(w) => w,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return 1;
        }
    };
    let config = cli.config.clone();
    let result = with_workers(workers, move || dispatch(&cli.command, &config));
    match result {
        Ok(outcome) => {
            if let Err(e) = emit(&cli.config.output, &outcome.text, out) {
                let _ = writeln!(err, "error: {e}");
                return 1;
            }
            outcome.code
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn emit(path: &Option<PathBuf>, text: &str, out: &mut dyn Write) -> io::Result<()> {
    match path {
        Some(p) => File::create(p)?.write_all(text.as_bytes()),
        None => out.write_all(text.as_bytes()),
    }
}

fn dispatch(cmd: &Command, cfg: &CliConfig) -> CmdResult {
    match cmd {
        Command::Words { perm: p } => {
            let p = perm(p)?;
            let words = reduced_words_with_ceiling(&p, cfg.ceiling).map_err(|e| e.to_string())?;
            Ok(Outcome::ok(format_word_list(&words)))
        }
        Command::Count { perm: p } => {
            Ok(Outcome::ok(format!("{}\n", count_reduced_words(&perm(p)?))))
        }
        Command::Classes { perm: p } => classes(&perm(p)?, cfg.ceiling),
        Command::Atoms { perm: p, method } => atoms(&perm(p)?, *method, cfg.ceiling),
        Command::Structure { perm: p, word: w } => structure(&perm(p)?, &word(w)?),
        Command::Render { word: w } => {
            let w = word(w)?;
            let text = match cfg.format {
                Format::Text => render_ascii(&w),
                Format::Svg => render_svg(&w),
                f => return Err(wrong_format("render", f)),
            };
            text.map(Outcome::ok).map_err(|e| e.to_string())
        }
        Command::Shift { word: w, k } => shift(&word(w)?, *k),
        Command::Table {
            max_n,
            max_rank,
            records_dir,
        } => table(*max_n, *max_rank, records_dir.as_deref(), cfg.format),
        Command::Verify {
            check,
            n,
            max_n,
            perm: p,
            max_letter,
            max_len,
            samples,
            max_rank,
            max_class_rank,
            max_b_rank,
        } => {
            let budget = Budget {
                atom_rank: *max_rank,
                class_rank: *max_class_rank,
                b_rank: *max_b_rank,
                ceiling: cfg.ceiling,
            };
            let params = VerifyParams {
                n: *n,
                max_n: *max_n,
                perm: p.as_deref(),
                max_letter: *max_letter,
                max_len: *max_len,
                samples: *samples,
                seed: cfg.seed,
            };
            let reports = run_check(*check, &params, &budget)?;
            render_reports(&reports, cfg.format)
        }
        Command::Bscan {
            n,
            element,
            max_b_rank,
        } => match element {
            Some(e) => b_element(e, cfg.ceiling),
            None => {
                let budget = Budget {
                    b_rank: *max_b_rank,
                    ceiling: cfg.ceiling,
                    ..Budget::default()
                };
                render_reports(&[verify::b_scan(*n, &budget)], cfg.format)
            }
        },
    }
}

fn classes(p: &Permutation, ceiling: u64) -> CmdResult {
    let parts = commutation_classes_with_ceiling(p, ceiling).map_err(|e| e.to_string())?;
    let mut s = String::new();
    for class in parts.classes() {
        let members: Vec<String> = class.iter().map(show_word).collect();
        let _ = writeln!(s, "[{}] = {{{}}}", show_word(&class[0]), members.join(", "));
    }
    Ok(Outcome::ok(s))
}

fn show_word(w: &Word) -> String {
    if w.is_empty() {
        "()".to_string()
    } else {
        w.to_string()
    }
}

fn atoms(p: &Permutation, method: Method, ceiling: u64) -> CmdResult {
    let brute = || atoms_bruteforce_with_ceiling(p, ceiling).map_err(|e| e.to_string());
    match method {
        Method::Brute => Ok(Outcome::ok(format_word_list(&brute()?))),
        Method::Characterized => Ok(Outcome::ok(format_word_list(&atoms_characterized(p)))),
        Method::Both => {
            let a = brute()?;
            let b = atoms_characterized(p);
            let mut s = format_word_list(&b);
            if a == b {
                let noun = if a.len() == 1 { "atom" } else { "atoms" };
                let _ = writeln!(
                    s,
                    "# brute-force and characterized searches agree: {} {noun}",
                    a.len()
                );
                Ok(Outcome::ok(s))
            } else {
                let _ = writeln!(s, "# disagreement for {p}");
                let _ = write!(s, "# brute-force:\n{}", format_word_list(&a));
                Ok(Outcome { text: s, code: 2 })
            }
        }
    }
}

fn structure(p: &Permutation, a: &Word) -> CmdResult {
    let s = structure_of(p, a).map_err(|e| e.to_string())?;
    let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
    let mut out = String::new();
    let _ = writeln!(out, "case: {:?}", s.case);
    let _ = writeln!(out, "m: {}", s.m);
    let _ = writeln!(out, "M: {}", s.top);
    let _ = writeln!(out, "i: {}", opt(s.i));
    let _ = writeln!(out, "j: {}", opt(s.j));
    let _ = writeln!(out, "oscillating: {}", s.oscillating);
    if let Ok((w, pi)) = phi_reduction(p, a) {
        let _ = writeln!(out, "phi: {} -> {}", show_word(&w), pi);
    }
    Ok(Outcome::ok(out))
}

fn shift(w: &Word, k: i64) -> CmdResult {
    let letters: Vec<i64> = w.letters().iter().map(|&x| x as i64 + k).collect();
    if letters.iter().any(|&x| x < 1 || x > u16::MAX as i64) {
        return Err(format!("shifting {w} by {k} leaves the letter range"));
    }
    let shifted = Word::new(letters.iter().map(|&x| x as u16).collect());
    let degree = shifted.max_letter() as usize + 1;
    let p = Permutation::apply_word(&shifted, degree).map_err(|e| e.to_string())?;
    Ok(Outcome::ok(format!("{}\n{p}\n", show_word(&shifted))))
}

fn table(max_n: usize, max_rank: usize, dir: Option<&Path>, format: Format) -> CmdResult {
    let mut rows: Vec<AtomHistogram> = Vec::new();
    for n in 1..=max_n {
        if n > max_rank {
            return Err(format!("n = {n} exceeds the scan budget {max_rank}"));
        }
        let catalog = match dir {
            Some(d) => {
                scan_to_file(&d.join(format!("atoms-n{n}.tsv")), n).map_err(|e| e.to_string())?
            }
            None => crate::scan::atom_scan(n, max_rank).map_err(|e| e.to_string())?,
        };
        rows.push(catalog.histogram());
    }
    let text = match format {
        Format::Csv => report::table_csv(&rows),
        Format::Md | Format::Text => report::table_markdown(&rows),
        Format::Records => report::table_records(&rows),
        f => return Err(wrong_format("table", f)),
    };
    Ok(Outcome::ok(text))
}

struct VerifyParams<'a> {
    n: Option<usize>,
    max_n: Option<usize>,
    perm: Option<&'a str>,
    max_letter: usize,
    max_len: usize,
    samples: usize,
    seed: u64,
}

impl VerifyParams<'_> {
    /// Ranks to run: `--n`, else `1..=--max-n`, else `default`.
    fn ranks(&self, default: usize) -> Vec<usize> {
        match (self.n, self.max_n) {
            (Some(n), _) => vec![n],
            (None, Some(m)) => (1..=m).collect(),
            (None, None) => vec![default],
        }
    }
}

fn run_check(
    check: Check,
    p: &VerifyParams<'_>,
    b: &Budget,
) -> Result<Vec<VerificationReport>, String> {
    let per_rank = |default: usize, f: fn(usize, &Budget) -> VerificationReport| {
        p.ranks(default).into_iter().map(|n| f(n, b)).collect()
    };
    Ok(match check {
        Check::Table => vec![verify::check_table(p.max_n.or(p.n).unwrap_or(7), b)],
        Check::FinalRow => vec![verify::check_final_row(b)],
        Check::Bound => per_rank(8, verify::check_bound),
        Check::Spectrum => per_rank(8, verify::check_spectrum),
        Check::Longest => vec![verify::check_longest_attains(
            p.max_n.or(p.n).unwrap_or(8),
            b,
        )],
        Check::ClassInequality => per_rank(5, verify::check_class_inequality),
        Check::BigClass => {
            let text = p.perm.ok_or("big-class needs --perm")?;
            vec![verify::check_big_class(&perm(text)?, b.ceiling).map_err(|e| e.to_string())?]
        }
        Check::Equivalence => vec![verify::check_equivalence(p.max_letter, p.max_len)],
        Check::TennerNecessity => per_rank(7, verify::check_tenner_necessity),
        Check::TennerInsufficiency => {
            vec![verify::check_tenner_insufficiency(p.max_letter, p.max_len)]
        }
        Check::Structure => p
            .ranks(6)
            .into_iter()
            .flat_map(|n| verify::check_structure(n, b))
            .collect(),
        Check::Oracle => vec![verify::check_oracle_agreement(
            6,
            p.samples,
            p.seed,
            verify::ORACLE_SAMPLE_CEILING,
        )],
        Check::Bscan => per_rank(3, verify::b_scan),
        Check::All => verify::standard_suite(b, p.seed),
    })
}

fn render_reports(reports: &[VerificationReport], format: Format) -> CmdResult {
    let mut text = String::new();
    for r in reports {
        match format {
            Format::Text => text.push_str(&r.to_text()),
            Format::Md => {
                text.push_str(&r.to_markdown());
                text.push('\n');
            }
            Format::Records => {
                text.push_str(&r.to_record());
                text.push('\n');
            }
            f => return Err(wrong_format("verify", f)),
        }
    }
    let code = match overall(reports) {
        Verdict::Holds => 0,
        v => v.exit_code(),
    };
    Ok(Outcome { text, code })
}

fn b_element(text: &str, ceiling: u64) -> CmdResult {
    let e: SignedPermutation = text
        .parse()
        .map_err(|err| format!("invalid signed permutation {text:?}: {err}"))?;
    let words = b_reduced_words(&e, ceiling).map_err(|err| err.to_string())?;
    let atoms = b_atoms(&e, ceiling).map_err(|err| err.to_string())?;
    let mut s = format!("reduced words: {}\natoms: {}\n", words.len(), atoms.len());
    s.push_str(&format_word_list(&atoms));
    Ok(Outcome::ok(s))
}
