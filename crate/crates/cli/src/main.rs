//! `scatlib` command-line front end.

mod codec;

use std::fmt;
use std::io::{self, BufRead, Read, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use scatlib::arch::{arch_factorize, iota, zeta};
use scatlib::concat::{min_concat, ConcatAnswer, Mode, WordSet};
use scatlib::oracle::{self, OracleLimits};
use scatlib::powers::{self, BigCount};
use scatlib::simon::{self, equiv_k, smallest_distinguishing_k};
use scatlib::trim::{shortest_deletion, Side};
use scatlib::{MorphicPermutation, Word};

use codec::Codec;

/// Scattered-factor universality toolkit.
///
/// Words are ASCII tokens (letters ranked a < b < …) or, with --ints,
/// comma-separated positive integers. All words of one invocation share an
/// alphabet. Pass `-` as the word to read one input per line from stdin.
#[derive(Parser, Debug)]
#[command(name = "scatlib", version)]
struct Cli {
    /// Print one JSON record per result instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Read words as comma-separated positive integers.
    #[arg(long, global = true)]
    ints: bool,
    /// Extra alphabet symbols (same format as words), e.g. `--alphabet d`.
    #[arg(long, global = true, value_name = "SYMBOLS")]
    alphabet: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Shortlex normal form of WORD under ~k (1 <= k <= |WORD|).
    Nf {
        #[arg(long)]
        k: usize,
        word: String,
    },
    /// Exit 0 if W1 ~k W2, exit 1 otherwise.
    Equiv {
        #[arg(long)]
        k: usize,
        w1: String,
        w2: String,
    },
    /// Smallest k with W1 and W2 not ~k-congruent.
    Distinguish { w1: String, w2: String },
    /// Shortest scattered factor of WORD·WORD that WORD lacks.
    UncommonSquare { word: String },
    /// Universality index.
    Iota { word: String },
    /// Arch factorization, ι, ζ and marker word.
    Arch { word: String },
    /// Circular universality index and a conjugate attaining it.
    Zeta { word: String },
    /// Least ℓ with WORD^ℓ k-universal.
    MinPower {
        #[arg(long)]
        k: BigCount,
        word: String,
    },
    /// ι(WORD^s).
    IotaPower {
        #[arg(long)]
        s: BigCount,
        word: String,
    },
    /// ι of a palindrome from its first half.
    PalIota { word: String },
    /// ι(w·π(w)); --pi lists the images of the letters in alphabet order.
    PermDouble {
        word: String,
        #[arg(long)]
        pi: String,
    },
    /// Fewest words from FILE (one per line, `-` for stdin) whose concatenation is k-universal.
    MinConcat {
        #[arg(long)]
        k: BigCount,
        #[arg(long, default_value = "auto")]
        mode: Mode,
        /// Also print f with 2^(f-1) < ℓ <= 2^f.
        #[arg(long)]
        witness_bound: bool,
        /// Largest alphabet the general solver accepts.
        #[arg(long, default_value_t = scatlib::concat::DEFAULT_SIGMA_CAP)]
        sigma_cap: usize,
        file: String,
    },
    /// Shortest prefix or suffix deletion leaving universality index ELL.
    Trim {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        side: Side,
        word: String,
    },
    /// Brute-force references (size-guarded; see SCATLIB_ORACLE_LIMIT).
    Oracle {
        #[command(subcommand)]
        op: OracleCommand,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// All scattered factors of length k.
    Spectrum {
        #[arg(long)]
        k: usize,
        word: String,
    },
    /// ~k by comparing spectra.
    Equiv {
        #[arg(long)]
        k: usize,
        w1: String,
        w2: String,
    },
    /// ι by enumerating spectra.
    Iota { word: String },
    /// Shortest word that is a scattered factor of exactly one input.
    Uncommon { w1: String, w2: String },
}

#[derive(Debug)]
pub struct CliError {
    message: String,
}

impl CliError {
    pub fn input(message: String) -> Self {
        CliError { message }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<scatlib::Error> for CliError {
    fn from(e: scatlib::Error) -> Self {
        CliError {
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError {
            message: format!("i/o error: {e}"),
        }
    }
}

/// One computed answer.
struct Outcome {
    inputs: Value,
    result: Value,
    text: String,
    /// A negative boolean answer (exit code 1).
    negative: bool,
}

struct Context {
    ints: bool,
    alphabet: Option<String>,
}

impl Context {
    fn words(&self, tokens: &[&str]) -> Result<(Vec<Word>, Codec), CliError> {
        Codec::parse(tokens, self.ints, self.alphabet.as_deref())
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Nf { .. } => "nf",
        Command::Equiv { .. } => "equiv",
        Command::Distinguish { .. } => "distinguish",
        Command::UncommonSquare { .. } => "uncommon-square",
        Command::Iota { .. } => "iota",
        Command::Arch { .. } => "arch",
        Command::Zeta { .. } => "zeta",
        Command::MinPower { .. } => "min-power",
        Command::IotaPower { .. } => "iota-power",
        Command::PalIota { .. } => "pal-iota",
        Command::PermDouble { .. } => "perm-double",
        Command::MinConcat { .. } => "min-concat",
        Command::Trim { .. } => "trim",
        Command::Oracle { op } => match op {
            OracleCommand::Spectrum { .. } => "oracle spectrum",
            OracleCommand::Equiv { .. } => "oracle equiv",
            OracleCommand::Iota { .. } => "oracle iota",
            OracleCommand::Uncommon { .. } => "oracle uncommon",
        },
    }
}

/// Word arguments of a command; `-` among them switches to batch mode.
fn word_args(cmd: &Command) -> Vec<&str> {
    match cmd {
        Command::Nf { word, .. }
        | Command::UncommonSquare { word }
        | Command::Iota { word }
        | Command::Arch { word }
        | Command::Zeta { word }
        | Command::MinPower { word, .. }
        | Command::IotaPower { word, .. }
        | Command::PalIota { word }
        | Command::PermDouble { word, .. }
        | Command::Trim { word, .. } => vec![word],
        Command::Equiv { w1, w2, .. } | Command::Distinguish { w1, w2 } => vec![w1, w2],
        Command::MinConcat { .. } => vec![],
        Command::Oracle { op } => match op {
            OracleCommand::Spectrum { word, .. } | OracleCommand::Iota { word } => vec![word],
            OracleCommand::Equiv { w1, w2, .. } | OracleCommand::Uncommon { w1, w2 } => {
                vec![w1, w2]
            }
        },
    }
}

fn read_jobs(arity: usize) -> Result<Vec<Vec<String>>, CliError> {
    let mut jobs = Vec::new();
    for (n, line) in io::stdin().lock().lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<String> = if arity == 1 {
            vec![line.to_string()]
        } else {
            line.split_whitespace().map(str::to_string).collect()
        };
        if tokens.len() != arity {
            return Err(CliError::input(format!(
                "stdin line {}: expected {arity} word(s), found {}",
                n + 1,
                tokens.len()
            )));
        }
        jobs.push(tokens);
    }
    Ok(jobs)
}

fn big_json(v: &BigCount) -> Value {
    Value::String(v.to_string())
}

fn run(cmd: &Command, tokens: &[&str], ctx: &Context) -> Result<Outcome, CliError> {
    let negative = false;
    let outcome = match cmd {
        Command::Nf { k, .. } => {
            let (w, c) = ctx.words(tokens)?;
            let nf = simon::shortlex_normal_form(&w[0], *k)?;
            let s = c.render(nf.word.letters());
            Outcome {
                inputs: json!({"word": tokens[0], "k": k}),
                result: json!({"normal_form": s, "length": nf.word.len()}),
                text: s,
                negative,
            }
        }
        Command::Equiv { k, .. } => {
            let (w, _) = ctx.words(tokens)?;
            let eq = equiv_k(&w[0], &w[1], *k);
            Outcome {
                inputs: json!({"w1": tokens[0], "w2": tokens[1], "k": k}),
                result: json!({"equivalent": eq}),
                text: if eq { "equivalent" } else { "not equivalent" }.to_string(),
                negative: !eq,
            }
        }
        Command::Distinguish { .. } => {
            let (w, _) = ctx.words(tokens)?;
            let k = smallest_distinguishing_k(&w[0], &w[1]);
            Outcome {
                inputs: json!({"w1": tokens[0], "w2": tokens[1]}),
                result: json!({"k": k}),
                text: k.map_or_else(|| "congruent".to_string(), |k| k.to_string()),
                negative,
            }
        }
        Command::UncommonSquare { .. } => {
            let (w, c) = ctx.words(tokens)?;
            let v = simon::uncommon_square_witness(&w[0])?;
            let s = c.render(v.letters());
            Outcome {
                inputs: json!({"word": tokens[0]}),
                result: json!({"witness": s, "length": v.len()}),
                text: s,
                negative,
            }
        }
        Command::Iota { .. } => {
            let (w, _) = ctx.words(tokens)?;
            let i = iota(&w[0]);
            Outcome {
                inputs: json!({"word": tokens[0]}),
                result: json!({"iota": i}),
                text: i.to_string(),
                negative,
            }
        }
        Command::Arch { .. } => {
            let (w, c) = ctx.words(tokens)?;
            let f = arch_factorize(&w[0]);
            let letters = w[0].letters();
            let arches: Vec<String> = f.arches().map(|r| c.render(&letters[r])).collect();
            let rest = c.render(f.rest());
            let z = zeta(&w[0]);
            let marker = c.render(f.marker().letters());
            let mut pieces = arches.clone();
            if !rest.is_empty() {
                pieces.push(rest.clone());
            }
            let dotted = pieces.join(".");
            Outcome {
                inputs: json!({"word": tokens[0]}),
                result: json!({
                    "arches": arches,
                    "rest": rest,
                    "iota": f.iota(),
                    "zeta": z.zeta,
                    "marker": marker,
                }),
                text: format!(
                    "arches: {}\niota: {}\nzeta: {}\nmarker: {}",
                    if dotted.is_empty() { "ε" } else { &dotted },
                    f.iota(),
                    z.zeta,
                    if marker.is_empty() { "ε" } else { &marker }
                ),
                negative,
            }
        }
        Command::Zeta { .. } => {
            let (w, c) = ctx.words(tokens)?;
            let z = zeta(&w[0]);
            let conj = c.render(w[0].conjugate(z.split)?.letters());
            Outcome {
                inputs: json!({"word": tokens[0]}),
                result: json!({"zeta": z.zeta, "split": z.split, "conjugate": conj}),
                text: format!("{}\nsplit: {}\nconjugate: {}", z.zeta, z.split, conj),
                negative,
            }
        }
        Command::MinPower { k, .. } => {
            let (w, _) = ctx.words(tokens)?;
            let ell = powers::min_power_for_k(&w[0], k)?;
            Outcome {
                inputs: json!({"word": tokens[0], "k": big_json(k)}),
                result: json!({"ell": big_json(&ell)}),
                text: ell.to_string(),
                negative,
            }
        }
        Command::IotaPower { s, .. } => {
            let (w, _) = ctx.words(tokens)?;
            let v = powers::iota_of_power(&w[0], s)?;
            Outcome {
                inputs: json!({"word": tokens[0], "s": big_json(s)}),
                result: json!({"iota": big_json(&v)}),
                text: v.to_string(),
                negative,
            }
        }
        Command::PalIota { .. } => {
            let (w, _) = ctx.words(tokens)?;
            let v = powers::palindrome_iota(&w[0])?;
            Outcome {
                inputs: json!({"word": tokens[0]}),
                result: json!({"iota": v}),
                text: v.to_string(),
                negative,
            }
        }
        Command::PermDouble { pi, .. } => {
            let (w, c) = ctx.words(tokens)?;
            let map = pi
                .split(',')
                .map(|s| c.letter_of(s))
                .collect::<Result<Vec<_>, _>>()?;
            let pi_map = MorphicPermutation::new(map)?;
            let r = powers::permutation_double_iota(&w[0], &pi_map)?;
            Outcome {
                inputs: json!({"word": tokens[0], "pi": pi}),
                result: json!({"iota": r.value, "iota_w": r.iota_w, "rests_cover": r.rests_cover}),
                text: format!(
                    "{}\niota(w): {}\nrests cover the alphabet: {}",
                    r.value,
                    r.iota_w,
                    if r.rests_cover { "yes" } else { "no" }
                ),
                negative,
            }
        }
        Command::MinConcat {
            k,
            mode,
            witness_bound,
            sigma_cap,
            file,
        } => {
            let content = if file == "-" {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s)?;
                s
            } else {
                std::fs::read_to_string(file)
                    .map_err(|e| CliError::input(format!("cannot read {file}: {e}")))?
            };
            let lines: Vec<&str> = content
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .collect();
            let (words, _) = ctx.words(&lines)?;
            let ws = WordSet::new(words)?;
            let ConcatAnswer { ell, mode: used } = min_concat(&ws, k, *mode, *sigma_cap)?;
            let bound = scatlib::concat::witness_bound(&ell.0);
            let mut text = ell.to_string();
            if *witness_bound {
                text.push_str(&format!(
                    "\nwitness bound: {}",
                    bound.map_or_else(|| "none".to_string(), |f| f.to_string())
                ));
            }
            Outcome {
                inputs: json!({"file": file, "words": lines, "k": big_json(k), "mode": mode.to_string()}),
                result: json!({"ell": big_json(&ell), "mode": used.to_string(), "witness_bound": bound}),
                text,
                negative,
            }
        }
        Command::Trim { ell, side, .. } => {
            let (w, c) = ctx.words(tokens)?;
            let d = shortest_deletion(&w[0], *ell, *side)?;
            let kept = c.render(&w[0].letters()[d.kept_start - 1..d.kept_end]);
            Outcome {
                inputs: json!({"word": tokens[0], "ell": ell, "side": side.to_string()}),
                result: json!({
                    "deleted": d.deleted,
                    "kept_start": d.kept_start,
                    "kept_end": d.kept_end,
                    "kept": kept,
                }),
                text: format!(
                    "deleted: {}\nkept: [{}, {}] {}",
                    d.deleted, d.kept_start, d.kept_end, kept
                ),
                negative,
            }
        }
        Command::Oracle { op } => run_oracle(op, tokens, ctx)?,
    };
    Ok(outcome)
}

fn run_oracle(op: &OracleCommand, tokens: &[&str], ctx: &Context) -> Result<Outcome, CliError> {
    let limits = OracleLimits::from_env();
    let (w, c) = ctx.words(tokens)?;
    Ok(match op {
        OracleCommand::Spectrum { k, .. } => {
            let s = oracle::scatfact_k_with(&w[0], *k, &limits)?;
            let members: Vec<String> = s.members.iter().map(|v| c.render(v)).collect();
            Outcome {
                inputs: json!({"word": tokens[0], "k": k}),
                result: json!({"size": members.len(), "members": members}),
                text: members
                    .iter()
                    .map(|m| if m.is_empty() { "ε" } else { m })
                    .collect::<Vec<_>>()
                    .join(" "),
                negative: false,
            }
        }
        OracleCommand::Equiv { k, .. } => {
            let eq = oracle::equiv_oracle_with(&w[0], &w[1], *k, &limits)?;
            Outcome {
                inputs: json!({"w1": tokens[0], "w2": tokens[1], "k": k}),
                result: json!({"equivalent": eq}),
                text: if eq { "equivalent" } else { "not equivalent" }.to_string(),
                negative: !eq,
            }
        }
        OracleCommand::Iota { .. } => {
            let i = oracle::iota_oracle_with(&w[0], &limits)?;
            Outcome {
                inputs: json!({"word": tokens[0]}),
                result: json!({"iota": i}),
                text: i.to_string(),
                negative: false,
            }
        }
        OracleCommand::Uncommon { .. } => {
            let v = oracle::shortest_uncommon_oracle_with(&w[0], &w[1], &limits)?;
            let s = v.as_ref().map(|v| c.render(v.letters()));
            Outcome {
                inputs: json!({"w1": tokens[0], "w2": tokens[1]}),
                result: json!({"witness": s}),
                text: s.unwrap_or_else(|| "congruent".to_string()),
                negative: false,
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Context {
        ints: cli.ints,
        alphabet: cli.alphabet.clone(),
    };
    let name = command_name(&cli.command);
    let args = word_args(&cli.command);

    let jobs: Vec<Vec<String>> = if args.contains(&"-") {
        match read_jobs(args.len()) {
            Ok(jobs) => jobs,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
    } else {
        vec![args.iter().map(|s| s.to_string()).collect()]
    };

    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut any_negative = false;
    for job in &jobs {
        let tokens: Vec<&str> = job.iter().map(String::as_str).collect();
        let start = Instant::now();
        let outcome = match run(&cli.command, &tokens, &ctx) {
            Ok(o) => o,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        };
        let elapsed = start.elapsed().as_micros() as u64;
        any_negative |= outcome.negative;
        let written = if cli.json {
            let record = json!({
                "command": name,
                "inputs": outcome.inputs,
                "result": outcome.result,
                "elapsed_us": elapsed,
            });
            writeln!(out, "{record}")
        } else {
            writeln!(out, "{}", outcome.text)
        };
        if written.is_err() {
            return ExitCode::from(2);
        }
    }
    if any_negative {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
