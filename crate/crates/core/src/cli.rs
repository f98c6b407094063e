//! The `lg` command line: proofs, terms, readings, symmetries and lexicon
//! checks. Exit codes: 0 success or provable, 1 not derivable, 2 usage,
//! input or type errors.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::cps::cps_proof;
use crate::prover::{arrow_goal, ProveError, Prover};
use crate::semantics::{evaluate, parse_phrase, readings, Lexicon, ReadingOptions};
use crate::structures::RuleConfig;
use crate::syntax::{bowtie, infinity, parse_arrow, parse_formula};

#[derive(Parser, Debug)]
#[command(name = "lg", about = "Lambek-Grishin prover with Galois negations")]
pub struct Cli {
    #[command(flatten)]
    pub opts: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Interaction groups: comma list of distr, distr-unary, distr-inv, none.
    #[arg(long, global = true, default_value = "distr,distr-unary")]
    pub rules: String,
    /// Allow an interaction group together with its converse.
    #[arg(long, global = true)]
    pub allow_both: bool,
    #[arg(long, global = true)]
    pub json: bool,
    /// Bound on explored search states.
    #[arg(long, global = true)]
    pub max_steps: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Prove an arrow `F -> G` and print one proof.
    Prove { arrow: String },
    /// Enumerate distinct proofs of an arrow.
    Proofs {
        arrow: String,
        #[arg(long, default_value_t = 10)]
        limit: usize,
        /// Print the continuation term of each proof.
        #[arg(long)]
        terms: bool,
    },
    /// Meanings of a sentence under a lexicon.
    Readings {
        #[arg(long)]
        lexicon: String,
        #[arg(long)]
        goal: String,
        #[arg(long)]
        sentence: String,
        /// The sentence with parentheses marking constituents.
        #[arg(long)]
        brackets: Option<String>,
        /// Apply each reading to the identity continuation.
        #[arg(long)]
        eval: bool,
        #[arg(long, default_value_t = 64)]
        limit: usize,
    },
    /// Mirror or dual image of a formula.
    Sym {
        #[arg(long, conflicts_with = "infinity", required_unless_present = "infinity")]
        bowtie: bool,
        #[arg(long)]
        infinity: bool,
        formula: String,
    },
    /// Parse and type-check a lexicon file.
    CheckLexicon { file: String },
}

/// Failure with an exit code and a diagnostic for stderr.
struct Fail(i32, String);

fn usage(e: impl ToString) -> Fail {
    Fail(2, e.to_string())
}

impl GlobalOpts {
    fn prover(&self) -> Result<Prover, Fail> {
        let mut cfg = RuleConfig::from_groups(&self.rules).map_err(usage)?;
        cfg.allow_both = self.allow_both;
        let mut p = Prover::new(cfg).map_err(usage)?;
        if let Some(n) = self.max_steps {
            p = p.with_max_steps(n);
        }
        Ok(p)
    }
}

fn prove_error(e: ProveError) -> Fail {
    match e {
        ProveError::NotDerivable => Fail(1, "not derivable".into()),
        other => usage(other),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Fail> {
    writeln!(out, "{text}").map_err(usage)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), Fail> {
    let opts = &cli.opts;
    match &cli.command {
        Command::Prove { arrow } => {
            let (a, b) = parse_arrow(arrow).map_err(usage)?;
            let proof = opts.prover()?.prove(&arrow_goal(&a, &b)).map_err(prove_error)?;
            if opts.json {
                emit(out, &serde_json::to_string_pretty(&proof).map_err(usage)?)
            } else {
                write!(out, "{}", proof.render_text()).map_err(usage)
            }
        }
        Command::Proofs { arrow, limit, terms } => {
            let (a, b) = parse_arrow(arrow).map_err(usage)?;
            let proofs = opts.prover()?.enumerate(&arrow_goal(&a, &b), *limit).map_err(prove_error)?;
            let mut items = Vec::new();
            for (i, p) in proofs.iter().enumerate() {
                let term = terms.then(|| cps_proof(p).map(|t| t.term.to_string()).map_err(|e| e.to_string()));
                if opts.json {
                    let mut v = json!({ "proof": p });
                    match &term {
                        Some(Ok(t)) => v["term"] = json!(t),
                        Some(Err(e)) => v["term_error"] = json!(e),
                        None => {}
                    }
                    items.push(v);
                } else {
                    emit(out, &format!("# proof {}", i + 1))?;
                    write!(out, "{}", p.render_text()).map_err(usage)?;
                    match &term {
                        Some(Ok(t)) => emit(out, &format!("term: {t}"))?,
                        Some(Err(e)) => emit(out, &format!("term: unavailable ({e})"))?,
                        None => {}
                    }
                }
            }
            if opts.json {
                emit(out, &serde_json::to_string_pretty(&items).map_err(usage)?)?;
            }
            if proofs.is_empty() {
                return Err(Fail(1, "not derivable".into()));
            }
            Ok(())
        }
        Command::Readings { lexicon, goal, sentence, brackets, eval, limit } => {
            let text = std::fs::read_to_string(lexicon).map_err(|e| usage(format!("{lexicon}: {e}")))?;
            let lex = Lexicon::parse(&text).map_err(usage)?;
            let goal = parse_formula(goal).map_err(usage)?;
            let phrase = parse_phrase(sentence, &lex).map_err(usage)?;
            let phrase = match brackets {
                Some(spec) => {
                    let b = parse_phrase(spec, &lex).map_err(usage)?;
                    if b.words() != phrase.words() {
                        return Err(usage("--brackets must contain the words of --sentence in order"));
                    }
                    b
                }
                None => phrase,
            };
            let prover = opts.prover()?;
            let ro = ReadingOptions { cfg: *prover.config(), limit: *limit, max_steps: opts.max_steps };
            let terms = match readings(&phrase, &goal, &lex, &ro) {
                Ok(t) => t,
                Err(crate::semantics::SemError::NoDerivation) => return Err(Fail(1, "no derivation".into())),
                Err(e) => return Err(usage(e)),
            };
            let mut shown = Vec::new();
            for t in &terms {
                let value = if *eval { evaluate(t, &lex).map_err(usage)? } else { t.clone() };
                shown.push(value.to_string());
            }
            if opts.json {
                emit(out, &serde_json::to_string_pretty(&shown).map_err(usage)?)
            } else {
                shown.iter().try_for_each(|s| emit(out, s))
            }
        }
        Command::Sym { bowtie: _, infinity: inf, formula } => {
            let f = parse_formula(formula).map_err(usage)?;
            let image = if *inf { infinity(&f) } else { bowtie(&f) };
            if opts.json {
                emit(out, &json!({ "input": f.to_string(), "image": image.to_string() }).to_string())
            } else {
                emit(out, &image.to_string())
            }
        }
        Command::CheckLexicon { file } => {
            let text = std::fs::read_to_string(file).map_err(|e| usage(format!("{file}: {e}")))?;
            let lex = Lexicon::parse(&text).map_err(|e| usage(format!("{file}: {e}")))?;
            let n: usize = lex.entries.values().map(Vec::len).sum();
            emit(out, &format!("{file}: {n} entries ok"))
        }
    }
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(Fail(code, msg)) => {
            let _ = writeln!(err, "lg: {msg}");
            code
        }
    }
}
