//! Command-line front end: parses automata, substitutions and Büchi
//! constraints from files, dispatches the decision procedures, and emits
//! witnesses as text or JSON.
//!
//! Exit codes: 0 = answer yes, 1 = answer no, 2 = input error,
//! 3 = resource budget exhausted.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::alphabet::Word;
use crate::automaton::OmegaAutomaton;
use crate::desub::{desubstitute, orbit};
use crate::error::{Error, Result};
use crate::meta::{
    decide_constrained, decide_inf_desub, directive_language, LassoDecision, MetaAutomaton,
    DEFAULT_VERTEX_BUDGET,
};
use crate::single::{
    decide_fixed_point, decide_fixed_point_power, decide_morphic, decide_pure_substitutive,
    SingleDecision, SingleWitness, DEFAULT_WITNESS_LEN,
};
use crate::sturmian::{
    decide_coding, decide_sturmian, fibonacci_totality, find_total_reachable, property_h,
    SturmianKit,
};
use crate::substitution::{generated_word_prefix, DirectiveLasso, Homomorphism, NamedSubstitution};
use crate::text;

/// Default seed for randomized witness validation.
pub const DEFAULT_SEED: u64 = 0xD15EA5E;

/// JSON schema version of the witness reports.
const SCHEMA: u64 = 1;

#[derive(Parser)]
#[command(
    name = "omega-desub",
    version,
    about = "Desubstitution of ω-automata: decide substitutive, S-adic and Sturmian membership with witnesses"
)]
struct Cli {
    /// Prefix length used to select and validate word witnesses.
    #[arg(long, global = true, default_value_t = DEFAULT_WITNESS_LEN)]
    witness_len: usize,
    /// Cap on the number of meta-automaton vertices.
    #[arg(long, global = true, default_value_t = DEFAULT_VERTEX_BUDGET)]
    vertex_budget: usize,
    /// Emit a JSON report on stdout instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized witness validation.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct AutomatonArg {
    /// Automaton file.
    #[arg(long)]
    automaton: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Desubstitute an automaton by a substitution and print the result.
    Desub {
        #[command(flatten)]
        automaton: AutomatonArg,
        /// Substitution file.
        #[arg(long)]
        subst: PathBuf,
    },
    /// Iterate desubstitution until the first repeat and report (n, m).
    Orbit {
        #[command(flatten)]
        automaton: AutomatonArg,
        #[arg(long)]
        subst: PathBuf,
    },
    /// Decide whether the automaton accepts a word of the given kind.
    Decide {
        #[command(subcommand)]
        problem: DecideProblem,
    },
    /// Structural analyses built on the same machinery.
    Analyze {
        #[command(subcommand)]
        what: AnalyzeWhat,
    },
    /// Export an automaton (or, with substitutions, its meta-automaton)
    /// as deterministic DOT.
    ExportDot {
        #[command(flatten)]
        automaton: AutomatonArg,
        /// Substitution files; given at least one, the meta-automaton is
        /// exported instead of the automaton itself.
        #[arg(long)]
        subst: Vec<PathBuf>,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the ω-automaton of directive sequences of accepted
    /// infinitely desubstitutable words.
    DirectiveLanguage {
        #[command(flatten)]
        automaton: AutomatonArg,
        #[arg(long, required = true)]
        subst: Vec<PathBuf>,
    },
}

#[derive(Subcommand)]
enum DecideProblem {
    /// A fixed point of some power σᵏ, k ≥ 1.
    FixedPointPower {
        #[command(flatten)]
        automaton: AutomatonArg,
        #[arg(long)]
        subst: PathBuf,
    },
    /// A fixed point of σ itself.
    FixedPoint {
        #[command(flatten)]
        automaton: AutomatonArg,
        #[arg(long)]
        subst: PathBuf,
    },
    /// A purely substitutive word generated by σ.
    PureSubstitutive {
        #[command(flatten)]
        automaton: AutomatonArg,
        #[arg(long)]
        subst: PathBuf,
    },
    /// A morphic word: first --subst is the generator σ, second the
    /// outer substitution τ.
    Morphic {
        #[command(flatten)]
        automaton: AutomatonArg,
        #[arg(long, required = true)]
        subst: Vec<PathBuf>,
    },
    /// A word infinitely desubstitutable by the given substitutions.
    InfDesub {
        #[command(flatten)]
        automaton: AutomatonArg,
        #[arg(long, required = true)]
        subst: Vec<PathBuf>,
    },
    /// Infinitely desubstitutable with the directive sequence accepted
    /// by a Büchi constraint.
    Constrained {
        #[command(flatten)]
        automaton: AutomatonArg,
        #[arg(long, required = true)]
        subst: Vec<PathBuf>,
        /// Büchi automaton file over the substitution names.
        #[arg(long)]
        buchi: PathBuf,
    },
    /// A Sturmian word (binary alphabet).
    Sturmian {
        #[command(flatten)]
        automaton: AutomatonArg,
    },
    /// A Sturmian word in the infinite concatenations of a word set.
    Coding {
        /// Word-set file: one binary word per line.
        #[arg(long)]
        words: PathBuf,
    },
}

#[derive(Subcommand)]
enum AnalyzeWhat {
    /// Search the Sturmian meta-automaton for a total vertex.
    Totality {
        #[command(flatten)]
        automaton: AutomatonArg,
    },
    /// Report property (H) for every state.
    PropertyH {
        #[command(flatten)]
        automaton: AutomatonArg,
    },
    /// Least n with the n-fold Fibonacci desubstitution total.
    Fibonacci {
        #[command(flatten)]
        automaton: AutomatonArg,
    },
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    let opts = Options {
        witness_len: cli.witness_len.max(1),
        vertex_budget: cli.vertex_budget,
        json: cli.json,
        seed: cli.seed,
    };
    match dispatch(cli.command, &opts) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

struct Options {
    witness_len: usize,
    vertex_budget: usize,
    json: bool,
    seed: u64,
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse {
        path: path.display().to_string(),
        line: 0,
        message: format!("cannot read file: {e}"),
    })
}

fn load_automaton(path: &Path) -> Result<OmegaAutomaton> {
    text::parse_automaton(&read_file(path)?, &path.display().to_string())
}

fn load_substitution(path: &Path) -> Result<NamedSubstitution> {
    text::parse_substitution(&read_file(path)?, &path.display().to_string())
}

fn load_substitutions(paths: &[PathBuf]) -> Result<Vec<NamedSubstitution>> {
    paths.iter().map(|p| load_substitution(p)).collect()
}

/// One report, printable as text lines or as a JSON object.
struct Report {
    problem: &'static str,
    answer: Option<bool>,
    lines: Vec<String>,
    fields: Map<String, Value>,
}

impl Report {
    fn new(problem: &'static str) -> Report {
        Report {
            problem,
            answer: None,
            lines: Vec::new(),
            fields: Map::new(),
        }
    }

    fn answer(&mut self, yes: bool) -> &mut Self {
        self.answer = Some(yes);
        self
    }

    fn line(&mut self, line: impl Into<String>) -> &mut Self {
        self.lines.push(line.into());
        self
    }

    fn field(&mut self, key: &str, value: Value) -> &mut Self {
        self.fields.insert(key.to_string(), value);
        self
    }

    /// Prints the report and returns the exit code.
    fn emit(&self, opts: &Options, started: Instant) -> i32 {
        if opts.json {
            let mut object = Map::new();
            object.insert("schema".into(), json!(SCHEMA));
            object.insert("problem".into(), json!(self.problem));
            if let Some(answer) = self.answer {
                object.insert("answer".into(), json!(answer));
            }
            for (k, v) in &self.fields {
                object.insert(k.clone(), v.clone());
            }
            object.insert(
                "elapsed_ms".into(),
                json!(started.elapsed().as_millis() as u64),
            );
            println!("{}", Value::Object(object));
        } else {
            if let Some(answer) = self.answer {
                println!("{}", if answer { "yes" } else { "no" });
            }
            for line in &self.lines {
                println!("{line}");
            }
        }
        match self.answer {
            Some(false) => 1,
            _ => 0,
        }
    }
}

fn dispatch(command: Command, opts: &Options) -> Result<i32> {
    let started = Instant::now();
    match command {
        Command::Desub { automaton, subst } => {
            let a = load_automaton(&automaton.automaton)?;
            let s = load_substitution(&subst)?;
            let result = desubstitute(&a, &s.substitution)?;
            let rendered = text::print_automaton(&result);
            if opts.json {
                let mut r = Report::new("desub");
                r.field("automaton", json!(rendered));
                return Ok(r.emit(opts, started));
            }
            print!("{rendered}");
            Ok(0)
        }
        Command::Orbit { automaton, subst } => {
            let a = load_automaton(&automaton.automaton)?;
            let s = load_substitution(&subst)?;
            let orb = orbit(&a, &s.substitution)?;
            let mut r = Report::new("orbit");
            r.line(format!("n={} m={}", orb.cycle_start, orb.first_repeat));
            r.field("n", json!(orb.cycle_start));
            r.field("m", json!(orb.first_repeat));
            r.field("orbit_length", json!(orb.automata.len()));
            Ok(r.emit(opts, started))
        }
        Command::Decide { problem } => dispatch_decide(problem, opts, started),
        Command::Analyze { what } => dispatch_analyze(what, opts, started),
        Command::ExportDot {
            automaton,
            subst,
            out,
        } => {
            let a = load_automaton(&automaton.automaton)?;
            let dot = if subst.is_empty() {
                text::automaton_to_dot(&a)
            } else {
                let subs = load_substitutions(&subst)?;
                let meta = MetaAutomaton::build(&a, &subs, opts.vertex_budget)?;
                text::meta_to_dot(&meta)
            };
            match out {
                Some(path) => std::fs::write(&path, dot)?,
                None => print!("{dot}"),
            }
            Ok(0)
        }
        Command::DirectiveLanguage { automaton, subst } => {
            let a = load_automaton(&automaton.automaton)?;
            let subs = load_substitutions(&subst)?;
            let lang = directive_language(&a, &subs, opts.vertex_budget)?;
            let rendered = text::print_automaton(&lang);
            if opts.json {
                let mut r = Report::new("directive-language");
                r.field("automaton", json!(rendered));
                return Ok(r.emit(opts, started));
            }
            print!("{rendered}");
            Ok(0)
        }
    }
}

fn word_string(a: &OmegaAutomaton, word: &[usize]) -> String {
    if word.is_empty() {
        String::new()
    } else {
        a.alphabet().format_word(word)
    }
}

/// Renders and soundness-checks a single-substitution decision.
fn report_single(
    problem: &'static str,
    a: &OmegaAutomaton,
    sigma: &Homomorphism,
    outer: Option<&NamedSubstitution>,
    decision: &SingleDecision,
    opts: &Options,
) -> Result<Report> {
    let mut r = Report::new(problem);
    r.answer(decision.answer);
    if let Some((n, m)) = decision.orbit_window {
        r.line(format!("orbit: n={n} m={m}"));
        r.field("orbit", json!({ "n": n, "m": m }));
    }
    let Some(witness) = &decision.witness else {
        return Ok(r);
    };
    match witness {
        SingleWitness::Power => {
            r.line("witness: a fixed point of some power exists (no exponent computed)");
            r.field("witness", json!({ "kind": "power" }));
        }
        SingleWitness::Generating {
            letter,
            orbit_index,
        } => {
            let prefix = generated_word_prefix(sigma, *letter, opts.witness_len)?;
            if !a.accepts_prefix(&prefix)? {
                return Err(Error::Precondition(
                    "internal error: generated witness prefix rejected".into(),
                ));
            }
            let shown = word_string(a, &prefix);
            r.line(format!(
                "witness: generating letter {} at orbit index {orbit_index}",
                a.alphabet().symbol(*letter)
            ));
            r.line(format!("prefix: {shown}"));
            r.field(
                "witness",
                json!({
                    "kind": "generating-letter",
                    "letter": a.alphabet().symbol(*letter),
                    "orbit_index": orbit_index,
                    "prefix": shown,
                }),
            );
        }
        SingleWitness::FixedLasso { stem, cycle } => {
            let mut fixed_check = stem.clone();
            fixed_check.extend_from_slice(cycle);
            if sigma.apply(&fixed_check)? != fixed_check || !a.accepts_lasso(stem, cycle)? {
                return Err(Error::Precondition(
                    "internal error: fixed-point lasso rejected".into(),
                ));
            }
            r.line(format!(
                "witness: fixed point {}({})^ω over the fixed letters",
                word_string(a, stem),
                word_string(a, cycle)
            ));
            r.field(
                "witness",
                json!({
                    "kind": "fixed-point-lasso",
                    "stem": word_string(a, stem),
                    "cycle": word_string(a, cycle),
                }),
            );
        }
        SingleWitness::FixedPrefixed {
            prefix,
            letter,
            orbit_index,
        } => {
            let mut word = prefix.clone();
            word.extend(generated_word_prefix(sigma, *letter, opts.witness_len)?);
            if sigma.apply(prefix)? != *prefix || !a.accepts_prefix(&word)? {
                return Err(Error::Precondition(
                    "internal error: prefixed fixed-point witness rejected".into(),
                ));
            }
            r.line(format!(
                "witness: fixed point {}·(word generated from {}) at orbit index {orbit_index}",
                word_string(a, prefix),
                a.alphabet().symbol(*letter)
            ));
            r.line(format!("prefix: {}", word_string(a, &word)));
            r.field(
                "witness",
                json!({
                    "kind": "fixed-point-prefixed",
                    "fp_prefix": word_string(a, prefix),
                    "letter": a.alphabet().symbol(*letter),
                    "orbit_index": orbit_index,
                    "prefix": word_string(a, &word),
                }),
            );
        }
        SingleWitness::Morphic {
            letter,
            orbit_index,
            outer: outer_name,
        } => {
            let tau = outer.expect("morphic decisions carry the outer substitution");
            let inner = generated_word_prefix(sigma, *letter, opts.witness_len)?;
            let image = tau.substitution.apply(&inner)?;
            if !a.accepts_prefix(&image)? {
                return Err(Error::Precondition(
                    "internal error: morphic witness prefix rejected".into(),
                ));
            }
            r.line(format!(
                "witness: {outer_name}(word generated from {}) at orbit index {orbit_index}",
                a.alphabet().symbol(*letter)
            ));
            r.line(format!("prefix: {}", word_string(a, &image)));
            r.field(
                "witness",
                json!({
                    "kind": "morphic",
                    "letter": a.alphabet().symbol(*letter),
                    "orbit_index": orbit_index,
                    "outer": outer_name,
                    "prefix": word_string(a, &image),
                }),
            );
        }
    }
    Ok(r)
}

/// Checks a directive lasso: every prefix walk must stay on nonempty
/// automata, and expanding an accepted lasso of the deepest automaton
/// back through the prefix must give a word accepted by `a`.
fn validate_directive_lasso(
    a: &OmegaAutomaton,
    subs: &[NamedSubstitution],
    lasso: &DirectiveLasso,
) -> Result<()> {
    let by_name: std::collections::HashMap<&str, &Homomorphism> = subs
        .iter()
        .map(|s| (s.name.as_str(), &s.substitution))
        .collect();
    let depth = lasso.stem.len() + 2 * lasso.cycle.len();
    let mut current = a.clone();
    let mut composed = Homomorphism::identity(a.alphabet().clone());
    for name in lasso.prefix(depth) {
        let sub = by_name[name];
        current = desubstitute(&current, sub)?;
        composed = composed.compose(sub)?;
        if current.is_empty_infinite() {
            return Err(Error::Precondition(
                "internal error: directive lasso enters an empty automaton".into(),
            ));
        }
    }
    let (stem, cycle) = current
        .some_accepted_lasso()
        .expect("nonempty automaton yields a lasso");
    let expanded_stem = composed.apply(&stem)?;
    let expanded_cycle = composed.apply(&cycle)?;
    if !a.accepts_lasso(&expanded_stem, &expanded_cycle)? {
        return Err(Error::Precondition(
            "internal error: expanded directive lasso rejected".into(),
        ));
    }
    Ok(())
}

fn report_lasso(problem: &'static str, decision: &LassoDecision) -> Report {
    let mut r = Report::new(problem);
    r.answer(decision.answer);
    r.field(
        "diagnostics",
        json!({
            "vertices": decision.vertices,
            "live_vertices": decision.live_vertices,
        }),
    );
    r.line(format!(
        "vertices: {} ({} live)",
        decision.vertices, decision.live_vertices
    ));
    if let Some(lasso) = &decision.lasso {
        r.line(format!("witness: directive sequence {lasso}"));
        r.field(
            "witness",
            json!({
                "kind": "directive-lasso",
                "stem": lasso.stem,
                "cycle": lasso.cycle,
            }),
        );
    }
    r
}

fn dispatch_decide(problem: DecideProblem, opts: &Options, started: Instant) -> Result<i32> {
    match problem {
        DecideProblem::FixedPointPower { automaton, subst } => {
            let a = load_automaton(&automaton.automaton)?;
            let s = load_substitution(&subst)?;
            let d = decide_fixed_point_power(&a, &s.substitution)?;
            let r = report_single("fixed-point-power", &a, &s.substitution, None, &d, opts)?;
            Ok(r.emit(opts, started))
        }
        DecideProblem::FixedPoint { automaton, subst } => {
            let a = load_automaton(&automaton.automaton)?;
            let s = load_substitution(&subst)?;
            let d = decide_fixed_point(&a, &s.substitution, opts.witness_len)?;
            let r = report_single("fixed-point", &a, &s.substitution, None, &d, opts)?;
            Ok(r.emit(opts, started))
        }
        DecideProblem::PureSubstitutive { automaton, subst } => {
            let a = load_automaton(&automaton.automaton)?;
            let s = load_substitution(&subst)?;
            let d = decide_pure_substitutive(&a, &s.substitution)?;
            let r = report_single("pure-substitutive", &a, &s.substitution, None, &d, opts)?;
            Ok(r.emit(opts, started))
        }
        DecideProblem::Morphic { automaton, subst } => {
            if subst.len() != 2 {
                return Err(Error::Precondition(
                    "decide morphic needs exactly two --subst files: the generator, then the outer substitution".into(),
                ));
            }
            let a = load_automaton(&automaton.automaton)?;
            let sigma = load_substitution(&subst[0])?;
            let tau = load_substitution(&subst[1])?;
            let d = decide_morphic(&a, &sigma.substitution, &tau)?;
            let r = report_single("morphic", &a, &sigma.substitution, Some(&tau), &d, opts)?;
            Ok(r.emit(opts, started))
        }
        DecideProblem::InfDesub { automaton, subst } => {
            let a = load_automaton(&automaton.automaton)?;
            let subs = load_substitutions(&subst)?;
            let d = decide_inf_desub(&a, &subs, opts.vertex_budget)?;
            if let Some(lasso) = &d.lasso {
                validate_directive_lasso(&a, &subs, lasso)?;
            }
            Ok(report_lasso("inf-desub", &d).emit(opts, started))
        }
        DecideProblem::Constrained {
            automaton,
            subst,
            buchi,
        } => {
            let a = load_automaton(&automaton.automaton)?;
            let subs = load_substitutions(&subst)?;
            let r_file = read_file(&buchi)?;
            let constraint = text::parse_buchi(&r_file, &buchi.display().to_string())?;
            let d = decide_constrained(&a, &subs, &constraint, opts.vertex_budget)?;
            if let Some(lasso) = &d.lasso {
                validate_directive_lasso(&a, &subs, lasso)?;
                let stem: Word = lasso
                    .stem
                    .iter()
                    .map(|n| constraint.alphabet().letter(n))
                    .collect::<Result<_>>()?;
                let cycle: Word = lasso
                    .cycle
                    .iter()
                    .map(|n| constraint.alphabet().letter(n))
                    .collect::<Result<_>>()?;
                if !constraint.accepts_lasso(&stem, &cycle)? {
                    return Err(Error::Precondition(
                        "internal error: directive lasso rejected by the constraint".into(),
                    ));
                }
            }
            Ok(report_lasso("constrained", &d).emit(opts, started))
        }
        DecideProblem::Sturmian { automaton } => {
            let a = load_automaton(&automaton.automaton)?;
            let d = decide_sturmian(&a, opts.vertex_budget)?;
            if let Some(lasso) = &d.lasso {
                let kit = SturmianKit::new(a.alphabet())?;
                validate_directive_lasso(&a, kit.substitutions(), lasso)?;
                let types: std::collections::HashSet<_> = lasso
                    .cycle
                    .iter()
                    .filter_map(|n| SturmianKit::type_of_name(n))
                    .collect();
                if types.len() != 2 {
                    return Err(Error::Precondition(
                        "internal error: Sturmian lasso does not alternate types".into(),
                    ));
                }
            }
            Ok(report_lasso("sturmian", &d).emit(opts, started))
        }
        DecideProblem::Coding { words } => {
            let word_list = text::parse_words(&read_file(&words)?, &words.display().to_string())?;
            let d = decide_coding(&word_list, opts.vertex_budget)?;
            Ok(report_lasso("coding", &d).emit(opts, started))
        }
    }
}

/// Deterministic 64-bit generator for validation sampling (SplitMix64).
struct SplitMix64(u64);

impl SplitMix64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

fn dispatch_analyze(what: AnalyzeWhat, opts: &Options, started: Instant) -> Result<i32> {
    match what {
        AnalyzeWhat::Totality { automaton } => {
            let a = load_automaton(&automaton.automaton)?;
            let path = find_total_reachable(&a, opts.vertex_budget)?;
            let mut r = Report::new("totality");
            match path {
                Some(path) => {
                    let kit = SturmianKit::new(a.alphabet())?;
                    let composed = path.composed(&kit)?;
                    if !desubstitute(&a, &composed)?.is_total() {
                        return Err(Error::Precondition(
                            "internal error: totality path is not total".into(),
                        ));
                    }
                    // Seeded spot-check: images of random words must be
                    // accepted prefixes.
                    let mut rng = SplitMix64(opts.seed);
                    for _ in 0..8 {
                        let word: Word = (0..40).map(|_| (rng.next() & 1) as usize).collect();
                        if !a.accepts_prefix(&composed.apply(&word)?)? {
                            return Err(Error::Precondition(
                                "internal error: expansion through the totality path rejected"
                                    .into(),
                            ));
                        }
                    }
                    r.answer(true);
                    r.line(format!(
                        "path: {}",
                        if path.labels.is_empty() {
                            "ε".to_string()
                        } else {
                            path.labels.join(" ")
                        }
                    ));
                    r.field(
                        "witness",
                        json!({
                            "kind": "totality-path",
                            "labels": path.labels,
                            "target": path.target,
                        }),
                    );
                }
                None => {
                    r.answer(false);
                }
            }
            Ok(r.emit(opts, started))
        }
        AnalyzeWhat::PropertyH { automaton } => {
            let a = load_automaton(&automaton.automaton)?;
            let mut r = Report::new("property-h");
            let mut all = true;
            let mut states = Map::new();
            for q in 0..a.state_count() {
                let holds = property_h(&a, q)?;
                all &= holds;
                r.line(format!(
                    "{}: {}",
                    a.state_name(q),
                    if holds { "yes" } else { "no" }
                ));
                states.insert(a.state_name(q).to_string(), json!(holds));
            }
            r.answer(all);
            r.field("states", Value::Object(states));
            Ok(r.emit(opts, started))
        }
        AnalyzeWhat::Fibonacci { automaton } => {
            let a = load_automaton(&automaton.automaton)?;
            let mut r = Report::new("fibonacci");
            match fibonacci_totality(&a)? {
                Some(n) => {
                    r.answer(true);
                    r.line(format!("n={n}"));
                    r.field("witness", json!({ "kind": "totality-index", "n": n }));
                }
                None => {
                    r.answer(false);
                }
            }
            Ok(r.emit(opts, started))
        }
    }
}
