//! Command-line front end. `run` returns the process exit code.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::anonymizer::{restore, AnonymizerConfig, ChangeDictionary, Scope, DEFAULT_SEED};
use crate::bpe::{train_bpe, BpeModel, DEFAULT_SAMPLE_FRACTION, DEFAULT_TARGET_SIZE};
use crate::corpus::{self, FilterConfig, LanguageMap};
use crate::error::Error;
use crate::eval::{compare_token_counts, perplexity_comparison};
use crate::fsutil::write_atomic;
use crate::lexicalizer::{encode, TokenStream};
use crate::pipeline::Pipeline;
use crate::unit::{Language, SourceUnit};
use crate::vocabulary::{VocabConfig, Vocabulary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNIT_FAILURE: i32 = 1;
pub const EXIT_BAD_CONFIG: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "tokompiler", version, about = "Anonymizing tokenizer for C, C++ and Fortran")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Anonymize and lexicalize sources; writes tokens.jsonl and one dictionary per unit.
    Tokenize(TokenizeArgs),
    /// Rebuild source text from tokens.jsonl and its dictionaries.
    Restore(RestoreArgs),
    /// Dedup, filter and extract functions from a tree of repositories.
    Corpus(CorpusArgs),
    /// Build a closed vocabulary.
    Vocab(VocabArgs),
    /// Train the byte-level BPE baseline.
    BpeTrain(BpeTrainArgs),
    /// Compare token counts (and optionally n-gram perplexity) against BPE.
    Compare(CompareArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScopeArg {
    File,
    Function,
}

/// Input selection shared by the subcommands that read sources. INPUT is a
/// directory tree, a single source file, or a `.jsonl` file of units as
/// written by `corpus`.
#[derive(Debug, Args)]
pub struct InputArgs {
    pub input: PathBuf,
    /// Languages to keep (c, cpp, fortran); comma separated.
    #[arg(long, value_delimiter = ',')]
    pub lang: Vec<String>,
    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct PipelineArgs {
    #[arg(long, env = "TOKOMPILER_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = ScopeArg::File)]
    pub scope: ScopeArg,
    #[arg(long, default_value_t = 1)]
    pub range_lo: u64,
    #[arg(long, default_value_t = 1000)]
    pub range_hi: u64,
}

#[derive(Debug, Args)]
pub struct TokenizeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub pipeline: PipelineArgs,
    /// Vocabulary file; when given, token ids are written too.
    #[arg(long)]
    pub vocab: Option<PathBuf>,
    /// Exit 1 if any unit fails.
    #[arg(long)]
    pub strict: bool,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct RestoreArgs {
    /// tokens.jsonl written by `tokenize`.
    pub tokens: PathBuf,
    /// Base directory for dictionary paths; defaults to the tokens file's directory.
    #[arg(long)]
    pub dicts: Option<PathBuf>,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct CorpusArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, default_value_t = 100)]
    pub min_tokens: usize,
    #[arg(long, default_value_t = 1_048_576)]
    pub max_bytes: u64,
    /// Output directory for stats.json and blocks.jsonl.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct VocabArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub pipeline: PipelineArgs,
    /// Leave out the number words of the id range.
    #[arg(long)]
    pub no_number_range: bool,
    #[arg(long)]
    pub no_category_words: bool,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct BpeTrainArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, env = "TOKOMPILER_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_TARGET_SIZE)]
    pub target_size: usize,
    #[arg(long, default_value_t = DEFAULT_SAMPLE_FRACTION)]
    pub sample_fraction: f64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub pipeline: PipelineArgs,
    /// BPE model written by `bpe-train`.
    #[arg(long)]
    pub bpe: PathBuf,
    #[arg(long)]
    pub vocab: Option<PathBuf>,
    /// Also fit n-gram models on a train split and report held-out perplexity.
    #[arg(long)]
    pub perplexity: bool,
    #[arg(long, default_value_t = 3)]
    pub ngram_order: usize,
    #[arg(long, default_value_t = 0.01)]
    pub ngram_k: f64,
    /// Output directory for report.json and report.txt.
    #[arg(long)]
    pub out: PathBuf,
}

/// One line of tokens.jsonl.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TokenRow {
    pub unit_id: String,
    pub language: Language,
    pub tokens: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ids: Option<Vec<u32>>,
    /// Dictionary path relative to the tokens file's directory.
    pub dict: String,
}

/// One line of restore output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestoredRow {
    pub unit_id: String,
    pub text: String,
}

enum Failure {
    Config(String),
    Units(usize),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Config(e.to_string())
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_BAD_CONFIG } else { EXIT_OK };
        }
    };
    run_cli(cli)
}

pub fn run_cli(cli: Cli) -> i32 {
    let jobs = match &cli.command {
        Command::Tokenize(a) => a.input.jobs,
        Command::Corpus(a) => a.input.jobs,
        Command::Vocab(a) => a.input.jobs,
        Command::BpeTrain(a) => a.input.jobs,
        Command::Compare(a) => a.input.jobs,
        Command::Restore(_) => 0,
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(p) => p,
        Err(e) => {
            log::error!("cannot start worker pool: {e}");
            return EXIT_BAD_CONFIG;
        }
    };
    let result = pool.install(|| match cli.command {
        Command::Tokenize(a) => cmd_tokenize(&a),
        Command::Restore(a) => cmd_restore(&a),
        Command::Corpus(a) => cmd_corpus(&a),
        Command::Vocab(a) => cmd_vocab(&a),
        Command::BpeTrain(a) => cmd_bpe_train(&a),
        Command::Compare(a) => cmd_compare(&a),
    });
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            EXIT_BAD_CONFIG
        }
        Err(Failure::Units(n)) => {
            eprintln!("error: {n} unit(s) failed");
            EXIT_UNIT_FAILURE
        }
    }
}

fn languages(names: &[String]) -> std::result::Result<LanguageMap, Failure> {
    if names.is_empty() {
        return Ok(LanguageMap::default());
    }
    let langs = names
        .iter()
        .map(|n| n.parse::<Language>())
        .collect::<crate::Result<Vec<_>>>()?;
    Ok(LanguageMap::default().restrict(&langs))
}

/// Reads the units named by INPUT.
fn load_units(args: &InputArgs) -> std::result::Result<Vec<SourceUnit>, Failure> {
    let map = languages(&args.lang)?;
    let path = &args.input;
    if path.is_dir() {
        return Ok(corpus::ingest(path, &map)?.units);
    }
    if !path.is_file() {
        return Err(Error::RootNotFound(path.clone()).into());
    }
    if path.extension().is_some_and(|e| e == "jsonl") {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut units = Vec::new();
        for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            let unit: SourceUnit = serde_json::from_str(line)
                .map_err(|e| Failure::Config(format!("{}:{}: {e}", path.display(), i + 1)))?;
            if map.language_of(Path::new(&format!("x.{}", ext_for(unit.language)))).is_some() {
                units.push(unit);
            }
        }
        return Ok(units);
    }
    let language = match map.language_of(path) {
        Some(l) => l,
        None if args.lang.len() == 1 => args.lang[0].parse::<Language>()?,
        None => return Err(Failure::Config(format!("cannot tell the language of {}", path.display()))),
    };
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    let name = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    Ok(vec![SourceUnit::from_bytes(name.clone(), language, name, &bytes)])
}

fn ext_for(language: Language) -> &'static str {
    match language {
        Language::C => "c",
        Language::Cpp => "cpp",
        Language::Fortran => "f90",
    }
}

fn pipeline_of(args: &PipelineArgs) -> std::result::Result<Pipeline, Failure> {
    if args.range_hi < args.range_lo {
        return Err(Error::EmptyRange {
            lo: args.range_lo,
            hi: args.range_hi,
        }
        .into());
    }
    let scope = match args.scope {
        ScopeArg::File => Scope::File,
        ScopeArg::Function => Scope::Function,
    };
    Ok(Pipeline::new(
        args.seed,
        AnonymizerConfig {
            range_lo: args.range_lo,
            range_hi: args.range_hi,
            scope,
        },
    ))
}

fn write_jsonl<T: Serialize>(path: &Path, rows: &[T]) -> CmdResult {
    let mut out = String::new();
    for r in rows {
        out.push_str(&serde_json::to_string(r).map_err(Error::from)?);
        out.push('\n');
    }
    write_atomic(path, out.as_bytes())?;
    Ok(())
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> CmdResult {
    let mut text = serde_json::to_string_pretty(value).map_err(Error::from)?;
    text.push('\n');
    write_atomic(path, text.as_bytes())?;
    Ok(())
}

fn load_vocab(path: Option<&PathBuf>) -> std::result::Result<Option<Vocabulary>, Failure> {
    Ok(match path {
        Some(p) => Some(Vocabulary::load(p)?),
        None => None,
    })
}

fn cmd_tokenize(args: &TokenizeArgs) -> CmdResult {
    let pipeline = pipeline_of(&args.pipeline)?;
    let vocab = load_vocab(args.vocab.as_ref())?;
    let units = load_units(&args.input)?;
    let results: Vec<_> = units.par_iter().map(|u| (u, pipeline.tokenize(u))).collect();

    let mut rows = Vec::new();
    let mut dicts = Vec::new();
    let mut failures = 0;
    for (unit, result) in results {
        match result {
            Ok(outs) => {
                for t in outs {
                    let dict = format!("dicts/{:06}.json", rows.len());
                    let ids = vocab.as_ref().and_then(|v| encode(&t.stream, v).ids);
                    rows.push(TokenRow {
                        unit_id: t.unit.id.clone(),
                        language: t.unit.language,
                        tokens: t.stream.tokens,
                        ids,
                        dict: dict.clone(),
                    });
                    dicts.push((dict, t.anonymized.dictionary));
                }
            }
            Err(e) => {
                failures += 1;
                log::warn!("{}: {e}", unit.id);
            }
        }
        if (rows.len() + failures) % 1000 == 0 && !rows.is_empty() {
            log::info!("{} units tokenized", rows.len());
        }
    }
    for (rel, dict) in &dicts {
        write_atomic(&args.out.join(rel), dict.to_json()?.as_bytes())?;
    }
    write_jsonl(&args.out.join("tokens.jsonl"), &rows)?;
    log::info!("{} units written, {failures} failed", rows.len());
    if failures > 0 && args.strict {
        return Err(Failure::Units(failures));
    }
    Ok(())
}

fn cmd_restore(args: &RestoreArgs) -> CmdResult {
    let text = fs::read_to_string(&args.tokens).map_err(|e| Error::io(&args.tokens, e))?;
    let base = match &args.dicts {
        Some(d) => d.clone(),
        None => args.tokens.parent().map(Path::to_path_buf).unwrap_or_default(),
    };
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let row: TokenRow = serde_json::from_str(line)
            .map_err(|e| Failure::Config(format!("{}:{}: {e}", args.tokens.display(), i + 1)))?;
        let dict_path = base.join(&row.dict);
        let json = fs::read_to_string(&dict_path).map_err(|e| Error::io(&dict_path, e))?;
        let dict = ChangeDictionary::from_json(&json)?;
        let stream = TokenStream::new(row.unit_id.clone(), row.tokens);
        out.push(RestoredRow {
            unit_id: row.unit_id,
            text: restore(&stream, &dict)?,
        });
    }
    write_jsonl(&args.out, &out)
}

fn cmd_corpus(args: &CorpusArgs) -> CmdResult {
    let cfg = FilterConfig {
        min_tokens: args.min_tokens,
        max_bytes: args.max_bytes,
        ..FilterConfig::default()
    };
    let map = languages(&args.input.lang)?;
    let run = corpus::run(&args.input.input, &map, &cfg)?;
    write_json(&args.out.join("stats.json"), &run.stats)?;
    write_jsonl(&args.out.join("blocks.jsonl"), &run.blocks)
}

fn cmd_vocab(args: &VocabArgs) -> CmdResult {
    let pipeline = pipeline_of(&args.pipeline)?;
    let units = load_units(&args.input)?;
    let streams: Vec<TokenStream> = units
        .par_iter()
        .filter_map(|u| match pipeline.tokenize(u) {
            Ok(outs) => Some(outs),
            Err(e) => {
                log::warn!("{}: {e}", u.id);
                None
            }
        })
        .flatten()
        .map(|t| t.stream)
        .collect();
    let cfg = VocabConfig {
        include_number_range: !args.no_number_range,
        range_lo: args.pipeline.range_lo,
        range_hi: args.pipeline.range_hi,
        include_category_words: !args.no_category_words,
    };
    let vocab = Vocabulary::build(&streams, &cfg)?;
    log::info!("vocabulary of {} tokens", vocab.len());
    vocab.save(&args.out)?;
    Ok(())
}

fn cmd_bpe_train(args: &BpeTrainArgs) -> CmdResult {
    let units = load_units(&args.input)?;
    let texts: Vec<&str> = units.iter().map(|u| u.text.as_str()).collect();
    let model = train_bpe(&texts, args.target_size, args.sample_fraction, args.seed)?;
    log::info!("bpe vocabulary of {} tokens", model.vocab_size());
    model.save(&args.out)?;
    Ok(())
}

fn cmd_compare(args: &CompareArgs) -> CmdResult {
    let pipeline = pipeline_of(&args.pipeline)?;
    let bpe = BpeModel::load(&args.bpe)?;
    let vocab = load_vocab(args.vocab.as_ref())?;
    let units = load_units(&args.input)?;
    let mut report = compare_token_counts(&units, &pipeline, &bpe, vocab.as_ref());
    if args.perplexity {
        report.normalized_ppl = Some(perplexity_comparison(
            &units,
            &pipeline,
            &bpe,
            args.ngram_order,
            args.ngram_k,
        )?);
    }
    write_json(&args.out.join("report.json"), &report)?;
    write_atomic(&args.out.join("report.txt"), report.to_table().as_bytes())?;
    Ok(())
}
