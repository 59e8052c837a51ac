use std::borrow::Cow;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rhetoric::experiment::{self, SEED_WORDS};
use rhetoric::generate::LengthDistribution;
use rhetoric::profile::store_append;
use rhetoric::{
    build_centroids, corpus, count_all, entropy_report, generate, identify, predict_reelection, store_load, summarize,
    to_profile, GenerationSpec, GlossLexicon, Mode, ProfileStoreRecord, StrategyCounts, StrategyKind, StrategyProfile,
    TagLexicon, WeightTable,
};
use serde::Serialize;
use walkdir::WalkDir;

mod report;

use report::{Emitter, Format};

#[derive(Parser, Debug)]
#[command(
    name = "rhetoric",
    version,
    about = "Count rhetorical strategies and put the counts to work"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Gloss lexicon (lemma<TAB>gloss) instead of the bundled one.
    #[arg(long, global = true, value_name = "PATH")]
    lexicon: Option<PathBuf>,
    /// Tag lexicon (word<TAB>TAG) instead of the bundled one.
    #[arg(long, global = true, value_name = "PATH")]
    tags: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count each strategy in files (directories are searched for *.txt).
    Count { paths: Vec<PathBuf> },
    /// Profile the files together and add the profile to a store.
    Profile {
        #[arg(long)]
        label: String,
        #[arg(long, value_name = "PATH")]
        store: PathBuf,
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
    /// Rank the profiles in a store by closeness to an unknown text.
    Identify {
        #[arg(long, value_name = "PATH")]
        store: PathBuf,
        path: PathBuf,
    },
    /// Predict whether an inaugural address wins re-election.
    Predict {
        /// Profiles of re-elected presidents; defaults to the bundled table.
        #[arg(long, value_name = "PATH")]
        winners: Option<PathBuf>,
        /// Profiles of presidents who lost; defaults to the bundled table.
        #[arg(long, value_name = "PATH")]
        losers: Option<PathBuf>,
        path: PathBuf,
    },
    /// Generate text by chaining glosses from a seed word.
    Generate(GenerateArgs),
    /// Word entropy of each file.
    Entropy { paths: Vec<PathBuf> },
    /// Extract the sentences richest in weighted strategies.
    Summarize {
        #[arg(long, default_value_t = rhetoric::summarize::DEFAULT_K)]
        k: usize,
        /// Weight table (strategy<TAB>weight) overriding the defaults.
        #[arg(long, value_name = "PATH")]
        weights: Option<PathBuf>,
        path: PathBuf,
    },
    /// Run one of the bundled experiments and print its table.
    Experiment {
        name: ExperimentName,
        /// First rng seed; runs use consecutive seeds from here.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 20)]
        runs: u64,
    },
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[arg(long)]
    seed_word: String,
    #[arg(long, default_value_t = 10)]
    words_per_sentence: usize,
    #[arg(long, default_value_t = 5)]
    sentences: usize,
    /// Percentage of sentences that get a dash.
    #[arg(long, default_value_t = 0.0)]
    dash: f64,
    /// Percentage of sentences that get a semicolon.
    #[arg(long, default_value_t = 0.0)]
    semicolon: f64,
    #[arg(long, value_enum, default_value_t = ModeArg::Deterministic)]
    mode: ModeArg,
    /// Vary sentence lengths by up to two words.
    #[arg(long)]
    jitter: bool,
    /// Required whenever the run draws random numbers.
    #[arg(long)]
    seed: Option<u64>,
    /// Write the text here instead of standard output.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    Deterministic,
    Random,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ExperimentName {
    Attribution,
    NlgSimilarity,
    EntropyOrdering,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

struct Lexicons {
    tags: Option<PathBuf>,
    glosses: Option<PathBuf>,
}

impl Lexicons {
    fn tags(&self) -> Result<Cow<'static, TagLexicon>> {
        match &self.tags {
            Some(p) => Ok(Cow::Owned(
                TagLexicon::load(p).with_context(|| format!("loading tag lexicon {}", p.display()))?,
            )),
            None => Ok(Cow::Borrowed(TagLexicon::bundled())),
        }
    }

    fn glosses(&self) -> Result<Cow<'static, GlossLexicon>> {
        match &self.glosses {
            Some(p) => Ok(Cow::Owned(
                GlossLexicon::load(p).with_context(|| format!("loading gloss lexicon {}", p.display()))?,
            )),
            None => Ok(Cow::Borrowed(GlossLexicon::bundled())),
        }
    }
}

/// Returns whether every requested item succeeded.
fn run(cli: Cli) -> Result<bool> {
    let lex = Lexicons {
        tags: cli.common.tags,
        glosses: cli.common.lexicon,
    };
    let out = Emitter::new(cli.common.format);
    match cli.command {
        Command::Count { paths } => cmd_count(&paths, &lex, &out),
        Command::Profile { label, store, paths } => cmd_profile(label, &store, &paths, &lex, &out).map(|()| true),
        Command::Identify { store, path } => cmd_identify(&store, &path, &lex, &out).map(|()| true),
        Command::Predict { winners, losers, path } => {
            cmd_predict(winners.as_deref(), losers.as_deref(), &path, &lex, &out).map(|()| true)
        }
        Command::Generate(args) => cmd_generate(args, &lex, &out).map(|()| true),
        Command::Entropy { paths } => cmd_entropy(&paths, &out),
        Command::Summarize { k, weights, path } => {
            cmd_summarize(&path, k, weights.as_deref(), &lex, &out).map(|()| true)
        }
        Command::Experiment { name, seed, runs } => cmd_experiment(name, seed, runs, &lex, &out).map(|()| true),
    }
}

/// Expands directories to the `*.txt` files below them, sorted. Missing
/// paths are kept so that reading them reports the error per file.
fn expand(paths: &[PathBuf]) -> Result<Vec<PathBuf>> {
    if paths.is_empty() {
        bail!("no input paths given");
    }
    let mut files = Vec::new();
    for path in paths {
        if path.is_dir() {
            let mut found: Vec<PathBuf> = WalkDir::new(path)
                .into_iter()
                .filter_map(|e| e.ok())
                .filter(|e| e.file_type().is_file() && e.path().extension().is_some_and(|x| x == "txt"))
                .map(|e| e.into_path())
                .collect();
            found.sort();
            files.extend(found);
        } else {
            files.push(path.clone());
        }
    }
    Ok(files)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// Strategy values keyed by name, in table order.
#[derive(Serialize)]
struct PerStrategy<T> {
    dash: T,
    semicolon: T,
    alliteration: T,
    anaphora: T,
    epistrophe: T,
    parallelism: T,
}

impl<T: Copy> PerStrategy<T> {
    fn new(values: [T; StrategyKind::COUNT]) -> Self {
        let [dash, semicolon, alliteration, anaphora, epistrophe, parallelism] = values;
        PerStrategy {
            dash,
            semicolon,
            alliteration,
            anaphora,
            epistrophe,
            parallelism,
        }
    }
}

#[derive(Serialize)]
struct CountRow {
    file: String,
    counts: PerStrategy<usize>,
    total: usize,
}

fn cmd_count(paths: &[PathBuf], lex: &Lexicons, out: &Emitter) -> Result<bool> {
    let tags = lex.tags()?;
    let mut rows = Vec::new();
    let mut ok = true;
    for file in expand(paths)? {
        match read(&file) {
            Ok(text) => {
                let counts = count_all(&text, &tags);
                rows.push(CountRow {
                    file: file.display().to_string(),
                    counts: PerStrategy::new(counts.as_array()),
                    total: counts.total(),
                });
            }
            Err(e) => {
                eprintln!("error: {e:#}");
                ok = false;
            }
        }
    }
    out.emit(&rows, || {
        let mut s = String::from("file\tdash\tsemicolon\talliteration\tanaphora\tepistrophe\tparallelism\ttotal\n");
        for r in &rows {
            let c = &r.counts;
            s += &format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                r.file, c.dash, c.semicolon, c.alliteration, c.anaphora, c.epistrophe, c.parallelism, r.total
            );
        }
        s
    })?;
    Ok(ok)
}

#[derive(Serialize)]
struct ProfileRow<'a> {
    label: &'a str,
    profile: PerStrategy<f64>,
}

fn profile_row(p: &StrategyProfile) -> ProfileRow<'_> {
    ProfileRow {
        label: &p.label,
        profile: PerStrategy::new(p.values),
    }
}

fn profile_line(p: &StrategyProfile) -> String {
    let values: Vec<String> = p.values.iter().map(|v| format!("{v:?}")).collect();
    format!("{}\t{}\n", p.label, values.join("\t"))
}

fn cmd_profile(label: String, store: &Path, paths: &[PathBuf], lex: &Lexicons, out: &Emitter) -> Result<()> {
    let tags = lex.tags()?;
    let files = expand(paths)?;
    let mut counts = StrategyCounts::default();
    for file in &files {
        counts = counts + count_all(&read(file)?, &tags);
    }
    let sources = files.iter().map(|f| f.display().to_string()).collect();
    let record = ProfileStoreRecord::from_counts(label, counts, sources);
    if record.profile.is_degenerate() {
        log::warn!(
            "no strategies found for {:?}; storing an all-zero profile",
            record.profile.label
        );
    }
    let profile = record.profile.clone();
    store_append(store, record).with_context(|| format!("updating store {}", store.display()))?;
    out.emit(&profile_row(&profile), || {
        format!(
            "label\tpDash\tpSemi\tpAllit\tpAna\tpEpi\tpPara\n{}",
            profile_line(&profile)
        )
    })
}

fn cmd_identify(store: &Path, path: &Path, lex: &Lexicons, out: &Emitter) -> Result<()> {
    let known: Vec<StrategyProfile> = store_load(store)
        .with_context(|| format!("loading store {}", store.display()))?
        .into_iter()
        .map(|r| r.profile)
        .collect();
    let unknown = to_profile(path.display().to_string(), &count_all(&read(path)?, &*lex.tags()?));
    let ranked = identify(&unknown, &known)?;
    out.emit(&ranked, || {
        let mut s = String::from("rank\tlabel\trms\tsimilarity\n");
        for (i, m) in ranked.iter().enumerate() {
            let sim = m.similarity_percent.map_or("-".to_string(), |v| v.to_string());
            s += &format!("{}\t{}\t{}\t{sim}\n", i + 1, m.label, m.rms);
        }
        s
    })
}

fn load_profiles(path: Option<&Path>, bundled: fn() -> Vec<StrategyProfile>) -> Result<Vec<StrategyProfile>> {
    match path {
        Some(p) => Ok(store_load(p)
            .with_context(|| format!("loading store {}", p.display()))?
            .into_iter()
            .map(|r| r.profile)
            .collect()),
        None => Ok(bundled()),
    }
}

fn cmd_predict(
    winners: Option<&Path>,
    losers: Option<&Path>,
    path: &Path,
    lex: &Lexicons,
    out: &Emitter,
) -> Result<()> {
    let centroids = build_centroids(
        &load_profiles(winners, corpus::inaugural_winners)?,
        &load_profiles(losers, corpus::inaugural_losers)?,
    )?;
    let address = to_profile(path.display().to_string(), &count_all(&read(path)?, &*lex.tags()?));
    let prediction = predict_reelection(&address, &centroids)?;
    out.emit(&prediction, || {
        format!(
            "outcome: {:?}\nrms_to_winners: {}\nrms_to_losers: {}\nmargin: {}\n",
            prediction.outcome,
            prediction.rms_to_winners,
            prediction.rms_to_losers,
            prediction.rms_to_losers - prediction.rms_to_winners
        )
    })
}

fn cmd_generate(args: GenerateArgs, lex: &Lexicons, out: &Emitter) -> Result<()> {
    let mode = match args.mode {
        ModeArg::Deterministic => Mode::Deterministic,
        ModeArg::Random => Mode::Random,
    };
    let draws_randomness = mode == Mode::Random || args.jitter || args.dash > 0.0 || args.semicolon > 0.0;
    let rng_seed = match (args.seed, draws_randomness) {
        (Some(seed), _) => seed,
        (None, false) => 0,
        (None, true) => bail!("--seed is required for random mode, jittered lengths or punctuation targets"),
    };
    let spec = GenerationSpec {
        dash_percent: args.dash,
        semicolon_percent: args.semicolon,
        mode,
        rng_seed,
        lengths: if args.jitter {
            LengthDistribution::Jittered
        } else {
            LengthDistribution::Fixed
        },
        ..GenerationSpec::new(args.seed_word, args.words_per_sentence, args.sentences)
    };
    let generated = generate(&spec, &*lex.glosses()?)?;
    match &args.output {
        Some(path) => {
            std::fs::write(path, generated.text() + "\n").with_context(|| format!("writing {}", path.display()))?;
            out.emit(&generated.injection_log, String::new)
        }
        None => out.emit(&generated, || generated.text() + "\n"),
    }
}

#[derive(Serialize)]
struct EntropyRow {
    file: String,
    #[serde(flatten)]
    report: rhetoric::EntropyReport,
}

fn cmd_entropy(paths: &[PathBuf], out: &Emitter) -> Result<bool> {
    let mut rows = Vec::new();
    let mut ok = true;
    for file in expand(paths)? {
        match read(&file).and_then(|t| Ok(entropy_report(&t)?)) {
            Ok(report) => rows.push(EntropyRow {
                file: file.display().to_string(),
                report,
            }),
            Err(e) => {
                eprintln!("error: {}: {e:#}", file.display());
                ok = false;
            }
        }
    }
    out.emit(&rows, || {
        rows.iter()
            .map(|r| format!("file: {}\n{}", r.file, r.report.to_text()))
            .collect::<Vec<_>>()
            .join("\n")
    })?;
    Ok(ok)
}

fn cmd_summarize(path: &Path, k: usize, weights: Option<&Path>, lex: &Lexicons, out: &Emitter) -> Result<()> {
    let weights = match weights {
        Some(p) => WeightTable::load(p).with_context(|| format!("loading weights {}", p.display()))?,
        None => WeightTable::default(),
    };
    let summary = summarize(&read(path)?, k, &weights, &*lex.tags()?)?;
    out.emit(&summary, || summary.iter().map(|s| format!("{}\n", s.text)).collect())
}

fn cmd_experiment(name: ExperimentName, seed: Option<u64>, runs: u64, lex: &Lexicons, out: &Emitter) -> Result<()> {
    let seeds = || -> Result<Vec<u64>> {
        let Some(first) = seed else {
            bail!("--seed is required for this experiment");
        };
        Ok((0..runs).map(|i| first.wrapping_add(i)).collect())
    };
    match name {
        ExperimentName::Attribution => {
            let report = experiment::attribution(corpus::author_texts(), &*lex.tags()?)?;
            out.emit(&report, || report.to_table())
        }
        ExperimentName::NlgSimilarity => {
            let style_samples = corpus::style_samples();
            let reference = style_samples
                .iter()
                .find(|p| p.label == "Semi")
                .expect("bundled table has a Semi row");
            let report = experiment::nlg_similarity(
                reference,
                &style_samples,
                &SEED_WORDS,
                &seeds()?,
                &*lex.glosses()?,
                &*lex.tags()?,
            )?;
            out.emit(&report, || report.to_table())
        }
        ExperimentName::EntropyOrdering => {
            let report = experiment::entropy_ordering(&SEED_WORDS, &seeds()?, &*lex.glosses()?)?;
            out.emit(&report, || report.to_table())
        }
    }
}
