//! File-based pipelines over `superseq-core`.
//!
//! Every command reads and writes the formats of [`superseq_core::formats`];
//! `--out` defaults to standard output.

pub mod bench;

use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use superseq_core::formats;
use superseq_core::intervals::{
    generate_instance, ply, sample_realization, sort_baseline, InstanceKind, IntervalSet,
    Strategy, SortedGroups,
};
use superseq_core::oracle::{self, Verdict};
use superseq_core::preprocess::{
    build_general_supersequence, build_marked_supersequence, build_unit_supersequence,
    omit_for_largest_gap, omit_for_smallest_gap, GapKind, GapPrep, GapVariant, Provenance,
    SuperSequence,
};
use superseq_core::reconstruct::{
    greedy_stack_sort, pq_sweep_sort, realize_sequence, reconstruct_gap, smooth_sort, Dictionary,
};
use superseq_core::{Error, Result};

#[derive(Debug, Parser)]
#[command(name = "superseq", version, about = "Sort points hidden in known intervals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a random instance with a given ply
    Gen(GenArgs),
    /// Print the ply of an instance
    Ply {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Build a supersequence or a gap preparation
    Preprocess(PreprocessArgs),
    /// Place one point in every interval
    Realize(RealizeArgs),
    /// Sort a realization using a supersequence
    Reconstruct(ReconstructArgs),
    /// Smallest or largest gap from a gap preparation
    Gaps(GapsArgs),
    /// Check supersequences and gap preparations against brute force
    Verify(VerifyArgs),
    /// Run the benchmark grid
    Bench(bench::BenchArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// unit | general
    #[arg(long)]
    pub kind: InstanceKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub ply: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Unit,
    General,
    Marked,
    GapMin,
    GapMax,
}

#[derive(Debug, Args)]
pub struct PreprocessArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub mode: Mode,
    /// safe | paper-literal (gap-max only)
    #[arg(long, default_value = "safe")]
    pub gap_variant: GapVariant,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Supersequence of the kept intervals (gap modes). Defaults to the
    /// `--out` path with extension `seq.csv`.
    #[arg(long)]
    pub seq_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RealizeArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// uniform | left-endpoints | right-endpoints | adversarial-reverse
    #[arg(long, default_value = "uniform")]
    pub strategy: Strategy,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    StackHash,
    StackTree,
    Smooth,
    PqSweep,
    Baseline,
}

#[derive(Debug, Args)]
pub struct ReconstructArgs {
    #[arg(long)]
    pub seq: Option<PathBuf>,
    #[arg(long)]
    pub real: PathBuf,
    #[arg(long, value_enum)]
    pub algo: Algo,
    /// Interval file; required by pq-sweep
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// Seed of the hash function (stack-hash)
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GapsArgs {
    #[arg(long)]
    pub prep: PathBuf,
    #[arg(long)]
    pub seq: PathBuf,
    #[arg(long)]
    pub real: PathBuf,
    /// min | max; must match the preparation
    #[arg(long)]
    pub which: GapKind,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("subject").required(true).multiple(true).args(["seq", "prep"])))]
pub struct VerifyArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub seq: Option<PathBuf>,
    #[arg(long)]
    pub prep: Option<PathBuf>,
    #[arg(long, default_value_t = oracle::DEFAULT_TRIALS)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Exit status for an error: 2 for unreadable or malformed input, 3 for
/// contract violations.
pub fn exit_code(e: &Error) -> ExitCode {
    ExitCode::from(if e.is_parse_error() { 2 } else { 3 })
}

pub fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen(a) => {
            let set = generate_instance(a.kind, a.n, a.ply, a.seed)?;
            formats::write_intervals(sink(a.out.as_deref())?, &set)?;
        }
        Command::Ply { input } => {
            let set = read_set(&input)?;
            println!("{}", ply(&set)?);
        }
        Command::Preprocess(a) => preprocess(a)?,
        Command::Realize(a) => {
            let set = read_set(&a.input)?;
            let r = sample_realization(&set, a.strategy, a.seed);
            formats::write_realization(sink(a.out.as_deref())?, &r)?;
        }
        Command::Reconstruct(a) => reconstruct(a)?,
        Command::Gaps(a) => {
            let prep = formats::read_gap_prep(formats::open(&a.prep)?)?;
            if prep.which != a.which {
                return Err(Error::InvalidArgument("--which differs from the preparation"));
            }
            let seq = formats::read_supersequence(formats::open(&a.seq)?)?;
            let r = formats::read_realization(formats::open(&a.real)?)?;
            let result = reconstruct_gap(&prep, &seq, &r)?;
            write_json_line(sink(a.out.as_deref())?, &result)?;
        }
        Command::Verify(a) => return verify(a),
        Command::Bench(a) => bench::run(&a)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn read_set(path: &Path) -> Result<IntervalSet> {
    formats::read_intervals(formats::open(path)?)
}

fn sink(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(formats::create(p)?),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    })
}

fn write_json_line(mut out: impl Write, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer(&mut out, value)?;
    out.write_all(b"\n")?;
    out.flush()?;
    Ok(())
}

fn preprocess(a: PreprocessArgs) -> Result<()> {
    let set = read_set(&a.input)?;
    let prep = match a.mode {
        Mode::Unit => return write_seq(a.out.as_deref(), &build_unit_supersequence(&set)?),
        Mode::General => return write_seq(a.out.as_deref(), &build_general_supersequence(&set)?),
        Mode::Marked => return write_seq(a.out.as_deref(), &build_marked_supersequence(&set)?),
        Mode::GapMin => omit_for_smallest_gap(&set)?,
        Mode::GapMax => omit_for_largest_gap(&set, a.gap_variant)?,
    };
    let mut out = sink(a.out.as_deref())?;
    formats::write_gap_prep(&mut out, &prep)?;
    out.flush()?;
    let seq_path = a.seq_out.or_else(|| a.out.as_ref().map(|p| p.with_extension("seq.csv")));
    if let Some(path) = seq_path {
        write_seq(Some(&path), &kept_supersequence(&set, &prep)?)?;
    }
    Ok(())
}

/// Unit construction when the kept intervals are unit, general otherwise.
pub fn kept_supersequence(set: &IntervalSet, prep: &GapPrep) -> Result<SuperSequence> {
    if prep.kept.is_empty() {
        return Ok(SuperSequence::all_marked(Provenance::General, Vec::new(), None, None, 0, 0));
    }
    let kept = set.subset(&prep.kept)?;
    if kept.is_unit() {
        build_unit_supersequence(&kept)
    } else {
        build_general_supersequence(&kept)
    }
}

fn write_seq(path: Option<&Path>, seq: &SuperSequence) -> Result<()> {
    let mut out = sink(path)?;
    formats::write_supersequence(&mut out, seq)?;
    out.flush()?;
    Ok(())
}

fn reconstruct(a: ReconstructArgs) -> Result<()> {
    let r = formats::read_realization(formats::open(&a.real)?)?;
    let sorted: SortedGroups = match a.algo {
        Algo::Baseline => sort_baseline(&r),
        Algo::PqSweep => {
            let input = a.input.as_deref().ok_or(Error::InvalidArgument("pq-sweep needs --in"))?;
            let set = read_set(input)?;
            r.validate(&set)?;
            pq_sweep_sort(&set, &r)?
        }
        Algo::StackHash | Algo::StackTree | Algo::Smooth => {
            let path = a.seq.as_deref().ok_or(Error::InvalidArgument("this algorithm needs --seq"))?;
            let seq = formats::read_supersequence(formats::open(path)?)?;
            let h = realize_sequence(&seq, &r)?;
            match a.algo {
                Algo::StackHash => greedy_stack_sort(&h, Dictionary::Hashed { seed: a.seed })?,
                Algo::StackTree => greedy_stack_sort(&h, Dictionary::Ordered)?,
                _ => {
                    let (alpha, beta) = seq
                        .smoothness()
                        .ok_or(Error::InvalidArgument("smooth needs a sequence with alpha and beta"))?;
                    smooth_sort(&h, alpha, beta)?
                }
            }
        }
    };
    let mut out = sink(a.out.as_deref())?;
    formats::write_sorted_groups(&mut out, &sorted)?;
    out.flush()?;
    write_json_line(io::stderr().lock(), &sorted.counters)
}

#[derive(Serialize)]
struct CheckReport<'a> {
    check: &'a str,
    #[serde(flatten)]
    verdict: Verdict,
}

fn verify(a: VerifyArgs) -> Result<ExitCode> {
    let set = read_set(&a.input)?;
    let mut reports = Vec::new();
    if let Some(path) = &a.seq {
        let seq = formats::read_supersequence(formats::open(path)?)?;
        let verdict = oracle::check_sorting_supersequence(&seq, &set, a.trials, a.seed);
        reports.push(CheckReport { check: "sorting-supersequence", verdict });
        if let Some((alpha, beta)) = seq.smoothness() {
            let verdict = oracle::check_smooth(&seq, &set, alpha, beta);
            reports.push(CheckReport { check: "smooth", verdict });
        }
    }
    if let Some(path) = &a.prep {
        let prep = formats::read_gap_prep(formats::open(path)?)?;
        let verdict = oracle::check_gap_omission(&set, &prep, a.trials, a.seed);
        reports.push(CheckReport { check: "gap-omission", verdict });
    }
    let mut out = io::stdout().lock();
    for report in &reports {
        write_json_line(&mut out, report)?;
    }
    let ok = reports.iter().all(|r| r.verdict.ok);
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
