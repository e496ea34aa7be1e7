//! Benchmark grid: one unit instance per `(n, Δ)` cell, every algorithm run
//! on the same realization.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::Args;
use rayon::prelude::*;
use superseq_core::intervals::{
    generate_instance, sample_realization, sort_baseline, InstanceKind, SortedGroups, Strategy,
};
use superseq_core::preprocess::build_unit_supersequence;
use superseq_core::reconstruct::{
    greedy_stack_sort, pq_sweep_sort, realize_sequence, smooth_sort, Dictionary,
};
use superseq_core::{rng, Counters, Error, Result};

pub const DEFAULT_GRID: &str = "n=1e3,1e4,1e5;delta=2,4,8";

pub const HEADER: &str =
    "n,delta,algorithm,seq_len,comparisons,dictionary_ops,stack_ops,retrievals,peak_size,wall_ns";

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value = DEFAULT_GRID)]
    pub grid: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub n: Vec<usize>,
    pub delta: Vec<usize>,
}

impl Grid {
    /// Cells in report order: `n` outer, `Δ` inner.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.n.iter().flat_map(|&n| self.delta.iter().map(move |&d| (n, d))).collect()
    }
}

fn count(raw: &str) -> Option<usize> {
    let v: f64 = raw.trim().parse().ok()?;
    (v.is_finite() && v >= 1.0 && v.fract() == 0.0 && v <= 1e12).then_some(v as usize)
}

/// Parses `n=1e3,1e4;delta=2,4`. Both keys are required.
pub fn parse_grid(spec: &str) -> Result<Grid> {
    let mut n = None;
    let mut delta = None;
    for (column, part) in spec.split(';').enumerate() {
        let bad = |msg: String| Error::Parse { line: 1, column: column + 1, message: msg };
        let (key, values) = part.split_once('=').ok_or_else(|| bad(format!("expected key=values in {part:?}")))?;
        let values = values
            .split(',')
            .map(|v| count(v).ok_or_else(|| bad(format!("invalid count {v:?}"))))
            .collect::<Result<Vec<usize>>>()?;
        match key.trim() {
            "n" => n = Some(values),
            "delta" => delta = Some(values),
            other => return Err(bad(format!("unknown grid key {other:?}"))),
        }
    }
    match (n, delta) {
        (Some(n), Some(delta)) => Ok(Grid { n, delta }),
        _ => Err(Error::Parse { line: 1, column: 1, message: "grid needs n= and delta=".into() }),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub n: usize,
    pub delta: usize,
    pub algorithm: &'static str,
    pub seq_len: usize,
    pub counters: Counters,
    pub wall_ns: u128,
}

fn timed(f: impl FnOnce() -> Result<SortedGroups>) -> Result<(SortedGroups, u128)> {
    let start = Instant::now();
    let out = f()?;
    Ok((out, start.elapsed().as_nanos()))
}

/// All algorithms on one cell. The instance and realization depend only on
/// `(seed, n, Δ)`, not on the rest of the grid.
pub fn run_cell(n: usize, delta: usize, seed: u64) -> Result<Vec<Row>> {
    let cell_seed = rng::derive(rng::derive(seed, n as u64), delta as u64);
    let set = generate_instance(InstanceKind::Unit, n, delta, cell_seed)?;
    let seq = build_unit_supersequence(&set)?;
    let r = sample_realization(&set, Strategy::Uniform, rng::derive(cell_seed, 1));
    let h = realize_sequence(&seq, &r)?;
    let (alpha, beta) = seq.smoothness().expect("unit sequences carry smoothness parameters");
    let hash_seed = rng::derive(cell_seed, 2);

    let runs: Vec<(&'static str, (SortedGroups, u128))> = vec![
        ("stack-hash", timed(|| greedy_stack_sort(&h, Dictionary::Hashed { seed: hash_seed }))?),
        ("stack-tree", timed(|| greedy_stack_sort(&h, Dictionary::Ordered))?),
        ("smooth", timed(|| smooth_sort(&h, alpha, beta))?),
        ("pq-sweep", timed(|| pq_sweep_sort(&set, &r))?),
        ("baseline", timed(|| Ok(sort_baseline(&r)))?),
    ];
    let expected = runs.last().expect("baseline").1 .0.expand_values();
    for (name, (sorted, _)) in &runs {
        if sorted.expand_values() != expected {
            return Err(Error::SequenceMismatch(format!("{name} disagrees with the baseline")));
        }
    }
    Ok(runs
        .into_iter()
        .map(|(algorithm, (sorted, wall_ns))| Row {
            n,
            delta,
            algorithm,
            seq_len: seq.len(),
            counters: sorted.counters,
            wall_ns,
        })
        .collect())
}

/// Runs the cells in parallel and returns rows in grid order.
pub fn run_grid(grid: &Grid, seed: u64) -> Result<Vec<Row>> {
    let per_cell: Vec<Vec<Row>> = grid
        .cells()
        .into_par_iter()
        .map(|(n, d)| run_cell(n, d, seed))
        .collect::<Result<_>>()?;
    Ok(per_cell.into_iter().flatten().collect())
}

pub fn render(rows: &[Row]) -> String {
    let mut text = format!("{HEADER}\n");
    for row in rows {
        let c = &row.counters;
        writeln!(
            text,
            "{},{},{},{},{},{},{},{},{},{}",
            row.n,
            row.delta,
            row.algorithm,
            row.seq_len,
            c.comparisons,
            c.dictionary_ops,
            c.stack_ops(),
            c.retrievals,
            c.peak_size,
            row.wall_ns
        )
        .unwrap();
    }
    text
}

pub fn run(args: &BenchArgs) -> Result<()> {
    let grid = parse_grid(&args.grid)?;
    let rows = run_grid(&grid, args.seed)?;
    let mut out = super::sink(args.out.as_deref())?;
    out.write_all(render(&rows).as_bytes())?;
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid() {
        let g = parse_grid(DEFAULT_GRID).unwrap();
        assert_eq!(g.n, vec![1000, 10_000, 100_000]);
        assert_eq!(g.delta, vec![2, 4, 8]);
        assert_eq!(g.cells()[..4], [(1000, 2), (1000, 4), (1000, 8), (10_000, 2)]);
    }

    #[test]
    fn grid_errors() {
        assert!(parse_grid("n=10").is_err());
        assert!(parse_grid("n=10;delta=1.5").is_err());
        assert!(parse_grid("n=10;delta=2;x=3").is_err());
        assert!(parse_grid("n10;delta=2").unwrap_err().is_parse_error());
    }

    #[test]
    fn small_grid_is_deterministic_except_time() {
        let g = parse_grid("n=50,80;delta=1,3").unwrap();
        let strip = |rows: Vec<Row>| -> Vec<Row> {
            rows.into_iter().map(|r| Row { wall_ns: 0, ..r }).collect()
        };
        let a = strip(run_grid(&g, 9).unwrap());
        assert_eq!(a, strip(run_grid(&g, 9).unwrap()));
        assert_eq!(a.len(), 4 * 5);
        assert!(a.iter().all(|r| r.counters.retrievals > 0));
    }
}
