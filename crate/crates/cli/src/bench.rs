//! Pipeline timing over generated path polygons.

use std::time::{Duration, Instant};

use pathguard_core::gen::{generate, GenSpec};
use pathguard_core::{guard_parts, partition_balanced, vertical_decompose, OrthoPolygon};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchRow {
    /// Actual vertex count of the generated polygon.
    pub n: usize,
    pub seed: u64,
    pub decompose: Duration,
    pub partition: Duration,
    pub guards: Duration,
    /// Sum of the three stages; input validation is not timed.
    pub total: Duration,
    pub gn: usize,
}

impl BenchRow {
    pub fn csv(&self) -> String {
        format!(
            "{},{:.6},{:.6},{:.6},{:.6}",
            self.n,
            self.decompose.as_secs_f64(),
            self.partition.as_secs_f64(),
            self.guards.as_secs_f64(),
            self.total.as_secs_f64()
        )
    }
}

pub const CSV_HEADER: &str = "n,decompose_time,partition_time,guards_time,total";

/// A random path polygon with roughly `n` vertices.
pub fn bench_polygon(n: usize, seed: u64) -> Result<OrthoPolygon, CliError> {
    // each slab contributes about three vertices on average
    let slabs = (n / 3).max(1);
    Ok(generate(&GenSpec::random(seed, slabs))?)
}

fn run_once(raw: &OrthoPolygon) -> Result<BenchRow, CliError> {
    let p = OrthoPolygon::new(raw.vertices().to_vec())?;
    let t0 = Instant::now();
    let series = vertical_decompose(&p);
    let t1 = Instant::now();
    let (parts, cuts) = partition_balanced(&series)?;
    let t2 = Instant::now();
    let plan = guard_parts(parts, cuts);
    let t3 = Instant::now();
    Ok(BenchRow {
        n: p.len(),
        seed: 0,
        decompose: t1 - t0,
        partition: t2 - t1,
        guards: t3 - t2,
        total: t3 - t0,
        gn: plan.gn,
    })
}

/// Fastest of a few repetitions; small inputs get more of them.
pub fn bench_row(n: usize, seed: u64) -> Result<BenchRow, CliError> {
    let p = bench_polygon(n, seed)?;
    let reps = (200_000 / n.max(1)).clamp(1, 50);
    let mut best: Option<BenchRow> = None;
    for _ in 0..reps {
        let row = run_once(&p)?;
        if best.is_none_or(|b| row.total < b.total) {
            best = Some(row);
        }
    }
    let mut row = best.expect("at least one repetition");
    row.seed = seed;
    Ok(row)
}

/// Least-squares slope of log(total) against log(n).
pub fn loglog_slope(rows: &[BenchRow]) -> f64 {
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| ((r.n as f64).ln(), r.total.as_secs_f64().max(1e-9).ln()))
        .collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}
