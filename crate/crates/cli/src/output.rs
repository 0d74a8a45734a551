//! CSV formatting. Floats use Rust's shortest round-trip representation.

use std::cmp::Ordering;

use chisq_mine::bench::{BenchReport, BenchRow};
use chisq_mine::{Instrumentation, ScoredSpan, Variant};

use crate::error::CliError;

pub const SCAN_HEADER: &str = "start,end,length,chi2,p_value";
pub const BENCH_HEADER: &str = "n,k,trial,evaluations,chi2_max,elapsed_seconds,seed";

/// Descending chi2, then ascending start, then ascending length.
pub fn output_order(a: &ScoredSpan, b: &ScoredSpan) -> Ordering {
    b.score
        .total_cmp(&a.score)
        .then(a.start.cmp(&b.start))
        .then(a.len().cmp(&b.len()))
}

pub fn span_row(span: &ScoredSpan) -> String {
    let p = span.p_value.map(|p| format!("{p:?}")).unwrap_or_default();
    format!(
        "{},{},{},{:?},{}",
        span.start,
        span.end,
        span.len(),
        span.score,
        p
    )
}

pub fn parse_span_row(line: &str) -> Result<ScoredSpan, CliError> {
    let bad = || CliError::Data(format!("malformed row {line:?}"));
    let fields: Vec<&str> = line.split(',').collect();
    if fields.len() != 5 {
        return Err(bad());
    }
    let start: usize = fields[0].parse().map_err(|_| bad())?;
    let end: usize = fields[1].parse().map_err(|_| bad())?;
    let length: usize = fields[2].parse().map_err(|_| bad())?;
    let score: f64 = fields[3].parse().map_err(|_| bad())?;
    let p_value = match fields[4] {
        "" => None,
        p => Some(p.parse().map_err(|_| bad())?),
    };
    if end < start || length != end - start + 1 {
        return Err(bad());
    }
    Ok(ScoredSpan {
        start,
        end,
        score,
        p_value,
    })
}

pub fn stats_line(ins: &Instrumentation, variant: &Variant, oracle: bool) -> String {
    format!(
        "# mode={} oracle={} evaluations={} skipped={} visited={} elapsed_seconds={:?}",
        variant.name(),
        oracle,
        ins.evaluations,
        ins.skipped,
        ins.visited(),
        ins.elapsed
    )
}

pub fn bench_row(r: &BenchRow) -> String {
    format!(
        "{},{},{},{},{:?},{:?},{}",
        r.n, r.k, r.trial, r.evaluations, r.chi2_max, r.elapsed_seconds, r.seed
    )
}

pub fn bench_footer(report: &BenchReport, prng: &str) -> Vec<String> {
    let mut lines: Vec<String> = report
        .mean_evaluations
        .iter()
        .map(|(n, m)| format!("# mean_evaluations n={n} value={m:?}"))
        .collect();
    match report.fit {
        Some(f) => lines.push(format!(
            "# loglog_slope={:?} intercept={:?} points={}",
            f.slope, f.intercept, f.points
        )),
        None => lines.push("# loglog_slope=NA (needs at least 2 distinct sizes)".into()),
    }
    lines.push(format!("# prng={prng}"));
    lines
}
