//! Significant-substring scans.
//!
//! Every variant walks start positions from `n` down to `1` and, for each
//! start, lengths in increasing order. After scoring a substring the scan
//! jumps over every longer substring whose chain cover cannot beat the
//! current skip budget:
//!
//! | variant      | budget                             |
//! |--------------|------------------------------------|
//! | MSS          | best score so far                  |
//! | top-t        | smallest score in the size-t heap  |
//! | threshold    | the fixed threshold                |
//! | min-length   | best score so far (lengths > γ0)   |
//!
//! The brute-force oracle uses the same loop with skipping disabled, so the
//! two paths share scan order and tie-breaking.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;
use std::ops::RangeInclusive;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::chisq::{raw_score, skip_len};
use crate::error::{Error, Result};
use crate::model::{Model, PrefixCounts};
use crate::stats::p_value;

/// Strings up to this length have every skipped substring re-scored under
/// `debug_assertions`.
const AUDIT_MAX_N: usize = 256;

/// A substring `S[start..=end]` (1-based, inclusive) with its score.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScoredSpan {
    pub start: usize,
    pub end: usize,
    pub score: f64,
    pub p_value: Option<f64>,
}

impl ScoredSpan {
    pub fn new(start: usize, end: usize, score: f64) -> Self {
        Self {
            start,
            end,
            score,
            p_value: None,
        }
    }

    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Order in which the scans visit spans: start descending, then length
    /// ascending.
    pub fn scan_order(&self, other: &Self) -> Ordering {
        other.start.cmp(&self.start).then(self.end.cmp(&other.end))
    }

    /// Descending score, ties in scan order.
    pub fn rank_order(&self, other: &Self) -> Ordering {
        other
            .score
            .total_cmp(&self.score)
            .then_with(|| self.scan_order(other))
    }
}

/// Work done by a scan.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Instrumentation {
    /// Substrings actually scored.
    pub evaluations: u64,
    /// Substrings jumped over without scoring.
    pub skipped: u64,
    /// Wall time in seconds.
    pub elapsed: f64,
}

impl Instrumentation {
    /// Every candidate position is either evaluated or skipped.
    pub fn visited(&self) -> u64 {
        self.evaluations + self.skipped
    }
}

/// Which problem a scan solves.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum Variant {
    /// The single highest-scoring substring.
    Mss,
    /// The `t` highest strictly-positive scores.
    TopT { t: usize },
    /// Every substring scoring strictly above `alpha`.
    Threshold { alpha: f64 },
    /// The highest-scoring substring longer than `gamma`.
    MinLength { gamma: usize },
}

impl Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Variant::Mss => "mss",
            Variant::TopT { .. } => "topt",
            Variant::Threshold { .. } => "threshold",
            Variant::MinLength { .. } => "minlen",
        }
    }

    /// Checks the parameters against a string of length `n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::EmptyString);
        }
        match *self {
            Variant::Mss => Ok(()),
            Variant::TopT { t: 0 } => Err(Error::ZeroT),
            Variant::TopT { .. } => Ok(()),
            Variant::Threshold { alpha } if !(alpha.is_finite() && alpha >= 0.0) => {
                Err(Error::InvalidThreshold(alpha))
            }
            Variant::Threshold { .. } => Ok(()),
            Variant::MinLength { gamma } if gamma >= n => {
                Err(Error::MinLengthTooLarge { gamma, n })
            }
            Variant::MinLength { .. } => Ok(()),
        }
    }

    fn min_len(&self) -> usize {
        match *self {
            Variant::MinLength { gamma } => gamma + 1,
            _ => 1,
        }
    }
}

/// Result of a scan.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanResult {
    /// Sorted by [`ScoredSpan::rank_order`].
    pub spans: Vec<ScoredSpan>,
    pub instrumentation: Instrumentation,
    pub variant: Variant,
    /// Whether the brute-force oracle produced this result.
    pub oracle: bool,
    /// Seed of the generator that produced the input, if synthetic.
    pub source_seed: Option<u64>,
}

impl ScanResult {
    /// Highest score among the spans, if any.
    pub fn best_score(&self) -> Option<f64> {
        self.spans.first().map(|s| s.score)
    }

    /// Attaches p-values for a `k`-symbol alphabet to every span.
    pub fn with_p_values(mut self, k: usize) -> Result<Self> {
        for span in &mut self.spans {
            span.p_value = Some(p_value(span.score, k)?);
        }
        Ok(self)
    }

    pub fn with_source_seed(mut self, seed: u64) -> Self {
        self.source_seed = Some(seed);
        self
    }
}

/// Receives every range of end positions a scan skips without scoring.
pub trait SkipObserver {
    fn on_skip(&mut self, start: usize, ends: RangeInclusive<usize>, budget: f64);
}

impl SkipObserver for () {
    fn on_skip(&mut self, _: usize, _: RangeInclusive<usize>, _: f64) {}
}

impl<F: FnMut(usize, RangeInclusive<usize>, f64)> SkipObserver for F {
    fn on_skip(&mut self, start: usize, ends: RangeInclusive<usize>, budget: f64) {
        self(start, ends, budget)
    }
}

trait Collector {
    /// Score no skipped substring may exceed.
    fn budget(&self) -> f64;
    fn offer(&mut self, start: usize, end: usize, score: f64);
}

#[derive(Default)]
struct Best {
    best: Option<ScoredSpan>,
}

impl Collector for Best {
    fn budget(&self) -> f64 {
        self.best.map_or(0.0, |b| b.score)
    }

    fn offer(&mut self, start: usize, end: usize, score: f64) {
        if self.best.is_none_or(|b| score > b.score) {
            self.best = Some(ScoredSpan::new(start, end, score));
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct HeapEntry {
    score: f64,
    seq: u64,
    span: Option<(usize, usize)>,
}

impl PartialEq for HeapEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for HeapEntry {}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HeapEntry {
    // Among equal scores the latest insertion is evicted first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.score
            .total_cmp(&other.score)
            .then(other.seq.cmp(&self.seq))
    }
}

struct TopT {
    heap: BinaryHeap<Reverse<HeapEntry>>,
    seq: u64,
}

impl TopT {
    fn new(t: usize, n: usize) -> Self {
        let substrings = n.saturating_mul(n + 1) / 2;
        let slots = t.min(substrings).max(1);
        let heap = (0..slots as u64)
            .map(|seq| {
                Reverse(HeapEntry {
                    score: 0.0,
                    seq,
                    span: None,
                })
            })
            .collect();
        Self {
            heap,
            seq: slots as u64,
        }
    }

    fn into_spans(self) -> Vec<ScoredSpan> {
        self.heap
            .into_iter()
            .filter_map(|Reverse(e)| e.span.map(|(s, t)| ScoredSpan::new(s, t, e.score)))
            .collect()
    }
}

impl Collector for TopT {
    fn budget(&self) -> f64 {
        self.heap.peek().map_or(0.0, |Reverse(e)| e.score)
    }

    fn offer(&mut self, start: usize, end: usize, score: f64) {
        if score > self.budget() {
            self.heap.pop();
            self.heap.push(Reverse(HeapEntry {
                score,
                seq: self.seq,
                span: Some((start, end)),
            }));
            self.seq += 1;
        }
    }
}

struct Threshold<F> {
    alpha: f64,
    sink: F,
}

impl<F: FnMut(ScoredSpan)> Collector for Threshold<F> {
    fn budget(&self) -> f64 {
        self.alpha
    }

    fn offer(&mut self, start: usize, end: usize, score: f64) {
        if score > self.alpha {
            (self.sink)(ScoredSpan::new(start, end, score));
        }
    }
}

fn check_inputs(pc: &PrefixCounts, model: &Model, variant: &Variant) -> Result<()> {
    if pc.k() != model.k() {
        return Err(Error::CountsArity {
            got: pc.k(),
            k: model.k(),
        });
    }
    variant.validate(pc.len())
}

fn drive<C: Collector, O: SkipObserver + ?Sized>(
    pc: &PrefixCounts,
    model: &Model,
    min_len: usize,
    oracle: bool,
    collector: &mut C,
    observer: &mut O,
) -> Instrumentation {
    let started = Instant::now();
    let n = pc.len();
    let probs = model.probs();
    let audit = cfg!(debug_assertions) && n <= AUDIT_MAX_N;
    let mut counts = vec![0u64; pc.k()];
    let mut evaluations = 0u64;
    let mut skipped = 0u64;

    for start in (1..=n + 1 - min_len).rev() {
        let mut end = start + min_len - 1;
        while end <= n {
            pc.fill_counts(start, end, &mut counts);
            let score = raw_score(&counts, probs, 0, 0);
            evaluations += 1;
            collector.offer(start, end, score);
            if oracle {
                end += 1;
                continue;
            }

            let budget = collector.budget();
            let skip = if score > budget {
                0
            } else {
                let len = (end - start + 1) as u64;
                skip_len(&counts, len, score, budget, probs).min((n - end) as u64) as usize
            };
            if skip > 0 {
                skipped += skip as u64;
                if audit {
                    let mut probe = vec![0u64; pc.k()];
                    for e in end + 1..=end + skip {
                        pc.fill_counts(start, e, &mut probe);
                        let s = raw_score(&probe, probs, 0, 0);
                        debug_assert!(s <= budget, "skipped [{start}, {e}] scores {s} > {budget}");
                    }
                }
                observer.on_skip(start, end + 1..=end + skip, budget);
            }
            end += skip + 1;
        }
    }

    Instrumentation {
        evaluations,
        skipped,
        elapsed: started.elapsed().as_secs_f64(),
    }
}

/// Runs a scan with an observer that sees every skipped range.
pub fn scan_observed<O: SkipObserver + ?Sized>(
    pc: &PrefixCounts,
    model: &Model,
    variant: Variant,
    oracle: bool,
    observer: &mut O,
) -> Result<ScanResult> {
    check_inputs(pc, model, &variant)?;
    let min_len = variant.min_len();
    let (mut spans, instrumentation) = match variant {
        Variant::Mss | Variant::MinLength { .. } => {
            let mut best = Best::default();
            let ins = drive(pc, model, min_len, oracle, &mut best, observer);
            (best.best.into_iter().collect(), ins)
        }
        Variant::TopT { t } => {
            let mut top = TopT::new(t, pc.len());
            let ins = drive(pc, model, min_len, oracle, &mut top, observer);
            (top.into_spans(), ins)
        }
        Variant::Threshold { alpha } => {
            let mut found = Vec::new();
            let mut coll = Threshold {
                alpha,
                sink: |s| found.push(s),
            };
            let ins = drive(pc, model, min_len, oracle, &mut coll, observer);
            (found, ins)
        }
    };
    spans.sort_by(ScoredSpan::rank_order);
    Ok(ScanResult {
        spans,
        instrumentation,
        variant,
        oracle,
        source_seed: None,
    })
}

/// Runs `variant` with skipping (`oracle = false`) or exhaustively.
pub fn scan(
    pc: &PrefixCounts,
    model: &Model,
    variant: Variant,
    oracle: bool,
) -> Result<ScanResult> {
    scan_observed(pc, model, variant, oracle, &mut ())
}

/// Most significant substring.
pub fn scan_mss(pc: &PrefixCounts, model: &Model) -> Result<ScanResult> {
    scan(pc, model, Variant::Mss, false)
}

/// The `t` highest strictly-positive scores with their spans.
pub fn scan_top_t(pc: &PrefixCounts, model: &Model, t: usize) -> Result<ScanResult> {
    scan(pc, model, Variant::TopT { t }, false)
}

/// Every substring scoring strictly above `alpha`.
pub fn scan_threshold(pc: &PrefixCounts, model: &Model, alpha: f64) -> Result<ScanResult> {
    scan(pc, model, Variant::Threshold { alpha }, false)
}

/// Threshold scan that hands each qualifying span to `sink` in scan order
/// instead of collecting them.
pub fn scan_threshold_streaming<F: FnMut(ScoredSpan)>(
    pc: &PrefixCounts,
    model: &Model,
    alpha: f64,
    oracle: bool,
    sink: F,
) -> Result<Instrumentation> {
    let variant = Variant::Threshold { alpha };
    check_inputs(pc, model, &variant)?;
    let mut coll = Threshold { alpha, sink };
    Ok(drive(pc, model, 1, oracle, &mut coll, &mut ()))
}

/// Most significant substring among those longer than `gamma`.
pub fn scan_min_length(pc: &PrefixCounts, model: &Model, gamma: usize) -> Result<ScanResult> {
    scan(pc, model, Variant::MinLength { gamma }, false)
}

/// Exhaustive reference scan over every eligible substring.
pub fn brute_force_scan(pc: &PrefixCounts, model: &Model, variant: Variant) -> Result<ScanResult> {
    scan(pc, model, variant, true)
}
