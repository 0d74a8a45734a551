//! Chi-square scoring, chain-cover bounds and the safe skip length.
//!
//! For a substring of length `l` with counts `Y_i` under probabilities
//! `p_i` the statistic is `sum_i Y_i^2 / (l p_i) - l`. The chain cover of
//! a substring over `x` copies of symbol `j` is the substring followed by
//! `x` copies of `j`; its score bounds every extension of the substring by
//! at most `x` characters once `j` maximizes `(2 Y_j + x) / p_j`.

use crate::error::{Error, Result};
use crate::model::{CountVector, Model};

/// Roots within this many positions of the smallest root are verified by
/// direct evaluation before a skip is accepted.
const BINDING_WINDOW: f64 = 2.0;

/// Score of `counts` with `ext` extra occurrences of symbol `ch`.
///
/// Every score in the crate goes through this function so a count vector
/// always produces the same bits, whether it was read from the string or
/// built as a chain cover.
#[inline]
pub(crate) fn raw_score(counts: &[u64], probs: &[f64], ch: usize, ext: u64) -> f64 {
    let mut len = 0u64;
    let mut acc = 0.0;
    for (i, (&y, &p)) in counts.iter().zip(probs).enumerate() {
        let y = if i == ch { y + ext } else { y };
        len += y;
        let y = y as f64;
        acc += y * y / p;
    }
    let len = len as f64;
    (acc / len - len).max(0.0)
}

fn check_counts(cv: &CountVector, model: &Model) -> Result<()> {
    if cv.k() != model.k() {
        return Err(Error::CountsArity {
            got: cv.k(),
            k: model.k(),
        });
    }
    if cv.is_empty() {
        return Err(Error::EmptyCounts);
    }
    Ok(())
}

fn check_symbol(ch: usize, model: &Model) -> Result<()> {
    if ch >= model.k() {
        return Err(Error::SymbolIndex {
            index: ch,
            k: model.k(),
        });
    }
    Ok(())
}

/// Pearson chi-square statistic of a count vector.
pub fn chi_square(cv: &CountVector, model: &Model) -> Result<f64> {
    check_counts(cv, model)?;
    Ok(raw_score(cv.counts(), model.probs(), 0, 0))
}

/// Score of the chain cover `cv` followed by `ext` copies of symbol `ch`.
pub fn chain_cover_score(cv: &CountVector, ch: usize, ext: u64, model: &Model) -> Result<f64> {
    check_counts(cv, model)?;
    check_symbol(ch, model)?;
    Ok(raw_score(cv.counts(), model.probs(), ch, ext))
}

fn argmax_by(cv: &CountVector, model: &Model, key: impl Fn(f64, f64) -> f64) -> usize {
    let mut best = 0;
    let mut best_key = f64::NEG_INFINITY;
    for (j, (&y, &p)) in cv.counts().iter().zip(model.probs()).enumerate() {
        let v = key(y as f64, p);
        if v > best_key {
            best = j;
            best_key = v;
        }
    }
    best
}

/// Symbol whose single append strictly increases the score: the argmax of
/// `Y_j / p_j`, lowest index on ties.
pub fn best_append_char(cv: &CountVector, model: &Model) -> Result<usize> {
    check_counts(cv, model)?;
    Ok(argmax_by(cv, model, |y, p| y / p))
}

/// Symbol whose chain cover of length `ext` dominates every extension of
/// that length: the argmax of `(2 Y_j + ext) / p_j`, lowest index on ties.
pub fn best_cover_char(cv: &CountVector, ext: u64, model: &Model) -> Result<usize> {
    check_counts(cv, model)?;
    if ext == 0 {
        return Err(Error::Domain("cover extension must be at least 1".into()));
    }
    let ext = ext as f64;
    Ok(argmax_by(cv, model, |y, p| (2.0 * y + ext) / p))
}

/// Positive root of
/// `(1 - p) x^2 + (2 Y - 2 l p - p B) x + (score - B) l p = 0`
/// for one symbol, i.e. the largest real extension for which that symbol's
/// chain cover stays within budget `B`.
#[inline]
fn cover_root(y: f64, p: f64, len: f64, score: f64, budget: f64) -> f64 {
    let a = 1.0 - p;
    let b = 2.0 * y - 2.0 * len * p - p * budget;
    let c = (score - budget) * len * p;
    let disc = (b * b - 4.0 * a * c).max(0.0);
    let sq = disc.sqrt();
    let root = if b <= 0.0 {
        (-b + sq) / (2.0 * a)
    } else if sq + b > 0.0 {
        // Avoids cancellation in -b + sqrt(disc) when b dominates.
        (-2.0 * c) / (b + sq)
    } else {
        0.0
    };
    root.max(0.0)
}

/// Real-valued skip root for a single symbol. Exposed for diagnostics; the
/// scans use [`safe_skip`].
pub fn skip_root(
    cv: &CountVector,
    ch: usize,
    score: f64,
    budget: f64,
    model: &Model,
) -> Result<f64> {
    check_counts(cv, model)?;
    check_symbol(ch, model)?;
    Ok(cover_root(
        cv.counts()[ch] as f64,
        model.probs()[ch],
        cv.len() as f64,
        score,
        budget,
    ))
}

/// Core of [`safe_skip`]; `score` must be the score of `counts` and must
/// not exceed `budget`.
#[inline]
pub(crate) fn skip_len(counts: &[u64], len: u64, score: f64, budget: f64, probs: &[f64]) -> u64 {
    let lenf = len as f64;
    let mut root_min = f64::INFINITY;
    for (&y, &p) in counts.iter().zip(probs) {
        root_min = root_min.min(cover_root(y as f64, p, lenf, score, budget));
    }
    if !root_min.is_finite() {
        return 0;
    }

    // Covers of every symbol whose root is near the minimum are checked
    // directly; the rest have at least BINDING_WINDOW positions of slack.
    let limit = root_min + BINDING_WINDOW;
    let fits = |m: u64| -> bool {
        counts.iter().zip(probs).enumerate().all(|(j, (&y, &p))| {
            cover_root(y as f64, p, lenf, score, budget) >= limit
                || raw_score(counts, probs, j, m) <= budget
        })
    };

    let mut x = root_min.floor() as u64;
    while x > 0 && !fits(x) {
        x -= 1;
    }
    for _ in 0..2 {
        if fits(x + 1) {
            x += 1;
        } else {
            break;
        }
    }
    x
}

/// Largest `x` such that every extension of the substring by `1..=x`
/// characters scores at most `budget`.
///
/// The per-symbol constraint is a convex quadratic in `x`, so it holds on
/// `[0, root_j]`; the skip is the floor of the smallest root, confirmed by
/// evaluating the near-binding chain covers at the chosen length.
pub fn safe_skip(cv: &CountVector, score: f64, budget: f64, model: &Model) -> Result<u64> {
    check_counts(cv, model)?;
    if !(budget.is_finite() && budget >= 0.0) {
        return Err(Error::Domain(format!("invalid skip budget {budget}")));
    }
    if score.is_nan() || score < 0.0 || score > budget {
        return Err(Error::ScoreAboveBudget { score, budget });
    }
    Ok(skip_len(
        cv.counts(),
        cv.len(),
        score,
        budget,
        model.probs(),
    ))
}
