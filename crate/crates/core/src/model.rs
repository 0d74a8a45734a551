//! Null model, symbol encoding and prefix count arrays.
//!
//! All span indices in this module are 1-based and inclusive, so `(1, n)`
//! names the whole string.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Maximum deviation of the probability sum from 1.
pub const PROB_SUM_TOLERANCE: f64 = 1e-9;

/// Symbols used for synthetic alphabets, in index order.
const DEFAULT_SYMBOLS: &str = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

/// A memoryless multinomial null model over single-character symbols.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Model {
    symbols: Vec<char>,
    probs: Vec<f64>,
}

impl Model {
    pub fn new(symbols: Vec<char>, probs: Vec<f64>) -> Result<Self> {
        if symbols.len() != probs.len() {
            return Err(Error::LengthMismatch {
                symbols: symbols.len(),
                probs: probs.len(),
            });
        }
        if symbols.len() < 2 {
            return Err(Error::AlphabetTooSmall(symbols.len()));
        }
        for (i, &s) in symbols.iter().enumerate() {
            if symbols[..i].contains(&s) {
                return Err(Error::DuplicateSymbol(s));
            }
        }
        for (&symbol, &value) in symbols.iter().zip(&probs) {
            if !(value > 0.0 && value < 1.0) {
                return Err(Error::InvalidProbability { symbol, value });
            }
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > PROB_SUM_TOLERANCE {
            return Err(Error::ProbabilitySum(sum));
        }
        Ok(Self { symbols, probs })
    }

    /// Uniform model over the given symbols.
    pub fn uniform(symbols: Vec<char>) -> Result<Self> {
        let k = symbols.len();
        Self::new(symbols, vec![1.0 / k as f64; k])
    }

    /// Model over the first `probs.len()` symbols of the default alphabet
    /// (`a..z`, `A..Z`, `0..9`).
    pub fn with_default_symbols(probs: Vec<f64>) -> Result<Self> {
        let symbols = default_symbols(probs.len())?;
        Self::new(symbols, probs)
    }

    /// Estimates symbol frequencies from `text`. The alphabet is the sorted
    /// set of distinct characters in the text.
    pub fn empirical(text: &str) -> Result<Self> {
        let mut symbols: Vec<char> = text.chars().collect();
        symbols.sort_unstable();
        symbols.dedup();
        let total = text.chars().count() as f64;
        let probs = symbols
            .iter()
            .map(|&s| text.chars().filter(|&c| c == s).count() as f64 / total)
            .collect();
        Self::new(symbols, probs)
    }

    pub fn k(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn index_of(&self, symbol: char) -> Option<usize> {
        self.symbols.iter().position(|&s| s == symbol)
    }

    pub fn encode(&self, text: &str) -> Result<EncodedString> {
        encode_string(text, self)
    }
}

/// Model file format: symbols on the first line, probabilities on the
/// second, each separated by single spaces.
impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let symbols: Vec<String> = self.symbols.iter().map(char::to_string).collect();
        let probs: Vec<String> = self.probs.iter().map(|p| format!("{p:?}")).collect();
        writeln!(f, "{}", symbols.join(" "))?;
        writeln!(f, "{}", probs.join(" "))
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines();
        let symbol_line = lines
            .next()
            .ok_or_else(|| Error::Domain("model file is empty".into()))?;
        let prob_line = lines
            .next()
            .ok_or_else(|| Error::Domain("model file has no probability line".into()))?;
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(Error::Domain("model file has more than two lines".into()));
        }
        let symbols = symbol_line
            .split(' ')
            .map(|tok| {
                let mut chars = tok.chars();
                match (chars.next(), chars.next()) {
                    (Some(c), None) => Ok(c),
                    _ => Err(Error::Domain(format!(
                        "symbol {tok:?} is not a single character"
                    ))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let probs = prob_line
            .split(' ')
            .map(|tok| {
                tok.parse::<f64>()
                    .map_err(|_| Error::Domain(format!("cannot parse probability {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(symbols, probs)
    }
}

/// The first `k` symbols of the default synthetic alphabet.
pub fn default_symbols(k: usize) -> Result<Vec<char>> {
    if k < 2 {
        return Err(Error::AlphabetTooSmall(k));
    }
    if k > DEFAULT_SYMBOLS.len() {
        return Err(Error::Domain(format!(
            "default alphabet has {} symbols, {k} requested",
            DEFAULT_SYMBOLS.len()
        )));
    }
    Ok(DEFAULT_SYMBOLS.chars().take(k).collect())
}

/// A string as a sequence of symbol indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodedString {
    data: Vec<u32>,
    k: usize,
}

impl EncodedString {
    pub fn from_indices(data: Vec<u32>, k: usize) -> Result<Self> {
        if let Some(&bad) = data.iter().find(|&&c| c as usize >= k) {
            return Err(Error::SymbolIndex {
                index: bad as usize,
                k,
            });
        }
        Ok(Self { data, k })
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.data
    }

    /// Maps indices back to the model's symbols.
    pub fn decode(&self, model: &Model) -> String {
        self.data
            .iter()
            .map(|&c| model.symbols()[c as usize])
            .collect()
    }
}

pub fn encode_string(text: &str, model: &Model) -> Result<EncodedString> {
    let data = text
        .chars()
        .enumerate()
        .map(|(i, c)| {
            model
                .index_of(c)
                .map(|idx| idx as u32)
                .ok_or(Error::UnknownSymbol {
                    found: c,
                    position: i + 1,
                })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EncodedString { data, k: model.k() })
}

/// Per-symbol occurrence counts of a substring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CountVector {
    counts: Vec<u64>,
}

impl CountVector {
    pub fn new(counts: Vec<u64>) -> Self {
        Self { counts }
    }

    pub fn zeros(k: usize) -> Self {
        Self { counts: vec![0; k] }
    }

    /// Tallies an encoded string directly.
    pub fn tally(s: &EncodedString) -> Self {
        let mut counts = vec![0; s.k()];
        for &c in s.as_slice() {
            counts[c as usize] += 1;
        }
        Self { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn counts_mut(&mut self) -> &mut [u64] {
        &mut self.counts
    }

    pub fn k(&self) -> usize {
        self.counts.len()
    }

    /// Substring length, the sum of all counts.
    pub fn len(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Componentwise sum.
    pub fn add(&self, other: &CountVector) -> CountVector {
        CountVector {
            counts: self
                .counts
                .iter()
                .zip(&other.counts)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Copy with `ext` added to symbol `ch`.
    pub fn extended(&self, ch: usize, ext: u64) -> CountVector {
        let mut out = self.clone();
        out.counts[ch] += ext;
        out
    }
}

/// Cumulative per-symbol counts giving O(k) count vectors for any span.
#[derive(Debug, Clone)]
pub struct PrefixCounts {
    // Row-major by position: cum[j * k + c] = occurrences of c in S[1..=j].
    cum: Vec<u32>,
    k: usize,
    n: usize,
}

impl PrefixCounts {
    pub fn new(s: &EncodedString) -> Self {
        let k = s.k();
        let n = s.len();
        let mut cum = vec![0u32; (n + 1) * k];
        for (j, &c) in s.as_slice().iter().enumerate() {
            let (prev, next) = cum.split_at_mut((j + 1) * k);
            next[..k].copy_from_slice(&prev[j * k..]);
            next[c as usize] += 1;
        }
        Self { cum, k, n }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Occurrences of symbol `c` in the first `j` characters.
    pub fn cum(&self, c: usize, j: usize) -> u64 {
        self.cum[j * self.k + c] as u64
    }

    /// Count vector of `S[start..=end]` (1-based, inclusive).
    pub fn count_vector(&self, start: usize, end: usize) -> Result<CountVector> {
        self.check_span(start, end)?;
        let mut cv = CountVector::zeros(self.k);
        self.fill_counts(start, end, cv.counts_mut());
        Ok(cv)
    }

    pub(crate) fn check_span(&self, start: usize, end: usize) -> Result<()> {
        if start < 1 || start > end || end > self.n {
            return Err(Error::SpanOutOfRange {
                start,
                end,
                n: self.n,
            });
        }
        Ok(())
    }

    /// Writes the counts of `S[start..=end]` into `out` without bounds
    /// validation beyond slice indexing.
    #[inline]
    pub(crate) fn fill_counts(&self, start: usize, end: usize, out: &mut [u64]) {
        let k = self.k;
        let hi = &self.cum[end * k..end * k + k];
        let lo = &self.cum[(start - 1) * k..(start - 1) * k + k];
        for ((o, &h), &l) in out.iter_mut().zip(hi).zip(lo) {
            *o = (h - l) as u64;
        }
    }
}

pub fn build_prefix_counts(s: &EncodedString) -> PrefixCounts {
    PrefixCounts::new(s)
}
