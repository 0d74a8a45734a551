//! Exact mining of statistically significant substrings.
//!
//! Given a string over a finite alphabet and a memoryless multinomial null
//! model, this crate finds substrings whose symbol counts deviate most from
//! the model as measured by Pearson's chi-square statistic. Four problems
//! are covered:
//!
//! * the most significant substring ([`scan_mss`]),
//! * the top-t substrings ([`scan_top_t`]),
//! * every substring above a threshold ([`scan_threshold`]),
//! * the most significant substring above a minimum length
//!   ([`scan_min_length`]).
//!
//! Each scan is exact. It visits every start position but, for each start,
//! skips runs of end positions whose chain-cover bound proves they cannot
//! matter. On strings drawn from the null model this scores roughly
//! `n^1.5` substrings instead of `n^2 / 2`. [`brute_force_scan`] is the
//! exhaustive reference.
//!
//! ```
//! use chisq_mine::{build_prefix_counts, scan_mss, Model};
//!
//! let model = Model::new(vec!['a', 'b'], vec![0.5, 0.5])?;
//! let pc = build_prefix_counts(&model.encode("abaaaaaab")?);
//! let best = scan_mss(&pc, &model)?;
//! let span = best.spans[0];
//! assert_eq!((span.start, span.end), (3, 8));
//! assert_eq!(span.score, 6.0);
//! # Ok::<(), chisq_mine::Error>(())
//! ```
//!
//! The guide under `book/` walks through the statistic, the skip bound and
//! each scan; its code blocks are compiled and run as doctests of this
//! crate.

pub mod bench;
pub mod chisq;
mod error;
pub mod model;
pub mod scan;
pub mod stats;
pub mod synth;

pub use chisq::{best_append_char, best_cover_char, chain_cover_score, chi_square, safe_skip};
pub use error::{Error, Result};
pub use model::{
    build_prefix_counts, encode_string, CountVector, EncodedString, Model, PrefixCounts,
};
pub use scan::{
    brute_force_scan, scan, scan_min_length, scan_mss, scan_observed, scan_threshold,
    scan_threshold_streaming, scan_top_t, Instrumentation, ScanResult, ScoredSpan, SkipObserver,
    Variant,
};
pub use stats::{chi2_cdf, fit_loglog_slope, p_value, Dof, SlopeFit};
pub use synth::{generate, GeneratorSpec, Kind};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/statistic.md")]
    mod statistic {}
    #[doc = include_str!("../../../book/src/chain-cover.md")]
    mod chain_cover {}
    #[doc = include_str!("../../../book/src/scans.md")]
    mod scans {}
    #[doc = include_str!("../../../book/src/variants.md")]
    mod variants {}
    #[doc = include_str!("../../../book/src/generators.md")]
    mod generators {}
    #[doc = include_str!("../../../book/src/benchmarks.md")]
    mod benchmarks {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
