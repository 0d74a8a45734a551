//! Seeded synthetic string generators.
//!
//! All generators draw from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64`, so a [`GeneratorSpec`] fully determines its output.

use std::fmt;
use std::str::FromStr;

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{default_symbols, EncodedString, Model};

/// Identity of the generator PRNG, recorded in benchmark metadata.
pub const PRNG_NAME: &str = "ChaCha8Rng/seed_from_u64 (rand_chacha 0.9)";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    /// i.i.d. draws from the null model.
    Null,
    /// i.i.d. with `p_i ∝ 1/2^i`.
    Geometric,
    /// i.i.d. with `p_i ∝ 1/(i+1)`.
    Harmonic,
    /// First-order chain with `P(j | i) ∝ 1/2^((i-j) mod k)`.
    Markov,
    /// Binary chain repeating the previous symbol with probability `p`.
    BiasedBinary,
}

impl Kind {
    pub const ALL: [Kind; 5] = [
        Kind::Null,
        Kind::Geometric,
        Kind::Harmonic,
        Kind::Markov,
        Kind::BiasedBinary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Null => "null",
            Kind::Geometric => "geometric",
            Kind::Harmonic => "harmonic",
            Kind::Markov => "markov",
            Kind::BiasedBinary => "biased_binary",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown generator kind {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub kind: Kind,
    pub n: usize,
    pub k: usize,
    /// Repeat probability, `biased_binary` only.
    pub p: Option<f64>,
    /// Explicit model, `null` only. Defaults to uniform over `k` symbols.
    pub model: Option<Model>,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(kind: Kind, n: usize, k: usize, seed: u64) -> Self {
        Self {
            kind,
            n,
            k,
            p: None,
            model: None,
            seed,
        }
    }

    pub fn biased_binary(n: usize, p: f64, seed: u64) -> Self {
        Self {
            p: Some(p),
            ..Self::new(Kind::BiasedBinary, n, 2, seed)
        }
    }

    pub fn with_model(mut self, model: Model) -> Self {
        self.k = model.k();
        self.model = Some(model);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = n;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Domain("generator length must be at least 1".into()));
        }
        if self.k < 2 {
            return Err(Error::AlphabetTooSmall(self.k));
        }
        match (self.kind, self.p) {
            (Kind::BiasedBinary, None) => {
                return Err(Error::Domain(
                    "biased_binary needs a repeat probability".into(),
                ))
            }
            (Kind::BiasedBinary, Some(p)) if !(p > 0.0 && p < 1.0) => {
                return Err(Error::Domain(format!(
                    "repeat probability {p} not in (0, 1)"
                )))
            }
            (Kind::BiasedBinary, _) if self.k != 2 => {
                return Err(Error::Domain("biased_binary is binary, k must be 2".into()))
            }
            (Kind::BiasedBinary, _) => {}
            (_, Some(_)) => {
                return Err(Error::Domain(format!(
                    "repeat probability only applies to biased_binary, not {}",
                    self.kind
                )))
            }
            _ => {}
        }
        match (&self.model, self.kind) {
            (Some(m), Kind::Null) if m.k() != self.k => Err(Error::Domain(format!(
                "model has {} symbols but k = {}",
                m.k(),
                self.k
            ))),
            (Some(_), Kind::Null) | (None, _) => Ok(()),
            (Some(_), kind) => Err(Error::Domain(format!(
                "an explicit model only applies to null strings, not {kind}"
            ))),
        }
    }
}

/// A generated string and the null model it should be scanned against.
#[derive(Debug, Clone)]
pub struct Generated {
    pub string: EncodedString,
    pub model: Model,
}

fn normalized(weights: impl Iterator<Item = f64>) -> Vec<f64> {
    let w: Vec<f64> = weights.collect();
    let total: f64 = w.iter().sum();
    w.into_iter().map(|x| x / total).collect()
}

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::AlphabetTooSmall(k));
    }
    Ok(())
}

/// `p_i ∝ 1/2^i` for `i = 0..k`.
pub fn geometric_probs(k: usize) -> Result<Vec<f64>> {
    check_k(k)?;
    Ok(normalized((0..k).map(|i| 0.5f64.powi(i as i32))))
}

/// `p_i ∝ 1/(i+1)` for `i = 0..k`.
pub fn harmonic_probs(k: usize) -> Result<Vec<f64>> {
    check_k(k)?;
    Ok(normalized((0..k).map(|i| 1.0 / (i + 1) as f64)))
}

/// Row-stochastic matrix with row `i`, column `j` proportional to
/// `1/2^((i-j) mod k)`.
pub fn markov_transition(k: usize) -> Result<Vec<Vec<f64>>> {
    check_k(k)?;
    Ok((0..k)
        .map(|i| normalized((0..k).map(|j| 0.5f64.powi(((i + k - j) % k) as i32))))
        .collect())
}

fn weighted(probs: &[f64]) -> Result<WeightedIndex<f64>> {
    WeightedIndex::new(probs).map_err(|e| Error::Domain(format!("bad weights: {e}")))
}

fn draw_iid(rng: &mut ChaCha8Rng, probs: &[f64], n: usize) -> Result<Vec<u32>> {
    let dist = weighted(probs)?;
    Ok((0..n).map(|_| dist.sample(rng) as u32).collect())
}

/// Generates a string. Non-null kinds are returned with the uniform model
/// over their alphabet, since their deviation from it is what a scan is
/// meant to pick up.
pub fn generate(spec: &GeneratorSpec) -> Result<Generated> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let (n, k) = (spec.n, spec.k);
    let uniform = || Model::uniform(default_symbols(k)?);

    let (data, model) = match spec.kind {
        Kind::Null => {
            let model = match &spec.model {
                Some(m) => m.clone(),
                None => uniform()?,
            };
            (draw_iid(&mut rng, model.probs(), n)?, model)
        }
        Kind::Geometric => (draw_iid(&mut rng, &geometric_probs(k)?, n)?, uniform()?),
        Kind::Harmonic => (draw_iid(&mut rng, &harmonic_probs(k)?, n)?, uniform()?),
        Kind::Markov => {
            let rows = markov_transition(k)?
                .iter()
                .map(|row| weighted(row))
                .collect::<Result<Vec<_>>>()?;
            let mut data = Vec::with_capacity(n);
            let mut cur = rng.random_range(0..k);
            data.push(cur as u32);
            for _ in 1..n {
                cur = rows[cur].sample(&mut rng);
                data.push(cur as u32);
            }
            (data, uniform()?)
        }
        Kind::BiasedBinary => {
            let p = spec.p.expect("validated");
            let mut data = Vec::with_capacity(n);
            let mut cur = rng.random_range(0..2u32);
            data.push(cur);
            for _ in 1..n {
                if !rng.random_bool(p) {
                    cur = 1 - cur;
                }
                data.push(cur);
            }
            (data, uniform()?)
        }
    };
    Ok(Generated {
        string: EncodedString::from_indices(data, k)?,
        model,
    })
}

/// Seed for one benchmark trial, mixed from the base seed, the length and
/// the trial number with SplitMix64.
pub fn derive_seed(base: u64, n: usize, trial: usize) -> u64 {
    fn mix(mut z: u64) -> u64 {
        z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
    mix(mix(mix(base) ^ n as u64) ^ trial as u64)
}
