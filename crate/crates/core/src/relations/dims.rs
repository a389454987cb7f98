//! Graded dimensions of bracket families under the weight filtration.
//!
//! The rank of the q-expansion coefficients of all generators of weight at
//! most `k` is a lower bound for the dimension of the weight-`k` filtered
//! piece; the graded dimension is the jump in that rank. Every computation
//! is repeated with sixteen more coefficients and flagged unstable if any
//! value moves.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::linalg::IncrementalEchelon;
use crate::arith::Rational;
use crate::brackets::Evaluator;
use crate::double_shuffle::{shuffle_bracket, stuffle_bracket};
use crate::error::{Error, Result};
use crate::words::{bi_words_of_weight, z_words_of_weight, BiLinComb, BiWord, LinComb};

/// Extra coefficients used for the stability rerun.
pub const STABILITY_MARGIN: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Shuffle brackets `[s]^sh` with `s_1 > 1`.
    Shuffle,
    /// Stuffle brackets `[s]^*` with `s_1 > 1`.
    Stuffle,
    /// Brackets `[s]` with `s_1 > 1`.
    Plain,
    /// All bi-brackets whose lower weight is at most the bound.
    Bi { max_lower: u32 },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Shuffle => f.write_str("sh"),
            Self::Stuffle => f.write_str("ast"),
            Self::Plain => f.write_str("plain"),
            Self::Bi { max_lower } => write!(f, "bi:{max_lower}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// `sh`, `ast`, `plain`, or `bi:D` for bi-brackets of lower weight `<= D`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sh" => Ok(Self::Shuffle),
            "ast" => Ok(Self::Stuffle),
            "plain" => Ok(Self::Plain),
            _ => match s.strip_prefix("bi:").map(str::parse) {
                Some(Ok(max_lower)) => Ok(Self::Bi { max_lower }),
                _ => Err(Error::InvalidArgument(format!(
                    "unknown family {s:?}, expected sh, ast, plain or bi:D"
                ))),
            },
        }
    }
}

/// One generator: a label, its weight and its bi-bracket expansion.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Generator {
    pub label: String,
    pub weight: u32,
    #[serde(skip)]
    pub combination: BiLinComb,
}

impl Generator {
    pub fn new(label: impl Into<String>, weight: u32, combination: BiLinComb) -> Self {
        Self {
            label: label.into(),
            weight,
            combination,
        }
    }

    /// A single bi-bracket, labelled by its own spelling.
    pub fn word(w: BiWord) -> Self {
        Self::new(w.to_string(), w.weight(), LinComb::word(w))
    }
}

fn fmt_indices(s: &[u32]) -> String {
    let parts: Vec<String> = s.iter().map(u32::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// Generators of weight `<= k_max`, ordered by weight, then length, then
/// indices. The constant `1` comes first.
pub fn family_generators(family: Family, k_max: u32) -> Vec<Generator> {
    let mut out = vec![Generator::new("1", 0, LinComb::one())];
    for k in 1..=k_max {
        match family {
            Family::Bi { max_lower } => {
                let mut ws: Vec<BiWord> = bi_words_of_weight(k)
                    .into_iter()
                    .filter(|w| w.lower_weight() <= max_lower)
                    .collect();
                ws.sort_by(|a, b| (a.len(), &a.0).cmp(&(b.len(), &b.0)));
                out.extend(ws.into_iter().map(Generator::word));
            }
            _ => {
                let mut ss: Vec<Vec<u32>> = z_words_of_weight(k)
                    .into_iter()
                    .filter(|w| w.is_admissible())
                    .map(|w| w.indices())
                    .collect();
                ss.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
                for s in ss {
                    let (label, comb) = match family {
                        Family::Shuffle => (format!("{}^sh", fmt_indices(&s)), shuffle_bracket(&s)),
                        Family::Stuffle => (format!("{}^*", fmt_indices(&s)), stuffle_bracket(&s)),
                        _ => (fmt_indices(&s), LinComb::word(BiWord::bracket(&s))),
                    };
                    out.push(Generator::new(label, k, comb));
                }
            }
        }
    }
    out
}

/// Coefficient rows `q^0 .. q^N` of the generators, evaluated in parallel.
pub fn series_rows(gens: &[Generator], precision: usize) -> Vec<Vec<Rational>> {
    let ev = Evaluator::new(precision);
    gens.par_iter()
        .map(|g| ev.eval_lincomb(&g.combination).coeffs().to_vec())
        .collect()
}

/// Default precision: enough coefficients for every generator to be
/// independent, and never below 60 or `4 k`.
pub fn default_precision(family: Family, k_max: u32) -> usize {
    let n = family_generators_count(family, k_max);
    n.max(60).max(4 * k_max as usize)
}

fn family_generators_count(family: Family, k_max: u32) -> usize {
    match family {
        Family::Bi { .. } => family_generators(family, k_max).len(),
        _ => 1 + (2..=k_max).map(|k| 1usize << (k - 2)).sum::<usize>(),
    }
}

pub(crate) fn check_precision(precision: usize, k: u32) -> Result<()> {
    let minimum = 4 * k as usize;
    if precision < minimum {
        return Err(Error::PrecisionTooSmall {
            precision,
            weight: k,
            minimum,
        });
    }
    Ok(())
}

/// Graded dimensions for weights `0..=k_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimReport {
    pub family: Family,
    pub max_weight: u32,
    pub precision: usize,
    /// Lower bounds for the graded dimensions, index = weight.
    pub dims: Vec<usize>,
    /// Ranks of the filtered pieces, index = weight.
    pub filtered_ranks: Vec<usize>,
    /// The graded dimensions recomputed with more coefficients.
    pub dims_check: Vec<usize>,
    pub stable: bool,
}

fn filtered_ranks(gens: &[Generator], k_max: u32, precision: usize) -> Vec<usize> {
    let rows = series_rows(gens, precision);
    let mut e = IncrementalEchelon::new();
    let mut ranks = vec![0; k_max as usize + 1];
    for (g, r) in gens.iter().zip(&rows) {
        e.insert(r);
        ranks[g.weight as usize] = e.rank();
    }
    // weights without generators keep the previous rank
    for k in 1..ranks.len() {
        ranks[k] = ranks[k].max(ranks[k - 1]);
    }
    ranks
}

fn graded(ranks: &[usize]) -> Vec<usize> {
    (0..ranks.len())
        .map(|k| {
            if k == 0 {
                ranks[0]
            } else {
                ranks[k] - ranks[k - 1]
            }
        })
        .collect()
}

/// Lower bounds for `dim gr_k` of the span of `family`, for `k <= k_max`.
/// Refuses precisions below `4 k_max`.
pub fn graded_dims(family: Family, k_max: u32, precision: usize) -> Result<DimReport> {
    check_precision(precision, k_max)?;
    let gens = family_generators(family, k_max);
    let ranks = filtered_ranks(&gens, k_max, precision);
    let check = graded(&filtered_ranks(&gens, k_max, precision + STABILITY_MARGIN));
    let dims = graded(&ranks);
    Ok(DimReport {
        family,
        max_weight: k_max,
        precision,
        stable: dims == check,
        dims,
        filtered_ranks: ranks,
        dims_check: check,
    })
}

/// The graded dimension in the single weight `k`.
pub fn graded_dim(k: u32, family: Family, precision: usize) -> Result<(usize, bool)> {
    let r = graded_dims(family, k, precision)?;
    Ok((r.dims[k as usize], r.stable))
}
