//! Dimensions of spans of double shuffle differences `ds(u, v) = u ⧢ v - u * v`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::linalg::IncrementalEchelon;
use crate::arith::Rational;
use crate::error::Error;
use crate::words::{ds_z, z_words_of_weight, XyConvention, ZWord};
use num_traits::Zero;

/// Which pairs `(u, v)` enter the span.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DsVariant {
    /// `u` admissible, `v` admissible or the single letter `y`.
    Eds,
    /// `u`, `v` admissible.
    Fds,
    /// `u`, `v` without any `z_1`.
    Rds,
}

impl fmt::Display for DsVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Eds => "eds",
            Self::Fds => "fds",
            Self::Rds => "rds",
        })
    }
}

impl FromStr for DsVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "eds" => Ok(Self::Eds),
            "fds" => Ok(Self::Fds),
            "rds" => Ok(Self::Rds),
            _ => Err(Error::InvalidArgument(format!(
                "unknown variant {s:?}, expected eds, fds or rds"
            ))),
        }
    }
}

// Admissibility is about the end of the word that starts with x, which
// flips with the convention.
fn admissible(w: &ZWord, conv: XyConvention) -> bool {
    match conv {
        XyConvention::YEnded => w.is_admissible(),
        XyConvention::YStarting => w.letters().last().is_none_or(|z| z.0 >= 2),
    }
}

fn no_ones(w: &ZWord) -> bool {
    w.letters().iter().all(|z| z.0 >= 2)
}

fn is_y(w: &ZWord) -> bool {
    w.indices() == [1]
}

fn allowed(u: &ZWord, v: &ZWord, variant: DsVariant, conv: XyConvention) -> bool {
    match variant {
        DsVariant::Eds => admissible(u, conv) && (admissible(v, conv) || is_y(v)),
        DsVariant::Fds => admissible(u, conv) && admissible(v, conv),
        DsVariant::Rds => no_ones(u) && no_ones(v),
    }
}

/// The nonempty pairs of total weight `k` entering the span; `ds` is
/// symmetric, so each unordered pair appears once.
pub fn ds_pairs(k: u32, variant: DsVariant, conv: XyConvention) -> Vec<(ZWord, ZWord)> {
    let mut out = Vec::new();
    for a in 1..k {
        for u in z_words_of_weight(a) {
            for v in z_words_of_weight(k - a) {
                if !allowed(&u, &v, variant, conv) {
                    continue;
                }
                if allowed(&v, &u, variant, conv) && (v.weight(), &v.0) < (u.weight(), &u.0) {
                    continue;
                }
                out.push((u.clone(), v.clone()));
            }
        }
    }
    out
}

/// `dim span { ds(u, v) }` over the pairs of [`ds_pairs`], as the rank of
/// their coefficient rows in the z-word basis of weight `k`.
pub fn ds_counts(k: u32, variant: DsVariant, conv: XyConvention) -> usize {
    let cols: HashMap<ZWord, usize> = z_words_of_weight(k)
        .into_iter()
        .enumerate()
        .map(|(i, w)| (w, i))
        .collect();
    let rows: Vec<Vec<Rational>> = ds_pairs(k, variant, conv)
        .par_iter()
        .map(|(u, v)| {
            let mut row = vec![Rational::zero(); cols.len()];
            for (w, c) in ds_z(u, v, conv).iter() {
                row[cols[w]] = c.clone();
            }
            row
        })
        .collect();
    let mut e = IncrementalEchelon::new();
    for r in &rows {
        e.insert(r);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_weights() {
        let conv = XyConvention::YEnded;
        assert_eq!(ds_counts(3, DsVariant::Eds, conv), 1);
        assert_eq!(ds_counts(4, DsVariant::Fds, conv), 1);
        assert_eq!(ds_counts(5, DsVariant::Rds, conv), 1);
        for k in 1..=2 {
            for v in [DsVariant::Eds, DsVariant::Fds, DsVariant::Rds] {
                assert_eq!(ds_counts(k, v, conv), 0);
            }
        }
    }

    #[test]
    fn variant_names_round_trip() {
        for v in [DsVariant::Eds, DsVariant::Fds, DsVariant::Rds] {
            assert_eq!(v.to_string().parse::<DsVariant>().unwrap(), v);
        }
        assert!("xds".parse::<DsVariant>().is_err());
    }
}
