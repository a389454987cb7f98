//! Bi-brackets as q-series.
//!
//! For `s_j >= 1`, `r_j >= 0` the bi-bracket is
//!
//! ```text
//! [s_1..s_l | r_1..r_l] = sum_{u_1 > .. > u_l > 0, v_j > 0}
//!     prod_j u_j^{r_j}/r_j! * v_j^{s_j-1}/(s_j-1)! * q^{u_1 v_1 + .. + u_l v_l}
//! ```
//!
//! Tri-brackets add a third index `e_j >= 1` that weights each `v_j` by
//! `C(v_j - 1, e_j - 1)`; `e = 1` gives back the bi-bracket.
//!
//! Besides evaluation this module holds the symbolic partition involution
//! `P` (conjugation of partitions, read off the generating series), its
//! generalization to tri-brackets, the derivative `d_q = q d/dq` at word
//! level, and the symbolic `q -> 1` limit index.

mod deriv;
mod eval;
mod partition;

pub use deriv::{dq_word, z_limit_index};
pub use eval::{
    eval_bibracket, eval_bibracket_oracle, eval_lincomb, eval_tribracket, eval_tribracket_oracle,
    Evaluator,
};
pub(crate) use partition::power_product_coefficients;
pub use partition::{d_operator, d_y_transform, partition_map, partition_map_lin, partition_tri};

use crate::error::{Error, Result};
use crate::words::{BiLetter, BiWord, Word};

/// Index `(s; r; e)` of a tri-bracket. All three sequences have length `l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriIndex {
    s: Vec<u32>,
    r: Vec<u32>,
    e: Vec<u32>,
}

impl TriIndex {
    pub fn new(s: Vec<u32>, r: Vec<u32>, e: Vec<u32>) -> Result<Self> {
        if s.len() != r.len() || s.len() != e.len() {
            return Err(Error::InvalidArgument(format!(
                "tri-index lengths differ: {}, {}, {}",
                s.len(),
                r.len(),
                e.len()
            )));
        }
        if s.contains(&0) || e.contains(&0) {
            return Err(Error::InvalidArgument(
                "tri-index needs s_j >= 1 and e_j >= 1".into(),
            ));
        }
        Ok(Self { s, r, e })
    }

    /// The bi-bracket index `w` with `e = (1, .., 1)`.
    pub fn from_bi(w: &BiWord) -> Self {
        Self {
            s: w.upper(),
            r: w.lower(),
            e: vec![1; w.len()],
        }
    }

    /// Same `(s, r)` as `w` with the given `e`.
    pub fn with_e(w: &BiWord, e: &[u32]) -> Result<Self> {
        Self::new(w.upper(), w.lower(), e.to_vec())
    }

    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }

    pub fn s(&self) -> &[u32] {
        &self.s
    }

    pub fn r(&self) -> &[u32] {
        &self.r
    }

    pub fn e(&self) -> &[u32] {
        &self.e
    }

    /// The `(s, r)` part as a bi-word, dropping `e`.
    pub fn bi_part(&self) -> BiWord {
        Word(
            self.s
                .iter()
                .zip(&self.r)
                .map(|(&s, &r)| BiLetter::new(s, r))
                .collect(),
        )
    }
}
