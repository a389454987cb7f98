//! The two products on bi-brackets and the brackets deformed to respect
//! them.
//!
//! The stuffle product comes from multiplying the defining sums directly;
//! the shuffle product is the stuffle product conjugated by the partition
//! involution. Stuffle brackets `[s]^*` carry the multiple zeta stuffle over
//! to bi-brackets through Hoffman's exponential, shuffle brackets `[s]^sh`
//! the letter shuffle through the tri-bracket generating series.

mod construction;
mod shuffle_bracket;

pub use construction::{construction_f, stuffle_family};
pub use shuffle_bracket::{shuffle_bracket, shuffle_bracket_lin, shuffle_bracket_numeric};

use crate::brackets::{partition_map, partition_map_lin};
use crate::words::{
    hoffman_exp_lin, hoffman_log, quasi_shuffle, quasi_shuffle_lin, BiLinComb, BiStuffle, BiWord,
    LinComb, Stuffle, ZLinComb, ZWord,
};

/// `u ⊠* v`: realizes `[u] [v]` by multiplying the nested sums.
pub fn stuffle_mul(u: &BiWord, v: &BiWord) -> BiLinComb {
    quasi_shuffle(u, v, &BiStuffle)
}

pub fn stuffle_mul_lin(u: &BiLinComb, v: &BiLinComb) -> BiLinComb {
    quasi_shuffle_lin(u, v, &BiStuffle)
}

/// `P(P(u) ⊠* P(v))`: the second expression for `[u] [v]`.
pub fn shuffle_mul(u: &BiWord, v: &BiWord) -> BiLinComb {
    partition_map_lin(&stuffle_mul_lin(&partition_map(u), &partition_map(v)))
}

pub fn shuffle_mul_lin(u: &BiLinComb, v: &BiLinComb) -> BiLinComb {
    u.bilinear(v, shuffle_mul)
}

/// `[s_1..s_l]^*`: image of `z_{s_1}..z_{s_l}` under `exp_⊠ ∘ log_*`, with
/// `z_s` read as `z_{s,0}`.
pub fn stuffle_bracket(s: &[u32]) -> BiLinComb {
    stuffle_bracket_lin(&LinComb::word(ZWord::from_indices(s)))
}

pub fn stuffle_bracket_lin(c: &ZLinComb) -> BiLinComb {
    let logged = c.map_linear(|w| hoffman_log(w, &Stuffle));
    hoffman_exp_lin(&logged.map_linear(|w| LinComb::word(w.to_bi())), &BiStuffle)
}
