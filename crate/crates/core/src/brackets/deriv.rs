use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{factorial, int, Rational};
use crate::error::{Error, Result};
use crate::words::{BiLetter, BiLinComb, BiWord, LinComb, Word};

/// `d_q [s | r] = sum_j s_j (r_j + 1) [.., s_j + 1, .. | .., r_j + 1, ..]`.
pub fn dq_word(w: &BiWord) -> BiLinComb {
    let mut out = LinComb::zero();
    for (j, a) in w.letters().iter().enumerate() {
        let mut letters = w.letters().to_vec();
        letters[j] = BiLetter::new(a.s + 1, a.r + 1);
        out.add_term(Word(letters), int(a.s as i64 * (a.r as i64 + 1)));
    }
    out
}

/// Symbolic value of `lim_{q -> 1} (1 - q)^k [s | r]` for `k` the weight:
/// the factor `1 / prod r_j!` and the multiple zeta index `s - r`.
///
/// Requires `s_1 > r_1 + 1` and `s_j >= r_j + 1` for `j >= 2`; outside that
/// range the limit is not of this form.
pub fn z_limit_index(w: &BiWord) -> Result<(Rational, Vec<u32>)> {
    let ok = w
        .letters()
        .iter()
        .enumerate()
        .all(|(j, a)| if j == 0 { a.s > a.r + 1 } else { a.s > a.r });
    if w.is_empty() || !ok {
        return Err(Error::LimitNotCovered(format!(
            "{w} needs s_1 > r_1 + 1 and s_j >= r_j + 1"
        )));
    }
    let den: BigInt = w.letters().iter().map(|a| factorial(a.r)).product();
    let idx = w.letters().iter().map(|a| a.s - a.r).collect();
    Ok((Rational::new(BigInt::one(), den), idx))
}
