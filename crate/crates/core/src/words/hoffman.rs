//! Hoffman's exponential and logarithm, the mutually inverse maps that carry
//! the shuffle product onto an arbitrary quasi-shuffle product on the same
//! alphabet.

use num_bigint::BigInt;
use num_traits::One;

use super::quasi::{diamond_comb, Diamond};
use super::{Letter, LinComb, Word};
use crate::arith::{factorial, Rational};

/// All compositions `i_1 + ... + i_m = n` with positive parts, in
/// lexicographic order. `compositions(0)` is the single empty composition.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::with_capacity(1 << (n - 1));
    let mut cur = Vec::new();
    fn rec(rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for i in 1..=rem {
            cur.push(i);
            rec(rem - i, cur, out);
            cur.pop();
        }
    }
    rec(n, &mut cur, &mut out);
    out
}

/// `(i_1, ..., i_m){w}`: consecutive blocks of letters multiplied by the
/// diamond and the blocks concatenated.
fn grouped<L: Letter, D: Diamond<L>>(w: &[L], comp: &[usize], d: &D) -> LinComb<L> {
    let mut out = LinComb::one();
    let mut pos = 0;
    for &len in comp {
        let block = &w[pos..pos + len];
        pos += len;
        let mut acc = vec![(block[0].clone(), Rational::one())];
        for b in &block[1..] {
            acc = diamond_comb(&acc, b, d);
        }
        let letters = LinComb::from_terms(acc.into_iter().map(|(l, c)| (Word(vec![l]), c)));
        out = out.concat(&letters);
        if out.is_zero() {
            break;
        }
    }
    out
}

/// `exp(w) = sum over compositions of l(w) of (1 / prod i_j!) (i_1..i_m){w}`.
pub fn hoffman_exp<L: Letter, D: Diamond<L>>(w: &Word<L>, d: &D) -> LinComb<L> {
    let mut out = LinComb::zero();
    for comp in compositions(w.len()) {
        let denom: BigInt = comp.iter().map(|&i| factorial(i as u32)).product();
        out.add_scaled(
            &grouped(w.letters(), &comp, d),
            &Rational::new(BigInt::one(), denom),
        );
    }
    out
}

/// `log(w) = sum over compositions of l(w) of ((-1)^{l-m} / prod i_j) (i_1..i_m){w}`.
pub fn hoffman_log<L: Letter, D: Diamond<L>>(w: &Word<L>, d: &D) -> LinComb<L> {
    let n = w.len();
    let mut out = LinComb::zero();
    for comp in compositions(n) {
        let denom: BigInt = comp.iter().map(|&i| BigInt::from(i)).product();
        let sign = if (n - comp.len()).is_multiple_of(2) {
            1
        } else {
            -1
        };
        out.add_scaled(
            &grouped(w.letters(), &comp, d),
            &Rational::new(BigInt::from(sign), denom),
        );
    }
    out
}

pub fn hoffman_exp_lin<L: Letter, D: Diamond<L>>(c: &LinComb<L>, d: &D) -> LinComb<L> {
    c.map_linear(|w| hoffman_exp(w, d))
}

pub fn hoffman_log_lin<L: Letter, D: Diamond<L>>(c: &LinComb<L>, d: &D) -> LinComb<L> {
    c.map_linear(|w| hoffman_log(w, d))
}
