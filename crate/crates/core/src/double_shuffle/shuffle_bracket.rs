//! Shuffle brackets.
//!
//! `[s_1..s_l]^sh` is the coefficient of `prod X_j^{s_j-1}` in
//!
//! ```text
//! H(X_1..X_l) = sum_{i_1+..+i_m = l} 1/(i_1!..i_m!) D^Y_{i_1..i_m}
//!     T(X_{q_1}, .., X_{q_m}; Y_1..Y_m) |_{Y=0}
//! ```
//!
//! with `q_1 = 1`, `q_k = 1 + i_m + i_{m-1} + .. + i_{m-k+2}` and `T` the
//! generating series of bi-brackets in `m` variables. The same series is
//! the sum over compositions of tri-brackets with all upper indices one and
//! Y-arguments the consecutive differences of `X_{p_1}, .., X_{p_m}`,
//! `p_k = l - i_1 - .. - i_k + 1`. The symbolic path below expands the
//! operator form; the numeric path evaluates the tri-bracket form and serves
//! as an independent check.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{factorial, int, Rational, TruncatedQSeries};
use crate::brackets::{d_operator, eval_lincomb, eval_tribracket, TriIndex};
use crate::words::{compositions, BiLetter, BiLinComb, LinComb, Word, ZLinComb};

fn prefactor(comp: &[usize]) -> Rational {
    let den: BigInt = comp.iter().map(|&i| factorial(i as u32)).product();
    Rational::new(BigInt::one(), den)
}

/// 1-based positions `q_1 < .. < q_m` whose X-variable survives.
fn kept_positions(comp: &[usize]) -> Vec<usize> {
    let m = comp.len();
    let mut q = Vec::with_capacity(m);
    let mut acc = 1;
    q.push(acc);
    for k in 2..=m {
        acc += comp[m - k + 1];
        q.push(acc);
    }
    q
}

fn only_ones_elsewhere(s: &[u32], kept: &[usize]) -> bool {
    (1..=s.len()).all(|j| kept.contains(&j) || s[j - 1] == 1)
}

fn compute(s: &[u32]) -> BiLinComb {
    let l = s.len();
    if l == 0 {
        return LinComb::one();
    }
    let mut out = LinComb::zero();
    for comp in compositions(l) {
        let q = kept_positions(&comp);
        if !only_ones_elsewhere(s, &q) {
            continue;
        }
        let pre = prefactor(&comp);
        let es: Vec<u32> = comp.iter().map(|&i| i as u32).collect();
        for (alpha, c) in d_operator(&es) {
            let f: BigInt = alpha.iter().map(|&a| factorial(a)).product();
            let word = Word(
                q.iter()
                    .zip(&alpha)
                    .map(|(&p, &a)| BiLetter::new(s[p - 1], a))
                    .collect(),
            );
            out.add_term(word, &pre * c * Rational::from_integer(f));
        }
    }
    out
}

fn cache() -> &'static RwLock<HashMap<Vec<u32>, BiLinComb>> {
    static CACHE: OnceLock<RwLock<HashMap<Vec<u32>, BiLinComb>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Precision used by the debug-build self check against the numeric path.
const SELF_CHECK_PRECISION: usize = 20;

/// `[s_1..s_l]^sh` as a bi-bracket combination. Cached. Debug builds
/// compare each new expansion with [`shuffle_bracket_numeric`].
pub fn shuffle_bracket(s: &[u32]) -> BiLinComb {
    if let Some(v) = cache().read().unwrap().get(s) {
        return v.clone();
    }
    let v = compute(s);
    if cfg!(debug_assertions) {
        let n = SELF_CHECK_PRECISION;
        assert_eq!(
            eval_lincomb(&v, n),
            shuffle_bracket_numeric(s, n),
            "symbolic and numeric shuffle brackets disagree for {s:?}"
        );
    }
    cache().write().unwrap().insert(s.to_vec(), v.clone());
    v
}

pub fn shuffle_bracket_lin(c: &ZLinComb) -> BiLinComb {
    c.map_linear(|w| shuffle_bracket(&w.indices()))
}

/// `[s_1..s_l]^sh` evaluated straight from the tri-bracket form, with no
/// symbolic reduction to bi-brackets.
pub fn shuffle_bracket_numeric(s: &[u32], precision: usize) -> TruncatedQSeries {
    let l = s.len();
    let mut acc = TruncatedQSeries::zero(precision);
    if l == 0 {
        return TruncatedQSeries::one(precision);
    }
    for comp in compositions(l) {
        let m = comp.len();
        // p_k = l - (i_1 + .. + i_k) + 1
        let mut p = Vec::with_capacity(m);
        let mut used = 0;
        for &i in &comp {
            used += i;
            p.push(l - used + 1);
        }
        if !only_ones_elsewhere(s, &p) {
            continue;
        }
        // variable k stands for X_{p_k}; Z_1 = X_{p_1}, Z_k = X_{p_k} - X_{p_{k-1}}
        let forms: Vec<Vec<Rational>> = (0..m)
            .map(|k| {
                let mut f = vec![Rational::zero(); m];
                f[k] = int(1);
                if k > 0 {
                    f[k - 1] = int(-1);
                }
                f
            })
            .collect();
        let target: Vec<u32> = p.iter().map(|&j| s[j - 1] - 1).collect();
        let cap = target.iter().sum::<u32>().max(1);
        let coeffs = crate::brackets::power_product_coefficients(&forms, &target, cap)
            .expect("cap is the target degree");
        let pre = prefactor(&comp);
        let es: Vec<u32> = comp.iter().map(|&i| i as u32).collect();
        for (r, c) in coeffs {
            let t = TriIndex::new(vec![1; m], r, es.clone()).expect("valid tri-index");
            acc += &eval_tribracket(&t, precision).scale(&(&pre * c));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_bi_lincomb;

    fn lc(s: &str) -> BiLinComb {
        parse_bi_lincomb(s).unwrap()
    }

    #[test]
    fn positions() {
        assert_eq!(kept_positions(&[1, 1, 1]), vec![1, 2, 3]);
        assert_eq!(kept_positions(&[2, 1]), vec![1, 2]);
        assert_eq!(kept_positions(&[1, 2]), vec![1, 3]);
        assert_eq!(kept_positions(&[3]), vec![1]);
    }

    #[test]
    fn length_one_and_two() {
        assert_eq!(shuffle_bracket(&[4]), lc("[4]"));
        assert_eq!(shuffle_bracket(&[3, 2]), lc("[3,2]"));
        assert_eq!(
            shuffle_bracket(&[3, 1]),
            lc("[3,1] + 1/2 * [3 | 1] - 1/2 * [3]")
        );
    }

    #[test]
    fn length_three() {
        // delta_{s3,1}, delta_{s2,1} and delta_{s2 s3,1} terms all present
        let expected = lc(
            "[2,1,1] + 1/2 * [2,1 | 0,1] - 1/2 * [2,1] + 1/2 * [2,1 | 1,0] - 1/2 * [2,1 | 0,1] - 1/2 * [2,1] \
             + 1/6 * [2 | 2] - 1/4 * [2 | 1] + 1/6 * [2]",
        );
        assert_eq!(shuffle_bracket(&[2, 1, 1]), expected);
    }

    #[test]
    fn numeric_matches_symbolic() {
        for s in [
            vec![2],
            vec![2, 1],
            vec![1, 1, 2],
            vec![3, 1, 1, 1],
            vec![1, 2, 1, 1],
        ] {
            assert_eq!(
                shuffle_bracket_numeric(&s, 25),
                eval_lincomb(&shuffle_bracket(&s), 25),
                "{s:?}"
            );
        }
    }
}
