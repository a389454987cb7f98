//! The partition involution `P`.
//!
//! With `T(X; Y) = sum [s | r] prod X_j^{s_j-1} Y_j^{r_j}` the generating
//! series of bi-brackets, conjugating partitions gives
//!
//! ```text
//! T(X_1..X_l; Y_1..Y_l) = T(Y_1+..+Y_l, .., Y_1+Y_2, Y_1; X_l, X_{l-1}-X_l, .., X_1-X_2)
//! ```
//!
//! Comparing coefficients of `prod X^{s-1} Y^r` expresses `[s | r]` as a
//! combination of bi-brackets of the same weight and length. The substituted
//! X-arguments involve only `Y` and the Y-arguments only `X`, so each
//! coefficient factors into a Y-part and an X-part.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use super::TriIndex;
use crate::arith::{factorial, int, rat, MultiPoly, Rational};
use crate::error::Result;
use crate::words::{BiLetter, BiLinComb, BiWord, LinComb, Word};

/// All `(a, c)` with `a` a weak composition of `sum(target)` into
/// `forms.len()` parts and `c = [x^target] prod_i forms[i]^{a_i} != 0`.
/// `forms[i]` is a linear form given by its coefficient vector.
pub(crate) fn power_product_coefficients(
    forms: &[Vec<Rational>],
    target: &[u32],
    cap: u32,
) -> Result<Vec<(Vec<u32>, Rational)>> {
    let total: u32 = target.iter().sum();
    let nvars = target.len();
    let linear: Vec<MultiPoly> = forms
        .iter()
        .map(|f| MultiPoly::linear(f, Rational::zero(), cap))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    let mut a = Vec::with_capacity(forms.len());
    rec(
        &linear,
        target,
        total,
        MultiPoly::one(nvars, cap),
        &mut a,
        &mut out,
    )?;
    Ok(out)
}

fn rec(
    forms: &[MultiPoly],
    target: &[u32],
    remaining: u32,
    acc: MultiPoly,
    a: &mut Vec<u32>,
    out: &mut Vec<(Vec<u32>, Rational)>,
) -> Result<()> {
    let i = a.len();
    if acc.is_zero() {
        return Ok(());
    }
    if i + 1 == forms.len() {
        let mut p = acc;
        for _ in 0..remaining {
            p = p.mul(&forms[i])?;
            p.retain_dividing(target);
        }
        let c = p.coeff(target);
        if !c.is_zero() {
            a.push(remaining);
            out.push((a.clone(), c));
            a.pop();
        }
        return Ok(());
    }
    let mut p = acc;
    for k in 0..=remaining {
        a.push(k);
        rec(forms, target, remaining - k, p.clone(), a, out)?;
        a.pop();
        if k < remaining {
            p = p.mul(&forms[i])?;
            p.retain_dividing(target);
            if p.is_zero() {
                break;
            }
        }
    }
    Ok(())
}

fn unit_form(nvars: usize, ones: impl IntoIterator<Item = (usize, i64)>) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); nvars];
    for (i, c) in ones {
        if i < nvars {
            v[i] = int(c);
        }
    }
    v
}

fn compute_partition_map(w: &BiWord) -> Result<BiLinComb> {
    let l = w.len();
    if l == 0 {
        return Ok(LinComb::one());
    }
    let (s, r) = (w.upper(), w.lower());
    if l == 1 {
        return Ok(LinComb::word(Word(vec![BiLetter::new(r[0] + 1, s[0] - 1)])));
    }
    let cap = w.weight();
    // X'_i = Y_1 + .. + Y_{l+1-i}
    let x_forms: Vec<Vec<Rational>> = (1..=l)
        .map(|i| unit_form(l, (0..=l - i).map(|j| (j, 1))))
        .collect();
    // Y'_i = X_{l+1-i} - X_{l+2-i}, with X_{l+1} = 0
    let y_forms: Vec<Vec<Rational>> = (1..=l)
        .map(|i| unit_form(l, [(l - i, 1), (l + 1 - i, -1)]))
        .collect();
    let s_minus: Vec<u32> = s.iter().map(|x| x - 1).collect();
    let upper = power_product_coefficients(&x_forms, &r, cap)?;
    let lower = power_product_coefficients(&y_forms, &s_minus, cap)?;
    let mut out = LinComb::zero();
    for (a, c) in &upper {
        for (b, d) in &lower {
            let word = Word(
                a.iter()
                    .zip(b)
                    .map(|(&a, &b)| BiLetter::new(a + 1, b))
                    .collect(),
            );
            out.add_term(word, c * d);
        }
    }
    Ok(out)
}

fn cache() -> &'static RwLock<HashMap<BiWord, BiLinComb>> {
    static CACHE: OnceLock<RwLock<HashMap<BiWord, BiLinComb>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `P(w)`: the bi-bracket `w` rewritten through conjugation of partitions.
/// Preserves weight and length and is an involution. Cached per word.
pub fn partition_map(w: &BiWord) -> BiLinComb {
    if let Some(v) = cache().read().unwrap().get(w) {
        return v.clone();
    }
    let v = compute_partition_map(w).expect("degree cap equals the word weight");
    cache().write().unwrap().insert(w.clone(), v.clone());
    v
}

pub fn partition_map_lin(c: &BiLinComb) -> BiLinComb {
    c.map_linear(partition_map)
}

/// Tri-bracket side of the generalized partition relation: the terms of
/// `P(w)` with the third index `e` attached unchanged.
pub fn partition_tri(w: &BiWord, e: &[u32]) -> Result<Vec<(TriIndex, Rational)>> {
    partition_map(w)
        .iter()
        .map(|(v, c)| Ok((TriIndex::with_e(v, e)?, c.clone())))
        .collect()
}

/// Monomials `(alpha, c)` of the operator
/// `prod_j prod_{k=1}^{e_j-1} ((1/k)(d_{m-j+1} - d_{m-j+2}) - 1)` in the
/// commuting derivatives `d_1..d_m`, `m = es.len()`, with `d_{m+1} = 0`.
pub fn d_operator(es: &[u32]) -> Vec<(Vec<u32>, Rational)> {
    let m = es.len();
    let cap: u32 = es.iter().map(|e| e - 1).sum();
    let mut acc = MultiPoly::one(m, cap);
    for (j0, &e) in es.iter().enumerate() {
        let j = j0 + 1;
        for k in 1..e {
            let kk = k as i64;
            let mut coeffs = vec![Rational::zero(); m];
            coeffs[m - j] = rat(1, kk);
            if m - j + 1 < m {
                coeffs[m - j + 1] = rat(-1, kk);
            }
            let f = MultiPoly::linear(&coeffs, -Rational::one(), cap).expect("degree one");
            acc = acc.mul(&f).expect("cap is the total operator degree");
        }
    }
    acc.terms().map(|(a, c)| (a.to_vec(), c.clone())).collect()
}

/// Coefficient of `prod X^{s-1} Y^r` in `D^Y_e T(X; Y)` as a bi-bracket
/// combination: each monomial `d^alpha` shifts `r` to `r + alpha` with the
/// factor `prod (r_j + alpha_j)! / r_j!`.
pub fn d_y_transform(w: &BiWord, e: &[u32]) -> Result<BiLinComb> {
    let t = TriIndex::with_e(w, e)?;
    let (s, r) = (t.s(), t.r());
    let mut out = LinComb::zero();
    for (alpha, c) in d_operator(e) {
        let mut f = Rational::one();
        let mut letters = Vec::with_capacity(s.len());
        for j in 0..s.len() {
            let rr = r[j] + alpha[j];
            f *= Rational::new(factorial(rr), factorial(r[j]));
            letters.push(BiLetter::new(s[j], rr));
        }
        out.add_term(Word(letters), c * f);
    }
    Ok(out)
}
