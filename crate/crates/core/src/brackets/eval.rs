use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{CheckedAdd, CheckedMul, One, ToPrimitive, Zero};

use super::TriIndex;
use crate::arith::{binomial_int, factorial, Rational, TruncatedQSeries};
use crate::words::{BiLinComb, BiWord};

/// Direct evaluation by enumerating every `(u, v)` with `u_1 > .. > u_l > 0`
/// and `sum u_j v_j <= n`. Slow; kept as the reference the fast path is
/// tested against.
pub fn eval_bibracket_oracle(w: &BiWord, precision: usize) -> TruncatedQSeries {
    eval_tribracket_oracle(&TriIndex::from_bi(w), precision)
}

pub fn eval_tribracket_oracle(t: &TriIndex, precision: usize) -> TruncatedQSeries {
    let mut coeffs = vec![Rational::zero(); precision + 1];
    let l = t.len();
    let mut us = Vec::with_capacity(l);
    let mut vs = Vec::with_capacity(l);
    enumerate(t, precision, usize::MAX, 0, &mut us, &mut vs, &mut coeffs);
    if l == 0 {
        coeffs[0] = Rational::one();
    }
    TruncatedQSeries::from_coeffs(coeffs)
}

fn enumerate(
    t: &TriIndex,
    n: usize,
    below: usize,
    used: usize,
    us: &mut Vec<usize>,
    vs: &mut Vec<usize>,
    out: &mut [Rational],
) {
    let j = us.len();
    if j == t.len() {
        if j == 0 {
            return;
        }
        let mut c = Rational::one();
        for i in 0..j {
            let (u, v) = (us[i] as u32, vs[i] as u32);
            let num = BigInt::from(u).pow(t.r[i])
                * BigInt::from(v).pow(t.s[i] - 1)
                * binomial_int(v as i64 - 1, t.e[i] as i64 - 1);
            let den = factorial(t.r[i]) * factorial(t.s[i] - 1);
            c *= Rational::new(num, den);
        }
        out[used] += c;
        return;
    }
    // The remaining l - j parts are distinct, so at least 1 + .. + (l-j-1)
    // more must fit after this one.
    let rest = t.len() - j - 1;
    let reserve = rest * (rest + 1) / 2;
    let mut u = 1;
    while u < below && used + u + reserve <= n {
        let mut v = 1;
        while used + u * v + reserve <= n {
            us.push(u);
            vs.push(v);
            enumerate(t, n, u, used + u * v, us, vs, out);
            us.pop();
            vs.pop();
            v += 1;
        }
        u += 1;
    }
}

/// `sum_{u_1 > .. > u_l > 0} prod_j g_j(u_j)` where `kernel[j][u]` lists the
/// sparse terms `(degree, coefficient)` of `g_j(u)`.
///
/// `T_j(m) = sum_{m > u_j > .. > u_l > 0} prod g` obeys
/// `T_j(m + 1) = T_j(m) + g_j(m) T_{j+1}(m)`; updating `j` in increasing order
/// keeps `T_{j+1}` at its old value when `T_j` reads it.
fn nested_sum<T>(kernel: &[Vec<Vec<(usize, T)>>], n: usize) -> Option<Vec<T>>
where
    T: Clone + Zero + One + CheckedAdd + CheckedMul,
{
    let l = kernel.len();
    let mut t: Vec<Vec<T>> = vec![vec![T::zero(); n + 1]; l + 1];
    t[l][0] = T::one();
    for m in 1..=n {
        for (j, g) in kernel.iter().enumerate() {
            let (head, tail) = t.split_at_mut(j + 1);
            let (dst, src) = (&mut head[j], &tail[0]);
            for (d, c) in &g[m] {
                for k in 0..=(n - d) {
                    if src[k].is_zero() {
                        continue;
                    }
                    let p = c.checked_mul(&src[k])?;
                    dst[k + d] = dst[k + d].checked_add(&p)?;
                }
            }
        }
    }
    Some(t.swap_remove(0))
}

fn integer_kernel(t: &TriIndex, n: usize) -> Kernel<BigInt> {
    (0..t.len())
        .map(|j| {
            let (s, r, e) = (t.s[j], t.r[j], t.e[j] as usize);
            let mut per_u = vec![Vec::new(); n + 1];
            for (u, terms) in per_u.iter_mut().enumerate().skip(1) {
                let up = BigInt::from(u).pow(r);
                let mut v = e;
                while u * v <= n {
                    let c =
                        &up * BigInt::from(v).pow(s - 1) * binomial_int(v as i64 - 1, e as i64 - 1);
                    terms.push((u * v, c));
                    v += 1;
                }
            }
            per_u
        })
        .collect()
}

/// Per level, per `u`, the sparse `(degree, coefficient)` terms.
type Kernel<T> = Vec<Vec<Vec<(usize, T)>>>;

fn to_i128(k: &[Vec<Vec<(usize, BigInt)>>]) -> Option<Kernel<i128>> {
    k.iter()
        .map(|lvl| {
            lvl.iter()
                .map(|terms| {
                    terms
                        .iter()
                        .map(|(d, c)| c.to_i128().map(|c| (*d, c)))
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// Fast evaluation of a tri-bracket through the rolling nested sum. Runs in
/// `i128` and redoes the sum in big integers only if that overflows.
pub fn eval_tribracket(t: &TriIndex, precision: usize) -> TruncatedQSeries {
    let n = precision;
    if t.is_empty() {
        return TruncatedQSeries::one(n);
    }
    let kernel = integer_kernel(t, n);
    let values: Vec<BigInt> = match to_i128(&kernel).and_then(|k| nested_sum(&k, n)) {
        Some(v) => v.into_iter().map(BigInt::from).collect(),
        None => nested_sum(&kernel, n).expect("big integers do not overflow"),
    };
    let den: BigInt = (0..t.len())
        .map(|j| factorial(t.r[j]) * factorial(t.s[j] - 1))
        .product();
    TruncatedQSeries::from_integers(&values, &den)
}

pub fn eval_bibracket(w: &BiWord, precision: usize) -> TruncatedQSeries {
    eval_tribracket(&TriIndex::from_bi(w), precision)
}

pub fn eval_lincomb(c: &BiLinComb, precision: usize) -> TruncatedQSeries {
    let mut acc = TruncatedQSeries::zero(precision);
    for (w, a) in c.iter() {
        acc += &eval_bibracket(w, precision).scale(a);
    }
    acc
}

/// Evaluation at a fixed precision with a cache of word values. Shareable
/// across threads; the cache never changes results.
#[derive(Debug)]
pub struct Evaluator {
    precision: usize,
    cache: RwLock<HashMap<BiWord, TruncatedQSeries>>,
}

impl Evaluator {
    pub fn new(precision: usize) -> Self {
        Self {
            precision,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn eval(&self, w: &BiWord) -> TruncatedQSeries {
        if let Some(v) = self.cache.read().unwrap().get(w) {
            return v.clone();
        }
        let v = eval_bibracket(w, self.precision);
        self.cache.write().unwrap().insert(w.clone(), v.clone());
        v
    }

    pub fn eval_lincomb(&self, c: &BiLinComb) -> TruncatedQSeries {
        let mut acc = TruncatedQSeries::zero(self.precision);
        for (w, a) in c.iter() {
            acc += &self.eval(w).scale(a);
        }
        acc
    }

    pub fn eval_tri(&self, t: &TriIndex) -> TruncatedQSeries {
        eval_tribracket(t, self.precision)
    }
}
