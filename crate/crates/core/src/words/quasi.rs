//! Quasi-shuffle products `aw ⊙ bv = a(w ⊙ bv) + b(aw ⊙ v) + (a ◇ b)(w ⊙ v)`.
//!
//! One recursion serves every product in the crate; only the letter product
//! `◇` changes:
//!
//! | product              | alphabet     | diamond        |
//! |----------------------|--------------|----------------|
//! | bi-bracket stuffle   | `z_{s,r}`    | [`BiStuffle`]  |
//! | MZV stuffle          | `z_s`        | [`Stuffle`]    |
//! | index / xy shuffle   | any          | [`ZeroDiamond`]|

use std::collections::HashMap;

use num_traits::One;

use super::{BiLetter, BiLinComb, Letter, LinComb, Word, Z};
use crate::arith::{bernoulli_over_factorial, binomial, Rational};

/// Commutative, associative product on the span of the letters. The result
/// is a linear combination of single letters.
pub trait Diamond<L> {
    fn diamond(&self, a: &L, b: &L) -> Vec<(L, Rational)>;
}

/// `◇ ≡ 0`: the quasi-shuffle degenerates to the plain shuffle.
#[derive(Clone, Copy, Debug, Default)]
pub struct ZeroDiamond;

impl<L> Diamond<L> for ZeroDiamond {
    fn diamond(&self, _: &L, _: &L) -> Vec<(L, Rational)> {
        Vec::new()
    }
}

/// `z_a ◇ z_b = z_{a+b}`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Stuffle;

impl Diamond<Z> for Stuffle {
    fn diamond(&self, a: &Z, b: &Z) -> Vec<(Z, Rational)> {
        vec![(Z(a.0 + b.0), Rational::one())]
    }
}

/// Letter product whose quasi-shuffle realizes the product of bi-brackets.
#[derive(Clone, Copy, Debug, Default)]
pub struct BiStuffle;

/// `(-1)^{b-1} C(a+b-j-1, a-j) B_{a+b-j} / (a+b-j)!` for `1 <= j <= a`.
pub fn lambda(j: u32, a: u32, b: u32) -> Rational {
    let (j, a, b) = (j as i64, a as i64, b as i64);
    let sign = if (b - 1) % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    };
    sign * binomial(a + b - j - 1, a - j) * bernoulli_over_factorial((a + b - j) as usize)
}

impl Diamond<BiLetter> for BiStuffle {
    fn diamond(&self, x: &BiLetter, y: &BiLetter) -> Vec<(BiLetter, Rational)> {
        let r = x.r + y.r;
        let outer = binomial(r as i64, x.r as i64);
        let mut acc: Vec<Rational> =
            vec![Rational::from_integer(0.into()); (x.s + y.s + 1) as usize];
        acc[(x.s + y.s) as usize] = Rational::one();
        for j in 1..=x.s {
            acc[j as usize] += lambda(j, x.s, y.s);
        }
        for j in 1..=y.s {
            acc[j as usize] += lambda(j, y.s, x.s);
        }
        acc.into_iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !num_traits::Zero::is_zero(c))
            .map(|(s, c)| (BiLetter::new(s as u32, r), c * &outer))
            .collect()
    }
}

/// `z_{s1,r1} ⊠ z_{s2,r2}` as a combination of one-letter words.
pub fn diamond_bi(a: &BiLetter, b: &BiLetter) -> BiLinComb {
    LinComb::from_terms(
        BiStuffle
            .diamond(a, b)
            .into_iter()
            .map(|(l, c)| (Word(vec![l]), c)),
    )
}

/// Quasi-shuffle product of two words.
pub fn quasi_shuffle<L: Letter, D: Diamond<L>>(u: &Word<L>, v: &Word<L>, d: &D) -> LinComb<L> {
    let (a, b) = (u.letters(), v.letters());
    if a.is_empty() {
        return LinComb::word(v.clone());
    }
    if b.is_empty() {
        return LinComb::word(u.clone());
    }
    // table[i][j] = a[i..] ⊙ b[j..]
    let (n, m) = (a.len(), b.len());
    let mut table: Vec<Vec<LinComb<L>>> = vec![vec![LinComb::zero(); m + 1]; n + 1];
    for (i, row) in table.iter_mut().enumerate() {
        row[m] = LinComb::word(Word(a[i..].to_vec()));
    }
    for j in 0..=m {
        table[n][j] = LinComb::word(Word(b[j..].to_vec()));
    }
    let mut memo: HashMap<(usize, usize), Vec<(L, Rational)>> = HashMap::new();
    for i in (0..n).rev() {
        for j in (0..m).rev() {
            let mut acc = prepend_all(&a[i], &table[i + 1][j]);
            acc.add_scaled(&prepend_all(&b[j], &table[i][j + 1]), &Rational::one());
            let dia = memo
                .entry((i, j))
                .or_insert_with(|| d.diamond(&a[i], &b[j]));
            for (letter, c) in dia.iter() {
                acc.add_scaled(&prepend_all(letter, &table[i + 1][j + 1]), c);
            }
            table[i][j] = acc;
        }
    }
    std::mem::replace(&mut table[0][0], LinComb::zero())
}

fn prepend_all<L: Letter>(a: &L, c: &LinComb<L>) -> LinComb<L> {
    LinComb::from_terms(c.iter().map(|(w, x)| (w.prepend(a), x.clone())))
}

/// Bilinear extension of [`quasi_shuffle`].
pub fn quasi_shuffle_lin<L: Letter, D: Diamond<L>>(
    u: &LinComb<L>,
    v: &LinComb<L>,
    d: &D,
) -> LinComb<L> {
    u.bilinear(v, |x, y| quasi_shuffle(x, y, d))
}

/// Diamond of a linear combination of letters with one more letter.
pub(crate) fn diamond_comb<L: Letter, D: Diamond<L>>(
    acc: &[(L, Rational)],
    b: &L,
    d: &D,
) -> Vec<(L, Rational)> {
    let mut out: std::collections::BTreeMap<L, Rational> = std::collections::BTreeMap::new();
    for (a, c) in acc {
        for (l, x) in d.diamond(a, b) {
            *out.entry(l)
                .or_insert_with(|| Rational::from_integer(0.into())) += c * x;
        }
    }
    out.into_iter()
        .filter(|(_, c)| !num_traits::Zero::is_zero(c))
        .collect()
}
