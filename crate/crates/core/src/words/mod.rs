//! Free word algebras over the alphabets used throughout the crate.
//!
//! Three alphabets appear:
//!
//! * bi-letters `z_{s,r}` ([`BiLetter`]) index bi-brackets,
//! * z-letters `z_s` ([`Z`]) index brackets and multiple zeta values,
//! * the two letters `x`, `y` ([`Xy`]) with `z_j = x^{j-1} y`.
//!
//! Words are plain letter sequences ([`Word`]) and linear combinations are
//! sparse maps from words to rationals ([`LinComb`]). Products are all
//! instances of one quasi-shuffle recursion, see [`quasi`].

mod coproduct;
mod hoffman;
pub mod quasi;
mod syntax;
mod xy;

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::Rational;

pub use coproduct::deconcat_coproduct;
pub use hoffman::{compositions, hoffman_exp, hoffman_exp_lin, hoffman_log, hoffman_log_lin};
pub use quasi::{
    diamond_bi, quasi_shuffle, quasi_shuffle_lin, BiStuffle, Diamond, Stuffle, ZeroDiamond,
};
pub use syntax::{parse_bi_lincomb, parse_bi_word, parse_index_list};
pub use xy::{ds, ds_z, xy_shuffle, xy_shuffle_z, xy_to_z, z_to_xy, XyConvention};

pub trait Letter: Clone + Ord + Hash + fmt::Debug + Send + Sync + 'static {
    /// Weight of the letter; the weight of a word is the sum.
    fn weight(&self) -> u32;

    /// Renders a whole word. Words print as a unit because the bi-word
    /// syntax lists upper and lower indices separately.
    fn fmt_word(word: &[Self], f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

/// Letter `z_{s,r}` with `s >= 1`, `r >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BiLetter {
    pub s: u32,
    pub r: u32,
}

impl BiLetter {
    pub fn new(s: u32, r: u32) -> Self {
        assert!(s >= 1, "bi-letter needs s >= 1");
        Self { s, r }
    }
}

impl Letter for BiLetter {
    fn weight(&self) -> u32 {
        self.s + self.r
    }

    fn fmt_word(word: &[Self], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |it: &mut dyn Iterator<Item = u32>| -> String {
            it.map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        };
        write!(f, "[{}", join(&mut word.iter().map(|l| l.s)))?;
        if word.iter().any(|l| l.r != 0) {
            write!(f, " | {}", join(&mut word.iter().map(|l| l.r)))?;
        }
        write!(f, "]")
    }
}

/// Letter `z_s` with `s >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Z(pub u32);

impl Letter for Z {
    fn weight(&self) -> u32 {
        self.0
    }

    fn fmt_word(word: &[Self], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = word.iter().map(|z| z.0.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Xy {
    X,
    Y,
}

impl Letter for Xy {
    fn weight(&self) -> u32 {
        1
    }

    fn fmt_word(word: &[Self], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if word.is_empty() {
            return write!(f, "1");
        }
        for l in word {
            write!(f, "{}", if *l == Xy::X { 'x' } else { 'y' })?;
        }
        Ok(())
    }
}

/// Finite sequence of letters; the empty word is the unit of every product.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Word<L>(pub Vec<L>);

pub type BiWord = Word<BiLetter>;
pub type ZWord = Word<Z>;
pub type XYWord = Word<Xy>;

impl<L: Letter> Word<L> {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[L] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(Letter::weight).sum()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn prepend(&self, a: &L) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(a.clone());
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn reversed(&self) -> Self {
        Word(self.0.iter().rev().cloned().collect())
    }
}

impl Word<BiLetter> {
    /// Bi-word from parallel upper and lower index lists.
    pub fn bi(s: &[u32], r: &[u32]) -> Self {
        assert_eq!(
            s.len(),
            r.len(),
            "upper and lower index lists differ in length"
        );
        Word(
            s.iter()
                .zip(r)
                .map(|(&s, &r)| BiLetter::new(s, r))
                .collect(),
        )
    }

    /// The bracket `[s_1, ..., s_l]`, i.e. all lower indices zero.
    pub fn bracket(s: &[u32]) -> Self {
        Word(s.iter().map(|&s| BiLetter::new(s, 0)).collect())
    }

    pub fn upper(&self) -> Vec<u32> {
        self.0.iter().map(|l| l.s).collect()
    }

    pub fn lower(&self) -> Vec<u32> {
        self.0.iter().map(|l| l.r).collect()
    }

    pub fn upper_weight(&self) -> u32 {
        self.0.iter().map(|l| l.s).sum()
    }

    pub fn lower_weight(&self) -> u32 {
        self.0.iter().map(|l| l.r).sum()
    }
}

impl Word<Z> {
    pub fn from_indices(s: &[u32]) -> Self {
        assert!(s.iter().all(|&x| x >= 1), "z-letters need index >= 1");
        Word(s.iter().map(|&x| Z(x)).collect())
    }

    pub fn indices(&self) -> Vec<u32> {
        self.0.iter().map(|z| z.0).collect()
    }

    /// Embeds `z_s -> z_{s,0}`.
    pub fn to_bi(&self) -> BiWord {
        Word(self.0.iter().map(|z| BiLetter::new(z.0, 0)).collect())
    }

    /// Leading index exceeds one (or the word is empty).
    pub fn is_admissible(&self) -> bool {
        self.0.first().is_none_or(|z| z.0 >= 2)
    }
}

impl<L: Letter> fmt::Display for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        L::fmt_word(&self.0, f)
    }
}

impl<L: Letter> fmt::Debug for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        L::fmt_word(&self.0, f)
    }
}

/// Finite rational linear combination of words. Zero coefficients are never
/// stored, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LinComb<L: Letter> {
    terms: BTreeMap<Word<L>, Rational>,
}

pub type BiLinComb = LinComb<BiLetter>;
pub type ZLinComb = LinComb<Z>;

impl<L: Letter> LinComb<L> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    /// The unit, i.e. the empty word with coefficient one.
    pub fn one() -> Self {
        Self::word(Word::empty())
    }

    pub fn word(w: Word<L>) -> Self {
        Self::term(w, Rational::one())
    }

    pub fn term(w: Word<L>, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    /// Sum of the given terms, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (Word<L>, Rational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    pub fn add_term(&mut self, w: Word<L>, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (w, a) in &other.terms {
            self.add_term(w.clone(), a * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word<L>) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word<L>, &Rational)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word<L>> {
        self.terms.keys()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Linear extension of a word-level map.
    pub fn map_linear<M: Letter, F: FnMut(&Word<L>) -> LinComb<M>>(&self, mut f: F) -> LinComb<M> {
        let mut out = LinComb::zero();
        for (w, c) in &self.terms {
            out.add_scaled(&f(w), c);
        }
        out
    }

    /// Fallible linear extension.
    pub fn try_map_linear<M: Letter, E, F>(&self, mut f: F) -> Result<LinComb<M>, E>
    where
        F: FnMut(&Word<L>) -> Result<LinComb<M>, E>,
    {
        let mut out = LinComb::zero();
        for (w, c) in &self.terms {
            out.add_scaled(&f(w)?, c);
        }
        Ok(out)
    }

    /// Bilinear extension of a word-level product.
    pub fn bilinear<F: FnMut(&Word<L>, &Word<L>) -> LinComb<L>>(
        &self,
        other: &Self,
        mut f: F,
    ) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_scaled(&f(u, v), &(a * b));
            }
        }
        out
    }

    /// Concatenation product, bilinearly extended.
    pub fn concat(&self, other: &Self) -> Self {
        self.bilinear(other, |u, v| LinComb::word(u.concat(v)))
    }

    /// Largest word weight occurring, `None` for zero.
    pub fn max_weight(&self) -> Option<u32> {
        self.terms.keys().map(Word::weight).max()
    }
}

impl<L: Letter> Add for &LinComb<L> {
    type Output = LinComb<L>;
    fn add(self, rhs: Self) -> LinComb<L> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl<L: Letter> Sub for &LinComb<L> {
    type Output = LinComb<L>;
    fn sub(self, rhs: Self) -> LinComb<L> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl<L: Letter> Neg for &LinComb<L> {
    type Output = LinComb<L>;
    fn neg(self) -> LinComb<L> {
        self.scale(&-Rational::one())
    }
}

impl<L: Letter> fmt::Display for LinComb<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        syntax::fmt_lincomb(self, f)
    }
}

impl<L: Letter> fmt::Debug for LinComb<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        syntax::fmt_lincomb(self, f)
    }
}

/// All bi-words of total weight exactly `k`, in lexicographic order.
pub fn bi_words_of_weight(k: u32) -> Vec<BiWord> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: u32, cur: &mut Vec<BiLetter>, out: &mut Vec<BiWord>) {
        if rem == 0 {
            out.push(Word(cur.clone()));
            return;
        }
        for s in 1..=rem {
            for r in 0..=(rem - s) {
                cur.push(BiLetter::new(s, r));
                rec(rem - s - r, cur, out);
                cur.pop();
            }
        }
    }
    rec(k, &mut cur, &mut out);
    out
}

/// All z-words of weight exactly `k` (compositions of `k`).
pub fn z_words_of_weight(k: u32) -> Vec<ZWord> {
    if k == 0 {
        return vec![Word::empty()];
    }
    compositions(k as usize)
        .into_iter()
        .map(|c| Word(c.into_iter().map(|i| Z(i as u32)).collect()))
        .collect()
}
