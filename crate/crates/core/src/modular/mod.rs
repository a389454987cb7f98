//! Eisenstein series, the discriminant and Rankin-Cohen brackets inside the
//! bi-bracket algebra.
//!
//! `G_k = beta_k + [k]` with `beta_k = -B_k / (2 k!)`. A form keeps both its
//! q-expansion and a symbolic bi-bracket combination whose empty-word
//! coefficient is the constant term, so products can be taken on either
//! side and compared.

mod suite;

pub use suite::{modular_suite, ModularCheck};

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{
    bernoulli_over_factorial, binomial, factorial, rat, Rational, TruncatedQSeries,
};
use crate::brackets::{eval_bibracket, eval_lincomb};
use crate::double_shuffle::stuffle_mul_lin;
use crate::error::{Error, Result};
use crate::words::{BiLinComb, BiWord, LinComb};

/// A (quasi-)modular form given by its weight, q-expansion and bi-bracket
/// expression (constant included as the empty word).
#[derive(Clone, Debug, PartialEq)]
pub struct QModForm {
    weight: u32,
    symbolic: BiLinComb,
    series: TruncatedQSeries,
}

impl QModForm {
    /// Builds a form from its symbolic side, evaluating the series.
    pub fn from_symbolic(weight: u32, symbolic: BiLinComb, precision: usize) -> Self {
        let series = eval_lincomb(&symbolic, precision);
        Self {
            weight,
            symbolic,
            series,
        }
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn symbolic(&self) -> &BiLinComb {
        &self.symbolic
    }

    pub fn series(&self) -> &TruncatedQSeries {
        &self.series
    }

    pub fn precision(&self) -> usize {
        self.series.precision()
    }

    /// Constant term, the coefficient of the empty word.
    pub fn constant(&self) -> Rational {
        self.symbolic.coeff(&BiWord::empty())
    }

    /// Product; the symbolic side uses the stuffle product of bi-brackets.
    pub fn mul(&self, other: &Self) -> Self {
        Self {
            weight: self.weight + other.weight,
            symbolic: stuffle_mul_lin(&self.symbolic, &other.symbolic),
            series: &self.series * &other.series,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            weight: self.weight,
            symbolic: self.symbolic.scale(c),
            series: self.series.scale(c),
        }
    }

    /// Sum of two forms of the same weight.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.weight != other.weight {
            return Err(Error::InvalidArgument(format!(
                "cannot add forms of weight {} and {}",
                self.weight, other.weight
            )));
        }
        Ok(Self {
            weight: self.weight,
            symbolic: &self.symbolic + &other.symbolic,
            series: &self.series + &other.series,
        })
    }
}

/// `beta_k = -B_k / (2 k!)`, the constant term of `G_k`.
pub fn beta(k: u32) -> Rational {
    -bernoulli_over_factorial(k as usize) * rat(1, 2)
}

/// `G_k = beta_k + [k]` for even `k >= 2`.
pub fn eisenstein(k: u32, precision: usize) -> Result<QModForm> {
    if k < 2 || k % 2 == 1 {
        return Err(Error::InvalidEisensteinWeight(k));
    }
    let mut symbolic = LinComb::term(BiWord::empty(), beta(k));
    symbolic.add_term(BiWord::bracket(&[k]), Rational::one());
    Ok(QModForm::from_symbolic(k, symbolic, precision))
}

/// `q prod_{n >= 1} (1 - q^n)^24` truncated at `q^precision`.
pub fn delta_series(precision: usize) -> TruncatedQSeries {
    let n = precision;
    let mut eta = vec![BigInt::from(0); n + 1];
    eta[0] = BigInt::one();
    for m in 1..=n {
        for k in (m..=n).rev() {
            let t = eta[k - m].clone();
            eta[k] -= t;
        }
    }
    let eta = TruncatedQSeries::from_integers(&eta, &BigInt::one());
    let mut shifted = vec![Rational::from_integer(0.into()); n + 1];
    let p24 = eta.pow(24);
    for (k, c) in shifted.iter_mut().enumerate().skip(1) {
        *c = p24.coeff(k - 1);
    }
    TruncatedQSeries::from_coeffs(shifted)
}

/// `(f, g)_n = sum_{a+b=n} (-1)^a C(k+n-1, b) C(l+n-1, a) d_q^a f d_q^b g`
/// with `k`, `l` the weights of `f` and `g`.
pub fn rankin_cohen(f: &QModForm, g: &QModForm, n: u32) -> TruncatedQSeries {
    let (k, l, n) = (f.weight as i64, g.weight as i64, n as i64);
    let prec = f.precision().min(g.precision());
    let mut df = vec![f.series.clone()];
    let mut dg = vec![g.series.clone()];
    for _ in 0..n {
        df.push(df.last().unwrap().dq());
        dg.push(dg.last().unwrap().dq());
    }
    let mut acc = TruncatedQSeries::zero(prec);
    for a in 0..=n {
        let b = n - a;
        let sign = if a % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
        let c = sign * binomial(k + n - 1, b) * binomial(l + n - 1, a);
        acc += &(&df[a as usize] * &dg[b as usize]).scale(&c);
    }
    acc
}

/// `gamma^n_{k,l} = (k-1+n)!/(k-1)! * (l-1+n)!/(l-1)!`.
pub fn rankin_cohen_gamma(k: u32, l: u32, n: u32) -> Rational {
    Rational::new(factorial(k - 1 + n), factorial(k - 1))
        * Rational::new(factorial(l - 1 + n), factorial(l - 1))
}

/// `C^{2n}_{k,l} = beta_k [l+n | n] + (-1)^n beta_l [k+n | n]
///     + sum_{a+b=n} (-1)^a [k+a | a] [l+b | b]`,
/// so that `(G_k, G_l)_n = gamma^n_{k,l} C^{2n}_{k,l}` for `n >= 1`.
pub fn cusp_bracket_c(k: u32, l: u32, n: u32, precision: usize) -> Result<TruncatedQSeries> {
    if k < 4 || l < 4 || k % 2 == 1 || l % 2 == 1 || n == 0 {
        return Err(Error::InvalidArgument(format!(
            "C^{{2n}}_{{k,l}} needs even k, l >= 4 and n >= 1, got k={k}, l={l}, n={n}"
        )));
    }
    let b = |s: u32, r: u32| eval_bibracket(&BiWord::bi(&[s], &[r]), precision);
    let sign_n = if n.is_multiple_of(2) {
        rat(1, 1)
    } else {
        rat(-1, 1)
    };
    let mut acc = &b(l + n, n).scale(&beta(k)) + &b(k + n, n).scale(&(sign_n * beta(l)));
    for a in 0..=n {
        let sign = if a % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
        acc += &(&b(k + a, a) * &b(l + n - a, n - a)).scale(&sign);
    }
    Ok(acc)
}
