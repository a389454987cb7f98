use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Sparse multivariate polynomial over the rationals with a hard cap on the
/// total degree.
///
/// Used as scratch space when substituting linear forms into generating
/// series. Terms are keyed by dense exponent vectors; zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    cap: u32,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize, cap: u32) -> Self {
        Self {
            nvars,
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational, nvars: usize, cap: u32) -> Self {
        let mut p = Self::zero(nvars, cap);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize, cap: u32) -> Self {
        Self::constant(Rational::one(), nvars, cap)
    }

    /// `sum_i coeffs[i] * x_i + constant`.
    pub fn linear(coeffs: &[Rational], constant: Rational, cap: u32) -> Result<Self> {
        let nvars = coeffs.len();
        let mut p = Self::constant(constant, nvars, cap);
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut e = vec![0; nvars];
            e[i] = 1;
            p.check_degree(1)?;
            p.add_term(e, c.clone());
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Coefficient of the monomial with exponent vector `exps`.
    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    fn check_degree(&self, degree: u32) -> Result<()> {
        if degree > self.cap {
            Err(Error::DegreeCap {
                degree,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
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

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.nvars, self.cap);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a * c);
        }
        out
    }

    /// Product; fails if any resulting term exceeds the degree cap.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars, self.cap.min(other.cap));
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.check_degree(e.iter().sum())?;
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    /// Drops every monomial that does not divide `x^bound`. Multiplying by
    /// further polynomials with nonnegative exponents never brings such a
    /// monomial back under the bound, so this is safe before coefficient
    /// extraction.
    pub fn retain_dividing(&mut self, bound: &[u32]) {
        self.terms
            .retain(|e, _| e.iter().zip(bound).all(|(a, b)| a <= b));
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one(self.nvars, self.cap);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }
}
