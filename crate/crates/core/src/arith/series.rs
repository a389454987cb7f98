use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{CommutativeAlgebra, Rational};

/// Power series `a_0 + a_1 q + ... + a_N q^N + O(q^{N+1})` with exact
/// rational coefficients.
///
/// Binary operations truncate at the smaller of the two precisions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedQSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedQSeries {
    pub fn zero(precision: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); precision + 1],
        }
    }

    pub fn one(precision: usize) -> Self {
        Self::constant(Rational::one(), precision)
    }

    pub fn constant(c: Rational, precision: usize) -> Self {
        let mut s = Self::zero(precision);
        s.coeffs[0] = c;
        s
    }

    /// Series from `a_0..a_N`; the precision is `coeffs.len() - 1`.
    ///
    /// Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least a_0");
        Self { coeffs }
    }

    /// Integer coefficients divided by a common denominator.
    pub fn from_integers(values: &[BigInt], denominator: &BigInt) -> Self {
        let coeffs = values
            .iter()
            .map(|v| Rational::new(v.clone(), denominator.clone()))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `q^n`; zero beyond the precision.
    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drops coefficients above `precision`. Never extends.
    pub fn truncate(&self, precision: usize) -> Self {
        let n = precision.min(self.precision());
        Self {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `f(q) -> f(q^m)`, truncated at the same precision.
    pub fn substitute_power(&self, m: usize) -> Self {
        assert!(m >= 1, "substitution q -> q^m needs m >= 1");
        let n = self.precision();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            let j = i * m;
            if j > n {
                break;
            }
            out.coeffs[j] = a.clone();
        }
        out
    }

    /// The derivation `q d/dq`: `a_n -> n a_n`.
    pub fn dq(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, a)| a * Rational::from_integer(BigInt::from(n)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.precision());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &TruncatedQSeries {
    type Output = TruncatedQSeries;
    fn add(self, rhs: Self) -> TruncatedQSeries {
        let n = self.precision().min(rhs.precision());
        TruncatedQSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &TruncatedQSeries {
    type Output = TruncatedQSeries;
    fn sub(self, rhs: Self) -> TruncatedQSeries {
        let n = self.precision().min(rhs.precision());
        TruncatedQSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Neg for &TruncatedQSeries {
    type Output = TruncatedQSeries;
    fn neg(self) -> TruncatedQSeries {
        TruncatedQSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &TruncatedQSeries {
    type Output = TruncatedQSeries;
    fn mul(self, rhs: Self) -> TruncatedQSeries {
        let n = self.precision().min(rhs.precision());
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncatedQSeries { coeffs: out }
    }
}

impl AddAssign<&TruncatedQSeries> for TruncatedQSeries {
    fn add_assign(&mut self, rhs: &TruncatedQSeries) {
        let n = self.precision().min(rhs.precision());
        self.coeffs.truncate(n + 1);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Add for TruncatedQSeries {
    type Output = TruncatedQSeries;
    fn add(self, rhs: Self) -> TruncatedQSeries {
        &self + &rhs
    }
}

impl Sub for TruncatedQSeries {
    type Output = TruncatedQSeries;
    fn sub(self, rhs: Self) -> TruncatedQSeries {
        &self - &rhs
    }
}

impl Mul for TruncatedQSeries {
    type Output = TruncatedQSeries;
    fn mul(self, rhs: Self) -> TruncatedQSeries {
        &self * &rhs
    }
}

impl CommutativeAlgebra for TruncatedQSeries {
    fn zero_like(&self) -> Self {
        Self::zero(self.precision())
    }
    fn one_like(&self) -> Self {
        Self::one(self.precision())
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
}

impl fmt::Display for TruncatedQSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mag = a.abs();
            if first {
                if a.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if a.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match (n, unit) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match n {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.precision() + 1)
    }
}
