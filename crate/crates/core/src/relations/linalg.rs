//! Exact elimination over the rationals.
//!
//! Rows are scaled to primitive integer vectors and reduced fraction-free,
//! so no intermediate ever carries a denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::Rational;

/// A labelled matrix of exact coefficients, one row per generator.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoeffMatrix {
    labels: Vec<String>,
    #[serde(serialize_with = "ser_rows")]
    rows: Vec<Vec<Rational>>,
    ncols: usize,
}

fn ser_rows<S: serde::Serializer>(rows: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
    let text: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(|c| c.to_string()).collect())
        .collect();
    serde::Serialize::serialize(&text, s)
}

impl CoeffMatrix {
    /// Panics if labels repeat or row lengths differ.
    pub fn new(labels: Vec<String>, rows: Vec<Vec<Rational>>) -> Self {
        assert_eq!(labels.len(), rows.len(), "one label per row");
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
        let mut seen = std::collections::HashSet::new();
        assert!(
            labels.iter().all(|l| seen.insert(l.clone())),
            "duplicate row label"
        );
        Self {
            labels,
            rows,
            ncols,
        }
    }

    /// Unlabelled matrix; rows are named by their index.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let labels = (0..rows.len()).map(|i| i.to_string()).collect();
        Self::new(labels, rows)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    fn transpose(&self) -> Vec<Vec<Rational>> {
        (0..self.ncols)
            .map(|j| self.rows.iter().map(|r| r[j].clone()).collect())
            .collect()
    }
}

/// Clears denominators and divides out the content; the result spans the
/// same line as `row`.
pub(crate) fn primitive(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = row.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    make_primitive(ints)
}

fn make_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in &mut v {
            *c /= &g;
        }
    }
    v
}

/// Row echelon form grown one row at a time. Used wherever only ranks are
/// needed, so each new row costs one reduction against the pivots so far.
#[derive(Clone, Debug, Default)]
pub struct IncrementalEchelon {
    // sorted by pivot column; each row is zero left of its pivot
    pivots: Vec<(usize, Vec<BigInt>)>,
}

impl IncrementalEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, row: &[Rational]) -> bool {
        self.insert_int(primitive(row))
    }

    pub(crate) fn insert_int(&mut self, mut row: Vec<BigInt>) -> bool {
        for (pc, p) in &self.pivots {
            let c = &row[*pc];
            if c.is_zero() {
                continue;
            }
            let (a, b) = (p[*pc].clone(), c.clone());
            // columns left of the pivot are zero in p but not in row
            for (x, y) in row.iter_mut().zip(p) {
                *x = &*x * &a - &b * y;
            }
            row = make_primitive(row);
        }
        match row.iter().position(|c| !c.is_zero()) {
            None => false,
            Some(pc) => {
                if row[pc].is_negative() {
                    row.iter_mut().for_each(|c| *c = -&*c);
                }
                let at = self.pivots.partition_point(|(q, _)| *q < pc);
                self.pivots.insert(at, (pc, row));
                true
            }
        }
    }
}

/// Fraction-free (Bareiss) forward elimination with first-nonzero pivoting.
/// Returns the pivot columns; `a` is left in echelon form.
fn bareiss(a: &mut [Vec<BigInt>]) -> Vec<usize> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in (r + 1)..nrows {
            for j in (c + 1)..ncols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of `m` and a basis of its left kernel: the vectors `c` with
/// `sum_i c_i row_i = 0`. Each basis vector has a one in a distinct free
/// position and zeros in the other free positions.
pub fn rank_kernel(m: &CoeffMatrix) -> (usize, Vec<Vec<Rational>>) {
    let (pivots, kernel) = left_kernel(m);
    (pivots.len(), kernel)
}

/// The rows chosen as a basis (the first independent ones, in order) and
/// the left kernel in the normal form of [`rank_kernel`].
pub(crate) fn left_kernel(m: &CoeffMatrix) -> (Vec<usize>, Vec<Vec<Rational>>) {
    let g = m.nrows();
    // left kernel of m is the right kernel of its transpose
    let mut a: Vec<Vec<BigInt>> = m.transpose().iter().map(|r| primitive(r)).collect();
    let pivots = bareiss(&mut a);
    let free: Vec<usize> = (0..g).filter(|c| !pivots.contains(c)).collect();
    let mut kernel = Vec::with_capacity(free.len());
    for &f in &free {
        let mut x = vec![Rational::zero(); g];
        x[f] = Rational::one();
        for (i, &pc) in pivots.iter().enumerate().rev() {
            let mut acc = Rational::zero();
            for j in (pc + 1)..g {
                if !x[j].is_zero() && !a[i][j].is_zero() {
                    acc += Rational::from_integer(a[i][j].clone()) * &x[j];
                }
            }
            x[pc] = -acc / Rational::from_integer(a[i][pc].clone());
        }
        kernel.push(x);
    }
    (pivots, kernel)
}

/// Applies a left-kernel candidate to the rows.
pub fn combine_rows(m: &CoeffMatrix, c: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); m.ncols()];
    for (row, a) in m.rows().iter().zip(c) {
        if a.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(row) {
            *o += a * x;
        }
    }
    out
}
