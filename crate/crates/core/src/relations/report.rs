//! Relation search and reduction to a given set of generators.

use num_traits::Zero;
use serde::Serialize;

use super::dims::{series_rows, Generator, STABILITY_MARGIN};
use super::linalg::{combine_rows, left_kernel, CoeffMatrix};
use crate::arith::Rational;
use crate::brackets::eval_lincomb;
use crate::error::Result;
use crate::words::{BiLinComb, LinComb};

fn ser_terms<S: serde::Serializer>(
    v: &[Vec<(String, Rational)>],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let text: Vec<Vec<(String, String)>> = v
        .iter()
        .map(|r| r.iter().map(|(l, c)| (l.clone(), c.to_string())).collect())
        .collect();
    serde::Serialize::serialize(&text, s)
}

/// Linear relations among generators, found from `N + 1` coefficients.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RelationReport {
    pub precision: usize,
    /// Labels of the generators kept as a basis.
    pub basis: Vec<String>,
    /// Each relation as `(label, coefficient)` pairs summing to zero.
    #[serde(serialize_with = "ser_terms")]
    pub kernel: Vec<Vec<(String, Rational)>>,
    /// Rank after all generators of weight `<= k`, index = weight.
    pub filtered_ranks: Vec<usize>,
    /// Every relation also holds with sixteen more coefficients and the
    /// kernel dimension does not change there.
    pub stable: bool,
    /// Every relation, rebuilt as a bi-bracket combination and evaluated
    /// afresh, is the zero series.
    pub audited: bool,
}

impl RelationReport {
    /// Relation `i` as a bi-bracket combination, given the generators the
    /// report was built from.
    pub fn relation(&self, gens: &[Generator], i: usize) -> BiLinComb {
        let mut out = LinComb::zero();
        for (label, c) in &self.kernel[i] {
            let g = gens
                .iter()
                .find(|g| &g.label == label)
                .expect("label from these generators");
            out.add_scaled(&g.combination, c);
        }
        out
    }
}

fn matrix(gens: &[Generator], precision: usize) -> CoeffMatrix {
    CoeffMatrix::new(
        gens.iter().map(|g| g.label.clone()).collect(),
        series_rows(gens, precision),
    )
}

/// All linear relations among `gens` visible in `N + 1` coefficients.
pub fn find_relations(gens: &[Generator], precision: usize) -> Result<RelationReport> {
    let k_max = gens.iter().map(|g| g.weight).max().unwrap_or(0);
    super::dims::check_precision(precision, k_max)?;
    let m = matrix(gens, precision);
    let (pivots, kernel) = left_kernel(&m);

    let mut filtered_ranks = vec![0; k_max as usize + 1];
    for &p in &pivots {
        filtered_ranks[gens[p].weight as usize] += 1;
    }
    for k in 1..filtered_ranks.len() {
        filtered_ranks[k] += filtered_ranks[k - 1];
    }

    let bigger = matrix(gens, precision + STABILITY_MARGIN);
    let (_, kernel_check) = left_kernel(&bigger);
    let stable = kernel_check.len() == kernel.len()
        && kernel
            .iter()
            .all(|v| combine_rows(&bigger, v).iter().all(Zero::is_zero));

    let labelled: Vec<Vec<(String, Rational)>> = kernel
        .iter()
        .map(|v| {
            v.iter()
                .zip(gens)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, g)| (g.label.clone(), c.clone()))
                .collect()
        })
        .collect();
    let mut report = RelationReport {
        precision,
        basis: pivots.iter().map(|&p| gens[p].label.clone()).collect(),
        kernel: labelled,
        filtered_ranks,
        stable,
        audited: false,
    };
    report.audited = (0..report.kernel.len())
        .all(|i| eval_lincomb(&report.relation(gens, i), precision).is_zero());
    Ok(report)
}

/// Outcome of [`express_in_basis`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Expression {
    pub precision: usize,
    /// Coefficients of the generators, or `None` if the target is
    /// independent of them.
    #[serde(serialize_with = "ser_opt")]
    pub coefficients: Option<Vec<Rational>>,
    /// The answer is unchanged with sixteen more coefficients.
    pub stable: bool,
}

fn ser_opt<S: serde::Serializer>(
    v: &Option<Vec<Rational>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let text: Option<Vec<String>> = v
        .as_ref()
        .map(|v| v.iter().map(|c| c.to_string()).collect());
    serde::Serialize::serialize(&text, s)
}

impl Expression {
    pub fn is_independent(&self) -> bool {
        self.coefficients.is_none()
    }
}

/// Writes `target` as a rational combination of `generators`, matching
/// `N + 1` coefficients. Dependent generators get coefficient zero, so
/// the answer is unique once the generators are independent. A returned
/// combination always reproduces the target at precision `N`; `stable`
/// records whether it still does with sixteen more coefficients.
pub fn express_in_basis(
    target: &BiLinComb,
    generators: &[BiLinComb],
    precision: usize,
) -> Expression {
    let solve = |n: usize| -> Option<Vec<Rational>> {
        let mut rows: Vec<Vec<Rational>> = generators
            .iter()
            .map(|g| eval_lincomb(g, n).coeffs().to_vec())
            .collect();
        rows.push(eval_lincomb(target, n).coeffs().to_vec());
        let m = CoeffMatrix::from_rows(rows);
        let (pivots, kernel) = left_kernel(&m);
        let t = generators.len();
        if pivots.contains(&t) {
            return None;
        }
        // the kernel vector with its free one in the target position
        let v = kernel
            .into_iter()
            .find(|v| !v[t].is_zero() && v[t] == Rational::from_integer(1.into()))?;
        Some(v[..t].iter().map(|c| -c).collect())
    };
    let verify = |c: &[Rational], n: usize| {
        let mut acc = LinComb::zero();
        for (g, a) in generators.iter().zip(c) {
            acc.add_scaled(g, a);
        }
        eval_lincomb(&(&acc - target), n).is_zero()
    };
    let coefficients = solve(precision);
    let stable = match &coefficients {
        Some(c) => {
            debug_assert!(verify(c, precision));
            verify(c, precision + STABILITY_MARGIN)
        }
        // independence persists at higher precision
        None => true,
    };
    Expression {
        precision,
        coefficients,
        stable,
    }
}
