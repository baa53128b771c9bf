//! Real-root counting with multiplicity via recursive Sturm sequences.
//!
//! Each level of the recursive PRS of `(p, p')` under the rule `(1, -1)`
//! contributes `V(lambda(L_k, -inf)) - V(lambda(L_k, +inf))` distinct
//! roots; the sum over all levels counts every real root as many times as
//! its multiplicity.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::poly::{Degree, Poly};
use crate::prs::{compute_prs, compute_recursive_prs, single_level_rprs, sturm_rule, Prs, RecursivePrs};

/// Endpoint at which leading-coefficient signs are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    MinusInfinity,
    PlusInfinity,
}

/// Sequence of nonzero rationals whose sign changes drive the count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignSequence {
    values: Vec<Rational>,
}

impl SignSequence {
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Leading-coefficient sequence of a PRS level at an infinite endpoint:
/// the leading coefficients themselves at `+inf`, each multiplied by
/// `(-1)^degree` at `-inf`.
pub fn lambda_at_infinity(level: &Prs, endpoint: Endpoint) -> SignSequence {
    let values = level
        .elements()
        .iter()
        .map(|p| {
            let lc = p.lc().expect("PRS elements are nonzero").clone();
            match endpoint {
                Endpoint::PlusInfinity => lc,
                Endpoint::MinusInfinity => {
                    let deg = p.degree().finite().expect("nonzero");
                    if deg % 2 == 1 {
                        -lc
                    } else {
                        lc
                    }
                }
            }
        })
        .collect();
    SignSequence { values }
}

/// Number of adjacent sign changes.
pub fn sign_variations(s: &SignSequence) -> Result<usize> {
    if s.values.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok(s
        .values
        .windows(2)
        .filter(|w| w[0].is_positive() != w[1].is_positive())
        .count())
}

/// Per-level breakdown of a root count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootCountReport {
    pub total: usize,
    /// `V(lambda(L_k, -inf)) - V(lambda(L_k, +inf))` per level.
    pub per_level: Vec<i64>,
}

fn recursive_sturm(p: &Poly) -> Result<RecursivePrs> {
    let dp = p.derivative();
    match p.degree() {
        Degree::NegInf | Degree::Finite(0) => Err(Error::ConstantInput),
        Degree::Finite(1) => {
            // the derivative is already constant, so the whole recursive
            // sequence is the single two-element level (p, p')
            let level = compute_prs(p, &dp, &sturm_rule())?;
            Ok(single_level_rprs(level, 1))
        }
        Degree::Finite(_) => compute_recursive_prs(p, &dp, &sturm_rule()),
    }
}

/// Counts the real roots of `p` with multiplicity, with the per-level
/// contributions of the recursive Sturm sequence.
pub fn count_real_roots_detailed(p: &Poly) -> Result<RootCountReport> {
    let rprs = recursive_sturm(p)?;
    let mut per_level = Vec::with_capacity(rprs.t());
    let mut total: i64 = 0;
    for level in rprs.levels() {
        let at_minus = sign_variations(&lambda_at_infinity(level, Endpoint::MinusInfinity))?;
        let at_plus = sign_variations(&lambda_at_infinity(level, Endpoint::PlusInfinity))?;
        let contribution = at_minus as i64 - at_plus as i64;
        per_level.push(contribution);
        total += contribution;
    }
    let total = usize::try_from(total).expect("Sturm contributions sum to a nonnegative count");
    Ok(RootCountReport { total, per_level })
}

/// Number of real roots of `p` counted with multiplicity.
/// Requires `deg(p) >= 1`.
pub fn count_real_roots_with_multiplicity(p: &Poly) -> Result<usize> {
    count_real_roots_detailed(p).map(|r| r.total)
}
