//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored by ascending power with the leading coefficient
//! nonzero; the zero polynomial stores no coefficients and has the
//! distinguished degree [`Degree::NegInf`].

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Degree of a polynomial: either a number or the sentinel for zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    /// Degree of the zero polynomial.
    NegInf,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }

    pub fn is_neg_inf(self) -> bool {
        matches!(self, Degree::NegInf)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

impl From<usize> for Degree {
    fn from(d: usize) -> Self {
        Degree::Finite(d)
    }
}

/// Coefficient column of a polynomial, highest power first, zero-padded at
/// the top to a declared degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffVector {
    entries: Vec<Rational>,
}

impl CoeffVector {
    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn into_vec(self) -> Vec<Rational> {
        self.entries
    }
}

/// Dense univariate polynomial over [`Rational`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    /// Builds a polynomial from ascending-power coefficients, trimming
    /// leading zeros into canonical form.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^power`.
    pub fn monomial(c: Rational, power: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    /// Ascending-power integer coefficients, for tests and examples.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| crate::exact::int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            n => Degree::Finite(n - 1),
        }
    }

    /// Leading coefficient; errors on the zero polynomial.
    pub fn lc(&self) -> Result<&Rational> {
        self.coeffs.last().ok_or(Error::ZeroPolynomial)
    }

    /// Coefficient of `x^power` (zero beyond the stored length).
    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs.get(power).cloned().unwrap_or_else(Rational::zero)
    }

    /// Ascending-power coefficients, leading coefficient last.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division: `self = quotient * divisor + remainder` with
    /// `deg(remainder) < deg(divisor)`, exact over the rationals.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dlc = divisor.lc().map_err(|_| Error::DivisionByZeroPoly)?.clone();
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(ddeg)];
        while rem.len() > ddeg || (ddeg == 0 && !rem.is_empty()) {
            let shift = rem.len() - 1 - ddeg;
            let factor = rem.last().expect("nonempty") / &dlc;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                let t = &factor * d;
                rem[shift + i] -= t;
            }
            quot[shift] = factor;
            while rem.last().is_some_and(Rational::is_zero) {
                rem.pop();
            }
            if rem.is_empty() {
                break;
            }
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Coefficient column of length `declared_degree + 1`, highest power
    /// first, zero-padded at the top.
    pub fn coeff_vector(&self, declared_degree: usize) -> Result<CoeffVector> {
        if let Degree::Finite(d) = self.degree() {
            if declared_degree < d {
                return Err(Error::DegreeTooSmall {
                    declared: declared_degree,
                    actual: d,
                });
            }
        }
        let mut entries = Vec::with_capacity(declared_degree + 1);
        for power in (0..=declared_degree).rev() {
            entries.push(self.coeff(power));
        }
        Ok(CoeffVector { entries })
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Poly::new(out)
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}
