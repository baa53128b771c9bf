//! Exact rational scalars and dense rational matrices.
//!
//! Determinants are evaluated by single-step fraction-free Bareiss
//! elimination (the two-by-two minor recurrence obtained from Sylvester's
//! identity) with first-nonzero-pivot row search. Over the rationals every
//! step is exact; over integer inputs every intermediate division is exact
//! as well, which [`RatMatrix::det_traced`] makes observable.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational scalar, always stored canonically reduced
/// with a positive denominator (zero is `0/1`).
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `n/d`, reduced on construction. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `base^exp` for a signed exponent. `base` must be nonzero when `exp < 0`.
pub fn pow_i(base: &Rational, exp: i64) -> Rational {
    let mut acc = Rational::one();
    let mut sq = base.clone();
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &sq;
        }
        sq = &sq * &sq;
        e >>= 1;
    }
    if exp < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// `(-1)^exp` as a rational.
pub fn sign_pow(exp: usize) -> Rational {
    if exp.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Record of one Bareiss elimination run.
#[derive(Debug, Clone, Copy, Default)]
pub struct BareissTrace {
    /// Number of two-by-two minor divisions performed.
    pub divisions: u64,
    /// All input entries were integers.
    pub inputs_integer: bool,
    /// Every division whose dividend and divisor were integers produced an
    /// integer quotient. Vacuously true when no such division occurred.
    pub divisions_exact: bool,
}

/// Dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows. Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Selected submatrix; both selections must be strictly increasing and
    /// in range. Order is preserved.
    pub fn submatrix(&self, row_sel: &[usize], col_sel: &[usize]) -> Result<RatMatrix> {
        check_selection(row_sel, self.rows, "row")?;
        check_selection(col_sel, self.cols, "column")?;
        Ok(Self::from_fn(row_sel.len(), col_sel.len(), |r, c| {
            self[(row_sel[r], col_sel[c])].clone()
        }))
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    /// The empty matrix has determinant 1.
    pub fn det(&self) -> Result<Rational> {
        self.det_traced().map(|(d, _)| d)
    }

    /// Determinant plus a trace of the elimination's division behaviour.
    pub fn det_traced(&self) -> Result<(Rational, BareissTrace)> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut trace = BareissTrace {
            divisions: 0,
            inputs_integer: self.entries.iter().all(Rational::is_integer),
            divisions_exact: true,
        };
        if n == 0 {
            return Ok((Rational::one(), trace));
        }
        let mut a = self.entries.clone();
        let mut negated = false;
        let mut prev_pivot = Rational::one();
        for k in 0..n - 1 {
            let pivot = match (k..n).find(|&r| !a[r * n + k].is_zero()) {
                Some(p) => p,
                None => return Ok((Rational::zero(), trace)),
            };
            if pivot != k {
                for c in 0..n {
                    a.swap(k * n + c, pivot * n + c);
                }
                negated = !negated;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let minor = &a[k * n + k] * &a[i * n + j] - &a[i * n + k] * &a[k * n + j];
                    trace.divisions += 1;
                    let quot = &minor / &prev_pivot;
                    if minor.is_integer() && prev_pivot.is_integer() && !quot.is_integer() {
                        trace.divisions_exact = false;
                    }
                    a[i * n + j] = quot;
                }
                a[i * n + k] = Rational::zero();
            }
            prev_pivot = a[k * n + k].clone();
        }
        let last = a[n * n - 1].clone();
        Ok((if negated { -last } else { last }, trace))
    }

    /// Solves the row-vector system `x * self = -b` exactly.
    pub fn solve_row_system(&self, b: &[Rational]) -> Result<Vec<Rational>> {
        RowSystemSolver::new(self)?.solve(b)
    }
}

fn check_selection(sel: &[usize], bound: usize, what: &str) -> Result<()> {
    for pair in sel.windows(2) {
        if pair[0] >= pair[1] {
            return Err(Error::IndexOutOfRange(format!(
                "{what} selection is not strictly increasing"
            )));
        }
    }
    if let Some(&last) = sel.last() {
        if last >= bound {
            return Err(Error::IndexOutOfRange(format!(
                "{what} index {last} out of range (size {bound})"
            )));
        }
    }
    Ok(())
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.entries[r * self.cols + c]
    }
}

/// Inverse-based solver for row-vector systems `x * U = -b` that factors
/// `U` exactly once and then answers each right-hand side in O(n^2).
#[derive(Debug, Clone)]
pub struct RowSystemSolver {
    inv: RatMatrix,
}

impl RowSystemSolver {
    pub fn new(u: &RatMatrix) -> Result<Self> {
        if !u.is_square() {
            return Err(Error::NonSquare {
                rows: u.rows,
                cols: u.cols,
            });
        }
        Ok(Self { inv: invert(u)? })
    }

    pub fn order(&self) -> usize {
        self.inv.rows()
    }

    /// Returns `x` with `x * U = -b`.
    pub fn solve(&self, b: &[Rational]) -> Result<Vec<Rational>> {
        let n = self.order();
        if b.len() != n {
            return Err(Error::IndexOutOfRange(format!(
                "right-hand side length {} does not match system order {n}",
                b.len()
            )));
        }
        let mut x = vec![Rational::zero(); n];
        for (i, bi) in b.iter().enumerate() {
            if bi.is_zero() {
                continue;
            }
            for (j, xj) in x.iter_mut().enumerate() {
                *xj -= bi * &self.inv[(i, j)];
            }
        }
        Ok(x)
    }
}

/// Gauss-Jordan inverse with partial pivoting on the largest entry.
fn invert(u: &RatMatrix) -> Result<RatMatrix> {
    let n = u.rows();
    let mut a = u.clone();
    let mut inv = RatMatrix::identity(n);
    for k in 0..n {
        let pivot = (k..n)
            .filter(|&r| !a[(r, k)].is_zero())
            .max_by(|&r, &s| a[(r, k)].abs().cmp(&a[(s, k)].abs()))
            .ok_or(Error::SingularMatrix)?;
        if pivot != k {
            for c in 0..n {
                let (x, y) = (a[(k, c)].clone(), a[(pivot, c)].clone());
                a[(k, c)] = y;
                a[(pivot, c)] = x;
                let (x, y) = (inv[(k, c)].clone(), inv[(pivot, c)].clone());
                inv[(k, c)] = y;
                inv[(pivot, c)] = x;
            }
        }
        let scale = a[(k, k)].clone().recip();
        for c in 0..n {
            a[(k, c)] *= &scale;
            inv[(k, c)] *= &scale;
        }
        for r in 0..n {
            if r == k || a[(r, k)].is_zero() {
                continue;
            }
            let f = a[(r, k)].clone();
            for c in 0..n {
                let t = &f * &a[(k, c)];
                a[(r, c)] -= t;
                let t = &f * &inv[(k, c)];
                inv[(r, c)] -= t;
            }
        }
    }
    Ok(inv)
}
