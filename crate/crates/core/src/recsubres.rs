//! Recursive subresultant matrices and polynomials, their closed-form
//! sizes, and the ledger of scale constants tying the four subresultant
//! families together.
//!
//! The `(k, j)`-th recursive subresultant matrix is assembled from the
//! previous level's matrix: a diagonal of upper blocks over a staircase of
//! lower blocks, where the scaled lower blocks encode differentiation.

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{pow_i, sign_pow, RatMatrix, Rational};
use crate::poly::Poly;
use crate::prs::RecursivePrs;
use crate::reduced;
use crate::subres::{band_matrix, coeffs_desc, determinant_polynomial, fundamental_theorem_factor, FundamentalMode};

/// Checks that levels `1..=upto` admit subresultant matrices: level 1 needs
/// `j_1 < n`, deeper levels need the gcd degree to drop by at least two.
pub(crate) fn validate_chain(rprs: &RecursivePrs, upto: usize) -> Result<()> {
    for l in 1..=upto {
        let ok = if l == 1 {
            rprs.j(1) < rprs.n()
        } else {
            rprs.j(l) + 2 <= rprs.j(l - 1)
        };
        if !ok {
            return Err(Error::IndexOutOfRange(format!(
                "level {l} ends at degree j_{l} = {} with j_{} = {}; the level-{} matrices are undefined",
                rprs.j(l),
                l - 1,
                if l == 1 { rprs.n() } else { rprs.j(l - 1) },
                l + 1
            )));
        }
    }
    Ok(())
}

/// Validates the pair `(k, j)`: `1 <= k <= t`, the chain below `k` is
/// constructible, and `j` lies in the level's admissible range
/// (`j < n` for `k = 1`, `j <= j_{k-1} - 2` for `k >= 2`).
pub(crate) fn validate_pair(rprs: &RecursivePrs, k: usize, j: usize) -> Result<()> {
    if !rprs.is_complete() {
        return Err(Error::IncompletePrs);
    }
    if k == 0 || k > rprs.t() {
        return Err(Error::IndexOutOfRange(format!(
            "level k = {k} outside 1..={}",
            rprs.t()
        )));
    }
    validate_chain(rprs, k - 1)?;
    let ok = if k == 1 {
        j < rprs.n()
    } else {
        j + 2 <= rprs.j(k - 1)
    };
    if !ok {
        return Err(Error::IndexOutOfRange(format!(
            "degree j = {j} out of range for level {k}"
        )));
    }
    Ok(())
}

/// Block structure of an assembled recursive subresultant matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockLayout {
    /// Diagonal copies of the previous level's upper block (`2j_{k-1}-2j-1`).
    pub diagonal_copies: usize,
    /// Rows of each diagonal block.
    pub diagonal_rows: usize,
    /// Columns of every block (columns of the previous-level matrix).
    pub block_cols: usize,
    /// Copies of the plain lower block (`j_{k-1} - j - 1`).
    pub plain_lower_copies: usize,
    /// Copies of the row-scaled lower block (`j_{k-1} - j`).
    pub scaled_lower_copies: usize,
    /// First row of the lower staircase.
    pub lower_start: usize,
    /// Rows of the lower staircase (`2j_{k-1} - j - 1`).
    pub lower_rows: usize,
}

/// The `(k, j)`-th recursive subresultant matrix.
#[derive(Debug, Clone)]
pub struct RecSubresMatrix {
    matrix: RatMatrix,
    k: usize,
    j: usize,
    /// Assembly metadata; `None` for `k = 1` where the matrix is the plain
    /// subresultant matrix of the inputs.
    layout: Option<BlockLayout>,
}

impl RecSubresMatrix {
    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn level(&self) -> usize {
        self.k
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn layout(&self) -> Option<&BlockLayout> {
        self.layout.as_ref()
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.matrix.rows(), self.matrix.cols())
    }
}

/// One assembly step: previous-level matrix (with `rows = cols + j_prev`)
/// to the level-up matrix at target degree `j`.
fn assemble(prev: &RatMatrix, j_prev: usize, j: usize) -> (RatMatrix, BlockLayout) {
    let (pr, pc) = (prev.rows(), prev.cols());
    debug_assert_eq!(pr, pc + j_prev);
    let upper_rows = pr - (j_prev + 1);
    let copies = 2 * j_prev - 2 * j - 1;
    let plain = j_prev - j - 1;
    let scaled = j_prev - j;
    let lower_rows = 2 * j_prev - j - 1;
    let lower_start = upper_rows * copies;
    let mut out = RatMatrix::zeros(lower_start + lower_rows, pc * copies);
    // diagonal of upper blocks
    for q in 0..copies {
        for r in 0..upper_rows {
            for c in 0..pc {
                out[(q * upper_rows + r, q * pc + c)] = prev[(r, c)].clone();
            }
        }
    }
    // staircase of plain lower blocks, each one row below its left neighbor
    for q in 0..plain {
        for r in 0..=j_prev {
            for c in 0..pc {
                out[(lower_start + q + r, q * pc + c)] = prev[(upper_rows + r, c)].clone();
            }
        }
    }
    // staircase of scaled lower blocks: row (j_prev + 1 - tau) of the lower
    // block multiplied by tau for tau = j_prev..1, bottom row dropped
    for q in 0..scaled {
        for r in 0..j_prev {
            let factor = Rational::from_integer(((j_prev - r) as i64).into());
            for c in 0..pc {
                out[(lower_start + q + r, (plain + q) * pc + c)] =
                    &prev[(upper_rows + r, c)] * &factor;
            }
        }
    }
    let layout = BlockLayout {
        diagonal_copies: copies,
        diagonal_rows: upper_rows,
        block_cols: pc,
        plain_lower_copies: plain,
        scaled_lower_copies: scaled,
        lower_start,
        lower_rows,
    };
    (out, layout)
}

/// Builds the `(k, j)`-th recursive subresultant matrix of the recursive
/// PRS inputs.
pub fn build_recsubres_matrix(rprs: &RecursivePrs, k: usize, j: usize) -> Result<RecSubresMatrix> {
    validate_pair(rprs, k, j)?;
    let f = rprs.f();
    let g = rprs.g();
    let fd = coeffs_desc(f, rprs.m());
    let gd = coeffs_desc(g, rprs.n());
    if k == 1 {
        return Ok(RecSubresMatrix {
            matrix: band_matrix(&fd, &gd, j),
            k,
            j,
            layout: None,
        });
    }
    let mut current = band_matrix(&fd, &gd, rprs.j(1));
    for l in 2..k {
        current = assemble(&current, rprs.j(l - 1), rprs.j(l)).0;
    }
    let (matrix, layout) = assemble(&current, rprs.j(k - 1), j);
    Ok(RecSubresMatrix {
        matrix,
        k,
        j,
        layout: Some(layout),
    })
}

/// Closed-form dimensions of the `(k, j)`-th recursive subresultant matrix,
/// computed from PRS metadata alone.
pub fn closed_form_size(rprs: &RecursivePrs, k: usize, j: usize) -> Result<(usize, usize)> {
    validate_pair(rprs, k, j)?;
    let (m, n) = (rprs.m(), rprs.n());
    if k == 1 {
        return Ok((m + n - j, m + n - 2 * j));
    }
    let mut cols = m + n - 2 * rprs.j(1);
    for l in 2..k {
        cols *= 2 * rprs.j(l - 1) - 2 * rprs.j(l) - 1;
    }
    cols *= 2 * rprs.j(k - 1) - 2 * j - 1;
    Ok((cols + j, cols))
}

/// The `(k, j)`-th recursive subresultant polynomial.
pub fn recsubres_poly(rprs: &RecursivePrs, k: usize, j: usize) -> Result<Poly> {
    let built = build_recsubres_matrix(rprs, k, j)?;
    determinant_polynomial(&built.matrix, j)
}

/// All scale constants of the equivalence theorems, computed exactly from
/// the recursive PRS. Constants tied to the reduced construction (`|U|`,
/// `B-hat`, `R-hat`) are filled as far as the level chain is constructible
/// and nonsingular; accessing one past that point reports the blocking
/// error.
#[derive(Debug, Clone)]
pub struct ScaleLedger {
    m: usize,
    n: usize,
    j_indices: Vec<usize>,
    /// `B_k` for `k = 1..=t-1` (index `k - 1`).
    big_b: Vec<Rational>,
    /// Running products, index `k` for `k = 0..=t-1`.
    r_bar: Vec<Rational>,
    r_tilde: Vec<Rational>,
    r_prime: Vec<Rational>,
    /// `|U^{(k)}|` for `k = 2..` (index `k - 2`), as far as computable.
    u_dets: Vec<Rational>,
    /// `B-hat_k` for `k = 1..` (index `k - 1`), as far as computable.
    b_hat: Vec<Rational>,
    /// `R-hat_k` for `k = 1..` (index `k - 1`), as far as computable.
    r_hat: Vec<Rational>,
    /// Why the reduced-chain constants stop where they do, if they stop.
    hat_error: Option<Error>,
}

impl ScaleLedger {
    pub fn t(&self) -> usize {
        self.j_indices.len() - 1
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn j(&self, k: usize) -> usize {
        self.j_indices[k]
    }

    fn out_of_range(&self, what: &str, k: usize) -> Error {
        Error::IndexOutOfRange(format!("{what} is not defined at level {k}"))
    }

    /// `B_k`, the fundamental-theorem factor closing level `k`
    /// (`S_{j_k}(P_1^{(k)}, P_2^{(k)}) = B_k P_{l_k}^{(k)}`), for
    /// `1 <= k <= t-1`.
    pub fn big_b(&self, k: usize) -> Result<Rational> {
        self.big_b
            .get(k.wrapping_sub(1))
            .cloned()
            .ok_or_else(|| self.out_of_range("B_k", k))
    }

    /// `b_{k,j} = 2 j_{k-1} - 2 j - 1`, with `b_{1,j} = 1`.
    pub fn b(&self, k: usize, j: usize) -> Result<usize> {
        if k == 0 || k > self.t() {
            return Err(self.out_of_range("b_{k,j}", k));
        }
        if k == 1 {
            return Ok(1);
        }
        if j >= self.j(k - 1) {
            return Err(Error::IndexOutOfRange(format!(
                "b_{{k,j}} needs j < j_{} = {}",
                k - 1,
                self.j(k - 1)
            )));
        }
        Ok(2 * self.j(k - 1) - 2 * j - 1)
    }

    /// `u_{k,j}`, the column count of the `(k, j)`-th recursive matrix.
    pub fn u(&self, k: usize, j: usize) -> Result<usize> {
        if k < 2 || k > self.t() {
            return Err(self.out_of_range("u_{k,j}", k));
        }
        let mut u = self.m + self.n - 2 * self.j(1);
        for l in 2..k {
            u *= 2 * self.j(l - 1) - 2 * self.j(l) - 1;
        }
        Ok(u * self.b(k, j)?)
    }

    /// `u_k = u_{k,j_k}` with the convention `u_1 = m + n - 2 j_1`.
    pub fn u_level(&self, k: usize) -> Result<usize> {
        if k == 1 {
            Ok(self.m + self.n - 2 * self.j(1))
        } else {
            self.u(k, self.j(k))
        }
    }

    /// `r_{k,j} = (-1)^{(u_{k-1} - 1)(1 + 2 + ... + (b_{k,j} - 1))}`,
    /// with `r_{1,j} = 1`.
    pub fn r(&self, k: usize, j: usize) -> Result<Rational> {
        if k == 1 {
            return Ok(Rational::one());
        }
        let b = self.b(k, j)?;
        let u_prev = self.u_level(k - 1)?;
        Ok(sign_pow((u_prev - 1) * (b * (b - 1) / 2)))
    }

    /// `R-bar_k` for `0 <= k <= t-1`.
    pub fn r_bar(&self, k: usize) -> Result<Rational> {
        self.r_bar
            .get(k)
            .cloned()
            .ok_or_else(|| self.out_of_range("R-bar_k", k))
    }

    /// `R-tilde_k` for `0 <= k <= t-1`.
    pub fn r_tilde(&self, k: usize) -> Result<Rational> {
        self.r_tilde
            .get(k)
            .cloned()
            .ok_or_else(|| self.out_of_range("R-tilde_k", k))
    }

    /// `R'_k` for `0 <= k <= t-1`; always a sign.
    pub fn r_prime(&self, k: usize) -> Result<Rational> {
        self.r_prime
            .get(k)
            .cloned()
            .ok_or_else(|| self.out_of_range("R'_k", k))
    }

    /// `|U^{(k)}|` for `k >= 2`.
    pub fn u_det(&self, k: usize) -> Result<Rational> {
        self.u_dets
            .get(k.wrapping_sub(2))
            .cloned()
            .ok_or_else(|| self.hat_missing(k))
    }

    /// `I_{k,j} x J_{k,j}`, the reduced matrix dimensions. For `k = 1`
    /// these are the plain subresultant matrix dimensions.
    pub fn reduced_dims(&self, k: usize, j: usize) -> Result<(usize, usize)> {
        if k == 1 {
            return Ok((self.m + self.n - j, self.m + self.n - 2 * j));
        }
        let b = self.b(k, j)?;
        Ok((b + j, b))
    }

    /// `B-hat_{k,j} = |U^{(k)}|^{J_{k,j}}` for `k >= 2`; `1` for `k = 1`.
    pub fn b_hat_kj(&self, k: usize, j: usize) -> Result<Rational> {
        if k == 1 {
            return Ok(Rational::one());
        }
        let j_dim = self.b(k, j)?;
        Ok(pow_i(&self.u_det(k)?, j_dim as i64))
    }

    /// `B-hat_k = B-hat_{k,j_k}` with `B-hat_1 = 1`.
    pub fn b_hat(&self, k: usize) -> Result<Rational> {
        self.b_hat
            .get(k.wrapping_sub(1))
            .cloned()
            .ok_or_else(|| self.hat_missing(k))
    }

    /// `R-hat_k = (R-hat_{k-1} B-hat_{k-1})^{J_{k,j_k}}` with `R-hat_1 = 1`.
    pub fn r_hat(&self, k: usize) -> Result<Rational> {
        self.r_hat
            .get(k.wrapping_sub(1))
            .cloned()
            .ok_or_else(|| self.hat_missing(k))
    }

    fn hat_missing(&self, k: usize) -> Error {
        self.hat_error
            .clone()
            .unwrap_or_else(|| self.out_of_range("reduced-chain constant", k))
    }
}

/// Computes the full scale ledger of a complete recursive PRS.
pub fn scale_ledger(rprs: &RecursivePrs) -> Result<ScaleLedger> {
    if !rprs.is_complete() {
        return Err(Error::IncompletePrs);
    }
    let t = rprs.t();
    let (m, n) = (rprs.m(), rprs.n());
    let j_indices = rprs.j_indices().to_vec();

    let mut big_b = Vec::new();
    for k in 1..t {
        let level = rprs.level(k);
        let l = level.len();
        let factor = if l == 2 {
            // two-element level: the product is empty and only the
            // c_2^{d_1 - 1} head remains
            pow_i(&level.c(2), level.d(1) as i64 - 1)
        } else {
            fundamental_theorem_factor(level, l, FundamentalMode::AtStepDegree)?
        };
        big_b.push(factor);
    }

    let mut ledger = ScaleLedger {
        m,
        n,
        j_indices,
        big_b,
        r_bar: vec![Rational::one()],
        r_tilde: vec![Rational::one()],
        r_prime: vec![Rational::one()],
        u_dets: Vec::new(),
        b_hat: vec![Rational::one()],
        r_hat: vec![Rational::one()],
        hat_error: None,
    };

    for k in 1..t {
        let b_k = ledger.b(k, ledger.j(k))? as i64;
        let r_k = ledger.r(k, ledger.j(k))?;
        let b_factor = ledger.big_b(k)?;
        let bar = pow_i(&ledger.r_bar(k - 1)?, b_k) * &r_k * &b_factor;
        let tilde = pow_i(&ledger.r_tilde(k - 1)?, b_k) * &b_factor;
        let prime = pow_i(&ledger.r_prime(k - 1)?, b_k) * &r_k;
        ledger.r_bar.push(bar);
        ledger.r_tilde.push(tilde);
        ledger.r_prime.push(prime);
    }

    // reduced-chain constants, as far as the chain exists
    match reduced::border_chain(rprs, t) {
        Ok(chain) => {
            for border in &chain {
                ledger.u_dets.push(border.u_det.clone());
            }
        }
        Err(err) => ledger.hat_error = Some(err),
    }
    for k in 2..=ledger.u_dets.len() + 1 {
        let j_dim = ledger.b(k, ledger.j(k))? as i64;
        let b_hat_k = pow_i(&ledger.u_det(k)?, j_dim);
        let r_hat_k = pow_i(&(ledger.r_hat(k - 1)? * ledger.b_hat(k - 1)?), j_dim);
        ledger.b_hat.push(b_hat_k);
        ledger.r_hat.push(r_hat_k);
    }
    Ok(ledger)
}
