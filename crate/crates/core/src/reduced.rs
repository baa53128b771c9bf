//! Reduced nested subresultant matrices and polynomials.
//!
//! Every entry of the nested matrix at level `k` is a bordered determinant
//! sharing the block `(U^{(k)} | v^{(k)})`; eliminating the shared border
//! against `U^{(k)}` flattens each entry to a scalar `h` with
//! `H_{p,q} = |U^{(k)}| h_{p,q}`. The reduced matrix collects the `h`
//! values and shrinks to `I_{k,j} x J_{k,j}`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{RatMatrix, Rational, RowSystemSolver};
use crate::poly::Poly;
use crate::prs::RecursivePrs;
use crate::recsubres::validate_pair;
use crate::subres::{band_matrix, coeffs_desc, determinant_polynomial};

/// Border data of level `k >= 2`, extracted from the previous level's
/// reduced matrix. `U` is factored exactly once per level; every bottom row
/// is then solved against it.
#[derive(Debug, Clone)]
pub struct BorderSystem {
    /// Level `k` the border belongs to.
    pub level: usize,
    /// Square border block `U^{(k)}`.
    pub u: RatMatrix,
    /// Border column `v^{(k)}`.
    pub v: Vec<Rational>,
    /// `|U^{(k)}|`.
    pub u_det: Rational,
    /// Previous-level coefficient determinants `A-hat^{(k-1)}(x)`.
    pub prev_coeffs: Poly,
    /// Eliminated coefficients `h(x)`: each bordered entry satisfies
    /// `H_{p,q} = |U^{(k)}| h_{p,q}`.
    pub reduced_coeffs: Poly,
    /// Formal degree `j_{k-1}` of both coefficient polynomials.
    pub formal_degree: usize,
}

impl BorderSystem {
    /// The bordered-entry matrix `H^{(k,j)}`, built from the previous
    /// level's coefficient determinants and their derivative. Each of its
    /// entries equals `|U^{(k)}|` times the matching reduced entry.
    pub fn bordered_matrix(&self, j: usize) -> Result<RatMatrix> {
        if j + 2 > self.formal_degree {
            return Err(Error::IndexOutOfRange(format!(
                "degree j = {j} out of range for formal degree {}",
                self.formal_degree
            )));
        }
        Ok(band_matrix(
            &coeffs_desc(&self.prev_coeffs, self.formal_degree),
            &coeffs_desc(&self.prev_coeffs.derivative(), self.formal_degree - 1),
            j,
        ))
    }
}

/// The `(k, j)`-th reduced nested subresultant matrix.
#[derive(Debug, Clone)]
pub struct ReducedNestedMatrix {
    matrix: RatMatrix,
    k: usize,
    j: usize,
    u_det: Rational,
}

impl ReducedNestedMatrix {
    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn level(&self) -> usize {
        self.k
    }

    pub fn j(&self) -> usize {
        self.j
    }

    /// `|U^{(k)}|` used in the elimination (`1` at level 1, where the
    /// matrix is the plain subresultant matrix and nothing is eliminated).
    pub fn u_det(&self) -> &Rational {
        &self.u_det
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.matrix.rows(), self.matrix.cols())
    }
}

/// Builds the border system of one level from the previous level's reduced
/// matrix (`rows = cols + j_prev`).
fn border_for_level(prev: &RatMatrix, j_prev: usize, level: usize) -> Result<BorderSystem> {
    let (rows, cols) = (prev.rows(), prev.cols());
    debug_assert_eq!(rows, cols + j_prev);
    let upper_rows: Vec<usize> = (0..cols - 1).collect();
    let all_cols: Vec<usize> = (0..cols).collect();
    let upper = prev.submatrix(&upper_rows, &all_cols)?;
    let u = upper.submatrix(&upper_rows, &(0..cols - 1).collect::<Vec<_>>())?;
    let v: Vec<Rational> = (0..cols - 1).map(|r| upper[(r, cols - 1)].clone()).collect();
    let u_det = u.det()?;
    let solver = RowSystemSolver::new(&u).map_err(|e| match e {
        Error::SingularMatrix => Error::SingularU { level },
        other => other,
    })?;
    let mut prev_coeffs = vec![Rational::zero(); j_prev + 1];
    let mut reduced = vec![Rational::zero(); j_prev + 1];
    for tau in 0..=j_prev {
        let bottom = rows - 1 - tau;
        let mut sel = upper_rows.clone();
        sel.push(bottom);
        prev_coeffs[tau] = prev.submatrix(&sel, &all_cols)?.det()?;
        let b: Vec<Rational> = (0..cols - 1).map(|c| prev[(bottom, c)].clone()).collect();
        let g = prev[(bottom, cols - 1)].clone();
        if b.iter().all(Rational::is_zero) && g.is_zero() {
            continue; // zero entries eliminate to zero
        }
        let x = solver.solve(&b)?;
        let mut h = g;
        for (xi, vi) in x.iter().zip(&v) {
            h += xi * vi;
        }
        reduced[tau] = h;
    }
    Ok(BorderSystem {
        level,
        u,
        v,
        u_det,
        prev_coeffs: Poly::new(prev_coeffs),
        reduced_coeffs: Poly::new(reduced),
        formal_degree: j_prev,
    })
}

/// Border systems for levels `2..=upto`, built in order; each level's
/// reduced matrix feeds the next border.
pub(crate) fn border_chain(rprs: &RecursivePrs, upto: usize) -> Result<Vec<BorderSystem>> {
    let mut chain: Vec<BorderSystem> = Vec::new();
    for level in 2..=upto {
        validate_pair(rprs, level - 1, rprs.j(level - 1))?;
        let j_prev = rprs.j(level - 1);
        let prev_mat = if level == 2 {
            band_matrix(
                &coeffs_desc(rprs.f(), rprs.m()),
                &coeffs_desc(rprs.g(), rprs.n()),
                j_prev,
            )
        } else {
            let prev_border = chain.last().expect("level >= 3 has a predecessor");
            band_matrix(
                &coeffs_desc(&prev_border.reduced_coeffs, prev_border.formal_degree),
                &coeffs_desc(
                    &prev_border.reduced_coeffs.derivative(),
                    prev_border.formal_degree - 1,
                ),
                j_prev,
            )
        };
        chain.push(border_for_level(&prev_mat, j_prev, level)?);
    }
    Ok(chain)
}

/// Border system of level `k >= 2`.
pub fn border_system(rprs: &RecursivePrs, k: usize) -> Result<BorderSystem> {
    if k < 2 || k > rprs.t() {
        return Err(Error::IndexOutOfRange(format!(
            "border system needs 2 <= k <= {}, got {k}",
            rprs.t()
        )));
    }
    Ok(border_chain(rprs, k)?.pop().expect("chain reaches k"))
}

/// Builds the `(k, j)`-th reduced nested subresultant matrix.
pub fn reduced_nested_matrix(rprs: &RecursivePrs, k: usize, j: usize) -> Result<ReducedNestedMatrix> {
    validate_pair(rprs, k, j)?;
    if k == 1 {
        return Ok(ReducedNestedMatrix {
            matrix: band_matrix(
                &coeffs_desc(rprs.f(), rprs.m()),
                &coeffs_desc(rprs.g(), rprs.n()),
                j,
            ),
            k,
            j,
            u_det: Rational::one(),
        });
    }
    let border = border_system(rprs, k)?;
    let matrix = band_matrix(
        &coeffs_desc(&border.reduced_coeffs, border.formal_degree),
        &coeffs_desc(&border.reduced_coeffs.derivative(), border.formal_degree - 1),
        j,
    );
    Ok(ReducedNestedMatrix {
        matrix,
        k,
        j,
        u_det: border.u_det,
    })
}

/// The `(k, j)`-th reduced nested subresultant polynomial.
pub fn reduced_nested_poly(rprs: &RecursivePrs, k: usize, j: usize) -> Result<Poly> {
    let built = reduced_nested_matrix(rprs, k, j)?;
    determinant_polynomial(&built.matrix, j)
}

/// Extracts the `(k, j)`-th reduced matrix from the `(k, 0)`-th one: the
/// left `n_2^{(k)} - j` coefficient columns, the left `n_1^{(k)} - j`
/// derivative columns, and the top `n_1^{(k)} + n_2^{(k)} - j` rows.
pub fn reduced_from_k0(rprs: &RecursivePrs, k: usize, j: usize) -> Result<ReducedNestedMatrix> {
    validate_pair(rprs, k, j)?;
    let full = reduced_nested_matrix(rprs, k, 0)?;
    let (n1, n2) = if k == 1 {
        (rprs.m(), rprs.n())
    } else {
        (rprs.j(k - 1), rprs.j(k - 1) - 1)
    };
    let rows: Vec<usize> = (0..n1 + n2 - j).collect();
    let mut cols: Vec<usize> = (0..n2 - j).collect();
    cols.extend(n2..n2 + (n1 - j));
    Ok(ReducedNestedMatrix {
        matrix: full.matrix.submatrix(&rows, &cols)?,
        k,
        j,
        u_det: full.u_det,
    })
}
