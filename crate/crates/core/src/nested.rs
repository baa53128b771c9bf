//! Nested subresultant matrices and polynomials.
//!
//! The level-`k` nested subresultant matrix is the plain subresultant
//! matrix of the previous level's nested subresultant and its derivative,
//! so its entries are (numerically evaluated) determinants of the previous
//! level. Levels are evaluated to exact rationals one at a time; the
//! nesting survives only in how each level is built.

use crate::error::Result;
use crate::exact::RatMatrix;
use crate::poly::Poly;
use crate::prs::RecursivePrs;
use crate::recsubres::validate_pair;
use crate::subres::{band_matrix, coeffs_desc, determinant_polynomial};

/// The `(k, j)`-th nested subresultant matrix.
#[derive(Debug, Clone)]
pub struct NestedSubresMatrix {
    matrix: RatMatrix,
    k: usize,
    j: usize,
    /// Formal degree of the polynomial whose coefficients fill the columns
    /// (`j_{k-1}` for `k >= 2`, `m` for `k = 1`).
    formal_degree: usize,
}

impl NestedSubresMatrix {
    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn level(&self) -> usize {
        self.k
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn formal_degree(&self) -> usize {
        self.formal_degree
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.matrix.rows(), self.matrix.cols())
    }
}

/// Nested subresultants `S-tilde_{l, j_l}` for `l = 1..=upto`, the chain
/// that feeds each next level.
fn tilde_chain(rprs: &RecursivePrs, upto: usize) -> Result<Vec<Poly>> {
    let mut chain = Vec::with_capacity(upto);
    for l in 1..=upto {
        let mat = level_matrix(rprs, &chain, l, rprs.j(l))?;
        chain.push(determinant_polynomial(&mat.matrix, rprs.j(l))?);
    }
    Ok(chain)
}

fn level_matrix(
    rprs: &RecursivePrs,
    chain: &[Poly],
    k: usize,
    j: usize,
) -> Result<NestedSubresMatrix> {
    let (matrix, formal_degree) = if k == 1 {
        let fd = coeffs_desc(rprs.f(), rprs.m());
        let gd = coeffs_desc(rprs.g(), rprs.n());
        (band_matrix(&fd, &gd, j), rprs.m())
    } else {
        let prev = &chain[k - 2];
        // formal degree j_{k-1}, padded with explicit zeros if the true
        // degree dropped
        let deg = rprs.j(k - 1);
        let fd = coeffs_desc(prev, deg);
        let gd = coeffs_desc(&prev.derivative(), deg - 1);
        (band_matrix(&fd, &gd, j), deg)
    };
    Ok(NestedSubresMatrix {
        matrix,
        k,
        j,
        formal_degree,
    })
}

/// Builds the `(k, j)`-th nested subresultant matrix.
pub fn nested_matrix(rprs: &RecursivePrs, k: usize, j: usize) -> Result<NestedSubresMatrix> {
    validate_pair(rprs, k, j)?;
    let chain = tilde_chain(rprs, k - 1)?;
    level_matrix(rprs, &chain, k, j)
}

/// The `(k, j)`-th nested subresultant polynomial.
pub fn nested_subres_poly(rprs: &RecursivePrs, k: usize, j: usize) -> Result<Poly> {
    let built = nested_matrix(rprs, k, j)?;
    determinant_polynomial(&built.matrix, j)
}
