//! Exact computation of recursive polynomial remainder sequences and the
//! subresultant matrix constructions attached to them.
//!
//! The crate provides:
//!
//! - arbitrary-precision rational scalars and dense exact matrices with
//!   fraction-free determinants ([`exact`]);
//! - dense univariate polynomials over the rationals ([`poly`]);
//! - PRS and recursive PRS computation under pluggable division rules
//!   ([`prs`]);
//! - classical Sylvester/subresultant matrices and the fundamental-theorem
//!   scale factors ([`subres`]);
//! - the recursive, nested, and reduced nested subresultant constructions,
//!   which express the coefficients of every recursive-PRS element as
//!   determinants over the initial coefficients ([`recsubres`], [`nested`],
//!   [`reduced`]), together with the exact constants relating all of them
//!   ([`recsubres::ScaleLedger`]);
//! - real-root counting with multiplicity via recursive Sturm sequences
//!   ([`rootcount`]).
//!
//! Everything is exact: no floats, no rounding, and every equivalence is
//! an equality of rational numbers.

pub mod error;
pub mod exact;
pub mod nested;
pub mod poly;
pub mod prs;
pub mod recsubres;
pub mod reduced;
pub mod rootcount;
pub mod subres;

pub use error::{Error, Result};
pub use exact::{BareissTrace, RatMatrix, Rational, RowSystemSolver};
pub use nested::{nested_matrix, nested_subres_poly, NestedSubresMatrix};
pub use poly::{CoeffVector, Degree, Poly};
pub use prs::{
    compute_prs, compute_recursive_prs, gcd_by_prs, monic_rule, sturm_rule, DivisionRule,
    MonicEuclideanRule, Prs, PrsStep, RecursivePrs, SturmRule,
};
pub use recsubres::{
    build_recsubres_matrix, closed_form_size, recsubres_poly, scale_ledger, BlockLayout,
    RecSubresMatrix, ScaleLedger,
};
pub use reduced::{
    border_system, reduced_from_k0, reduced_nested_matrix, reduced_nested_poly, BorderSystem,
    ReducedNestedMatrix,
};
pub use rootcount::{
    count_real_roots_detailed, count_real_roots_with_multiplicity, lambda_at_infinity,
    sign_variations, Endpoint, RootCountReport, SignSequence,
};
pub use subres::{
    fundamental_theorem_factor, subres_matrix, subres_poly, sylvester_matrix, FundamentalMode,
    SubresMatrix,
};
