//! Sylvester and subresultant matrices, subresultant polynomials, and the
//! fundamental-theorem scale factors relating them to PRS elements.

use crate::error::{Error, Result};
use crate::exact::{pow_i, sign_pow, RatMatrix, Rational};
use crate::poly::Poly;
use crate::prs::Prs;

/// Coefficients of `p`, highest power first, padded with leading zeros to
/// the given formal degree.
pub(crate) fn coeffs_desc(p: &Poly, formal_degree: usize) -> Vec<Rational> {
    p.coeff_vector(formal_degree)
        .expect("formal degree covers the actual degree")
        .into_vec()
}

/// The `(m+n-j) x (m+n-2j)` coefficient band: `n-j` shifted columns of `f`
/// followed by `m-j` shifted columns of `g`, with `m`, `n` the formal
/// degrees implied by the slice lengths. `j = 0` gives the Sylvester matrix.
pub(crate) fn band_matrix(f_desc: &[Rational], g_desc: &[Rational], j: usize) -> RatMatrix {
    let m = f_desc.len() - 1;
    let n = g_desc.len() - 1;
    let rows = m + n - j;
    let cols = m + n - 2 * j;
    let mut mat = RatMatrix::zeros(rows, cols);
    for c in 0..n - j {
        for (r, coeff) in f_desc.iter().enumerate() {
            mat[(c + r, c)] = coeff.clone();
        }
    }
    for c in 0..m - j {
        for (r, coeff) in g_desc.iter().enumerate() {
            mat[(c + r, n - j + c)] = coeff.clone();
        }
    }
    mat
}

/// Determinant polynomial of a coefficient band: the coefficient of `x^tau`
/// is the determinant of the square minor formed by the top `cols - 1` rows
/// plus row `rows - 1 - tau`. All four subresultant families use this
/// selection (their row prescriptions coincide because `rows = cols + j`).
pub(crate) fn determinant_polynomial(mat: &RatMatrix, j: usize) -> Result<Poly> {
    let (rows, cols) = (mat.rows(), mat.cols());
    debug_assert_eq!(rows, cols + j);
    let top: Vec<usize> = (0..cols - 1).collect();
    let mut coeffs = Vec::with_capacity(j + 1);
    for tau in 0..=j {
        let extra = rows - 1 - tau;
        let mut sel = top.clone();
        sel.push(extra);
        let minor = mat.submatrix(&sel, &(0..cols).collect::<Vec<_>>())?;
        coeffs.push(minor.det()?);
    }
    Ok(Poly::new(coeffs))
}

fn input_degrees(f: &Poly, g: &Poly) -> Result<(usize, usize)> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroInput);
    }
    let m = f.degree().finite().expect("nonzero");
    let n = g.degree().finite().expect("nonzero");
    if m < n || n == 0 {
        return Err(Error::DegreeOrder {
            f: f.degree(),
            g: g.degree(),
        });
    }
    Ok((m, n))
}

/// Sylvester matrix `N(F, G)`: `(m+n) x (m+n)`, the first `n` columns shift
/// the coefficients of `f`, the remaining `m` columns those of `g`.
/// Requires `m >= n > 0`.
pub fn sylvester_matrix(f: &Poly, g: &Poly) -> Result<RatMatrix> {
    let (m, n) = input_degrees(f, g)?;
    Ok(band_matrix(&coeffs_desc(f, m), &coeffs_desc(g, n), 0))
}

/// The `j`-th subresultant matrix `N^{(j)}(F, G)` with its index data.
#[derive(Debug, Clone)]
pub struct SubresMatrix {
    matrix: RatMatrix,
    j: usize,
    m: usize,
    n: usize,
}

impl SubresMatrix {
    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `N_U^{(j)}`: the matrix with the bottom `j + 1` rows deleted.
    pub fn upper(&self) -> RatMatrix {
        let keep: Vec<usize> = (0..self.matrix.rows() - (self.j + 1)).collect();
        let cols: Vec<usize> = (0..self.matrix.cols()).collect();
        self.matrix.submatrix(&keep, &cols).expect("in range")
    }
}

/// Builds `N^{(j)}(F, G)` for `j < n`. Requires `m >= n > 0`.
pub fn subres_matrix(f: &Poly, g: &Poly, j: usize) -> Result<SubresMatrix> {
    let (m, n) = input_degrees(f, g)?;
    if j >= n {
        return Err(Error::JOutOfRange { j, n });
    }
    Ok(SubresMatrix {
        matrix: band_matrix(&coeffs_desc(f, m), &coeffs_desc(g, n), j),
        j,
        m,
        n,
    })
}

/// The `j`-th subresultant `S_j(F, G)`, a polynomial of formal degree `j`
/// whose coefficients are determinants of minors of `N^{(j)}(F, G)`.
pub fn subres_poly(f: &Poly, g: &Poly, j: usize) -> Result<Poly> {
    let sm = subres_matrix(f, g, j)?;
    determinant_polynomial(&sm.matrix, j)
}

/// Which of the two fundamental-theorem product formulas to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FundamentalMode {
    /// Scale factor of `S_{n_i}(F, G)` relative to `P_i`.
    AtStepDegree,
    /// Scale factor of `S_{n_{i-1}-1}(F, G)` relative to `P_i`.
    BelowPrevDegree,
}

/// Exact scalar `sigma` with `S_{n_i} = sigma P_i` (or
/// `S_{n_{i-1}-1} = sigma P_i`), computed from the recorded PRS metadata
/// for `3 <= i <= l`.
pub fn fundamental_theorem_factor(prs: &Prs, i: usize, mode: FundamentalMode) -> Result<Rational> {
    if i < 3 || i > prs.len() {
        return Err(Error::IndexOutOfRange(format!(
            "fundamental theorem index i = {i} outside 3..={}",
            prs.len()
        )));
    }
    let factor = match mode {
        FundamentalMode::AtStepDegree => {
            let mut acc = pow_i(&prs.c(i), prs.d(i - 1) as i64 - 1);
            for l in 3..=i {
                let step = prs.step(l);
                let ratio = &step.beta / &step.alpha;
                acc *= pow_i(&ratio, (prs.n(l - 1) - prs.n(i)) as i64);
                acc *= pow_i(&prs.c(l - 1), (prs.d(l - 2) + prs.d(l - 1)) as i64);
                acc *= sign_pow((prs.n(l - 2) - prs.n(i)) * (prs.n(l - 1) - prs.n(i)));
            }
            acc
        }
        FundamentalMode::BelowPrevDegree => {
            let mut acc = pow_i(&prs.c(i - 1), 1 - prs.d(i - 1) as i64);
            for l in 3..=i {
                let step = prs.step(l);
                let ratio = &step.beta / &step.alpha;
                acc *= pow_i(&ratio, (prs.n(l - 1) - prs.n(i - 1) + 1) as i64);
                acc *= pow_i(&prs.c(l - 1), (prs.d(l - 2) + prs.d(l - 1)) as i64);
                acc *= sign_pow(
                    (prs.n(l - 2) - prs.n(i - 1) + 1) * (prs.n(l - 1) - prs.n(i - 1) + 1),
                );
            }
            acc
        }
    };
    Ok(factor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::poly::Degree;
    use crate::prs::{compute_prs, monic_rule, sturm_rule, DivisionRule};
    use proptest::prelude::*;

    fn example_octic() -> Poly {
        let xp2 = Poly::from_integers(&[2, 1]);
        let base = &Poly::from_integers(&[-3, 1]) * &Poly::from_integers(&[1, 1]);
        let mut p = &xp2 * &xp2;
        for _ in 0..3 {
            p = &p * &base;
        }
        p
    }

    #[test]
    fn sylvester_of_two_linears() {
        let f = Poly::from_integers(&[1, 1]);
        let g = Poly::from_integers(&[-1, 1]);
        let syl = sylvester_matrix(&f, &g).unwrap();
        assert_eq!(
            syl,
            RatMatrix::from_rows(vec![vec![int(1), int(1)], vec![int(1), int(-1)]])
        );
    }

    #[test]
    fn sylvester_shape_and_common_root() {
        let f = Poly::from_integers(&[1, 2, 3]);
        let g = Poly::from_integers(&[4, 5]);
        let syl = sylvester_matrix(&f, &g).unwrap();
        assert_eq!((syl.rows(), syl.cols()), (3, 3));
        // one f-column, two g-columns
        assert_eq!(syl[(0, 0)], int(3));
        assert_eq!(syl[(0, 1)], int(5));
        assert_eq!(syl[(1, 2)], int(5));

        let shared = sylvester_matrix(
            &Poly::from_integers(&[-1, 0, 1]),
            &Poly::from_integers(&[-1, 1]),
        )
        .unwrap();
        assert_eq!(shared.det().unwrap(), int(0));
    }

    #[test]
    fn sylvester_rejects_degree_order() {
        let f = Poly::from_integers(&[1, 1]);
        let g = Poly::from_integers(&[1, 1, 1]);
        assert!(matches!(
            sylvester_matrix(&f, &g),
            Err(Error::DegreeOrder { .. })
        ));
        assert!(matches!(
            sylvester_matrix(&f, &Poly::one()),
            Err(Error::DegreeOrder { .. })
        ));
    }

    #[test]
    fn subres_matrix_example_layout() {
        // N^{(5)}(P, P') for the running example: 10x5, two f-columns and
        // three g-columns, f_8 in the top-left corner.
        let p = example_octic();
        let sm = subres_matrix(&p, &p.derivative(), 5).unwrap();
        let mat = sm.matrix();
        assert_eq!((mat.rows(), mat.cols()), (10, 5));
        for c in 0..2 {
            for r in 0..=8 {
                assert_eq!(mat[(c + r, c)], p.coeff(8 - r), "f column {c}");
            }
        }
        let dp = p.derivative();
        for c in 0..3 {
            for r in 0..=7 {
                assert_eq!(mat[(c + r, 2 + c)], dp.coeff(7 - r), "g column {c}");
            }
        }
        // N_U^{(5)}: deleting the bottom j+1 rows leaves the top 4 rows
        let upper = sm.upper();
        assert_eq!((upper.rows(), upper.cols()), (4, 5));
        assert_eq!(
            upper,
            mat.submatrix(&[0, 1, 2, 3], &[0, 1, 2, 3, 4]).unwrap()
        );
    }

    #[test]
    fn subres_matrix_shape_at_j_n_minus_1() {
        let f = Poly::from_integers(&[1, 2, 0, 0, 1, 1]);
        let g = Poly::from_integers(&[5, 0, 1, 7]);
        let (m, n) = (5, 3);
        let sm = subres_matrix(&f, &g, n - 1).unwrap();
        assert_eq!((sm.matrix().rows(), sm.matrix().cols()), (m + 1, m - n + 2));
        assert!(matches!(
            subres_matrix(&f, &g, 3),
            Err(Error::JOutOfRange { j: 3, n: 3 })
        ));
    }

    #[test]
    fn subres_poly_of_example_is_scaled_gcd() {
        // S_5(P, P') equals B_1 * P_4^{(1)} where B_1 is the i = 4
        // fundamental-theorem factor; evaluated on the running example the
        // factor is -5625/4.
        let p = example_octic();
        let dp = p.derivative();
        let prs = compute_prs(&p, &dp, &sturm_rule()).unwrap();
        let s5 = subres_poly(&p, &dp, 5).unwrap();
        let b1 = fundamental_theorem_factor(&prs, 4, FundamentalMode::AtStepDegree).unwrap();
        assert_eq!(b1, rat(-5625, 4));
        assert_eq!(s5, prs.element(4).scale(&b1));
        // symbolic form of the factor: -(c_2)^2 (c_3)^2
        assert_eq!(b1, -(&prs.c(2) * &prs.c(2) * &prs.c(3) * &prs.c(3)));
    }

    #[test]
    fn subres_poly_vanishes_below_gcd_degree() {
        let p = example_octic();
        let dp = p.derivative();
        for j in 0..5 {
            assert!(subres_poly(&p, &dp, j).unwrap().is_zero(), "S_{j} != 0");
        }
    }

    #[test]
    fn s0_of_coprime_pair_is_resultant() {
        let f = Poly::from_integers(&[2, 0, 1, 3]);
        let g = Poly::from_integers(&[1, 1, 1]);
        let s0 = subres_poly(&f, &g, 0).unwrap();
        let res = sylvester_matrix(&f, &g).unwrap().det().unwrap();
        assert_eq!(s0, Poly::constant(res));
    }

    #[test]
    fn fundamental_factor_trivial_cases() {
        // normal PRS: d_{i-1} = 1 collapses the c_i^{d-1} factor to 1
        let p = example_octic();
        let prs = compute_prs(&p, &p.derivative(), &sturm_rule()).unwrap();
        assert!(prs.steps().iter().all(|s| s.alpha == int(1)));
        for i in 3..=prs.len() {
            assert_eq!(prs.d(i - 1), 1);
        }
        // i = 3 uses a single-factor product
        let f3 = fundamental_theorem_factor(&prs, 3, FundamentalMode::AtStepDegree).unwrap();
        let s6 = subres_poly(&p, &p.derivative(), 6).unwrap();
        assert_eq!(s6, prs.element(3).scale(&f3));
        assert!(matches!(
            fundamental_theorem_factor(&prs, 2, FundamentalMode::AtStepDegree),
            Err(Error::IndexOutOfRange(_))
        ));
    }

    /// Full theorem check: both product formulas and both zero ranges.
    fn assert_fundamental_theorem(f: &Poly, g: &Poly, rule: &dyn DivisionRule) {
        let prs = compute_prs(f, g, rule).unwrap();
        let k = prs.len();
        for j in 0..prs.n(k) {
            assert!(subres_poly(f, g, j).unwrap().is_zero(), "S_{j} below n_k");
        }
        for i in 3..=k {
            let at_ni =
                fundamental_theorem_factor(&prs, i, FundamentalMode::AtStepDegree).unwrap();
            assert_eq!(
                subres_poly(f, g, prs.n(i)).unwrap(),
                prs.element(i).scale(&at_ni),
                "S at n_{i}"
            );
            let below =
                fundamental_theorem_factor(&prs, i, FundamentalMode::BelowPrevDegree).unwrap();
            assert_eq!(
                subres_poly(f, g, prs.n(i - 1) - 1).unwrap(),
                prs.element(i).scale(&below),
                "S at n_{}-1",
                i - 1
            );
            for j in prs.n(i) + 1..prs.n(i - 1) - 1 {
                assert!(subres_poly(f, g, j).unwrap().is_zero(), "gap S_{j}");
            }
        }
    }

    #[test]
    fn fundamental_theorem_on_defective_prs() {
        // Knuth's classic pair; its PRS degrees are 8, 6, 4, 2, 1, 0, so
        // every step is defective and both exponent conventions matter.
        let f = Poly::from_integers(&[-5, 2, 8, -3, -3, 0, 1, 0, 1]);
        let g = Poly::from_integers(&[21, -9, -4, 0, 5, 0, 3]);
        let prs = compute_prs(&f, &g, &sturm_rule()).unwrap();
        assert_eq!(
            (1..=prs.len()).map(|i| prs.n(i)).collect::<Vec<_>>(),
            vec![8, 6, 4, 2, 1, 0]
        );
        assert_fundamental_theorem(&f, &g, &sturm_rule());
        assert_fundamental_theorem(&f, &g, &monic_rule());
    }

    fn small_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
        proptest::collection::vec(-5i64..=5, 1..=max_deg + 1).prop_map(|v| Poly::from_integers(&v))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn fundamental_theorem_randomized(
            f in small_poly(8),
            g in small_poly(6),
            d in small_poly(2),
            plant_gcd in proptest::bool::ANY,
        ) {
            let (mut f, mut g) = (f, g);
            if plant_gcd && !d.is_zero() {
                f = &f * &d;
                g = &g * &d;
            }
            prop_assume!(!f.is_zero() && !g.is_zero());
            if f.degree() <= g.degree() {
                std::mem::swap(&mut f, &mut g);
            }
            prop_assume!(f.degree() > g.degree());
            prop_assume!(g.degree() >= Degree::Finite(1));
            assert_fundamental_theorem(&f, &g, &sturm_rule());
            assert_fundamental_theorem(&f, &g, &monic_rule());
        }

        #[test]
        fn subres_poly_formal_degree_bound(f in small_poly(7), g in small_poly(5), j in 0usize..4) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            prop_assume!(f.degree() >= g.degree() && g.degree() >= Degree::Finite(1));
            let n = g.degree().finite().unwrap();
            prop_assume!(j < n);
            let s = subres_poly(&f, &g, j).unwrap();
            prop_assert!(s.degree() <= Degree::Finite(j));
        }

        #[test]
        fn s0_equals_sylvester_det(f in small_poly(6), g in small_poly(4)) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            prop_assume!(f.degree() >= g.degree() && g.degree() >= Degree::Finite(1));
            let s0 = subres_poly(&f, &g, 0).unwrap();
            let res = sylvester_matrix(&f, &g).unwrap().det().unwrap();
            prop_assert_eq!(s0, Poly::constant(res));
        }
    }
}
