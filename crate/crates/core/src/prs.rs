//! Polynomial remainder sequences and their recursive extension.
//!
//! A PRS step realizes `alpha_i P_{i-2} = q_{i-1} P_{i-1} + beta_i P_i`
//! over the rationals; the pair `(alpha_i, beta_i)` comes from a pluggable
//! division rule. A recursive PRS chains complete PRSs: whenever a level
//! ends in a non-constant polynomial (a GCD up to a constant), the next
//! level starts from that polynomial and its derivative, until some level
//! ends in a nonzero constant.

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::poly::{Degree, Poly};

/// Supplies the scalars `(alpha_i^{(k)}, beta_i^{(k)})` for each division
/// step. `level` and `step` are 1-indexed; `step` starts at 3. Neither
/// scalar may be zero.
pub trait DivisionRule {
    fn name(&self) -> &'static str;

    fn alpha(&self, level: usize, step: usize) -> Rational {
        let _ = (level, step);
        Rational::one()
    }

    /// `beta` may inspect the raw remainder of `alpha P_{i-2}` by `P_{i-1}`
    /// (nonzero when this is called).
    fn beta(&self, level: usize, step: usize, remainder: &Poly) -> Rational;
}

/// The Sturm rule `(alpha, beta) = (1, -1)` at every step.
#[derive(Debug, Clone, Copy, Default)]
pub struct SturmRule;

impl DivisionRule for SturmRule {
    fn name(&self) -> &'static str {
        "sturm"
    }

    fn beta(&self, _level: usize, _step: usize, _remainder: &Poly) -> Rational {
        -Rational::one()
    }
}

/// `alpha = 1`, `beta` = leading coefficient of the remainder, so every
/// computed element is monic.
#[derive(Debug, Clone, Copy, Default)]
pub struct MonicEuclideanRule;

impl DivisionRule for MonicEuclideanRule {
    fn name(&self) -> &'static str {
        "monic"
    }

    fn beta(&self, _level: usize, _step: usize, remainder: &Poly) -> Rational {
        remainder.lc().expect("remainder is nonzero").clone()
    }
}

pub fn sturm_rule() -> SturmRule {
    SturmRule
}

pub fn monic_rule() -> MonicEuclideanRule {
    MonicEuclideanRule
}

/// One recorded division step: `alpha P_{i-2} = quotient P_{i-1} + beta P_i`.
#[derive(Debug, Clone)]
pub struct PrsStep {
    pub alpha: Rational,
    pub beta: Rational,
    pub quotient: Poly,
}

/// A complete polynomial remainder sequence `(P_1, ..., P_l)` together with
/// the division rule record that produced it.
#[derive(Debug, Clone)]
pub struct Prs {
    elements: Vec<Poly>,
    steps: Vec<PrsStep>,
}

impl Prs {
    pub fn elements(&self) -> &[Poly] {
        &self.elements
    }

    /// Number of elements `l`.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `P_i`, 1-indexed as in the definitions.
    pub fn element(&self, i: usize) -> &Poly {
        &self.elements[i - 1]
    }

    /// Recorded `(alpha_i, beta_i, q_{i-1})`; entry 0 belongs to step `i = 3`.
    pub fn steps(&self) -> &[PrsStep] {
        &self.steps
    }

    pub fn step(&self, i: usize) -> &PrsStep {
        &self.steps[i - 3]
    }

    /// A PRS is complete when its last element is a nonzero constant.
    pub fn is_complete(&self) -> bool {
        self.elements
            .last()
            .is_some_and(|p| p.degree() == Degree::Finite(0))
    }

    /// `n_i = deg(P_i)`, 1-indexed.
    pub fn n(&self, i: usize) -> usize {
        self.element(i).degree().finite().expect("PRS elements are nonzero")
    }

    /// `c_i = lc(P_i)`, 1-indexed.
    pub fn c(&self, i: usize) -> Rational {
        self.element(i).lc().expect("PRS elements are nonzero").clone()
    }

    /// Degree gap `d_i = n_i - n_{i+1}`, defined for `1 <= i <= l-1`.
    pub fn d(&self, i: usize) -> usize {
        self.n(i) - self.n(i + 1)
    }
}

/// Computes the complete PRS for `f` and `g` under the given rule.
/// Requires `deg(f) > deg(g)` and both inputs nonzero.
pub fn compute_prs(f: &Poly, g: &Poly, rule: &dyn DivisionRule) -> Result<Prs> {
    compute_prs_at_level(f, g, rule, 1)
}

fn compute_prs_at_level(f: &Poly, g: &Poly, rule: &dyn DivisionRule, level: usize) -> Result<Prs> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroInput);
    }
    if f.degree() <= g.degree() {
        return Err(Error::DegreeOrder {
            f: f.degree(),
            g: g.degree(),
        });
    }
    let mut elements = vec![f.clone(), g.clone()];
    let mut steps = Vec::new();
    loop {
        let last = elements.last().expect("nonempty");
        if last.degree() == Degree::Finite(0) {
            break;
        }
        let i = elements.len() + 1;
        let alpha = rule.alpha(level, i);
        debug_assert!(!num_traits::Zero::is_zero(&alpha), "division rule returned alpha = 0");
        let scaled = elements[elements.len() - 2].scale(&alpha);
        let (quotient, remainder) = scaled.divrem(last)?;
        if remainder.is_zero() {
            break;
        }
        let beta = rule.beta(level, i, &remainder);
        debug_assert!(!num_traits::Zero::is_zero(&beta), "division rule returned beta = 0");
        elements.push(remainder.scale(&beta.clone().recip()));
        steps.push(PrsStep { alpha, beta, quotient });
    }
    Ok(Prs { elements, steps })
}

/// A complete recursive PRS: PRS levels `L_1, ..., L_t` where each level
/// past the first starts from the previous level's last element and its
/// derivative, and the last level ends in a nonzero constant.
#[derive(Debug, Clone)]
pub struct RecursivePrs {
    levels: Vec<Prs>,
    /// `j_0 = m` and `j_k = n_{l_k}^{(k)}`, length `t + 1`.
    j_indices: Vec<usize>,
}

impl RecursivePrs {
    pub fn levels(&self) -> &[Prs] {
        &self.levels
    }

    /// Number of levels `t`.
    pub fn t(&self) -> usize {
        self.levels.len()
    }

    /// Level `L_k`, 1-indexed.
    pub fn level(&self, k: usize) -> &Prs {
        &self.levels[k - 1]
    }

    /// `j_k` for `0 <= k <= t`.
    pub fn j(&self, k: usize) -> usize {
        self.j_indices[k]
    }

    pub fn j_indices(&self) -> &[usize] {
        &self.j_indices
    }

    /// Degree of the original `F`.
    pub fn m(&self) -> usize {
        self.j_indices[0]
    }

    /// Degree of the original `G`.
    pub fn n(&self) -> usize {
        self.levels[0].n(2)
    }

    pub fn f(&self) -> &Poly {
        self.levels[0].element(1)
    }

    pub fn g(&self) -> &Poly {
        self.levels[0].element(2)
    }

    /// `P_i^{(k)}`, both indices 1-indexed.
    pub fn p(&self, k: usize, i: usize) -> &Poly {
        self.level(k).element(i)
    }

    /// `n_i^{(k)}`.
    pub fn n_deg(&self, k: usize, i: usize) -> usize {
        self.level(k).n(i)
    }

    /// `c_i^{(k)}`.
    pub fn c(&self, k: usize, i: usize) -> Rational {
        self.level(k).c(i)
    }

    /// `d_i^{(k)}`.
    pub fn d(&self, k: usize, i: usize) -> usize {
        self.level(k).d(i)
    }

    /// Length `l_k` of level `k`.
    pub fn level_len(&self, k: usize) -> usize {
        self.level(k).len()
    }

    pub fn is_complete(&self) -> bool {
        self.levels.last().is_some_and(Prs::is_complete)
    }

    pub(crate) fn from_levels(levels: Vec<Prs>, m: usize) -> Self {
        let mut j_indices = vec![m];
        for level in &levels {
            j_indices.push(level.n(level.len()));
        }
        Self { levels, j_indices }
    }
}

/// Computes the complete recursive PRS for `f` and `g`.
/// Requires `deg(f) > deg(g) >= 1`.
pub fn compute_recursive_prs(
    f: &Poly,
    g: &Poly,
    rule: &dyn DivisionRule,
) -> Result<RecursivePrs> {
    if g.degree() < Degree::Finite(1) {
        if g.is_zero() {
            return Err(Error::ZeroInput);
        }
        return Err(Error::DegreeOrder {
            f: f.degree(),
            g: g.degree(),
        });
    }
    let m = match f.degree() {
        Degree::Finite(m) => m,
        Degree::NegInf => return Err(Error::ZeroInput),
    };
    let mut levels = vec![compute_prs_at_level(f, g, rule, 1)?];
    while !levels.last().expect("nonempty").is_complete() {
        let k = levels.len() + 1;
        let last = levels
            .last()
            .expect("nonempty")
            .elements()
            .last()
            .expect("nonempty")
            .clone();
        let next = compute_prs_at_level(&last, &last.derivative(), rule, k)?;
        levels.push(next);
    }
    Ok(RecursivePrs::from_levels(levels, m))
}

pub(crate) fn single_level_rprs(level: Prs, m: usize) -> RecursivePrs {
    RecursivePrs::from_levels(vec![level], m)
}

/// Last element of the complete PRS for `f` and `g`: `gamma * gcd(f, g)`
/// for some nonzero rational `gamma` (not normalized).
///
/// Degree order is handled by swapping; equal degrees by one division step
/// before the sequence starts.
pub fn gcd_by_prs(f: &Poly, g: &Poly) -> Result<Poly> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroInput);
    }
    let (a, b) = if f.degree() >= g.degree() {
        (f.clone(), g.clone())
    } else {
        (g.clone(), f.clone())
    };
    let (a, b) = if a.degree() == b.degree() {
        let (_, r) = a.divrem(&b)?;
        if r.is_zero() {
            return Ok(b);
        }
        (b, r)
    } else {
        (a, b)
    };
    if b.degree() == Degree::Finite(0) {
        return Ok(b);
    }
    let prs = compute_prs(&a, &b, &SturmRule)?;
    Ok(prs.elements().last().expect("nonempty").clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use num_traits::Zero;
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
    fn sturm_rule_is_constant() {
        let rule = sturm_rule();
        let dummy = Poly::from_integers(&[1]);
        for (level, step) in [(1, 3), (2, 4), (7, 11)] {
            assert_eq!(rule.alpha(level, step), int(1));
            assert_eq!(rule.beta(level, step, &dummy), int(-1));
        }
    }

    #[test]
    fn prs_of_example_level_one() {
        let p = example_octic();
        let prs = compute_prs(&p, &p.derivative(), &SturmRule).unwrap();
        assert_eq!(prs.len(), 4);
        assert!(!prs.is_complete());
        let p4 = Poly::new(vec![
            rat(2304, 25),
            rat(4224, 25),
            rat(1024, 25),
            rat(-256, 5),
            rat(-256, 25),
            rat(128, 25),
        ]);
        assert_eq!(prs.element(4), &p4);
        assert_eq!(prs.c(3), rat(75, 16));
    }

    #[test]
    fn prs_stops_on_exact_division() {
        let f = Poly::from_integers(&[-1, 0, 1]);
        let g = Poly::from_integers(&[-1, 1]);
        let prs = compute_prs(&f, &g, &SturmRule).unwrap();
        assert_eq!(prs.len(), 2);
        assert_eq!(prs.element(2), &g);
        assert!(!prs.is_complete());
    }

    #[test]
    fn prs_of_coprime_pair_is_complete() {
        let f = Poly::from_integers(&[1, 0, 1]);
        let g = Poly::from_integers(&[0, 1]);
        let prs = compute_prs(&f, &g, &SturmRule).unwrap();
        assert_eq!(prs.len(), 3);
        assert_eq!(prs.element(3), &Poly::constant(int(-1)));
        assert!(prs.is_complete());
    }

    #[test]
    fn prs_rejects_bad_inputs() {
        let f = Poly::from_integers(&[1, 1]);
        assert!(matches!(
            compute_prs(&f, &Poly::zero(), &SturmRule),
            Err(Error::ZeroInput)
        ));
        match compute_prs(&f, &f, &SturmRule) {
            Err(Error::DegreeOrder { .. }) => {}
            other => panic!("expected DegreeOrder, got {other:?}"),
        }
    }

    #[test]
    fn recursive_prs_of_example() {
        let p = example_octic();
        let rprs = compute_recursive_prs(&p, &p.derivative(), &SturmRule).unwrap();
        assert_eq!(rprs.t(), 3);
        assert_eq!(
            rprs.levels().iter().map(Prs::len).collect::<Vec<_>>(),
            vec![4, 4, 3]
        );
        assert_eq!(rprs.j_indices(), &[8, 5, 2, 0]);
        assert!(rprs.is_complete());
        // level-2 start: last element of level 1 and its derivative
        assert_eq!(rprs.p(2, 1), rprs.p(1, 4));
        assert_eq!(rprs.p(2, 2), &rprs.p(1, 4).derivative());
    }

    #[test]
    fn recursive_prs_of_coprime_pair_has_one_level() {
        let f = Poly::from_integers(&[1, 0, 1]);
        let g = Poly::from_integers(&[0, 1]);
        let rprs = compute_recursive_prs(&f, &g, &SturmRule).unwrap();
        assert_eq!(rprs.t(), 1);
        assert_eq!(rprs.j_indices(), &[2, 0]);
    }

    #[test]
    fn recursive_prs_of_cube_has_three_short_levels() {
        // (x-1)^3 and its derivative: each level is an exact division, so
        // every level has just two elements.
        let lin = Poly::from_integers(&[-1, 1]);
        let f = &(&lin * &lin) * &lin;
        let rprs = compute_recursive_prs(&f, &f.derivative(), &SturmRule).unwrap();
        assert_eq!(rprs.t(), 3);
        assert_eq!(
            rprs.levels().iter().map(Prs::len).collect::<Vec<_>>(),
            vec![2, 2, 2]
        );
        assert_eq!(rprs.j_indices(), &[3, 2, 1, 0]);
        // each level's last element is a multiple of the expected power
        let sq = &lin * &lin;
        let (_, r) = rprs.p(1, 2).divrem(&sq).unwrap();
        assert!(r.is_zero());
        let (_, r) = rprs.p(2, 2).divrem(&lin).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_by_prs_examples() {
        let p = example_octic();
        let gcd = gcd_by_prs(&p, &p.derivative()).unwrap();
        // 128/25 (x+2)(x-3)^2(x+1)^2, verified by expansion
        let expected = Poly::from_integers(&[18, 33, 8, -10, -2, 1]).scale(&rat(128, 25));
        assert_eq!(gcd, expected);

        let f = Poly::from_integers(&[3, 1, 4, 1]);
        let same = gcd_by_prs(&f, &f).unwrap();
        let (q, r) = same.divrem(&f).unwrap();
        assert!(r.is_zero());
        assert_eq!(q.degree(), Degree::Finite(0));

        let coprime = gcd_by_prs(
            &Poly::from_integers(&[1, 0, 1]),
            &Poly::from_integers(&[0, 1]),
        )
        .unwrap();
        assert_eq!(coprime.degree(), Degree::Finite(0));
    }

    #[test]
    fn step_identity_holds_for_both_rules() {
        let p = example_octic();
        for rule in [&SturmRule as &dyn DivisionRule, &MonicEuclideanRule] {
            let rprs = compute_recursive_prs(&p, &p.derivative(), rule).unwrap();
            assert_step_identities(&rprs);
        }
    }

    fn assert_step_identities(rprs: &RecursivePrs) {
        for level in rprs.levels() {
            for i in 3..=level.len() {
                let step = level.step(i);
                let lhs = level.element(i - 2).scale(&step.alpha);
                let rhs = &(&step.quotient * level.element(i - 1))
                    + &level.element(i).scale(&step.beta);
                assert_eq!(lhs, rhs, "step identity failed at i = {i}");
            }
            for i in 1..level.len() {
                assert!(level.n(i) > level.n(i + 1), "degrees must strictly decrease");
            }
        }
        for k in 1..=rprs.t() {
            assert!(rprs.j(k) < rprs.j(k - 1));
        }
    }

    fn distinct_roots(seed: &[i64]) -> Vec<i64> {
        let mut roots: Vec<i64> = seed.to_vec();
        roots.sort_unstable();
        roots.dedup();
        roots
    }

    proptest! {
        #[test]
        fn square_free_input_gives_one_level(seed in proptest::collection::vec(-6i64..=6, 2..5)) {
            let roots = distinct_roots(&seed);
            prop_assume!(roots.len() >= 2);
            let mut f = Poly::one();
            for r in &roots {
                f = &f * &Poly::from_integers(&[-r, 1]);
            }
            let rprs = compute_recursive_prs(&f, &f.derivative(), &SturmRule).unwrap();
            prop_assert_eq!(rprs.t(), 1);
        }

        #[test]
        fn level_gcd_divides_level_inputs(
            seed in proptest::collection::vec(-4i64..=4, 2..4),
            mults in proptest::collection::vec(1usize..=3, 2..4),
        ) {
            let roots = distinct_roots(&seed);
            prop_assume!(roots.len() >= 2);
            let mut f = Poly::one();
            for (r, m) in roots.iter().zip(mults.iter()) {
                for _ in 0..*m {
                    f = &f * &Poly::from_integers(&[-r, 1]);
                }
            }
            prop_assume!(f.degree() >= Degree::Finite(2));
            let rprs = compute_recursive_prs(&f, &f.derivative(), &SturmRule).unwrap();
            for k in 1..=rprs.t() {
                let level = rprs.level(k);
                let last = level.elements().last().unwrap();
                let (_, r1) = level.element(1).divrem(last).unwrap();
                let (_, r2) = level.element(2).divrem(last).unwrap();
                prop_assert!(r1.is_zero() && r2.is_zero());
            }
            assert_step_identities(&rprs);
        }

        #[test]
        fn monic_rule_yields_monic_remainders(
            f in proptest::collection::vec(-5i64..=5, 4..8),
            g in proptest::collection::vec(-5i64..=5, 2..4),
        ) {
            let mut f = Poly::from_integers(&f);
            let mut g = Poly::from_integers(&g);
            prop_assume!(!f.is_zero() && !g.is_zero());
            if f.degree() <= g.degree() {
                std::mem::swap(&mut f, &mut g);
            }
            prop_assume!(f.degree() > g.degree());
            let prs = compute_prs(&f, &g, &MonicEuclideanRule).unwrap();
            for p in prs.elements().iter().skip(2) {
                prop_assert!(!p.lc().unwrap().is_zero());
                prop_assert_eq!(p.lc().unwrap(), &int(1));
            }
        }
    }
}
