//! Sturm chains, exact real-root counting, root isolation, and sign
//! decisions for univariate rational polynomials.
//!
//! The chain construction keeps coefficient growth in check by scaling each
//! remainder to a primitive integer polynomial; scaling by positive constants
//! preserves every sign variation, so the counts remain exact.

use serde::{Deserialize, Serialize};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{rat_int, sign, Rational};
use crate::unipoly::UniPoly;

/// A Sturm chain: the query polynomial, its derivative, then negated
/// remainders (each scaled to a primitive integer polynomial).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    polys: Vec<UniPoly>,
}

impl SturmChain {
    /// Build the chain for `p`. The zero polynomial yields a single-entry
    /// chain and is rejected by the positivity deciders instead.
    pub fn build(p: &UniPoly) -> Self {
        let mut polys = vec![p.clone()];
        if p.degree().unwrap_or(0) >= 1 {
            polys.push(p.derivative());
            loop {
                let n = polys.len();
                let (_, rem) = polys[n - 2].div_rem(&polys[n - 1]);
                if rem.is_zero() {
                    break;
                }
                polys.push(rem.neg().primitive());
            }
        }
        Self { polys }
    }

    pub fn polys(&self) -> &[UniPoly] {
        &self.polys
    }

    fn variations(signs: impl Iterator<Item = i32>) -> u32 {
        let nonzero: Vec<i32> = signs.filter(|&s| s != 0).collect();
        nonzero.windows(2).filter(|w| w[0] * w[1] < 0).count() as u32
    }

    pub fn variations_at(&self, t: &Rational) -> u32 {
        Self::variations(self.polys.iter().map(|p| sign(&p.evaluate(t))))
    }

    pub fn variations_at_neg_inf(&self) -> u32 {
        Self::variations(self.polys.iter().map(|p| p.sign_at_neg_inf()))
    }

    pub fn variations_at_pos_inf(&self) -> u32 {
        Self::variations(self.polys.iter().map(|p| p.sign_at_pos_inf()))
    }

    /// Distinct real roots in the half-open interval `(lo, hi]`.
    /// Exact when neither endpoint is a root of the query polynomial.
    pub fn count_in(&self, lo: &Rational, hi: &Rational) -> u32 {
        self.variations_at(lo).saturating_sub(self.variations_at(hi))
    }

    /// Distinct real roots on the whole line.
    pub fn count_all(&self) -> u32 {
        self.variations_at_neg_inf()
            .saturating_sub(self.variations_at_pos_inf())
    }
}

/// Evidence record for a root-counting or positivity decision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SturmReport {
    /// Chain entries as coefficient vectors, ascending power.
    #[serde(with = "crate::report::serde_chain")]
    pub chain: Vec<UniPoly>,
    pub real_root_count: u32,
    /// Interval the count refers to; `None` means the whole real line.
    #[serde(with = "crate::report::serde_opt_interval", default)]
    pub interval: Option<(Rational, Rational)>,
}

impl SturmReport {
    pub fn whole_line(p: &UniPoly) -> Self {
        let chain = SturmChain::build(p);
        Self {
            real_root_count: chain.count_all(),
            chain: chain.polys,
            interval: None,
        }
    }

    pub fn on_interval(p: &UniPoly, lo: Rational, hi: Rational) -> Self {
        let chain = SturmChain::build(p);
        Self {
            real_root_count: chain.count_in(&lo, &hi),
            chain: chain.polys,
            interval: Some((lo, hi)),
        }
    }

    /// Re-verify this report from its stored chain alone: the chain must have
    /// the derivative/negated-remainder structure (up to positive scaling)
    /// and reproduce the stored root count.
    pub fn recheck(&self) -> bool {
        let Some(first) = self.chain.first() else {
            return false;
        };
        if first.degree().unwrap_or(0) >= 1 {
            if self.chain.len() < 2 {
                return false;
            }
            if !positively_proportional(&self.chain[1], &first.derivative()) {
                return false;
            }
            for w in self.chain.windows(3) {
                let (_, rem) = w[0].div_rem(&w[1]);
                if !positively_proportional(&w[2], &rem.neg()) {
                    return false;
                }
            }
            // The chain must run to completion: the final remainder step
            // divides exactly.
            let n = self.chain.len();
            if n >= 2 {
                let (_, rem) = self.chain[n - 2].div_rem(&self.chain[n - 1]);
                if !rem.is_zero() {
                    return false;
                }
            }
        }
        let chain = SturmChain {
            polys: self.chain.clone(),
        };
        let recount = match &self.interval {
            None => chain.count_all(),
            Some((lo, hi)) => chain.count_in(lo, hi),
        };
        recount == self.real_root_count
    }
}

fn positively_proportional(a: &UniPoly, b: &UniPoly) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    if a.degree() != b.degree() {
        return false;
    }
    let ratio = a.leading().unwrap() / b.leading().unwrap();
    if ratio <= Rational::zero() {
        return false;
    }
    b.scale(&ratio) == *a
}

/// Sign decision mode for `sturm_positivity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PositivityMode {
    /// `p(t) >= 0` for all real `t`.
    NonnegativeOnR,
    /// `p(t) > 0` for all real `t`.
    PositiveOnR,
}

/// Decide global sign conditions for a univariate polynomial.
///
/// `PositiveOnR` rejects the zero polynomial; `NonnegativeOnR` accepts it.
/// Nonnegativity holds iff the leading coefficient is positive, the degree is
/// even, and every real root has even multiplicity (equivalently: the sign
/// never changes across any root of the square-free part).
pub fn sturm_positivity(p: &UniPoly, mode: PositivityMode) -> Result<(bool, SturmReport)> {
    match mode {
        PositivityMode::PositiveOnR => {
            if p.is_zero() {
                return Err(Error::ZeroPolynomial(
                    "cannot assert strict positivity of the zero polynomial".into(),
                ));
            }
            let report = SturmReport::whole_line(p);
            let verdict = report.real_root_count == 0
                && p.evaluate(&Rational::zero()) > Rational::zero();
            Ok((verdict, report))
        }
        PositivityMode::NonnegativeOnR => {
            let report = SturmReport::whole_line(p);
            if p.is_zero() {
                return Ok((true, report));
            }
            if p.degree().unwrap() % 2 == 1 || p.sign_at_pos_inf() < 0 {
                return Ok((false, report));
            }
            let square_free = p.square_free_part();
            let verdict = isolate_real_roots(&square_free).iter().all(|root| {
                p.evaluate(&root.lo) * p.evaluate(&root.hi) > Rational::zero()
            });
            Ok((verdict, report))
        }
    }
}

/// An isolated real root: the open interval `(lo, hi)` contains exactly one
/// real root, neither endpoint is a root, and `exact` carries the root value
/// when it happens to be rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatedRoot {
    pub lo: Rational,
    pub hi: Rational,
    pub exact: Option<Rational>,
}

/// Isolate all distinct real roots of a square-free polynomial into pairwise
/// disjoint (possibly touching) ordered intervals.
pub fn isolate_real_roots(square_free: &UniPoly) -> Vec<IsolatedRoot> {
    if square_free.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let chain = SturmChain::build(square_free);
    let bound = square_free.root_bound();
    let mut roots = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let count = chain.count_in(&lo, &hi);
        if count == 0 {
            continue;
        }
        if count == 1 {
            debug_assert!(
                square_free.evaluate(&lo) * square_free.evaluate(&hi) < Rational::zero()
            );
            roots.push(IsolatedRoot {
                lo,
                hi,
                exact: None,
            });
            continue;
        }
        let mid = (&lo + &hi) / rat_int(2);
        if square_free.evaluate(&mid).is_zero() {
            // Rational root exactly at the midpoint: carve out a guard zone
            // containing only this root, then continue outside it.
            let mut delta = (&hi - &lo) / rat_int(4);
            loop {
                let l = &mid - &delta;
                let r = &mid + &delta;
                if !square_free.evaluate(&l).is_zero()
                    && !square_free.evaluate(&r).is_zero()
                    && chain.count_in(&l, &r) == 1
                {
                    roots.push(IsolatedRoot {
                        lo: l.clone(),
                        hi: r.clone(),
                        exact: Some(mid.clone()),
                    });
                    stack.push((lo, l));
                    stack.push((r, hi));
                    break;
                }
                delta /= rat_int(2);
            }
        } else {
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
    }
    roots.sort_by(|a, b| a.lo.cmp(&b.lo));
    roots
}

/// Rational sample points covering every maximal sign-constant region of `p`
/// (one point strictly inside each region). None of the points is a root.
pub fn sign_region_samples(p: &UniPoly) -> Vec<Rational> {
    if p.is_zero() {
        return Vec::new();
    }
    let roots = isolate_real_roots(&p.square_free_part());
    if roots.is_empty() {
        return vec![Rational::zero()];
    }
    let mut samples = vec![roots[0].lo.clone()];
    for pair in roots.windows(2) {
        samples.push((&pair[0].hi + &pair[1].lo) / rat_int(2));
    }
    samples.push(roots[roots.len() - 1].hi.clone());
    samples
}

/// Find a rational point where `p` is strictly negative, if one exists.
/// Returns the leftmost sign-region sample that is negative, so the result
/// is deterministic.
pub fn negative_point(p: &UniPoly) -> Option<Rational> {
    sign_region_samples(p)
        .into_iter()
        .find(|t| p.evaluate(t) < Rational::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn chain_of_irreducible_quadratic() {
        // t^2 + 1 -> {t^2 + 1, 2t, -1}, no real roots, strictly positive
        let p = UniPoly::from_ints(&[1, 0, 1]);
        let (verdict, report) = sturm_positivity(&p, PositivityMode::PositiveOnR).unwrap();
        assert!(verdict);
        assert_eq!(report.real_root_count, 0);
        assert_eq!(
            report.chain,
            vec![
                UniPoly::from_ints(&[1, 0, 1]),
                UniPoly::from_ints(&[0, 2]),
                UniPoly::from_ints(&[-1]),
            ]
        );
        assert!(report.recheck());
    }

    #[test]
    fn quadratic_with_two_roots() {
        let p = UniPoly::from_ints(&[-1, 0, 1]); // t^2 - 1
        let report = SturmReport::whole_line(&p);
        assert_eq!(report.real_root_count, 2);
        let (pos, _) = sturm_positivity(&p, PositivityMode::PositiveOnR).unwrap();
        assert!(!pos);
        let (nonneg, _) = sturm_positivity(&p, PositivityMode::NonnegativeOnR).unwrap();
        assert!(!nonneg);
    }

    #[test]
    fn double_root_is_nonnegative_but_not_positive() {
        let p = UniPoly::from_ints(&[0, 0, 1]); // t^2
        let (nonneg, report) = sturm_positivity(&p, PositivityMode::NonnegativeOnR).unwrap();
        assert!(nonneg);
        assert_eq!(report.real_root_count, 1);
        let (pos, _) = sturm_positivity(&p, PositivityMode::PositiveOnR).unwrap();
        assert!(!pos);
    }

    #[test]
    fn zero_polynomial_positivity_mode_rejected() {
        let err = sturm_positivity(&UniPoly::zero(), PositivityMode::PositiveOnR);
        assert!(err.is_err());
        let (nonneg, _) =
            sturm_positivity(&UniPoly::zero(), PositivityMode::NonnegativeOnR).unwrap();
        assert!(nonneg);
    }

    #[test]
    fn interval_counting() {
        // (t - 1)(t - 3): one root in (0, 2], one in (2, 4]
        let p = UniPoly::from_ints(&[3, -4, 1]);
        let chain = SturmChain::build(&p);
        assert_eq!(chain.count_in(&rat_int(0), &rat_int(2)), 1);
        assert_eq!(chain.count_in(&rat_int(2), &rat_int(4)), 1);
        assert_eq!(chain.count_in(&rat_int(0), &rat_int(4)), 2);
        let report = SturmReport::on_interval(&p, rat_int(0), rat_int(2));
        assert_eq!(report.real_root_count, 1);
        assert!(report.recheck());
    }

    #[test]
    fn isolation_finds_rational_and_irrational_roots() {
        // (t - 1/2)(t - 2): both rational
        let p = UniPoly::new(vec![rat_int(1), rat(-5, 2), rat_int(1)]);
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 2);
        assert!(roots[0].lo < rat(1, 2) && rat(1, 2) < roots[0].hi);
        assert!(roots[1].lo < rat_int(2) && rat_int(2) < roots[1].hi);

        // t^2 - 2: irrational pair, brackets must straddle +-sqrt(2)
        let q = UniPoly::from_ints(&[-2, 0, 1]);
        let roots = isolate_real_roots(&q);
        assert_eq!(roots.len(), 2);
        for root in &roots {
            assert!(q.evaluate(&root.lo) * q.evaluate(&root.hi) < Rational::zero());
        }
        assert!(roots[0].hi <= roots[1].lo);
    }

    #[test]
    fn exact_root_at_bisection_midpoint() {
        // t^3 - t: roots -1, 0, 1; 0 sits exactly at the first midpoint
        let p = UniPoly::from_ints(&[0, -1, 0, 1]);
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 3);
        let exact: Vec<&Rational> =
            roots.iter().filter_map(|r| r.exact.as_ref()).collect();
        assert!(exact.contains(&&rat_int(0)));
    }

    #[test]
    fn negative_point_detection() {
        // t^2 - 1 is negative strictly between the roots
        let p = UniPoly::from_ints(&[-1, 0, 1]);
        let t = negative_point(&p).unwrap();
        assert!(p.evaluate(&t) < Rational::zero());
        assert!(rat_int(-1) < t && t < rat_int(1));

        // t^2 + 1 is never negative
        assert!(negative_point(&UniPoly::from_ints(&[1, 0, 1])).is_none());
        // -(t^2) is negative away from the double root
        let m = UniPoly::from_ints(&[0, 0, -1]);
        let t = negative_point(&m).unwrap();
        assert!(m.evaluate(&t) < Rational::zero());
        // even a tight dip between close roots is found:
        // (t - 1)(t - 101/100) < 0 on (1, 101/100)
        let tight = UniPoly::from_ints(&[-1, 1]).mul(&UniPoly::new(vec![
            rat(-101, 100),
            rat_int(1),
        ]));
        let t = negative_point(&tight).unwrap();
        assert!(tight.evaluate(&t) < Rational::zero());
    }

    #[test]
    fn recheck_rejects_tampered_chain() {
        let p = UniPoly::from_ints(&[1, 0, 1]);
        let mut report = SturmReport::whole_line(&p);
        assert!(report.recheck());
        // Flip the final entry's sign: no longer a negated remainder.
        report.chain[2] = report.chain[2].neg();
        assert!(!report.recheck());

        let mut report2 = SturmReport::whole_line(&p);
        report2.real_root_count = 7;
        assert!(!report2.recheck());
    }

    #[test]
    fn sign_region_samples_cover_all_regions() {
        // (t+2)t^2(t-3): regions (-inf,-2), (-2,0), (0,3), (3,inf)
        let p = UniPoly::from_ints(&[0, 0, 1])
            .mul(&UniPoly::from_ints(&[2, 1]))
            .mul(&UniPoly::from_ints(&[-3, 1]));
        let samples = sign_region_samples(&p);
        assert_eq!(samples.len(), 4);
        let signs: Vec<i32> = samples.iter().map(|t| sign(&p.evaluate(t))).collect();
        assert_eq!(signs, vec![1, -1, -1, 1]);
    }
}
