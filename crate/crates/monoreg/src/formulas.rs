//! Closed-form regularity values and bounds for structured monomial ideals.
//!
//! All formulas use the module convention for regularity (reg of the ideal,
//! not of the quotient ring), matching [`crate::betti`].

use crate::betti::BettiOracle;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::Monomial;

/// Degree sequence of a complete intersection, kept sorted descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CiDegrees {
    degrees: Vec<u32>,
}

impl CiDegrees {
    /// A non-empty list of positive degrees (any order).
    pub fn new(mut degrees: Vec<u32>) -> Result<Self> {
        if degrees.is_empty() || degrees.contains(&0) {
            return Err(Error::InvalidDegrees);
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CiDegrees { degrees })
    }

    /// Degrees of the minimal generators of `ideal`, which must be a
    /// (monomial) complete intersection: generators with pairwise disjoint
    /// supports.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        if !ideal.is_regular_sequence()? {
            return Err(Error::Precondition(
                "generators do not form a regular sequence".into(),
            ));
        }
        CiDegrees::new(ideal.generator_degrees_desc())
    }

    pub fn count(&self) -> usize {
        self.degrees.len()
    }

    /// Degrees sorted descending; `degrees()[0]` is the largest.
    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }
}

/// Regularity of a complete intersection with these generator degrees:
/// `Σ d_j − (s − 1)`.
pub fn reg_ci(d: &CiDegrees) -> u32 {
    let s = d.count() as u32;
    d.degrees().iter().sum::<u32>() - (s - 1)
}

/// Regularity of the n-th power of a complete intersection with these
/// generator degrees, for `n ≥ 1`: with `d_1` the largest degree,
///
/// reg(I^n) = n·d_1 + Σ_{j≥2} d_j − (s − 1).
///
/// At `n = 1` this coincides with [`reg_ci`].
pub fn reg_ci_power(d: &CiDegrees, n: u32) -> u32 {
    assert!(n >= 1, "powers start at n = 1");
    let s = d.count() as u32;
    let rest: u32 = d.degrees()[1..].iter().sum();
    n * d.degrees()[0] + rest - (s - 1)
}

/// Bound for the regularity of a product of three ideals in terms of the
/// factors' regularities: `reg(IJK) ≤ reg(I) + reg(J) + reg(K)`.
pub fn triple_product_bound(reg_i: u32, reg_j: u32, reg_k: u32) -> u32 {
    reg_i + reg_j + reg_k
}

/// Bound for the regularity of the sum of pairwise products:
/// `reg(IJ + IK + JK) ≤ reg(I) + reg(J) + reg(K) − 1`.
pub fn pairwise_product_bound(reg_i: u32, reg_j: u32, reg_k: u32) -> u32 {
    reg_i + reg_j + reg_k - 1
}

/// Predicted regularity after adjoining a power of a fresh variable:
/// if `u` has degree `d` and is regular on the quotient by `I`, then
/// `reg(I + (u)) = reg(I) + d − 1`.
pub fn fresh_power_sum_reg(reg_i: u32, deg_u: u32) -> u32 {
    reg_i + deg_u - 1
}

/// The two branches of the variable-power splitting bound
/// `reg(I) ≤ max{ reg(I + (x^n)), reg(I : x^n) + n }`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitBound {
    /// The combined bound, `max(augmented, colon)`.
    pub value: u32,
    /// `reg(I + (x^n))`.
    pub augmented: u32,
    /// `reg(I : x^n) + n`; when the colon is the unit ideal this is `n`
    /// (the unit ideal contributes no regularity of its own).
    pub colon: u32,
    /// Whether `I : x^n` was the unit ideal, i.e. `x^n ∈ I`.
    pub colon_is_unit: bool,
}

/// Evaluates both branches of the splitting bound for the variable with
/// index `var` and exponent `n ≥ 1`, using `oracle` for the two regularity
/// computations. Errors propagate from the oracle (zero ideal, guards,
/// cross-check failures).
pub fn split_bound(
    ideal: &MonomialIdeal,
    var: usize,
    n: u32,
    oracle: &BettiOracle,
) -> Result<SplitBound> {
    assert!(n >= 1, "the adjoined power must be positive");
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let ctx = ideal.context().clone();
    let xn = Monomial::pure_power(var, n, ctx.num_vars());

    let augmented_ideal = ideal.sum(&MonomialIdeal::principal(ctx, xn.clone())?)?;
    let augmented = oracle.regularity(&augmented_ideal)?;

    // A colon of a non-zero ideal keeps at least one generator, so the
    // quotient below is never the zero ideal.
    let (colon, colon_is_unit) = match ideal.colon_monomial(&xn) {
        Ok(q) => (oracle.regularity(&q)? + n, false),
        Err(Error::ColonIsUnit) => (n, true),
        Err(e) => return Err(e),
    };

    Ok(SplitBound {
        value: augmented.max(colon),
        augmented,
        colon,
        colon_is_unit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::ring::RingContext;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(
            RingContext::new(n),
            gens.iter().map(|e| Monomial::new(e.to_vec())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn degree_sequences() {
        let d = CiDegrees::new(vec![2, 5, 3]).unwrap();
        assert_eq!(d.degrees(), &[5, 3, 2]);
        assert!(CiDegrees::new(vec![]).is_err());
        assert!(CiDegrees::new(vec![2, 0]).is_err());
    }

    #[test]
    fn degrees_from_ideal() {
        let i = ideal(3, &[&[2, 0, 0], &[0, 1, 3]]);
        let d = CiDegrees::from_ideal(&i).unwrap();
        assert_eq!(d.degrees(), &[4, 2]);
        let not_ci = ideal(2, &[&[2, 1], &[0, 3]]);
        assert!(CiDegrees::from_ideal(&not_ci).is_err());
    }

    #[test]
    fn ci_regularity_formula() {
        // Single generator: reg = its degree.
        assert_eq!(reg_ci(&CiDegrees::new(vec![5]).unwrap()), 5);
        // (x^3, y^2): 3 + 2 - 1 = 4.
        assert_eq!(reg_ci(&CiDegrees::new(vec![3, 2]).unwrap()), 4);
        // Three linear forms: 3 - 2 = 1.
        assert_eq!(reg_ci(&CiDegrees::new(vec![1, 1, 1]).unwrap()), 1);
    }

    #[test]
    fn ci_power_formula() {
        let d = CiDegrees::new(vec![3, 2]).unwrap();
        assert_eq!(reg_ci_power(&d, 1), reg_ci(&d));
        assert_eq!(reg_ci_power(&d, 2), 2 * 3 + 2 - 1);
        assert_eq!(reg_ci_power(&d, 3), 3 * 3 + 2 - 1);
        // The largest degree is the one multiplied by n, independent of
        // input order.
        let d = CiDegrees::new(vec![2, 3]).unwrap();
        assert_eq!(reg_ci_power(&d, 2), 7);
    }

    #[test]
    fn formula_matches_oracle_on_small_powers() {
        // Frozen cross-validation of the closed form against the Betti
        // oracle: I = (x^2, y^3), reg(I^2) should be 2*3 + 2 - 1 = 7.
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        let d = CiDegrees::from_ideal(&i).unwrap();
        let oracle = BettiOracle::new(FieldSpec::default_prime());
        for n in 1..=3 {
            assert_eq!(
                oracle.regularity(&i.power(n).unwrap()).unwrap(),
                reg_ci_power(&d, n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn product_bounds() {
        assert_eq!(triple_product_bound(2, 3, 4), 9);
        assert_eq!(pairwise_product_bound(2, 3, 4), 8);
        assert_eq!(pairwise_product_bound(1, 1, 1), 2);
        assert_eq!(fresh_power_sum_reg(3, 4), 6);
    }

    #[test]
    fn split_bound_branches() {
        // I = (y^3) in k[x,y], splitting on x^2: I + (x^2) = (y^3, x^2) has
        // reg 4; I : x^2 = (y^3) has reg 3, so the colon branch is 5.
        let i = ideal(2, &[&[0, 3]]);
        let oracle = BettiOracle::new(FieldSpec::default_prime());
        let b = split_bound(&i, 0, 2, &oracle).unwrap();
        assert_eq!(b.augmented, 4);
        assert_eq!(b.colon, 5);
        assert_eq!(b.value, 5);
        assert!(!b.colon_is_unit);
        // The bound must hold for reg(I) = 3.
        assert!(oracle.regularity(&i).unwrap() <= b.value);
    }

    #[test]
    fn split_bound_unit_colon() {
        // I = (x), splitting on x^1: x ∈ I, so I : x is the unit ideal and
        // the colon branch contributes exactly n = 1.
        let i = ideal(2, &[&[1, 0]]);
        let oracle = BettiOracle::new(FieldSpec::default_prime());
        let b = split_bound(&i, 0, 1, &oracle).unwrap();
        assert!(b.colon_is_unit);
        assert_eq!(b.colon, 1);
        assert_eq!(b.augmented, 1); // I + (x) = (x)
        assert_eq!(b.value, 1);
    }

    #[test]
    fn split_bound_holds_on_mixed_examples() {
        let oracle = BettiOracle::new(FieldSpec::default_prime());
        let shapes = [
            ideal(2, &[&[2, 1], &[0, 3]]),
            ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]),
            ideal(3, &[&[2, 0, 0], &[1, 2, 0], &[0, 0, 3]]),
        ];
        for i in &shapes {
            let reg = oracle.regularity(i).unwrap();
            for var in 0..i.context().num_vars() {
                for n in 1..=3 {
                    let b = split_bound(i, var, n, &oracle).unwrap();
                    assert!(
                        reg <= b.value,
                        "split bound violated for {} at var {var}, n {n}",
                        i.render()
                    );
                }
            }
        }
    }
}
