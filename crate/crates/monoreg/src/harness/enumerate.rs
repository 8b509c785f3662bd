//! Deterministic instance generators: exhaustive complete-intersection
//! families and seeded random monomial ideals.

use itertools::Itertools;
use rand::{Rng, RngExt};

use crate::harness::CampaignConfig;
use crate::ideal::MonomialIdeal;
use crate::ring::{Monomial, RingContext};

/// All monomial complete intersections within the config bounds: 1 to
/// `max_gens_per_ideal` generators with pairwise disjoint supports, each
/// generator supported on at most `max_support_per_gen` of the first
/// `max_vars` variables with exponents in `1..=max_exponent`.
///
/// The order is deterministic: depth-first by generator, generators added in
/// increasing order of their smallest variable.
pub fn enumerate_monomial_cis(cfg: &CampaignConfig) -> Vec<MonomialIdeal> {
    enumerate_cis_in(
        &RingContext::new(cfg.max_vars),
        cfg.max_vars,
        cfg.max_gens_per_ideal,
        cfg.max_support_per_gen,
        cfg.max_exponent,
    )
}

/// The pure power sub-family: every generator a power of a single variable.
pub fn enumerate_pure_power_cis(cfg: &CampaignConfig) -> Vec<MonomialIdeal> {
    enumerate_cis_in(
        &RingContext::new(cfg.max_vars),
        cfg.max_vars,
        cfg.max_gens_per_ideal,
        1,
        cfg.max_exponent,
    )
}

/// Generalized enumeration in an explicit context, restricted to its first
/// `usable_vars` variables (the remaining variables stay fresh, e.g. for
/// families that adjoin a new variable afterwards).
pub fn enumerate_cis_in(
    ctx: &RingContext,
    usable_vars: usize,
    max_gens: usize,
    max_support: usize,
    max_exp: u32,
) -> Vec<MonomialIdeal> {
    assert!(usable_vars <= ctx.num_vars());
    assert!(usable_vars <= 32, "enumeration uses a 32-bit variable mask");
    assert!(max_gens >= 1 && max_support >= 1 && max_exp >= 1);
    let mut out = Vec::new();
    let mut current: Vec<Monomial> = Vec::new();
    extend_ideal(
        ctx,
        usable_vars,
        max_gens,
        max_support,
        max_exp,
        0,
        0,
        &mut current,
        &mut out,
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn extend_ideal(
    ctx: &RingContext,
    usable_vars: usize,
    max_gens: usize,
    max_support: usize,
    max_exp: u32,
    min_first_var: usize,
    used_mask: u32,
    current: &mut Vec<Monomial>,
    out: &mut Vec<MonomialIdeal>,
) {
    if current.len() == max_gens {
        return;
    }
    for first in min_first_var..usable_vars {
        if used_mask >> first & 1 == 1 {
            continue;
        }
        // Remaining support candidates: unused variables above `first`.
        let available: Vec<usize> = ((first + 1)..usable_vars)
            .filter(|v| used_mask >> v & 1 == 0)
            .collect();
        for extra_mask in 0u32..(1 << available.len()) {
            if extra_mask.count_ones() as usize > max_support - 1 {
                continue;
            }
            let mut support = vec![first];
            support.extend(
                available
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| extra_mask >> k & 1 == 1)
                    .map(|(_, &v)| v),
            );
            let support_mask = support.iter().fold(0u32, |m, &v| m | (1 << v));
            for exps in support
                .iter()
                .map(|_| 1..=max_exp)
                .multi_cartesian_product()
            {
                let mut exponents = vec![0u32; ctx.num_vars()];
                for (&v, e) in support.iter().zip(&exps) {
                    exponents[v] = *e;
                }
                current.push(Monomial::new(exponents));
                out.push(
                    MonomialIdeal::new(ctx.clone(), current.clone())
                        .expect("enumerated generators are never units"),
                );
                extend_ideal(
                    ctx,
                    usable_vars,
                    max_gens,
                    max_support,
                    max_exp,
                    first + 1,
                    used_mask | support_mask,
                    current,
                    out,
                );
                current.pop();
            }
        }
    }
}

/// A random monomial ideal: 1 to `max_gens` generators with exponents in
/// `0..=max_exp` over the first `usable_vars` variables of `ctx` (all-zero
/// exponent vectors are re-drawn), then minimalized — so the resulting
/// generator count can be smaller than drawn. Never the zero or unit ideal.
pub fn random_ideal(
    rng: &mut impl Rng,
    ctx: &RingContext,
    usable_vars: usize,
    max_gens: usize,
    max_exp: u32,
) -> MonomialIdeal {
    assert!(usable_vars >= 1 && usable_vars <= ctx.num_vars());
    let count = rng.random_range(1..=max_gens);
    let mut gens = Vec::with_capacity(count);
    for _ in 0..count {
        let exps = loop {
            let candidate: Vec<u32> = (0..ctx.num_vars())
                .map(|v| if v < usable_vars { rng.random_range(0..=max_exp) } else { 0 })
                .collect();
            if candidate.iter().any(|&e| e > 0) {
                break candidate;
            }
        };
        gens.push(Monomial::new(exps));
    }
    MonomialIdeal::new(ctx.clone(), gens).expect("all-zero draws are rejected")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cfg(vars: usize, gens: usize, support: usize, exp: u32) -> CampaignConfig {
        CampaignConfig {
            max_vars: vars,
            max_gens_per_ideal: gens,
            max_support_per_gen: support,
            max_exponent: exp,
            ..CampaignConfig::default()
        }
    }

    #[test]
    fn tiny_family_is_exactly_enumerated() {
        let ideals = enumerate_monomial_cis(&cfg(2, 2, 2, 2));
        let renders: Vec<String> = ideals.iter().map(MonomialIdeal::render).collect();
        assert_eq!(
            renders,
            vec![
                "(x1)",
                "(x1,x2)",
                "(x1,x2^2)",
                "(x1^2)",
                "(x2,x1^2)",
                "(x1^2,x2^2)",
                "(x1*x2)",
                "(x1*x2^2)",
                "(x1^2*x2)",
                "(x1^2*x2^2)",
                "(x2)",
                "(x2^2)",
            ]
        );
    }

    #[test]
    fn pure_powers_in_one_variable() {
        let ideals = enumerate_cis_in(&RingContext::new(1), 1, 1, 1, 3);
        let renders: Vec<String> = ideals.iter().map(MonomialIdeal::render).collect();
        assert_eq!(renders, vec!["(x1)", "(x1^2)", "(x1^3)"]);
    }

    #[test]
    fn pure_power_family_two_vars() {
        let ideals = enumerate_pure_power_cis(&cfg(2, 2, 2, 2));
        assert_eq!(ideals.len(), 8);
        for i in &ideals {
            assert!(i.is_pure_power_ci().unwrap());
        }
    }

    /// Independent count oracle: pick subsets of the explicit candidate
    /// generator list and keep those with pairwise disjoint supports.
    #[test]
    fn count_matches_subset_enumeration() {
        let c = cfg(4, 3, 2, 3);
        let enumerated = enumerate_monomial_cis(&c);

        // Candidate generators: support of size 1 or 2, exponents 1..=3.
        let mut candidates: Vec<Monomial> = Vec::new();
        for mask in 1u32..(1 << 4) {
            let support: Vec<usize> = (0..4).filter(|v| mask >> v & 1 == 1).collect();
            if support.len() > 2 {
                continue;
            }
            for exps in support.iter().map(|_| 1..=3u32).multi_cartesian_product() {
                let mut e = vec![0u32; 4];
                for (&v, &x) in support.iter().zip(&exps) {
                    e[v] = x;
                }
                candidates.push(Monomial::new(e));
            }
        }
        assert_eq!(candidates.len(), 66);

        let disjoint = |a: &Monomial, b: &Monomial| a.disjoint_support(b);
        let mut count: u64 = 66;
        for i in 0..candidates.len() {
            for j in (i + 1)..candidates.len() {
                if disjoint(&candidates[i], &candidates[j]) {
                    count += 1;
                    for k in (j + 1)..candidates.len() {
                        if disjoint(&candidates[i], &candidates[k])
                            && disjoint(&candidates[j], &candidates[k])
                        {
                            count += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(enumerated.len() as u64, count);
        assert_eq!(enumerated.len(), 1281, "closed-form tally for these bounds");
    }

    #[test]
    fn enumerated_ideals_are_distinct_regular_sequences() {
        let ideals = enumerate_monomial_cis(&cfg(3, 3, 2, 2));
        for i in &ideals {
            assert!(i.is_regular_sequence().unwrap());
        }
        let mut renders: Vec<String> = ideals.iter().map(MonomialIdeal::render).collect();
        let before = renders.len();
        renders.sort();
        renders.dedup();
        assert_eq!(renders.len(), before, "no duplicates");
    }

    #[test]
    fn fresh_variable_stays_unused() {
        let ctx = RingContext::new(3);
        let ideals = enumerate_cis_in(&ctx, 2, 2, 1, 2);
        for i in &ideals {
            assert!(!i.uses_variable(2));
        }
        // Same family as two usable vars in a two-variable ring.
        assert_eq!(ideals.len(), enumerate_pure_power_cis(&cfg(2, 2, 1, 2)).len());
    }

    #[test]
    fn random_ideals_are_deterministic_and_bounded() {
        let ctx = RingContext::new(4);
        let mut a = ChaCha8Rng::seed_from_u64(99);
        let mut b = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..50 {
            let i = random_ideal(&mut a, &ctx, 3, 5, 3);
            let j = random_ideal(&mut b, &ctx, 3, 5, 3);
            assert_eq!(i, j);
            assert!(!i.is_zero());
            assert!(i.num_generators() <= 5);
            assert!(!i.uses_variable(3));
            for g in i.generators() {
                assert!(g.exponents().iter().all(|&e| e <= 3));
            }
        }
        let mut c = ChaCha8Rng::seed_from_u64(100);
        let differs = (0..50).any(|_| {
            random_ideal(&mut c, &ctx, 3, 5, 3) != random_ideal(&mut a, &ctx, 3, 5, 3)
        });
        assert!(differs, "different seeds should diverge");
    }
}
