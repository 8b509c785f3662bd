//! Campaign driver: materializes the instance list for each requested claim,
//! fans the checks out over a dedicated thread pool, and aggregates the
//! outcomes into a deterministic [`Report`].

use std::collections::BTreeSet;
use std::time::Instant;

use itertools::Itertools;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::betti::{BettiOracle, Guard};
use crate::error::Result;
use crate::harness::checks;
use crate::harness::enumerate::{
    enumerate_cis_in, enumerate_monomial_cis, enumerate_pure_power_cis, random_ideal,
};
use crate::harness::{CampaignConfig, Claim, Report};
use crate::ideal::MonomialIdeal;
use crate::ring::{Monomial, RingContext};

/// Runs the requested claims under the given config. Errors only on an
/// invalid config; verification failures and per-instance errors land in the
/// report, not in the `Result`.
pub fn run_campaign(cfg: &CampaignConfig, claims: &BTreeSet<Claim>) -> Result<Report> {
    cfg.validate()?;
    let start = Instant::now();
    let mut report = Report::new(cfg.clone());
    for claim in Claim::ALL {
        if claims.contains(&claim) {
            report.touch_claim(claim);
            run_claim(cfg, claim, &mut report);
        }
    }
    report.finalize();
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// The exploratory power-subadditivity campaign on its own.
pub fn fuzz_power_subadditivity(cfg: &CampaignConfig) -> Result<Report> {
    run_campaign(cfg, &BTreeSet::from([Claim::PowerSubadd]))
}

fn run_claim(cfg: &CampaignConfig, claim: Claim, report: &mut Report) {
    match claim {
        Claim::Thm21 => run_ci_powers(cfg, report),
        Claim::Thm32 | Claim::Lem31 => run_pure_power_triples(cfg, claim, report),
        Claim::Lem12 => run_splits(cfg, report),
        Claim::Lem13 => run_fresh_sums(cfg, report),
        Claim::ProofIntersect => run_power_intersections(cfg, report),
        Claim::ColonCase => run_colon_cases(cfg, report),
        Claim::LinearProduct => run_linear_products(cfg, report),
        Claim::D2Product => run_product_pairs(cfg, report),
        Claim::PowerSubadd => run_power_subadditivity(cfg, report),
    }
}

/// Oracle sized for the campaign: the guard admits one variable beyond
/// `max_vars` (for the fresh-variable families), and linear products get
/// room for their larger minimal generating sets.
fn oracle_for(cfg: &CampaignConfig, claim: Claim) -> BettiOracle {
    let mut guard = Guard::default();
    guard.max_num_vars = guard.max_num_vars.max(cfg.max_vars + 1);
    if claim == Claim::LinearProduct {
        guard.max_generators = guard.max_generators.max(32);
    }
    BettiOracle::new(cfg.field)
        .with_guard(guard)
        .with_cross_check(cfg.self_check)
}

/// Maps `f` over `items` preserving order. With the `parallel` feature the
/// work runs on a dedicated pool of `parallelism` threads; the collected
/// content is identical at any thread count.
#[cfg_attr(not(feature = "parallel"), allow(unused_variables))]
fn execute<T, R, F>(items: Vec<T>, parallelism: usize, f: F) -> Vec<R>
where
    T: Send + Sync,
    R: Send,
    F: Fn(&T) -> R + Send + Sync,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(parallelism).build() {
            return pool.install(|| items.par_iter().map(|t| f(t)).collect());
        }
    }
    items.iter().map(|t| f(t)).collect()
}

fn run_ci_powers(cfg: &CampaignConfig, report: &mut Report) {
    let oracle = oracle_for(cfg, Claim::Thm21);
    let pool = enumerate_monomial_cis(cfg);
    let items: Vec<(usize, u32)> = (0..pool.len())
        .cartesian_product(1..=cfg.max_power_n)
        .take(cfg.instance_budget)
        .collect();
    let outcomes = execute(items, cfg.parallelism, |&(idx, n)| {
        checks::check_ci_power_formula(&pool[idx], n, &oracle, cfg.self_check)
    });
    for o in outcomes {
        report.record(o);
    }
}

fn run_pure_power_triples(cfg: &CampaignConfig, claim: Claim, report: &mut Report) {
    let oracle = oracle_for(cfg, claim);
    let pool = enumerate_pure_power_cis(cfg);
    let regs: Vec<Option<u32>> = pool.iter().map(|i| oracle.regularity(i).ok()).collect();
    let triples: Vec<Vec<usize>> = (0..pool.len())
        .combinations_with_replacement(3)
        .take(cfg.instance_budget)
        .collect();
    let outcomes = execute(triples, cfg.parallelism, |t| {
        let (a, b, c) = (t[0], t[1], t[2]);
        let known = match (regs[a], regs[b], regs[c]) {
            (Some(x), Some(y), Some(z)) => Some((x, y, z)),
            _ => None,
        };
        if claim == Claim::Thm32 {
            checks::check_triple_product_bound(&pool[a], &pool[b], &pool[c], known, &oracle)
        } else {
            checks::check_pairwise_product_bound(&pool[a], &pool[b], &pool[c], known, &oracle)
        }
    });
    for o in outcomes {
        report.record(o);
    }
}

fn run_splits(cfg: &CampaignConfig, report: &mut Report) {
    let oracle = oracle_for(cfg, Claim::Lem12);
    let ctx = RingContext::new(cfg.max_vars);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let draws: Vec<MonomialIdeal> = (0..cfg.instance_budget)
        .map(|_| random_ideal(&mut rng, &ctx, cfg.max_vars, cfg.max_gens_per_ideal, cfg.max_exponent))
        .collect();
    let items: Vec<(usize, usize, u32)> = (0..draws.len())
        .cartesian_product(0..cfg.max_vars)
        .cartesian_product(1..=cfg.max_power_n)
        .map(|((idx, var), n)| (idx, var, n))
        .collect();
    let outcomes = execute(items, cfg.parallelism, |&(idx, var, n)| {
        checks::check_split_bound(&draws[idx], var, n, &oracle)
    });
    for o in outcomes {
        report.record(o);
    }
}

fn run_fresh_sums(cfg: &CampaignConfig, report: &mut Report) {
    let oracle = oracle_for(cfg, Claim::Lem13);
    let num_vars = cfg.max_vars + 1;
    let ctx = RingContext::new(num_vars);
    let fresh = cfg.max_vars;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let items: Vec<(MonomialIdeal, Monomial)> = (0..cfg.instance_budget)
        .map(|_| {
            let ideal =
                random_ideal(&mut rng, &ctx, cfg.max_vars, cfg.max_gens_per_ideal, cfg.max_exponent);
            let d = rng.random_range(1..=cfg.max_exponent + 1);
            (ideal, Monomial::pure_power(fresh, d, num_vars))
        })
        .collect();
    let outcomes = execute(items, cfg.parallelism, |(ideal, u)| {
        checks::check_fresh_power_sum(ideal, u, &oracle)
    });
    for o in outcomes {
        report.record(o);
    }
}

fn run_power_intersections(cfg: &CampaignConfig, report: &mut Report) {
    let pool: Vec<MonomialIdeal> = enumerate_monomial_cis(cfg)
        .into_iter()
        .filter(|i| i.num_generators() >= 2)
        .collect();
    let items: Vec<(usize, usize, u32)> = pool
        .iter()
        .enumerate()
        .flat_map(|(idx, ideal)| {
            (0..ideal.num_generators())
                .cartesian_product(2..=cfg.max_power_n)
                .map(move |(u, n)| (idx, u, n))
        })
        .take(cfg.instance_budget)
        .collect();
    let field = cfg.field;
    let outcomes = execute(items, cfg.parallelism, |&(idx, u, n)| {
        checks::check_power_intersection_identity(&pool[idx], u, n, field)
    });
    for o in outcomes {
        report.record(o);
    }
}

fn run_colon_cases(cfg: &CampaignConfig, report: &mut Report) {
    let ctx = RingContext::new(cfg.max_vars + 1);
    let x = cfg.max_vars;
    let pool = enumerate_cis_in(&ctx, cfg.max_vars, cfg.max_gens_per_ideal, 1, cfg.max_exponent);
    let mut firsts = vec![MonomialIdeal::zero(ctx.clone())];
    firsts.extend(pool.iter().cloned());
    let pairs: Vec<Vec<usize>> = (0..pool.len()).combinations_with_replacement(2).collect();
    let mut items: Vec<(usize, usize, usize, u32)> = Vec::new();
    'fill: for i1 in 0..firsts.len() {
        for pair in &pairs {
            for m in 1..=cfg.max_exponent {
                if items.len() == cfg.instance_budget {
                    break 'fill;
                }
                items.push((i1, pair[0], pair[1], m));
            }
        }
    }
    let field = cfg.field;
    let outcomes = execute(items, cfg.parallelism, |&(i1, j, k, m)| {
        checks::check_colon_case_identity(&firsts[i1], &pool[j], &pool[k], x, m, field)
    });
    for o in outcomes {
        report.record(o);
    }
}

fn run_linear_products(cfg: &CampaignConfig, report: &mut Report) {
    let oracle = oracle_for(cfg, Claim::LinearProduct);
    let ctx = RingContext::new(cfg.max_vars);
    let subsets: Vec<MonomialIdeal> = (1u64..(1u64 << cfg.max_vars))
        .map(|mask| {
            let gens = (0..cfg.max_vars)
                .filter(|v| mask & (1 << v) != 0)
                .map(|v| Monomial::variable(v, cfg.max_vars))
                .collect();
            MonomialIdeal::new(ctx.clone(), gens).expect("variable ideals are proper")
        })
        .collect();
    let mut combos: Vec<Vec<usize>> = Vec::new();
    for d in 1..=3usize {
        combos.extend((0..subsets.len()).combinations_with_replacement(d));
    }
    combos.truncate(cfg.instance_budget);
    let outcomes = execute(combos, cfg.parallelism, |combo| {
        let factors: Vec<MonomialIdeal> = combo.iter().map(|&i| subsets[i].clone()).collect();
        checks::check_linear_product(&factors, &oracle)
    });
    for o in outcomes {
        report.record(o);
    }
}

fn run_product_pairs(cfg: &CampaignConfig, report: &mut Report) {
    let oracle = oracle_for(cfg, Claim::D2Product);
    let pool = enumerate_monomial_cis(cfg);
    let regs: Vec<Option<u32>> = pool.iter().map(|i| oracle.regularity(i).ok()).collect();
    let pairs: Vec<Vec<usize>> = (0..pool.len())
        .combinations_with_replacement(2)
        .take(cfg.instance_budget)
        .collect();
    let outcomes = execute(pairs, cfg.parallelism, |p| {
        let (a, b) = (p[0], p[1]);
        let known = match (regs[a], regs[b]) {
            (Some(x), Some(y)) => Some((x, y)),
            _ => None,
        };
        checks::check_product_reg_bound(&pool[a], &pool[b], known, &oracle)
    });
    for o in outcomes {
        report.record(o);
    }
}

fn run_power_subadditivity(cfg: &CampaignConfig, report: &mut Report) {
    let oracle = oracle_for(cfg, Claim::PowerSubadd);

    // Exhaustive part: complete intersections, where subadditivity is a
    // theorem and every violation is a failure.
    let pool = enumerate_monomial_cis(cfg);
    let ci_items: Vec<(usize, u32)> = (0..pool.len())
        .cartesian_product(2..=cfg.max_power_n)
        .take(cfg.instance_budget)
        .collect();
    let outcomes = execute(ci_items, cfg.parallelism, |&(idx, n)| {
        checks::check_power_subadditivity_ci(&pool[idx], n, None, &oracle)
    });
    for o in outcomes {
        report.record(o);
    }

    // Exploratory part: random general monomial ideals, where reg(I^2) can
    // genuinely exceed 2 reg(I); violations are recorded as findings, never
    // as failures.
    let ctx = RingContext::new(cfg.max_vars);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let probes: Vec<MonomialIdeal> = (0..cfg.instance_budget)
        .map(|_| random_ideal(&mut rng, &ctx, cfg.max_vars, cfg.max_gens_per_ideal, cfg.max_exponent))
        .collect();
    if !probes.is_empty() {
        *report
            .strata
            .entry(format!("{}/probe", Claim::PowerSubadd))
            .or_default() += probes.len() as u64;
    }
    let probe_outcomes = execute(probes, cfg.parallelism, |ideal| {
        checks::probe_square_regularity(ideal, &oracle)
    });
    for out in probe_outcomes {
        match out {
            Ok(Some(finding)) => report.record_finding(finding),
            Ok(None) => {}
            Err(abort) => report.record(Err(abort)),
        }
    }
}
