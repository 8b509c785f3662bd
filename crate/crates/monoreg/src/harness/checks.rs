//! Individual claim checkers. Each checker builds a canonical instance id,
//! validates the claim's preconditions (aborting the instance rather than
//! failing it when they do not hold), runs the exact computation, and
//! returns a [`CheckResult`] whose `pass` field reflects the claimed
//! relation.

use std::collections::BTreeSet;

use crate::betti::BettiOracle;
use crate::error::Error;
use crate::field::FieldSpec;
use crate::formulas::{
    fresh_power_sum_reg, pairwise_product_bound, reg_ci_power, split_bound, triple_product_bound,
    CiDegrees,
};
use crate::harness::{CheckAbort, CheckOutcome, CheckResult, Checked, Claim, Finding};
use crate::ideal::MonomialIdeal;
use crate::ring::Monomial;

fn precondition(instance_id: &str, claim: Claim, message: impl Into<String>) -> CheckAbort {
    CheckAbort {
        instance_id: instance_id.to_string(),
        claim,
        message: message.into(),
        guard: false,
    }
}

/// Number of generators by which two canonical generating sets differ; zero
/// exactly when the ideals are equal.
fn generator_symmetric_difference(a: &MonomialIdeal, b: &MonomialIdeal) -> usize {
    let sa: BTreeSet<&Monomial> = a.generators().iter().collect();
    let sb: BTreeSet<&Monomial> = b.generators().iter().collect();
    sa.symmetric_difference(&sb).count()
}

/// Exponent of the pure power generator of `ideal` on variable `v`, if any.
fn pure_exponent(ideal: &MonomialIdeal, v: usize) -> Option<u32> {
    ideal
        .generators()
        .iter()
        .find_map(|g| g.as_pure_power().filter(|&(var, _)| var == v).map(|(_, e)| e))
}

/// Stratum label for a triple of pure power CIs, prefixed by the claim:
/// the maximum number of the three ideals sharing one variable, and for
/// fully shared variables whether the largest exponent `m` exceeds the sum
/// `n + s` of the other two on any such variable.
fn triple_stratum(claim: Claim, i: &MonomialIdeal, j: &MonomialIdeal, k: &MonomialIdeal) -> String {
    let num_vars = i.context().num_vars();
    let mut max_shared = 1usize;
    let mut m_exceeds = false;
    for v in 0..num_vars {
        let exps: Vec<u32> = [i, j, k]
            .iter()
            .filter_map(|ideal| pure_exponent(ideal, v))
            .collect();
        max_shared = max_shared.max(exps.len());
        if exps.len() == 3 {
            let mut e = exps;
            e.sort_unstable_by(|a, b| b.cmp(a));
            if e[0] > e[1] + e[2] {
                m_exceeds = true;
            }
        }
    }
    match max_shared {
        1 => format!("{claim}/shared=1"),
        2 => format!("{claim}/shared=2"),
        _ if m_exceeds => format!("{claim}/shared=3,m>n+s"),
        _ => format!("{claim}/shared=3,m<=n+s"),
    }
}

/// Closed-form regularity of CI powers: reg(I^n) must equal
/// `n·d_1 + Σ_{j≥2} d_j − (s−1)` for a complete intersection with degree
/// sequence `d_1 ≥ d_2 ≥ …`. With `verify_pd` (and `n = 1`) additionally
/// self-checks that the projective dimension is `s − 1`.
pub fn check_ci_power_formula(
    ideal: &MonomialIdeal,
    n: u32,
    oracle: &BettiOracle,
    verify_pd: bool,
) -> CheckOutcome {
    let claim = Claim::Thm21;
    let id = format!("I={};n={n}", ideal.render());
    let fail = |e: Error| CheckAbort::from_error(id.clone(), claim, &e);
    if !ideal.is_regular_sequence().map_err(fail)? {
        return Err(precondition(&id, claim, "generators are not a regular sequence"));
    }
    let degrees = CiDegrees::from_ideal(ideal).map_err(fail)?;
    let predicted = reg_ci_power(&degrees, n);
    let power = ideal.power(n).map_err(fail)?;
    let table = oracle.betti_table(&power).map_err(fail)?;
    if verify_pd && n == 1 {
        let pd = table.projective_dimension();
        if pd != degrees.count() - 1 {
            return Err(precondition(
                &id,
                claim,
                format!(
                    "self-check: projective dimension {pd} differs from s-1 = {}",
                    degrees.count() - 1
                ),
            ));
        }
    }
    Ok(Checked::plain(CheckResult::equality(
        id,
        claim,
        table.regularity() as i64,
        predicted as i64,
        oracle.field(),
    )))
}

fn require_pure_power_triple(
    id: &str,
    claim: Claim,
    ideals: [&MonomialIdeal; 3],
) -> Result<(), CheckAbort> {
    for ideal in ideals {
        let ok = ideal
            .is_pure_power_ci()
            .map_err(|e| CheckAbort::from_error(id.to_string(), claim, &e))?;
        if !ok {
            return Err(precondition(id, claim, "not a pure power complete intersection"));
        }
    }
    Ok(())
}

/// Triple products of pure power CIs: reg(IJK) ≤ reg(I) + reg(J) + reg(K).
/// `regs` may carry precomputed factor regularities.
pub fn check_triple_product_bound(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    k: &MonomialIdeal,
    regs: Option<(u32, u32, u32)>,
    oracle: &BettiOracle,
) -> CheckOutcome {
    let claim = Claim::Thm32;
    let id = format!("I={};J={};K={}", i.render(), j.render(), k.render());
    let fail = |e: Error| CheckAbort::from_error(id.clone(), claim, &e);
    require_pure_power_triple(&id, claim, [i, j, k])?;
    let (ri, rj, rk) = match regs {
        Some(r) => r,
        None => (
            oracle.regularity(i).map_err(fail)?,
            oracle.regularity(j).map_err(fail)?,
            oracle.regularity(k).map_err(fail)?,
        ),
    };
    let product = i.product(j).and_then(|p| p.product(k)).map_err(fail)?;
    let actual = oracle.regularity(&product).map_err(fail)?;
    let stratum = triple_stratum(claim, i, j, k);
    Ok(Checked {
        result: CheckResult::upper_bound(
            id,
            claim,
            actual as i64,
            triple_product_bound(ri, rj, rk) as i64,
            oracle.field(),
        ),
        strata: vec![stratum],
    })
}

/// Sums of pairwise products of pure power CIs:
/// reg(IJ + IK + JK) ≤ reg(I) + reg(J) + reg(K) − 1.
pub fn check_pairwise_product_bound(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    k: &MonomialIdeal,
    regs: Option<(u32, u32, u32)>,
    oracle: &BettiOracle,
) -> CheckOutcome {
    let claim = Claim::Lem31;
    let id = format!("I={};J={};K={}", i.render(), j.render(), k.render());
    let fail = |e: Error| CheckAbort::from_error(id.clone(), claim, &e);
    require_pure_power_triple(&id, claim, [i, j, k])?;
    let (ri, rj, rk) = match regs {
        Some(r) => r,
        None => (
            oracle.regularity(i).map_err(fail)?,
            oracle.regularity(j).map_err(fail)?,
            oracle.regularity(k).map_err(fail)?,
        ),
    };
    let sum = i
        .product(j)
        .and_then(|ij| {
            let ik = i.product(k)?;
            let jk = j.product(k)?;
            ij.sum(&ik)?.sum(&jk)
        })
        .map_err(fail)?;
    let actual = oracle.regularity(&sum).map_err(fail)?;
    let stratum = triple_stratum(claim, i, j, k);
    Ok(Checked {
        result: CheckResult::upper_bound(
            id,
            claim,
            actual as i64,
            pairwise_product_bound(ri, rj, rk) as i64,
            oracle.field(),
        ),
        strata: vec![stratum],
    })
}

/// Splitting bound: reg(I) ≤ max{reg(I + (x^n)), reg(I : x^n) + n}, for any
/// monomial ideal, any variable, any n ≥ 1. Unit-colon instances are tallied
/// under a dedicated stratum.
pub fn check_split_bound(
    ideal: &MonomialIdeal,
    var: usize,
    n: u32,
    oracle: &BettiOracle,
) -> CheckOutcome {
    let claim = Claim::Lem12;
    let id = format!(
        "I={};x={};n={n}",
        ideal.render(),
        ideal.context().var_name(var)
    );
    let fail = |e: Error| CheckAbort::from_error(id.clone(), claim, &e);
    let reg = oracle.regularity(ideal).map_err(fail)?;
    let bound = split_bound(ideal, var, n, oracle).map_err(fail)?;
    let strata = if bound.colon_is_unit {
        vec![format!("{claim}/colon_is_unit")]
    } else {
        Vec::new()
    };
    Ok(Checked {
        result: CheckResult::upper_bound(id, claim, reg as i64, bound.value as i64, oracle.field()),
        strata,
    })
}

/// Fresh-variable power: reg(I + (u)) = reg(I) + deg(u) − 1 when `u` is a
/// power of a variable not appearing in `I`.
pub fn check_fresh_power_sum(
    ideal: &MonomialIdeal,
    u: &Monomial,
    oracle: &BettiOracle,
) -> CheckOutcome {
    let claim = Claim::Lem13;
    let id = format!("I={};u={}", ideal.render(), u.render(ideal.context()));
    let fail = |e: Error| CheckAbort::from_error(id.clone(), claim, &e);
    let Some((v, _)) = u.as_pure_power() else {
        return Err(precondition(&id, claim, "u must be a power of a single variable"));
    };
    if ideal.uses_variable(v) {
        return Err(precondition(&id, claim, "u must involve a variable fresh to I"));
    }
    let base = oracle.regularity(ideal).map_err(fail)?;
    let augmented = ideal
        .sum(&MonomialIdeal::principal(ideal.context().clone(), u.clone()).map_err(fail)?)
        .map_err(fail)?;
    let actual = oracle.regularity(&augmented).map_err(fail)?;
    Ok(Checked::plain(CheckResult::equality(
        id,
        claim,
        actual as i64,
        fresh_power_sum_reg(base, u.degree()) as i64,
        oracle.field(),
    )))
}

/// The intersection identity consumed by the CI power induction: for a
/// complete intersection `I` with a chosen generator `u` and `J` the ideal
/// of the remaining generators, `u·I^(n−1) ∩ J^n = u·J^n` for `n ≥ 2`.
/// Pure generator arithmetic, no homology.
pub fn check_power_intersection_identity(
    ideal: &MonomialIdeal,
    u_index: usize,
    n: u32,
    field: FieldSpec,
) -> CheckOutcome {
    let claim = Claim::ProofIntersect;
    let gens = ideal.generators();
    let u = &gens[u_index];
    let id = format!("I={};u={};n={n}", ideal.render(), u.render(ideal.context()));
    let fail = |e: Error| CheckAbort::from_error(id.clone(), claim, &e);
    if n < 2 {
        return Err(precondition(&id, claim, "the identity concerns n >= 2"));
    }
    if gens.len() < 2 {
        return Err(precondition(&id, claim, "a proper split needs at least two generators"));
    }
    if !ideal.is_regular_sequence().map_err(fail)? {
        return Err(precondition(&id, claim, "generators are not a regular sequence"));
    }
    let rest: Vec<Monomial> = gens
        .iter()
        .enumerate()
        .filter(|&(idx, _)| idx != u_index)
        .map(|(_, g)| g.clone())
        .collect();
    let j = MonomialIdeal::new(ideal.context().clone(), rest).map_err(fail)?;
    let jn = j.power(n).map_err(fail)?;
    let lhs = ideal
        .power(n - 1)
        .map_err(fail)?
        .scale(u)
        .intersect(&jn)
        .map_err(fail)?;
    let rhs = jn.scale(u);
    Ok(Checked::plain(CheckResult::equality(
        id,
        claim,
        generator_symmetric_difference(&lhs, &rhs) as i64,
        0,
        field,
    )))
}

/// The colon identity behind the shared-variable case analysis: with
/// `I = I1 + (x^m)` for a variable `x` fresh to `I1`, `J`, and `K`,
/// `(IJ + IK + JK) : x^m = J + K`. `I1` may be the zero ideal.
pub fn check_colon_case_identity(
    i1: &MonomialIdeal,
    j: &MonomialIdeal,
    k: &MonomialIdeal,
    x: usize,
    m: u32,
    field: FieldSpec,
) -> CheckOutcome {
    let claim = Claim::ColonCase;
    let ctx = j.context().clone();
    let id = format!(
        "I1={};J={};K={};x={};m={m}",
        i1.render(),
        j.render(),
        k.render(),
        ctx.var_name(x)
    );
    let fail = |e: Error| CheckAbort::from_error(id.clone(), claim, &e);
    for (label, ideal) in [("I1", i1), ("J", j), ("K", k)] {
        if ideal.uses_variable(x) {
            return Err(precondition(&id, claim, format!("x must be fresh to {label}")));
        }
    }
    if j.is_zero() || k.is_zero() {
        return Err(precondition(&id, claim, "J and K must be non-zero"));
    }
    let xm = Monomial::pure_power(x, m, ctx.num_vars());
    let i = i1
        .sum(&MonomialIdeal::principal(ctx, xm.clone()).map_err(fail)?)
        .map_err(fail)?;
    let t = i
        .product(j)
        .and_then(|ij| {
            let ik = i.product(k)?;
            let jk = j.product(k)?;
            ij.sum(&ik)?.sum(&jk)
        })
        .map_err(fail)?;
    let lhs = t.colon_monomial(&xm).map_err(fail)?;
    let rhs = j.sum(k).map_err(fail)?;
    Ok(Checked::plain(CheckResult::equality(
        id,
        claim,
        generator_symmetric_difference(&lhs, &rhs) as i64,
        0,
        field,
    )))
}

/// Products of linear monomial ideals: reg(L_1 ⋯ L_d) = d exactly.
pub fn check_linear_product(factors: &[MonomialIdeal], oracle: &BettiOracle) -> CheckOutcome {
    let claim = Claim::LinearProduct;
    let id = format!(
        "L={}",
        factors.iter().map(MonomialIdeal::render).collect::<Vec<_>>().join("*")
    );
    let fail = |e: Error| CheckAbort::from_error(id.clone(), claim, &e);
    if factors.is_empty() {
        return Err(precondition(&id, claim, "an empty product is the unit ideal"));
    }
    for f in factors {
        if f.is_zero() || f.generators().iter().any(|g| g.degree() != 1) {
            return Err(precondition(&id, claim, "factors must be generated by variables"));
        }
    }
    let mut product = factors[0].clone();
    for f in &factors[1..] {
        product = product.product(f).map_err(fail)?;
    }
    let actual = oracle.regularity(&product).map_err(fail)?;
    Ok(Checked::plain(CheckResult::equality(
        id,
        claim,
        actual as i64,
        factors.len() as i64,
        oracle.field(),
    )))
}

/// Two-factor product bound for monomial CIs: reg(IJ) ≤ reg(I) + reg(J).
pub fn check_product_reg_bound(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    regs: Option<(u32, u32)>,
    oracle: &BettiOracle,
) -> CheckOutcome {
    let claim = Claim::D2Product;
    let id = format!("I={};J={}", i.render(), j.render());
    let fail = |e: Error| CheckAbort::from_error(id.clone(), claim, &e);
    for ideal in [i, j] {
        if !ideal.is_regular_sequence().map_err(fail)? {
            return Err(precondition(&id, claim, "factors must be complete intersections"));
        }
    }
    let (ri, rj) = match regs {
        Some(r) => r,
        None => (
            oracle.regularity(i).map_err(fail)?,
            oracle.regularity(j).map_err(fail)?,
        ),
    };
    let actual = oracle.regularity(&i.product(j).map_err(fail)?).map_err(fail)?;
    Ok(Checked::plain(CheckResult::upper_bound(
        id,
        claim,
        actual as i64,
        (ri + rj) as i64,
        oracle.field(),
    )))
}

/// Power subadditivity on complete intersections: reg(I^n) ≤ n·reg(I).
pub fn check_power_subadditivity_ci(
    ideal: &MonomialIdeal,
    n: u32,
    reg_base: Option<u32>,
    oracle: &BettiOracle,
) -> CheckOutcome {
    let claim = Claim::PowerSubadd;
    let id = format!("I={};n={n}", ideal.render());
    let fail = |e: Error| CheckAbort::from_error(id.clone(), claim, &e);
    if n < 2 {
        return Err(precondition(&id, claim, "subadditivity is checked for n >= 2"));
    }
    if !ideal.is_regular_sequence().map_err(fail)? {
        return Err(precondition(&id, claim, "generators are not a regular sequence"));
    }
    let base = match reg_base {
        Some(r) => r,
        None => oracle.regularity(ideal).map_err(fail)?,
    };
    let actual = oracle.regularity(&ideal.power(n).map_err(fail)?).map_err(fail)?;
    Ok(Checked::plain(CheckResult::upper_bound(
        id,
        claim,
        actual as i64,
        (n * base) as i64,
        oracle.field(),
    )))
}

/// Exploratory probe on a general monomial ideal: records a finding when
/// reg(I^2) exceeds 2·reg(I). Such ideals exist, so this is an observation,
/// never a failure.
pub fn probe_square_regularity(
    ideal: &MonomialIdeal,
    oracle: &BettiOracle,
) -> Result<Option<Finding>, CheckAbort> {
    let claim = Claim::PowerSubadd;
    let id = format!("I={}", ideal.render());
    let fail = |e: Error| CheckAbort::from_error(id.clone(), claim, &e);
    let base = oracle.regularity(ideal).map_err(fail)?;
    let square = oracle
        .regularity(&ideal.power(2).map_err(fail)?)
        .map_err(fail)?;
    if square > 2 * base {
        return Ok(Some(Finding {
            instance_id: id,
            description: "reg(I^2) > 2*reg(I)".into(),
            lhs: square as i64,
            rhs: (2 * base) as i64,
        }));
    }
    Ok(None)
}
