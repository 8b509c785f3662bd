//! Multigraded Betti numbers and Castelnuovo-Mumford regularity of monomial
//! ideals, computed exactly.
//!
//! For a multidegree `a` the Betti number β_(i,a)(I) equals the dimension of
//! the reduced homology H̃_(i-1) of the upper Koszul complex of `I` at `a`,
//! over the chosen coefficient field. Every nonzero Betti number sits at a
//! multidegree in the lcm lattice of the minimal generators, so sweeping that
//! (finite) lattice yields the full table; then
//!
//! reg(I)  = max { |a| - i : β_(i,a)(I) ≠ 0 }
//! pd(I)   = max { i : β_(i,a)(I) ≠ 0 }
//!
//! with `|a|` the total degree. The regularity here is that of the module
//! `I`; the quotient ring convention differs by one: reg(S/I) = reg(I) - 1.

use std::collections::{BTreeMap, BTreeSet};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::complex::upper_koszul;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::homology::reduced_homology_dims;
use crate::ideal::MonomialIdeal;

/// Complexity limits for the oracle. The lcm lattice can reach 2^g points
/// for g generators and the Koszul sweep is exponential in the number of
/// variables, so both are capped; raise the caps consciously for larger
/// sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guard {
    pub max_generators: usize,
    pub max_num_vars: usize,
}

impl Default for Guard {
    fn default() -> Self {
        Guard { max_generators: 16, max_num_vars: 12 }
    }
}

/// All multidegrees of the lcm lattice of `ideal`: the distinct componentwise
/// maxima over non-empty subsets of the minimal generators, sorted
/// lexicographically. The zero ideal has an empty lattice.
///
/// Computed by closing the generator set under pairwise joins, which reaches
/// every subset join without enumerating the 2^g subsets.
pub fn lcm_lattice_degrees(ideal: &MonomialIdeal, guard: &Guard) -> Result<Vec<Vec<u32>>> {
    let gens = ideal.generators();
    if gens.len() > guard.max_generators {
        return Err(Error::ComplexityGuard {
            what: "minimal generators",
            actual: gens.len(),
            limit: guard.max_generators,
        });
    }
    let num_vars = ideal.context().num_vars();
    if num_vars > guard.max_num_vars {
        return Err(Error::ComplexityGuard {
            what: "ring variables",
            actual: num_vars,
            limit: guard.max_num_vars,
        });
    }
    let mut seen: BTreeSet<Vec<u32>> = gens.iter().map(|g| g.exponents().to_vec()).collect();
    let mut frontier: Vec<Vec<u32>> = seen.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in gens {
                let join: Vec<u32> = a
                    .iter()
                    .zip(g.exponents())
                    .map(|(x, y)| *x.max(y))
                    .collect();
                if seen.insert(join.clone()) {
                    next.push(join);
                }
            }
        }
        frontier = next;
    }
    Ok(seen.into_iter().collect())
}

/// The multigraded Betti table of an ideal: entries `(i, a) -> β_(i,a)`,
/// storing only nonzero values.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Vec<u32>), usize>,
}

impl BettiTable {
    pub fn entries(&self) -> &BTreeMap<(usize, Vec<u32>), usize> {
        &self.entries
    }

    /// β_(i,a), zero when absent.
    pub fn entry(&self, i: usize, a: &[u32]) -> usize {
        self.entries.get(&(i, a.to_vec())).copied().unwrap_or(0)
    }

    /// Total Betti number β_i = Σ_a β_(i,a).
    pub fn total_at(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((j, _), _)| *j == i)
            .map(|(_, d)| d)
            .sum()
    }

    /// Castelnuovo-Mumford regularity read off the table.
    pub fn regularity(&self) -> u32 {
        self.entries
            .keys()
            .map(|(i, a)| a.iter().sum::<u32>() as i64 - *i as i64)
            .max()
            .unwrap_or(0)
            .max(0) as u32
    }

    /// Projective dimension: the largest homological index present.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Exact Betti/regularity oracle for a fixed coefficient field.
///
/// With `cross_check` enabled, every table is recomputed over the partner
/// field ([`FieldSpec::cross_check_partner`]) and the two regularity readings
/// must agree; disagreement surfaces as [`Error::FieldDisagreement`]. The
/// table is also validated against the minimal generators: the homological
/// degree 0 stratum must be exactly one β of value 1 per generator degree.
#[derive(Debug, Clone)]
pub struct BettiOracle {
    field: FieldSpec,
    guard: Guard,
    cross_check: bool,
}

impl BettiOracle {
    pub fn new(field: FieldSpec) -> Self {
        BettiOracle { field, guard: Guard::default(), cross_check: false }
    }

    pub fn with_guard(mut self, guard: Guard) -> Self {
        self.guard = guard;
        self
    }

    pub fn with_cross_check(mut self, on: bool) -> Self {
        self.cross_check = on;
        self
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn guard(&self) -> Guard {
        self.guard
    }

    /// The full multigraded Betti table. Errors on the zero ideal, on guard
    /// violations, and on any self-check failure.
    pub fn betti_table(&self, ideal: &MonomialIdeal) -> Result<BettiTable> {
        let table = self.betti_table_single_field(ideal, self.field)?;
        if self.cross_check {
            let partner_field = self.field.cross_check_partner();
            let partner = self.betti_table_single_field(ideal, partner_field)?;
            let (reg_a, reg_b) = (table.regularity(), partner.regularity());
            if reg_a != reg_b {
                return Err(Error::FieldDisagreement {
                    field_a: self.field.label(),
                    reg_a,
                    field_b: partner_field.label(),
                    reg_b,
                });
            }
        }
        Ok(table)
    }

    fn betti_table_single_field(&self, ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let degrees = lcm_lattice_degrees(ideal, &self.guard)?;

        let compute = |a: &Vec<u32>| -> Vec<((usize, Vec<u32>), usize)> {
            let complex = upper_koszul(ideal, a);
            let h = reduced_homology_dims(&complex, &field);
            h.dims()
                .iter()
                .enumerate()
                .filter(|&(_, &d)| d > 0)
                .map(|(i, &d)| ((i, a.clone()), d))
                .collect()
        };

        #[cfg(feature = "parallel")]
        let per_degree: Vec<Vec<((usize, Vec<u32>), usize)>> =
            degrees.par_iter().map(compute).collect();
        #[cfg(not(feature = "parallel"))]
        let per_degree: Vec<Vec<((usize, Vec<u32>), usize)>> =
            degrees.iter().map(compute).collect();

        let table = BettiTable {
            entries: per_degree.into_iter().flatten().collect(),
        };
        self.validate_generator_stratum(ideal, &table)?;
        Ok(table)
    }

    /// β_(0,a) must be 1 exactly at the multidegrees of the minimal
    /// generators and 0 elsewhere; anything else is an implementation bug.
    fn validate_generator_stratum(&self, ideal: &MonomialIdeal, table: &BettiTable) -> Result<()> {
        let gen_degrees: BTreeSet<Vec<u32>> = ideal
            .generators()
            .iter()
            .map(|g| g.exponents().to_vec())
            .collect();
        let mut seen = BTreeSet::new();
        for ((i, a), d) in table.entries() {
            if *i != 0 {
                continue;
            }
            if *d != 1 || !gen_degrees.contains(a) {
                return Err(Error::Internal(format!(
                    "homological degree 0 entry β(0,{a:?}) = {d} does not match a minimal generator"
                )));
            }
            seen.insert(a.clone());
        }
        if seen != gen_degrees {
            return Err(Error::Internal(
                "homological degree 0 stratum does not cover the minimal generators".into(),
            ));
        }
        Ok(())
    }

    /// Castelnuovo-Mumford regularity of the ideal (module convention).
    pub fn regularity(&self, ideal: &MonomialIdeal) -> Result<u32> {
        Ok(self.betti_table(ideal)?.regularity())
    }

    /// Projective dimension of the ideal.
    pub fn projective_dimension(&self, ideal: &MonomialIdeal) -> Result<usize> {
        Ok(self.betti_table(ideal)?.projective_dimension())
    }
}

/// One-shot regularity with default limits.
pub fn regularity(ideal: &MonomialIdeal, field: FieldSpec) -> Result<u32> {
    BettiOracle::new(field).regularity(ideal)
}

/// One-shot Betti table with default limits.
pub fn betti_table(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    BettiOracle::new(field).betti_table(ideal)
}

/// One-shot projective dimension with default limits.
pub fn projective_dimension(ideal: &MonomialIdeal, field: FieldSpec) -> Result<usize> {
    BettiOracle::new(field).projective_dimension(ideal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Monomial, RingContext};
    use proptest::prelude::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(
            RingContext::new(n),
            gens.iter().map(|e| Monomial::new(e.to_vec())).collect(),
        )
        .unwrap()
    }

    const FIELDS: [FieldSpec; 2] = [FieldSpec::Rationals, FieldSpec::Prime(32003)];

    #[test]
    fn lattice_of_two_variables() {
        let i = ideal(2, &[&[1, 0], &[0, 1]]);
        let lattice = lcm_lattice_degrees(&i, &Guard::default()).unwrap();
        assert_eq!(lattice, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn lattice_closure_matches_subset_enumeration() {
        // Independent oracle: enumerate all non-empty generator subsets
        // directly and collect distinct joins.
        let i = ideal(3, &[&[2, 1, 0], &[0, 3, 1], &[1, 0, 2], &[0, 0, 4]]);
        let gens = i.generators();
        let mut expected = BTreeSet::new();
        for mask in 1u32..(1 << gens.len()) {
            let mut join = vec![0u32; 3];
            for (k, g) in gens.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    for (j, e) in g.exponents().iter().enumerate() {
                        join[j] = join[j].max(*e);
                    }
                }
            }
            expected.insert(join);
        }
        let got = lcm_lattice_degrees(&i, &Guard::default()).unwrap();
        assert_eq!(got, expected.into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn lattice_guard_trips() {
        let gens: Vec<Vec<u32>> = (0..17)
            .map(|k| {
                let mut e = vec![0u32; 2];
                e[0] = k + 1;
                e[1] = 17 - k;
                e
            })
            .collect();
        let refs: Vec<&[u32]> = gens.iter().map(|v| v.as_slice()).collect();
        let i = ideal(2, &refs);
        assert_eq!(i.num_generators(), 17);
        assert!(matches!(
            lcm_lattice_degrees(&i, &Guard::default()),
            Err(Error::ComplexityGuard { what: "minimal generators", .. })
        ));
        let wide = ideal(13, &[&[1; 13]]);
        assert!(matches!(
            lcm_lattice_degrees(&wide, &Guard::default()),
            Err(Error::ComplexityGuard { what: "ring variables", .. })
        ));
    }

    #[test]
    fn table_of_two_variable_maximal_ideal() {
        for f in FIELDS {
            let t = betti_table(&ideal(2, &[&[1, 0], &[0, 1]]), f).unwrap();
            assert_eq!(t.entry(0, &[1, 0]), 1);
            assert_eq!(t.entry(0, &[0, 1]), 1);
            assert_eq!(t.entry(1, &[1, 1]), 1);
            assert_eq!(t.entries().len(), 3);
            assert_eq!(t.regularity(), 1);
            assert_eq!(t.projective_dimension(), 1);
        }
    }

    #[test]
    fn table_of_principal_ideal() {
        for f in FIELDS {
            let t = betti_table(&ideal(1, &[&[1]]), f).unwrap();
            assert_eq!(t.entries().len(), 1);
            assert_eq!(t.entry(0, &[1]), 1);
            assert_eq!(t.regularity(), 1);
            assert_eq!(t.projective_dimension(), 0);
            // A higher-degree principal ideal in more variables.
            let t = betti_table(&ideal(3, &[&[2, 3, 0]]), f).unwrap();
            assert_eq!(t.regularity(), 5);
            assert_eq!(t.projective_dimension(), 0);
        }
    }

    #[test]
    fn table_of_complete_intersection_is_koszul() {
        // (x^3, y^2): Koszul resolution, reg = 3 + 2 - 1 = 4.
        for f in FIELDS {
            let t = betti_table(&ideal(2, &[&[3, 0], &[0, 2]]), f).unwrap();
            assert_eq!(t.entry(0, &[3, 0]), 1);
            assert_eq!(t.entry(0, &[0, 2]), 1);
            assert_eq!(t.entry(1, &[3, 2]), 1);
            assert_eq!(t.entries().len(), 3);
            assert_eq!(t.regularity(), 4);
            assert_eq!(t.projective_dimension(), 1);
        }
    }

    #[test]
    fn table_of_edge_ideal_of_triangle() {
        // (xy, yz, zx): 3 generators, first syzygies 2 at degree (1,1,1).
        for f in FIELDS {
            let t = betti_table(&ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]), f).unwrap();
            assert_eq!(t.total_at(0), 3);
            assert_eq!(t.entry(1, &[1, 1, 1]), 2);
            assert_eq!(t.total_at(1), 2);
            assert_eq!(t.regularity(), 2);
            assert_eq!(t.projective_dimension(), 1);
        }
    }

    #[test]
    fn table_of_squared_maximal_ideal() {
        // (x, y)^2 = (x^2, xy, y^2): β_1 sits at (2,1) and (1,2).
        for f in FIELDS {
            let t = betti_table(&ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]), f).unwrap();
            assert_eq!(t.total_at(0), 3);
            assert_eq!(t.entry(1, &[2, 1]), 1);
            assert_eq!(t.entry(1, &[1, 2]), 1);
            assert_eq!(t.regularity(), 2);
            assert_eq!(t.projective_dimension(), 1);
        }
    }

    #[test]
    fn koszul_complex_of_three_variables() {
        // (x, y, z): β_i = C(3, i+1).
        for f in FIELDS {
            let t = betti_table(&ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), f).unwrap();
            assert_eq!(t.total_at(0), 3);
            assert_eq!(t.total_at(1), 3);
            assert_eq!(t.total_at(2), 1);
            assert_eq!(t.entry(2, &[1, 1, 1]), 1);
            assert_eq!(t.regularity(), 1);
            assert_eq!(t.projective_dimension(), 2);
        }
    }

    #[test]
    fn zero_ideal_rejected() {
        let z = MonomialIdeal::zero(RingContext::new(2));
        assert_eq!(regularity(&z, FieldSpec::Rationals).unwrap_err(), Error::ZeroIdeal);
        assert!(lcm_lattice_degrees(&z, &Guard::default()).unwrap().is_empty());
    }

    #[test]
    fn tables_agree_across_fields_on_examples() {
        let examples = [
            ideal(2, &[&[1, 0], &[0, 1]]),
            ideal(2, &[&[3, 0], &[0, 2]]),
            ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]),
            ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 3, 1]]),
            ideal(4, &[&[1, 1, 0, 0], &[0, 0, 2, 1], &[1, 0, 0, 3]]),
        ];
        for i in &examples {
            let t_q = betti_table(i, FieldSpec::Rationals).unwrap();
            let t_p = betti_table(i, FieldSpec::default_prime()).unwrap();
            assert_eq!(t_q, t_p, "field-independent tables expected for {}", i.render());
        }
    }

    #[test]
    fn cross_check_mode_runs_clean() {
        let oracle = BettiOracle::new(FieldSpec::default_prime()).with_cross_check(true);
        assert_eq!(oracle.regularity(&ideal(2, &[&[3, 0], &[0, 2]])).unwrap(), 4);
        let oracle_q = BettiOracle::new(FieldSpec::Rationals).with_cross_check(true);
        assert_eq!(
            oracle_q
                .regularity(&ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]))
                .unwrap(),
            2
        );
    }

    #[test]
    fn scaling_shifts_regularity_by_the_degree() {
        let m = Monomial::new(vec![2, 1]);
        let base = ideal(2, &[&[1, 0], &[0, 1]]);
        for f in FIELDS {
            assert_eq!(regularity(&base.scale(&m), f).unwrap(), 1 + 3);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        /// The two elimination backends must agree on every random ideal.
        #[test]
        fn regularity_is_field_independent(gens in proptest::collection::vec(
            proptest::collection::vec(0u32..4, 3).prop_filter("unit", |e| e.iter().any(|&x| x > 0)),
            1..5,
        )) {
            let i = MonomialIdeal::new(
                RingContext::new(3),
                gens.into_iter().map(Monomial::new).collect(),
            ).unwrap();
            let r_q = regularity(&i, FieldSpec::Rationals).unwrap();
            let r_p = regularity(&i, FieldSpec::default_prime()).unwrap();
            prop_assert_eq!(r_q, r_p);
        }

        /// Multiplying by a monomial shifts regularity by its degree.
        #[test]
        fn scale_shift_property(
            gens in proptest::collection::vec(
                proptest::collection::vec(0u32..3, 3).prop_filter("unit", |e| e.iter().any(|&x| x > 0)),
                1..4,
            ),
            m in proptest::collection::vec(0u32..3, 3),
        ) {
            let i = MonomialIdeal::new(
                RingContext::new(3),
                gens.into_iter().map(Monomial::new).collect(),
            ).unwrap();
            let m = Monomial::new(m);
            let shifted = i.scale(&m);
            let f = FieldSpec::default_prime();
            prop_assert_eq!(
                regularity(&shifted, f).unwrap(),
                regularity(&i, f).unwrap() + m.degree()
            );
        }

        /// Alternating sums: for every lattice degree, the signed Betti
        /// numbers must match the signed face counts of the Koszul complex
        /// (Euler characteristic), an independent consistency identity.
        #[test]
        fn euler_characteristic_per_multidegree(gens in proptest::collection::vec(
            proptest::collection::vec(0u32..3, 3).prop_filter("unit", |e| e.iter().any(|&x| x > 0)),
            1..4,
        )) {
            let i = MonomialIdeal::new(
                RingContext::new(3),
                gens.into_iter().map(Monomial::new).collect(),
            ).unwrap();
            let f = FieldSpec::default_prime();
            let t = betti_table(&i, f).unwrap();
            for a in lcm_lattice_degrees(&i, &Guard::default()).unwrap() {
                let complex = upper_koszul(&i, &a);
                let faces: i64 = complex
                    .f_vector()
                    .iter()
                    .enumerate()
                    .map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) })
                    .sum();
                let betti: i64 = (0..8)
                    .map(|idx| {
                        let b = t.entry(idx, &a) as i64;
                        if idx % 2 == 0 { b } else { -b }
                    })
                    .sum();
                prop_assert_eq!(betti, faces, "degree {:?}", a);
            }
        }
    }
}
