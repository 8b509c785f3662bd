//! Verification harness: sweeps structured families of monomial ideals and
//! checks closed-form regularity claims against the exact Betti oracle,
//! aggregating everything into a deterministic, JSON-serializable report.

pub mod campaign;
pub mod checks;
pub mod enumerate;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;

pub use campaign::{fuzz_power_subadditivity, run_campaign};
pub use enumerate::{enumerate_monomial_cis, enumerate_pure_power_cis, random_ideal};

/// Bounds and knobs for one verification campaign.
///
/// `instance_budget` caps the instances per claim; for the seeded random
/// families it is the number of base ideals drawn (each base ideal may fan
/// out into several checks). A budget of zero produces an empty report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignConfig {
    /// Number of ring variables the enumerated/random ideals may use.
    /// Families that adjoin a fresh variable work in a ring with one more.
    pub max_vars: usize,
    /// Maximum generators per enumerated or random ideal.
    pub max_gens_per_ideal: usize,
    /// Maximum variables in the support of a single enumerated generator.
    pub max_support_per_gen: usize,
    /// Maximum exponent per variable in a generator.
    pub max_exponent: u32,
    /// Powers `n` run from 1 to this bound.
    pub max_power_n: u32,
    /// Coefficient field for the oracle.
    pub field: FieldSpec,
    /// Seed for the random families; identical configs give identical reports.
    pub seed: u64,
    /// Cap on instances per claim (see above).
    pub instance_budget: usize,
    /// Worker threads; 1 means fully sequential.
    pub parallelism: usize,
    /// Re-verify every oracle call over the partner field and check
    /// structural invariants (minimal-generator stratum, complete
    /// intersections having projective dimension s-1).
    pub self_check: bool,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            max_vars: 3,
            max_gens_per_ideal: 2,
            max_support_per_gen: 2,
            max_exponent: 2,
            max_power_n: 2,
            field: FieldSpec::default_prime(),
            seed: 0,
            instance_budget: 10_000_000,
            parallelism: 1,
            self_check: false,
        }
    }
}

impl CampaignConfig {
    pub fn validate(&self) -> Result<()> {
        let positive: [(&str, usize); 5] = [
            ("max_vars", self.max_vars),
            ("max_gens_per_ideal", self.max_gens_per_ideal),
            ("max_support_per_gen", self.max_support_per_gen),
            ("max_exponent", self.max_exponent as usize),
            ("max_power_n", self.max_power_n as usize),
        ];
        for (name, v) in positive {
            if v == 0 {
                return Err(Error::Precondition(format!("{name} must be at least 1")));
            }
        }
        if self.parallelism == 0 {
            return Err(Error::Precondition("parallelism must be at least 1".into()));
        }
        if self.max_vars > 32 {
            return Err(Error::Precondition("max_vars is limited to 32".into()));
        }
        Ok(())
    }
}

/// Tags for the verifiable claims. The serialized names are the stable
/// external interface used in reports and on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Claim {
    /// Powers of complete intersections match the closed-form regularity.
    #[serde(rename = "THM_2_1")]
    Thm21,
    /// Triple products of pure power CIs obey the sum-of-regularities bound.
    #[serde(rename = "THM_3_2")]
    Thm32,
    /// Sums of pairwise products of pure power CIs obey the bound minus one.
    #[serde(rename = "LEM_3_1")]
    Lem31,
    /// Splitting on a variable power bounds the regularity.
    #[serde(rename = "LEM_1_2")]
    Lem12,
    /// Adjoining a power of a fresh variable shifts regularity by deg - 1.
    #[serde(rename = "LEM_1_3")]
    Lem13,
    /// The scaled-power intersection identity behind the CI power formula.
    #[serde(rename = "PROOF_INTERSECT")]
    ProofIntersect,
    /// The colon identity behind the shared-variable case analysis.
    #[serde(rename = "COLON_CASE")]
    ColonCase,
    /// Products of linear monomial ideals have regularity exactly d.
    #[serde(rename = "LINEAR_PRODUCT")]
    LinearProduct,
    /// Products of two monomial CIs obey the two-factor sum bound.
    #[serde(rename = "D2_PRODUCT")]
    D2Product,
    /// Power subadditivity: CI sweep plus random exploration for
    /// reg(I^2) > 2 reg(I) findings.
    #[serde(rename = "POWER_SUBADD")]
    PowerSubadd,
}

impl Claim {
    pub const ALL: [Claim; 10] = [
        Claim::Thm21,
        Claim::Thm32,
        Claim::Lem31,
        Claim::Lem12,
        Claim::Lem13,
        Claim::ProofIntersect,
        Claim::ColonCase,
        Claim::LinearProduct,
        Claim::D2Product,
        Claim::PowerSubadd,
    ];

    /// The stable serialized name.
    pub fn name(&self) -> &'static str {
        match self {
            Claim::Thm21 => "THM_2_1",
            Claim::Thm32 => "THM_3_2",
            Claim::Lem31 => "LEM_3_1",
            Claim::Lem12 => "LEM_1_2",
            Claim::Lem13 => "LEM_1_3",
            Claim::ProofIntersect => "PROOF_INTERSECT",
            Claim::ColonCase => "COLON_CASE",
            Claim::LinearProduct => "LINEAR_PRODUCT",
            Claim::D2Product => "D2_PRODUCT",
            Claim::PowerSubadd => "POWER_SUBADD",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Relation asserted between the two sides of a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "EQ")]
    Eq,
    #[serde(rename = "LE")]
    Le,
}

/// Outcome of one checked instance. The invariant `pass ⟺ relation holds
/// between lhs and rhs` is enforced by the constructors. Ideal-equality
/// checks encode the size of the symmetric difference of the generator sets
/// as `lhs` against `rhs = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub instance_id: String,
    pub claim: Claim,
    pub lhs: i64,
    pub rhs: i64,
    pub relation: Relation,
    pub pass: bool,
    pub field: FieldSpec,
}

impl CheckResult {
    pub fn equality(instance_id: String, claim: Claim, lhs: i64, rhs: i64, field: FieldSpec) -> Self {
        CheckResult { instance_id, claim, lhs, rhs, relation: Relation::Eq, pass: lhs == rhs, field }
    }

    pub fn upper_bound(instance_id: String, claim: Claim, lhs: i64, rhs: i64, field: FieldSpec) -> Self {
        CheckResult { instance_id, claim, lhs, rhs, relation: Relation::Le, pass: lhs <= rhs, field }
    }

    /// A bound that is met with equality (the interesting sharp cases).
    pub fn is_tight(&self) -> bool {
        self.relation == Relation::Le && self.lhs == self.rhs
    }
}

/// A checked instance together with the strata it should be tallied under.
#[derive(Debug, Clone)]
pub struct Checked {
    pub result: CheckResult,
    pub strata: Vec<String>,
}

impl Checked {
    pub fn plain(result: CheckResult) -> Self {
        Checked { result, strata: Vec::new() }
    }
}

/// An instance that could not be checked. `guard` marks complexity-guard
/// skips, which are tallied but not reported as errors.
#[derive(Debug, Clone)]
pub struct CheckAbort {
    pub instance_id: String,
    pub claim: Claim,
    pub message: String,
    pub guard: bool,
}

impl CheckAbort {
    pub fn from_error(instance_id: String, claim: Claim, e: &Error) -> Self {
        CheckAbort {
            instance_id,
            claim,
            message: e.to_string(),
            guard: matches!(e, Error::ComplexityGuard { .. }),
        }
    }
}

pub type CheckOutcome = std::result::Result<Checked, CheckAbort>;

/// Serialized form of a non-guard abort.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceError {
    pub instance_id: String,
    pub claim: Claim,
    pub message: String,
}

/// An exploratory observation that is interesting but not a failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub instance_id: String,
    pub description: String,
    pub lhs: i64,
    pub rhs: i64,
}

/// Per-claim tallies.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimStats {
    pub checked: u64,
    pub passed: u64,
    pub failed: u64,
    /// Upper-bound checks met with equality.
    pub tight: u64,
}

/// Deterministic campaign report. With a fixed config (seed included), every
/// field except `wall_time_ms` is byte-identical across runs and thread
/// counts.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub config: CampaignConfig,
    pub claims: BTreeMap<Claim, ClaimStats>,
    pub strata: BTreeMap<String, u64>,
    pub failures: Vec<CheckResult>,
    pub errors: Vec<InstanceError>,
    pub findings: Vec<Finding>,
    pub guard_skipped: u64,
    pub wall_time_ms: u64,
}

impl Report {
    pub fn new(config: CampaignConfig) -> Self {
        Report {
            config,
            claims: BTreeMap::new(),
            strata: BTreeMap::new(),
            failures: Vec::new(),
            errors: Vec::new(),
            findings: Vec::new(),
            guard_skipped: 0,
            wall_time_ms: 0,
        }
    }

    /// Ensures a claim appears in the tallies even with zero instances.
    pub fn touch_claim(&mut self, claim: Claim) {
        self.claims.entry(claim).or_default();
    }

    pub fn record(&mut self, outcome: CheckOutcome) {
        match outcome {
            Ok(Checked { result, strata }) => {
                let stats = self.claims.entry(result.claim).or_default();
                stats.checked += 1;
                if result.pass {
                    stats.passed += 1;
                } else {
                    stats.failed += 1;
                }
                if result.is_tight() {
                    stats.tight += 1;
                }
                for s in strata {
                    *self.strata.entry(s).or_default() += 1;
                }
                if !result.pass {
                    self.failures.push(result);
                }
            }
            Err(abort) => {
                self.touch_claim(abort.claim);
                if abort.guard {
                    self.guard_skipped += 1;
                } else {
                    self.errors.push(InstanceError {
                        instance_id: abort.instance_id,
                        claim: abort.claim,
                        message: abort.message,
                    });
                }
            }
        }
    }

    pub fn record_finding(&mut self, finding: Finding) {
        self.findings.push(finding);
    }

    /// Sorts the failure and error lists into their canonical order.
    pub fn finalize(&mut self) {
        self.failures
            .sort_by(|a, b| (a.claim, &a.instance_id).cmp(&(b.claim, &b.instance_id)));
        self.errors
            .sort_by(|a, b| (a.claim, &a.instance_id).cmp(&(b.claim, &b.instance_id)));
        self.findings
            .sort_by(|a, b| (&a.instance_id, &a.description).cmp(&(&b.instance_id, &b.description)));
    }

    /// No failed checks (instance errors are listed separately).
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn has_errors(&self) -> bool {
        !self.errors.is_empty()
    }

    /// Pretty JSON with a trailing newline; deterministic field order.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization cannot fail");
        s.push('\n');
        s
    }

    /// JSON with `wall_time_ms` zeroed, for byte-comparing two runs.
    pub fn to_json_excluding_wall_time(&self) -> String {
        let mut clone = self.clone();
        clone.wall_time_ms = 0;
        clone.to_json()
    }

    /// Short human-readable summary, one line per claim plus totals.
    pub fn human_summary(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "field {}  seed {}  budget {}  parallelism {}\n",
            self.config.field, self.config.seed, self.config.instance_budget, self.config.parallelism
        ));
        for (claim, stats) in &self.claims {
            out.push_str(&format!(
                "{}: checked {}, passed {}, failed {}, tight {}\n",
                claim, stats.checked, stats.passed, stats.failed, stats.tight
            ));
        }
        for (stratum, count) in &self.strata {
            out.push_str(&format!("stratum {stratum}: {count}\n"));
        }
        if self.guard_skipped > 0 {
            out.push_str(&format!("guard-skipped: {}\n", self.guard_skipped));
        }
        const SHOW: usize = 20;
        for f in self.failures.iter().take(SHOW) {
            out.push_str(&format!(
                "FAIL {} {}: {} {} {}\n",
                f.claim,
                f.instance_id,
                f.lhs,
                match f.relation { Relation::Eq => "!=", Relation::Le => ">" },
                f.rhs
            ));
        }
        if self.failures.len() > SHOW {
            out.push_str(&format!("... and {} more failures\n", self.failures.len() - SHOW));
        }
        for e in self.errors.iter().take(SHOW) {
            out.push_str(&format!("ERROR {} {}: {}\n", e.claim, e.instance_id, e.message));
        }
        if self.errors.len() > SHOW {
            out.push_str(&format!("... and {} more errors\n", self.errors.len() - SHOW));
        }
        for f in self.findings.iter().take(SHOW) {
            out.push_str(&format!(
                "finding {}: {} ({} vs {})\n",
                f.instance_id, f.description, f.lhs, f.rhs
            ));
        }
        if self.findings.len() > SHOW {
            out.push_str(&format!("... and {} more findings\n", self.findings.len() - SHOW));
        }
        out.push_str(&format!(
            "result: {}  (wall time {} ms)\n",
            if self.all_passed() { "PASS" } else { "FAIL" },
            self.wall_time_ms
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_result_invariant() {
        let f = FieldSpec::default_prime();
        let eq = CheckResult::equality("a".into(), Claim::Thm21, 4, 4, f);
        assert!(eq.pass);
        assert!(!eq.is_tight(), "tightness is reserved for bounds");
        let bad = CheckResult::equality("a".into(), Claim::Thm21, 4, 5, f);
        assert!(!bad.pass);
        let le = CheckResult::upper_bound("a".into(), Claim::Thm32, 3, 5, f);
        assert!(le.pass && !le.is_tight());
        let sharp = CheckResult::upper_bound("a".into(), Claim::Thm32, 5, 5, f);
        assert!(sharp.pass && sharp.is_tight());
        let over = CheckResult::upper_bound("a".into(), Claim::Thm32, 6, 5, f);
        assert!(!over.pass);
    }

    #[test]
    fn report_tallies_and_sorting() {
        let mut r = Report::new(CampaignConfig::default());
        let f = FieldSpec::default_prime();
        r.record(Ok(Checked::plain(CheckResult::equality("b".into(), Claim::Thm21, 1, 1, f))));
        r.record(Ok(Checked {
            result: CheckResult::upper_bound("a".into(), Claim::Thm21, 5, 4, f),
            strata: vec!["s1".into()],
        }));
        r.record(Err(CheckAbort {
            instance_id: "c".into(),
            claim: Claim::Lem12,
            message: "boom".into(),
            guard: false,
        }));
        r.record(Err(CheckAbort {
            instance_id: "d".into(),
            claim: Claim::Lem12,
            message: "too big".into(),
            guard: true,
        }));
        r.finalize();
        let stats = r.claims[&Claim::Thm21];
        assert_eq!((stats.checked, stats.passed, stats.failed), (2, 1, 1));
        assert_eq!(r.claims[&Claim::Lem12].checked, 0);
        assert_eq!(r.strata["s1"], 1);
        assert_eq!(r.guard_skipped, 1);
        assert_eq!(r.errors.len(), 1);
        assert!(!r.all_passed());
        assert!(r.has_errors());
    }

    #[test]
    fn json_is_deterministic_and_round_trips() {
        let mut r = Report::new(CampaignConfig::default());
        r.record(Ok(Checked::plain(CheckResult::equality(
            "x".into(),
            Claim::LinearProduct,
            2,
            2,
            FieldSpec::Rationals,
        ))));
        r.finalize();
        r.wall_time_ms = 1234;
        let a = r.to_json();
        let b = r.to_json();
        assert_eq!(a, b);
        assert!(a.contains("\"LINEAR_PRODUCT\""));
        assert!(a.ends_with('\n'));
        let masked = r.to_json_excluding_wall_time();
        assert!(masked.contains("\"wall_time_ms\": 0"));
        let back: Report = serde_json::from_str(&a).unwrap();
        assert_eq!(back.claims[&Claim::LinearProduct].checked, 1);
        assert_eq!(back.config, r.config);
    }

    #[test]
    fn claim_names_are_stable() {
        for c in Claim::ALL {
            let json = serde_json::to_string(&c).unwrap();
            assert_eq!(json, format!("\"{}\"", c.name()));
            let back: Claim = serde_json::from_str(&json).unwrap();
            assert_eq!(back, c);
        }
    }

    #[test]
    fn config_validation() {
        assert!(CampaignConfig::default().validate().is_ok());
        let mut bad = CampaignConfig::default();
        bad.max_exponent = 0;
        assert!(bad.validate().is_err());
        let mut bad = CampaignConfig::default();
        bad.parallelism = 0;
        assert!(bad.validate().is_err());
        let mut zero_budget = CampaignConfig::default();
        zero_budget.instance_budget = 0;
        assert!(zero_budget.validate().is_ok(), "a zero budget is a valid empty campaign");
    }
}
