pub mod betti;
pub mod complex;
pub mod error;
pub mod field;
pub mod formulas;
pub mod harness;
pub mod homology;
pub mod ideal;
pub mod parse;
pub mod rank;
pub mod ring;

pub use betti::{betti_table, lcm_lattice_degrees, projective_dimension, regularity, BettiOracle, BettiTable, Guard};
pub use complex::{upper_koszul, SimplicialComplex};
pub use error::{Error, Result};
pub use field::{FieldSpec, DEFAULT_PRIME};
pub use formulas::{
    fresh_power_sum_reg, pairwise_product_bound, reg_ci, reg_ci_power, split_bound,
    triple_product_bound, CiDegrees, SplitBound,
};
pub use harness::{
    fuzz_power_subadditivity, run_campaign, CampaignConfig, CheckResult, Claim, ClaimStats, Report,
};
pub use homology::{reduced_homology_dims, HomologyDims};
pub use ideal::MonomialIdeal;
pub use parse::{parse_ideal, render_ideal, ParseError, ParseErrorKind};
pub use ring::{Monomial, RingContext};
