//! Command-line front end: ideal arithmetic, exact regularity and Betti
//! tables, and verification campaigns over enumerated families.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use monoreg::{
    parse_ideal, regularity, render_ideal, run_campaign, BettiOracle, CampaignConfig, Claim, Error,
    FieldSpec, MonomialIdeal, RingContext,
};

#[derive(Parser)]
#[command(
    name = "monoreg",
    version,
    about = "Exact Castelnuovo-Mumford regularity for monomial ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the regularity of the ideal in FILE.
    Reg(RegArgs),
    /// Print the multigraded Betti table of the ideal in FILE.
    Betti(RegArgs),
    /// Ideal arithmetic; prints the result as an ideal document.
    Op(OpArgs),
    /// Run a verification campaign and report per-claim tallies.
    Verify(VerifyArgs),
    /// Exploratory fuzzing campaigns.
    Fuzz(FuzzArgs),
}

#[derive(Args)]
struct RegArgs {
    /// Ideal document: `vars: x,y` header, one monomial per line.
    file: PathBuf,
    /// Coefficient field: `q` for the rationals or `p:N` for GF(N).
    #[arg(long, default_value = "p:32003", value_parser = parse_field)]
    field: FieldSpec,
    /// Emit JSON instead of plain text.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpKind {
    Product,
    Sum,
    Intersect,
    Colon,
    Power,
}

#[derive(Args)]
struct OpArgs {
    op: OpKind,
    /// First operand (ideal document).
    a: PathBuf,
    /// Second operand: an ideal document, or the exponent for `power`.
    b: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyTarget {
    /// Closed-form regularity of CI powers.
    #[value(name = "thm2.1")]
    Thm21,
    /// Triple product bound for pure power CIs.
    #[value(name = "thm3.2")]
    Thm32,
    /// Pairwise-product sum bound for pure power CIs.
    #[value(name = "lem3.1")]
    Lem31,
    /// Variable-power splitting bound.
    #[value(name = "lem1.2")]
    Lem12,
    /// Fresh-variable power sum shift.
    #[value(name = "lem1.3")]
    Lem13,
    /// Generator-level intersection and colon identities.
    Identities,
    /// Products of variable-generated ideals.
    Linear,
    /// Two-factor CI product bound.
    D2,
    /// Every claim above in one campaign.
    All,
}

impl VerifyTarget {
    fn claims(self) -> BTreeSet<Claim> {
        match self {
            VerifyTarget::Thm21 => BTreeSet::from([Claim::Thm21]),
            VerifyTarget::Thm32 => BTreeSet::from([Claim::Thm32]),
            VerifyTarget::Lem31 => BTreeSet::from([Claim::Lem31]),
            VerifyTarget::Lem12 => BTreeSet::from([Claim::Lem12]),
            VerifyTarget::Lem13 => BTreeSet::from([Claim::Lem13]),
            VerifyTarget::Identities => BTreeSet::from([Claim::ProofIntersect, Claim::ColonCase]),
            VerifyTarget::Linear => BTreeSet::from([Claim::LinearProduct]),
            VerifyTarget::D2 => BTreeSet::from([Claim::D2Product]),
            VerifyTarget::All => Claim::ALL
                .into_iter()
                .filter(|&c| c != Claim::PowerSubadd)
                .collect(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FuzzTarget {
    /// Search for reg(I^2) > 2 reg(I) beyond the CI hypotheses.
    PowerSubadd,
}

#[derive(Args)]
struct CampaignFlags {
    /// Ring variables available to the enumerated/random ideals.
    #[arg(long, default_value_t = 3)]
    max_vars: usize,
    /// Generators per ideal.
    #[arg(long, default_value_t = 2)]
    max_gens: usize,
    /// Variables in the support of one generator.
    #[arg(long, default_value_t = 2)]
    max_support: usize,
    /// Largest exponent per variable.
    #[arg(long, default_value_t = 2)]
    max_exp: u32,
    /// Largest power n.
    #[arg(long, default_value_t = 2)]
    max_n: u32,
    /// Coefficient field: `q` or `p:N`.
    #[arg(long, default_value = "p:32003", value_parser = parse_field)]
    field: FieldSpec,
    /// Seed for the random families.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads (1 = sequential).
    #[arg(long, default_value_t = 1)]
    parallel: usize,
    /// Cross-check every oracle call over the partner field and verify
    /// structural invariants.
    #[arg(long)]
    self_check: bool,
    /// Write the JSON report to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print the JSON report to stdout instead of the summary.
    #[arg(long)]
    json: bool,
}

impl CampaignFlags {
    fn config(&self, budget: usize) -> CampaignConfig {
        CampaignConfig {
            max_vars: self.max_vars,
            max_gens_per_ideal: self.max_gens,
            max_support_per_gen: self.max_support,
            max_exponent: self.max_exp,
            max_power_n: self.max_n,
            field: self.field,
            seed: self.seed,
            instance_budget: budget,
            parallelism: self.parallel,
            self_check: self.self_check,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    target: VerifyTarget,
    /// Cap on instances per claim (random families: base ideals drawn).
    #[arg(long, default_value_t = 10_000_000)]
    budget: usize,
    #[command(flatten)]
    flags: CampaignFlags,
}

#[derive(Args)]
struct FuzzArgs {
    target: FuzzTarget,
    /// Cap on instances per claim (random families: base ideals drawn).
    #[arg(long, default_value_t = 1000)]
    budget: usize,
    #[command(flatten)]
    flags: CampaignFlags,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    FieldSpec::parse_label(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Reg(args) => cmd_reg(args),
        Command::Betti(args) => cmd_betti(args),
        Command::Op(args) => cmd_op(args),
        Command::Verify(args) => cmd_campaign(args.target.claims(), args.budget, args.flags),
        Command::Fuzz(args) => {
            cmd_campaign(BTreeSet::from([Claim::PowerSubadd]), args.budget, args.flags)
        }
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn load_ideal(path: &PathBuf) -> Result<MonomialIdeal, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_ideal(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn cmd_reg(args: RegArgs) -> Result<ExitCode, String> {
    let ideal = load_ideal(&args.file)?;
    let reg = regularity(&ideal, args.field).map_err(|e| e.to_string())?;
    if args.json {
        println!("{}", serde_json::json!({ "reg": reg, "field": args.field }));
    } else {
        println!("{reg}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_betti(args: RegArgs) -> Result<ExitCode, String> {
    let ideal = load_ideal(&args.file)?;
    let oracle = BettiOracle::new(args.field);
    let table = oracle.betti_table(&ideal).map_err(|e| e.to_string())?;
    let degree_label = |a: &[u32]| {
        let parts: Vec<String> = a.iter().map(u32::to_string).collect();
        format!("({})", parts.join(","))
    };
    if args.json {
        let entries: Vec<serde_json::Value> = table
            .entries()
            .iter()
            .map(|(&(i, ref a), &dim)| {
                serde_json::json!({ "i": i, "degree": a, "dim": dim })
            })
            .collect();
        println!(
            "{}",
            serde_json::json!({
                "field": args.field,
                "entries": entries,
                "reg": table.regularity(),
                "pd": table.projective_dimension(),
            })
        );
    } else {
        for (&(i, ref a), &dim) in table.entries() {
            println!("beta {i} {} {dim}", degree_label(a));
        }
        println!("reg {}", table.regularity());
        println!("pd {}", table.projective_dimension());
    }
    Ok(ExitCode::SUCCESS)
}

/// The unit ideal has no canonical generator document; print a marked
/// placeholder instead.
fn print_unit(ctx: &RingContext) {
    print!("vars: {}\n# unit ideal\n1\n", ctx.var_names().join(","));
}

fn cmd_op(args: OpArgs) -> Result<ExitCode, String> {
    let a = load_ideal(&args.a)?;
    let result = match args.op {
        OpKind::Power => {
            let n: u32 = args
                .b
                .parse()
                .map_err(|_| format!("power needs a numeric exponent, got `{}`", args.b))?;
            a.power(n)
        }
        _ => {
            let b = load_ideal(&PathBuf::from(&args.b))?;
            match args.op {
                OpKind::Product => a.product(&b),
                OpKind::Sum => a.sum(&b),
                OpKind::Intersect => a.intersect(&b),
                OpKind::Colon => a.colon(&b),
                OpKind::Power => unreachable!(),
            }
        }
    };
    match result {
        Ok(ideal) => print!("{}", render_ideal(&ideal)),
        Err(Error::UnitIdeal | Error::ColonIsUnit) => print_unit(a.context()),
        Err(e) => return Err(e.to_string()),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_campaign(
    claims: BTreeSet<Claim>,
    budget: usize,
    flags: CampaignFlags,
) -> Result<ExitCode, String> {
    let cfg = flags.config(budget);
    let report = run_campaign(&cfg, &claims).map_err(|e| e.to_string())?;
    if let Some(path) = &flags.out {
        fs::write(path, report.to_json())
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    if flags.json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.human_summary());
    }
    if report.all_passed() && !report.has_errors() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}
