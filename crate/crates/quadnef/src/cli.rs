//! Argument definitions and command implementations. Commands return their
//! stdout and exit code instead of printing, so they can be tested directly.

use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};

use quadnef_core::bondal::{gen_seq, reconstruct, EightVariant};
use quadnef_core::catalog::{list_cases, verify_cases, CaseSpec, Theorem};
use quadnef_core::cohom::{cohomology_q2, euler_char, ext1_module_profile, BundleNumerics};
use quadnef_core::ktheory::{ses_quotient_chern, twist_chern};
use quadnef_core::pic::BiDegree;

use crate::report::ReportDocument;
use crate::schema::{catalog_from_json, catalog_to_json, to_canonical_json};

pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "quadnef", version, about = "Exact cohomology and classification checks for nef bundles on P1 x P1")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cohomology of the line bundle O(a,b).
    Cohomology {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
    },
    /// Euler characteristic of E(p,q) for a bundle with the given rank and Chern classes.
    Chi {
        r: i64,
        #[arg(allow_negative_numbers = true)]
        c1a: i64,
        #[arg(allow_negative_numbers = true)]
        c1b: i64,
        #[arg(allow_negative_numbers = true)]
        c2: i64,
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
    },
    /// Chern classes of E(la,lb).
    Twist {
        r: i64,
        #[arg(allow_negative_numbers = true)]
        c1a: i64,
        #[arg(allow_negative_numbers = true)]
        c1b: i64,
        #[arg(allow_negative_numbers = true)]
        c2: i64,
        #[arg(allow_negative_numbers = true)]
        la: i64,
        #[arg(allow_negative_numbers = true)]
        lb: i64,
    },
    /// Chern classes of the quotient in 0 -> S -> M -> Q -> 0.
    Ses {
        /// `rank,c1a,c1b,c2` of the subbundle.
        #[arg(long, value_parser = parse_numerics, allow_hyphen_values = true)]
        sub: BundleNumerics,
        /// `rank,c1a,c1b,c2` of the middle term.
        #[arg(long, value_parser = parse_numerics, allow_hyphen_values = true)]
        mid: BundleNumerics,
    },
    /// E2 page and reconstruction ledger for c1 = (2,2) and c2 in {6,7,8}.
    Bondal {
        #[arg(allow_negative_numbers = true)]
        c2: i64,
        #[arg(allow_negative_numbers = true)]
        r: i64,
        /// Torsion variant for c2 = 8; both are shown if omitted.
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
    },
    /// Inspect the family catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
    /// Verify families over a range of ranks.
    Verify {
        /// Which list to verify. Omit when using --catalog.
        #[arg(value_enum)]
        theorem: Option<TheoremArg>,
        #[command(flatten)]
        params: FamilyParams,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        rank_min: i64,
        #[arg(long, default_value_t = 10, allow_negative_numbers = true)]
        rank_max: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Verify the families in this JSON catalog instead of a built-in list.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// List families with their resolutions.
    List {
        #[arg(value_enum, default_value_t = TheoremArg::All)]
        theorem: TheoremArg,
        #[command(flatten)]
        params: FamilyParams,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, clap::Args)]
pub struct FamilyParams {
    /// `a,b` for halfmax and nearmax.
    #[arg(long, value_parser = parse_bidegree, allow_hyphen_values = true)]
    pub c1: Option<BiDegree>,
    /// The `b` of halfmax.
    #[arg(long, allow_negative_numbers = true)]
    pub b_param: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    Main22,
    Quadric21,
    Halfmax,
    Nearmax,
    /// main22 and quadric21, plus nearmax and halfmax when their parameters are given.
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Curve,
    Structure,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

fn parse_ints<const N: usize>(s: &str) -> Result<[i64; N], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(format!("expected {N} comma-separated integers, got {s:?}"));
    }
    let mut out = [0; N];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = p.parse().map_err(|_| format!("{p:?} is not an integer"))?;
    }
    Ok(out)
}

fn parse_bidegree(s: &str) -> Result<BiDegree, String> {
    parse_ints::<2>(s).map(|[a, b]| BiDegree::new(a, b))
}

fn parse_numerics(s: &str) -> Result<BundleNumerics, String> {
    parse_ints::<4>(s).map(|[r, a, b, c2]| BundleNumerics::new(r, BiDegree::new(a, b), c2))
}

/// A command that could not run (exit 2) or ran and found a failure (exit 1).
#[derive(Debug)]
pub enum CliError {
    Usage(anyhow::Error),
    Failure(anyhow::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Failure(_) => EXIT_FAILURE,
        }
    }

    pub fn error(&self) -> &anyhow::Error {
        match self {
            CliError::Usage(e) | CliError::Failure(e) => e,
        }
    }
}

impl From<quadnef_core::Error> for CliError {
    fn from(e: quadnef_core::Error) -> Self {
        match e {
            quadnef_core::Error::Inconsistent { .. } => CliError::Failure(e.into()),
            other => CliError::Usage(other.into()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, code: 0 }
    }
}

type CmdResult = Result<Output, CliError>;

pub fn run(cli: Cli, invocation: Vec<String>) -> CmdResult {
    match cli.command {
        Command::Cohomology { a, b } => Ok(cmd_cohomology(a, b)),
        Command::Chi { r, c1a, c1b, c2, p, q } => cmd_chi(BundleNumerics::new(r, BiDegree::new(c1a, c1b), c2), p, q),
        Command::Twist { r, c1a, c1b, c2, la, lb } => {
            cmd_twist(BundleNumerics::new(r, BiDegree::new(c1a, c1b), c2), BiDegree::new(la, lb))
        }
        Command::Ses { sub, mid } => cmd_ses(sub, mid),
        Command::Bondal { c2, r, variant } => cmd_bondal(c2, r, variant),
        Command::Catalog { action: CatalogCommand::List { theorem, params, format } } => {
            cmd_catalog_list(theorem, params, format)
        }
        Command::Verify { theorem, params, rank_min, rank_max, format, catalog } => {
            let cases = match (theorem, catalog) {
                (Some(_), Some(_)) => return Err(usage("give either a theorem or --catalog, not both")),
                (None, None) => return Err(usage("give a theorem or --catalog")),
                (Some(th), None) => select_cases(th, params)?,
                (None, Some(path)) => load_catalog(&path)?,
            };
            cmd_verify(&cases, rank_min, rank_max, format, invocation)
        }
    }
}

fn usage(msg: &str) -> CliError {
    CliError::Usage(anyhow!("{msg}"))
}

pub fn cmd_cohomology(a: i64, b: i64) -> Output {
    let h = cohomology_q2(BiDegree::new(a, b));
    Output::ok(format!("{h} chi={}\n", h.euler_characteristic()))
}

pub fn cmd_chi(e: BundleNumerics, p: i64, q: i64) -> CmdResult {
    if e.rank < 0 {
        return Err(usage("rank must be non-negative"));
    }
    Ok(Output::ok(format!("{}\n", euler_char(e, p, q))))
}

pub fn cmd_twist(e: BundleNumerics, l: BiDegree) -> CmdResult {
    if e.rank < 0 {
        return Err(usage("rank must be non-negative"));
    }
    Ok(Output::ok(format!("{}\n", twist_chern(e, l))))
}

pub fn cmd_ses(sub: BundleNumerics, mid: BundleNumerics) -> CmdResult {
    Ok(Output::ok(format!("{}\n", ses_quotient_chern(sub, mid)?)))
}

pub fn cmd_bondal(c2: i64, r: i64, variant: Option<VariantArg>) -> CmdResult {
    let variants: Vec<Option<EightVariant>> = match (c2, variant) {
        (8, None) => vec![Some(EightVariant::CurveTorsion), Some(EightVariant::StructureSheaf)],
        (_, v) => vec![v.map(|v| match v {
            VariantArg::Curve => EightVariant::CurveTorsion,
            VariantArg::Structure => EightVariant::StructureSheaf,
        })],
    };
    let e = BundleNumerics::new(r, BiDegree::new(2, 2), c2);
    let mut out = String::new();
    for v in variants {
        let page = gen_seq(c2, r, v)?;
        match v {
            Some(v) => writeln!(out, "E2 page for r={r}, c1=(2,2), c2={c2}, variant {v:?}"),
            None => writeln!(out, "E2 page for r={r}, c1=(2,2), c2={c2}"),
        }
        .unwrap();
        out.push_str(&page.to_string());
        page.check()?;
        writeln!(out, "four-term identity: PASS").unwrap();
        writeln!(out, "page abutment [E] = {}: PASS", page.euler_sum()).unwrap();
        out.push('\n');
    }
    let profile = ext1_module_profile(e)?;
    writeln!(out, "Hom(G,E) = {}", profile.hom).unwrap();
    writeln!(out, "Ext^1(G,E) = {}", profile.ext1).unwrap();
    let k = reconstruct(e)?;
    writeln!(out, "reconstruction [Hom(G,E) (x) G] - [Ext^1(G,E) (x) G] = {k}: PASS").unwrap();
    Ok(Output::ok(out))
}

fn select_cases(th: TheoremArg, p: FamilyParams) -> Result<Vec<CaseSpec>, CliError> {
    let need_c1 = || p.c1.ok_or_else(|| usage("this list needs --c1 a,b"));
    let need_b = || p.b_param.ok_or_else(|| usage("halfmax needs --b-param"));
    let theorems = match th {
        TheoremArg::Main22 => vec![Theorem::Main22],
        TheoremArg::Quadric21 => vec![Theorem::Quadric21],
        TheoremArg::Halfmax => vec![Theorem::HalfMax { c1: need_c1()?, b: need_b()? }],
        TheoremArg::Nearmax => vec![Theorem::NearMax { c1: need_c1()? }],
        TheoremArg::All => {
            let mut v = vec![Theorem::Main22, Theorem::Quadric21];
            if let Some(c1) = p.c1 {
                v.push(Theorem::NearMax { c1 });
                if let Some(b) = p.b_param {
                    v.push(Theorem::HalfMax { c1, b });
                }
            }
            v
        }
    };
    let mut cases = Vec::new();
    for t in theorems {
        cases.extend(list_cases(t)?);
    }
    Ok(cases)
}

fn load_catalog(path: &std::path::Path) -> Result<Vec<CaseSpec>, CliError> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(CliError::Usage)?;
    catalog_from_json(&text).with_context(|| format!("loading {}", path.display())).map_err(CliError::Usage)
}

pub fn cmd_catalog_list(th: TheoremArg, params: FamilyParams, format: Format) -> CmdResult {
    let cases = select_cases(th, params)?;
    match format {
        Format::Json => {
            let mut s = catalog_to_json(&cases).map_err(CliError::Failure)?;
            s.push('\n');
            Ok(Output::ok(s))
        }
        Format::Text => {
            let mut out = String::new();
            for c in &cases {
                writeln!(
                    out,
                    "{}  c2={}  min_rank={}  gg={}",
                    c.id, c.expected_c2, c.min_rank, c.flags.globally_generated
                )
                .unwrap();
                writeln!(out, "    {c}").unwrap();
                if let Some(twin) = &c.twin_of {
                    let how = if c.flags.inferred_by_symmetry { ", inferred by symmetry" } else { "" };
                    writeln!(out, "    twin of {twin}{how}").unwrap();
                }
                if let Some(page) = c.flags.page {
                    writeln!(out, "    arises on the E2 page with c2={}", page.c2()).unwrap();
                }
                for n in &c.notes {
                    writeln!(out, "    note: {n}").unwrap();
                }
            }
            Ok(Output::ok(out))
        }
    }
}

pub fn cmd_verify(
    cases: &[CaseSpec],
    rank_min: i64,
    rank_max: i64,
    format: Format,
    invocation: Vec<String>,
) -> CmdResult {
    let reports = verify_cases(cases, rank_min..=rank_max);
    let doc = ReportDocument::new(invocation, &reports);
    let mut stdout = match format {
        Format::Json => to_canonical_json(&doc).map_err(CliError::Failure)?,
        Format::Text => doc.to_text(),
    };
    if !stdout.ends_with('\n') {
        stdout.push('\n');
    }
    let code = if doc.all_passed() { 0 } else { EXIT_FAILURE };
    Ok(Output { stdout, code })
}
