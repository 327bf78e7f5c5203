//! Command-line front end: table verification, bound-checking
//! campaigns, composition-factor reports, Zsigmondy search and the
//! classical constructions.
//!
//! Exit codes: 0 when every check passes with no discrepancies, 10 when
//! the only failures are documented table discrepancies, 1 on a genuine
//! bound violation or error.

use std::collections::BTreeMap;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use oddpart::catalog;
use oddpart::harness;
use oddpart::lie;
use oddpart::linrep;
use oddpart::numth;
use oddpart::perm::{parse_generator_file, write_generator_file};
use oddpart::report::{CampaignReport, TableReport};
use oddpart::structure;

#[derive(Parser)]
#[command(
    name = "oddpart",
    about = "Verification toolkit for bounds on products of odd-order composition factors",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the embedded exceptional-case tables.
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Run an exhaustive bound-checking campaign.
    Scan {
        #[command(subcommand)]
        what: ScanCommand,
    },
    /// Composition-factor report for a generator file.
    AOf {
        /// Path to a generator file (`degree: n` header, one
        /// permutation per line).
        #[arg(long)]
        file: String,
    },
    /// Zsigmondy primes for p^n − 1.
    Zsigmondy {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
        /// Report only witnesses that are large for this threshold.
        #[arg(long)]
        threshold: Option<u128>,
    },
    /// Witness search for one simple group.
    Lemma31(Lemma31Args),
    /// Build a classical group and emit it.
    Construct {
        /// GL, SL, PSL, PGL, AGL, AGammaL, PGammaL, PSigmaL, M10,
        /// S6deg10, M11, M12, M23, M24, or 2^4:A7.
        #[arg(long)]
        name: String,
        /// Comma-separated parameters, e.g. `2,7` for PSL(2,7).
        #[arg(long, default_value = "")]
        params: String,
        /// Action used to turn a matrix group into permutations.
        #[arg(long, default_value = "nonzero-vectors")]
        action: String,
        /// What to emit: `generators` (generator file) or `summary`.
        #[arg(long, default_value = "generators")]
        emit: String,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Tables 1-4: linear and unitary exceptional rows, the remaining
    /// Lie-family sweep, and the exceptional primitive groups.
    Tables {
        #[arg(long)]
        table: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Also build the optional constructions (2^4:A7, degree-10 S6).
        #[arg(long)]
        extended: bool,
        /// Field-size bound for the table-3 sweep.
        #[arg(long, default_value_t = 32)]
        q_max: u64,
        /// Rank bound for the table-3 sweep.
        #[arg(long, default_value_t = 8)]
        rank_max: u32,
    },
}

#[derive(Subcommand)]
enum ScanCommand {
    /// a(G) ≤ 2^(n−1) over all subgroups of S_n.
    Prop41 {
        #[arg(long, default_value_t = 7)]
        max_degree: u32,
        /// Enables degree 8 via pseudorandom sampling (this many
        /// samples).
        #[arg(long)]
        sample: Option<u64>,
    },
    /// a(G) ≤ |V|²/λ over completely reducible subgroups of GL(d,p).
    Thm12 {
        /// Spaces as `d:p` pairs, e.g. `2:2,2:3,3:2,2:5`.
        #[arg(long, default_value = "2:2,2:3,3:2,2:5")]
        spaces: String,
        /// Scan the semilinear group of GF(4)² over F2⁴ instead of the
        /// prime-field spaces.
        #[arg(long)]
        gamma24: bool,
    },
    /// |H| bounds over subgroups of completely reducible solvable
    /// groups.
    Prop21 {
        #[arg(long, default_value = "2:2,2:3,3:2,2:5")]
        spaces: String,
    },
    /// Mixed-characteristic direct products.
    Cor13 {
        /// Pairs as `d1:p1xd2:p2`, e.g. `2:2x1:3,2:3x2:2`.
        #[arg(long, default_value = "2:2x1:3,2:3x2:2")]
        pairs: String,
    },
}

#[derive(Args)]
struct Lemma31Args {
    /// A, 2A, B, C, D, 2D, E6, 2E6, E7, E8, F4, G2, 3D4, 2B2, 2F4, 2G2,
    /// Alt, Sporadic.
    #[arg(long)]
    family: String,
    /// Rank (Lie families) or degree (Alt).
    #[arg(long, default_value_t = 0)]
    n: u32,
    #[arg(long, default_value_t = 0)]
    p: u64,
    /// Field exponent in the family's convention.
    #[arg(long, default_value_t = 0)]
    f: u32,
    /// Sporadic group name (with --family Sporadic).
    #[arg(long)]
    name: Option<String>,
}

fn parse_spaces(text: &str) -> Result<Vec<harness::Space>> {
    text.split(',')
        .map(|tok| {
            let (d, p) = tok
                .split_once(':')
                .with_context(|| format!("space `{tok}` is not of the form d:p"))?;
            Ok((d.trim().parse()?, p.trim().parse()?))
        })
        .collect()
}

fn parse_pairs(text: &str) -> Result<Vec<(harness::Space, harness::Space)>> {
    text.split(',')
        .map(|tok| {
            let (a, b) = tok
                .split_once('x')
                .with_context(|| format!("pair `{tok}` is not of the form d:pxd:p"))?;
            let pa = parse_spaces(a)?;
            let pb = parse_spaces(b)?;
            Ok((pa[0], pb[0]))
        })
        .collect()
}

/// Exit policy: discrepancy-only failures exit 10, violations exit 1.
enum Outcome {
    Clean,
    Discrepancies,
}

fn emit_table(report: &TableReport, format: Format) -> Outcome {
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Csv => print!("{}", report.to_csv()),
    }
    if report.has_discrepancy() {
        Outcome::Discrepancies
    } else {
        Outcome::Clean
    }
}

fn emit_campaign(report: &CampaignReport) -> Result<Outcome> {
    println!("{}", report.to_json());
    if !report.violations.is_empty() {
        bail!(
            "campaign reported {} bound violations",
            report.violations.len()
        );
    }
    Ok(Outcome::Clean)
}

fn run() -> Result<Outcome> {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { what } => {
            let VerifyCommand::Tables {
                table,
                format,
                extended,
                q_max,
                rank_max,
            } = what;
            let report = match table {
                1 => lie::verify_table1()?,
                2 => lie::verify_table2()?,
                3 => lie::sweep_table3(q_max, rank_max)?,
                4 => catalog::verify_table4(extended)?,
                other => bail!("no table {other}; expected 1-4"),
            };
            Ok(emit_table(&report, format))
        }
        Command::Scan { what } => {
            let report = match what {
                ScanCommand::Prop41 { max_degree, sample } => {
                    harness::scan_prop41(max_degree, sample)?
                }
                ScanCommand::Thm12 { spaces, gamma24 } => {
                    if gamma24 {
                        harness::scan_thm12_semilinear_gf4()?
                    } else {
                        harness::scan_thm12(&parse_spaces(&spaces)?)?
                    }
                }
                ScanCommand::Prop21 { spaces } => harness::scan_prop21(&parse_spaces(&spaces)?)?,
                ScanCommand::Cor13 { pairs } => harness::scan_cor13(&parse_pairs(&pairs)?)?,
            };
            emit_campaign(&report)
        }
        Command::AOf { file } => {
            let text =
                std::fs::read_to_string(&file).with_context(|| format!("reading {file}"))?;
            let group = parse_generator_file(&text)?;
            let report = structure::composition_factors(&group)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(Outcome::Clean)
        }
        Command::Zsigmondy { p, n, threshold } => {
            let witnesses = match threshold {
                None => numth::zsigmondy_primes(p, n)?,
                Some(t) => numth::large_zsigmondy(p, n, t)?.into_iter().collect(),
            };
            let mut out = BTreeMap::new();
            out.insert("schema", serde_json::json!("oddpart.zsigmondy/1"));
            out.insert("p", serde_json::json!(p));
            out.insert("n", serde_json::json!(n));
            if let Some(t) = threshold {
                out.insert("threshold", serde_json::json!(t.to_string()));
            }
            out.insert("witnesses", serde_json::to_value(&witnesses)?);
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(Outcome::Clean)
        }
        Command::Lemma31(args) => {
            let spec = match args.family.as_str() {
                "Alt" => lie::LieSpec::alternating(args.n),
                "Sporadic" => {
                    let name = args
                        .name
                        .context("--name is required with --family Sporadic")?;
                    lie::LieSpec::sporadic_by_name(&name)?
                }
                fam => lie::LieSpec::lie(fam.parse()?, args.n, args.p, args.f),
            };
            let order = lie::group_order(&spec)?;
            let out = lie::out_order(&spec)?;
            let outcome = lie::lemma31_witness(&spec)?;
            let mut doc = BTreeMap::new();
            doc.insert("schema", serde_json::json!("oddpart.lemma31/1"));
            doc.insert("group", serde_json::json!(spec.label()));
            doc.insert("order", serde_json::json!(order.order.to_string()));
            doc.insert("d", serde_json::json!(order.d));
            doc.insert("out", serde_json::json!(out.out));
            doc.insert("out_odd", serde_json::json!(out.out_odd));
            doc.insert(
                "route",
                serde_json::json!(if outcome.zsigmondy_failed() {
                    "fallback"
                } else {
                    "zsigmondy"
                }),
            );
            if let lie::Lemma31Outcome::Exception(e) = &outcome {
                doc.insert("failed_sources", serde_json::json!(e.failed_sources));
            }
            match outcome.witness() {
                Some(w) => {
                    doc.insert("witness", serde_json::json!(w.to_map()));
                    println!("{}", serde_json::to_string_pretty(&doc)?);
                    if w.valid {
                        Ok(Outcome::Clean)
                    } else {
                        bail!("witness pair fails the bound")
                    }
                }
                None => {
                    println!("{}", serde_json::to_string_pretty(&doc)?);
                    bail!("no witness pair found")
                }
            }
        }
        Command::Construct {
            name,
            params,
            action,
            emit,
        } => {
            let params: Vec<u64> = if params.trim().is_empty() {
                Vec::new()
            } else {
                params
                    .split(',')
                    .map(|t| t.trim().parse().context("bad parameter"))
                    .collect::<Result<_>>()?
            };
            let group = match name.as_str() {
                "M11" => catalog::mathieu_group(11)?,
                "M12" => catalog::mathieu_group(12)?,
                "M23" => catalog::mathieu_group(23)?,
                "M24" => catalog::mathieu_group(24)?,
                "2^4:A7" => catalog::two_pow4_a7()?,
                other => {
                    let constructed = linrep::classical_construction(other, &params)?;
                    constructed.into_perm(action.parse()?)?
                }
            };
            match emit.as_str() {
                "generators" => print!("{}", write_generator_file(&group)),
                "summary" => {
                    let mut doc = BTreeMap::new();
                    doc.insert("schema", serde_json::json!("oddpart.construct/1"));
                    doc.insert("name", serde_json::json!(name));
                    doc.insert("degree", serde_json::json!(group.degree()));
                    doc.insert("order", serde_json::json!(group.order().to_string()));
                    doc.insert(
                        "odd_part",
                        serde_json::json!(numth::odd_part_big(&group.order()).to_string()),
                    );
                    doc.insert("transitive", serde_json::json!(group.is_transitive()));
                    println!("{}", serde_json::to_string_pretty(&doc)?);
                }
                other => bail!("unknown emit mode `{other}`"),
            }
            Ok(Outcome::Clean)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(Outcome::Clean) => ExitCode::from(0),
        Ok(Outcome::Discrepancies) => ExitCode::from(10),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
