//! Command-line interface: presentations, dimension tables, Weyl group
//! enumeration and the self-verification suites.
//!
//! Exit codes: 0 on success, 1 on a computational or verification failure,
//! 2 on a usage error.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use liecoh::liedata::{self, LieGroup};
use liecoh::weyl::{self, CartanType};
use liecoh::{integral, modp, verify, Error, GradedDims};

#[derive(Parser)]
#[command(
    name = "liecoh",
    about = "Exact integral and mod p cohomology rings of compact simply-connected Lie groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct GroupArgs {
    /// Group name: G2, F4, E6, E7, E8, SU(n), Sp(n) or Spin(n)
    group: String,
    /// Acknowledge that Spin cup lengths use the base-2 logarithm reading
    /// of the catalogue; required for Spin groups
    #[arg(long)]
    assume_spin_log2: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print a ring presentation (the mod p ring by default; --chow,
    /// --free or --torsion select an integral component)
    Present {
        #[command(flatten)]
        group: GroupArgs,
        /// Prime field order (required unless --chow or --free)
        #[arg(short, long)]
        prime: Option<u32>,
        /// The integral image of the map induced from the flag variety
        #[arg(long, conflicts_with_all = ["free", "torsion"])]
        chow: bool,
        /// The free exterior part of the integral cohomology
        #[arg(long, conflicts_with = "torsion")]
        free: bool,
        /// The p-torsion ideal of the integral cohomology (needs --prime)
        #[arg(long)]
        torsion: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print the degreewise integral cohomology groups
    Table {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print graded dimensions of the mod p model (or of its Bockstein
    /// cohomology / Bockstein image)
    Dims {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(short, long)]
        prime: u32,
        /// Dimensions of the Bockstein cohomology instead of the ring
        #[arg(long, conflicts_with = "image")]
        bockstein: bool,
        /// Dimensions of the image of the Bockstein instead of the ring
        #[arg(long)]
        image: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Enumerate a Weyl group by length and compare with the closed form
    Weyl {
        /// Cartan type: A1..A4, B2..B4, C3, D4, G2, F4, E6, E7
        cartan_type: String,
        /// Maximum number of elements to enumerate
        #[arg(long, default_value_t = weyl::DEFAULT_CAP)]
        cap: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run self-verification suites (exit 1 if any check fails)
    Verify {
        /// Suite name (koszul, liedata, modp, integral, weyl, classical)
        /// or "all"
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: u32,
        /// Include the large-rank Weyl enumerations (E6, E7)
        #[arg(long)]
        heavy_weyl: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Emit the embedded group catalogue as JSON for auditing
    DumpTables,
}

fn parse_group(args: &GroupArgs) -> Result<LieGroup, Error> {
    let group: LieGroup = args.group.parse()?;
    let data = liedata::group_data(group)?;
    if data.spin_log2 && !args.assume_spin_log2 {
        return Err(Error::InvalidInput(format!(
            "{group} uses the base-2 logarithm reading of the Spin cup lengths; \
             pass --assume-spin-log2 to accept it"
        )));
    }
    Ok(group)
}

fn emit_json<T: Serialize>(value: &T) -> Result<(), Error> {
    let s = serde_json::to_string_pretty(value)
        .map_err(|e| Error::InvalidInput(format!("serialization failed: {e}")))?;
    println!("{s}");
    Ok(())
}

fn dims_text(dims: &GradedDims) -> String {
    dims.to_pairs()
        .iter()
        .map(|(d, n)| format!("{d}: {n}"))
        .collect::<Vec<_>>()
        .join("\n")
}

#[derive(Serialize)]
struct PresentationOut {
    group: String,
    #[serde(flatten)]
    presentation: liecoh::present::RingPresentation,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    square_annotations: BTreeMap<String, String>,
}

fn presentation_text(out: &PresentationOut) -> String {
    let mut s = String::new();
    let coeff = if out.presentation.coefficient == 0 {
        "Z".to_string()
    } else {
        format!("F_{}", out.presentation.coefficient)
    };
    s.push_str(&format!("{} over {coeff}\n", out.group));
    s.push_str("generators:\n");
    for g in &out.presentation.generators {
        let order = if g.additive_order == 0 {
            "free".to_string()
        } else {
            format!("order {}", g.additive_order)
        };
        s.push_str(&format!("  {} (degree {}, {order})\n", g.name, g.degree));
    }
    if !out.presentation.relations.is_empty() {
        s.push_str("relations:\n");
        for r in &out.presentation.relations {
            s.push_str(&format!("  {r} = 0\n"));
        }
    }
    for (rho, sq) in &out.square_annotations {
        s.push_str(&format!("square: {rho}^2 = {sq}\n"));
    }
    if let Some(dims) = &out.presentation.graded_dims {
        s.push_str(&format!("total dimension: {}\n", dims.total()));
    }
    s
}

fn run_present(
    group: &GroupArgs,
    prime: Option<u32>,
    chow: bool,
    free: bool,
    torsion: bool,
    format: Format,
) -> Result<(), Error> {
    let g = parse_group(group)?;
    let data = liedata::group_data(g)?;
    let mut annotations = BTreeMap::new();
    let presentation = if chow {
        integral::chow_ring(&data)?
    } else if free {
        let fp = integral::free_part(&data)?;
        let mut chow_degrees: BTreeMap<String, u32> = data
            .special
            .iter()
            .map(|s| (format!("x{}", s.degree), s.degree))
            .collect();
        for g in fp.algebra.generators() {
            chow_degrees.insert(g.name.clone(), g.degree);
        }
        for (rho, sq) in &fp.annotations {
            annotations.insert(rho.clone(), sq.render(&chow_degrees));
        }
        liecoh::present::RingPresentation {
            coefficient: 0,
            generators: fp
                .algebra
                .generators()
                .iter()
                .map(|g| liecoh::present::PresGenerator {
                    name: g.name.clone(),
                    degree: g.degree,
                    additive_order: 0,
                })
                .collect(),
            relations: Vec::new(),
            graded_dims: Some(fp.algebra.poincare()),
        }
    } else {
        let p = prime.ok_or_else(|| {
            Error::InvalidInput("--prime is required unless --chow or --free is given".into())
        })?;
        if torsion {
            integral::torsion_presentation(&data, p)?
        } else {
            modp::build_model(g, p)?.ring_presentation()?
        }
    };
    let out = PresentationOut {
        group: g.to_string(),
        presentation,
        square_annotations: annotations,
    };
    match format {
        Format::Json => emit_json(&out)?,
        Format::Text => print!("{}", presentation_text(&out)),
    }
    Ok(())
}

fn run_table(group: &GroupArgs, format: Format) -> Result<(), Error> {
    let g = parse_group(group)?;
    let data = liedata::group_data(g)?;
    let table = integral::assemble(&data)?;
    match format {
        Format::Json => emit_json(&table)?,
        Format::Text => {
            println!("{} (dimension {})", table.group, table.dim);
            for e in &table.entries {
                if e.free == 0 && e.torsion.is_empty() {
                    continue;
                }
                let mut parts = Vec::new();
                if e.free > 0 {
                    parts.push(if e.free == 1 {
                        "Z".to_string()
                    } else {
                        format!("Z^{}", e.free)
                    });
                }
                for (p, n) in &e.torsion {
                    let cyclic = format!("Z/{p}");
                    parts.push(if *n == 1 {
                        cyclic
                    } else {
                        format!("({cyclic})^{n}")
                    });
                }
                println!("H^{} = {}", e.degree, parts.join(" + "));
            }
        }
    }
    Ok(())
}

fn run_dims(
    group: &GroupArgs,
    prime: u32,
    bockstein: bool,
    image: bool,
    format: Format,
) -> Result<(), Error> {
    let g = parse_group(group)?;
    let model = modp::build_model(g, prime)?;
    let dims = if bockstein {
        model.bockstein_cohomology_dims()?
    } else if image {
        model.im_delta_dims()?
    } else {
        model.dims()
    };
    match format {
        Format::Json => emit_json(&dims)?,
        Format::Text => println!("{}", dims_text(&dims)),
    }
    Ok(())
}

fn run_weyl(ty: &str, cap: u64, format: Format) -> Result<(), Error> {
    let ty: CartanType = ty.parse()?;
    let report = weyl::enumerate(ty, cap)?;
    match format {
        Format::Json => emit_json(&report)?,
        Format::Text => {
            println!(
                "{}: order {}, max length {}",
                report.cartan_type, report.order, report.max_length
            );
            for (l, n) in report.length_histogram.iter().enumerate() {
                println!("length {l}: {n}");
            }
            println!("histogram matches the flag Poincare polynomial");
        }
    }
    Ok(())
}

fn run_verify(
    suite: &str,
    seed: u64,
    trials: u32,
    heavy_weyl: bool,
    format: Format,
) -> Result<bool, Error> {
    let opts = verify::Options {
        seed,
        trials,
        heavy_weyl,
    };
    let reports = if suite == "all" {
        verify::run_all(&opts)
    } else {
        vec![verify::run_suite(suite, &opts)?]
    };
    let passed = reports.iter().all(|r| r.passed);
    match format {
        Format::Json => emit_json(&reports)?,
        Format::Text => {
            for r in &reports {
                for c in &r.checks {
                    let status = if c.passed { "ok" } else { "FAIL" };
                    println!("[{}] {status}: {} ({})", r.suite, c.name, c.detail);
                }
                println!(
                    "suite {}: {}",
                    r.suite,
                    if r.passed { "passed" } else { "FAILED" }
                );
            }
        }
    }
    Ok(passed)
}

fn run(cli: &Cli) -> Result<bool, Error> {
    match &cli.command {
        Command::Present {
            group,
            prime,
            chow,
            free,
            torsion,
            format,
        } => run_present(group, *prime, *chow, *free, *torsion, *format).map(|()| true),
        Command::Table { group, format } => run_table(group, *format).map(|()| true),
        Command::Dims {
            group,
            prime,
            bockstein,
            image,
            format,
        } => run_dims(group, *prime, *bockstein, *image, *format).map(|()| true),
        Command::Weyl {
            cartan_type,
            cap,
            format,
        } => run_weyl(cartan_type, *cap, *format).map(|()| true),
        Command::Verify {
            suite,
            seed,
            trials,
            heavy_weyl,
            format,
        } => run_verify(suite, *seed, *trials, *heavy_weyl, *format),
        Command::DumpTables => {
            println!("{}", liedata::dump_tables());
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Error::InvalidInput(msg)) | Err(Error::Unsupported(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
