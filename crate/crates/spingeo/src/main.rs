use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use spingeo::checks::{verify_claim, CLAIMS};
use spingeo::config::Config;
use spingeo::pres::{parse_presentation, Sections};
use spingeo::recipe_file;
use spingeo::report::{svg, write_csv};
use spingeo_core::blocks::BlockSpec;
use spingeo_core::geography::{region_report, RegionBounds};
use spingeo_core::grp::AbelianType;
use spingeo_core::topo::{classification_criterion, Criterion};

/// Exit status: 0 pass, 1 assertion failure, 2 input error.
#[derive(Parser)]
#[command(
    name = "spingeo",
    version,
    about = "Spin symplectic 4-manifold constructions and lattice geography"
)]
struct Cli {
    /// TOML file overriding search bounds and test sets.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a RON recipe file and check its expectations.
    Construct { file: PathBuf },
    /// Run the verification suite for a claim id.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(CLAIMS))]
        claim: String,
    },
    /// Classify lattice points of the region and write CSV or SVG.
    Map {
        #[arg(long)]
        cmax: i64,
        #[arg(long)]
        chimax: i64,
        /// Group such as `trivial`, `Z`, `Z+Z_3`, `Z_3+Z_3`.
        #[arg(long, default_value = "trivial")]
        group: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: PathBuf,
        /// Evaluate every recipe instead of trusting the closed forms.
        #[arg(long)]
        verify: bool,
    },
    /// Print the abelianization of a presentation file.
    Abelianize { file: PathBuf },
    /// Print the fundamental group of a catalog block, e.g. `"AkhmedovParkY(n: 2)"`.
    Presentation { block: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Svg,
}

enum Failure {
    Assertion,
    Input(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cfg = match &cli.config {
        Some(p) => Config::load(p).with_context(|| format!("reading config {}", p.display()))?,
        None => Config::default(),
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.cmd {
        Cmd::Construct { file } => {
            let f = recipe_file::load(&file).map_err(anyhow::Error::from)?;
            let outcome = recipe_file::run(&f).map_err(anyhow::Error::from)?;
            write!(out, "{}", outcome.render()).map_err(anyhow::Error::from)?;
            if !outcome.passed() {
                return Err(Failure::Assertion);
            }
        }
        Cmd::Verify { claim } => {
            let reports = verify_claim(&claim, &cfg)
                .ok_or_else(|| anyhow::anyhow!("unknown claim `{claim}`"))?;
            let mut ok = true;
            for r in &reports {
                write!(out, "{r}").map_err(anyhow::Error::from)?;
                ok &= r.passed();
            }
            writeln!(out, "{claim}: {}", if ok { "pass" } else { "FAIL" })
                .map_err(anyhow::Error::from)?;
            if !ok {
                return Err(Failure::Assertion);
            }
        }
        Cmd::Map {
            cmax,
            chimax,
            group,
            format,
            out: path,
            verify,
        } => {
            if cmax < 0 || chimax < 1 {
                return Err(anyhow::anyhow!("bounds must be positive").into());
            }
            let group: AbelianType = group.parse().map_err(|e| anyhow::anyhow!("{e}"))?;
            if classification_criterion(&group).criterion == Criterion::Unsupported {
                eprintln!("error: unsupported group for classification: {group}; classification column is `unsupported`");
            }
            let bounds = RegionBounds {
                c_max: cmax,
                chi_max: chimax,
                verify,
            };
            let report = region_report(&bounds, &group, &cfg.search_bounds())
                .map_err(|e| anyhow::anyhow!("{e}"))?;
            let file =
                File::create(&path).with_context(|| format!("cannot write {}", path.display()))?;
            let mut w = BufWriter::new(file);
            match format {
                Format::Csv => write_csv(&mut w, &report, &group).context("writing csv")?,
                Format::Svg => w
                    .write_all(svg(&report, cmax, chimax, &group).as_bytes())
                    .context("writing svg")?,
            }
            w.flush().context("flushing output")?;
            writeln!(
                out,
                "{} points: {} strip, {} wedge, {} exceptions",
                report.rows.len(),
                report.count(spingeo_core::geography::Status::NegativeStrip),
                report.count(spingeo_core::geography::Status::WedgeSearch),
                report.count(spingeo_core::geography::Status::Exception),
            )
            .map_err(anyhow::Error::from)?;
            if verify && report.rows.iter().any(|r| r.verified == Some(false)) {
                return Err(Failure::Assertion);
            }
        }
        Cmd::Abelianize { file } => {
            let src = std::fs::read_to_string(&file)
                .with_context(|| format!("reading {}", file.display()))?;
            let p =
                parse_presentation(&src).map_err(|e| anyhow::anyhow!("{}:{e}", file.display()))?;
            let ab = p.identify_abelian();
            writeln!(out, "{ab}").map_err(anyhow::Error::from)?;
            writeln!(out, "factors: {:?}", ab.factors()).map_err(anyhow::Error::from)?;
            writeln!(out, "tag: {:?}", ab.tag()).map_err(anyhow::Error::from)?;
        }
        Cmd::Presentation { block } => {
            let spec: BlockSpec =
                ron::from_str(&block).with_context(|| format!("parsing block `{block}`"))?;
            let m = spec.build().map_err(|e| anyhow::anyhow!("{e}"))?;
            write!(out, "# {}\n{}", m.name, Sections(&m.pi1)).map_err(anyhow::Error::from)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Assertion) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
