//! File formats, rendering, benchmarks and subcommands for the `pathguard`
//! binary.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use pathguard_core::gen::{generate, Family, GadgetCase, GenSpec};
use pathguard_core::oracle::{min_guard_set_exact, min_guards_exact, verify_cover, OracleBudget};
use pathguard_core::vdecomp::DualShape;
use pathguard_core::{plan_guards_with, vertical_decompose, CutPolicy, OrthoPolygon};
use serde_json::json;

pub mod bench;
pub mod format;
pub mod svg;

pub use format::{PlanFile, PolygonFile};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse: {0}")]
    Parse(String),
    #[error(transparent)]
    Core(#[from] pathguard_core::Error),
    #[error("internal: {0}")]
    Internal(String),
}

impl CliError {
    /// 2 invalid polygon, 3 not a path polygon, 4 oracle budget, 5 internal.
    pub fn exit_code(&self) -> u8 {
        use pathguard_core::Error as E;
        match self {
            CliError::Io(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Core(E::NotPathPolygon) => 3,
            CliError::Core(E::BudgetExceeded { .. }) => 4,
            CliError::Core(E::EmptyCorridor) | CliError::Internal(_) => 5,
            CliError::Core(_) => 2,
        }
    }

    pub fn kind(&self) -> String {
        match self {
            CliError::Io(_) => "Io".into(),
            CliError::Parse(_) => "Parse".into(),
            CliError::Internal(_) => "Internal".into(),
            CliError::Core(e) => {
                let dbg = format!("{e:?}");
                dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("").to_string()
            }
        }
    }

    /// One-line JSON diagnostic for stderr.
    pub fn diagnostic(&self) -> String {
        json!({"error": self.kind(), "message": self.to_string(), "exit": self.exit_code()}).to_string()
    }
}

#[derive(Debug, Parser)]
#[command(name = "pathguard", version, about = "Minimum r-guards for orthogonal path polygons")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a polygon file is a valid orthogonal polygon.
    Validate { input: PathBuf },
    /// Print the vertical decomposition.
    Decompose {
        input: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Print the balanced parts and cut reports.
    Partition {
        input: PathBuf,
        /// Keep every cut slab in the current part.
        #[arg(long)]
        keep_cut: bool,
    },
    /// Compute a guard plan.
    Guards {
        input: PathBuf,
        /// Write the plan document here instead of stdout.
        #[arg(long)]
        plan: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Verify coverage and compare with the exact minimum.
        #[arg(long)]
        oracle_check: bool,
        #[arg(long, default_value_t = 400)]
        oracle_budget: usize,
        /// Skip the oracle even if --oracle-check is given.
        #[arg(long)]
        no_oracle: bool,
        #[arg(long)]
        keep_cut: bool,
    },
    /// Exact minimum guard count by brute force.
    Oracle {
        input: PathBuf,
        #[arg(long, default_value_t = 400)]
        oracle_budget: usize,
    },
    /// Generate a polygon file.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// random, comb:K, staircase:K, cross or gadget:a|b|c|d
        #[arg(long, default_value = "random")]
        family: String,
        #[arg(long, default_value_t = 10)]
        slabs: usize,
        #[arg(long, default_value_t = 12)]
        max_height: i64,
        #[arg(long, default_value_t = 4)]
        max_width: i64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Time the pipeline on generated polygons; CSV on stdout.
    Bench {
        /// Comma-separated target vertex counts.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "0")]
        seeds: Vec<u64>,
    },
    /// Render a polygon, optionally with a plan, to SVG.
    Render {
        input: PathBuf,
        #[arg(long)]
        plan: bool,
        #[arg(short, long)]
        output: PathBuf,
    },
}

pub fn read_polygon(path: &Path) -> Result<OrthoPolygon, CliError> {
    PolygonFile::parse(&std::fs::read_to_string(path)?)?.polygon()
}

pub fn parse_family(s: &str) -> Result<Family, CliError> {
    let bad = || CliError::Parse(format!("unknown family {s:?}"));
    let (name, arg) = s.split_once(':').unwrap_or((s, ""));
    let count = || arg.parse::<usize>().map_err(|_| bad());
    Ok(match name {
        "random" => Family::RandomPath,
        "comb" => Family::Comb(count()?),
        "staircase" => Family::Staircase(count()?),
        "cross" => Family::Cross,
        "gadget" => Family::CutGadget(match arg {
            "a" => GadgetCase::A,
            "b" => GadgetCase::B,
            "c" => GadgetCase::C,
            "d" => GadgetCase::D,
            _ => return Err(bad()),
        }),
        _ => return Err(bad()),
    })
}

fn policy(keep_cut: bool) -> CutPolicy {
    if keep_cut {
        CutPolicy::KeepInCurrent
    } else {
        CutPolicy::DeferAfterLocalMinimum
    }
}

fn rect(r: &pathguard_core::Rect) -> serde_json::Value {
    json!([[r.lo.x, r.lo.y], [r.hi.x, r.hi.y]])
}

/// Runs one subcommand, writing its report to `out`. Returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    match cli.command {
        Command::Validate { input } => {
            let p = read_polygon(&input)?;
            writeln!(out, "{}", json!({"valid": true, "n": p.len(), "area": p.area() as i64}))?;
        }
        Command::Decompose { input, svg } => {
            let p = read_polygon(&input)?;
            let s = vertical_decompose(&p);
            let shape = match s.dual_shape() {
                DualShape::Path => "path",
                DualShape::Tree => "tree",
                DualShape::Other => "other",
            };
            let slabs: Vec<_> = s.slabs().iter().map(|x| rect(&x.rect)).collect();
            let shared: Vec<_> = s.shared().iter().map(|x| json!([x.x, x.y0, x.y1])).collect();
            writeln!(out, "{}", json!({"dual_shape": shape, "slabs": slabs, "links": s.links(), "shared": shared}))?;
            if let Some(path) = svg {
                std::fs::write(path, svg::render(&p, Some(&s), None))?;
            }
        }
        Command::Partition { input, keep_cut } => {
            let p = read_polygon(&input)?;
            let plan = pathguard_core::guards::plan_series(&vertical_decompose(&p), policy(keep_cut))?;
            let doc = PlanFile::from_plan(&plan);
            writeln!(out, "{}", json!({"parts": doc.parts, "cut_reports": doc.cut_reports}))?;
        }
        Command::Guards {
            input,
            plan,
            svg,
            oracle_check,
            oracle_budget,
            no_oracle,
            keep_cut,
        } => {
            let p = read_polygon(&input)?;
            let g = plan_guards_with(&p, policy(keep_cut))?;
            let doc = PlanFile::from_plan(&g).to_json();
            match plan {
                Some(path) => std::fs::write(path, &doc)?,
                None => out.write_all(doc.as_bytes())?,
            }
            if let Some(path) = svg {
                std::fs::write(path, svg::render(&p, Some(&vertical_decompose(&p)), Some(&g)))?;
            }
            if oracle_check && !no_oracle {
                let cover = verify_cover(&p, &g.guards)?;
                if !cover.covered {
                    return Err(CliError::Internal(format!(
                        "{} pixels not covered by the plan",
                        cover.uncovered_pixels.len()
                    )));
                }
                match min_guards_exact(&p, OracleBudget { max_pixels: oracle_budget }) {
                    Ok(min) => {
                        let verdict = if min == g.gn { "MATCH" } else { "MISMATCH" };
                        writeln!(out, "oracle: covered=true gn={} min={} {}", g.gn, min, verdict)?;
                    }
                    Err(e @ pathguard_core::Error::BudgetExceeded { .. }) => {
                        writeln!(out, "oracle: covered=true gn={} min=? BUDGET", g.gn)?;
                        return Err(e.into());
                    }
                    Err(e) => return Err(e.into()),
                }
            }
        }
        Command::Oracle { input, oracle_budget } => {
            let p = read_polygon(&input)?;
            let set = min_guard_set_exact(&p, OracleBudget { max_pixels: oracle_budget })?;
            let guards: Vec<_> = set.iter().map(|g| [g.x2, g.y2]).collect();
            writeln!(out, "{}", json!({"min": set.len(), "scale": 2, "guards": guards}))?;
        }
        Command::Gen {
            seed,
            family,
            slabs,
            max_height,
            max_width,
            output,
        } => {
            let spec = GenSpec {
                seed,
                slab_count: slabs,
                max_height,
                max_width,
                family: parse_family(&family)?,
            };
            let p = generate(&spec)?;
            let doc = PolygonFile::from_polygon(&p, Some(format!("{family}-{seed}"))).to_json();
            match output {
                Some(path) => std::fs::write(path, doc)?,
                None => out.write_all(doc.as_bytes())?,
            }
        }
        Command::Bench { sizes, seeds } => {
            writeln!(out, "{}", bench::CSV_HEADER)?;
            for &n in &sizes {
                for &seed in &seeds {
                    writeln!(out, "{}", bench::bench_row(n, seed)?.csv())?;
                }
            }
        }
        Command::Render { input, plan, output } => {
            let p = read_polygon(&input)?;
            let s = vertical_decompose(&p);
            let g = if plan { Some(pathguard_core::guards::plan_series(&s, CutPolicy::default())?) } else { None };
            std::fs::write(output, svg::render(&p, Some(&s), g.as_ref()))?;
        }
    }
    Ok(0)
}
