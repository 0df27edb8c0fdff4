//! Argument definitions and job dispatch.

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use arank_core::bounds::bound_report_with_stop;
use arank_core::complex::{
    build_complex, verify_cover_conditions, ComplexContext, EXACT_SWEEP_LIMIT,
};
use arank_core::cone::minimal_nonfaces;
use arank_core::configuration::circuits;
use arank_core::grading::{finest_grading, Grading, PositivityWitness};
use arank_core::mat::IntMatrix;
use clap::{Args, Parser, Subcommand};

use crate::error::CliError;
use crate::formats;
use crate::report::{
    BoundsReport, CircuitsReport, ComplexReport, Format, GradingCheckReport, GradingReport,
    GradingSideOut, GroupOut, MatrixOut, NonfaceOut, NonfacesReport, PositiveReport, Render,
    SaturateReport, SeedReport, SnfReport, VerifyCoverReport,
};
use crate::seed;

#[derive(Parser)]
#[command(
    name = "arank",
    version,
    about = "Exact multigraded specialization analysis and arithmetical-rank bounds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,

    /// Write a built-in example's input files (available: cube) before
    /// running; without a subcommand, just write them.
    #[arg(long, value_name = "NAME", global = true)]
    pub seed_example: Option<String>,

    /// Directory for --seed-example output.
    #[arg(long, value_name = "DIR", default_value = ".", global = true)]
    pub out_dir: PathBuf,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Wall-clock limit in seconds for the branch-and-bound searches.
    #[arg(long, value_name = "SECONDS", global = true)]
    pub time_limit: Option<u64>,

    /// Node cap for the branch-and-bound searches (polled every 1024
    /// nodes); a stopped search reports the proven bracket, uncertified
    /// unless its endpoints already met (exit code 4 when uncertified).
    #[arg(long, value_name = "N", global = true)]
    pub budget: Option<u64>,
}

/// Where the main grading comes from: a bipartite graph's edge
/// configuration, a configuration matrix, or a relation-lattice basis.
#[derive(Args)]
#[group(required = true, multiple = false)]
pub struct SourceArgs {
    /// Graph file ("vertices edges", then 1-based "i j" lines).
    #[arg(long, value_name = "FILE")]
    pub graph: Option<PathBuf>,

    /// Configuration file (matrix whose columns are the degrees).
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Grading file ("n", then a relation-lattice basis matrix).
    #[arg(long, value_name = "FILE")]
    pub grading: Option<PathBuf>,
}

#[derive(Subcommand)]
pub enum Command {
    /// Smith normal form of an integer matrix.
    Snf {
        #[arg(long, value_name = "FILE")]
        matrix: PathBuf,
    },
    /// Saturate a lattice and report the quotient group structure.
    Saturate {
        /// Lattice file in the grading format.
        #[arg(long, value_name = "FILE")]
        lattice: PathBuf,
    },
    /// Check whether --spec is a specialization of the main grading.
    GradingCheck {
        #[command(flatten)]
        source: SourceArgs,
        /// `identity` or a grading/configuration/graph file.
        #[arg(long, value_name = "SPEC")]
        spec: String,
    },
    /// Meet of two gradings (quotient by the sum of the lattices).
    Meet {
        /// First grading/configuration/graph file.
        #[arg(long, value_name = "FILE")]
        a: PathBuf,
        /// Second grading/configuration/graph file.
        #[arg(long, value_name = "FILE")]
        b: PathBuf,
    },
    /// Join of two gradings (quotient by the intersection).
    Join {
        /// First grading/configuration/graph file.
        #[arg(long, value_name = "FILE")]
        a: PathBuf,
        /// Second grading/configuration/graph file.
        #[arg(long, value_name = "FILE")]
        b: PathBuf,
    },
    /// Finest grading making every polynomial in the file homogeneous.
    Finest {
        /// Polynomial file (one polynomial per blank-line-separated block).
        #[arg(long, value_name = "FILE")]
        polys: PathBuf,
    },
    /// Positivity of a grading, with a checkable witness either way.
    Positive {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Circuits of a configuration.
    Circuits {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Minimal non-faces of the configuration's cone.
    Nonfaces {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// The simplicial complex D_F^G for a specialization pair.
    Complex {
        #[command(flatten)]
        source: SourceArgs,
        /// `identity` or a grading/configuration/graph file.
        #[arg(long, value_name = "SPEC")]
        spec: String,
    },
    /// Full bound report: gamma, delta, height, floors, generator sets.
    Bounds {
        #[command(flatten)]
        source: SourceArgs,
        /// `identity` or a grading/configuration/graph file.
        #[arg(long, value_name = "SPEC")]
        spec: String,
        /// Polynomial files to audit as candidate generating sets.
        #[arg(long, value_name = "FILE")]
        gens: Vec<PathBuf>,
    },
    /// Check the covering conditions of a polynomial set on D_F^G.
    VerifyCover {
        #[command(flatten)]
        source: SourceArgs,
        /// `identity` or a grading/configuration/graph file.
        #[arg(long, value_name = "SPEC")]
        spec: String,
        #[arg(long, value_name = "FILE")]
        gens: PathBuf,
    },
}

pub struct Outcome {
    /// Report on stdout.
    pub text: String,
    /// Notices for stderr (seeded files).
    pub notices: Vec<String>,
    pub exit: u8,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Io { path: path.to_path_buf(), source: e })
}

fn stem(path: &Path) -> String {
    path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

impl SourceArgs {
    fn load(&self) -> Result<Grading, CliError> {
        if let Some(path) = &self.graph {
            let g = formats::parse_graph(path, &read(path)?)?;
            return Ok(Grading::from_configuration(&g.configuration()?));
        }
        if let Some(path) = &self.config {
            let cfg = formats::parse_config(path, &read(path)?)?;
            return Ok(Grading::from_configuration(&cfg));
        }
        let path = self.grading.as_ref().expect("clap enforces one source");
        formats::parse_grading(path, &read(path)?)
    }
}

/// Load a grading from a file whose kind is chosen by extension
/// (`.graph`, `.config`, `.grading`/`.lattice`); unknown extensions are
/// accepted only for grading files, whose first line is a single number.
fn load_any(path: &Path) -> Result<Grading, CliError> {
    let src = read(path)?;
    let ext = path.extension().map(|e| e.to_string_lossy().into_owned()).unwrap_or_default();
    match ext.as_str() {
        "graph" => {
            let g = formats::parse_graph(path, &src)?;
            Ok(Grading::from_configuration(&g.configuration()?))
        }
        "config" => Ok(Grading::from_configuration(&formats::parse_config(path, &src)?)),
        "grading" | "lattice" => formats::parse_grading(path, &src),
        _ => {
            let first = src
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty() && !l.starts_with('#'))
                .unwrap_or("");
            if first.split_whitespace().count() == 1 {
                formats::parse_grading(path, &src)
            } else {
                Err(CliError::Usage(format!(
                    "cannot infer the kind of `{}`: use a .graph, .config or .grading extension",
                    path.display()
                )))
            }
        }
    }
}

/// `identity` keeps the main grading; anything else is a file.
fn load_spec(spec: &str) -> Result<Option<Grading>, CliError> {
    if spec == "identity" {
        Ok(None)
    } else {
        load_any(Path::new(spec)).map(Some)
    }
}

fn require_specialization(g: &Grading, f: &Grading) -> Result<(), CliError> {
    if !f.is_specialization_of(g)? {
        return Err(CliError::Core(arank_core::Error::NotASpecialization));
    }
    Ok(())
}

struct Limits {
    deadline: Option<Instant>,
    budget: Option<u64>,
    polls: u64,
}

impl Limits {
    fn new(cli_time: Option<u64>, cli_budget: Option<u64>) -> Self {
        Limits {
            deadline: cli_time.map(|s| Instant::now() + Duration::from_secs(s)),
            budget: cli_budget,
            polls: 0,
        }
    }

    fn stop(&mut self) -> bool {
        self.polls += 1;
        let over_budget =
            self.budget.is_some_and(|b| self.polls.saturating_mul(1024) > b);
        let over_time = self.deadline.is_some_and(|d| Instant::now() > d);
        over_budget || over_time
    }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    let mut notices = Vec::new();
    let seeded: Option<Vec<PathBuf>> = match &cli.seed_example {
        Some(name) => {
            let written = seed::materialize(name, &cli.out_dir)?;
            for p in &written {
                notices.push(format!("wrote {}", p.display()));
            }
            Some(written)
        }
        None => None,
    };
    let Some(command) = cli.command else {
        let Some(written) = seeded else {
            return Err(CliError::Usage(
                "a subcommand or --seed-example is required (see --help)".to_string(),
            ));
        };
        let report = SeedReport {
            files: written.iter().map(|p| p.display().to_string()).collect(),
        };
        return Ok(Outcome { text: report.emit(cli.format), notices: Vec::new(), exit: 0 });
    };

    let mut limits = Limits::new(cli.time_limit, cli.budget);
    let (text, exit) = dispatch(command, cli.format, &mut limits)?;
    Ok(Outcome { text, notices, exit })
}

fn dispatch(command: Command, format: Format, limits: &mut Limits) -> Result<(String, u8), CliError> {
    match command {
        Command::Snf { matrix } => {
            let m = formats::parse_matrix(&matrix, &read(&matrix)?)?;
            let s = m.snf();
            let report = SnfReport {
                rank: s.rank,
                diag: s.diag.iter().map(|d| d.to_string()).collect(),
                left: MatrixOut::new(&s.left),
                right: MatrixOut::new(&s.right),
                diagonal: MatrixOut::new(&s.diagonal_matrix()),
            };
            Ok((report.emit(format), 0))
        }
        Command::Saturate { lattice } => {
            let g = formats::parse_grading(&lattice, &read(&lattice)?)?;
            let l = g.lattice();
            let sat = l.saturation();
            let report = SaturateReport {
                ambient: l.ambient(),
                rank: l.rank(),
                was_saturated: l.is_saturated(),
                quotient: GroupOut::new(&l.group_structure()),
                basis: MatrixOut::new(l.basis()),
                saturation: MatrixOut::new(sat.basis()),
            };
            Ok((report.emit(format), 0))
        }
        Command::GradingCheck { source, spec } => {
            let g = source.load()?;
            let f = load_spec(&spec)?.unwrap_or_else(|| g.clone());
            let report = GradingCheckReport {
                ambient: g.ambient(),
                main: GradingSideOut {
                    rank: g.height(),
                    group: GroupOut::new(g.group_structure()),
                },
                spec: GradingSideOut {
                    rank: f.height(),
                    group: GroupOut::new(f.group_structure()),
                },
                is_specialization: f.is_specialization_of(&g)?,
                is_equivalent: f.is_equivalent_to(&g)?,
            };
            Ok((report.emit(format), 0))
        }
        Command::Meet { a, b } => {
            let m = load_any(&a)?.meet(&load_any(&b)?)?;
            Ok((GradingReport::new(&m).emit(format), 0))
        }
        Command::Join { a, b } => {
            let j = load_any(&a)?.join(&load_any(&b)?)?;
            Ok((GradingReport::new(&j).emit(format), 0))
        }
        Command::Finest { polys } => {
            let ps = formats::parse_polys(&polys, &read(&polys)?)?;
            let g = finest_grading(ps[0].vars(), &ps)?;
            Ok((GradingReport::new(&g).emit(format), 0))
        }
        Command::Positive { source } => {
            let g = source.load()?;
            let report = match g.positivity() {
                PositivityWitness::Positive { covector } => PositiveReport {
                    positive: true,
                    covector: Some(covector.iter().map(|c| c.to_string()).collect()),
                    integer_specialization: Some(
                        g.positive_integer_specialization()?
                            .iter()
                            .map(|m| m.to_string())
                            .collect(),
                    ),
                    violation: None,
                },
                PositivityWitness::NotPositive { vector } => PositiveReport {
                    positive: false,
                    covector: None,
                    integer_specialization: None,
                    violation: Some(vector.iter().map(|v| v.to_string()).collect()),
                },
            };
            Ok((report.emit(format), 0))
        }
        Command::Circuits { source } => {
            let g = source.load()?;
            let cfg = g.configuration();
            let cs = circuits(cfg)?;
            let vectors = IntMatrix::from_rows(
                cfg.len(),
                cs.iter().map(|c| c.vector().to_vec()).collect(),
            )?;
            let report = CircuitsReport {
                count: cs.len(),
                binomials: cs.iter().map(|c| c.binomial_string(cfg)).collect(),
                vectors: MatrixOut::new(&vectors),
            };
            Ok((report.emit(format), 0))
        }
        Command::Nonfaces { source } => {
            let g = source.load()?;
            let nf = minimal_nonfaces(g.configuration())?;
            let report = NonfacesReport {
                ray_count: nf.rays().len(),
                ray_columns: nf.ray_columns().iter().map(|&c| c + 1).collect(),
                ray_labels: nf.ray_labels().to_vec(),
                count: nf.count(),
                nonfaces: nf
                    .nonfaces()
                    .iter()
                    .map(|e| NonfaceOut {
                        columns: e.iter().map(|&r| nf.ray_columns()[r] + 1).collect(),
                        label: nf.label(e),
                    })
                    .collect(),
                duplicates: nf
                    .duplicates()
                    .iter()
                    .map(|(kept, dropped)| (nf.label(kept), nf.label(dropped)))
                    .collect(),
            };
            Ok((report.emit(format), 0))
        }
        Command::Complex { source, spec } => {
            let g = source.load()?;
            let ctx = match load_spec(&spec)? {
                Some(f) => ComplexContext::for_pair(&g, &f)?,
                None => ComplexContext::identity(&g)?,
            };
            let d = build_complex(g.configuration(), &ctx.projection, &ctx.nonfaces)?;
            let method =
                if d.vertex_count() <= EXACT_SWEEP_LIMIT { "exact" } else { "greedy" };
            Ok((ComplexReport::new(&d, method).emit(format), 0))
        }
        Command::Bounds { source, spec, gens } => {
            let g = source.load()?;
            let f = load_spec(&spec)?.unwrap_or_else(|| g.clone());
            require_specialization(&g, &f)?;
            let mut sets = Vec::with_capacity(gens.len());
            for path in &gens {
                sets.push((stem(path), formats::parse_polys(path, &read(path)?)?));
            }
            let mut stop = || limits.stop();
            let r = bound_report_with_stop(&g, &f, &sets, &mut stop)?;
            let exit = if r.certified { 0 } else { 4 };
            Ok((BoundsReport::new(&r).emit(format), exit))
        }
        Command::VerifyCover { source, spec, gens } => {
            let g = source.load()?;
            let f = load_spec(&spec)?.unwrap_or_else(|| g.clone());
            let ctx = ComplexContext::for_pair(&g, &f)?;
            let cfg = g.configuration();
            let d = build_complex(cfg, &ctx.projection, &ctx.nonfaces)?;
            let polys = formats::parse_polys(&gens, &read(&gens)?)?;
            let r = verify_cover_conditions(&polys, &f, &d, cfg, &ctx.nonfaces)?;
            Ok((VerifyCoverReport::new(&r, &d).emit(format), 0))
        }
    }
}
