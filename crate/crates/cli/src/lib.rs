//! Command-line front end for the krull engine.

pub mod error;
pub mod instance;
pub mod report;
mod verify;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use krull::algebra::is_local;
use krull::decompose::{is_isomorphic, krull_schmidt};
use krull::module::{end_algebra, hom_space};
use krull::projcover::{is_essential_epi, projective_cover, rad_hom};

pub use error::CliError;
pub use instance::Instance;
pub use report::Report;
pub use verify::run_suite;

use instance::rows_of;
use report::{
    CertificateReport, CommandEcho, CoverReport, DecomposeReport, EndReport, FieldReport,
    HomReport, IsoReport, ReportBody, SummandReport, WitnessPair,
};

#[derive(Debug, Parser)]
#[command(
    name = "krull",
    version,
    about = "Decompose modules over finite-dimensional algebras over F_p"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// JSON instance file
    pub file: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Emit the report as JSON
    #[arg(long)]
    pub json: bool,
    /// Include witness matrices and bases
    #[arg(long)]
    pub witnesses: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decompose a module into indecomposable summands
    Decompose {
        #[command(flatten)]
        common: Common,
        module: String,
    },
    /// Projective cover of a module
    Projcover {
        #[command(flatten)]
        common: Common,
        module: String,
    },
    /// Run property suites against every module of the instance
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Dimension and basis of Hom(source, target)
    Hom {
        #[command(flatten)]
        common: Common,
        source: String,
        target: String,
    },
    /// Endomorphism algebra of a module
    End {
        #[command(flatten)]
        common: Common,
        module: String,
    },
    /// Radical morphisms Rad(source, target)
    Radhom {
        #[command(flatten)]
        common: Common,
        source: String,
        target: String,
    },
    /// Whether two modules are isomorphic
    IsIso {
        #[command(flatten)]
        common: Common,
        left: String,
        right: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Radical,
    Covers,
    Uniqueness,
    Fitting,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Radical => "radical",
            Suite::Covers => "covers",
            Suite::Uniqueness => "uniqueness",
            Suite::Fitting => "fitting",
        }
    }
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let json = cli.common().json;
    match execute(&cli.command) {
        Ok(report) => Outcome {
            code: if report.passed() { 0 } else { 1 },
            stdout: if json {
                report.to_json()
            } else {
                report.to_text()
            },
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("krull: {e}\n"),
        },
    }
}

impl Cli {
    fn common(&self) -> &Common {
        self.command.common()
    }
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Decompose { common, .. }
            | Command::Projcover { common, .. }
            | Command::Verify { common, .. }
            | Command::Hom { common, .. }
            | Command::End { common, .. }
            | Command::Radhom { common, .. }
            | Command::IsIso { common, .. } => common,
        }
    }

    fn verb(&self) -> &'static str {
        match self {
            Command::Decompose { .. } => "decompose",
            Command::Projcover { .. } => "projcover",
            Command::Verify { .. } => "verify",
            Command::Hom { .. } => "hom",
            Command::End { .. } => "end",
            Command::Radhom { .. } => "radhom",
            Command::IsIso { .. } => "is-iso",
        }
    }

    fn module_names(&self) -> Vec<String> {
        match self {
            Command::Decompose { module, .. }
            | Command::Projcover { module, .. }
            | Command::End { module, .. } => {
                vec![module.clone()]
            }
            Command::Hom { source, target, .. } | Command::Radhom { source, target, .. } => {
                vec![source.clone(), target.clone()]
            }
            Command::IsIso { left, right, .. } => vec![left.clone(), right.clone()],
            Command::Verify { .. } => vec![],
        }
    }
}

pub fn execute(command: &Command) -> Result<Report, CliError> {
    let common = command.common();
    let inst = Instance::load(&common.file)?;
    let names = command.module_names();
    for n in &names {
        inst.module(n)?;
    }
    let w = common.witnesses;
    let seed = common.seed;
    let result = match command {
        Command::Decompose { module, .. } => {
            ReportBody::Decompose(cmd_decompose(&inst, module, seed, w)?)
        }
        Command::Projcover { module, .. } => {
            ReportBody::Projcover(cmd_projcover(&inst, module, seed, w)?)
        }
        Command::Verify { suite, .. } => ReportBody::Verify(run_suite(&inst, *suite, seed)?),
        Command::Hom { source, target, .. } => ReportBody::Hom(cmd_hom(&inst, source, target, w)?),
        Command::End { module, .. } => ReportBody::End(cmd_end(&inst, module, w)?),
        Command::Radhom { source, target, .. } => {
            ReportBody::Radhom(cmd_radhom(&inst, source, target, w)?)
        }
        Command::IsIso { left, right, .. } => ReportBody::IsIso(cmd_is_iso(&inst, left, right, w)?),
    };
    Ok(Report {
        schema_version: report::SCHEMA_VERSION,
        command: CommandEcho {
            verb: command.verb().to_string(),
            file: common.file.display().to_string(),
            modules: names,
            suite: match command {
                Command::Verify { suite, .. } => Some(suite.name().to_string()),
                _ => None,
            },
            witnesses: w,
        },
        seed,
        field: FieldReport { p: inst.modulus() },
        algebra_dim: inst.algebra.dim(),
        result,
    })
}

pub fn cmd_decompose(
    inst: &Instance,
    name: &str,
    seed: u64,
    witnesses: bool,
) -> Result<DecomposeReport, CliError> {
    let m = inst.module(name)?;
    let d = krull_schmidt(m, seed)?;
    let summands = d
        .classes
        .iter()
        .map(|c| SummandReport {
            dim: c.module.dim(),
            multiplicity: c.multiplicity,
            end_dim: c.end_dim,
            certificate: CertificateReport::from(&c.certificate),
            action: witnesses.then(|| c.module.actions().iter().map(rows_of).collect()),
            witnesses: witnesses.then(|| {
                c.witnesses
                    .iter()
                    .map(|(iota, pi)| WitnessPair {
                        iota: rows_of(iota),
                        pi: rows_of(pi),
                    })
                    .collect()
            }),
        })
        .collect();
    Ok(DecomposeReport {
        module: name.to_string(),
        dim: m.dim(),
        summands,
    })
}

pub fn cmd_projcover(
    inst: &Instance,
    name: &str,
    seed: u64,
    witnesses: bool,
) -> Result<CoverReport, CliError> {
    let m = inst.module(name)?;
    let c = projective_cover(m, seed)?;
    Ok(CoverReport {
        module: name.to_string(),
        dim: m.dim(),
        cover_dim: c.cover.dim(),
        summand_dims: c.summand_dims.clone(),
        kernel_dim: c.kernel_basis.rows(),
        essential: c.certificate.check(&c.kernel_basis) && is_essential_epi(&c.epi, &c.cover, m)?,
        epi: witnesses.then(|| rows_of(&c.epi)),
        kernel_basis: witnesses.then(|| rows_of(&c.kernel_basis)),
    })
}

pub fn cmd_hom(
    inst: &Instance,
    source: &str,
    target: &str,
    witnesses: bool,
) -> Result<HomReport, CliError> {
    let h = hom_space(inst.module(source)?, inst.module(target)?)?;
    Ok(HomReport {
        source: source.to_string(),
        target: target.to_string(),
        dim: h.dim(),
        hom_dim: None,
        basis: witnesses.then(|| h.basis().iter().map(rows_of).collect()),
    })
}

pub fn cmd_end(inst: &Instance, name: &str, witnesses: bool) -> Result<EndReport, CliError> {
    let m = inst.module(name)?;
    let end = end_algebra(m)?;
    let p = inst.modulus();
    if p <= end.dim() as u64 {
        return Err(krull::Error::ModulusTooSmall { p, dim: end.dim() }.into());
    }
    let locality = is_local(&end.algebra)?;
    Ok(EndReport {
        module: name.to_string(),
        dim: end.dim(),
        local: locality.local,
        radical_dim: end.algebra.radical()?.dim(),
        certificate: CertificateReport::from(&locality.certificate),
        basis: witnesses.then(|| end.hom.basis().iter().map(rows_of).collect()),
    })
}

pub fn cmd_radhom(
    inst: &Instance,
    source: &str,
    target: &str,
    witnesses: bool,
) -> Result<HomReport, CliError> {
    let r = rad_hom(inst.module(source)?, inst.module(target)?)?;
    Ok(HomReport {
        source: source.to_string(),
        target: target.to_string(),
        dim: r.dim(),
        hom_dim: Some(r.hom.dim()),
        basis: witnesses.then(|| r.basis().iter().map(rows_of).collect()),
    })
}

pub fn cmd_is_iso(
    inst: &Instance,
    left: &str,
    right: &str,
    witnesses: bool,
) -> Result<IsoReport, CliError> {
    let iso = is_isomorphic(inst.module(left)?, inst.module(right)?)?;
    Ok(IsoReport {
        left: left.to_string(),
        right: right.to_string(),
        isomorphic: iso.is_some(),
        witness: if witnesses {
            iso.as_ref().map(rows_of)
        } else {
            None
        },
    })
}
