//! Report schema. JSON reports carry `schema_version`; the text form is for people.

use std::fmt::Write;

use krull::algebra::LocalityCertificate;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

pub type Rows = Vec<Vec<u64>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: CommandEcho,
    pub seed: u64,
    pub field: FieldReport,
    pub algebra_dim: usize,
    pub result: ReportBody,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommandEcho {
    pub verb: String,
    pub file: String,
    pub modules: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    pub witnesses: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldReport {
    pub p: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReportBody {
    Decompose(DecomposeReport),
    Projcover(CoverReport),
    Verify(VerifyReport),
    Hom(HomReport),
    End(EndReport),
    Radhom(HomReport),
    IsIso(IsoReport),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub module: String,
    pub dim: usize,
    pub summands: Vec<SummandReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandReport {
    pub dim: usize,
    pub multiplicity: usize,
    pub end_dim: usize,
    pub certificate: CertificateReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Rows>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<WitnessPair>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPair {
    pub iota: Rows,
    pub pi: Rows,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertificateReport {
    FrobeniusFixedLine { quotient_dim: usize },
    NontrivialIdempotent { element: Vec<u64> },
    NonCommutingPair { left: Vec<u64>, right: Vec<u64> },
    ZeroRing,
}

impl From<&LocalityCertificate> for CertificateReport {
    fn from(c: &LocalityCertificate) -> Self {
        match c {
            LocalityCertificate::FrobeniusFixedLine { quotient_dim } => Self::FrobeniusFixedLine {
                quotient_dim: *quotient_dim,
            },
            LocalityCertificate::NontrivialIdempotent(e) => {
                Self::NontrivialIdempotent { element: e.clone() }
            }
            LocalityCertificate::NonCommutingPair(x, y) => Self::NonCommutingPair {
                left: x.clone(),
                right: y.clone(),
            },
            LocalityCertificate::ZeroRing => Self::ZeroRing,
        }
    }
}

impl CertificateReport {
    fn describe(&self) -> String {
        match self {
            Self::FrobeniusFixedLine { quotient_dim } => {
                format!("local: End/J is a field of degree {quotient_dim}")
            }
            Self::NontrivialIdempotent { .. } => "not local: nontrivial idempotent".into(),
            Self::NonCommutingPair { .. } => "not local: End/J is not commutative".into(),
            Self::ZeroRing => "not local: zero ring".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub module: String,
    pub dim: usize,
    pub cover_dim: usize,
    pub summand_dims: Vec<usize>,
    pub kernel_dim: usize,
    pub essential: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epi: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel_basis: Option<Rows>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomReport {
    pub source: String,
    pub target: String,
    pub dim: usize,
    /// Dimension of the ambient hom space, for `radhom`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hom_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Rows>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndReport {
    pub module: String,
    pub dim: usize,
    pub local: bool,
    pub radical_dim: usize,
    pub certificate: CertificateReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Rows>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoReport {
    pub left: String,
    pub right: String,
    pub isomorphic: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Rows>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub passed: bool,
    pub properties: Vec<PropertyReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    /// Items skipped because an endomorphism algebra is too large for the field.
    pub skipped: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Whether the command's properties all held; only `verify` can fail here.
    pub fn passed(&self) -> bool {
        match &self.result {
            ReportBody::Verify(v) => v.passed,
            _ => true,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let c = &self.command;
        let _ = writeln!(
            out,
            "{} {} {} (p = {}, seed = {})",
            c.verb,
            c.file,
            c.modules.join(" "),
            self.field.p,
            self.seed
        );
        match &self.result {
            ReportBody::Decompose(d) => {
                let _ = writeln!(
                    out,
                    "module {} (dim {}): {} summand classes",
                    d.module,
                    d.dim,
                    d.summands.len()
                );
                for s in &d.summands {
                    let _ = writeln!(
                        out,
                        "  P(dim {}) x{}  End dim {}, {}",
                        s.dim,
                        s.multiplicity,
                        s.end_dim,
                        s.certificate.describe()
                    );
                    if let Some(w) = &s.witnesses {
                        for (k, pair) in w.iter().enumerate() {
                            let _ = writeln!(out, "    iota[{k}] = {:?}", pair.iota);
                            let _ = writeln!(out, "    pi[{k}] = {:?}", pair.pi);
                        }
                    }
                }
            }
            ReportBody::Projcover(r) => {
                let _ = writeln!(
                    out,
                    "module {} (dim {}): cover dim {} = {:?}, kernel dim {}, essential {}",
                    r.module, r.dim, r.cover_dim, r.summand_dims, r.kernel_dim, r.essential
                );
                if let Some(e) = &r.epi {
                    let _ = writeln!(out, "  epi = {e:?}");
                }
            }
            ReportBody::Hom(h) => {
                let _ = writeln!(out, "dim Hom({}, {}) = {}", h.source, h.target, h.dim);
                write_basis(&mut out, &h.basis);
            }
            ReportBody::Radhom(h) => {
                let _ = writeln!(
                    out,
                    "dim Rad({}, {}) = {} (dim Hom = {})",
                    h.source,
                    h.target,
                    h.dim,
                    h.hom_dim.unwrap_or(0)
                );
                write_basis(&mut out, &h.basis);
            }
            ReportBody::End(e) => {
                let _ = writeln!(
                    out,
                    "dim End({}) = {}, dim J = {}, {}",
                    e.module,
                    e.dim,
                    e.radical_dim,
                    e.certificate.describe()
                );
                write_basis(&mut out, &e.basis);
            }
            ReportBody::IsIso(r) => {
                let _ = writeln!(out, "{} ~ {}: {}", r.left, r.right, r.isomorphic);
                if let Some(w) = &r.witness {
                    let _ = writeln!(out, "  witness = {w:?}");
                }
            }
            ReportBody::Verify(v) => {
                for prop in &v.properties {
                    let mark = if prop.passed { "pass" } else { "FAIL" };
                    let _ = write!(out, "  [{mark}] {} ({} checked", prop.name, prop.checked);
                    if prop.skipped > 0 {
                        let _ = write!(out, ", {} skipped: field too small", prop.skipped);
                    }
                    let _ = writeln!(out, ")");
                    if let Some(c) = &prop.counterexample {
                        let _ = writeln!(out, "         {c}");
                    }
                }
                let _ = writeln!(
                    out,
                    "suite {}: {}",
                    v.suite,
                    if v.passed { "all passed" } else { "FAILED" }
                );
            }
        }
        out
    }
}

fn write_basis(out: &mut String, basis: &Option<Vec<Rows>>) {
    if let Some(b) = basis {
        for (i, m) in b.iter().enumerate() {
            let _ = writeln!(out, "  [{i}] {m:?}");
        }
    }
}
