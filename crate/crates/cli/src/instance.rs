//! The JSON instance file: one algebra, named modules and optional named morphisms.

use std::collections::BTreeMap;
use std::sync::Arc;

use krull::algebra::{algebra_from_quiver, Algebra, Arrow, QuiverPresentation};
use krull::exactlin::{Matrix, Modulus};
use krull::module::Module;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub field: FieldSpec,
    pub algebra: AlgebraSpec,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleSpec>,
    #[serde(default)]
    pub morphisms: BTreeMap<String, MorphismSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub p: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum AlgebraSpec {
    StructureConstants {
        dim: usize,
        /// `table[i][j][k]` is the coefficient of `b_k` in `b_i * b_j`.
        table: Vec<Vec<Vec<i64>>>,
        one: Vec<i64>,
    },
    Quiver {
        vertices: Vec<String>,
        arrows: Vec<ArrowSpec>,
        #[serde(default)]
        relations: Vec<Vec<String>>,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub label: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub dim: usize,
    pub action: Vec<Vec<Vec<i64>>>,
}

/// A module map with an optional expected `(image in radical, radical map)` outcome.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismSpec {
    pub source: String,
    pub target: String,
    pub matrix: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect_projrad: Option<[bool; 2]>,
}

#[derive(Clone, Debug)]
pub struct Morphism {
    pub source: String,
    pub target: String,
    pub matrix: Matrix,
    pub expect_projrad: Option<[bool; 2]>,
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub algebra: Arc<Algebra>,
    pub basis_labels: Vec<String>,
    pub modules: BTreeMap<String, Module>,
    pub morphisms: BTreeMap<String, Morphism>,
}

impl Instance {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let file: InstanceFile = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            CliError::Parse(format!("{path}: {}", e.into_inner()))
        })?;
        Self::from_file(&file)
    }

    pub fn load(path: &std::path::Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn from_file(file: &InstanceFile) -> Result<Self, CliError> {
        let p = Modulus::new(file.field.p).map_err(|e| CliError::Parse(format!("field.p: {e}")))?;
        let (algebra, basis_labels) = match &file.algebra {
            AlgebraSpec::StructureConstants { dim, table, one } => {
                let flat = flatten_table(p, *dim, table)?;
                if one.len() != *dim {
                    return Err(CliError::Parse(format!(
                        "algebra.one: expected {dim} entries, got {}",
                        one.len()
                    )));
                }
                let one = one.iter().map(|&x| p.reduce_signed(x)).collect();
                let a = Algebra::from_structure_constants(p, *dim, flat, one)
                    .map_err(|e| CliError::Parse(format!("algebra: {e}")))?;
                (a, (0..*dim).map(|i| format!("b{i}")).collect())
            }
            AlgebraSpec::Quiver {
                vertices,
                arrows,
                relations,
            } => {
                let q = QuiverPresentation {
                    vertices: vertices.clone(),
                    arrows: arrows
                        .iter()
                        .map(|a| Arrow {
                            source: a.source.clone(),
                            target: a.target.clone(),
                            label: a.label.clone(),
                        })
                        .collect(),
                    relations: relations.clone(),
                };
                let qa = algebra_from_quiver(&q, p)
                    .map_err(|e| CliError::Parse(format!("algebra: {e}")))?;
                let labels = qa.labels();
                (qa.algebra, labels)
            }
        };
        let algebra = Arc::new(algebra);
        let mut modules = BTreeMap::new();
        for (name, spec) in &file.modules {
            let at = format!("modules.{name}");
            if spec.action.len() != algebra.dim() {
                return Err(CliError::Parse(format!(
                    "{at}.action: expected {} matrices, got {}",
                    algebra.dim(),
                    spec.action.len()
                )));
            }
            let action = spec
                .action
                .iter()
                .enumerate()
                .map(|(i, m)| matrix(p, spec.dim, spec.dim, m, &format!("{at}.action[{i}]")))
                .collect::<Result<Vec<_>, _>>()?;
            let m = Module::new(algebra.clone(), spec.dim, action)
                .map_err(|e| CliError::Parse(format!("{at}: {e}")))?;
            modules.insert(name.clone(), m);
        }
        let mut morphisms = BTreeMap::new();
        for (name, spec) in &file.morphisms {
            let at = format!("morphisms.{name}");
            let source = modules.get(&spec.source).ok_or_else(|| {
                CliError::Parse(format!("{at}.source: unknown module {:?}", spec.source))
            })?;
            let target = modules.get(&spec.target).ok_or_else(|| {
                CliError::Parse(format!("{at}.target: unknown module {:?}", spec.target))
            })?;
            let t = matrix(
                p,
                source.dim(),
                target.dim(),
                &spec.matrix,
                &format!("{at}.matrix"),
            )?;
            source
                .check_homomorphism(target, &t)
                .map_err(|e| CliError::Parse(format!("{at}: {e}")))?;
            morphisms.insert(
                name.clone(),
                Morphism {
                    source: spec.source.clone(),
                    target: spec.target.clone(),
                    matrix: t,
                    expect_projrad: spec.expect_projrad,
                },
            );
        }
        Ok(Self {
            algebra,
            basis_labels,
            modules,
            morphisms,
        })
    }

    pub fn module(&self, name: &str) -> Result<&Module, CliError> {
        self.modules
            .get(name)
            .ok_or_else(|| CliError::InvalidName(name.to_string()))
    }

    pub fn modulus(&self) -> u64 {
        self.algebra.modulus().get()
    }
}

fn flatten_table(p: Modulus, dim: usize, table: &[Vec<Vec<i64>>]) -> Result<Vec<u64>, CliError> {
    let mut flat = Vec::with_capacity(dim * dim * dim);
    if table.len() != dim {
        return Err(CliError::Parse(format!(
            "algebra.table: expected {dim} slices, got {}",
            table.len()
        )));
    }
    for (i, slice) in table.iter().enumerate() {
        if slice.len() != dim {
            return Err(CliError::Parse(format!(
                "algebra.table[{i}]: expected {dim} rows, got {}",
                slice.len()
            )));
        }
        for (j, row) in slice.iter().enumerate() {
            if row.len() != dim {
                return Err(CliError::Parse(format!(
                    "algebra.table[{i}][{j}]: expected {dim} entries, got {}",
                    row.len()
                )));
            }
            flat.extend(row.iter().map(|&x| p.reduce_signed(x)));
        }
    }
    Ok(flat)
}

fn matrix(
    p: Modulus,
    rows: usize,
    cols: usize,
    data: &[Vec<i64>],
    at: &str,
) -> Result<Matrix, CliError> {
    if data.len() != rows || data.iter().any(|r| r.len() != cols) {
        return Err(CliError::Parse(format!(
            "{at}: expected a {rows}x{cols} matrix"
        )));
    }
    Ok(Matrix::from_rows(p, cols, data))
}

/// Integer rows of a matrix, for serialization.
pub fn rows_of(m: &Matrix) -> Vec<Vec<u64>> {
    (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
}
