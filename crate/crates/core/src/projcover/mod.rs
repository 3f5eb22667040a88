//! Projective indecomposables, simples, projective covers and the categorical radical.

mod cover;
mod radhom;

pub use cover::{
    cover_uniqueness_check, is_essential_epi, lift_through, projective_cover,
    projective_cover_with, CoverResult, EssentialCertificate,
};
pub use radhom::{
    is_minimal_presentation, projrad_equivalence_check, rad_hom, PresentationCheck, ProjradOutcome,
    RadHomSpace,
};

use std::sync::Arc;

use crate::algebra::{Algebra, LocalityCertificate};
use crate::decompose::krull_schmidt;
use crate::error::Result;
use crate::exactlin::{Matrix, Subspace};
use crate::module::{hom_space, top, Module, Quotient};

/// An indecomposable summand `P = eA` of the regular module.
#[derive(Clone, Debug)]
pub struct ProjectiveIndecomposable {
    pub module: Module,
    pub multiplicity: usize,
    /// A primitive idempotent `e` of `A` with `eA` isomorphic to `module`.
    pub idempotent: Vec<u64>,
    pub certificate: LocalityCertificate,
    /// `P / rad P`, a simple module.
    pub top: Quotient,
}

pub fn projective_indecomposables(
    a: &Arc<Algebra>,
    seed: u64,
) -> Result<Vec<ProjectiveIndecomposable>> {
    let regular = Module::regular(a.clone());
    let d = krull_schmidt(&regular, seed)?;
    d.classes
        .into_iter()
        .map(|class| {
            let (iota, pi) = &class.witnesses[0];
            let e = pi.mul(iota).row(0).to_vec();
            Ok(ProjectiveIndecomposable {
                top: top(&class.module)?,
                module: class.module,
                multiplicity: class.multiplicity,
                idempotent: e,
                certificate: class.certificate,
            })
        })
        .collect()
}

/// Tops of the projective indecomposables, one per isomorphism class.
pub fn simple_modules(a: &Arc<Algebra>, seed: u64) -> Result<Vec<Module>> {
    Ok(projective_indecomposables(a, seed)?
        .into_iter()
        .map(|p| p.top.module)
        .collect())
}

/// Intersection of the kernels of all maps from `m` to the given simple modules.
pub fn radical_by_simple_quotients(m: &Module, simples: &[Module]) -> Result<Subspace> {
    let mut maps = Vec::new();
    for s in simples {
        maps.extend(hom_space(m, s)?.basis());
    }
    let refs: Vec<&Matrix> = maps.iter().collect();
    let all = Matrix::hstack(m.modulus(), m.dim(), &refs);
    Ok(Subspace::row_span(&all.left_kernel_basis()))
}
