use std::sync::Arc;

use super::Module;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Subspace};

/// A direct sum with its structure maps. In the row convention `iotas[i]`
/// is `dim M_i x dim M` and `pis[i]` is `dim M x dim M_i`; they satisfy
/// `iotas[i] * pis[i] = id` and `sum_i pis[i] * iotas[i] = id`.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Module,
    pub iotas: Vec<Matrix>,
    pub pis: Vec<Matrix>,
}

pub fn direct_sum(algebra: &Arc<Algebra>, parts: &[Module]) -> Result<DirectSum> {
    let p = algebra.modulus();
    for m in parts {
        if !super::same_algebra(algebra, m.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
    }
    let total: usize = parts.iter().map(Module::dim).sum();
    let action = (0..algebra.dim())
        .map(|k| {
            let blocks: Vec<&Matrix> = parts.iter().map(|m| m.action(k)).collect();
            Matrix::block_diagonal(p, &blocks)
        })
        .collect();
    let mut iotas = Vec::with_capacity(parts.len());
    let mut pis = Vec::with_capacity(parts.len());
    let mut offset = 0;
    for m in parts {
        let cols: Vec<usize> = (offset..offset + m.dim()).collect();
        let pi = Matrix::column_selector(p, total, &cols);
        iotas.push(pi.transpose());
        pis.push(pi);
        offset += m.dim();
    }
    Ok(DirectSum {
        module: Module::new_unchecked(algebra.clone(), total, action),
        iotas,
        pis,
    })
}

/// `rad M = M . J(A)`, as a canonical row basis.
pub fn radical_of_module(m: &Module) -> Result<Subspace> {
    let a = m.algebra();
    let rad = a.radical()?;
    let p = m.modulus();
    let parts: Vec<Matrix> = (0..rad.dim())
        .map(|r| m.action_of(rad.basis.basis().row(r)))
        .collect();
    let refs: Vec<&Matrix> = parts.iter().collect();
    Ok(Subspace::row_span(&Matrix::vstack(p, m.dim(), &refs)))
}

#[derive(Clone, Debug)]
pub struct Quotient {
    pub module: Module,
    /// `dim M x dim M/U`, surjective with kernel `U`.
    pub projection: Matrix,
    /// `dim M/U x dim M`, a linear (not necessarily module) section of the projection.
    pub section: Matrix,
}

pub fn quotient_module(m: &Module, u: &Subspace) -> Result<Quotient> {
    m.check_submodule(u)?;
    let p = m.modulus();
    let projection = u.quotient_projection();
    let free = u.free_columns();
    let section = Matrix::column_selector(p, m.dim(), &free).transpose();
    let action = m
        .actions()
        .iter()
        .map(|a| section.mul(a).mul(&projection))
        .collect();
    Ok(Quotient {
        module: Module::new_unchecked(m.algebra().clone(), free.len(), action),
        projection,
        section,
    })
}

/// `M / rad M`
pub fn top(m: &Module) -> Result<Quotient> {
    quotient_module(m, &radical_of_module(m)?)
}

/// A submodule as a module in its own right, with its inclusion (`dim U x dim M`).
pub fn submodule(m: &Module, u: &Subspace) -> Result<(Module, Matrix)> {
    m.check_submodule(u)?;
    let inclusion = u.basis().clone();
    let sel = u.coordinate_selector();
    let action = m
        .actions()
        .iter()
        .map(|a| inclusion.mul(a).mul(&sel))
        .collect();
    Ok((
        Module::new_unchecked(m.algebra().clone(), u.dim(), action),
        inclusion,
    ))
}

/// The image of an idempotent endomorphism as a direct summand.
/// `iota * pi = id` on the summand and `pi * iota = e`.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    pub iota: Matrix,
    pub pi: Matrix,
}

pub fn split_idempotent(m: &Module, e: &Matrix) -> Result<Summand> {
    m.check_homomorphism(m, e)?;
    if e.mul(e) != *e {
        return Err(Error::NotIdempotent);
    }
    let image = Subspace::row_span(e);
    let iota = image.basis().clone();
    let pi = e.mul(&image.coordinate_selector());
    let action = m.actions().iter().map(|a| iota.mul(a).mul(&pi)).collect();
    Ok(Summand {
        module: Module::new_unchecked(m.algebra().clone(), image.dim(), action),
        iota,
        pi,
    })
}
