use rand::Rng;

use super::fitting::primary_split;
use super::iso::indecomposable_isomorphism;
use super::{Decomposition, SummandClass};
use crate::algebra::{primitive_idempotent_split, IdempotentSplit, LocalityCertificate};
use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::module::{end_algebra, split_idempotent, Module, Summand};
use crate::{par, seed};

/// Random endomorphisms tried by the primary-split fallback.
pub const RANDOM_ENDOMORPHISM_ATTEMPTS: usize = 64;

struct Piece {
    module: Module,
    iota: Matrix,
    pi: Matrix,
    certificate: LocalityCertificate,
    end_dim: usize,
}

pub fn krull_schmidt(m: &Module, seed: u64) -> Result<Decomposition> {
    let pieces = decompose_rec(m, seed)?;
    let mut classes: Vec<SummandClass> = Vec::new();
    for piece in pieces {
        let mut placed = false;
        for class in classes.iter_mut() {
            // theta: representative -> piece
            if let Some(theta) = indecomposable_isomorphism(&class.module, &piece.module)? {
                let inv = theta
                    .inverse()
                    .ok_or_else(|| Error::Internal("isomorphism witness is singular".into()))?;
                class
                    .witnesses
                    .push((theta.mul(&piece.iota), piece.pi.mul(&inv)));
                class.multiplicity += 1;
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(SummandClass {
                module: piece.module,
                multiplicity: 1,
                witnesses: vec![(piece.iota, piece.pi)],
                certificate: piece.certificate,
                end_dim: piece.end_dim,
            });
        }
    }
    classes.sort_by_cached_key(|c| (c.module.dim(), c.module.fingerprint()));
    Ok(Decomposition {
        parent: m.clone(),
        classes,
        seed,
    })
}

fn decompose_rec(m: &Module, seed: u64) -> Result<Vec<Piece>> {
    if m.is_zero() {
        return Ok(vec![]);
    }
    let p = m.modulus();
    let end = end_algebra(m)?;
    if p.get() <= end.dim() as u64 {
        return Err(Error::ModulusTooSmall {
            p: p.get(),
            dim: end.dim(),
        });
    }
    let parts = match primitive_idempotent_split(&end.algebra, seed::child_seed(seed, 2)) {
        Ok(IdempotentSplit::Local(certificate)) => {
            return Ok(vec![Piece {
                module: m.clone(),
                iota: Matrix::identity(p, m.dim()),
                pi: Matrix::identity(p, m.dim()),
                certificate,
                end_dim: end.dim(),
            }]);
        }
        Ok(IdempotentSplit::Idempotent(e)) => {
            let e = end.to_matrix(&e);
            let f = Matrix::identity(p, m.dim()).sub(&e);
            vec![split_idempotent(m, &e)?, split_idempotent(m, &f)?]
        }
        Err(Error::RetryExhausted(_)) => random_primary_split(m, &end, seed)?,
        Err(err) => return Err(err),
    };
    if parts.len() < 2
        || parts
            .iter()
            .any(|s| s.module.is_zero() || s.module.dim() >= m.dim())
    {
        return Err(Error::Internal(
            "split did not strictly reduce dimension".into(),
        ));
    }
    let children = split_recursive(&parts, seed, 0)?;
    let mut out = Vec::new();
    for (part, pieces) in parts.iter().zip(children) {
        for piece in pieces {
            out.push(Piece {
                iota: piece.iota.mul(&part.iota),
                pi: part.pi.mul(&piece.pi),
                ..piece
            });
        }
    }
    Ok(out)
}

fn split_recursive(parts: &[Summand], seed: u64, offset: u64) -> Result<Vec<Vec<Piece>>> {
    match parts {
        [] => Ok(vec![]),
        [only] => Ok(vec![decompose_rec(
            &only.module,
            seed::child_seed(seed, offset),
        )?]),
        _ => {
            let (left, right) = parts.split_at(parts.len() / 2);
            let mid = offset + left.len() as u64;
            let (l, r) = par::join(
                || split_recursive(left, seed, offset),
                || split_recursive(right, seed, mid),
            );
            let mut l = l?;
            l.extend(r?);
            Ok(l)
        }
    }
}

fn random_primary_split(
    m: &Module,
    end: &crate::module::EndAlgebra,
    seed: u64,
) -> Result<Vec<Summand>> {
    let mut rng = seed::rng(seed::child_seed(seed, 3));
    let q = m.modulus().get();
    for _ in 0..RANDOM_ENDOMORPHISM_ATTEMPTS {
        let x: Vec<u64> = (0..end.dim()).map(|_| rng.gen_range(0..q)).collect();
        let parts = primary_split(m, &end.to_matrix(&x))?;
        if parts.len() > 1 {
            return Ok(parts.into_iter().map(|c| c.summand).collect());
        }
    }
    Err(Error::RetryExhausted(RANDOM_ENDOMORPHISM_ATTEMPTS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::module::direct_sum;

    #[test]
    fn zero_module_has_no_summands() {
        let a2 = gallery::linear_quiver(2, 5).unwrap();
        let d = krull_schmidt(&Module::zero(a2), 0).unwrap();
        assert!(d.classes.is_empty());
        d.verify().unwrap();
    }

    #[test]
    fn a2_regular_module() {
        let a2 = gallery::linear_quiver(2, 5).unwrap();
        let d = krull_schmidt(&Module::regular(a2.clone()), 0).unwrap();
        d.verify().unwrap();
        assert_eq!(d.dimension_profile(), vec![(1, 1), (2, 1)]);
        assert!(
            indecomposable_isomorphism(&d.classes[0].module, &gallery::a2_p2(&a2))
                .unwrap()
                .is_some()
        );
        assert!(
            indecomposable_isomorphism(&d.classes[1].module, &gallery::a2_p1(&a2))
                .unwrap()
                .is_some()
        );
    }

    #[test]
    fn repeated_summand() {
        let a2 = gallery::linear_quiver(2, 5).unwrap();
        let p1 = gallery::a2_p1(&a2);
        let sum = direct_sum(&a2, &[p1.clone(), p1]).unwrap().module;
        let d = krull_schmidt(&sum, 7).unwrap();
        d.verify().unwrap();
        assert_eq!(d.dimension_profile(), vec![(2, 2)]);
    }

    #[test]
    fn matrix_ring_regular_module() {
        let m2 = gallery::matrix_algebra(2, 7).unwrap();
        let d = krull_schmidt(&Module::regular(m2), 3).unwrap();
        d.verify().unwrap();
        assert_eq!(d.dimension_profile(), vec![(2, 2)]);
    }

    #[test]
    fn modulus_too_small() {
        let a2 = gallery::linear_quiver(2, 2).unwrap();
        let p1 = gallery::a2_p1(&a2);
        let sum = direct_sum(&a2, &[p1.clone(), p1]).unwrap().module;
        assert!(matches!(
            krull_schmidt(&sum, 0),
            Err(Error::ModulusTooSmall { p: 2, dim: 4 })
        ));
    }

    #[test]
    fn same_seed_same_result() {
        let a3 = gallery::linear_quiver(3, 11).unwrap();
        let r = Module::regular(a3);
        let a = krull_schmidt(&r, 5).unwrap();
        let b = krull_schmidt(&r, 5).unwrap();
        for (x, y) in a.classes.iter().zip(&b.classes) {
            assert_eq!(x.module, y.module);
            assert_eq!(x.witnesses, y.witnesses);
        }
    }
}
