use std::sync::Arc;

use super::{projective_indecomposables, ProjectiveIndecomposable};
use crate::decompose::{indecomposable_isomorphism, krull_schmidt};
use crate::error::{Error, Result};
use crate::exactlin::{solve_linear, Matrix, Subspace};
use crate::module::{direct_sum, hom_space, radical_of_module, top, Module};
use crate::seed;

/// `kernel_basis = coordinates * radical_basis`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EssentialCertificate {
    pub radical_basis: Matrix,
    pub coordinates: Matrix,
}

impl EssentialCertificate {
    pub fn check(&self, kernel_basis: &Matrix) -> bool {
        self.coordinates.mul(&self.radical_basis) == *kernel_basis
    }
}

#[derive(Clone, Debug)]
pub struct CoverResult {
    pub cover: Module,
    pub target: Module,
    /// `dim cover x dim target`, surjective.
    pub epi: Matrix,
    pub kernel_basis: Matrix,
    pub certificate: EssentialCertificate,
    /// Dimension of each projective summand of `cover`, in order.
    pub summand_dims: Vec<usize>,
}

/// Some `h: source -> middle` with `h * f = g`, where `f: middle -> target` and
/// `g: source -> target`.
pub fn lift_through(
    source: &Module,
    middle: &Module,
    f: &Matrix,
    g: &Matrix,
) -> Result<Option<Matrix>> {
    let hom = hom_space(source, middle)?;
    let p = source.modulus();
    let basis = hom.basis();
    let cols = g.rows() * g.cols();
    let mut data = Vec::with_capacity(basis.len() * cols);
    for h in &basis {
        data.extend(h.mul(f).flatten());
    }
    let system = Matrix::from_vec(p, basis.len(), cols, data).transpose();
    let rhs = Matrix::from_vec(p, cols, 1, g.flatten());
    Ok(solve_linear(&system, &rhs)?.map(|c| hom.element(c.data())))
}

pub fn projective_cover(m: &Module, seed: u64) -> Result<CoverResult> {
    let projectives = projective_indecomposables(m.algebra(), seed::child_seed(seed, 0))?;
    projective_cover_with(m, &projectives, seed)
}

/// As [`projective_cover`], reusing precomputed projective indecomposables.
pub fn projective_cover_with(
    m: &Module,
    projectives: &[ProjectiveIndecomposable],
    seed: u64,
) -> Result<CoverResult> {
    let algebra: &Arc<_> = m.algebra();
    let p = m.modulus();
    let t = top(m)?;
    let dt = krull_schmidt(&t.module, seed::child_seed(seed, 1))?;
    let mut parts = Vec::new();
    let mut maps = Vec::new();
    for class in &dt.classes {
        let mut found = None;
        for proj in projectives {
            if let Some(theta) = indecomposable_isomorphism(&proj.top.module, &class.module)? {
                found = Some((proj, theta));
                break;
            }
        }
        let (proj, theta) = found
            .ok_or_else(|| Error::Internal("simple summand of the top has no projective".into()))?;
        for (iota, _) in &class.witnesses {
            // P -> top P -> simple -> top M, lifted through M -> top M
            let g = proj.top.projection.mul(&theta).mul(iota);
            let h = lift_through(&proj.module, m, &t.projection, &g)?
                .ok_or_else(|| Error::Internal("lifting through the top is inconsistent".into()))?;
            parts.push(proj.module.clone());
            maps.push(h);
        }
    }
    let sum = direct_sum(algebra, &parts)?;
    let mut epi = Matrix::zeros(p, sum.module.dim(), m.dim());
    for (pi, h) in sum.pis.iter().zip(&maps) {
        epi = epi.add(&pi.mul(h));
    }
    if epi.rank() != m.dim() {
        return Err(Error::NotSurjective {
            rank: epi.rank(),
            target_dim: m.dim(),
        });
    }
    let kernel_basis = Subspace::row_span(&epi.left_kernel_basis()).basis().clone();
    let radical = radical_of_module(&sum.module)?;
    let certificate = essential_certificate(&radical, &kernel_basis)
        .ok_or_else(|| Error::Internal("cover kernel is not radical".into()))?;
    Ok(CoverResult {
        summand_dims: parts.iter().map(Module::dim).collect(),
        cover: sum.module,
        target: m.clone(),
        epi,
        kernel_basis,
        certificate,
    })
}

fn essential_certificate(radical: &Subspace, kernel: &Matrix) -> Option<EssentialCertificate> {
    let p = radical.modulus();
    let mut coords = Vec::with_capacity(kernel.rows() * radical.dim());
    for r in 0..kernel.rows() {
        coords.extend(radical.coordinates(kernel.row(r))?);
    }
    Some(EssentialCertificate {
        radical_basis: radical.basis().clone(),
        coordinates: Matrix::from_vec(p, kernel.rows(), radical.dim(), coords),
    })
}

/// Whether a surjective intertwiner has kernel inside the radical of its source.
pub fn is_essential_epi(phi: &Matrix, source: &Module, target: &Module) -> Result<bool> {
    source.check_homomorphism(target, phi)?;
    let rank = phi.rank();
    if rank != target.dim() {
        return Err(Error::NotSurjective {
            rank,
            target_dim: target.dim(),
        });
    }
    let kernel = phi.left_kernel_basis();
    Ok(radical_of_module(source)?.contains_rows(&kernel))
}

/// An isomorphism `alpha: c1.cover -> c2.cover` with `alpha * c2.epi = c1.epi`.
pub fn cover_uniqueness_check(c1: &CoverResult, c2: &CoverResult) -> Result<Matrix> {
    if c1.target != c2.target {
        return Err(Error::TargetMismatch);
    }
    if c1.cover == c2.cover && c1.epi == c2.epi {
        return Ok(Matrix::identity(c1.cover.modulus(), c1.cover.dim()));
    }
    let alpha = lift_through(&c1.cover, &c2.cover, &c2.epi, &c1.epi)?
        .ok_or_else(|| Error::Internal("first epi does not lift through the second".into()))?;
    let beta = lift_through(&c2.cover, &c1.cover, &c1.epi, &c2.epi)?
        .ok_or_else(|| Error::Internal("second epi does not lift through the first".into()))?;
    let composite = alpha.mul(&beta);
    if composite.mul(&c1.epi) != c1.epi || !composite.is_invertible() || !alpha.is_invertible() {
        return Err(Error::Internal(
            "covers are not linked by an isomorphism".into(),
        ));
    }
    Ok(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    #[test]
    fn cover_of_projective_is_itself() {
        let a2 = gallery::linear_quiver(2, 5).unwrap();
        let p1 = gallery::a2_p1(&a2);
        let c = projective_cover(&p1, 0).unwrap();
        assert_eq!(c.cover.dim(), 2);
        assert!(c.epi.is_invertible());
        assert_eq!(c.kernel_basis.rows(), 0);
    }

    #[test]
    fn covers_of_simples() {
        let a2 = gallery::linear_quiver(2, 5).unwrap();
        let [s1, s2] = gallery::a2_simples(&a2);
        let c = projective_cover(&s1, 0).unwrap();
        assert_eq!(c.cover.dim(), 2);
        assert_eq!(c.kernel_basis.rows(), 1);
        assert!(c.certificate.check(&c.kernel_basis));
        assert!(is_essential_epi(&c.epi, &c.cover, &s1).unwrap());

        let sum = direct_sum(&a2, &[s1, s2]).unwrap().module;
        let c = projective_cover(&sum, 0).unwrap();
        let mut dims = c.summand_dims.clone();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 2]);
        assert!(is_essential_epi(&c.epi, &c.cover, &sum).unwrap());
    }

    #[test]
    fn essential_epi_examples() {
        let a2 = gallery::linear_quiver(2, 5).unwrap();
        let p = a2.modulus();
        let p1 = gallery::a2_p1(&a2);
        let p2 = gallery::a2_p2(&a2);
        let [s1, _] = gallery::a2_simples(&a2);
        assert!(is_essential_epi(&Matrix::identity(p, 2), &p1, &p1).unwrap());
        let c = projective_cover(&s1, 0).unwrap();
        let sum = direct_sum(&a2, &[p1, p2]).unwrap();
        let padded = sum.pis[0].mul(&c.epi);
        assert!(!is_essential_epi(&padded, &sum.module, &s1).unwrap());
        let zero = Matrix::zeros(p, 3, 1);
        assert!(matches!(
            is_essential_epi(&zero, &sum.module, &s1),
            Err(Error::NotSurjective { .. })
        ));
    }

    #[test]
    fn uniqueness_of_covers() {
        let a2 = gallery::linear_quiver(2, 5).unwrap();
        let [s1, s2] = gallery::a2_simples(&a2);
        let c1 = projective_cover(&s1, 1).unwrap();
        let c2 = projective_cover(&s1, 2).unwrap();
        assert!(cover_uniqueness_check(&c1, &c1).unwrap().is_identity());
        let alpha = cover_uniqueness_check(&c1, &c2).unwrap();
        assert_eq!(alpha.mul(&c2.epi), c1.epi);
        let c3 = projective_cover(&s2, 0).unwrap();
        assert!(matches!(
            cover_uniqueness_check(&c1, &c3),
            Err(Error::TargetMismatch)
        ));
    }
}
