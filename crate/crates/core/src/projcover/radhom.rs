use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Subspace};
use crate::module::{end_algebra, hom_space, radical_of_module, HomSpace, Module};

use super::is_essential_epi;

/// `Rad(source, target)` inside `Hom(source, target)`.
#[derive(Clone, Debug)]
pub struct RadHomSpace {
    pub hom: HomSpace,
    /// The radical maps, as a subspace of coordinate vectors over the hom basis.
    pub coordinates: Subspace,
}

impl RadHomSpace {
    pub fn source(&self) -> &Module {
        &self.hom.source
    }

    pub fn target(&self) -> &Module {
        &self.hom.target
    }

    pub fn dim(&self) -> usize {
        self.coordinates.dim()
    }

    pub fn basis(&self) -> Vec<Matrix> {
        (0..self.coordinates.dim())
            .map(|i| self.hom.element(self.coordinates.basis().row(i)))
            .collect()
    }

    pub fn contains(&self, phi: &Matrix) -> bool {
        self.hom
            .coordinates(phi)
            .is_some_and(|c| self.coordinates.contains(&c))
    }
}

/// Maps `phi: x -> y` with `psi * phi` (first `psi`, then `phi`) in `J(End y)`
/// for every `psi: y -> x`.
pub fn rad_hom(x: &Module, y: &Module) -> Result<RadHomSpace> {
    x.check_same_algebra(y)?;
    let hom = hom_space(x, y)?;
    let back = hom_space(y, x)?.basis();
    let end = end_algebra(y)?;
    let p = x.modulus();
    if p.get() <= end.dim() as u64 {
        return Err(Error::ModulusTooSmall {
            p: p.get(),
            dim: end.dim(),
        });
    }
    let quotient = end.algebra.radical()?.basis.quotient_projection();
    let width = quotient.cols() * back.len();
    let mut data = Vec::with_capacity(hom.dim() * width);
    for phi in hom.basis() {
        for psi in &back {
            let c = end
                .coordinates(&psi.mul(&phi))
                .ok_or_else(|| Error::Internal("composite is not an endomorphism".into()))?;
            data.extend(Matrix::row_vector(p, &c).mul(&quotient).flatten());
        }
    }
    let residues = Matrix::from_vec(p, hom.dim(), width, data);
    let coordinates = Subspace::row_span(&residues.left_kernel_basis());
    Ok(RadHomSpace { hom, coordinates })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProjradOutcome {
    pub image_in_radical: bool,
    pub in_radical_hom: bool,
}

/// Computes `Im phi <= rad y` and `phi in Rad(x, y)` independently.
pub fn projrad_equivalence_check(phi: &Matrix, x: &Module, y: &Module) -> Result<ProjradOutcome> {
    x.check_homomorphism(y, phi)?;
    Ok(ProjradOutcome {
        image_in_radical: radical_of_module(y)?.contains_rows(phi),
        in_radical_hom: rad_hom(x, y)?.contains(phi),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PresentationCheck {
    pub cover: bool,
    pub radical_map: bool,
}

/// For an exact `p1 --phi--> p0 --psi--> m --> 0`: whether `psi` is a projective
/// cover and whether `phi` is a radical map.
pub fn is_minimal_presentation(
    p1: &Module,
    p0: &Module,
    phi: &Matrix,
    psi: &Matrix,
    m: &Module,
) -> Result<PresentationCheck> {
    p1.check_homomorphism(p0, phi)?;
    p0.check_homomorphism(m, psi)?;
    if !phi.mul(psi).is_zero() {
        return Err(Error::NotExact("phi * psi is not zero".into()));
    }
    let rank_psi = psi.rank();
    if rank_psi != m.dim() {
        return Err(Error::NotExact(format!(
            "rank psi = {rank_psi} but dim m = {}",
            m.dim()
        )));
    }
    let rank_phi = phi.rank();
    if rank_phi != p0.dim() - rank_psi {
        return Err(Error::NotExact(format!(
            "rank phi = {rank_phi} but dim p0 - rank psi = {}",
            p0.dim() - rank_psi
        )));
    }
    Ok(PresentationCheck {
        cover: is_essential_epi(psi, p0, m)?,
        radical_map: rad_hom(p1, p0)?.contains(phi),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::module::{direct_sum, Module};
    use crate::projcover::projective_cover;

    #[test]
    fn radhom_examples() {
        let a2 = gallery::linear_quiver(2, 5).unwrap();
        let [s1, _] = gallery::a2_simples(&a2);
        assert_eq!(rad_hom(&s1, &s1).unwrap().dim(), 0);
        let p1 = gallery::a2_p1(&a2);
        let p2 = gallery::a2_p2(&a2);
        let r = rad_hom(&p2, &p1).unwrap();
        assert_eq!((r.hom.dim(), r.dim()), (1, 1));

        let m = direct_sum(&a2, &[p1.clone(), p1]).unwrap().module;
        let r = rad_hom(&m, &m).unwrap();
        let end = end_algebra(&m).unwrap();
        let j = &end.algebra.radical().unwrap().basis;
        assert_eq!(&r.coordinates, j);
    }

    #[test]
    fn radical_map_with_image_outside_radical() {
        let kxy = gallery::kxy_dual(5).unwrap();
        let p = kxy.modulus();
        let reg = Module::regular(kxy);
        // basis 1, x, y, xy
        let y_span = Subspace::row_span(&Matrix::from_rows(
            p,
            4,
            &[[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        ));
        let (y, _) = crate::module::submodule(&reg, &y_span).unwrap();
        let x_in_y = Subspace::row_span(&Matrix::from_rows(p, 3, &[[1, 0, 0], [0, 0, 1]]));
        let (x, phi) = crate::module::submodule(&y, &x_in_y).unwrap();
        let out = projrad_equivalence_check(&phi, &x, &y).unwrap();
        assert_eq!(
            out,
            ProjradOutcome {
                image_in_radical: false,
                in_radical_hom: true
            }
        );
    }

    #[test]
    fn presentations() {
        let a2 = gallery::linear_quiver(2, 5).unwrap();
        let p = a2.modulus();
        let [s1, _] = gallery::a2_simples(&a2);
        let p1 = gallery::a2_p1(&a2);
        let p2 = gallery::a2_p2(&a2);
        let c = projective_cover(&s1, 0).unwrap();
        let (k, incl) =
            crate::module::submodule(&c.cover, &Subspace::row_span(&c.kernel_basis)).unwrap();
        let out = is_minimal_presentation(&k, &c.cover, &incl, &c.epi, &s1).unwrap();
        assert_eq!(
            out,
            PresentationCheck {
                cover: true,
                radical_map: true
            }
        );

        // P2 (+) P1 -> P1 (+) P1 -> S1 with an identity component
        let src = direct_sum(&a2, &[k.clone(), c.cover.clone()]).unwrap();
        let dst = direct_sum(&a2, &[c.cover.clone(), c.cover.clone()]).unwrap();
        let phi = src.pis[0]
            .mul(&incl)
            .mul(&dst.iotas[0])
            .add(&src.pis[1].mul(&dst.iotas[1]));
        let psi = dst.pis[0].mul(&c.epi);
        let out = is_minimal_presentation(&src.module, &dst.module, &phi, &psi, &s1).unwrap();
        assert_eq!(
            out,
            PresentationCheck {
                cover: false,
                radical_map: false
            }
        );

        let zero = Module::zero(a2.clone());
        let out = is_minimal_presentation(
            &zero,
            &p1,
            &Matrix::zeros(p, 0, 2),
            &Matrix::identity(p, 2),
            &p1,
        )
        .unwrap();
        assert_eq!(
            out,
            PresentationCheck {
                cover: true,
                radical_map: true
            }
        );

        let bad = is_minimal_presentation(&p2, &p1, &Matrix::zeros(p, 1, 2), &c.epi, &s1);
        assert!(matches!(bad, Err(Error::NotExact(_))));
    }
}
