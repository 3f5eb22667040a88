use crate::error::{Error, Result};
use crate::exactlin::{factor_poly, minimal_polynomial, Matrix, Poly, Subspace};
use crate::module::{Module, Summand};

/// `M = Im phi^r (+) Ker phi^r` for the least `r` with `rank phi^r = rank phi^(2r)`.
#[derive(Clone, Debug)]
pub struct FittingSplit {
    pub exponent: usize,
    pub image: Summand,
    pub kernel: Summand,
}

fn summand_from(m: &Module, iota: Matrix, pi: Matrix) -> Summand {
    let action = m.actions().iter().map(|a| iota.mul(a).mul(&pi)).collect();
    Summand {
        module: Module::new_unchecked(m.algebra().clone(), iota.rows(), action),
        iota,
        pi,
    }
}

pub fn fitting_split(m: &Module, phi: &Matrix) -> Result<FittingSplit> {
    m.check_homomorphism(m, phi)?;
    let p = m.modulus();
    let n = m.dim();
    let mut r = 1;
    let mut phi_r = phi.clone();
    loop {
        let phi_2r = phi_r.mul(&phi_r);
        if phi_r.rank() == phi_2r.rank() || r >= n.max(1) {
            break;
        }
        r += 1;
        phi_r = phi_r.mul(phi);
    }
    let image = Subspace::row_span(&phi_r);
    let kernel = Subspace::row_span(&phi_r.left_kernel_basis());
    if image.dim() + kernel.dim() != n || !image.intersection(&kernel).is_zero() {
        return Err(Error::Internal(
            "Fitting decomposition failed to be direct".into(),
        ));
    }
    let iota1 = image.basis().clone();
    let sel = image.coordinate_selector();
    // phi^r restricted to its image, in image coordinates; psi is its inverse.
    let restricted = iota1.mul(&phi_r).mul(&sel);
    let psi = restricted
        .inverse()
        .ok_or_else(|| Error::Internal("phi^r is not invertible on its image".into()))?;
    let pi1 = phi_r.mul(&sel).mul(&psi);
    let iota2 = kernel.basis().clone();
    let pi2 = Matrix::identity(p, n)
        .sub(&pi1.mul(&iota1))
        .mul(&kernel.coordinate_selector());
    Ok(FittingSplit {
        exponent: r,
        image: summand_from(m, iota1, pi1),
        kernel: summand_from(m, iota2, pi2),
    })
}

/// One primary component `Ker f(phi)^e` of an endomorphism.
#[derive(Clone, Debug)]
pub struct PrimaryComponent {
    pub summand: Summand,
    pub factor: Poly,
    pub multiplicity: usize,
}

/// Splits `M` along the factorization of the minimal polynomial of `phi`.
/// A single primary factor returns `M` itself with identity witnesses.
pub fn primary_split(m: &Module, phi: &Matrix) -> Result<Vec<PrimaryComponent>> {
    m.check_homomorphism(m, phi)?;
    let p = m.modulus();
    let n = m.dim();
    if n == 0 {
        return Ok(vec![]);
    }
    let f = minimal_polynomial(phi);
    let fac = factor_poly(&f)?;
    if fac.factors.len() == 1 {
        let (g, e) = fac.factors[0].clone();
        return Ok(vec![PrimaryComponent {
            summand: Summand {
                module: m.clone(),
                iota: Matrix::identity(p, n),
                pi: Matrix::identity(p, n),
            },
            factor: g,
            multiplicity: e,
        }]);
    }
    let kernels: Vec<Subspace> = fac
        .factors
        .iter()
        .map(|(g, e)| Subspace::row_span(&g.pow(*e as u64).eval_matrix(phi).left_kernel_basis()))
        .collect();
    let parts: Vec<&Matrix> = kernels.iter().map(|k| k.basis()).collect();
    let basis = Matrix::vstack(p, n, &parts);
    let inv = basis
        .inverse()
        .ok_or_else(|| Error::Internal("primary components do not span".into()))?;
    let mut offset = 0;
    let mut out = Vec::with_capacity(kernels.len());
    for (k, (g, e)) in kernels.iter().zip(&fac.factors) {
        let cols: Vec<usize> = (offset..offset + k.dim()).collect();
        offset += k.dim();
        let pi = inv.select_columns(&cols);
        out.push(PrimaryComponent {
            summand: summand_from(m, k.basis().clone(), pi),
            factor: g.clone(),
            multiplicity: *e,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::module::direct_sum;

    fn trivial_plane(p: u64) -> Module {
        let k = gallery::ground_field(p).unwrap();
        let r = Module::regular(k.clone());
        direct_sum(&k, &[r.clone(), r]).unwrap().module
    }

    fn check_witnesses(m: &Module, parts: &[&Summand]) {
        let p = m.modulus();
        let mut sum = Matrix::zeros(p, m.dim(), m.dim());
        for s in parts {
            assert!(s.iota.mul(&s.pi).is_identity());
            assert!(s.module.is_homomorphism(m, &s.iota));
            assert!(m.is_homomorphism(&s.module, &s.pi));
            sum = sum.add(&s.pi.mul(&s.iota));
        }
        assert!(sum.is_identity());
    }

    #[test]
    fn fitting_examples() {
        let m = trivial_plane(5);
        let p = m.modulus();
        let nil = Matrix::from_rows(p, 2, &[[0, 1], [0, 0]]);
        let f = fitting_split(&m, &nil).unwrap();
        assert_eq!((f.image.module.dim(), f.kernel.module.dim()), (0, 2));
        check_witnesses(&m, &[&f.image, &f.kernel]);

        let inv = Matrix::from_rows(p, 2, &[[1, 2], [3, 4]]);
        let f = fitting_split(&m, &inv).unwrap();
        assert_eq!((f.image.module.dim(), f.kernel.module.dim()), (2, 0));

        let e = Matrix::from_rows(p, 2, &[[1, 1], [0, 0]]);
        let f = fitting_split(&m, &e).unwrap();
        assert_eq!(f.exponent, 1);
        assert_eq!((f.image.module.dim(), f.kernel.module.dim()), (1, 1));
        check_witnesses(&m, &[&f.image, &f.kernel]);
    }

    #[test]
    fn fitting_rejects_non_endomorphisms() {
        let a2 = gallery::linear_quiver(2, 5).unwrap();
        let p1 = gallery::a2_p1(&a2);
        let bad = Matrix::from_rows(a2.modulus(), 2, &[[0, 0], [1, 0]]);
        assert!(matches!(
            fitting_split(&p1, &bad),
            Err(Error::NotIntertwiner(_))
        ));
    }

    #[test]
    fn primary_examples() {
        let m = trivial_plane(5);
        let p = m.modulus();
        let parts = primary_split(&m, &Matrix::identity(p, 2)).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].summand.module, m);

        let parts = primary_split(&m, &Matrix::diagonal(p, &[1, 2])).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|c| c.summand.module.dim() == 1));
        let refs: Vec<&Summand> = parts.iter().map(|c| &c.summand).collect();
        check_witnesses(&m, &refs);

        let nil = Matrix::from_rows(p, 2, &[[0, 1], [0, 0]]);
        let parts = primary_split(&m, &nil).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].multiplicity, 2);
    }
}
