use std::sync::Arc;

use super::Module;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Subspace};
use crate::par;

/// A basis of `Hom(source, target)`, stored as a canonical subspace of
/// flattened `dim source x dim target` matrices.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source: Module,
    pub target: Module,
    span: Subspace,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn basis_element(&self, i: usize) -> Matrix {
        let p = self.source.modulus();
        Matrix::from_vec(
            p,
            self.source.dim(),
            self.target.dim(),
            self.span.basis().row(i).to_vec(),
        )
    }

    pub fn basis(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|i| self.basis_element(i)).collect()
    }

    /// `sum_i coeffs[i] * basis[i]`
    pub fn element(&self, coeffs: &[u64]) -> Matrix {
        let p = self.source.modulus();
        let flat = Matrix::row_vector(p, coeffs).mul(self.span.basis());
        Matrix::from_vec(p, self.source.dim(), self.target.dim(), flat.into_data())
    }

    pub fn coordinates(&self, t: &Matrix) -> Option<Vec<u64>> {
        self.span.coordinates(t.data())
    }

    pub fn contains(&self, t: &Matrix) -> bool {
        t.rows() == self.source.dim()
            && t.cols() == self.target.dim()
            && self.span.contains(t.data())
    }
}

/// Solves the intertwining equations `action_M(b) T = T action_N(b)` for every
/// algebra basis element `b`.
pub fn hom_space(m: &Module, n: &Module) -> Result<HomSpace> {
    m.check_same_algebra(n)?;
    let p = m.modulus();
    let (dm, dn) = (m.dim(), n.dim());
    let unknowns = dm * dn;
    if unknowns == 0 {
        return Ok(HomSpace {
            source: m.clone(),
            target: n.clone(),
            span: Subspace::zero(p, 0),
        });
    }
    let blocks = par::map_range(m.algebra().dim(), |b| {
        let am = m.action(b);
        let an = n.action(b);
        let mut eq = Matrix::zeros(p, unknowns, unknowns);
        for r in 0..dm {
            for c in 0..dn {
                let row = r * dn + c;
                for k in 0..dm {
                    let x = am.get(r, k);
                    if x != 0 {
                        let col = k * dn + c;
                        eq.set(row, col, p.add(eq.get(row, col), x));
                    }
                }
                for k in 0..dn {
                    let x = an.get(k, c);
                    if x != 0 {
                        let col = r * dn + k;
                        eq.set(row, col, p.sub(eq.get(row, col), x));
                    }
                }
            }
        }
        eq
    });
    // Keep the accumulated equations reduced so the working matrix never
    // exceeds twice the number of unknowns.
    let mut reduced = Subspace::zero(p, unknowns);
    for block in &blocks {
        reduced = reduced.sum(&Subspace::row_span(block));
        if reduced.dim() == unknowns {
            break;
        }
    }
    let span = Subspace::row_span(&reduced.basis().kernel_basis());
    Ok(HomSpace {
        source: m.clone(),
        target: n.clone(),
        span,
    })
}

/// `End(M)` as an algebra. The product of basis elements is composition of
/// maps, `b_i * b_j = b_i . b_j` (apply `b_j` first), which in the row
/// convention is the matrix product `T_j T_i`.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub algebra: Arc<Algebra>,
    pub hom: HomSpace,
}

impl EndAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn module(&self) -> &Module {
        &self.hom.source
    }

    /// The endomorphism matrix of an algebra element.
    pub fn to_matrix(&self, x: &[u64]) -> Matrix {
        self.hom.element(x)
    }

    /// Algebra coordinates of an endomorphism matrix.
    pub fn coordinates(&self, t: &Matrix) -> Option<Vec<u64>> {
        self.hom.coordinates(t)
    }

    /// True if this is the degenerate endomorphism ring of the zero module.
    pub fn is_degenerate(&self) -> bool {
        self.dim() == 0
    }
}

pub fn end_algebra(m: &Module) -> Result<EndAlgebra> {
    let hom = hom_space(m, m)?;
    let p = m.modulus();
    let e = hom.dim();
    let basis = hom.basis();
    let rows: Vec<Vec<u64>> = par::map_range(e * e, |ij| {
        let (i, j) = (ij / e, ij % e);
        let prod = basis[j].mul(&basis[i]);
        hom.coordinates(&prod).expect("endomorphisms compose")
    });
    let table = rows.into_iter().flatten().collect();
    let one = if e == 0 {
        vec![]
    } else {
        hom.coordinates(&Matrix::identity(p, m.dim()))
            .ok_or_else(|| Error::Internal("identity is not an endomorphism".into()))?
    };
    Ok(EndAlgebra {
        algebra: Arc::new(Algebra::from_table_unchecked(p, e, table, one)),
        hom,
    })
}

/// The functor `Hom(X, -)` from `add X` to right `End(X)`-modules.
#[derive(Clone, Debug)]
pub struct Projectivization {
    pub gamma: EndAlgebra,
}

impl Projectivization {
    /// `Hom(X, m)` with `f . g = f . g` (apply `g` first, then `f`).
    pub fn apply(&self, m: &Module) -> Result<Module> {
        let x = self.gamma.module();
        let h = hom_space(x, m)?;
        let gamma = &self.gamma;
        let p = m.modulus();
        let s = h.dim();
        let basis = h.basis();
        let action = (0..gamma.dim())
            .map(|k| {
                let g = gamma.hom.basis_element(k);
                let mut a = Matrix::zeros(p, s, s);
                for (i, f) in basis.iter().enumerate() {
                    let coords = h.coordinates(&g.mul(f)).ok_or_else(|| {
                        Error::Internal("Hom(X, m) is not closed under End(X)".into())
                    })?;
                    for (j, c) in coords.into_iter().enumerate() {
                        a.set(i, j, c);
                    }
                }
                Ok(a)
            })
            .collect::<Result<Vec<_>>>()?;
        Module::new(gamma.algebra.clone(), s, action)
    }

    /// Applies the functor to a morphism `t: m -> n`, giving `Hom(X, m) -> Hom(X, n)`.
    pub fn apply_morphism(&self, m: &Module, n: &Module, t: &Matrix) -> Result<Matrix> {
        m.check_homomorphism(n, t)?;
        let x = self.gamma.module();
        let hm = hom_space(x, m)?;
        let hn = hom_space(x, n)?;
        let p = m.modulus();
        let mut out = Matrix::zeros(p, hm.dim(), hn.dim());
        for (i, f) in hm.basis().iter().enumerate() {
            let coords = hn
                .coordinates(&f.mul(t))
                .ok_or_else(|| Error::Internal("composite is not a homomorphism".into()))?;
            for (j, c) in coords.into_iter().enumerate() {
                out.set(i, j, c);
            }
        }
        Ok(out)
    }
}

pub fn projectivize(x: &Module) -> Result<Projectivization> {
    Ok(Projectivization {
        gamma: end_algebra(x)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::module::direct_sum;

    #[test]
    fn hom_examples() {
        let a2 = gallery::linear_quiver(2, 5).unwrap();
        let (p1, p2) = (gallery::a2_p1(&a2), gallery::a2_p2(&a2));
        let [s1, s2] = gallery::a2_simples(&a2);
        assert_eq!(hom_space(&p1, &Module::zero(a2.clone())).unwrap().dim(), 0);
        assert_eq!(hom_space(&p2, &p1).unwrap().dim(), 1);
        assert_eq!(hom_space(&p1, &p2).unwrap().dim(), 0);
        assert_eq!(hom_space(&s1, &s2).unwrap().dim(), 0);
        assert_eq!(hom_space(&s1, &s1).unwrap().dim(), 1);
        for h in [hom_space(&p2, &p1).unwrap(), hom_space(&p1, &p1).unwrap()] {
            for t in h.basis() {
                assert!(h.source.is_homomorphism(&h.target, &t));
            }
        }
    }

    #[test]
    fn algebra_mismatch() {
        let a2 = gallery::linear_quiver(2, 5).unwrap();
        let a3 = gallery::linear_quiver(3, 5).unwrap();
        let r2 = Module::regular(a2);
        let r3 = Module::regular(a3);
        assert!(matches!(hom_space(&r2, &r3), Err(Error::AlgebraMismatch)));
    }

    #[test]
    fn end_examples() {
        let a2 = gallery::linear_quiver(2, 5).unwrap();
        let [s1, _] = gallery::a2_simples(&a2);
        let e = end_algebra(&s1).unwrap();
        assert_eq!(e.dim(), 1);
        assert_eq!(*e.algebra, Algebra::ground_field(a2.modulus()));

        let k = gallery::ground_field(5).unwrap();
        let m = Module::regular(k.clone());
        let mm = direct_sum(&k, &[m.clone(), m]).unwrap().module;
        let e = end_algebra(&mm).unwrap();
        assert_eq!(e.dim(), 4);
        assert!(!e.algebra.is_commutative());
        // identity element corresponds to the identity matrix
        assert!(e.to_matrix(e.algebra.one()).is_identity());

        let zero = end_algebra(&Module::zero(k)).unwrap();
        assert!(zero.is_degenerate());
    }

    #[test]
    fn end_product_is_composition() {
        let a2 = gallery::linear_quiver(2, 7).unwrap();
        let reg = Module::regular(a2);
        let e = end_algebra(&reg).unwrap();
        for i in 0..e.dim() {
            for j in 0..e.dim() {
                let prod = e
                    .algebra
                    .mul(&e.algebra.basis_element(i), &e.algebra.basis_element(j));
                let ti = e.hom.basis_element(i);
                let tj = e.hom.basis_element(j);
                assert_eq!(e.to_matrix(&prod), tj.mul(&ti));
            }
        }
    }

    #[test]
    fn projectivize_preserves_hom_dimensions() {
        let a2 = gallery::linear_quiver(2, 5).unwrap();
        let (p1, p2) = (gallery::a2_p1(&a2), gallery::a2_p2(&a2));
        let x = direct_sum(&a2, &[p1.clone(), p2.clone()]).unwrap().module;
        let f = projectivize(&x).unwrap();
        let fx = f.apply(&x).unwrap();
        assert_eq!(fx.dim(), f.gamma.dim());
        let gamma_hom = |a: &Module, b: &Module| hom_space(a, b).unwrap().dim();
        assert_eq!(gamma_hom(&fx, &fx), hom_space(&x, &x).unwrap().dim());
        let (fp1, fp2) = (f.apply(&p1).unwrap(), f.apply(&p2).unwrap());
        assert_eq!(gamma_hom(&fp2, &fp1), 1);
        assert_eq!(gamma_hom(&fp1, &fp2), 0);
        let fz = f.apply(&Module::zero(a2)).unwrap();
        assert_eq!(fz.dim(), 0);
        assert_eq!(gamma_hom(&fz, &fp1), 0);
    }
}
