//! Finite-dimensional associative unital algebras given by structure constants.

mod locality;
mod quiver;
mod radical;

use std::sync::OnceLock;

pub use locality::{
    frobenius_fixed_space, is_local, lift_idempotent, primitive_idempotent_split, IdempotentSplit,
    Locality, LocalityCertificate, SPLIT_ATTEMPTS,
};
pub use quiver::{algebra_from_quiver, Arrow, Path, QuiverAlgebra, QuiverPresentation};
pub use radical::{jacobson_radical, semisimple_quotient, RadicalIdeal, SemisimpleQuotient};

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Modulus, Subspace};

/// An associative unital algebra over `F_p` with basis `b_0..b_{dim-1}` and
/// `b_i * b_j = sum_k table[i][j][k] b_k`.
#[derive(Debug)]
pub struct Algebra {
    p: Modulus,
    dim: usize,
    table: Vec<u64>,
    one: Vec<u64>,
    radical: OnceLock<RadicalIdeal>,
}

impl Clone for Algebra {
    fn clone(&self) -> Self {
        Algebra {
            p: self.p,
            dim: self.dim,
            table: self.table.clone(),
            one: self.one.clone(),
            radical: self.radical.clone(),
        }
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.dim == other.dim
            && self.one == other.one
            && self.table == other.table
    }
}

impl Eq for Algebra {}

impl Algebra {
    /// Validates associativity and the unit laws. `table` is indexed
    /// `[(i * dim + j) * dim + k]`; entries are reduced mod `p`.
    pub fn from_structure_constants(
        p: Modulus,
        dim: usize,
        table: Vec<u64>,
        one: Vec<u64>,
    ) -> Result<Self> {
        if table.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "structure constants need {} entries, got {}",
                dim * dim * dim,
                table.len()
            )));
        }
        if one.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "unit vector needs {} entries, got {}",
                dim,
                one.len()
            )));
        }
        let a = Self::from_table_unchecked(
            p,
            dim,
            table.into_iter().map(|x| p.reduce(x)).collect(),
            one.into_iter().map(|x| p.reduce(x)).collect(),
        );
        a.validate()?;
        Ok(a)
    }

    /// Builds an algebra whose laws hold by construction (path algebras,
    /// endomorphism algebras, quotients).
    pub(crate) fn from_table_unchecked(
        p: Modulus,
        dim: usize,
        table: Vec<u64>,
        one: Vec<u64>,
    ) -> Self {
        debug_assert_eq!(table.len(), dim * dim * dim);
        Algebra {
            p,
            dim,
            table,
            one,
            radical: OnceLock::new(),
        }
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            let bi = self.basis_element(i);
            if self.mul(&self.one, &bi) != bi || self.mul(&bi, &self.one) != bi {
                return Err(Error::BadUnit(i));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j).to_vec();
                for k in 0..n {
                    let left = self.mul_by_basis_right(&ij, k);
                    let jk = self.basis_product(j, k);
                    let right = self.mul_by_basis_left(i, jk);
                    if left != right {
                        return Err(Error::NonAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// The one-dimensional algebra `F_p`.
    pub fn ground_field(p: Modulus) -> Self {
        Self::from_table_unchecked(p, 1, vec![1 % p.get()], vec![1 % p.get()])
    }

    #[inline]
    pub fn modulus(&self) -> Modulus {
        self.p
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn one(&self) -> &[u64] {
        &self.one
    }

    pub fn table(&self) -> &[u64] {
        &self.table
    }

    pub fn zero_element(&self) -> Vec<u64> {
        vec![0; self.dim]
    }

    pub fn basis_element(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    /// Coordinates of `b_i * b_j`.
    #[inline]
    pub fn basis_product(&self, i: usize, j: usize) -> &[u64] {
        let n = self.dim;
        &self.table[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let p = self.p;
        let n = self.dim;
        let mut out = vec![0u64; n];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = p.mul(xi, yj);
                for (o, &t) in out.iter_mut().zip(self.basis_product(i, j)) {
                    if t != 0 {
                        *o = p.mul_add(*o, c, t);
                    }
                }
            }
        }
        out
    }

    fn mul_by_basis_right(&self, x: &[u64], k: usize) -> Vec<u64> {
        let mut out = vec![0u64; self.dim];
        for (m, &xm) in x.iter().enumerate() {
            if xm != 0 {
                for (o, &t) in out.iter_mut().zip(self.basis_product(m, k)) {
                    *o = self.p.mul_add(*o, xm, t);
                }
            }
        }
        out
    }

    fn mul_by_basis_left(&self, i: usize, y: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; self.dim];
        for (m, &ym) in y.iter().enumerate() {
            if ym != 0 {
                for (o, &t) in out.iter_mut().zip(self.basis_product(i, m)) {
                    *o = self.p.mul_add(*o, ym, t);
                }
            }
        }
        out
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        x.iter().zip(y).map(|(&a, &b)| self.p.add(a, b)).collect()
    }

    pub fn sub(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        x.iter().zip(y).map(|(&a, &b)| self.p.sub(a, b)).collect()
    }

    pub fn scale(&self, c: u64, x: &[u64]) -> Vec<u64> {
        x.iter().map(|&a| self.p.mul(a, c)).collect()
    }

    pub fn pow(&self, x: &[u64], mut exp: u64) -> Vec<u64> {
        let mut acc = self.one.clone();
        let mut base = x.to_vec();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Matrix of `y -> x * y` in the row convention (row `j` is `x * b_j`).
    pub fn left_multiplication(&self, x: &[u64]) -> Matrix {
        let n = self.dim;
        let mut data = Vec::with_capacity(n * n);
        for j in 0..n {
            data.extend(self.mul(x, &self.basis_element(j)));
        }
        Matrix::from_vec(self.p, n, n, data)
    }

    /// Matrix of `y -> y * x` in the row convention (row `j` is `b_j * x`).
    pub fn right_multiplication(&self, x: &[u64]) -> Matrix {
        let n = self.dim;
        let mut data = Vec::with_capacity(n * n);
        for j in 0..n {
            data.extend(self.mul(&self.basis_element(j), x));
        }
        Matrix::from_vec(self.p, n, n, data)
    }

    /// `x` is a unit iff left multiplication by `x` is invertible.
    pub fn is_unit(&self, x: &[u64]) -> bool {
        self.left_multiplication(x).is_invertible()
    }

    pub fn is_idempotent(&self, x: &[u64]) -> bool {
        self.mul(x, x) == x
    }

    pub fn is_commutative(&self) -> bool {
        self.noncommuting_basis_pair().is_none()
    }

    pub fn noncommuting_basis_pair(&self) -> Option<(usize, usize)> {
        (0..self.dim)
            .flat_map(|i| (i + 1..self.dim).map(move |j| (i, j)))
            .find(|&(i, j)| self.basis_product(i, j) != self.basis_product(j, i))
    }

    /// The center `{z : z b = b z for all basis b}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        // Row i holds the coefficients of b_i in every commutator equation.
        let mut m = Matrix::zeros(self.p, n, n * n);
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                let ji = self.basis_product(j, i);
                for k in 0..n {
                    m.set(i, j * n + k, self.p.sub(ij[k], ji[k]));
                }
            }
        }
        Subspace::row_span(&m.left_kernel_basis())
    }

    /// The subspace spanned by products `u * v` with `u` in `left`, `v` in `right`.
    pub fn product_space(&self, left: &Subspace, right: &Subspace) -> Subspace {
        let n = self.dim;
        let mut rows = Vec::new();
        for i in 0..left.dim() {
            for j in 0..right.dim() {
                rows.extend(self.mul(left.basis().row(i), right.basis().row(j)));
            }
        }
        let count = rows.len() / n.max(1);
        Subspace::row_span(&Matrix::from_vec(self.p, count, n, rows))
    }

    /// Structure constants transposed in the first two indices.
    pub fn opposite(&self) -> Algebra {
        let n = self.dim;
        let mut table = vec![0u64; n * n * n];
        for i in 0..n {
            for j in 0..n {
                table[(i * n + j) * n..(i * n + j + 1) * n]
                    .copy_from_slice(self.basis_product(j, i));
            }
        }
        Algebra::from_table_unchecked(self.p, n, table, self.one.clone())
    }

    /// Cached Jacobson radical; see [`jacobson_radical`].
    pub fn radical(&self) -> Result<&RadicalIdeal> {
        if let Some(r) = self.radical.get() {
            return Ok(r);
        }
        let r = radical::compute_radical(self)?;
        Ok(self.radical.get_or_init(|| r))
    }

    /// Evaluates a polynomial at an element (Horner's rule).
    pub fn eval_poly(&self, f: &crate::exactlin::Poly, x: &[u64]) -> Vec<u64> {
        let mut acc = self.zero_element();
        for &c in f.coeffs().iter().rev() {
            acc = self.mul(&acc, x);
            acc = acc
                .iter()
                .zip(&self.one)
                .map(|(&a, &u)| self.p.mul_add(a, c, u))
                .collect();
        }
        acc
    }
}

/// Free function form of [`Algebra::from_structure_constants`].
pub fn algebra_from_structure_constants(
    p: Modulus,
    dim: usize,
    table: Vec<u64>,
    one: Vec<u64>,
) -> Result<Algebra> {
    Algebra::from_structure_constants(p, dim, table, one)
}

pub fn opposite_algebra(a: &Algebra) -> Algebra {
    a.opposite()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> Modulus {
        Modulus::new(p).unwrap()
    }

    /// F_p[x]/(x^2) on the basis (1, x).
    fn dual_numbers(p: Modulus) -> Algebra {
        let table = vec![1, 0, 0, 1, 0, 1, 0, 0];
        Algebra::from_structure_constants(p, 2, table, vec![1, 0]).unwrap()
    }

    #[test]
    fn construction_examples() {
        let p = fp(7);
        let k = Algebra::from_structure_constants(p, 1, vec![1], vec![1]).unwrap();
        assert_eq!(k, Algebra::ground_field(p));
        let d = dual_numbers(p);
        assert!(d.is_commutative());
        assert_eq!(d.mul(&[0, 1], &[0, 1]), vec![0, 0]);
    }

    #[test]
    fn rejects_broken_tables() {
        let p = fp(7);
        // basis (1, a, b): a*a = b, b*a = a, a*b = 0. Then (a a) a = b a = a but a (a a) = a b = 0.
        let mut t = vec![0u64; 27];
        let set = |t: &mut Vec<u64>, i: usize, j: usize, k: usize| t[(i * 3 + j) * 3 + k] = 1;
        for i in 0..3 {
            set(&mut t, 0, i, i);
            set(&mut t, i, 0, i);
        }
        set(&mut t, 1, 1, 2);
        set(&mut t, 2, 1, 1);
        assert_eq!(
            Algebra::from_structure_constants(p, 3, t, vec![1, 0, 0]),
            Err(Error::NonAssociative(1, 1, 1))
        );
        let table = vec![1, 0, 0, 1, 0, 1, 0, 0];
        assert_eq!(
            Algebra::from_structure_constants(p, 2, table, vec![0, 1]),
            Err(Error::BadUnit(0))
        );
        assert!(Algebra::from_structure_constants(p, 2, vec![1], vec![1, 0]).is_err());
    }

    #[test]
    fn opposite_of_commutative_is_equal() {
        let p = fp(5);
        let d = dual_numbers(p);
        assert_eq!(d.opposite(), d);
        assert_eq!(
            Algebra::ground_field(p).opposite(),
            Algebra::ground_field(p)
        );
    }

    #[test]
    fn center_and_units() {
        let p = fp(5);
        let d = dual_numbers(p);
        assert_eq!(d.center().dim(), 2);
        assert!(d.is_unit(&[1, 3]));
        assert!(!d.is_unit(&[0, 3]));
    }
}
