use super::field::Modulus;
use super::matrix::Matrix;

/// A subspace of `F_p^n`, stored as its canonical (RREF) row basis.
///
/// Two subspaces are equal exactly when their stored bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(p: Modulus, ambient: usize) -> Self {
        Subspace {
            basis: Matrix::zeros(p, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(p: Modulus, ambient: usize) -> Self {
        Subspace {
            basis: Matrix::identity(p, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// The span of the rows of `m`.
    pub fn row_span(m: &Matrix) -> Self {
        let r = m.rref();
        Subspace {
            basis: r.matrix.row_slice(0, r.rank),
            pivots: r.pivots,
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.basis.modulus()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that carry no pivot; the standard vectors at these columns span a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient())
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Normal form of `v` modulo the subspace: pivot coordinates are cleared.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.ambient(), "vector length mismatch");
        let p = self.modulus();
        let mut w = v.to_vec();
        for (i, &c) in self.pivots.iter().enumerate() {
            let f = w[c];
            if f == 0 {
                continue;
            }
            let f = p.neg(f);
            for (x, &b) in w.iter_mut().zip(self.basis.row(i)) {
                if b != 0 {
                    *x = p.mul_add(*x, f, b);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` with respect to the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[u64]) -> Option<Vec<u64>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&c| v[c]).collect())
    }

    /// Every row of `m` lies in the subspace.
    pub fn contains_rows(&self, m: &Matrix) -> bool {
        (0..m.rows()).all(|i| self.contains(m.row(i)))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        self.contains_rows(other.basis())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let p = self.modulus();
        Subspace::row_span(&Matrix::vstack(
            p,
            self.ambient(),
            &[&self.basis, &other.basis],
        ))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let p = self.modulus();
        let n = self.ambient();
        let stacked = Matrix::vstack(p, n, &[&self.basis, &other.basis]);
        // (a, b) with a*U + b*W = 0 gives a*U in both.
        let relations = stacked.left_kernel_basis();
        let a = relations.select_columns(&(0..self.dim()).collect::<Vec<_>>());
        Subspace::row_span(&a.mul(&self.basis))
    }

    /// Matrix of shape `ambient x (ambient - dim)` sending a vector to the
    /// free-column coordinates of its normal form, i.e. coordinates in the
    /// quotient by this subspace.
    pub fn quotient_projection(&self) -> Matrix {
        let free = self.free_columns();
        let n = self.ambient();
        let p = self.modulus();
        let mut out = Matrix::zeros(p, n, free.len());
        let mut e = vec![0u64; n];
        for i in 0..n {
            e[i] = 1;
            let r = self.reduce(&e);
            for (jj, &j) in free.iter().enumerate() {
                out.set(i, jj, r[j]);
            }
            e[i] = 0;
        }
        out
    }

    /// Matrix selecting pivot coordinates: for `v` in the subspace, `v * sel`
    /// is its coordinate vector.
    pub fn coordinate_selector(&self) -> Matrix {
        Matrix::column_selector(self.modulus(), self.ambient(), &self.pivots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_and_coordinates() {
        let p = Modulus::new(7).unwrap();
        let u = Subspace::row_span(&Matrix::from_rows(p, 3, &[[1, 2, 0], [2, 4, 1]]));
        assert_eq!(u.dim(), 2);
        assert!(u.contains(&[3, 6, 5]));
        assert!(!u.contains(&[0, 1, 0]));
        let c = u.coordinates(&[3, 6, 5]).unwrap();
        let rebuilt = Matrix::row_vector(p, &c).mul(u.basis());
        assert_eq!(rebuilt.row(0), &[3, 6, 5]);
        assert_eq!(u.free_columns(), vec![1]);
    }

    #[test]
    fn intersection_and_sum() {
        let p = Modulus::new(5).unwrap();
        let u = Subspace::row_span(&Matrix::from_rows(p, 3, &[[1, 0, 0], [0, 1, 0]]));
        let w = Subspace::row_span(&Matrix::from_rows(p, 3, &[[0, 1, 0], [0, 0, 1]]));
        let i = u.intersection(&w);
        assert_eq!(
            i,
            Subspace::row_span(&Matrix::from_rows(p, 3, &[[0, 1, 0]]))
        );
        assert_eq!(u.sum(&w), Subspace::full(p, 3));
        assert!(u.contains_subspace(&i));
        assert!(Subspace::zero(p, 3).is_zero());
    }

    #[test]
    fn quotient_projection_kills_subspace() {
        let p = Modulus::new(5).unwrap();
        let u = Subspace::row_span(&Matrix::from_rows(p, 3, &[[1, 1, 0]]));
        let q = u.quotient_projection();
        assert_eq!(q.cols(), 2);
        assert!(u.basis().mul(&q).is_zero());
        assert_eq!(q.rank(), 2);
    }
}
