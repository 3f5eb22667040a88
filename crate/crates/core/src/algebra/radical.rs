use super::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Subspace};

/// The Jacobson radical `J` of an algebra together with its nilpotency index,
/// the least `m >= 1` with `J^m = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalIdeal {
    pub basis: Subspace,
    pub nilpotency_index: usize,
}

impl RadicalIdeal {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }
}

/// `J(A) = {x : trace(L_{x b}) = 0 for every basis element b}`.
///
/// Elements of this set generate a two-sided ideal whose elements have
/// traceless powers; with `p > dim` Newton's identities make them nilpotent,
/// so the set is exactly the largest nilpotent ideal.
pub fn jacobson_radical(a: &Algebra) -> Result<RadicalIdeal> {
    a.radical().cloned()
}

pub(super) fn compute_radical(a: &Algebra) -> Result<RadicalIdeal> {
    let n = a.dim();
    let p = a.modulus();
    if n > 0 && p.get() <= n as u64 {
        return Err(Error::ModulusTooSmall { p: p.get(), dim: n });
    }
    // trace(L_{b_k}) = sum_j c[k][j][j]
    let traces: Vec<u64> = (0..n)
        .map(|k| (0..n).fold(0, |t, j| p.add(t, a.basis_product(k, j)[j])))
        .collect();
    let mut gram = Matrix::zeros(p, n, n);
    for i in 0..n {
        for j in 0..n {
            let v = a
                .basis_product(i, j)
                .iter()
                .zip(&traces)
                .fold(0, |acc, (&c, &t)| p.mul_add(acc, c, t));
            gram.set(i, j, v);
        }
    }
    let basis = Subspace::row_span(&gram.left_kernel_basis());
    let mut power = basis.clone();
    let mut index = 1;
    while !power.is_zero() {
        power = a.product_space(&power, &basis);
        index += 1;
        if index > n + 1 {
            return Err(Error::Internal("trace radical is not nilpotent".into()));
        }
    }
    Ok(RadicalIdeal {
        basis,
        nilpotency_index: index,
    })
}

/// `A / J(A)` on the complement basis given by the non-pivot columns of `J`.
#[derive(Clone, Debug)]
pub struct SemisimpleQuotient {
    pub algebra: Algebra,
    /// `dim A x dim B`; `x * projection` are the quotient coordinates of `x`.
    pub projection: Matrix,
    /// Basis element `a` of the quotient is the image of `b_{lift_columns[a]}`.
    pub lift_columns: Vec<usize>,
}

impl SemisimpleQuotient {
    /// A preimage in `A` of a quotient element.
    pub fn lift(&self, x: &[u64], ambient_dim: usize) -> Vec<u64> {
        let mut out = vec![0u64; ambient_dim];
        for (&c, &v) in self.lift_columns.iter().zip(x) {
            out[c] = v;
        }
        out
    }

    pub fn project(&self, x: &[u64]) -> Vec<u64> {
        self.projection.apply(x)
    }
}

pub fn semisimple_quotient(a: &Algebra) -> Result<SemisimpleQuotient> {
    let rad = a.radical()?;
    let p = a.modulus();
    let projection = rad.basis.quotient_projection();
    let lift_columns = rad.basis.free_columns();
    let q = lift_columns.len();
    let mut table = Vec::with_capacity(q * q * q);
    for &ci in &lift_columns {
        for &cj in &lift_columns {
            table.extend(projection.apply(a.basis_product(ci, cj)));
        }
    }
    let one = projection.apply(a.one());
    let algebra = Algebra::from_table_unchecked(p, q, table, one);
    // A/J is semisimple; record that without recomputing.
    let _ = algebra.radical.set(RadicalIdeal {
        basis: Subspace::zero(p, q),
        nilpotency_index: 1,
    });
    Ok(SemisimpleQuotient {
        algebra,
        projection,
        lift_columns,
    })
}
