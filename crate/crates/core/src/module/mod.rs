//! Right modules over an [`Algebra`], given by one action matrix per basis element.
//!
//! Vectors are rows and `v . b_i = v * action[i]`. A homomorphism `M -> N` is a
//! `dim M x dim N` matrix `T` with `action_M(b) T = T action_N(b)`.

mod hom;
mod ops;

use std::sync::Arc;

pub use hom::{end_algebra, hom_space, projectivize, EndAlgebra, HomSpace, Projectivization};
pub use ops::{
    direct_sum, quotient_module, radical_of_module, split_idempotent, submodule, top, DirectSum,
    Quotient, Summand,
};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Modulus, Subspace};

#[derive(Clone, Debug)]
pub struct Module {
    algebra: Arc<Algebra>,
    dim: usize,
    action: Vec<Matrix>,
}

impl PartialEq for Module {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.action == other.action
            && same_algebra(&self.algebra, &other.algebra)
    }
}

impl Eq for Module {}

pub(crate) fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Module {
    /// Validates shapes, the unit law, and `action(b_i) action(b_j) = sum_k c_ijk action(b_k)`.
    pub fn new(algebra: Arc<Algebra>, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        let m = Module {
            algebra,
            dim,
            action,
        };
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(algebra: Arc<Algebra>, dim: usize, action: Vec<Matrix>) -> Self {
        let m = Module {
            algebra,
            dim,
            action,
        };
        debug_assert!(m.validate().is_ok(), "{:?}", m.validate());
        m
    }

    fn validate(&self) -> Result<()> {
        let a = &self.algebra;
        let p = a.modulus();
        if self.action.len() != a.dim() {
            return Err(Error::InvalidModule(format!(
                "expected {} action matrices, got {}",
                a.dim(),
                self.action.len()
            )));
        }
        for (i, m) in self.action.iter().enumerate() {
            if m.rows() != self.dim || m.cols() != self.dim {
                return Err(Error::InvalidModule(format!(
                    "action matrix {i} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    self.dim,
                    self.dim
                )));
            }
            if m.modulus() != p {
                return Err(Error::InvalidModule(format!(
                    "action matrix {i} has the wrong modulus"
                )));
            }
        }
        if !self.action_of(a.one()).is_identity() {
            return Err(Error::InvalidModule(
                "the unit does not act as the identity".into(),
            ));
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = self.action[i].mul(&self.action[j]);
                let rhs = self.action_of(a.basis_product(i, j));
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!(
                        "action is not compatible with the product b{i} * b{j}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn zero(algebra: Arc<Algebra>) -> Self {
        let p = algebra.modulus();
        let action = vec![Matrix::zeros(p, 0, 0); algebra.dim()];
        Module {
            algebra,
            dim: 0,
            action,
        }
    }

    /// The regular right module `A_A`: `b_i` acts by right multiplication.
    pub fn regular(algebra: Arc<Algebra>) -> Self {
        let action = (0..algebra.dim())
            .map(|i| algebra.right_multiplication(&algebra.basis_element(i)))
            .collect();
        let dim = algebra.dim();
        Module::new_unchecked(algebra, dim, action)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn modulus(&self) -> Modulus {
        self.algebra.modulus()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// Matrix by which the algebra element `x` acts.
    pub fn action_of(&self, x: &[u64]) -> Matrix {
        let p = self.modulus();
        let mut out = Matrix::zeros(p, self.dim, self.dim);
        for (k, &c) in x.iter().enumerate() {
            if c != 0 {
                out = out.add_scaled(c, &self.action[k]);
            }
        }
        out
    }

    pub fn check_same_algebra(&self, other: &Module) -> Result<()> {
        if same_algebra(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// `Ok` if `t` is a homomorphism `self -> target`, else the first failing basis element.
    pub fn check_homomorphism(&self, target: &Module, t: &Matrix) -> Result<()> {
        self.check_same_algebra(target)?;
        if t.rows() != self.dim || t.cols() != target.dim {
            return Err(Error::DimensionMismatch(format!(
                "morphism is {}x{}, expected {}x{}",
                t.rows(),
                t.cols(),
                self.dim,
                target.dim
            )));
        }
        for (i, (a, b)) in self.action.iter().zip(&target.action).enumerate() {
            if a.mul(t) != t.mul(b) {
                return Err(Error::NotIntertwiner(i));
            }
        }
        Ok(())
    }

    pub fn is_homomorphism(&self, target: &Module, t: &Matrix) -> bool {
        self.check_homomorphism(target, t).is_ok()
    }

    /// `Ok` if the subspace is closed under the action.
    pub fn check_submodule(&self, u: &Subspace) -> Result<()> {
        if u.ambient() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "subspace of F_p^{} in a module of dimension {}",
                u.ambient(),
                self.dim
            )));
        }
        for (k, a) in self.action.iter().enumerate() {
            for r in 0..u.dim() {
                if !u.contains(&a.apply(u.basis().row(r))) {
                    return Err(Error::UnstableSubspace {
                        vector: r,
                        basis_element: k,
                    });
                }
            }
        }
        Ok(())
    }

    /// Smallest submodule containing the given row vectors.
    pub fn generated_submodule(&self, generators: &Matrix) -> Subspace {
        let p = self.modulus();
        let mut span = Subspace::row_span(generators);
        loop {
            let mut parts = vec![span.basis().clone()];
            parts.extend(self.action.iter().map(|a| span.basis().mul(a)));
            let refs: Vec<&Matrix> = parts.iter().collect();
            let next = Subspace::row_span(&Matrix::vstack(p, self.dim, &refs));
            if next == span {
                return span;
            }
            span = next;
        }
    }

    /// The module with action `g^-1 action(b) g`; `g` is an isomorphism from `self` onto it.
    pub fn conjugate(&self, g: &Matrix) -> Result<Module> {
        let inv = g
            .inverse()
            .ok_or_else(|| Error::InvalidModule("base change is not invertible".into()))?;
        let action = self.action.iter().map(|a| inv.mul(a).mul(g)).collect();
        Ok(Module::new_unchecked(
            self.algebra.clone(),
            self.dim,
            action,
        ))
    }

    /// Canonical bytes for ordering: dimension then row-reduced action matrices.
    pub fn fingerprint(&self) -> Vec<u64> {
        let mut out = vec![self.dim as u64];
        for a in &self.action {
            out.extend_from_slice(a.rref().matrix.data());
        }
        out
    }
}
