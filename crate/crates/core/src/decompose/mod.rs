//! Krull–Schmidt decomposition of modules into indecomposable summands.

mod exchange;
mod fitting;
mod iso;
mod krull_schmidt;

pub use exchange::{verify_exchange, ExchangeReport};
pub use fitting::{fitting_split, primary_split, FittingSplit, PrimaryComponent};
pub use iso::{indecomposable_isomorphism, is_isomorphic, match_decompositions, Matching};
pub use krull_schmidt::{krull_schmidt, RANDOM_ENDOMORPHISM_ATTEMPTS};

use crate::algebra::LocalityCertificate;
use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::module::Module;

/// One isomorphism class of indecomposable summands. Every witness pair
/// `(iota, pi)` maps between the representative `module` and the parent.
#[derive(Clone, Debug)]
pub struct SummandClass {
    pub module: Module,
    pub multiplicity: usize,
    pub witnesses: Vec<(Matrix, Matrix)>,
    pub certificate: LocalityCertificate,
    pub end_dim: usize,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub parent: Module,
    pub classes: Vec<SummandClass>,
    pub seed: u64,
}

impl Decomposition {
    /// `(class, copy)` for every summand instance, in report order.
    pub fn instances(&self) -> Vec<(usize, usize)> {
        self.classes
            .iter()
            .enumerate()
            .flat_map(|(c, class)| (0..class.multiplicity).map(move |k| (c, k)))
            .collect()
    }

    pub fn summand_count(&self) -> usize {
        self.classes.iter().map(|c| c.multiplicity).sum()
    }

    /// `(dim, multiplicity)` per class, sorted.
    pub fn dimension_profile(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = self
            .classes
            .iter()
            .map(|c| (c.module.dim(), c.multiplicity))
            .collect();
        v.sort_unstable();
        v
    }

    /// Checks the direct-sum identities and that every witness is an intertwiner.
    pub fn verify(&self) -> Result<()> {
        let n = self.parent.dim();
        let p = self.parent.modulus();
        let mut total = Matrix::zeros(p, n, n);
        for class in &self.classes {
            if class.witnesses.len() != class.multiplicity {
                return Err(Error::Internal(
                    "witness count differs from multiplicity".into(),
                ));
            }
            for (iota, pi) in &class.witnesses {
                class.module.check_homomorphism(&self.parent, iota)?;
                self.parent.check_homomorphism(&class.module, pi)?;
                if !iota.mul(pi).is_identity() {
                    return Err(Error::Internal("iota * pi is not the identity".into()));
                }
                total = total.add(&pi.mul(iota));
            }
        }
        if !total.is_identity() {
            return Err(Error::Internal(
                "summand projections do not sum to the identity".into(),
            ));
        }
        Ok(())
    }
}
