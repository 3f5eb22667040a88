use super::{krull_schmidt, Decomposition};
use crate::error::Result;
use crate::exactlin::Matrix;
use crate::module::{hom_space, Module};

/// For indecomposable `m` and `n`: an isomorphism `m -> n` if some product of
/// basis maps `m -> n -> m` is invertible, otherwise `None`.
pub fn indecomposable_isomorphism(m: &Module, n: &Module) -> Result<Option<Matrix>> {
    m.check_same_algebra(n)?;
    if m.dim() != n.dim() {
        return Ok(None);
    }
    if m == n {
        return Ok(Some(Matrix::identity(m.modulus(), m.dim())));
    }
    let forward = hom_space(m, n)?.basis();
    if forward.is_empty() {
        return Ok(None);
    }
    let backward = hom_space(n, m)?.basis();
    for phi in &forward {
        if backward.iter().any(|psi| phi.mul(psi).is_invertible()) {
            return Ok(Some(phi.clone()));
        }
    }
    Ok(None)
}

/// An isomorphism `m -> n`, found by decomposing both sides and matching summands.
pub fn is_isomorphic(m: &Module, n: &Module) -> Result<Option<Matrix>> {
    m.check_same_algebra(n)?;
    if m.dim() != n.dim() {
        return Ok(None);
    }
    if m == n {
        return Ok(Some(Matrix::identity(m.modulus(), m.dim())));
    }
    let dm = krull_schmidt(m, 0)?;
    let dn = krull_schmidt(n, 0)?;
    let Matching::Matched {
        permutation,
        isomorphisms,
    } = match_decompositions(&dm, &dn)?
    else {
        return Ok(None);
    };
    let p = m.modulus();
    let mut total = Matrix::zeros(p, m.dim(), n.dim());
    let im = dm.instances();
    let inn = dn.instances();
    for (i, &(c, k)) in im.iter().enumerate() {
        let (c2, k2) = inn[permutation[i]];
        let pi = &dm.classes[c].witnesses[k].1;
        let iota = &dn.classes[c2].witnesses[k2].0;
        total = total.add(&pi.mul(&isomorphisms[i]).mul(iota));
    }
    if !total.is_invertible() || !m.is_homomorphism(n, &total) {
        return Ok(None);
    }
    Ok(Some(total))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Matching {
    /// `permutation[i]` is the instance of the second decomposition matched to
    /// instance `i` of the first, and `isomorphisms[i]` maps between their
    /// class representatives.
    Matched {
        permutation: Vec<usize>,
        isomorphisms: Vec<Matrix>,
    },
    Failed(String),
}

pub fn match_decompositions(d1: &Decomposition, d2: &Decomposition) -> Result<Matching> {
    d1.parent.check_same_algebra(&d2.parent)?;
    if d1.parent.dim() != d2.parent.dim() {
        return Ok(Matching::Failed(format!(
            "parent dimensions differ: {} vs {}",
            d1.parent.dim(),
            d2.parent.dim()
        )));
    }
    if d1.summand_count() != d2.summand_count() {
        return Ok(Matching::Failed(format!(
            "summand counts differ: {} vs {}",
            d1.summand_count(),
            d2.summand_count()
        )));
    }
    let mut class_map = vec![None; d1.classes.len()];
    let mut used = vec![false; d2.classes.len()];
    for (i, a) in d1.classes.iter().enumerate() {
        for (j, b) in d2.classes.iter().enumerate() {
            if used[j] || a.module.dim() != b.module.dim() || a.end_dim != b.end_dim {
                continue;
            }
            if let Some(theta) = indecomposable_isomorphism(&a.module, &b.module)? {
                if a.multiplicity != b.multiplicity {
                    return Ok(Matching::Failed(format!(
                        "class {i} has multiplicity {} but its match has {}",
                        a.multiplicity, b.multiplicity
                    )));
                }
                used[j] = true;
                class_map[i] = Some((j, theta));
                break;
            }
        }
        if class_map[i].is_none() {
            return Ok(Matching::Failed(format!(
                "class {i} (dim {}) has no isomorphic partner",
                a.module.dim()
            )));
        }
    }
    let offsets: Vec<usize> = d2
        .classes
        .iter()
        .scan(0, |acc, c| {
            let o = *acc;
            *acc += c.multiplicity;
            Some(o)
        })
        .collect();
    let mut permutation = Vec::new();
    let mut isomorphisms = Vec::new();
    for (c, k) in d1.instances() {
        let (j, theta) = class_map[c].as_ref().unwrap();
        permutation.push(offsets[*j] + k);
        isomorphisms.push(theta.clone());
    }
    Ok(Matching::Matched {
        permutation,
        isomorphisms,
    })
}
