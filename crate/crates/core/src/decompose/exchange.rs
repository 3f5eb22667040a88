use super::iso::indecomposable_isomorphism;
use super::{krull_schmidt, Decomposition};
use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::module::split_idempotent;

/// Outcome of an exchange check for `X = X' (+) X''` with `X'` the image of `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeReport {
    /// Instances of the reference decomposition (see [`Decomposition::instances`])
    /// that replace `X''`.
    pub prefix: Vec<usize>,
    /// Witness pairs realizing `X = X_{prefix} (+) X'`, with `X'` last.
    pub witnesses: Vec<(Matrix, Matrix)>,
}

/// Decomposes `X''` (the image of `1 - e`), matches its summands with a
/// sub-multiset of `d`, and checks that the matched summands together with `X'`
/// form a direct-sum decomposition of the parent.
pub fn verify_exchange(d: &Decomposition, e: &Matrix, seed: u64) -> Result<Option<ExchangeReport>> {
    let x = &d.parent;
    let p = x.modulus();
    let n = x.dim();
    let prime = split_idempotent(x, e)?;
    let second = split_idempotent(x, &Matrix::identity(p, n).sub(e))?;
    let dz = krull_schmidt(&second.module, seed)?;

    let instances = d.instances();
    let mut taken = vec![false; instances.len()];
    let mut prefix = Vec::new();
    let mut witnesses = Vec::new();
    for z in &dz.classes {
        let Some((c, theta)) = d
            .classes
            .iter()
            .enumerate()
            .find_map(
                |(c, xc)| match indecomposable_isomorphism(&xc.module, &z.module) {
                    Ok(Some(t)) => Some(Ok((c, t))),
                    Ok(None) => None,
                    Err(err) => Some(Err(err)),
                },
            )
            .transpose()?
        else {
            return Ok(None);
        };
        let theta_inv = theta
            .inverse()
            .ok_or_else(|| Error::Internal("isomorphism witness is singular".into()))?;
        for (iota_z, pi_z) in &z.witnesses {
            let Some(slot) = (0..instances.len()).find(|&i| !taken[i] && instances[i].0 == c)
            else {
                return Ok(None);
            };
            taken[slot] = true;
            prefix.push(slot);
            witnesses.push((
                theta.mul(iota_z).mul(&second.iota),
                second.pi.mul(pi_z).mul(&theta_inv),
            ));
        }
    }
    witnesses.push((prime.iota.clone(), prime.pi.clone()));

    let mut total = Matrix::zeros(p, n, n);
    for (k, (iota, pi)) in witnesses.iter().enumerate() {
        let summand = if k < prefix.len() {
            &d.classes[instances[prefix[k]].0].module
        } else {
            &prime.module
        };
        if !summand.is_homomorphism(x, iota)
            || !x.is_homomorphism(summand, pi)
            || !iota.mul(pi).is_identity()
        {
            return Ok(None);
        }
        total = total.add(&pi.mul(iota));
    }
    if !total.is_identity() {
        return Ok(None);
    }
    Ok(Some(ExchangeReport { prefix, witnesses }))
}
