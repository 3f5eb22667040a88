use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::radical::semisimple_quotient;
use super::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{factor_poly, vector_minimal_polynomial, Matrix, Poly, Subspace};

/// Attempts made by the randomized matrix-ring splitter before giving up.
pub const SPLIT_ATTEMPTS: usize = 64;

/// Evidence for the outcome of [`is_local`]. Elements live in the original algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalityCertificate {
    /// `A/J` is commutative and its Frobenius-fixed space is one-dimensional,
    /// so `A/J` is a field of this dimension over `F_p`.
    FrobeniusFixedLine {
        quotient_dim: usize,
    },
    NontrivialIdempotent(Vec<u64>),
    /// Two elements whose images in `A/J` do not commute; finite division rings are commutative.
    NonCommutingPair(Vec<u64>, Vec<u64>),
    /// The zero ring is not local.
    ZeroRing,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Locality {
    pub local: bool,
    pub certificate: LocalityCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdempotentSplit {
    Local(LocalityCertificate),
    Idempotent(Vec<u64>),
}

/// Fixed space of `x -> x^p` restricted to a subspace `z` of a commutative
/// subalgebra (the whole algebra or its center). Returned inside `F_p^dim`.
pub fn frobenius_fixed_space(b: &Algebra, z: &Subspace) -> Subspace {
    let p = b.modulus();
    let k = z.dim();
    let mut frob_minus_id = Matrix::zeros(p, k, k);
    for i in 0..k {
        let zi = z.basis().row(i);
        let image = b.pow(zi, p.get());
        let coords = z
            .coordinates(&image)
            .expect("Frobenius preserves a commutative subalgebra");
        for (j, &c) in coords.iter().enumerate() {
            let id = u64::from(i == j);
            frob_minus_id.set(i, j, p.sub(c, id));
        }
    }
    let fixed_coords = frob_minus_id.left_kernel_basis();
    Subspace::row_span(&fixed_coords.mul(z.basis()))
}

/// Decides whether `A/J(A)` is a division ring.
pub fn is_local(a: &Algebra) -> Result<Locality> {
    if a.dim() == 0 {
        return Ok(Locality {
            local: false,
            certificate: LocalityCertificate::ZeroRing,
        });
    }
    let q = semisimple_quotient(a)?;
    let b = &q.algebra;
    if let Some((i, j)) = b.noncommuting_basis_pair() {
        return Ok(Locality {
            local: false,
            certificate: LocalityCertificate::NonCommutingPair(
                q.lift(&b.basis_element(i), a.dim()),
                q.lift(&b.basis_element(j), a.dim()),
            ),
        });
    }
    let whole = Subspace::full(b.modulus(), b.dim());
    let fixed = frobenius_fixed_space(b, &whole);
    if fixed.dim() == 1 {
        return Ok(Locality {
            local: true,
            certificate: LocalityCertificate::FrobeniusFixedLine {
                quotient_dim: b.dim(),
            },
        });
    }
    let e = central_split(b, &fixed)
        .ok_or_else(|| Error::Internal("fixed space has no split element".into()))?;
    let e = lift_idempotent(a, &q.lift(&e, a.dim()))?;
    Ok(Locality {
        local: false,
        certificate: LocalityCertificate::NontrivialIdempotent(e),
    })
}

/// Finds a nontrivial idempotent of `a`, or certifies that `a` is local.
///
/// A nontrivial Frobenius-fixed central element of `A/J` gives a central
/// idempotent by Lagrange interpolation over its (distinct, rational) eigenvalues.
/// If the center of `A/J` is a field but `A/J` is not commutative, `A/J` is a
/// matrix ring and random elements are sampled until one has a minimal
/// polynomial with two coprime factors. Either idempotent is lifted to `A`.
pub fn primitive_idempotent_split(a: &Algebra, seed: u64) -> Result<IdempotentSplit> {
    if a.dim() == 0 {
        return Err(Error::Internal(
            "the zero algebra has no idempotent split".into(),
        ));
    }
    let q = semisimple_quotient(a)?;
    let b = &q.algebra;
    let center = b.center();
    let fixed = frobenius_fixed_space(b, &center);
    let commutative = center.dim() == b.dim();
    if fixed.dim() > 1 {
        let e = central_split(b, &fixed)
            .ok_or_else(|| Error::Internal("fixed space has no split element".into()))?;
        return Ok(IdempotentSplit::Idempotent(lift_idempotent(
            a,
            &q.lift(&e, a.dim()),
        )?));
    }
    if commutative {
        return Ok(IdempotentSplit::Local(
            LocalityCertificate::FrobeniusFixedLine {
                quotient_dim: b.dim(),
            },
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SPLIT_ATTEMPTS {
        let x: Vec<u64> = (0..b.dim())
            .map(|_| rng.gen_range(0..b.modulus().get()))
            .collect();
        if let Some(e) = coprime_split(b, &x)? {
            return Ok(IdempotentSplit::Idempotent(lift_idempotent(
                a,
                &q.lift(&e, a.dim()),
            )?));
        }
    }
    Err(Error::RetryExhausted(SPLIT_ATTEMPTS))
}

fn element_minimal_polynomial(b: &Algebra, x: &[u64]) -> Poly {
    vector_minimal_polynomial(&b.right_multiplication(x), b.one())
}

/// Idempotent from a non-scalar element of the Frobenius-fixed part of the center.
fn central_split(b: &Algebra, fixed: &Subspace) -> Option<Vec<u64>> {
    let p = b.modulus();
    let z = (0..fixed.dim())
        .map(|i| fixed.basis().row(i).to_vec())
        .find(|z| element_minimal_polynomial(b, z).degree() > Some(1))?;
    let f = element_minimal_polynomial(b, &z);
    // z^p = z, so f divides x^p - x and all roots are distinct elements of F_p.
    let mut roots: Vec<u64> = factor_poly(&f)
        .ok()?
        .factors
        .iter()
        .map(|(g, _)| p.neg(g.coeff(0)))
        .collect();
    roots.sort_unstable();
    let lambda = *roots.last()?;
    let mut e = b.one().to_vec();
    for &mu in roots.iter().filter(|&&mu| mu != lambda) {
        let factor = b.sub(&z, &b.scale(mu, b.one()));
        let inv = p.inv(p.sub(lambda, mu)).unwrap();
        e = b.scale(inv, &b.mul(&e, &factor));
    }
    debug_assert!(b.is_idempotent(&e));
    Some(e)
}

/// If the minimal polynomial of `x` has two distinct irreducible factors,
/// returns the CRT idempotent `s(x) g(x)` where `g` is the first primary part's
/// cofactor and `s g + t h = 1`.
fn coprime_split(b: &Algebra, x: &[u64]) -> Result<Option<Vec<u64>>> {
    let f = element_minimal_polynomial(b, x);
    let fac = factor_poly(&f)?;
    if fac.factors.len() < 2 {
        return Ok(None);
    }
    let (g0, e0) = &fac.factors[0];
    let primary = g0.pow(*e0 as u64);
    let rest = f.div_exact(&primary);
    let (gcd, s, _t) = rest.ext_gcd(&primary);
    debug_assert!(gcd.is_one());
    // s*rest = 1 mod primary and 0 mod rest.
    let e = b.eval_poly(&s.mul(&rest).rem(&f), x);
    Ok(Some(e))
}

/// Lifts an idempotent modulo `J(a)` to an idempotent of `a` by the iteration
/// `e <- 3e^2 - 2e^3`, which squares the defect ideal each step.
pub fn lift_idempotent(a: &Algebra, e: &[u64]) -> Result<Vec<u64>> {
    let index = a.radical()?.nilpotency_index;
    let cap = (usize::BITS - (index.max(1) - 1).leading_zeros()) as usize + 1;
    let p = a.modulus();
    let mut e = e.to_vec();
    for _ in 0..=cap {
        let e2 = a.mul(&e, &e);
        if e2 == e {
            return Ok(e);
        }
        let e3 = a.mul(&e2, &e);
        e = a.sub(&a.scale(3 % p.get(), &e2), &a.scale(2 % p.get(), &e3));
    }
    Err(Error::Internal(format!(
        "idempotent lifting did not converge within {cap} steps"
    )))
}
