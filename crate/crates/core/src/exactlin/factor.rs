//! Factorization over `F_p[x]`: square-free decomposition, distinct-degree
//! splitting, and Cantor-Zassenhaus equal-degree splitting.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::Modulus;
use super::poly::Poly;
use crate::error::{Error, Result};

/// `f = leading * prod(factor^multiplicity)` with monic irreducible factors in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub leading: u64,
    pub factors: Vec<(Poly, usize)>,
}

impl Factorization {
    pub fn expand(&self, p: Modulus) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(p, self.leading), |acc, (f, e)| {
                acc.mul(&f.pow(*e as u64))
            })
    }
}

const EQUAL_DEGREE_ATTEMPTS: usize = 10_000;

/// Factors `f` with a fixed internal seed, so the result is a pure function of `f`.
pub fn factor_poly(f: &Poly) -> Result<Factorization> {
    factor_poly_seeded(f, 0)
}

pub fn factor_poly_seeded(f: &Poly, seed: u64) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let p = f.modulus();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors: Vec<(Poly, usize)> = Vec::new();
    for (sqf, mult) in square_free_decomposition(&f.monic()) {
        for (block, degree) in distinct_degree(&sqf) {
            for g in equal_degree(&block, degree, &mut rng)? {
                match factors.iter_mut().find(|(h, _)| *h == g) {
                    Some((_, e)) => *e += mult,
                    None => factors.push((g, mult)),
                }
            }
        }
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    let out = Factorization {
        leading: f.leading(),
        factors,
    };
    debug_assert_eq!(out.expand(p), *f);
    Ok(out)
}

/// Square-free decomposition of a monic polynomial: pairs `(g, m)` with `g`
/// square-free, pairwise coprime, and `f = prod g^m`.
pub fn square_free_decomposition(f: &Poly) -> Vec<(Poly, usize)> {
    let p = f.modulus();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_exact(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_exact(&y);
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.div_exact(&w);
        i += 1;
    }
    if !c.is_one() {
        // c is a polynomial in x^p; its p-th root has coefficients c_{ip} since a^p = a.
        let pp = p.get() as usize;
        let root = Poly::new(p, c.coeffs().iter().step_by(pp).copied().collect());
        for (g, m) in square_free_decomposition(&root) {
            out.push((g, m * pp));
        }
    }
    out
}

/// Splits a monic square-free polynomial into products of irreducibles of equal degree.
pub fn distinct_degree(f: &Poly) -> Vec<(Poly, usize)> {
    let p = f.modulus();
    let mut out = Vec::new();
    let mut g = f.clone();
    let x = Poly::x(p);
    let mut h = x.clone();
    let mut d = 1;
    while g.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(p.get(), &g);
        let fac = g.gcd(&h.sub(&x));
        if !fac.is_one() {
            g = g.div_exact(&fac);
            h = h.rem(&g);
            out.push((fac, d));
        }
        d += 1;
    }
    if g.degree().unwrap_or(0) > 0 {
        let deg = g.degree().unwrap();
        out.push((g, deg));
    }
    out
}

/// Cantor-Zassenhaus splitting of a monic product of distinct irreducibles of degree `d`.
pub fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Poly>> {
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return Ok(vec![]);
    }
    if n == d {
        return Ok(vec![f.clone()]);
    }
    let p = f.modulus();
    for _ in 0..EQUAL_DEGREE_ATTEMPTS {
        let a = Poly::new(p, (0..n).map(|_| rng.gen_range(0..p.get())).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = f.gcd(&a);
        let candidate = if !g.is_one() {
            g
        } else {
            f.gcd(&splitting_element(&a, f, d))
        };
        let deg = candidate.degree().unwrap_or(0);
        if deg > 0 && deg < n {
            let rest = f.div_exact(&candidate);
            let mut out = equal_degree(&candidate, d, rng)?;
            out.extend(equal_degree(&rest, d, rng)?);
            return Ok(out);
        }
    }
    Err(Error::RetryExhausted(EQUAL_DEGREE_ATTEMPTS))
}

/// For odd `p`: `a^((p^d - 1)/2) - 1`, computed as the norm-like product
/// `(a * a^p * ... * a^(p^(d-1)))^((p-1)/2) - 1`. For `p = 2`: the trace
/// `a + a^2 + ... + a^(2^(d-1))`, which lands in `F_2` on every factor and splits with
/// probability 1/2 as well.
fn splitting_element(a: &Poly, f: &Poly, d: usize) -> Poly {
    let p = f.modulus();
    if p.get() == 2 {
        let mut t = a.rem(f);
        let mut acc = t.clone();
        for _ in 1..d {
            t = t.mul(&t).rem(f);
            acc = acc.add(&t);
        }
        return acc;
    }
    let mut frob = a.rem(f);
    let mut norm = frob.clone();
    for _ in 1..d {
        frob = frob.pow_mod(p.get(), f);
        norm = norm.mul(&frob).rem(f);
    }
    norm.pow_mod((p.get() - 1) / 2, f).sub(&Poly::one(p))
}

/// Rabin's irreducibility test.
pub fn is_irreducible(f: &Poly) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    let p = f.modulus();
    let f = f.monic();
    let x = Poly::x(p);
    let frob_iter = |k: usize| {
        let mut h = x.clone();
        for _ in 0..k {
            h = h.pow_mod(p.get(), &f);
        }
        h
    };
    if !frob_iter(n).sub(&x).rem(&f).is_zero() {
        return false;
    }
    prime_divisors(n)
        .into_iter()
        .all(|q| f.gcd(&frob_iter(n / q).sub(&x)).is_one())
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
