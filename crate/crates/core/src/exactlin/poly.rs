use std::cmp::Ordering;
use std::fmt;

use super::field::Modulus;
use super::matrix::Matrix;

/// Univariate polynomial over `F_p`, coefficients stored lowest degree first.
/// The highest stored coefficient is nonzero; the zero polynomial stores nothing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    p: Modulus,
    coeffs: Vec<u64>,
}

impl Poly {
    pub fn new(p: Modulus, coeffs: Vec<u64>) -> Self {
        let mut poly = Poly {
            p,
            coeffs: coeffs.into_iter().map(|c| p.reduce(c)).collect(),
        };
        poly.trim();
        poly
    }

    pub fn from_signed(p: Modulus, coeffs: &[i64]) -> Self {
        Self::new(p, coeffs.iter().map(|&c| p.reduce_signed(c)).collect())
    }

    pub fn zero(p: Modulus) -> Self {
        Poly { p, coeffs: vec![] }
    }

    pub fn one(p: Modulus) -> Self {
        Self::constant(p, 1)
    }

    pub fn constant(p: Modulus, c: u64) -> Self {
        Self::new(p, vec![c])
    }

    pub fn x(p: Modulus) -> Self {
        Self::monomial(p, 1, 1)
    }

    pub fn monomial(p: Modulus, c: u64, degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        Self::new(p, coeffs)
    }

    /// `x - root`
    pub fn linear(p: Modulus, root: u64) -> Self {
        Self::new(p, vec![p.neg(p.reduce(root)), 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.p.inv(self.leading()).unwrap();
        self.scale(inv)
    }

    pub fn scale(&self, c: u64) -> Poly {
        Self::new(
            self.p,
            self.coeffs.iter().map(|&a| self.p.mul(a, c)).collect(),
        )
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            self.p,
            (0..n)
                .map(|i| self.p.add(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            self.p,
            (0..n)
                .map(|i| self.p.sub(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = self.p.mul_add(out[i + j], a, b);
            }
        }
        Self::new(self.p, out)
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let p = self.p;
        let inv = p.inv(divisor.leading()).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::zero(p), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - d];
        for i in (d..rem.len()).rev() {
            let c = p.mul(rem[i], inv);
            if c == 0 {
                continue;
            }
            quot[i - d] = c;
            let nc = p.neg(c);
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[i - d + j] = p.mul_add(rem[i - d + j], nc, b);
            }
        }
        rem.truncate(d);
        (Self::new(p, quot), Self::new(p, rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` the monic gcd.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = p.inv(r0.leading()).unwrap();
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        self.mul(other).div_exact(&self.gcd(other)).monic()
    }

    pub fn derivative(&self) -> Poly {
        Self::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.p.mul(c, self.p.reduce(i as u64)))
                .collect(),
        )
    }

    pub fn pow(&self, mut exp: u64) -> Poly {
        let mut acc = Self::one(self.p);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `self^exp mod modulus`
    pub fn pow_mod(&self, mut exp: u64, modulus: &Poly) -> Poly {
        let mut acc = Self::one(self.p).rem(modulus);
        let mut base = self.rem(modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base).rem(modulus);
            }
        }
        acc
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| self.p.mul_add(c, acc, x))
    }

    /// Evaluates the polynomial at a square matrix (Horner's rule).
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        assert!(m.is_square());
        let n = m.rows();
        let mut acc = Matrix::zeros(self.p, n, n);
        let id = Matrix::identity(self.p, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(m).add_scaled(c, &id);
        }
        acc
    }

    /// Canonical total order: by degree, then coefficients from the top down.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Minimal polynomial of the row vector `v` under right multiplication by `m`:
/// the monic `f` of least degree with `v * f(m) = 0`.
pub fn vector_minimal_polynomial(m: &Matrix, v: &[u64]) -> Poly {
    let p = m.modulus();
    let n = m.rows();
    // Echelon rows with their combination coefficients in terms of v, vm, vm^2, ...
    let mut basis: Vec<(usize, Vec<u64>, Vec<u64>)> = Vec::new();
    let mut w = v.to_vec();
    for k in 0..=n {
        let mut combo = vec![0u64; k + 1];
        combo[k] = 1;
        let mut r = w.clone();
        for (pc, row, c) in &basis {
            let f = r[*pc];
            if f == 0 {
                continue;
            }
            let f = p.neg(f);
            for (x, &b) in r.iter_mut().zip(row) {
                *x = p.mul_add(*x, f, b);
            }
            for (x, &b) in combo.iter_mut().zip(c) {
                *x = p.mul_add(*x, f, b);
            }
        }
        match r.iter().position(|&x| x != 0) {
            None => return Poly::new(p, combo),
            Some(pc) => {
                let inv = p.inv(r[pc]).unwrap();
                r.iter_mut().for_each(|x| *x = p.mul(*x, inv));
                combo.iter_mut().for_each(|x| *x = p.mul(*x, inv));
                basis.push((pc, r, combo));
            }
        }
        w = m.apply(&w);
    }
    unreachable!("Krylov sequence of length n+1 must be dependent")
}

/// Monic polynomial of least degree annihilating a square matrix,
/// computed as the lcm of the minimal polynomials of the standard basis vectors.
pub fn minimal_polynomial(m: &Matrix) -> Poly {
    assert!(m.is_square(), "minimal polynomial of a non-square matrix");
    let p = m.modulus();
    let n = m.rows();
    let mut acc = Poly::one(p);
    let mut e = vec![0u64; n];
    for i in 0..n {
        e[i] = 1;
        acc = acc.lcm(&vector_minimal_polynomial(m, &e));
        e[i] = 0;
        if acc.degree() == Some(n) {
            break;
        }
    }
    acc
}

/// Characteristic polynomial `det(x I - m)` via reduction to upper Hessenberg form.
pub fn characteristic_polynomial(m: &Matrix) -> Poly {
    assert!(m.is_square());
    let p = m.modulus();
    let n = m.rows();
    let mut h: Vec<Vec<u64>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    for col in 0..n.saturating_sub(2) {
        let piv = col + 1;
        let Some(r) = (piv..n).find(|&r| h[r][col] != 0) else {
            continue;
        };
        if r != piv {
            h.swap(r, piv);
            for row in h.iter_mut() {
                row.swap(r, piv);
            }
        }
        let inv = p.inv(h[piv][col]).unwrap();
        for i in piv + 1..n {
            let t = p.mul(h[i][col], inv);
            if t == 0 {
                continue;
            }
            // row_i -= t row_piv ; col_piv += t col_i
            let nt = p.neg(t);
            #[allow(clippy::needless_range_loop)]
            for j in 0..n {
                h[i][j] = p.mul_add(h[i][j], nt, h[piv][j]);
            }
            for row in h.iter_mut() {
                row[piv] = p.mul_add(row[piv], t, row[i]);
            }
        }
    }
    // chars[k] = charpoly of the leading k x k block.
    let mut chars = vec![Poly::one(p)];
    for k in 0..n {
        let mut next = Poly::linear(p, h[k][k]).mul(&chars[k]);
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = p.mul(prod, h[i + 1][i]);
            let c = p.mul(prod, h[i][k]);
            if c != 0 {
                next = next.sub(&chars[i].scale(c));
            }
        }
        chars.push(next);
    }
    chars.pop().unwrap()
}

/// `m^n = 0` for an `n x n` matrix.
pub fn is_nilpotent(m: &Matrix) -> bool {
    assert!(m.is_square());
    m.pow(m.rows() as u64).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fp(p: u64) -> Modulus {
        Modulus::new(p).unwrap()
    }

    #[test]
    fn arithmetic() {
        let p = fp(7);
        let a = Poly::from_signed(p, &[1, 0, 1]);
        let b = Poly::from_signed(p, &[-1, 1]);
        assert_eq!(a.mul(&b).degree(), Some(3));
        let (q, r) = a.mul(&b).add(&Poly::constant(p, 3)).div_rem(&b);
        assert_eq!(q, a);
        assert_eq!(r, Poly::constant(p, 3));
        assert_eq!(a.gcd(&b), Poly::one(p));
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
        assert_eq!(format!("{}", Poly::from_signed(p, &[1, 0, 2])), "2x^2 + 1");
    }

    #[test]
    fn minimal_polynomial_examples() {
        let p = fp(7);
        assert_eq!(
            minimal_polynomial(&Matrix::identity(p, 3)),
            Poly::linear(p, 1)
        );
        let j = Matrix::from_rows(p, 2, &[[0, 1], [0, 0]]);
        assert_eq!(minimal_polynomial(&j), Poly::monomial(p, 1, 2));
        // companion matrix of x^2 + 1 (row convention: e0 -> e1, e1 -> -e0)
        let c = Matrix::from_rows(p, 2, &[[0, 1], [-1, 0]]);
        assert_eq!(minimal_polynomial(&c), Poly::from_signed(p, &[1, 0, 1]));
        assert_eq!(minimal_polynomial(&Matrix::zeros(p, 0, 0)), Poly::one(p));
    }

    #[test]
    fn nilpotency_examples() {
        let p = fp(5);
        assert!(is_nilpotent(&Matrix::from_rows(p, 2, &[[0, 1], [0, 0]])));
        assert!(!is_nilpotent(&Matrix::identity(p, 2)));
        let e = Matrix::from_rows(p, 2, &[[1, 1], [0, 0]]);
        assert_eq!(e.mul(&e), e);
        assert!(!is_nilpotent(&e));
    }

    #[test]
    fn charpoly_of_companion() {
        let p = fp(11);
        // x^3 - 2x + 5 as companion (row convention)
        let c = Matrix::from_rows(p, 3, &[[0, 1, 0], [0, 0, 1], [-5, 2, 0]]);
        assert_eq!(
            characteristic_polynomial(&c),
            Poly::from_signed(p, &[5, -2, 0, 1])
        );
    }

    fn arb_square() -> impl Strategy<Value = Matrix> {
        (prop_oneof![Just(2u64), Just(3), Just(7)], 0usize..6).prop_flat_map(|(p, n)| {
            proptest::collection::vec(0..p, n * n)
                .prop_map(move |d| Matrix::from_vec(Modulus::new(p).unwrap(), n, n, d))
        })
    }

    proptest! {
        #[test]
        fn minpoly_annihilates_and_divides_charpoly(m in arb_square()) {
            let f = minimal_polynomial(&m);
            prop_assert!(f.is_monic());
            prop_assert!(f.eval_matrix(&m).is_zero());
            let chi = characteristic_polynomial(&m);
            prop_assert_eq!(chi.degree(), Some(m.rows()));
            prop_assert!(chi.rem(&f).is_zero());
            prop_assert!(chi.eval_matrix(&m).is_zero());
            // no proper divisor of f annihilates m: check f / (irreducible factor)
            for (g, _) in super::super::factor::factor_poly(&f).unwrap().factors {
                let h = f.div_exact(&g);
                prop_assert!(!h.eval_matrix(&m).is_zero());
            }
            prop_assert_eq!(is_nilpotent(&m), f.coeffs().iter().rev().skip(1).all(|&c| c == 0));
        }
    }
}
