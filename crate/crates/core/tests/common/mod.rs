//! Brute-force oracles and a small corpus for the integration tests.

#![allow(dead_code)]

use std::sync::Arc;

use krull::algebra::Algebra;
use krull::exactlin::{Matrix, Modulus, Subspace};
use krull::gallery;
use krull::module::{direct_sum, hom_space, submodule, Module};
use krull::seed::rng;

/// Every `k`-dimensional subspace of `F_p^n`, one canonical basis each.
pub fn subspaces(p: Modulus, n: usize, k: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    let mut pivots = Vec::new();
    choose(n, k, 0, &mut pivots, &mut |piv| {
        // free entries: row r, column c > piv[r] with c not a pivot
        let slots: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| {
                ((piv[r] + 1)..n)
                    .filter(|c| !piv.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let total = (p.get() as usize).pow(slots.len() as u32);
        for code in 0..total {
            let mut m = Matrix::zeros(p, k, n);
            for (r, &c) in piv.iter().enumerate() {
                m.set(r, c, 1);
            }
            let mut x = code;
            for &(r, c) in &slots {
                m.set(r, c, (x % p.get() as usize) as u64);
                x /= p.get() as usize;
            }
            out.push(Subspace::row_span(&m));
        }
    });
    out
}

fn choose(n: usize, k: usize, start: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if acc.len() == k {
        f(acc);
        return;
    }
    for i in start..n {
        acc.push(i);
        choose(n, k, i + 1, acc, f);
        acc.pop();
    }
}

pub fn is_submodule(m: &Module, u: &Subspace) -> bool {
    m.actions()
        .iter()
        .all(|a| u.contains_rows(&u.basis().mul(a)))
}

/// Number of idempotents of `End(m)` other than `0` and `1`; `None` above `limit` elements.
pub fn nontrivial_idempotents(m: &Module, limit: u64) -> Option<usize> {
    let basis = hom_space(m, m).unwrap().basis();
    let p = m.modulus().get();
    let size =
        (0..basis.len()).try_fold(1u64, |acc, _| acc.checked_mul(p).filter(|&s| s <= limit))?;
    let n = m.dim();
    let mut count = 0;
    let mut coeffs = vec![0u64; basis.len()];
    for _ in 0..size {
        let mut e = Matrix::zeros(m.modulus(), n, n);
        for (c, b) in coeffs.iter().zip(&basis) {
            e = e.add_scaled(*c, b);
        }
        if e.mul(&e) == e && !e.is_zero() && !e.is_identity() {
            count += 1;
        }
        for c in coeffs.iter_mut() {
            *c += 1;
            if *c < p {
                break;
            }
            *c = 0;
        }
    }
    Some(count)
}

pub struct Entry {
    pub name: &'static str,
    pub algebra: Arc<Algebra>,
    pub modules: Vec<Module>,
}

/// Small fields and algebras, so that enumeration oracles stay cheap.
pub fn small_corpus() -> Vec<Entry> {
    let mut out = Vec::new();
    let a2 = gallery::linear_quiver(2, 5).unwrap();
    let p1 = gallery::a2_p1(&a2);
    let [s1, s2] = gallery::a2_simples(&a2);
    out.push(Entry {
        name: "A2/F5",
        modules: vec![
            Module::regular(a2.clone()),
            p1.clone(),
            direct_sum(&a2, &[s1.clone(), s2]).unwrap().module,
            direct_sum(&a2, &[p1, s1]).unwrap().module,
        ],
        algebra: a2,
    });
    let a3 = gallery::linear_quiver(3, 7).unwrap();
    out.push(Entry {
        name: "A3/F7",
        modules: vec![Module::regular(a3.clone())],
        algebra: a3,
    });
    let kxy = gallery::kxy_dual(5).unwrap();
    let p = kxy.modulus();
    let reg = Module::regular(kxy.clone());
    let y = Subspace::row_span(&Matrix::from_rows(
        p,
        4,
        &[[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    ));
    out.push(Entry {
        name: "kxy/F5",
        modules: vec![reg.clone(), submodule(&reg, &y).unwrap().0],
        algebra: kxy,
    });
    let t = gallery::truncated_polynomial(3, 5).unwrap();
    out.push(Entry {
        name: "k[x]/x^3/F5",
        modules: vec![Module::regular(t.clone())],
        algebra: t,
    });
    let ut = gallery::upper_triangular(5).unwrap();
    out.push(Entry {
        name: "T2/F5",
        modules: vec![Module::regular(ut.clone())],
        algebra: ut,
    });
    let m2 = gallery::matrix_algebra(2, 7).unwrap();
    out.push(Entry {
        name: "M2/F7",
        modules: vec![Module::regular(m2.clone())],
        algebra: m2,
    });
    let mut r = rng(31);
    for _ in 0..3 {
        let qa = gallery::random_monomial_quiver(&mut r, 5, 7).unwrap();
        let a = Arc::new(qa.algebra);
        let mut modules = vec![Module::regular(a.clone())];
        for _ in 0..2 {
            let m = gallery::random_module(&a, &mut r, 5).unwrap();
            if krull::module::end_algebra(&m).unwrap().dim() < 7 {
                modules.push(m);
            }
        }
        out.push(Entry {
            name: "random quiver/F7",
            algebra: a,
            modules,
        });
    }
    out
}
