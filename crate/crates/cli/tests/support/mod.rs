//! Corpus and brute-force oracles shared by the CLI test targets.

#![allow(dead_code)]

use std::sync::Arc;

use krull::algebra::{Algebra, QuiverAlgebra};
use krull::exactlin::{Matrix, Modulus, Subspace};
use krull::gallery;
use krull::module::{direct_sum, end_algebra, hom_space, submodule, Module};
use krull::seed::rng;

pub struct CorpusAlgebra {
    pub name: String,
    pub algebra: Arc<Algebra>,
    /// Radical basis known by construction, when available.
    pub known_radical: Option<Subspace>,
    /// Simple modules built by hand.
    pub simples: Vec<Module>,
    pub modules: Vec<(String, Module)>,
}

pub fn fixtures_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

/// Vertex simples and the arrow ideal of a monomial quiver algebra.
fn quiver_data(qa: &QuiverAlgebra) -> (Vec<Module>, Subspace) {
    let a = Arc::new(qa.algebra.clone());
    let p = a.modulus();
    let simples = (0..qa.vertex_count())
        .map(|v| {
            let action = qa
                .paths
                .iter()
                .map(|path| {
                    let x = u64::from(path.arrows.is_empty() && path.start == v);
                    Matrix::from_vec(p, 1, 1, vec![x])
                })
                .collect();
            Module::new(a.clone(), 1, action).unwrap()
        })
        .collect();
    let arrows: Vec<Vec<u64>> = qa
        .paths
        .iter()
        .enumerate()
        .filter(|(_, path)| !path.arrows.is_empty())
        .map(|(i, _)| a.basis_element(i))
        .collect();
    let rows = Matrix::from_vec(p, arrows.len(), a.dim(), arrows.concat());
    (simples, Subspace::row_span(&rows))
}

fn quiver_entry(
    name: &str,
    qa: QuiverAlgebra,
    modules: impl FnOnce(&Arc<Algebra>) -> Vec<(String, Module)>,
) -> CorpusAlgebra {
    let (simples, rad) = quiver_data(&qa);
    let algebra = simples.first().map(|s| s.algebra().clone()).unwrap();
    let modules = modules(&algebra);
    CorpusAlgebra {
        name: name.into(),
        algebra,
        known_radical: Some(rad),
        simples,
        modules,
    }
}

fn end_fits(m: &Module) -> bool {
    end_algebra(m)
        .map(|e| (e.dim() as u64) < m.modulus().get())
        .unwrap_or(false)
}

/// Small algebras with hand-built simples, plus seeded random quiver algebras and modules.
pub fn corpus() -> Vec<CorpusAlgebra> {
    let mut out = Vec::new();

    let a2 = gallery::linear_quiver_algebra(2, 5).unwrap();
    out.push(quiver_entry("A2/F5", a2, |a| {
        let p1 = gallery::a2_p1(a);
        let p2 = gallery::a2_p2(a);
        let [s1, s2] = gallery::a2_simples(a);
        vec![
            ("regular".into(), Module::regular(a.clone())),
            ("P1".into(), p1.clone()),
            ("P2".into(), p2),
            ("S1".into(), s1.clone()),
            ("S1+S2".into(), direct_sum(a, &[s1, s2]).unwrap().module),
            (
                "P1+P1".into(),
                direct_sum(a, &[p1.clone(), p1]).unwrap().module,
            ),
        ]
    }));

    let mut q = krull::algebra::QuiverPresentation::linear(3);
    q.relations = vec![vec!["a1".into(), "a2".into()]];
    let a3rel = krull::algebra::algebra_from_quiver(&q, Modulus::new(11).unwrap()).unwrap();
    out.push(quiver_entry("A3/(a1a2)/F11", a3rel, |a| {
        regular_and_random(a, 11, 3)
    }));

    let a3 = gallery::linear_quiver_algebra(3, 13).unwrap();
    out.push(quiver_entry("A3/F13", a3, |a| regular_and_random(a, 13, 3)));

    let kxy = gallery::kxy_dual(5).unwrap();
    let p = kxy.modulus();
    let reg = Module::regular(kxy.clone());
    let y_span = Subspace::row_span(&Matrix::from_rows(
        p,
        4,
        &[[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    ));
    let (y, _) = submodule(&reg, &y_span).unwrap();
    let x_span = Subspace::row_span(&Matrix::from_rows(p, 3, &[[1, 0, 0], [0, 0, 1]]));
    let (x, _) = submodule(&y, &x_span).unwrap();
    let trivial_char = |alg: &Arc<Algebra>, values: &[u64]| {
        let action = values
            .iter()
            .map(|&v| Matrix::from_vec(alg.modulus(), 1, 1, vec![v]))
            .collect();
        Module::new(alg.clone(), 1, action).unwrap()
    };
    out.push(CorpusAlgebra {
        name: "k[x,y]/(x^2,y^2)/F5".into(),
        simples: vec![trivial_char(&kxy, &[1, 0, 0, 0])],
        known_radical: Some(y_span.clone()),
        algebra: kxy.clone(),
        modules: vec![("Lambda".into(), reg), ("Y".into(), y), ("X".into(), x)],
    });

    let ut = gallery::upper_triangular(5).unwrap();
    // basis e11, e12, e22
    out.push(CorpusAlgebra {
        name: "T2/F5".into(),
        simples: vec![trivial_char(&ut, &[1, 0, 0]), trivial_char(&ut, &[0, 0, 1])],
        known_radical: Some(Subspace::row_span(&Matrix::from_rows(
            ut.modulus(),
            3,
            &[[0, 1, 0]],
        ))),
        algebra: ut.clone(),
        modules: vec![("regular".into(), Module::regular(ut))],
    });

    let m2 = gallery::matrix_algebra(2, 7).unwrap();
    let p7 = m2.modulus();
    // row vectors under right multiplication by the matrix units E_ij (index 2i + j)
    let units: Vec<Matrix> = (0..4)
        .map(|k| {
            let mut e = Matrix::zeros(p7, 2, 2);
            e.set(k / 2, k % 2, 1);
            e
        })
        .collect();
    let natural = Module::new(m2.clone(), 2, units).unwrap();
    out.push(CorpusAlgebra {
        name: "M2/F7".into(),
        simples: vec![natural.clone()],
        known_radical: Some(Subspace::zero(p7, 4)),
        algebra: m2.clone(),
        modules: vec![
            ("regular".into(), Module::regular(m2)),
            ("natural".into(), natural),
        ],
    });

    let mut r = rng(2024);
    for (i, p) in [11u64, 13, 11, 13].into_iter().enumerate() {
        let qa = gallery::random_monomial_quiver(&mut r, 6, p).unwrap();
        let seed = 77 + i as u64;
        out.push(quiver_entry(&format!("random quiver {i}/F{p}"), qa, |a| {
            random_modules(a, seed, 3)
        }));
    }
    out
}

fn regular_and_random(a: &Arc<Algebra>, seed: u64, count: usize) -> Vec<(String, Module)> {
    let mut v = vec![("regular".to_string(), Module::regular(a.clone()))];
    v.extend(random_modules(a, seed, count));
    v
}

fn random_modules(a: &Arc<Algebra>, seed: u64, count: usize) -> Vec<(String, Module)> {
    let mut r = rng(seed);
    let mut v = Vec::new();
    let mut tries = 0;
    while v.len() < count && tries < 50 {
        tries += 1;
        let m = gallery::random_module(a, &mut r, 6).unwrap();
        if end_fits(&m) {
            v.push((format!("random{}", v.len()), m));
        }
    }
    v
}

/// Number of idempotents of `End(m)` other than `0` and `1`, by enumerating all of `End(m)`.
/// `None` if `End(m)` has more than `limit` elements.
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
            if *c != 0 {
                e = e.add_scaled(*c, b);
            }
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

/// Smallest `r` with `rank phi^r = rank phi^(2r)`, with `Im phi^r` and `Ker phi^r`.
pub fn fitting_oracle(phi: &Matrix) -> (usize, Subspace, Subspace) {
    let mut r = 1;
    loop {
        let pr = phi.pow(r as u64);
        if pr.rank() == pr.mul(&pr).rank() {
            return (
                r,
                Subspace::row_span(&pr),
                Subspace::row_span(&pr.left_kernel_basis()),
            );
        }
        r += 1;
    }
}

/// Checks `sum pi_k iota_k = id`, `iota_k pi_k = id` and the intertwining of every witness.
pub fn direct_sum_holds(parent: &Module, parts: &[(&Module, &Matrix, &Matrix)]) -> bool {
    let mut total = Matrix::zeros(parent.modulus(), parent.dim(), parent.dim());
    for (m, iota, pi) in parts {
        if !m.is_homomorphism(parent, iota)
            || !parent.is_homomorphism(m, pi)
            || !iota.mul(pi).is_identity()
        {
            return false;
        }
        total = total.add(&pi.mul(iota));
    }
    total.is_identity()
}

/// Whether `u` is a unit, by solving `z u = 1` through the regular representation.
pub fn is_unit_oracle(a: &Algebra, u: &[u64]) -> bool {
    let p = a.modulus();
    let n = a.dim();
    // row j of R is b_j * u; solve z R = one
    let rows: Vec<u64> = (0..n).flat_map(|j| a.mul(&a.basis_element(j), u)).collect();
    let r = Matrix::from_vec(p, n, n, rows);
    let rhs = Matrix::from_vec(p, n, 1, a.one().to_vec());
    match krull::exactlin::solve_linear(&r.transpose(), &rhs).unwrap() {
        Some(z) => {
            let z = z.transpose();
            let z = z.row(0);
            a.mul(z, u) == a.one() && a.mul(u, z) == a.one()
        }
        None => false,
    }
}
