//! Standard algebras and modules, plus seeded random generators used by the
//! verification suite and tests.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{algebra_from_quiver, Algebra, Arrow, QuiverAlgebra, QuiverPresentation};
use crate::error::Result;
use crate::exactlin::{Matrix, Modulus, Subspace};
use crate::module::{direct_sum, quotient_module, submodule, Module};

fn table(n: usize, products: &[(usize, usize, usize)]) -> Vec<u64> {
    let mut t = vec![0u64; n * n * n];
    for &(i, j, k) in products {
        t[(i * n + j) * n + k] = 1;
    }
    t
}

pub fn ground_field(p: u64) -> Result<Arc<Algebra>> {
    Ok(Arc::new(Algebra::ground_field(Modulus::new(p)?)))
}

pub fn linear_quiver_algebra(n: usize, p: u64) -> Result<QuiverAlgebra> {
    algebra_from_quiver(&QuiverPresentation::linear(n), Modulus::new(p)?)
}

/// Path algebra of `1 -> 2 -> ... -> n`.
pub fn linear_quiver(n: usize, p: u64) -> Result<Arc<Algebra>> {
    Ok(Arc::new(linear_quiver_algebra(n, p)?.algebra))
}

/// `F_p[x]/(x^n)` on the basis `1, x, ..., x^(n-1)`.
pub fn truncated_polynomial(n: usize, p: u64) -> Result<Arc<Algebra>> {
    let mut prods = vec![];
    for i in 0..n {
        for j in 0..n - i {
            prods.push((i, j, i + j));
        }
    }
    let mut one = vec![0; n];
    one[0] = 1;
    Ok(Arc::new(Algebra::from_structure_constants(
        Modulus::new(p)?,
        n,
        table(n, &prods),
        one,
    )?))
}

/// `F_p[x, y]/(x^2, y^2)` on the basis `1, x, y, xy`.
pub fn kxy_dual(p: u64) -> Result<Arc<Algebra>> {
    let prods = [
        (0, 0, 0),
        (0, 1, 1),
        (0, 2, 2),
        (0, 3, 3),
        (1, 0, 1),
        (2, 0, 2),
        (3, 0, 3),
        (1, 2, 3),
        (2, 1, 3),
    ];
    Ok(Arc::new(Algebra::from_structure_constants(
        Modulus::new(p)?,
        4,
        table(4, &prods),
        vec![1, 0, 0, 0],
    )?))
}

/// Upper-triangular 2x2 matrices on the basis `e11, e12, e22`.
pub fn upper_triangular(p: u64) -> Result<Arc<Algebra>> {
    let prods = [(0, 0, 0), (0, 1, 1), (1, 2, 1), (2, 2, 2)];
    Ok(Arc::new(Algebra::from_structure_constants(
        Modulus::new(p)?,
        3,
        table(3, &prods),
        vec![1, 0, 1],
    )?))
}

/// `F_p^k` with componentwise product.
pub fn diagonal(k: usize, p: u64) -> Result<Arc<Algebra>> {
    let prods: Vec<_> = (0..k).map(|i| (i, i, i)).collect();
    Ok(Arc::new(Algebra::from_structure_constants(
        Modulus::new(p)?,
        k,
        table(k, &prods),
        vec![1; k],
    )?))
}

/// Full matrix algebra `M_n(F_p)`; basis `e_ij` has index `n*i + j`.
pub fn matrix_algebra(n: usize, p: u64) -> Result<Arc<Algebra>> {
    let mut prods = vec![];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                prods.push((n * i + j, n * j + k, n * i + k));
            }
        }
    }
    let one = (0..n * n).map(|x| u64::from(x / n == x % n)).collect();
    Ok(Arc::new(Algebra::from_structure_constants(
        Modulus::new(p)?,
        n * n,
        table(n * n, &prods),
        one,
    )?))
}

/// The module of a quiver representation: vector spaces of the given
/// dimensions at each vertex and one matrix per arrow (`dim source x dim target`).
pub fn representation(qa: &QuiverAlgebra, dims: &[usize], maps: &[Matrix]) -> Result<Module> {
    let p = qa.algebra.modulus();
    let offsets: Vec<usize> = dims
        .iter()
        .scan(0, |acc, &d| {
            let o = *acc;
            *acc += d;
            Some(o)
        })
        .collect();
    let total: usize = dims.iter().sum();
    let action = qa
        .paths
        .iter()
        .map(|path| {
            let mut block = Matrix::identity(p, dims[path.start]);
            for &a in &path.arrows {
                block = block.mul(&maps[a]);
            }
            let mut m = Matrix::zeros(p, total, total);
            for i in 0..block.rows() {
                for j in 0..block.cols() {
                    m.set(
                        offsets[path.start] + i,
                        offsets[path.end] + j,
                        block.get(i, j),
                    );
                }
            }
            m
        })
        .collect();
    Module::new(Arc::new(qa.algebra.clone()), total, action)
}

fn a2_rep(a2: &Arc<Algebra>, dims: [usize; 2], arrow: Matrix) -> Module {
    let qa = QuiverAlgebra {
        algebra: (**a2).clone(),
        presentation: QuiverPresentation::linear(2),
        paths: linear_quiver_algebra(2, a2.modulus().get()).unwrap().paths,
    };
    let m = representation(&qa, &dims, &[arrow]).expect("valid A2 representation");
    Module::new(a2.clone(), m.dim(), m.actions().to_vec()).unwrap()
}

/// `P1 = (k -> k)` over the A2 path algebra.
pub fn a2_p1(a2: &Arc<Algebra>) -> Module {
    a2_rep(a2, [1, 1], Matrix::identity(a2.modulus(), 1))
}

/// `P2 = (0 -> k)`, which is also the simple at vertex 2.
pub fn a2_p2(a2: &Arc<Algebra>) -> Module {
    a2_rep(a2, [0, 1], Matrix::zeros(a2.modulus(), 0, 1))
}

/// `[S1, S2]`
pub fn a2_simples(a2: &Arc<Algebra>) -> [Module; 2] {
    [
        a2_rep(a2, [1, 0], Matrix::zeros(a2.modulus(), 1, 0)),
        a2_p2(a2),
    ]
}

/// A random finite-dimensional monomial quiver algebra of dimension at most `max_dim`.
pub fn random_monomial_quiver(
    rng: &mut ChaCha8Rng,
    max_dim: usize,
    p: u64,
) -> Result<QuiverAlgebra> {
    let modulus = Modulus::new(p)?;
    loop {
        let nv = rng.gen_range(1..=3usize);
        let vertices: Vec<String> = (1..=nv).map(|i| i.to_string()).collect();
        let na = rng.gen_range(0..=4usize);
        let arrows: Vec<Arrow> = (0..na)
            .map(|i| Arrow {
                source: vertices[rng.gen_range(0..nv)].clone(),
                target: vertices[rng.gen_range(0..nv)].clone(),
                label: format!("x{i}"),
            })
            .collect();
        // Forbid every composable pair with probability 1/2, and always forbid
        // squares of loops so the result stays small.
        let mut relations = vec![];
        for a in &arrows {
            for b in &arrows {
                if a.target != b.source {
                    continue;
                }
                let forced = a.label == b.label && a.source == a.target;
                if forced || rng.gen_bool(0.5) {
                    relations.push(vec![a.label.clone(), b.label.clone()]);
                }
            }
        }
        let q = QuiverPresentation {
            vertices,
            arrows,
            relations,
        };
        if let Ok(qa) = algebra_from_quiver(&q, modulus) {
            if qa.algebra.dim() <= max_dim {
                return Ok(qa);
            }
        }
    }
}

/// A random module of dimension at most `max_dim` (and at least 1): a cyclic
/// or two-generated submodule of a free module, its quotient, or a direct sum
/// of two such pieces.
pub fn random_module(
    algebra: &Arc<Algebra>,
    rng: &mut ChaCha8Rng,
    max_dim: usize,
) -> Result<Module> {
    loop {
        let m = random_piece(algebra, rng)?;
        let m = if rng.gen_bool(0.3) {
            let other = random_piece(algebra, rng)?;
            direct_sum(algebra, &[m, other])?.module
        } else {
            m
        };
        if m.dim() >= 1 && m.dim() <= max_dim {
            return Ok(m);
        }
    }
}

fn random_piece(algebra: &Arc<Algebra>, rng: &mut ChaCha8Rng) -> Result<Module> {
    let p = algebra.modulus();
    let copies = rng.gen_range(1..=2usize);
    let regular = Module::regular(algebra.clone());
    let free = direct_sum(algebra, &vec![regular; copies])?.module;
    let n = free.dim();
    let gens = rng.gen_range(1..=2usize);
    let mut data = vec![0u64; gens * n];
    for x in data.iter_mut() {
        if rng.gen_bool(0.35) {
            *x = rng.gen_range(0..p.get());
        }
    }
    let g = Matrix::from_vec(p, gens, n, data);
    let u = free.generated_submodule(&g);
    let choice = [0, 1, 2].choose(rng).copied().unwrap();
    Ok(match choice {
        0 => submodule(&free, &u)?.0,
        1 => quotient_module(&free, &u)?.module,
        _ => {
            // the submodule modulo a random cyclic submodule
            let (sub, _) = submodule(&free, &u)?;
            let k = sub.dim();
            if k == 0 {
                sub
            } else {
                let v: Vec<u64> = (0..k).map(|_| rng.gen_range(0..p.get())).collect();
                let w = sub.generated_submodule(&Matrix::row_vector(p, &v));
                let w = if w.dim() == k {
                    Subspace::zero(p, k)
                } else {
                    w
                };
                quotient_module(&sub, &w)?.module
            }
        }
    })
}

/// A uniformly random element of the span of the given matrices.
pub fn random_combination(
    rng: &mut ChaCha8Rng,
    basis: &[Matrix],
    rows: usize,
    cols: usize,
    p: Modulus,
) -> Matrix {
    let mut out = Matrix::zeros(p, rows, cols);
    for b in basis {
        out = out.add_scaled(rng.gen_range(0..p.get()), b);
    }
    out
}
