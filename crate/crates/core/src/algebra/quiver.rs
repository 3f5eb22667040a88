use std::collections::HashMap;

use super::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::Modulus;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub source: String,
    pub target: String,
    pub label: String,
}

/// A quiver with monomial relations. Paths are written in traversal order:
/// `[a, b]` means "first `a`, then `b`" and requires `target(a) = source(b)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QuiverPresentation {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Vec<String>>,
}

impl QuiverPresentation {
    /// Linear quiver `1 -> 2 -> ... -> n` with arrows `a1, ..., a(n-1)`.
    pub fn linear(n: usize) -> Self {
        let vertices = (1..=n).map(|i| i.to_string()).collect();
        let arrows = (1..n)
            .map(|i| Arrow {
                source: i.to_string(),
                target: (i + 1).to_string(),
                label: format!("a{i}"),
            })
            .collect();
        QuiverPresentation {
            vertices,
            arrows,
            relations: vec![],
        }
    }
}

/// A basis path: the trivial path at `start` when `arrows` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub start: usize,
    pub end: usize,
    pub arrows: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct QuiverAlgebra {
    pub algebra: Algebra,
    pub presentation: QuiverPresentation,
    /// Basis in order: trivial paths by vertex, then by length, then lexicographically by arrow index.
    pub paths: Vec<Path>,
}

impl QuiverAlgebra {
    pub fn vertex_count(&self) -> usize {
        self.presentation.vertices.len()
    }

    /// Basis index of the trivial path `e_v`.
    pub fn vertex_idempotent(&self, v: usize) -> usize {
        v
    }

    pub fn label(&self, basis_index: usize) -> String {
        let path = &self.paths[basis_index];
        if path.arrows.is_empty() {
            format!("e{}", self.presentation.vertices[path.start])
        } else {
            path.arrows
                .iter()
                .map(|&a| self.presentation.arrows[a].label.as_str())
                .collect::<Vec<_>>()
                .join(".")
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.paths.len()).map(|i| self.label(i)).collect()
    }

    /// Basis index of an arrow.
    pub fn arrow_index(&self, arrow: usize) -> usize {
        self.paths
            .iter()
            .position(|p| p.arrows == [arrow])
            .expect("every arrow is a basis path")
    }
}

const MAX_PATHS: usize = 100_000;

pub fn algebra_from_quiver(q: &QuiverPresentation, p: Modulus) -> Result<QuiverAlgebra> {
    let nv = q.vertices.len();
    let mut vertex_index = HashMap::new();
    for (i, v) in q.vertices.iter().enumerate() {
        if vertex_index.insert(v.as_str(), i).is_some() {
            return Err(Error::InvalidQuiver(format!("duplicate vertex {v:?}")));
        }
    }
    if nv == 0 {
        return Err(Error::InvalidQuiver("quiver has no vertices".into()));
    }
    let mut arrow_index = HashMap::new();
    let mut ends = Vec::with_capacity(q.arrows.len());
    for (i, a) in q.arrows.iter().enumerate() {
        let lookup = |v: &str| {
            vertex_index.get(v).copied().ok_or_else(|| {
                Error::InvalidQuiver(format!("arrow {:?} uses unknown vertex {v:?}", a.label))
            })
        };
        ends.push((lookup(&a.source)?, lookup(&a.target)?));
        if arrow_index.insert(a.label.as_str(), i).is_some() {
            return Err(Error::InvalidQuiver(format!(
                "duplicate arrow label {:?}",
                a.label
            )));
        }
    }
    let mut relations: Vec<Vec<usize>> = Vec::new();
    for r in &q.relations {
        if r.len() < 2 {
            return Err(Error::InvalidQuiver(format!(
                "relation {r:?} has length < 2"
            )));
        }
        let idx: Vec<usize> = r
            .iter()
            .map(|l| {
                arrow_index.get(l.as_str()).copied().ok_or_else(|| {
                    Error::InvalidQuiver(format!("relation uses unknown arrow {l:?}"))
                })
            })
            .collect::<Result<_>>()?;
        if idx.windows(2).any(|w| ends[w[0]].1 != ends[w[1]].0) {
            return Err(Error::InvalidQuiver(format!(
                "relation {r:?} is not a composable path"
            )));
        }
        relations.push(idx);
    }
    // Survival of a path depends only on its last (window) arrows.
    let window = relations.iter().map(|r| r.len()).max().unwrap_or(1) - 1;
    let survives_suffix = |arrows: &[usize]| {
        !relations
            .iter()
            .any(|r| arrows.len() >= r.len() && arrows[arrows.len() - r.len()..] == r[..])
    };

    let mut paths: Vec<Path> = (0..nv)
        .map(|v| Path {
            start: v,
            end: v,
            arrows: vec![],
        })
        .collect();
    let mut frontier: Vec<Path> = paths.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for path in &frontier {
            for (ai, &(s, t)) in ends.iter().enumerate() {
                if s != path.end {
                    continue;
                }
                let mut arrows = path.arrows.clone();
                arrows.push(ai);
                if !survives_suffix(&arrows) {
                    continue;
                }
                let extended = Path {
                    start: path.start,
                    end: t,
                    arrows,
                };
                if let Some(pumped) = pumpable(&extended, &ends, window) {
                    let labels: Vec<&str> =
                        pumped.iter().map(|&a| q.arrows[a].label.as_str()).collect();
                    return Err(Error::InfiniteQuiver(labels.join(".")));
                }
                next.push(extended);
            }
        }
        paths.extend(next.iter().cloned());
        if paths.len() > MAX_PATHS {
            return Err(Error::InvalidQuiver(format!(
                "more than {MAX_PATHS} surviving paths"
            )));
        }
        frontier = next;
    }

    let index: HashMap<(usize, &[usize]), usize> = paths
        .iter()
        .enumerate()
        .map(|(i, path)| ((path.start, path.arrows.as_slice()), i))
        .collect();
    let n = paths.len();
    let mut table = vec![0u64; n * n * n];
    for (i, u) in paths.iter().enumerate() {
        for (j, v) in paths.iter().enumerate() {
            if u.end != v.start {
                continue;
            }
            let mut cat = u.arrows.clone();
            cat.extend_from_slice(&v.arrows);
            if let Some(&k) = index.get(&(u.start, cat.as_slice())) {
                table[(i * n + j) * n + k] = 1;
            }
        }
    }
    let mut one = vec![0u64; n];
    one[..nv].iter_mut().for_each(|x| *x = 1);
    Ok(QuiverAlgebra {
        algebra: Algebra::from_table_unchecked(p, n, table, one),
        presentation: q.clone(),
        paths,
    })
}

/// A surviving path is pumpable (so infinitely many paths survive) when two
/// positions, both at least `window` arrows in, end at the same vertex with
/// the same last `window` arrows: every subpath of length at most `window + 1`
/// of the repeated path already occurs in the original.
fn pumpable(path: &Path, ends: &[(usize, usize)], window: usize) -> Option<Vec<usize>> {
    let len = path.arrows.len();
    if len < window {
        return None;
    }
    let vertex_after = |i: usize| {
        if i == 0 {
            path.start
        } else {
            ends[path.arrows[i - 1]].1
        }
    };
    let state = |i: usize| (vertex_after(i), &path.arrows[i - window..i]);
    let last = state(len);
    (window..len)
        .find(|&i| state(i) == last)
        .map(|i| path.arrows[i..len].to_vec())
}
