//! Property suites run by `krull verify` against every module of an instance.

use krull::algebra::{is_local, semisimple_quotient, Algebra};
use krull::decompose::{
    fitting_split, indecomposable_isomorphism, krull_schmidt, match_decompositions, primary_split,
    verify_exchange, Matching,
};
use krull::exactlin::{Matrix, Subspace};
use krull::gallery::random_combination;
use krull::module::{
    end_algebra, hom_space, radical_of_module, split_idempotent, submodule, Module,
};
use krull::projcover::{
    cover_uniqueness_check, is_essential_epi, is_minimal_presentation, projective_cover_with,
    projective_indecomposables, projrad_equivalence_check, rad_hom, radical_by_simple_quotients,
    ProjectiveIndecomposable,
};
use krull::seed::{child_seed, rng};
use krull::Error as EngineError;
use rand::Rng;

use crate::error::CliError;
use crate::instance::Instance;
use crate::report::{PropertyReport, VerifyReport};
use crate::Suite;

const UNIT_SAMPLES: usize = 100;
const ENDOMORPHISM_SAMPLES: usize = 10;
const IDEMPOTENT_SAMPLES: usize = 3;
const PROCOV_SAMPLES: usize = 20;
const PROJRAD_SAMPLES: usize = 5;

struct Prop {
    name: &'static str,
    checked: usize,
    skipped: usize,
    failure: Option<String>,
}

impl Prop {
    /// Runs one item; items needing `p > dim End` beyond the field size are skipped.
    fn item(&mut self, f: impl FnOnce(&mut Prop) -> krull::Result<()>) -> krull::Result<()> {
        match f(self) {
            Err(EngineError::ModulusTooSmall { .. }) => {
                self.skipped += 1;
                Ok(())
            }
            other => other,
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }
}

/// Runs `body`; retry exhaustion propagates, any other engine error is a failure.
fn property(
    name: &'static str,
    body: impl FnOnce(&mut Prop) -> krull::Result<()>,
) -> Result<PropertyReport, CliError> {
    let mut prop = Prop {
        name,
        checked: 0,
        skipped: 0,
        failure: None,
    };
    match body(&mut prop) {
        Ok(()) => {}
        Err(e @ EngineError::RetryExhausted(_)) => return Err(CliError::Engine(e)),
        Err(EngineError::ModulusTooSmall { .. }) => prop.skipped += 1,
        Err(e) => {
            prop.failure.get_or_insert(format!("engine error: {e}"));
        }
    }
    Ok(PropertyReport {
        name: prop.name.to_string(),
        passed: prop.failure.is_none(),
        checked: prop.checked,
        skipped: prop.skipped,
        counterexample: prop.failure,
    })
}

pub fn run_suite(inst: &Instance, suite: Suite, seed: u64) -> Result<VerifyReport, CliError> {
    inst.algebra.radical()?;
    let mut properties = Vec::new();
    if matches!(suite, Suite::All | Suite::Radical) {
        properties.extend(radical_suite(inst, child_seed(seed, 0))?);
    }
    if matches!(suite, Suite::All | Suite::Fitting) {
        properties.extend(fitting_suite(inst, child_seed(seed, 1))?);
    }
    if matches!(suite, Suite::All | Suite::Uniqueness) {
        properties.extend(uniqueness_suite(inst, child_seed(seed, 2))?);
    }
    if matches!(suite, Suite::All | Suite::Covers) {
        properties.extend(covers_suite(inst, child_seed(seed, 3))?);
    }
    Ok(VerifyReport {
        suite: suite.name().to_string(),
        passed: properties.iter().all(|p| p.passed),
        properties,
    })
}

fn random_element(a: &Algebra, r: &mut impl Rng) -> Vec<u64> {
    (0..a.dim())
        .map(|_| r.gen_range(0..a.modulus().get()))
        .collect()
}

fn random_endomorphism(m: &Module, r: &mut rand_chacha::ChaCha8Rng) -> krull::Result<Matrix> {
    let basis = hom_space(m, m)?.basis();
    Ok(random_combination(r, &basis, m.dim(), m.dim(), m.modulus()))
}

/// `sum pi_k iota_k = id` and `iota_k pi_k = id` with intertwining witnesses.
fn is_direct_sum(m: &Module, parts: &[(&Module, &Matrix, &Matrix)]) -> bool {
    let mut total = Matrix::zeros(m.modulus(), m.dim(), m.dim());
    for (s, iota, pi) in parts {
        if !s.is_homomorphism(m, iota) || !m.is_homomorphism(s, pi) || !iota.mul(pi).is_identity() {
            return false;
        }
        total = total.add(&pi.mul(iota));
    }
    total.is_identity()
}

fn radical_suite(inst: &Instance, seed: u64) -> Result<Vec<PropertyReport>, CliError> {
    let a = &inst.algebra;
    let p = a.modulus();
    Ok(vec![
        property("radical.nilpotent", |prop| {
            let j = a.radical()?;
            let mut power = j.basis.clone();
            let mut index = 1;
            while !power.is_zero() && index <= a.dim() {
                power = a.product_space(&power, &j.basis);
                index += 1;
            }
            prop.check(
                power.is_zero() && index == j.nilpotency_index && index <= a.dim().max(1),
                || {
                    format!(
                        "J^{index} has dim {} (recorded index {})",
                        power.dim(),
                        j.nilpotency_index
                    )
                },
            );
            Ok(())
        })?,
        property("radical.quotient_semisimple", |prop| {
            let q = semisimple_quotient(a)?;
            let b = &q.algebra;
            let fresh = Algebra::from_structure_constants(
                p,
                b.dim(),
                b.table().to_vec(),
                b.one().to_vec(),
            )?;
            let dim = fresh.radical()?.dim();
            prop.check(dim == 0, || format!("J(A/J) has dim {dim}"));
            Ok(())
        })?,
        property("radical.opposite", |prop| {
            let op = a.opposite();
            let same = op.radical()?.basis == a.radical()?.basis;
            prop.check(same, || "J(A^op) differs from J(A)".into());
            Ok(())
        })?,
        property("radical.unit_criterion", |prop| {
            let j = a.radical()?;
            let mut r = rng(seed);
            for _ in 0..UNIT_SAMPLES {
                let coeffs: Vec<u64> = (0..j.dim()).map(|_| r.gen_range(0..p.get())).collect();
                let x = Matrix::row_vector(p, &coeffs)
                    .mul(j.basis.basis())
                    .row(0)
                    .to_vec();
                let (y, y2) = (random_element(a, &mut r), random_element(a, &mut r));
                let z = a.sub(a.one(), &a.mul(&a.mul(&y2, &x), &y));
                prop.check(a.is_unit(&z), || {
                    format!("1 - y'xy not a unit for x = {x:?}, y = {y:?}, y' = {y2:?}")
                });
            }
            Ok(())
        })?,
        property("radical.nakayama", |prop| {
            let simples: Vec<Module> = projective_indecomposables(a, seed)?
                .into_iter()
                .map(|p| p.top.module)
                .collect();
            for (name, m) in &inst.modules {
                let rad = radical_of_module(m)?;
                let by_maps = radical_by_simple_quotients(m, &simples)?;
                prop.check(rad == by_maps, || {
                    format!("{name}: M.J differs from the intersection of maximal submodules")
                });
                prop.check(m.is_zero() || rad.dim() < m.dim(), || {
                    format!("{name}: M.J = M for nonzero M")
                });
            }
            Ok(())
        })?,
    ])
}

fn fitting_suite(inst: &Instance, seed: u64) -> Result<Vec<PropertyReport>, CliError> {
    Ok(vec![
        property("fitting.identity", |prop| {
            for (k, (name, m)) in inst.modules.iter().enumerate() {
                let mut r = rng(child_seed(seed, k as u64));
                for _ in 0..ENDOMORPHISM_SAMPLES {
                    let phi = random_endomorphism(m, &mut r)?;
                    let f = fitting_split(m, &phi)?;
                    let im = Subspace::row_span(&f.image.iota);
                    let ker = Subspace::row_span(&f.kernel.iota);
                    let ok = im.dim() + ker.dim() == m.dim()
                        && im.intersection(&ker).is_zero()
                        && is_direct_sum(
                            m,
                            &[
                                (&f.image.module, &f.image.iota, &f.image.pi),
                                (&f.kernel.module, &f.kernel.iota, &f.kernel.pi),
                            ],
                        );
                    prop.check(ok, || {
                        format!("{name}: Fitting split fails for phi = {phi:?}")
                    });
                }
            }
            Ok(())
        })?,
        property("fitting.primary", |prop| {
            for (k, (name, m)) in inst.modules.iter().enumerate() {
                let mut r = rng(child_seed(seed, 1000 + k as u64));
                for _ in 0..ENDOMORPHISM_SAMPLES {
                    let phi = random_endomorphism(m, &mut r)?;
                    let parts = primary_split(m, &phi)?;
                    let refs: Vec<_> = parts
                        .iter()
                        .map(|c| (&c.summand.module, &c.summand.iota, &c.summand.pi))
                        .collect();
                    prop.check(m.is_zero() || is_direct_sum(m, &refs), || {
                        format!("{name}: primary split fails for phi = {phi:?}")
                    });
                }
            }
            Ok(())
        })?,
    ])
}

fn uniqueness_suite(inst: &Instance, seed: u64) -> Result<Vec<PropertyReport>, CliError> {
    let mut decomps = Vec::new();
    for (k, (name, m)) in inst.modules.iter().enumerate() {
        let s = child_seed(seed, k as u64);
        let d = match krull_schmidt(m, s) {
            Err(e @ EngineError::RetryExhausted(_)) => return Err(e.into()),
            d => d,
        };
        decomps.push((name, m, s, d));
    }
    Ok(vec![
        property("decompose.witnesses", |prop| {
            for (name, _, _, d) in &decomps {
                prop.item(|prop| {
                    let res = d.clone()?.verify();
                    prop.check(res.is_ok(), || format!("{name}: {}", res.unwrap_err()));
                    Ok(())
                })?;
            }
            Ok(())
        })?,
        property("decompose.local_endomorphisms", |prop| {
            for (name, _, _, d) in &decomps {
                prop.item(|prop| {
                    for class in &d.clone()?.classes {
                        let end = end_algebra(&class.module)?;
                        prop.check(is_local(&end.algebra)?.local, || {
                            format!(
                                "{name}: summand of dim {} has non-local End",
                                class.module.dim()
                            )
                        });
                    }
                    Ok(())
                })?;
            }
            Ok(())
        })?,
        property("decompose.classes_distinct", |prop| {
            for (name, _, _, d) in &decomps {
                prop.item(|prop| {
                    let d = d.clone()?;
                    for (i, x) in d.classes.iter().enumerate() {
                        for y in &d.classes[i + 1..] {
                            let iso = indecomposable_isomorphism(&x.module, &y.module)?;
                            prop.check(iso.is_none(), || {
                                format!("{name}: two classes are isomorphic")
                            });
                        }
                    }
                    Ok(())
                })?;
            }
            Ok(())
        })?,
        property("decompose.uniqueness", |prop| {
            for (name, m, s, d) in &decomps {
                prop.item(|prop| {
                    let d = d.clone()?;
                    let other = krull_schmidt(m, child_seed(*s, 1))?;
                    let matched = match_decompositions(&d, &other)?;
                    let ok = matches!(matched, Matching::Matched { .. })
                        && d.dimension_profile() == other.dimension_profile();
                    prop.check(ok, || {
                        format!("{name}: decompositions under two seeds differ: {matched:?}")
                    });
                    Ok(())
                })?;
            }
            Ok(())
        })?,
        property("decompose.exchange", |prop| {
            for (name, m, s, d) in &decomps {
                prop.item(|prop| {
                    let d = d.clone()?;
                    let mut r = rng(child_seed(*s, 2));
                    for k in 0..IDEMPOTENT_SAMPLES {
                        let phi = random_endomorphism(m, &mut r)?;
                        let f = fitting_split(m, &phi)?;
                        let e = f.image.pi.mul(&f.image.iota);
                        let split = split_idempotent(m, &e)?;
                        prop.check(split.module.dim() == e.rank(), || {
                            format!("{name}: idempotent does not split")
                        });
                        let report = verify_exchange(&d, &e, child_seed(*s, 10 + k as u64))?;
                        prop.check(report.is_some(), || {
                            format!("{name}: exchange fails for e = {e:?}")
                        });
                    }
                    Ok(())
                })?;
            }
            Ok(())
        })?,
    ])
}

fn covers_suite(inst: &Instance, seed: u64) -> Result<Vec<PropertyReport>, CliError> {
    let a = &inst.algebra;
    let p = a.modulus();
    let projectives = projective_indecomposables(a, child_seed(seed, 0))?;
    let other_projectives = projective_indecomposables(a, child_seed(seed, 1))?;
    let mut covers = Vec::new();
    for (k, (name, m)) in inst.modules.iter().enumerate() {
        let c = projective_cover_with(m, &projectives, child_seed(seed, 100 + k as u64));
        covers.push((name, m, c));
    }
    Ok(vec![
        property("covers.tops_simple", |prop| {
            for (i, pi) in projectives.iter().enumerate() {
                let end = end_algebra(&pi.module)?;
                prop.check(is_local(&end.algebra)?.local, || {
                    format!("projective {i} has non-local End")
                });
                let top_end = end_algebra(&pi.top.module)?;
                let ok = is_local(&top_end.algebra)?.local && top_end.algebra.radical()?.dim() == 0;
                prop.check(ok, || format!("top of projective {i} is not simple"));
                for (j, pj) in projectives.iter().enumerate().skip(i + 1) {
                    let iso = indecomposable_isomorphism(&pi.top.module, &pj.top.module)?;
                    prop.check(iso.is_none(), || {
                        format!("simples {i} and {j} are isomorphic")
                    });
                }
            }
            Ok(())
        })?,
        property("covers.essential", |prop| {
            for (name, m, c) in &covers {
                prop.item(|prop| {
                    let c = c.clone()?;
                    let ok = c.certificate.check(&c.kernel_basis)
                        && is_essential_epi(&c.epi, &c.cover, m)?;
                    prop.check(ok, || format!("{name}: cover is not essential"));
                    Ok(())
                })?;
            }
            for (i, pi) in projectives.iter().enumerate() {
                prop.item(|prop| {
                    let c = projective_cover_with(&pi.top.module, &projectives, child_seed(seed, 200 + i as u64))?;
                    let local = is_local(&end_algebra(&c.cover)?.algebra)?.local;
                    prop.check(local && is_essential_epi(&c.epi, &c.cover, &pi.top.module)?, || {
                        format!("cover of simple {i} is not an essential epi from a local projective")
                    });
                    Ok(())
                })?;
            }
            Ok(())
        })?,
        property("covers.uniqueness", |prop| {
            for (k, (name, m, c)) in covers.iter().enumerate() {
                prop.item(|prop| {
                    let c = c.clone()?;
                    let c2 = projective_cover_with(
                        m,
                        &other_projectives,
                        child_seed(seed, 300 + k as u64),
                    )?;
                    let alpha = cover_uniqueness_check(&c, &c2);
                    prop.check(alpha.is_ok(), || format!("{name}: {}", alpha.unwrap_err()));
                    Ok(())
                })?;
            }
            Ok(())
        })?,
        property("covers.endomorphisms_over_epi", |prop| {
            for (k, (name, _, c)) in covers.iter().enumerate() {
                let Ok(c) = c else {
                    prop.skipped += 1;
                    continue;
                };
                let basis = hom_space(&c.cover, &c.cover)?.basis();
                let cols = c.epi.rows() * c.epi.cols();
                let mut data = Vec::new();
                for b in &basis {
                    data.extend(b.mul(&c.epi).flatten());
                }
                let system = Matrix::from_vec(p, basis.len(), cols, data);
                let kernel = system.left_kernel_basis();
                let mut r = rng(child_seed(seed, 400 + k as u64));
                for _ in 0..PROCOV_SAMPLES {
                    let coeffs: Vec<u64> = (0..kernel.rows())
                        .map(|_| r.gen_range(0..p.get()))
                        .collect();
                    let v = Matrix::row_vector(p, &coeffs).mul(&kernel);
                    let mut alpha = Matrix::identity(p, c.cover.dim());
                    for (i, b) in basis.iter().enumerate() {
                        alpha = alpha.add_scaled(v.get(0, i), b);
                    }
                    let ok = alpha.mul(&c.epi) == c.epi && alpha.is_invertible();
                    prop.check(ok, || {
                        format!("{name}: alpha with alpha.epi = epi is singular: {alpha:?}")
                    });
                }
            }
            Ok(())
        })?,
        property("covers.projrad", |prop| {
            for (name, mor) in &inst.morphisms {
                let x = inst.modules.get(&mor.source).expect("validated on load");
                let y = inst.modules.get(&mor.target).expect("validated on load");
                prop.item(|prop| {
                    let out = projrad_equivalence_check(&mor.matrix, x, y)?;
                    if let Some([im, rad]) = mor.expect_projrad {
                        prop.check(
                            out.image_in_radical == im && out.in_radical_hom == rad,
                            || {
                                format!(
                                    "{name}: expected ({im}, {rad}), got ({}, {})",
                                    out.image_in_radical, out.in_radical_hom
                                )
                            },
                        );
                    }
                    if is_projective(y, &projectives, seed)? {
                        prop.check(out.image_in_radical == out.in_radical_hom, || {
                            format!(
                                "{name}: projective target but ({}, {})",
                                out.image_in_radical, out.in_radical_hom
                            )
                        });
                    }
                    Ok(())
                })?;
            }
            let mut r = rng(child_seed(seed, 500));
            for (name, x) in &inst.modules {
                for proj in &projectives {
                    prop.item(|prop| {
                        let basis = hom_space(x, &proj.module)?.basis();
                        for _ in 0..PROJRAD_SAMPLES {
                            let phi =
                                random_combination(&mut r, &basis, x.dim(), proj.module.dim(), p);
                            let out = projrad_equivalence_check(&phi, x, &proj.module)?;
                            prop.check(out.image_in_radical == out.in_radical_hom, || {
                                format!("{name} -> projective: disagreement for phi = {phi:?}")
                            });
                        }
                        Ok(())
                    })?;
                }
            }
            Ok(())
        })?,
        property("covers.minimal_presentation", |prop| {
            for (k, (name, m, c)) in covers.iter().enumerate() {
                prop.item(|prop| {
                    let c = c.clone()?;
                    let (kernel, incl) = submodule(&c.cover, &Subspace::row_span(&c.kernel_basis))?;
                    let kc = projective_cover_with(
                        &kernel,
                        &projectives,
                        child_seed(seed, 600 + k as u64),
                    )?;
                    let phi = kc.epi.mul(&incl);
                    let out = is_minimal_presentation(&kc.cover, &c.cover, &phi, &c.epi, m)?;
                    prop.check(out.cover && out.radical_map, || {
                        format!("{name}: minimal presentation gives {out:?}")
                    });
                    Ok(())
                })?;
            }
            Ok(())
        })?,
        property("covers.radical_ideal", |prop| {
            for (name, m) in &inst.modules {
                prop.item(|prop| {
                    let r = rad_hom(m, m)?;
                    let end = end_algebra(m)?;
                    prop.check(r.coordinates == end.algebra.radical()?.basis, || {
                        format!("{name}: Rad(M, M) differs from J(End M)")
                    });
                    Ok(())
                })?;
            }
            for (i, x) in projectives.iter().enumerate() {
                for (j, y) in projectives.iter().enumerate() {
                    let r = rad_hom(&x.module, &y.module)?;
                    if i == j {
                        let quotient = end_algebra(&x.module)?.algebra;
                        let codim = quotient.dim() - quotient.radical()?.dim();
                        prop.check(r.hom.dim() - r.dim() == codim, || {
                            format!("Rad(P{i}, P{i}) has the wrong codimension")
                        });
                    } else {
                        prop.check(r.dim() == r.hom.dim(), || {
                            format!("Rad(P{i}, P{j}) is not all of Hom")
                        });
                    }
                }
            }
            Ok(())
        })?,
    ])
}

fn is_projective(
    m: &Module,
    projectives: &[ProjectiveIndecomposable],
    seed: u64,
) -> krull::Result<bool> {
    Ok(projective_cover_with(m, projectives, seed)?
        .kernel_basis
        .rows()
        == 0)
}
