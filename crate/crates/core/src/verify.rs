//! The invariant suite behind the `verify` verb. Each check compares a main
//! code path against an independent computation or a structural identity.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bordism::{enumerate_configurations, realizable, subgraph_types, witness_parameter, Configuration};
use crate::classify::{
    classify_quiver, classify_singularities, r_plus, sigma_lambda, sigma_lambda_min, simple_exists, ParameterInput,
};
use crate::decompose::decompose;
use crate::diagrams::{AdeType, Diagram, ExtendedDiagram, Orientation, Quiver};
use crate::gaussian::GaussianRational;
use crate::oracle::{box_r_plus, quadric_roots, CrawleyBoeveyOracle};
use crate::replab::{check_complex, cohomology_dims, nu_map, sigma_map, tilde_a1_quiver, tilde_a1_simple, vertex_simple, RepPoint};
use crate::roots::{psi, psi_inverse, psi_star, sigma_set, Parameter, RootSystem};

/// Result of one check.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
    /// Wall-clock limit, if the check has one.
    pub budget: Option<f64>,
}

impl Outcome {
    pub fn within_budget(&self) -> bool {
        self.budget.is_none_or(|b| self.seconds < b)
    }
}

type Check = fn(u64) -> Result<String, String>;

const CHECKS: [(&str, Option<f64>, Check); 11] = [
    ("root counts and quadric enumeration", Some(5.0), root_counts),
    ("psi bijection between Sigma and Phi", Some(1.0), psi_bijection),
    ("tau = 0 classification", None, tau_zero),
    ("decomposition vs full subgraphs", Some(30.0), full_subgraph_oracle),
    ("Weyl invariance and dominance", None, weyl_invariance),
    ("simple modules vs Crawley-Boevey oracle", None, crawley_boevey),
    ("sum rule for singular points", None, sum_rule),
    ("R+(delta) equals Sigma", None, r_plus_sigma),
    ("homological identities", Some(5.0), homological),
    ("bordism realizability", Some(60.0), bordism),
    ("orientation independence", None, orientation_independence),
];

pub fn check_count() -> usize {
    CHECKS.len()
}

/// Runs check `id` (1-based) with a deterministic generator.
pub fn run(id: usize, seed: u64) -> Outcome {
    let (name, budget, check) = CHECKS[id - 1];
    let start = Instant::now();
    let result = check(seed);
    let seconds = start.elapsed().as_secs_f64();
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Outcome { id, name, passed, detail, seconds, budget }
}

pub fn run_all(seed: u64) -> Vec<Outcome> {
    (1..=CHECKS.len()).map(|id| run(id, seed)).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn t(s: &str) -> AdeType {
    s.parse().expect("valid type label")
}

/// Types with the expected root counts.
pub const ROOT_COUNTS: [(&str, usize); 10] = [
    ("A2", 6),
    ("A3", 12),
    ("A4", 20),
    ("A5", 30),
    ("D4", 24),
    ("D5", 40),
    ("D6", 60),
    ("E6", 72),
    ("E7", 126),
    ("E8", 240),
];

fn all_types() -> Vec<AdeType> {
    AdeType::all_up_to_rank(8)
}

/// A parameter whose coordinates are zero about half the time, so that many
/// roots are orthogonal to it, and otherwise small Gaussian rationals.
pub fn random_tau(rng: &mut impl Rng, n: usize) -> Parameter {
    let pool = ["1", "-1", "2", "-2", "1/2", "i", "1+i", "-1/3+2i", "3/2-1/2i"];
    Parameter(
        (0..n)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    GaussianRational::zero()
                } else {
                    pool[rng.gen_range(0..pool.len())].parse().expect("pool entry")
                }
            })
            .collect(),
    )
}

fn random_word(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let len = rng.gen_range(1..=12);
    (0..len).map(|_| rng.gen_range(0..n)).collect()
}

fn random_orientation(rng: &mut impl Rng, ed: &ExtendedDiagram) -> Orientation {
    let edges: usize = ed.bonds().iter().map(|b| b.multiplicity).sum();
    Orientation::Flips((0..edges).map(|_| rng.gen_bool(0.5)).collect())
}

fn root_counts(_: u64) -> Result<String, String> {
    for (label, count) in ROOT_COUNTS {
        let rs = RootSystem::generate(t(label));
        ensure(rs.roots().len() == count, || format!("{label}: {} roots", rs.roots().len()))?;
        let quadric = quadric_roots(rs.cartan());
        ensure(quadric == rs.roots(), || format!("{label}: quadric enumeration differs"))?;
    }
    Ok(format!("{} types agree set-for-set", ROOT_COUNTS.len()))
}

fn psi_bijection(_: u64) -> Result<String, String> {
    let mut total = 0;
    for (label, _) in ROOT_COUNTS {
        let ed = ExtendedDiagram::of_type(t(label));
        let sigma = sigma_set(&ed);
        let mut image: Vec<_> = sigma.iter().map(|b| psi(&ed, b).expect("length")).collect();
        image.sort();
        ensure(image == ed.roots().roots(), || format!("{label}: psi(Sigma) != Phi"))?;
        for a in ed.roots().roots() {
            let back = psi_inverse(&ed, a).ok_or_else(|| format!("{label}: no preimage"))?;
            ensure(psi(&ed, &back).expect("length") == *a, || format!("{label}: roundtrip {a:?}"))?;
        }
        total += sigma.len();
    }
    Ok(format!("{total} roots roundtrip"))
}

fn tau_zero(_: u64) -> Result<String, String> {
    for ty in all_types() {
        let ed = ExtendedDiagram::of_type(ty);
        let c = classify_singularities(&ed, &Parameter::zero(ty.rank() + 1)).map_err(|e| e.to_string())?;
        ensure(c.singular_points.len() == 1, || format!("{ty}: {} points", c.singular_points.len()))?;
        let sp = &c.singular_points[0];
        ensure(sp.adtype == ty, || format!("{ty}: got {}", sp.adtype))?;
        let recovered = ExtendedDiagram::from_quiver(&sp.slice.quiver).map_err(|e| format!("{ty}: {e}"))?;
        ensure(recovered.adtype() == ty && recovered.delta() == ed.delta(), || format!("{ty}: slice quiver"))?;
        ensure(sp.slice.bonds() == ed.bonds(), || format!("{ty}: slice bonds"))?;
        ensure(sp.slice.delta == ed.delta(), || format!("{ty}: delta' != delta"))?;
        let order: i64 = ed.delta().iter().map(|x| x * x).sum();
        let expected = match (ty.family(), ty.rank() as u64) {
            (crate::diagrams::Family::A, n) => n + 1,
            (crate::diagrams::Family::D, n) => 4 * (n - 2),
            (_, 6) => 24,
            (_, 7) => 48,
            _ => 120,
        };
        ensure(sp.mckay.order == expected && order as u64 == expected, || format!("{ty}: McKay order"))?;
    }
    Ok(format!("{} extended types", all_types().len()))
}

fn full_subgraph_oracle(_: u64) -> Result<String, String> {
    let mut cases = 0;
    for ty in all_types() {
        let d = Diagram::build(ty);
        let rs = RootSystem::generate(ty);
        let n = ty.rank();
        for mask in 0u32..1 << n {
            let tau: Vec<i64> = (0..n).map(|i| i64::from(mask >> i & 1)).collect();
            let complement: Vec<usize> = (0..n).filter(|&i| tau[i] == 0).collect();
            let got = decompose(&rs, &Parameter::from_ints(&tau)).map_err(|e| e.to_string())?.types();
            let want = subgraph_types(&d, &complement);
            ensure(got == want, || format!("{ty} tau={tau:?}: {got:?} vs {want:?}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} 0/1 parameters"))
}

/// The random parameters and reflection words shared by the Weyl and sum-rule checks.
fn weyl_cases(seed: u64) -> Vec<(AdeType, Parameter, Vec<Vec<usize>>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(5));
    let rng = &mut rng;
    let mut out = Vec::new();
    for ty in all_types() {
        for _ in 0..100 {
            let tau = random_tau(rng, ty.rank());
            let words = (0..10).map(|_| random_word(rng, ty.rank())).collect();
            out.push((ty, tau, words));
        }
    }
    out
}

fn weyl_invariance(seed: u64) -> Result<String, String> {
    let cases = weyl_cases(seed);
    let mut last: Option<AdeType> = None;
    let mut ed = None;
    for (ty, tau, words) in &cases {
        if last != Some(*ty) {
            ed = Some(ExtendedDiagram::of_type(*ty));
            last = Some(*ty);
        }
        let rs = ed.as_ref().expect("set above").roots();
        let before = decompose(rs, tau).map_err(|e| e.to_string())?.types();
        for w in words {
            let image = rs.apply_word(w, tau);
            let after = decompose(rs, &image).map_err(|e| e.to_string())?.types();
            ensure(after == before, || format!("{ty} tau={tau} word={w:?}"))?;
        }
        let (dominant, word) = rs.make_dominant(tau);
        ensure(dominant.is_dominant(), || format!("{ty}: {dominant} not dominant"))?;
        ensure(rs.apply_word(&word, tau) == dominant, || format!("{ty}: word does not reproduce"))?;
        let dom_types = decompose(rs, &dominant).map_err(|e| e.to_string())?.types();
        ensure(dom_types == before, || format!("{ty} tau={tau}: dominant types differ"))?;
    }
    Ok(format!("{} parameters x 10 words", cases.len()))
}

fn sum_rule(seed: u64) -> Result<String, String> {
    let cases = weyl_cases(seed);
    let mut points = 0;
    let mut last: Option<AdeType> = None;
    let mut ed = None;
    for (ty, tau, words) in &cases {
        if last != Some(*ty) {
            ed = Some(ExtendedDiagram::of_type(*ty));
            last = Some(*ty);
        }
        let ed = ed.as_ref().expect("set above");
        let taus = std::iter::once(tau.clone()).chain(words.iter().map(|w| ed.roots().apply_word(w, tau)));
        for tau in taus {
            let lambda = psi_star(ed, &tau).map_err(|e| e.to_string())?;
            let c = classify_singularities(ed, &lambda).map_err(|e| e.to_string())?;
            for sp in &c.singular_points {
                ensure(sp.dimension() == ed.delta(), || format!("{ty} tau={tau}: sum != delta"))?;
                let mut blocks = vec![1];
                blocks.extend_from_slice(&sp.multiplicities);
                ensure(sp.stabilizer == blocks, || format!("{ty}: stabilizer {:?}", sp.stabilizer))?;
                ensure(sp.multiplicities.iter().all(|&m| m >= 1), || format!("{ty}: zero multiplicity"))?;
                points += 1;
            }
        }
    }
    Ok(format!("{points} singular points"))
}

fn crawley_boevey(seed: u64) -> Result<String, String> {
    let rng = &mut ChaCha8Rng::seed_from_u64(seed.wrapping_add(6));
    let mut compared = 0;
    for ty in all_types() {
        let ed = ExtendedDiagram::of_type(ty);
        let sigma = sigma_set(&ed);
        let c = ed.cartan_matrix();
        for _ in 0..50 {
            let lambda = psi_star(&ed, &random_tau(rng, ty.rank())).expect("length");
            let oracle = CrawleyBoeveyOracle::new(&c, ed.delta(), lambda.coords());
            let mut simple = BTreeSet::new();
            for alpha in &sigma {
                let got = simple_exists(&ed, alpha, &lambda).map_err(|e| e.to_string())?;
                ensure(got == oracle.simple_exists(alpha), || format!("{ty} lambda={lambda} alpha={alpha:?}"))?;
                if got {
                    simple.insert(alpha.clone());
                }
                compared += 1;
            }
            ensure(simple_exists(&ed, ed.delta(), &lambda) == Ok(true), || format!("{ty}: delta"))?;
            let min: BTreeSet<_> =
                sigma_lambda_min(&ed, &sigma_lambda(&ed, &lambda).expect("length")).into_iter().collect();
            ensure(min == simple, || format!("{ty} lambda={lambda}: minimal set differs"))?;
        }
    }
    Ok(format!("{compared} (alpha, lambda) pairs"))
}

fn r_plus_sigma(_: u64) -> Result<String, String> {
    for ty in all_types() {
        let ed = ExtendedDiagram::of_type(ty);
        let got = r_plus(&ed, ed.delta()).map_err(|e| e.to_string())?;
        ensure(got == sigma_set(&ed), || format!("{ty}: R+(delta) != Sigma"))?;
        ensure(got == box_r_plus(&ed.cartan_matrix(), ed.delta()), || format!("{ty}: oracle"))?;
    }
    Ok(format!("{} extended types", all_types().len()))
}

/// Vertex simples on a few quivers plus the Kronecker family at ten weights.
pub fn homological_fixtures() -> Vec<RepPoint> {
    let mut points = Vec::new();
    let quivers: Vec<Quiver> = vec![
        tilde_a1_quiver(),
        ExtendedDiagram::of_type(t("A2")).orient(&Orientation::Default),
        ExtendedDiagram::of_type(t("D4")).orient(&Orientation::Default),
    ];
    for q in &quivers {
        for i in 0..q.vertex_count() {
            points.push(vertex_simple(q, i).expect("vertex in range"));
        }
    }
    for s in ["0", "1", "-1", "2", "1/2", "i", "-2i", "1+i", "3/4-1/5i", "-7/3"] {
        points.push(tilde_a1_simple(&s.parse().expect("literal")));
    }
    points
}

fn homological(_: u64) -> Result<String, String> {
    let points = homological_fixtures();
    let mut pairs = 0;
    for x in &points {
        for y in &points {
            if x.quiver() != y.quiver() || check_complex(x, y).is_err() {
                continue;
            }
            let sigma = sigma_map(x, y).map_err(|e| e.to_string())?;
            let nu = nu_map(x, y).map_err(|e| e.to_string())?;
            ensure(nu.mul(&sigma).map_err(|e| e.to_string())?.is_zero(), || "nu . sigma != 0".into())?;
            let h = cohomology_dims(x, y).map_err(|e| e.to_string())?;
            let h_rev = cohomology_dims(y, x).map_err(|e| e.to_string())?;
            let v: Vec<i64> = x.dims().iter().map(|&d| d as i64).collect();
            let w: Vec<i64> = y.dims().iter().map(|&d| d as i64).collect();
            ensure(h.euler() == x.quiver().symmetric_form(&v, &w), || format!("euler {h:?}"))?;
            ensure(h.h2 == h_rev.h0, || format!("duality {h:?} vs {h_rev:?}"))?;
            pairs += 1;
        }
    }
    for x in points.iter().filter(|p| p.quiver() == &tilde_a1_quiver() && p.dims() == [1, 1]) {
        if x.mat(2).is_zero() {
            continue;
        }
        let h = cohomology_dims(x, x).map_err(|e| e.to_string())?;
        ensure((h.h0, h.h1, h.h2) == (1, 2, 1), || format!("simple Kronecker point gives {h:?}"))?;
    }
    Ok(format!("{pairs} ordered pairs"))
}

fn bordism(_: u64) -> Result<String, String> {
    let cfg = |b: &str, p: &[&str]| Configuration::new(t(b), p.iter().map(|x| t(x)).collect());
    ensure(realizable(&cfg("D4", &["A1", "A1", "A1"])).is_some(), || "D4 {A1,A1,A1}".into())?;
    ensure(realizable(&cfg("A2", &["A1", "A1"])).is_none(), || "A2 {A1,A1}".into())?;
    ensure(realizable(&cfg("E8", &["D4"])).is_some(), || "E8 {D4}".into())?;
    let mut checked = 0;
    for ty in all_types() {
        let ed = ExtendedDiagram::of_type(ty);
        for parts in enumerate_configurations(ty) {
            let c = Configuration::new(ty, parts.clone());
            let j = realizable(&c).ok_or_else(|| format!("{ty} {parts:?} not realizable"))?;
            let got = classify_singularities(&ed, &witness_parameter(&ed, &j)).map_err(|e| e.to_string())?.types();
            ensure(got == parts, || format!("{ty}: witness gives {got:?}, wanted {parts:?}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} configurations reproduced"))
}

fn orientation_independence(seed: u64) -> Result<String, String> {
    let rng = &mut ChaCha8Rng::seed_from_u64(seed.wrapping_add(11));
    let mut runs = 0;
    for ty in all_types() {
        let ed = ExtendedDiagram::of_type(ty);
        let mut taus = vec![Parameter::zero(ty.rank())];
        taus.extend((0..3).map(|_| random_tau(rng, ty.rank())));
        let inputs: Vec<ParameterInput> = taus.into_iter().map(ParameterInput::Tau).collect();
        let reference: Vec<_> = inputs
            .iter()
            .map(|p| classify_quiver(&ed.orient(&Orientation::Default), p).map(|c| c.to_json()))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        for _ in 0..5 {
            let q = ed.orient(&random_orientation(rng, &ed));
            for (p, want) in inputs.iter().zip(&reference) {
                let got = classify_quiver(&q, p).map_err(|e| e.to_string())?.to_json();
                ensure(got == *want, || format!("{ty}: orientation changes the classification"))?;
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} oriented classifications"))
}
