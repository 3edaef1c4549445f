//! Seeded randomized checks of the operator identities.
//!
//! Each suite draws small random ideals and returns a description of every
//! instance where an identity failed; an empty list means the suite passed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cache::PowerCache;
use crate::decomposition::irreducible_decomposition;
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::operators::{containment_via_localization, contract_pi, expand, localize, weight, ExpansionSpec, WeightSpec};
use crate::persistence::colon_pattern;
use crate::prime::MonomialPrime;
use crate::ring::Ring;

/// Size limits for random ideals.
#[derive(Debug, Clone, Copy)]
pub struct Shape {
    pub max_vars: usize,
    pub max_gens: usize,
    pub max_exp: u64,
}

impl Default for Shape {
    fn default() -> Self {
        Self { max_vars: 3, max_gens: 4, max_exp: 4 }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_ring(rng: &mut impl Rng, shape: Shape) -> Ring {
    const NAMES: [&str; 6] = ["x", "y", "z", "w", "v", "u"];
    let n = rng.gen_range(1..=shape.max_vars.clamp(1, NAMES.len()));
    Ring::new(NAMES[..n].iter().copied()).expect("distinct names")
}

pub fn random_monomial(rng: &mut impl Rng, n: usize, max_exp: u64) -> Monomial {
    Monomial::new((0..n).map(|_| rng.gen_range(0..=max_exp)).collect::<Vec<_>>())
}

/// A random proper nonzero ideal: every generator is a non-unit monomial.
pub fn random_ideal(rng: &mut impl Rng, ring: &Ring, shape: Shape) -> MonomialIdeal {
    let n = ring.nvars();
    let count = rng.gen_range(1..=shape.max_gens);
    let gens: Vec<Monomial> = (0..count)
        .map(|_| loop {
            let m = random_monomial(rng, n, shape.max_exp);
            if !m.is_one() {
                break m;
            }
        })
        .collect();
    MonomialIdeal::minimalize(ring, gens).expect("arity matches")
}

pub fn random_prime(rng: &mut impl Rng, ring: &Ring) -> MonomialPrime {
    let n = ring.nvars();
    // uniform over non-empty subsets
    let mask = rng.gen_range(1..(1u64 << n));
    MonomialPrime::new(ring, (0..n).filter(|i| mask >> i & 1 == 1)).expect("non-empty")
}

fn expect_eq(failures: &mut Vec<String>, what: &str, lhs: &MonomialIdeal, rhs: &MonomialIdeal, ctx: &str) {
    if lhs != rhs {
        failures.push(format!("{what} failed for {ctx}: {lhs:?} vs {rhs:?}"));
    }
}

/// Expansion commutes with sum, product, intersection, colon and radical;
/// membership transfers through the contraction; the radical of an expanded
/// irreducible component is the expanded radical.
pub fn expansion_suite(seed: u64, count: usize, shape: Shape) -> Result<Vec<String>> {
    let mut rng = rng(seed);
    let mut failures = Vec::new();
    for _ in 0..count {
        let ring = random_ring(&mut rng, shape);
        let i = random_ideal(&mut rng, &ring, shape);
        let j = random_ideal(&mut rng, &ring, shape);
        let tuple: Vec<usize> = (0..ring.nvars()).map(|_| rng.gen_range(1..=3)).collect();
        let spec = ExpansionSpec::new(&ring, tuple.clone())?;
        let ctx = format!("I = {i:?}, J = {j:?}, tuple {tuple:?}");
        let e = |x: &MonomialIdeal| expand(x, &spec);
        let (ie, je) = (e(&i)?, e(&j)?);
        expect_eq(&mut failures, "(I+J)*", &e(&i.sum(&j)?)?, &ie.sum(&je)?, &ctx);
        expect_eq(&mut failures, "(IJ)*", &e(&i.product(&j)?)?, &ie.product(&je)?, &ctx);
        expect_eq(&mut failures, "(I∩J)*", &e(&i.intersect(&j)?)?, &ie.intersect(&je)?, &ctx);
        expect_eq(&mut failures, "(I:J)*", &e(&i.colon(&j)?)?, &ie.colon(&je)?, &ctx);
        expect_eq(&mut failures, "rad(I*)", &ie.radical(), &e(&i.radical())?, &ctx);
        for _ in 0..4 {
            let f = random_monomial(&mut rng, spec.target().nvars(), shape.max_exp);
            if ie.contains_monomial(&f)? != i.contains_monomial(&contract_pi(&f, &spec)?)? {
                failures.push(format!("membership transfer failed for {ctx}, f = {f:?}"));
            }
        }
        for q in irreducible_decomposition(&i)?.components() {
            let q = q.to_ideal();
            expect_eq(&mut failures, "rad(Q*)", &e(&q)?.radical(), &e(&q.radical())?, &ctx);
        }
    }
    Ok(failures)
}

pub fn weighting_suite(seed: u64, count: usize, shape: Shape) -> Result<Vec<String>> {
    let mut rng = rng(seed);
    let mut failures = Vec::new();
    for _ in 0..count {
        let ring = random_ring(&mut rng, shape);
        let i = random_ideal(&mut rng, &ring, shape);
        let j = random_ideal(&mut rng, &ring, shape);
        let ws: Vec<u64> = (0..ring.nvars()).map(|_| rng.gen_range(1..=4)).collect();
        let spec = WeightSpec::new(ws.clone())?;
        let ctx = format!("I = {i:?}, J = {j:?}, W = {ws:?}");
        let w = |x: &MonomialIdeal| weight(x, &spec);
        let (iw, jw) = (w(&i)?, w(&j)?);
        expect_eq(&mut failures, "(I+J)_W", &w(&i.sum(&j)?)?, &iw.sum(&jw)?, &ctx);
        expect_eq(&mut failures, "(IJ)_W", &w(&i.product(&j)?)?, &iw.product(&jw)?, &ctx);
        expect_eq(&mut failures, "(I∩J)_W", &w(&i.intersect(&j)?)?, &iw.intersect(&jw)?, &ctx);
        expect_eq(&mut failures, "(I:J)_W", &w(&i.colon(&j)?)?, &iw.colon(&jw)?, &ctx);
    }
    Ok(failures)
}

/// Localization commutes with sum, product, intersection and colon, and an
/// irreducible component whose radical lies in `p` keeps its radical.
pub fn localization_suite(seed: u64, count: usize, shape: Shape) -> Result<Vec<String>> {
    let mut rng = rng(seed);
    let mut failures = Vec::new();
    for _ in 0..count {
        let ring = random_ring(&mut rng, shape);
        let i = random_ideal(&mut rng, &ring, shape);
        let j = random_ideal(&mut rng, &ring, shape);
        let p = random_prime(&mut rng, &ring);
        let ctx = format!("I = {i:?}, J = {j:?}, p = {p}");
        let l = |x: &MonomialIdeal| localize(x, &p);
        let (il, jl) = (l(&i)?, l(&j)?);
        expect_eq(&mut failures, "(I+J)(p)", &l(&i.sum(&j)?)?, &il.sum(&jl)?, &ctx);
        expect_eq(&mut failures, "(IJ)(p)", &l(&i.product(&j)?)?, &il.product(&jl)?, &ctx);
        expect_eq(&mut failures, "(I∩J)(p)", &l(&i.intersect(&j)?)?, &il.intersect(&jl)?, &ctx);
        expect_eq(&mut failures, "(I:J)(p)", &l(&i.colon(&j)?)?, &il.colon(&jl)?, &ctx);
        for q in irreducible_decomposition(&i)?.components() {
            let rad = q.radical();
            if rad.is_subset(&p) {
                let lq = l(&q.to_ideal())?;
                expect_eq(&mut failures, "rad(Q(p))", &lq.radical(), &l(&rad.to_ideal())?, &ctx);
            }
        }
    }
    Ok(failures)
}

/// Containment decided through localizations at `Ass(I)` agrees with
/// direct containment. A third of the pairs are built to be contained.
pub fn containment_suite(seed: u64, count: usize, shape: Shape) -> Result<Vec<String>> {
    let mut rng = rng(seed);
    let mut failures = Vec::new();
    for k in 0..count {
        let ring = random_ring(&mut rng, shape);
        let i = random_ideal(&mut rng, &ring, shape);
        let other = random_ideal(&mut rng, &ring, shape);
        let j = match k % 3 {
            0 => other,
            1 => i.product(&other)?,
            _ => i.intersect(&other)?.sum(&i.power(2)?)?,
        };
        let direct = i.contains(&j)?;
        let via = containment_via_localization(&j, &i)?;
        if direct != via {
            failures.push(format!("J = {j:?} ⊆ I = {i:?}: direct {direct}, via localization {via}"));
        }
    }
    Ok(failures)
}

/// Colon patterns of `I`, `I*` and `I_W` agree entrywise.
pub fn transfer_suite(seed: u64, count: usize, shape: Shape, horizon: u32) -> Result<Vec<String>> {
    let mut rng = rng(seed);
    let mut failures = Vec::new();
    let cache = PowerCache::new();
    for _ in 0..count {
        let ring = random_ring(&mut rng, shape);
        let i = random_ideal(&mut rng, &ring, shape);
        let mut tuple = vec![1; ring.nvars()];
        *tuple.choose_mut(&mut rng).expect("n ≥ 1") = 2;
        let ws: Vec<u64> = (0..ring.nvars()).map(|_| rng.gen_range(1..=3)).collect();
        let ie = expand(&i, &ExpansionSpec::new(&ring, tuple.clone())?)?;
        let iw = weight(&i, &WeightSpec::new(ws.clone())?)?;
        let base = colon_pattern(&i, horizon, &cache)?;
        let pe = colon_pattern(&ie, horizon, &cache)?;
        let pw = colon_pattern(&iw, horizon, &cache)?;
        if base.entries != pe.entries || base.entries != pw.entries {
            failures.push(format!(
                "I = {i:?}, tuple {tuple:?}, W = {ws:?}: patterns {base} / {pe} / {pw}"
            ));
        }
    }
    Ok(failures)
}
