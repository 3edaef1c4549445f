//! Brute-force oracles over exponent boxes. They work on raw exponent
//! vectors and share no code with the library beyond constructing the
//! final `MonomialIdeal` for comparison.
#![allow(dead_code)]

use std::collections::BTreeSet;

use monideal::{Monomial, MonomialIdeal, MonomialPrime, Ring};

pub type Exps = Vec<u64>;

pub fn raw(ideal: &MonomialIdeal) -> Vec<Exps> {
    ideal.generators().iter().map(|g| g.exponents().to_vec()).collect()
}

fn divides(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn member(gens: &[Exps], u: &[u64]) -> bool {
    gens.iter().any(|g| divides(g, u))
}

/// Every point of `[0, bound_0] × ... × [0, bound_{n-1}]`.
pub fn box_points(bound: &[u64]) -> Vec<Exps> {
    let mut out = vec![vec![]];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|p: Exps| {
                (0..=b).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    out
}

/// Minimal elements under divisibility, quadratic scan.
pub fn minimal(points: &[Exps]) -> BTreeSet<Exps> {
    points
        .iter()
        .filter(|p| !points.iter().any(|q| q != *p && divides(q, p)))
        .cloned()
        .collect()
}

fn max_exps(n: usize, gens: &[&[Exps]]) -> Exps {
    (0..n).map(|i| gens.iter().flat_map(|g| g.iter()).map(|e| e[i]).max().unwrap_or(0)).collect()
}

pub fn gens_set(ideal: &MonomialIdeal) -> BTreeSet<Exps> {
    raw(ideal).into_iter().collect()
}

/// Minimal generators of `(I : J)`: `u` is in the colon iff `u * g ∈ I` for
/// every generator `g` of `J`; generators never exceed the maxima of `I`.
pub fn colon(i: &MonomialIdeal, j: &MonomialIdeal) -> BTreeSet<Exps> {
    let n = i.ring().nvars();
    let (gi, gj) = (raw(i), raw(j));
    let bound = max_exps(n, &[&gi]);
    let members: Vec<Exps> = box_points(&bound)
        .into_iter()
        .filter(|u| gj.iter().all(|g| member(&gi, &u.iter().zip(g).map(|(a, b)| a + b).collect::<Vec<_>>())))
        .collect();
    minimal(&members)
}

pub fn intersect(i: &MonomialIdeal, j: &MonomialIdeal) -> BTreeSet<Exps> {
    let n = i.ring().nvars();
    let (gi, gj) = (raw(i), raw(j));
    let bound = max_exps(n, &[&gi, &gj]);
    let members: Vec<Exps> =
        box_points(&bound).into_iter().filter(|u| member(&gi, u) && member(&gj, u)).collect();
    minimal(&members)
}

/// Monomial primes `p` with `p = (I : u)` for some monomial `u`. Witnesses
/// can be taken with `u_i ≤ max_i(I)`, and `(I : u) = p` iff `u ∉ I`,
/// `x_i u ∈ I` for `i ∈ p`, and no power of the variables outside `p`
/// multiplies `u` into `I`.
pub fn associated_primes(i: &MonomialIdeal) -> BTreeSet<Vec<usize>> {
    let n = i.ring().nvars();
    let gi = raw(i);
    let bound = max_exps(n, &[&gi]);
    let mut out = BTreeSet::new();
    for u in box_points(&bound) {
        if member(&gi, &u) {
            continue;
        }
        let p: Vec<usize> = (0..n)
            .filter(|&k| {
                let mut v = u.clone();
                v[k] += 1;
                member(&gi, &v)
            })
            .collect();
        if p.is_empty() {
            continue;
        }
        let mut pushed = u.clone();
        for k in 0..n {
            if !p.contains(&k) {
                pushed[k] += bound[k] + 1;
            }
        }
        if !member(&gi, &pushed) {
            out.insert(p);
        }
    }
    out
}

pub fn prime_vars(primes: &BTreeSet<MonomialPrime>) -> BTreeSet<Vec<usize>> {
    primes.iter().map(|p| p.vars().to_vec()).collect()
}

pub fn ideal(ring: &Ring, gens: &[Exps]) -> MonomialIdeal {
    MonomialIdeal::minimalize(ring, gens.iter().cloned().map(Monomial::new)).unwrap()
}

/// `I^s` by repeated multiplication of generator lists, minimalized naively.
pub fn power(i: &MonomialIdeal, s: u32) -> BTreeSet<Exps> {
    let n = i.ring().nvars();
    let gi = raw(i);
    let mut acc: Vec<Exps> = vec![vec![0; n]];
    for _ in 0..s {
        let next: Vec<Exps> = acc
            .iter()
            .flat_map(|a| gi.iter().map(move |g| a.iter().zip(g).map(|(x, y)| x + y).collect()))
            .collect();
        acc = minimal(&next).into_iter().collect();
    }
    acc.into_iter().collect()
}
