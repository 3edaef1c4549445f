//! Expansion, weighting and monomial localization of monomial ideals.

use crate::decomposition::associated_primes;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::prime::MonomialPrime;
use crate::ring::Ring;

/// Replaces each source variable `x_j` by a block of `i_j` fresh variables
/// named `x_j_1, ..., x_j_{i_j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionSpec {
    source: Ring,
    tuple: Vec<usize>,
    target: Ring,
    offsets: Vec<usize>,
}

impl ExpansionSpec {
    pub fn new(source: &Ring, tuple: Vec<usize>) -> Result<Self> {
        if tuple.len() != source.nvars() {
            return Err(Error::InvalidArgument(format!(
                "expansion tuple has {} entries but the ring has {} variables",
                tuple.len(),
                source.nvars()
            )));
        }
        if tuple.contains(&0) {
            return Err(Error::InvalidArgument("expansion tuple entries must be positive".into()));
        }
        let mut names = Vec::new();
        let mut offsets = Vec::with_capacity(tuple.len());
        for (j, &size) in tuple.iter().enumerate() {
            offsets.push(names.len());
            names.extend((1..=size).map(|k| format!("{}_{k}", source.name(j))));
        }
        let target = Ring::new(names)?;
        Ok(Self { source: source.clone(), tuple, target, offsets })
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn tuple(&self) -> &[usize] {
        &self.tuple
    }

    /// Target variable indices of block `j`.
    pub fn block(&self, j: usize) -> std::ops::Range<usize> {
        self.offsets[j]..self.offsets[j] + self.tuple[j]
    }
}

/// Weak compositions of `total` into `parts` parts, lexicographically
/// decreasing (`(total, 0, ..)` first).
fn weak_compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for head in (0..=total).rev() {
        for mut tail in weak_compositions(total - head, parts - 1) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// `I*`: the sum over generators `x^a` of `p_1^{a_1} ⋯ p_n^{a_n}`, where
/// `p_j` is the prime generated by block `j`.
pub fn expand(ideal: &MonomialIdeal, spec: &ExpansionSpec) -> Result<MonomialIdeal> {
    ideal.ring().ensure_same(&spec.source)?;
    let width = spec.target.nvars();
    let mut cands = Vec::new();
    for g in ideal.generators() {
        let mut partial: Vec<Vec<u64>> = vec![vec![0; width]];
        for (j, &e) in g.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let block = spec.block(j);
            let comps = weak_compositions(e, block.len());
            partial = partial
                .iter()
                .flat_map(|p| {
                    let block = block.clone();
                    comps.iter().map(move |c| {
                        let mut q = p.clone();
                        q[block.clone()].copy_from_slice(c);
                        q
                    })
                })
                .collect();
        }
        cands.extend(partial.into_iter().map(Monomial::new));
    }
    Ok(MonomialIdeal::from_candidates(spec.target.clone(), cands))
}

/// `π`: sends `x_{j,k}` to `x_j`.
pub fn contract_pi(m: &Monomial, spec: &ExpansionSpec) -> Result<Monomial> {
    spec.target.ensure_arity(m.nvars())?;
    let exps = (0..spec.source.nvars())
        .map(|j| {
            m.exponents()[spec.block(j)]
                .iter()
                .try_fold(0u64, |acc, &e| acc.checked_add(e))
        })
        .collect::<Option<Vec<u64>>>()
        .ok_or(Error::Overflow("a contraction"))?;
    Ok(Monomial::new(exps))
}

/// Positive weights `w_i`, one per variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpec {
    weights: Vec<u64>,
}

impl WeightSpec {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if weights.is_empty() || weights.contains(&0) {
            return Err(Error::InvalidArgument("weights must be a non-empty list of positive integers".into()));
        }
        Ok(Self { weights })
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }
}

/// `I_W`: the image of the generators under `x_i ↦ x_i^{w_i}`.
pub fn weight(ideal: &MonomialIdeal, spec: &WeightSpec) -> Result<MonomialIdeal> {
    ideal.ring().ensure_arity(spec.weights.len())?;
    let gens = ideal
        .generators()
        .iter()
        .map(|g| {
            g.exponents()
                .iter()
                .zip(&spec.weights)
                .map(|(&e, &w)| e.checked_mul(w))
                .collect::<Option<Vec<u64>>>()
                .map(Monomial::new)
                .ok_or(Error::Overflow("a weighted generator"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MonomialIdeal::from_candidates(ideal.ring().clone(), gens))
}

/// The ring `R(p)` on the variables of `p`, in their original order.
pub fn localization_ring(prime: &MonomialPrime) -> Ring {
    Ring::new(prime.names()).expect("names come from a valid ring")
}

/// `I(p)`: sets every variable outside `p` to 1. The result lives in
/// [`localization_ring`]`(p)`.
pub fn localize(ideal: &MonomialIdeal, prime: &MonomialPrime) -> Result<MonomialIdeal> {
    ideal.ring().ensure_same(prime.ring())?;
    let gens = ideal
        .generators()
        .iter()
        .map(|g| Monomial::new(prime.vars().iter().map(|&v| g.exponent(v)).collect::<Vec<_>>()))
        .collect();
    Ok(MonomialIdeal::from_candidates(localization_ring(prime), gens))
}

/// Embeds an ideal of `R(p)` back into the ring of `p`.
pub fn embed_localized(ideal: &MonomialIdeal, prime: &MonomialPrime) -> Result<MonomialIdeal> {
    ideal.ring().ensure_same(&localization_ring(prime))?;
    let n = prime.ring().nvars();
    let gens = ideal
        .generators()
        .iter()
        .map(|g| {
            let mut exps = vec![0; n];
            for (k, &v) in prime.vars().iter().enumerate() {
                exps[v] = g.exponent(k);
            }
            Monomial::new(exps)
        })
        .collect();
    Ok(MonomialIdeal::from_candidates(prime.ring().clone(), gens))
}

/// Decides `J ⊆ I` by checking `J(p) ⊆ I(p)` at every associated prime of `I`.
pub fn containment_via_localization(j: &MonomialIdeal, i: &MonomialIdeal) -> Result<bool> {
    i.ring().ensure_same(j.ring())?;
    for p in associated_primes(i)? {
        if !localize(i, &p)?.contains(&localize(j, &p)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}
