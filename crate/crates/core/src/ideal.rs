//! Monomial ideals in canonical form and their exact arithmetic.

use std::collections::BTreeSet;
use std::fmt;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::Ring;

/// A monomial ideal stored as its minimal generating set.
///
/// Generators are kept in canonical order (see [`Monomial`]'s `Ord`), so two
/// ideals over the same ring are equal exactly when their representations
/// are. The zero ideal has no generators; the unit ideal has the single
/// generator `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, keeping only the minimal ones.
    pub fn minimalize(ring: &Ring, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            ring.ensure_arity(g.nvars())?;
        }
        Ok(Self::from_candidates(ring.clone(), gens))
    }

    /// Shorthand for tests and examples: one exponent slice per generator.
    pub fn from_exponents(ring: &Ring, gens: &[&[u64]]) -> Result<Self> {
        Self::minimalize(ring, gens.iter().map(|e| Monomial::new(e.to_vec())))
    }

    pub(crate) fn from_candidates(ring: Ring, gens: Vec<Monomial>) -> Self {
        Self { ring, gens: minimal_elements(gens) }
    }

    pub fn zero(ring: &Ring) -> Self {
        Self { ring: ring.clone(), gens: Vec::new() }
    }

    pub fn unit(ring: &Ring) -> Self {
        Self { ring: ring.clone(), gens: vec![Monomial::one(ring.nvars())] }
    }

    pub fn principal(ring: &Ring, m: Monomial) -> Result<Self> {
        Self::minimalize(ring, [m])
    }

    /// The prime generated by the variables with the given indices.
    pub fn variables(ring: &Ring, vars: impl IntoIterator<Item = usize>) -> Self {
        let n = ring.nvars();
        Self::from_candidates(ring.clone(), vars.into_iter().map(|i| Monomial::pure_power(n, i, 1)).collect())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// The minimal generators in canonical order.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    #[allow(clippy::len_without_is_empty)] // emptiness is `is_zero`
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Neither zero nor the whole ring.
    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub(crate) fn ensure_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ImproperIdeal("the zero ideal"))
        } else if self.is_unit() {
            Err(Error::ImproperIdeal("the unit ideal"))
        } else {
            Ok(())
        }
    }

    pub fn contains_monomial(&self, m: &Monomial) -> Result<bool> {
        self.ring.ensure_arity(m.nvars())?;
        Ok(self.has(m))
    }

    #[inline]
    pub(crate) fn has(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &MonomialIdeal) -> Result<bool> {
        self.ring.ensure_same(&other.ring)?;
        Ok(other.gens.iter().all(|g| self.has(g)))
    }

    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool> {
        self.ring.ensure_same(&other.ring)?;
        Ok(self.gens == other.gens)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.ensure_same(&other.ring)?;
        let gens = self.gens.iter().chain(other.gens.iter()).cloned().collect();
        Ok(Self::from_candidates(self.ring.clone(), gens))
    }

    /// `self + (m)`, linear in the number of generators.
    pub fn add_generator(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.ring.ensure_arity(m.nvars())?;
        if self.has(m) {
            return Ok(self.clone());
        }
        let mut gens: Vec<Monomial> = self.gens.iter().filter(|g| !m.divides(g)).cloned().collect();
        let at = gens.partition_point(|g| g < m);
        gens.insert(at, m.clone());
        Ok(Self { ring: self.ring.clone(), gens })
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.ensure_same(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        if self.is_unit() {
            return Ok(other.clone());
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let mut cands = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                cands.push(a.mul(b)?);
            }
        }
        Ok(Self::from_candidates(self.ring.clone(), cands))
    }

    /// `self^s`, computed incrementally. See [`crate::cache::PowerCache`] for
    /// the memoized variant used by scans.
    pub fn power(&self, s: u32) -> Result<MonomialIdeal> {
        let mut acc = Self::unit(&self.ring);
        for _ in 0..s {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `(self : m)`.
    pub fn colon_by_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.ring.ensure_arity(m.nvars())?;
        let gens = self.gens.iter().map(|g| g.quotient_by_gcd(m)).collect();
        Ok(Self::from_candidates(self.ring.clone(), gens))
    }

    /// `(self : other)`; `other` must be nonzero.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.ensure_same(&other.ring)?;
        let (first, rest) = other.gens.split_first().ok_or(Error::ColonByZero)?;
        let mut acc = self.colon_by_monomial(first)?;
        for v in rest {
            if acc.is_zero() {
                break;
            }
            acc = acc.intersect(&self.colon_by_monomial(v)?)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.ensure_same(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        if self.is_unit() {
            return Ok(other.clone());
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        // A generator already lying in the other ideal is itself a generator
        // of the intersection and absorbs every lcm it takes part in.
        let (a_in, a_out): (Vec<&Monomial>, Vec<&Monomial>) = self.gens.iter().partition(|a| other.has(a));
        let (b_in, b_out): (Vec<&Monomial>, Vec<&Monomial>) = other.gens.iter().partition(|b| self.has(b));
        let mut cands: Vec<Monomial> = a_in.into_iter().chain(b_in).cloned().collect();
        cands.reserve(a_out.len() * b_out.len());
        for a in &a_out {
            for b in &b_out {
                cands.push(a.lcm(b));
            }
        }
        Ok(Self::from_candidates(self.ring.clone(), cands))
    }

    pub fn radical(&self) -> MonomialIdeal {
        let gens = self.gens.iter().map(Monomial::squarefree).collect();
        Self::from_candidates(self.ring.clone(), gens)
    }

    /// Indices of the variables occurring in some minimal generator.
    pub fn support(&self) -> BTreeSet<usize> {
        self.gens.iter().flat_map(|g| g.support()).collect()
    }

    /// Componentwise maximum of the generators' exponents.
    pub fn max_exponents(&self) -> Vec<u64> {
        let mut out = vec![0; self.ring.nvars()];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exponents()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    /// Hex digest of the ring and canonical text, used as a cache key.
    pub fn fingerprint(&self) -> String {
        let digest = Sha256::digest(format!("{}|{}", self.ring, self).as_bytes());
        hex::encode(&digest[..16])
    }
}

/// Canonical text: generators in canonical order joined by `", "`; the zero
/// ideal is `0` and the unit ideal `1`.
impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("0");
        }
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(&self.ring))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self}) in K[{}]", self.ring)
    }
}

/// Divisibility-minimal, deduplicated elements of `cands` in canonical order.
///
/// Candidates are scanned by ascending degree; one is kept iff no kept
/// element divides it. This is the hot path of every operation, so each
/// kept monomial carries a bitmask of exponent thresholds: `a | b` implies
/// `mask(a) ⊆ mask(b)`, which rejects most pairs without touching exponents.
pub(crate) fn minimal_elements(mut cands: Vec<Monomial>) -> Vec<Monomial> {
    cands.sort_unstable();
    cands.dedup();
    match cands.first() {
        None => return cands,
        Some(first) if first.is_one() => {
            cands.truncate(1);
            return cands;
        }
        _ => {}
    }
    if cands.len() == 1 {
        return cands;
    }
    let masker = DivMask::new(&cands);
    let mut kept: Vec<Monomial> = Vec::new();
    let mut masks: Vec<u64> = Vec::new();
    for c in cands {
        let mc = masker.mask(&c);
        let divisible = kept
            .iter()
            .zip(masks.iter())
            .any(|(k, &mk)| mk & !mc == 0 && k.divides(&c));
        if !divisible {
            kept.push(c);
            masks.push(mc);
        }
    }
    kept
}

struct DivMask {
    // (variable, threshold) per bit
    bits: Vec<(usize, u64)>,
}

impl DivMask {
    fn new(cands: &[Monomial]) -> Self {
        let n = cands[0].nvars();
        let mut max = vec![0u64; n];
        for c in cands {
            for (m, &e) in max.iter_mut().zip(c.exponents()) {
                *m = (*m).max(e);
            }
        }
        let active: Vec<usize> = (0..n).filter(|&i| max[i] > 0).collect();
        let mut bits = Vec::new();
        if !active.is_empty() {
            let per_var = (64 / active.len()).max(1);
            for &i in active.iter().take(64) {
                let slots = per_var.min(max[i] as usize) as u64;
                for k in 1..=slots {
                    // thresholds spread over 1..=max
                    bits.push((i, (k * max[i]).div_ceil(slots + 1).max(1)));
                }
            }
        }
        bits.truncate(64);
        Self { bits }
    }

    #[inline]
    fn mask(&self, m: &Monomial) -> u64 {
        let e = m.exponents();
        self.bits
            .iter()
            .enumerate()
            .fold(0u64, |acc, (b, &(i, t))| acc | (u64::from(e[i] >= t) << b))
    }
}
