//! Irreducible and primary decompositions, associated and minimal primes.
//!
//! A monomial ideal is irreducible exactly when it is generated by pure
//! powers of variables. Any proper nonzero monomial ideal splits along a
//! generator `u = x_i^a * w` with `w` coprime to `x_i`:
//!
//! ```text
//! I = (I + (x_i^a)) ∩ (I + (w))
//! ```
//!
//! Recursing until every piece is irreducible and discarding components that
//! contain another component yields the unique irredundant irreducible
//! decomposition. Irreducible monomial ideals are strongly irreducible (if
//! `Q ⊇ J ∩ K` then `Q ⊇ J` or `Q ⊇ K`), so a component contains the
//! intersection of the others iff it contains one of them.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::prime::MonomialPrime;
use crate::ring::Ring;

/// The irreducible ideal `(x_i^{a_i} : i ∈ keys)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IrreducibleComponent {
    ring: Ring,
    pure_powers: BTreeMap<usize, u64>,
}

impl IrreducibleComponent {
    pub fn new(ring: &Ring, pure_powers: BTreeMap<usize, u64>) -> Option<Self> {
        let valid = !pure_powers.is_empty()
            && pure_powers.iter().all(|(&i, &a)| i < ring.nvars() && a > 0);
        valid.then(|| Self { ring: ring.clone(), pure_powers })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn pure_powers(&self) -> &BTreeMap<usize, u64> {
        &self.pure_powers
    }

    pub fn radical(&self) -> MonomialPrime {
        MonomialPrime::new(&self.ring, self.pure_powers.keys().copied()).expect("non-empty")
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let n = self.ring.nvars();
        let gens = self.pure_powers.iter().map(|(&i, &a)| Monomial::pure_power(n, i, a)).collect();
        MonomialIdeal::from_candidates(self.ring.clone(), gens)
    }

    /// `self ⊆ other`.
    pub fn is_contained_in(&self, other: &IrreducibleComponent) -> bool {
        self.pure_powers
            .iter()
            .all(|(i, a)| other.pure_powers.get(i).is_some_and(|b| b <= a))
    }

    fn key(&self) -> (Vec<usize>, Vec<u64>) {
        (self.pure_powers.keys().copied().collect(), self.pure_powers.values().copied().collect())
    }
}

/// Components sort by radical, then by exponents.
impl Ord for IrreducibleComponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for IrreducibleComponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lists the pure powers in variable order, e.g. `(x^3, y^2)`.
impl fmt::Display for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.ring.nvars();
        let parts: Vec<String> = self
            .pure_powers
            .iter()
            .map(|(&v, &e)| Monomial::pure_power(n, v, e).display(&self.ring).to_string())
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An irredundant irreducible decomposition of `source`, canonically sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    source: MonomialIdeal,
    components: Vec<IrreducibleComponent>,
}

impl Decomposition {
    pub fn source(&self) -> &MonomialIdeal {
        &self.source
    }

    pub fn components(&self) -> &[IrreducibleComponent] {
        &self.components
    }

    /// Intersection of all components; equals the source.
    pub fn recompose(&self) -> Result<MonomialIdeal> {
        intersect_all(self.source.ring(), self.components.iter().map(IrreducibleComponent::to_ideal))
    }

    pub fn associated_primes(&self) -> BTreeSet<MonomialPrime> {
        self.components.iter().map(IrreducibleComponent::radical).collect()
    }

    /// Components grouped by radical and intersected within each group: a
    /// primary decomposition with one component per associated prime.
    pub fn primary_components(&self) -> Result<Vec<(MonomialPrime, MonomialIdeal)>> {
        let mut groups: BTreeMap<MonomialPrime, Vec<&IrreducibleComponent>> = BTreeMap::new();
        for c in &self.components {
            groups.entry(c.radical()).or_default().push(c);
        }
        groups
            .into_iter()
            .map(|(p, cs)| Ok((p, intersect_all(self.source.ring(), cs.into_iter().map(|c| c.to_ideal()))?)))
            .collect()
    }
}

fn intersect_all(ring: &Ring, ideals: impl IntoIterator<Item = MonomialIdeal>) -> Result<MonomialIdeal> {
    ideals
        .into_iter()
        .try_fold(MonomialIdeal::unit(ring), |acc, q| acc.intersect(&q))
}

pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Decomposition> {
    ideal.ensure_proper_nonzero()?;
    let mut memo = HashMap::new();
    let mut components = split(ideal, &mut memo);
    components.sort();
    Ok(Decomposition { source: ideal.clone(), components })
}

fn split(ideal: &MonomialIdeal, memo: &mut HashMap<MonomialIdeal, Vec<IrreducibleComponent>>) -> Vec<IrreducibleComponent> {
    if let Some(hit) = memo.get(ideal) {
        return hit.clone();
    }
    let pivot = ideal.generators().iter().find(|g| g.support_len() >= 2);
    let result = match pivot {
        None => {
            let powers = ideal
                .generators()
                .iter()
                .map(|g| g.as_pure_power().expect("pure power generator"))
                .collect();
            vec![IrreducibleComponent::new(ideal.ring(), powers).expect("proper nonzero")]
        }
        Some(u) => {
            let n = ideal.ring().nvars();
            let i = u.support()[0];
            let a = u.exponent(i);
            let mut rest = u.exponents().to_vec();
            rest[i] = 0;
            let left = ideal
                .add_generator(&Monomial::pure_power(n, i, a))
                .expect("same ring");
            let right = ideal.add_generator(&Monomial::new(rest)).expect("same ring");
            let mut all = split(&left, memo);
            all.extend(split(&right, memo));
            drop_redundant(all)
        }
    };
    memo.insert(ideal.clone(), result.clone());
    result
}

fn drop_redundant(mut comps: Vec<IrreducibleComponent>) -> Vec<IrreducibleComponent> {
    comps.sort();
    comps.dedup();
    let keep: Vec<bool> = comps
        .iter()
        .enumerate()
        .map(|(i, c)| !comps.iter().enumerate().any(|(j, d)| i != j && d.is_contained_in(c)))
        .collect();
    comps
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

/// `Ass(R/I)`: the radicals of the irredundant irreducible components.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<MonomialPrime>> {
    Ok(irreducible_decomposition(ideal)?.associated_primes())
}

/// Inclusion-minimal associated primes.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<MonomialPrime>> {
    let ass = associated_primes(ideal)?;
    Ok(ass
        .iter()
        .filter(|p| !ass.iter().any(|q| q != *p && q.is_subset(p)))
        .cloned()
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn xyz() -> Ring {
        Ring::new(["x", "y", "z"]).unwrap()
    }

    fn comp(ring: &Ring, pairs: &[(usize, u64)]) -> IrreducibleComponent {
        IrreducibleComponent::new(ring, pairs.iter().copied().collect()).unwrap()
    }

    fn family_m1_r1() -> MonomialIdeal {
        MonomialIdeal::from_exponents(&xyz(), &[&[4, 0, 0], &[0, 4, 0], &[3, 1, 0], &[1, 3, 0], &[2, 2, 1]]).unwrap()
    }

    #[test]
    fn family_decomposition_matches_listed_components() {
        let r = xyz();
        let d = irreducible_decomposition(&family_m1_r1()).unwrap();
        let mut expected = vec![
            comp(&r, &[(0, 1), (1, 4)]),
            comp(&r, &[(0, 4), (1, 1)]),
            comp(&r, &[(0, 2), (1, 3)]),
            comp(&r, &[(0, 3), (1, 2)]),
            comp(&r, &[(0, 3), (1, 3), (2, 1)]),
        ];
        expected.sort();
        assert_eq!(d.components(), expected.as_slice());
        assert_eq!(d.recompose().unwrap(), family_m1_r1());
    }

    #[test]
    fn family_primes() {
        let r = xyz();
        let xy = MonomialPrime::new(&r, [0, 1]).unwrap();
        let m = MonomialPrime::maximal(&r);
        let ass = associated_primes(&family_m1_r1()).unwrap();
        assert_eq!(ass, [xy.clone(), m].into_iter().collect());
        assert_eq!(minimal_primes(&family_m1_r1()).unwrap(), [xy].into_iter().collect());
    }

    #[test]
    fn irreducible_input_is_its_own_decomposition() {
        let r = xyz();
        let q = MonomialIdeal::from_exponents(&r, &[&[2, 0, 0], &[0, 0, 3]]).unwrap();
        let d = irreducible_decomposition(&q).unwrap();
        assert_eq!(d.components(), &[comp(&r, &[(0, 2), (2, 3)])]);
    }

    #[test]
    fn principal_pure_power() {
        let r = xyz();
        let q = MonomialIdeal::from_exponents(&r, &[&[0, 5, 0]]).unwrap();
        let ass = associated_primes(&q).unwrap();
        assert_eq!(ass, [MonomialPrime::new(&r, [1]).unwrap()].into_iter().collect());
    }

    #[test]
    fn prime_is_its_own_minimal_prime() {
        let r = xyz();
        let p = MonomialPrime::new(&r, [0, 2]).unwrap();
        assert_eq!(minimal_primes(&p.to_ideal()).unwrap(), [p].into_iter().collect());
    }

    #[test]
    fn rejects_zero_and_unit() {
        let r = xyz();
        assert!(matches!(irreducible_decomposition(&MonomialIdeal::zero(&r)), Err(Error::ImproperIdeal(_))));
        assert!(matches!(irreducible_decomposition(&MonomialIdeal::unit(&r)), Err(Error::ImproperIdeal(_))));
    }

    #[test]
    fn primary_components_group_by_radical() {
        let d = irreducible_decomposition(&family_m1_r1()).unwrap();
        let prim = d.primary_components().unwrap();
        assert_eq!(prim.len(), 2);
        let r = xyz();
        assert_eq!(prim[0].0, MonomialPrime::new(&r, [0, 1]).unwrap());
        assert_eq!(prim[0].1.radical(), prim[0].0.to_ideal());
        let whole = prim[0].1.intersect(&prim[1].1).unwrap();
        assert_eq!(whole, family_m1_r1());
    }

    #[test]
    fn squarefree_monomial_ideal() {
        // (xy, yz) = (y) ∩ (x, z)
        let r = xyz();
        let i = MonomialIdeal::from_exponents(&r, &[&[1, 1, 0], &[0, 1, 1]]).unwrap();
        let d = irreducible_decomposition(&i).unwrap();
        assert_eq!(d.components(), &[comp(&r, &[(0, 1), (2, 1)]), comp(&r, &[(1, 1)])]);
    }
}
