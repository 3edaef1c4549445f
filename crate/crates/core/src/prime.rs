use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::Ring;

/// A monomial prime `(x_i : i ∈ vars)`, with `vars` sorted and non-empty.
///
/// Primes order by their sorted variable index lists, so `(x,y) < (x,y,z) < (x,z)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialPrime {
    vars: Vec<usize>,
    ring: Ring,
}

impl MonomialPrime {
    pub fn new(ring: &Ring, vars: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut vars: Vec<usize> = vars.into_iter().collect();
        vars.sort_unstable();
        vars.dedup();
        if vars.is_empty() {
            return Err(Error::InvalidArgument("a monomial prime needs at least one variable".into()));
        }
        if let Some(&v) = vars.iter().find(|&&v| v >= ring.nvars()) {
            return Err(Error::InvalidArgument(format!("variable index {v} out of range for {ring}")));
        }
        Ok(Self { vars, ring: ring.clone() })
    }

    /// The maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: &Ring) -> Self {
        Self { vars: (0..ring.nvars()).collect(), ring: ring.clone() }
    }

    /// Recognizes an ideal generated by variables.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Option<Self> {
        let mut vars = Vec::with_capacity(ideal.len());
        for g in ideal.generators() {
            match g.as_pure_power() {
                Some((i, 1)) => vars.push(i),
                _ => return None,
            }
        }
        Self::new(ideal.ring(), vars).ok()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn contains_var(&self, v: usize) -> bool {
        self.vars.binary_search(&v).is_ok()
    }

    /// `self ⊆ other` as ideals.
    pub fn is_subset(&self, other: &MonomialPrime) -> bool {
        self.vars.iter().all(|&v| other.contains_var(v))
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::variables(&self.ring, self.vars.iter().copied())
    }

    pub fn names(&self) -> Vec<String> {
        self.vars.iter().map(|&v| self.ring.name(v).to_string()).collect()
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.names().join(", "))
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_through_ideal() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let p = MonomialPrime::new(&r, [2, 0]).unwrap();
        assert_eq!(p.to_string(), "(x, z)");
        assert_eq!(MonomialPrime::from_ideal(&p.to_ideal()), Some(p.clone()));
        assert!(MonomialPrime::new(&r, []).is_err());
        assert!(MonomialPrime::new(&r, [3]).is_err());
        let sq = MonomialIdeal::from_exponents(&r, &[&[2, 0, 0]]).unwrap();
        assert_eq!(MonomialPrime::from_ideal(&sq), None);
    }

    #[test]
    fn ordering_and_inclusion() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let xy = MonomialPrime::new(&r, [0, 1]).unwrap();
        let m = MonomialPrime::maximal(&r);
        assert!(xy < m);
        assert!(xy.is_subset(&m));
        assert!(!m.is_subset(&xy));
    }
}
