//! Colon-power scans: strong persistence index, fluctuation, and
//! associated primes of powers.
//!
//! A scan up to horizon `L` records `d_ℓ = [(I^{ℓ+1} : I) = I^ℓ]` for
//! `ℓ = 1..L-1`. The case `ℓ = 0` is omitted since `(I : I) = R = I^0` for
//! every nonzero `I`. Nothing is known beyond the horizon, so every index
//! reported here is an observation, never a certificate.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cache::PowerCache;
use crate::decomposition::associated_primes;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::prime::MonomialPrime;
use crate::ring::Ring;

/// Horizon used when the caller does not pick one.
pub const DEFAULT_HORIZON: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ColonRelation {
    #[serde(rename = "eq")]
    Equal,
    #[serde(rename = "neq")]
    NotEqual,
}

impl ColonRelation {
    pub fn is_equal(self) -> bool {
        self == Self::Equal
    }
}

impl fmt::Display for ColonRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_equal() { "eq" } else { "neq" })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColonPattern {
    pub fingerprint: String,
    pub horizon: u32,
    /// `entries[ℓ - 1]` is `d_ℓ`.
    pub entries: Vec<ColonRelation>,
}

impl ColonPattern {
    /// Builds a pattern directly from `d_1, ..., d_{L-1}`.
    pub fn from_entries(fingerprint: impl Into<String>, entries: Vec<ColonRelation>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument("a colon pattern needs horizon at least 2".into()));
        }
        Ok(Self {
            fingerprint: fingerprint.into(),
            horizon: entries.len() as u32 + 1,
            entries,
        })
    }

    /// `d_ℓ` for `1 ≤ ℓ < horizon`.
    pub fn entry(&self, ell: u32) -> Option<ColonRelation> {
        ell.checked_sub(1).and_then(|i| self.entries.get(i as usize).copied())
    }

    /// Whether `(I^k : I) = I^{k-1}`, for `1 ≤ k ≤ horizon`. True at `k = 1`.
    pub fn holds_at(&self, k: u32) -> Option<bool> {
        match k {
            0 => None,
            1 => Some(true),
            _ => self.entry(k - 1).map(ColonRelation::is_equal),
        }
    }
}

impl fmt::Display for ColonPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpiReport {
    /// `1 + max{ℓ : d_ℓ = neq}`, or 1 when every entry is `eq`.
    pub observed_spi: u32,
    pub horizon: u32,
    /// Always false: no finite scan certifies the index.
    pub certified: bool,
    /// Number of trailing `eq` entries.
    pub trailing_equal_run: u32,
}

impl SpiReport {
    pub fn has_strong_persistence_within_horizon(&self) -> bool {
        self.observed_spi == 1
    }
}

impl fmt::Display for SpiReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "observed spi {} at horizon {} (trailing eq run {}; unverified beyond the horizon)",
            self.observed_spi, self.horizon, self.trailing_equal_run
        )
    }
}

pub type Triple = (u32, u32, u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    None,
    CaseI,
    CaseIi,
    Both,
}

/// Lexicographically minimal witnesses `a < b < c ≤ horizon` for the two
/// fluctuation shapes: (i) holds, fails, holds; (ii) fails, holds, fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FluctuationVerdict {
    pub case_i: Option<Triple>,
    pub case_ii: Option<Triple>,
    pub verdict: Verdict,
}

impl FluctuationVerdict {
    pub fn fluctuates(&self) -> bool {
        self.verdict != Verdict::None
    }
}

pub fn observed_spi(pattern: &ColonPattern) -> SpiReport {
    let last_neq = pattern.entries.iter().rposition(|d| !d.is_equal());
    let trailing = pattern.entries.iter().rev().take_while(|d| d.is_equal()).count();
    SpiReport {
        observed_spi: last_neq.map_or(1, |i| i as u32 + 2),
        horizon: pattern.horizon,
        certified: false,
        trailing_equal_run: trailing as u32,
    }
}

pub fn detect_fluctuation(pattern: &ColonPattern) -> FluctuationVerdict {
    let holds: Vec<bool> = (1..=pattern.horizon)
        .map(|k| pattern.holds_at(k).expect("in range"))
        .collect();
    let find = |first: bool| -> Option<Triple> {
        let n = holds.len();
        for a in 0..n {
            if holds[a] != first {
                continue;
            }
            for b in a + 1..n {
                if holds[b] == first {
                    continue;
                }
                if let Some(c) = (b + 1..n).find(|&c| holds[c] == first) {
                    return Some((a as u32 + 1, b as u32 + 1, c as u32 + 1));
                }
            }
        }
        None
    };
    let case_i = find(true);
    let case_ii = find(false);
    let verdict = match (case_i.is_some(), case_ii.is_some()) {
        (false, false) => Verdict::None,
        (true, false) => Verdict::CaseI,
        (false, true) => Verdict::CaseIi,
        (true, true) => Verdict::Both,
    };
    FluctuationVerdict { case_i, case_ii, verdict }
}

/// Computes `d_1, ..., d_{horizon-1}`. Powers come from `cache`; the colon
/// for each `ℓ` is computed independently and in parallel.
pub fn colon_pattern(ideal: &MonomialIdeal, horizon: u32, cache: &PowerCache) -> Result<ColonPattern> {
    ideal.ensure_proper_nonzero()?;
    if horizon < 2 {
        return Err(Error::InvalidArgument(format!("horizon must be at least 2, got {horizon}")));
    }
    let powers = cache.powers(ideal, horizon)?;
    let entries = (1..horizon as usize)
        .into_par_iter()
        .map(|ell| {
            let colon = powers[ell + 1].colon(ideal)?;
            Ok(if colon == *powers[ell] { ColonRelation::Equal } else { ColonRelation::NotEqual })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ColonPattern { fingerprint: ideal.fingerprint(), horizon, entries })
}

/// `Ass(R/I^s)` for `s = 1..=s_max`.
pub fn ass_powers(
    ideal: &MonomialIdeal,
    s_max: u32,
    cache: &PowerCache,
) -> Result<Vec<(u32, BTreeSet<MonomialPrime>)>> {
    ideal.ensure_proper_nonzero()?;
    let powers = cache.powers(ideal, s_max)?;
    (1..=s_max)
        .into_par_iter()
        .map(|s| Ok((s, associated_primes(&powers[s as usize])?)))
        .collect()
}

/// `(I^r : I^s)` for `r, s ≥ 1`.
pub fn general_colon_power(ideal: &MonomialIdeal, r: u32, s: u32, cache: &PowerCache) -> Result<MonomialIdeal> {
    if r == 0 || s == 0 {
        return Err(Error::InvalidArgument("exponents of a colon power must be positive".into()));
    }
    if ideal.is_zero() {
        return Err(Error::ColonByZero);
    }
    cache.power(ideal, r)?.colon(&*cache.power(ideal, s)?)
}

/// The ring `K[x, y, z]` of the parametric family.
pub fn family_ring() -> Ring {
    Ring::new(["x", "y", "z"]).expect("valid names")
}

/// `(x^{m+3}, y^{m+3}, x^{m+2}y, xy^{m+2}, x^{m+1}y^2z^r)` in `K[x, y, z]`.
pub fn family_lmr(m: u64, r: u64) -> Result<MonomialIdeal> {
    if m == 0 || r == 0 {
        return Err(Error::InvalidArgument("family parameters m and r must be at least 1".into()));
    }
    MonomialIdeal::from_exponents(
        &family_ring(),
        &[&[m + 3, 0, 0], &[0, m + 3, 0], &[m + 2, 1, 0], &[1, m + 2, 0], &[m + 1, 2, r]],
    )
}

/// `x^{m+1} y^{(s-1)(m+1)+s-2}`, the witness to `(L^s : L) ≠ L^{s-1}`.
pub fn spi_witness(m: u64, s: u64) -> Result<Monomial> {
    if s < 2 || s > m + 1 {
        return Err(Error::InvalidArgument(format!("witness exponent s = {s} must lie in [2, {}]", m + 1)));
    }
    Ok(Monomial::new(vec![m + 1, (s - 1) * (m + 1) + s - 2, 0]))
}

/// Whether `u ∈ (L^s : L) \ L^{s-1}`, checked through membership of `u*v`
/// in `L^s` for every generator `v` of `L`.
pub fn is_colon_witness(ideal: &MonomialIdeal, u: &Monomial, s: u32, cache: &PowerCache) -> Result<bool> {
    if s == 0 {
        return Err(Error::InvalidArgument("s must be at least 1".into()));
    }
    ideal.ring().ensure_arity(u.nvars())?;
    if cache.power(ideal, s - 1)?.contains_monomial(u)? {
        return Ok(false);
    }
    let top = cache.power(ideal, s)?;
    for v in ideal.generators() {
        if !top.contains_monomial(&u.mul(v)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn spi_witness_check(m: u64, r: u64, s: u64, cache: &PowerCache) -> Result<bool> {
    let family = family_lmr(m, r)?;
    let u = spi_witness(m, s)?;
    is_colon_witness(&family, &u, s as u32, cache)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;
    use ColonRelation::{Equal as E, NotEqual as N};

    fn pattern(entries: &[ColonRelation]) -> ColonPattern {
        ColonPattern::from_entries("test", entries.to_vec()).unwrap()
    }

    #[test]
    fn spi_from_patterns() {
        assert_eq!(observed_spi(&pattern(&[E, N, N, E])).observed_spi, 4);
        let all_eq = observed_spi(&pattern(&[E, E, E]));
        assert_eq!(all_eq.observed_spi, 1);
        assert!(all_eq.has_strong_persistence_within_horizon());
        assert_eq!(all_eq.trailing_equal_run, 3);
        assert!(!all_eq.certified);
        let r = observed_spi(&pattern(&[N, E, N, E]));
        assert_eq!((r.observed_spi, r.horizon, r.trailing_equal_run), (4, 5, 1));
    }

    #[test]
    fn fluctuation_first_example_shape() {
        let v = detect_fluctuation(&pattern(&[E, N, N, E]));
        assert_eq!(v.case_i, Some((1, 3, 5)));
        assert_eq!(v.case_ii, None);
        assert_eq!(v.verdict, Verdict::CaseI);
    }

    #[test]
    fn fluctuation_second_example_shape() {
        let v = detect_fluctuation(&pattern(&[N, E, N, E]));
        assert_eq!(v.case_i, Some((1, 2, 3)));
        assert_eq!(v.case_ii, Some((2, 3, 4)));
        assert_eq!(v.verdict, Verdict::Both);
    }

    #[test]
    fn no_fluctuation() {
        assert_eq!(detect_fluctuation(&pattern(&[E, E, E, E])).verdict, Verdict::None);
        // the trivial equality at a = 1 already counts as the first "holds"
        let v = detect_fluctuation(&pattern(&[N, N, E, E]));
        assert_eq!((v.case_i, v.case_ii), (Some((1, 2, 4)), None));
        assert!(ColonPattern::from_entries("x", vec![]).is_err());
    }

    #[test]
    fn principal_ideal_pattern() {
        let r = Ring::new(["x", "y"]).unwrap();
        let i = parse_ideal("x^3", &r).unwrap();
        let p = colon_pattern(&i, 5, &PowerCache::new()).unwrap();
        assert!(p.entries.iter().all(|d| d.is_equal()));
    }

    #[test]
    fn pattern_preconditions() {
        let r = Ring::new(["x"]).unwrap();
        let cache = PowerCache::new();
        assert!(colon_pattern(&MonomialIdeal::zero(&r), 4, &cache).is_err());
        assert!(colon_pattern(&MonomialIdeal::unit(&r), 4, &cache).is_err());
        assert!(colon_pattern(&parse_ideal("x", &r).unwrap(), 1, &cache).is_err());
    }

    #[test]
    fn family_generators() {
        let l = family_lmr(1, 1).unwrap();
        assert_eq!(l.to_string(), "x^4, x^3*y, x*y^3, y^4, x^2*y^2*z");
        for m in 1..5 {
            for r in 1..4 {
                assert_eq!(family_lmr(m, r).unwrap().len(), 5);
            }
        }
        assert!(family_lmr(0, 1).is_err());
    }

    #[test]
    fn witness_formula() {
        assert_eq!(spi_witness(2, 2).unwrap(), Monomial::new(vec![3, 3, 0]));
        assert_eq!(spi_witness(3, 4).unwrap(), Monomial::new(vec![4, 14, 0]));
        assert!(spi_witness(2, 4).is_err());
        assert!(spi_witness(2, 1).is_err());
    }

    #[test]
    fn witness_checks() {
        let cache = PowerCache::new();
        assert!(spi_witness_check(2, 1, 2, &cache).unwrap());
        assert!(spi_witness_check(3, 2, 4, &cache).unwrap());
    }

    #[test]
    fn members_of_lower_power_are_not_witnesses() {
        let cache = PowerCache::new();
        let l = family_lmr(2, 1).unwrap();
        for g in cache.power(&l, 2).unwrap().generators() {
            assert!(!is_colon_witness(&l, g, 3, &cache).unwrap());
        }
    }

    #[test]
    fn colon_power_of_equal_exponents_is_unit() {
        let cache = PowerCache::new();
        let l = family_lmr(1, 1).unwrap();
        assert!(general_colon_power(&l, 3, 3, &cache).unwrap().is_unit());
        assert_eq!(general_colon_power(&l, 5, 3, &cache).unwrap(), l.power(2).unwrap());
    }

    #[test]
    fn ass_of_principal_powers() {
        let r = Ring::new(["x", "y"]).unwrap();
        let i = parse_ideal("x^2", &r).unwrap();
        let rows = ass_powers(&i, 3, &PowerCache::new()).unwrap();
        let px: BTreeSet<_> = [MonomialPrime::new(&r, [0]).unwrap()].into_iter().collect();
        assert!(rows.iter().all(|(_, a)| *a == px));
        assert_eq!(rows.iter().map(|(s, _)| *s).collect::<Vec<_>>(), vec![1, 2, 3]);
    }

    #[test]
    fn pattern_json_uses_short_tags() {
        let p = pattern(&[E, N]);
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"{"fingerprint":"test","horizon":3,"entries":["eq","neq"]}"#);
        assert_eq!(serde_json::from_str::<ColonPattern>(&text).unwrap(), p);
    }
}
