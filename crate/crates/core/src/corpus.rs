//! Regression corpus of worked examples, shared by the `selftest`
//! subcommand and the round-trip tests.

use std::collections::BTreeSet;
use std::time::Instant;

use crate::cache::PowerCache;
use crate::decomposition::{associated_primes, irreducible_decomposition};
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::operators::{expand, localize, weight, ExpansionSpec, WeightSpec};
use crate::parse::{parse_ideal, parse_ring};
use crate::persistence::{
    ass_powers, colon_pattern, detect_fluctuation, family_lmr, observed_spi, spi_witness_check, ColonRelation,
};
use crate::prime::MonomialPrime;
use crate::ring::Ring;

pub const FLUCT_I: &str = "x^6, y^6, x*y^5, x^5*y, x^4*y^4";
pub const FLUCT_J: &str = "x^7, y^7, x^2*y^5, x^5*y^2";
pub const FLUCT_L: &str = "x^8*y^5, x^7*y^9, x^6*y^10, x^4*y^11, x^13*y^3*z^2, x^8*y^4*z^2, x^6*y^9*z^2, \
                           x^13*y^2*z^3, x^4*y^9*z^3, x^4*y^4*z^5, y^5*z^7, x^13*z^8";

pub const EXPANSION_SOURCE: &str = "x1^3, x2*x3^2, x1*x3";
pub const EXPANSION_TUPLE: [usize; 3] = [3, 1, 2];
pub const EXPANSION_RESULT: &str = "x1_1^3, x1_2^3, x1_3^3, x1_1^2*x1_2, x1_1^2*x1_3, x1_2^2*x1_1, x1_2^2*x1_3, \
                                    x1_3^2*x1_1, x1_3^2*x1_2, x1_1*x1_2*x1_3, x2_1*x3_1^2, x2_1*x3_2^2, \
                                    x2_1*x3_1*x3_2, x1_1*x3_1, x1_1*x3_2, x1_2*x3_1, x1_2*x3_2, x1_3*x3_1, x1_3*x3_2";

pub const WEIGHT_SOURCE: &str = "x1^2*x3*x4^5, x2^4*x4^3*x5^2, x1*x3^2, x4*x5^3";
pub const WEIGHTS: [u64; 5] = [1, 4, 2, 3, 2];
pub const WEIGHT_RESULT: &str = "x1^2*x3^2*x4^15, x2^16*x4^9*x5^4, x1*x3^4, x4^3*x5^6";

/// The five irreducible components of the family ideal at `m = r = 1`.
pub const FAMILY_COMPONENTS: [&str; 5] = ["x, y^4", "x^4, y", "x^2, y^3", "x^3, y^2", "x^3, y^3, z"];

/// Every ideal of the corpus, with its ring.
pub fn ideals() -> Vec<(String, MonomialIdeal)> {
    let ring = |t: &str| parse_ring(t).expect("corpus ring");
    let ideal = |t: &str, r: &Ring| parse_ideal(t, r).expect("corpus ideal");
    let xy = ring("x,y");
    let xyz = ring("x,y,z");
    let x3 = Ring::indexed("x", 3).expect("ring");
    let x5 = Ring::indexed("x", 5).expect("ring");
    let spec = ExpansionSpec::new(&x3, EXPANSION_TUPLE.to_vec()).expect("spec");

    let mut out = vec![
        ("fluctuation I".to_string(), ideal(FLUCT_I, &xy)),
        ("fluctuation J".to_string(), ideal(FLUCT_J, &xy)),
        ("fluctuation L".to_string(), ideal(FLUCT_L, &xyz)),
        ("expansion source".to_string(), ideal(EXPANSION_SOURCE, &x3)),
        ("expansion result".to_string(), ideal(EXPANSION_RESULT, spec.target())),
        ("weighting source".to_string(), ideal(WEIGHT_SOURCE, &x5)),
        ("weighting result".to_string(), ideal(WEIGHT_RESULT, &x5)),
        ("zero".to_string(), MonomialIdeal::zero(&xy)),
        ("unit".to_string(), MonomialIdeal::unit(&xy)),
    ];
    for (k, c) in FAMILY_COMPONENTS.iter().enumerate() {
        out.push((format!("family component {}", k + 1), ideal(c, &xyz)));
    }
    for m in 1..=3 {
        for r in 1..=2 {
            let l = family_lmr(m, r).expect("family");
            out.push((format!("family m={m} r={r}"), l.clone()));
            out.push((format!("family m={m} r={r} squared"), l.power(2).expect("power")));
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

fn check(name: &str, f: impl FnOnce() -> Result<(bool, String)>) -> CheckOutcome {
    let start = Instant::now();
    let (passed, detail) = match f() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    CheckOutcome { name: name.to_string(), passed, detail, millis: start.elapsed().as_millis() }
}

fn eqs(text: &str) -> Vec<ColonRelation> {
    text.split(',')
        .map(|t| if t.trim() == "eq" { ColonRelation::Equal } else { ColonRelation::NotEqual })
        .collect()
}

/// Runs every worked example and reports one outcome per check.
pub fn run_selftest(cache: &PowerCache) -> Vec<CheckOutcome> {
    let xy = parse_ring("x,y").expect("ring");
    let xyz = parse_ring("x,y,z").expect("ring");
    let mut out = Vec::new();

    for (name, ring, text, expected) in [
        ("fluctuation I pattern", &xy, FLUCT_I, "eq,neq,neq,eq"),
        ("fluctuation J pattern", &xy, FLUCT_J, "neq,eq,neq,eq"),
        ("fluctuation L pattern", &xyz, FLUCT_L, "eq,neq,eq,eq"),
    ] {
        out.push(check(name, || {
            let p = colon_pattern(&parse_ideal(text, ring)?, 5, cache)?;
            Ok((p.entries == eqs(expected), p.to_string()))
        }));
    }

    out.push(check("fluctuation J case (ii) witness", || {
        let p = colon_pattern(&parse_ideal(FLUCT_J, &xy)?, 5, cache)?;
        let v = detect_fluctuation(&p);
        Ok((v.case_ii == Some((2, 3, 4)), format!("{:?}", v.case_ii)))
    }));

    for m in 1..=3u64 {
        for r in 1..=2u64 {
            out.push(check(&format!("family m={m} r={r} observed spi"), || {
                let p = colon_pattern(&family_lmr(m, r)?, m as u32 + 3, cache)?;
                let spi = observed_spi(&p).observed_spi;
                let shape = p.entries.iter().enumerate().all(|(i, d)| d.is_equal() == (i as u64 + 1 > m));
                Ok((spi == m as u32 + 1 && shape, format!("spi {spi}, pattern {p}")))
            }));
            out.push(check(&format!("family m={m} r={r} witnesses"), || {
                let all = (2..=m + 1)
                    .map(|s| spi_witness_check(m, r, s, cache))
                    .collect::<Result<Vec<_>>>()?;
                Ok((all.iter().all(|&b| b), format!("{all:?}")))
            }));
            out.push(check(&format!("family m={m} r={r} Ass of powers"), || {
                let rows = ass_powers(&family_lmr(m, r)?, m as u32 + 2, cache)?;
                let pxy = MonomialPrime::new(&xyz, [0, 1])?;
                let max = MonomialPrime::maximal(&xyz);
                let ok = rows.iter().all(|(s, ass)| {
                    let expected: BTreeSet<_> = if u64::from(*s) <= m {
                        [pxy.clone(), max.clone()].into_iter().collect()
                    } else {
                        [pxy.clone()].into_iter().collect()
                    };
                    *ass == expected
                });
                let detail = rows.iter().map(|(s, a)| format!("{s}:{}", a.len())).collect::<Vec<_>>().join(" ");
                Ok((ok, detail))
            }));
        }
    }

    out.push(check("family m=1 r=1 decomposition", || {
        let l = family_lmr(1, 1)?;
        let mut acc = MonomialIdeal::unit(&xyz);
        for c in FAMILY_COMPONENTS {
            acc = acc.intersect(&parse_ideal(c, &xyz)?)?;
        }
        let d = irreducible_decomposition(&l)?;
        let ass = associated_primes(&l)?;
        let expected: BTreeSet<_> = [MonomialPrime::new(&xyz, [0, 1])?, MonomialPrime::maximal(&xyz)].into_iter().collect();
        Ok((acc == l && ass == expected && d.recompose()? == l, format!("{} components", d.components().len())))
    }));

    out.push(check("expansion (3,1,2)", || {
        let x3 = Ring::indexed("x", 3)?;
        let spec = ExpansionSpec::new(&x3, EXPANSION_TUPLE.to_vec())?;
        let e = expand(&parse_ideal(EXPANSION_SOURCE, &x3)?, &spec)?;
        let expected = parse_ideal(EXPANSION_RESULT, spec.target())?;
        Ok((e == expected && e.len() == 19, format!("{} generators", e.len())))
    }));

    out.push(check("weighting (1,4,2,3,2)", || {
        let x5 = Ring::indexed("x", 5)?;
        let w = weight(&parse_ideal(WEIGHT_SOURCE, &x5)?, &WeightSpec::new(WEIGHTS.to_vec())?)?;
        Ok((w == parse_ideal(WEIGHT_RESULT, &x5)?, w.to_string()))
    }));

    out.push(check("family localized at (x,y)", || {
        let mut total = true;
        for m in 1..=3u64 {
            let l = family_lmr(m, 1)?;
            let loc = localize(&l, &MonomialPrime::new(&xyz, [0, 1])?)?;
            let xy_ring = loc.ring().clone();
            let expected = MonomialIdeal::from_exponents(
                &xy_ring,
                &[&[m + 3, 0], &[0, m + 3], &[m + 2, 1], &[1, m + 2], &[m + 1, 2]],
            )?;
            total &= loc == expected;
        }
        Ok((total, "m = 1..3".to_string()))
    }));

    out
}
