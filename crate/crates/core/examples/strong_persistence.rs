//! Observed strong persistence index of the parametric family, with the
//! explicit witnesses to `(L^s : L) ≠ L^{s-1}`.

use monideal::{colon_pattern, family_lmr, observed_spi, spi_witness, spi_witness_check, PowerCache, Result};

fn main() -> Result<()> {
    let cache = PowerCache::new();
    for m in 1..=3u64 {
        for r in 1..=2u64 {
            let l = family_lmr(m, r)?;
            let pattern = colon_pattern(&l, m as u32 + 3, &cache)?;
            let report = observed_spi(&pattern);
            println!("m={m} r={r}: {pattern} -> {report}");
            for s in 2..=m + 1 {
                let u = spi_witness(m, s)?;
                println!("    s={s}: {} witness holds: {}", u.display(l.ring()), spi_witness_check(m, r, s, &cache)?);
            }
        }
    }
    println!("powers computed: {}", cache.computed());
    Ok(())
}
