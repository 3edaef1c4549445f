//! How the associated primes of `L^s` change with `s`.

use monideal::{ass_powers, family_lmr, PowerCache, Result};

fn main() -> Result<()> {
    let cache = PowerCache::new();
    for m in 1..=3 {
        let l = family_lmr(m, 1)?;
        println!("m={m}: L = {l}");
        for (s, ass) in ass_powers(&l, m as u32 + 2, &cache)? {
            let primes: Vec<String> = ass.iter().map(|p| p.to_string()).collect();
            println!("  Ass(L^{s}) = {{{}}}", primes.join(", "));
        }
    }
    Ok(())
}
