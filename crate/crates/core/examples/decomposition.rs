//! Irreducible decomposition, associated and minimal primes.

use monideal::{associated_primes, family_lmr, irreducible_decomposition, minimal_primes, Result};

fn main() -> Result<()> {
    let l = family_lmr(1, 1)?;
    println!("L = {l}");

    let d = irreducible_decomposition(&l)?;
    for c in d.components() {
        println!("  component {c}  radical {}", c.radical());
    }
    assert_eq!(d.recompose()?, l);

    for (p, q) in d.primary_components()? {
        println!("  {p}-primary part: {q}");
    }
    println!("Ass(L) = {:?}", associated_primes(&l)?);
    println!("Min(L) = {:?}", minimal_primes(&l)?);
    Ok(())
}
