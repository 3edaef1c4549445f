//! Expansion, weighting and monomial localization.

use monideal::{
    containment_via_localization, contract_pi, expand, localize, parse_ideal, parse_monomial, weight, ExpansionSpec,
    MonomialPrime, Result, Ring, WeightSpec,
};

fn main() -> Result<()> {
    let r = Ring::indexed("x", 3)?;
    let i = parse_ideal("x1^3, x2*x3^2, x1*x3", &r)?;

    // each x_j becomes a block of fresh variables x_j_1, x_j_2, ...
    let spec = ExpansionSpec::new(&r, vec![3, 1, 2])?;
    let e = expand(&i, &spec)?;
    println!("I* has {} generators in {}:", e.len(), spec.target());
    println!("  {e}");
    let f = parse_monomial("x1_2*x3_1", spec.target())?;
    println!("  {} in I*: {}, pi(f) = {}", f.display(spec.target()), e.contains_monomial(&f)?, contract_pi(&f, &spec)?.display(&r));

    let w = WeightSpec::new(vec![2, 1, 3])?;
    println!("I_W for weights {:?}: {}", w.weights(), weight(&i, &w)?);

    let p = MonomialPrime::new(&r, [0, 2])?;
    let local = localize(&i, &p)?;
    println!("I{p} in {}: {local}", local.ring());

    let j = i.power(2)?;
    println!("I^2 ⊆ I via localization: {}", containment_via_localization(&j, &i)?);
    Ok(())
}
