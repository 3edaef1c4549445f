//! Text and JSON formats, parse errors, and the on-disk power cache.

use monideal::{ideal_from_json, ideal_to_json, parse_ideal, parse_ring, PowerCache, Result};

fn main() -> Result<()> {
    let ring = parse_ring("x, y")?;
    let i = parse_ideal("y^2*x, x^3, x*y^2*x", &ring)?;
    println!("canonical text: {i}");

    let json = ideal_to_json(&i);
    println!("json:           {json}");
    assert_eq!(ideal_from_json(&json)?, i);

    for bad in ["x^", "x y", "x^2, q"] {
        match parse_ideal(bad, &ring) {
            Ok(_) => unreachable!(),
            Err(e) => println!("{bad:>8} -> {e}"),
        }
    }

    let dir = std::env::temp_dir().join("monideal-example-cache");
    let cache = PowerCache::with_dir(&dir)?;
    let cube = cache.power(&i, 3)?;
    println!("I^3 = {cube} (cached under {})", dir.display());
    let again = PowerCache::with_dir(&dir)?;
    again.power(&i, 3)?;
    println!("second cache: computed {}, loaded {}", again.computed(), again.loaded());
    Ok(())
}
