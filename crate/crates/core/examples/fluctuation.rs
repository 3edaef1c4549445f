//! Colon-power patterns that hold, fail and hold again (or the reverse).

use monideal::corpus::{FLUCT_I, FLUCT_J, FLUCT_L};
use monideal::{colon_pattern, detect_fluctuation, observed_spi, parse_ideal, parse_ring, PowerCache, Result};

fn main() -> Result<()> {
    let cache = PowerCache::new();
    let xy = parse_ring("x,y")?;
    let xyz = parse_ring("x,y,z")?;
    for (text, ring) in [(FLUCT_I, &xy), (FLUCT_J, &xy), (FLUCT_L, &xyz)] {
        let ideal = parse_ideal(text, ring)?;
        let pattern = colon_pattern(&ideal, 5, &cache)?;
        let v = detect_fluctuation(&pattern);
        println!("{ideal}");
        println!("  pattern {pattern}, observed spi {}", observed_spi(&pattern).observed_spi);
        println!("  verdict {:?}, case (i) {:?}, case (ii) {:?}", v.verdict, v.case_i, v.case_ii);
    }
    Ok(())
}
