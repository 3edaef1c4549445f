//! Sums, products, powers, colons, intersections and radicals.

use monideal::{parse_ideal, parse_ring, Result};

fn main() -> Result<()> {
    let ring = parse_ring("x,y,z")?;
    let i = parse_ideal("x^2*y, y^3, x*z", &ring)?;
    let j = parse_ideal("x^3, y*z", &ring)?;

    println!("I         = {i}");
    println!("J         = {j}");
    println!("I + J     = {}", i.sum(&j)?);
    println!("I J       = {}", i.product(&j)?);
    println!("I^3       = {}", i.power(3)?);
    println!("I ∩ J     = {}", i.intersect(&j)?);
    println!("(I : J)   = {}", i.colon(&j)?);
    println!("rad(I)    = {}", i.radical());
    println!("J ⊆ I + J : {}", i.sum(&j)?.contains(&j)?);
    Ok(())
}
