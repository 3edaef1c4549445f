//! Exact computation with monomial ideals.
//!
//! Ideals are stored by their minimal generators in a canonical order, so
//! equality of ideals is equality of values. On top of the basic arithmetic
//! (products, powers, colons, intersections, radicals) the crate provides
//! irreducible decompositions and associated primes, the expansion,
//! weighting and localization operators, and scans of the colon powers
//! `(I^{ℓ+1} : I)` that report an observed strong persistence index and
//! detect fluctuation.
//!
//! ```
//! use monideal::{parse_ideal, parse_ring, colon_pattern, observed_spi, PowerCache};
//!
//! let ring = parse_ring("x,y").unwrap();
//! let ideal = parse_ideal("x^6, y^6, x*y^5, x^5*y, x^4*y^4", &ring).unwrap();
//! let pattern = colon_pattern(&ideal, 5, &PowerCache::new()).unwrap();
//! assert_eq!(pattern.to_string(), "[eq, neq, neq, eq]");
//! assert_eq!(observed_spi(&pattern).observed_spi, 4);
//! ```
//!
//! The `examples/` directory has one runnable program per capability, and
//! the `monideal` binary exposes the same operations on the command line.

pub mod cache;
pub mod cli;
pub mod corpus;
pub mod decomposition;
pub mod error;
pub mod ideal;
pub mod json;
pub mod monomial;
pub mod operators;
pub mod parse;
pub mod persistence;
pub mod prime;
pub mod props;
pub mod ring;

pub use cache::PowerCache;
pub use decomposition::{
    associated_primes, irreducible_decomposition, minimal_primes, Decomposition, IrreducibleComponent,
};
pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use json::{ideal_from_json, ideal_to_json, IdealDoc};
pub use monomial::Monomial;
pub use operators::{
    containment_via_localization, contract_pi, embed_localized, expand, localization_ring, localize, weight,
    ExpansionSpec, WeightSpec,
};
pub use parse::{parse_ideal, parse_monomial, parse_prime, parse_ring, ParseError};
pub use persistence::{
    ass_powers, colon_pattern, detect_fluctuation, family_lmr, family_ring, general_colon_power,
    is_colon_witness, observed_spi, spi_witness, spi_witness_check, ColonPattern, ColonRelation,
    FluctuationVerdict, SpiReport, Verdict,
};
pub use prime::MonomialPrime;
pub use ring::Ring;
