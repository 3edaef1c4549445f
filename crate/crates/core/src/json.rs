//! JSON wire format.
//!
//! Ideals serialize as `{"format": 1, "ring": [names], "generators": [[exponents]]}`
//! with generators in canonical order. Primes serialize as sorted lists of
//! variable names.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::ring::Ring;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealDoc {
    pub format: u32,
    pub ring: Vec<String>,
    pub generators: Vec<Vec<u64>>,
}

impl From<&MonomialIdeal> for IdealDoc {
    fn from(ideal: &MonomialIdeal) -> Self {
        Self {
            format: FORMAT_VERSION,
            ring: ideal.ring().names().to_vec(),
            generators: ideal.generators().iter().map(|g| g.exponents().to_vec()).collect(),
        }
    }
}

impl TryFrom<IdealDoc> for MonomialIdeal {
    type Error = Error;

    fn try_from(doc: IdealDoc) -> Result<Self> {
        if doc.format != FORMAT_VERSION {
            return Err(Error::Schema(format!("unsupported format version {}", doc.format)));
        }
        let ring = Ring::new(doc.ring).map_err(|e| Error::Schema(e.to_string()))?;
        let n = ring.nvars();
        if let Some(g) = doc.generators.iter().find(|g| g.len() != n) {
            return Err(Error::Schema(format!("generator {g:?} does not have {n} exponents")));
        }
        MonomialIdeal::minimalize(&ring, doc.generators.into_iter().map(Monomial::new))
    }
}

pub fn ideal_to_json(ideal: &MonomialIdeal) -> String {
    serde_json::to_string(&IdealDoc::from(ideal)).expect("plain data")
}

pub fn ideal_from_json(text: &str) -> Result<MonomialIdeal> {
    let doc: IdealDoc = serde_json::from_str(text)?;
    doc.try_into()
}
