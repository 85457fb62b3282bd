//! Ring presentations with canonically rendered relation strings.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::sym::SymPoly;
use crate::{Error, GradedDims, Result};

/// A generator of a presented ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PresGenerator {
    pub name: String,
    pub degree: u32,
    /// Additive order of the generator: 0 for a free (infinite order)
    /// generator, otherwise the prime annihilating it.
    #[serde(rename = "order")]
    pub additive_order: u32,
}

/// A graded ring presentation: generators plus relation strings in the
/// canonical rendering of [`SymPoly`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingPresentation {
    /// 0 for integral coefficients, otherwise the prime field order.
    pub coefficient: u32,
    pub generators: Vec<PresGenerator>,
    pub relations: Vec<String>,
    /// Graded dimensions of the presented object over the coefficient
    /// field, when meaningful.
    pub graded_dims: Option<GradedDims>,
}

impl RingPresentation {
    pub fn degree_map(&self) -> BTreeMap<String, u32> {
        self.generators
            .iter()
            .map(|g| (g.name.clone(), g.degree))
            .collect()
    }

    /// Check that every relation string parses back (round-trips) to a
    /// homogeneous polynomial over the declared generators.
    pub fn validate(&self) -> Result<()> {
        let degrees = self.degree_map();
        for rel in &self.relations {
            let poly = SymPoly::parse(rel)?;
            if poly.render(&degrees) != *rel {
                return Err(Error::invariant(
                    "RingPresentation::validate",
                    format!("relation {rel:?} is not in canonical form"),
                ));
            }
            if poly.homogeneous_degree(&degrees)?.is_none() {
                return Err(Error::invariant(
                    "RingPresentation::validate",
                    format!("relation {rel:?} is zero"),
                ));
            }
        }
        Ok(())
    }
}
