//! Named-blade JSON form: `[["1", 3.0], ["e12", -1.5], ...]`.
//!
//! Only nonzero coefficients are written, in display order (by grade, then
//! by basis indices).

use std::sync::Arc;

use serde_json::Value;

use crate::error::{PgaError, Result};

use super::algebra::Algebra;
use super::multivector::Multivector;

impl serde::Serialize for Multivector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let terms = self.named_terms();
        let mut seq = serializer.serialize_seq(Some(terms.len()))?;
        for t in &terms {
            seq.serialize_element(t)?;
        }
        seq.end()
    }
}

impl Multivector {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("multivector terms are always serializable")
    }

    pub fn from_json(alg: &Arc<Algebra>, value: &Value) -> Result<Self> {
        let pairs: Vec<(String, f64)> = serde_json::from_value(value.clone())
            .map_err(|e| PgaError::InvalidParameter(format!("multivector JSON: {e}")))?;
        let terms: Vec<(&str, f64)> = pairs.iter().map(|(n, c)| (n.as_str(), *c)).collect();
        Self::from_named(alg, &terms)
    }

    pub fn from_json_str(alg: &Arc<Algebra>, s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s)
            .map_err(|e| PgaError::InvalidParameter(format!("multivector JSON: {e}")))?;
        Self::from_json(alg, &v)
    }
}
