//! JSON input and output documents.

use anyhow::{bail, Context};
use lattice_size::{IntVec, LatticePolytope, SizeCertificate};
use serde::{Deserialize, Serialize};

/// `{"dim": 2, "points": [[0,0],[4,1],[5,2]], "name": "triangle"}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeDocument {
    pub dim: usize,
    pub points: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl PolytopeDocument {
    pub fn parse(text: &str) -> anyhow::Result<Self> {
        let doc: Self = serde_json::from_str(text).context("invalid polytope document")?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn validate(&self) -> anyhow::Result<()> {
        if self.points.is_empty() {
            bail!("polytope document has no points");
        }
        if let Some((i, p)) = self.points.iter().enumerate().find(|(_, p)| p.len() != self.dim) {
            bail!("point {i} has {} coordinates, expected {}", p.len(), self.dim);
        }
        Ok(())
    }

    pub fn polytope(&self) -> anyhow::Result<LatticePolytope> {
        self.validate()?;
        let pts = self
            .points
            .iter()
            .map(|p| IntVec::new(p))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LatticePolytope::new(pts)?)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub name: Option<String>,
    pub target: String,
    pub value: i64,
    pub matrix: Vec<Vec<i64>>,
    pub translation: Vec<i64>,
    pub algorithm: String,
    pub verified: bool,
    pub elapsed_ms: f64,
}

impl ResultDocument {
    pub fn new(
        name: Option<String>,
        cert: &SizeCertificate,
        verified: bool,
        elapsed_ms: f64,
    ) -> Self {
        Self {
            name,
            target: cert.target.as_str().to_string(),
            value: cert.value,
            matrix: cert.map.matrix().to_nested(),
            translation: cert.map.translation().as_slice().to_vec(),
            algorithm: cert.algorithm.as_str().to_string(),
            verified,
            elapsed_ms,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_reject() {
        let doc = PolytopeDocument::parse(r#"{"dim":2,"points":[[0,0],[4,1],[5,2]],"name":"t"}"#).unwrap();
        assert_eq!(doc.polytope().unwrap().vertices().unwrap().len(), 3);
        assert!(PolytopeDocument::parse(r#"{"dim":2,"points":[]}"#).is_err());
        assert!(PolytopeDocument::parse(r#"{"dim":2,"points":[[0,0],[1]]}"#).is_err());
        assert!(PolytopeDocument::parse("[1,2]").is_err());
    }

    #[test]
    fn output_field_order() {
        let doc = PolytopeDocument {
            dim: 1,
            points: vec![vec![3]],
            name: None,
        };
        assert_eq!(serde_json::to_string(&doc).unwrap(), r#"{"dim":1,"points":[[3]]}"#);
    }
}
