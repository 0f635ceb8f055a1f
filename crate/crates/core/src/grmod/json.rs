//! JSON exchange format for modules and maps.
//!
//! A module is `{"p": 32003, "nvars": 2, "gens": [0, -1], "rels": [["x0^2", "x1"]]}`:
//! generator degrees plus one polynomial string per generator in each relation row.
//! A map adds `source`, `target` and one `matrix` row per source generator.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{GradedMap, GradedModule};
use crate::error::{Error, Result};
use crate::groebner::{FreeElement, FreeModule};
use crate::ring::PolyRing;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nvars: Option<usize>,
    pub gens: Vec<i64>,
    #[serde(default)]
    pub rels: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nvars: Option<usize>,
    pub source: ModuleJson,
    pub target: ModuleJson,
    pub matrix: Vec<Vec<String>>,
}

impl ModuleJson {
    /// Ring named by the document, falling back to `default` for missing fields.
    pub fn ring(&self, default: Option<PolyRing>) -> Result<PolyRing> {
        let p = self.p.or(default.map(|r| r.characteristic()));
        let n = self.nvars.or(default.map(|r| r.nvars()));
        match (p, n) {
            (Some(p), Some(n)) => PolyRing::new(p, n),
            _ => Err(Error::Parse("module JSON needs p and nvars".into())),
        }
    }

    pub fn to_module(&self, ring: PolyRing) -> Result<GradedModule> {
        let free = FreeModule::new(self.gens.clone());
        let mut rels = Vec::new();
        for (j, row) in self.rels.iter().enumerate() {
            if row.len() != free.rank() {
                return Err(Error::Parse(format!(
                    "relation {j} has {} entries for {} generators",
                    row.len(),
                    free.rank()
                )));
            }
            let comps = row.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
            if comps.iter().all(|c| c.is_zero()) {
                continue;
            }
            rels.push(FreeElement::new(&free, comps)?);
        }
        GradedModule::new(ring, free, rels)
    }

    pub fn from_module(m: &GradedModule) -> Self {
        ModuleJson {
            p: Some(m.ring().characteristic()),
            nvars: Some(m.ring().nvars()),
            gens: m.generator_degrees().to_vec(),
            rels: m.relations().iter().map(|v| v.to_strings(m.ring())).collect(),
        }
    }
}

impl GradedModule {
    pub fn from_json(s: &str, default: Option<PolyRing>) -> Result<Self> {
        let doc: ModuleJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        doc.to_module(doc.ring(default)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ModuleJson::from_module(self)).expect("module JSON serializes")
    }
}

impl MapJson {
    pub fn to_map(&self, default: Option<PolyRing>) -> Result<GradedMap> {
        let ring = ModuleJson {
            p: self.p.or(self.source.p),
            nvars: self.nvars.or(self.source.nvars),
            gens: Vec::new(),
            rels: Vec::new(),
        }
        .ring(default)?;
        let source = Arc::new(self.source.to_module(ring)?);
        let target = Arc::new(self.target.to_module(ring)?);
        let rows: Vec<Vec<&str>> = self.matrix.iter().map(|r| r.iter().map(String::as_str).collect()).collect();
        GradedMap::from_strings(source, target, &rows)
    }

    pub fn from_map(f: &GradedMap) -> Self {
        MapJson {
            p: Some(f.ring().characteristic()),
            nvars: Some(f.ring().nvars()),
            source: ModuleJson::from_module(f.source()),
            target: ModuleJson::from_module(f.target()),
            matrix: f.matrix_strings(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let s = r#"{"p":32003,"nvars":2,"gens":[0,-1],"rels":[["x0^2","x1^3"],["0","x0^3"]]}"#;
        let m = GradedModule::from_json(s, None).unwrap();
        assert_eq!(m.generator_degrees(), &[0, -1]);
        let back = GradedModule::from_json(&m.to_json(), None).unwrap();
        assert!(back.same_presentation(&m));
    }

    #[test]
    fn rejects_bad_rows() {
        let r = PolyRing::new(7, 2).unwrap();
        assert!(GradedModule::from_json(r#"{"gens":[0],"rels":[["x0","x1"]]}"#, Some(r)).is_err());
        assert!(GradedModule::from_json(r#"{"gens":[0,0],"rels":[["x0","x1^2"]]}"#, Some(r)).is_err());
        assert!(GradedModule::from_json(r#"{"gens":[0]}"#, None).is_err());
    }

    #[test]
    fn map_round_trip() {
        let s = r#"{"p":32003,"nvars":2,"source":{"gens":[1]},"target":{"gens":[0],"rels":[["x0^2"]]},"matrix":[["x1"]]}"#;
        let doc: MapJson = serde_json::from_str(s).unwrap();
        let f = doc.to_map(None).unwrap();
        assert_eq!(f.matrix_strings(), vec![vec!["x1"]]);
        let again = MapJson::from_map(&f).to_map(None).unwrap();
        assert!(again.equals(&f));
    }
}
