//! Cayley-table JSON files: `{"name": .., "order": n, "table": [[..]; n]}`
//! with 0-based element indices.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use supergraph_core::{catalog, Group};

#[derive(Debug, thiserror::Error)]
pub enum IngestError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed Cayley file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("declared order {declared} but the table has {rows} rows")]
    OrderMismatch { declared: usize, rows: usize },
    #[error(transparent)]
    Group(#[from] supergraph_core::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyFile {
    pub name: String,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

impl CayleyFile {
    pub fn from_group(g: &Group) -> Result<CayleyFile, IngestError> {
        Ok(CayleyFile { name: g.name().to_string(), order: g.order(), table: g.table_rows()? })
    }

    pub fn into_group(self) -> Result<Group, IngestError> {
        if self.order != self.table.len() {
            return Err(IngestError::OrderMismatch { declared: self.order, rows: self.table.len() });
        }
        Ok(Group::from_table(self.name, &self.table)?)
    }
}

pub fn parse_group(json: &str) -> Result<Group, IngestError> {
    serde_json::from_str::<CayleyFile>(json)?.into_group()
}

pub fn load_group(path: &Path) -> Result<Group, IngestError> {
    let text =
        fs::read_to_string(path).map_err(|source| IngestError::Io { path: path.display().to_string(), source })?;
    parse_group(&text)
}

/// A catalog id such as `D4` or `S3xC2`, or a path to a Cayley file.
pub fn resolve_group(selector: &str) -> Result<Group, IngestError> {
    let path = Path::new(selector);
    if selector.ends_with(".json") || path.is_file() {
        load_group(path)
    } else {
        Ok(catalog::build_id(selector)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use supergraph_core::Axiom;

    #[test]
    fn round_trip() {
        let g = catalog::dihedral(4).unwrap();
        let file = CayleyFile::from_group(&g).unwrap();
        let text = serde_json::to_string(&file).unwrap();
        let h = parse_group(&text).unwrap();
        assert_eq!(h.name(), "D4");
        assert_eq!(h.table_rows().unwrap(), g.table_rows().unwrap());
    }

    #[test]
    fn reports_axiom() {
        let err = parse_group(r#"{"name":"bad","order":2,"table":[[0,1],[1,1]]}"#).unwrap_err();
        assert!(matches!(err, IngestError::Group(supergraph_core::Error::Axiom { axiom: Axiom::Inverse, .. })));
        let err = parse_group(r#"{"name":"bad","order":3,"table":[[0,1],[1,0]]}"#).unwrap_err();
        assert!(matches!(err, IngestError::OrderMismatch { declared: 3, rows: 2 }));
    }
}
