//! JSON pair files: a field, a dimension and two matrices of scalar literals.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::linalg::MatrixE;
use crate::scalar::{parse_scalar, FieldSpec, Scalar};
use crate::tdp::TriPair;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairFile {
    pub field: FieldSpec,
    pub dimension: usize,
    #[serde(rename = "A")]
    pub a: Vec<Vec<String>>,
    #[serde(rename = "Astar")]
    pub astar: Vec<Vec<String>>,
    #[serde(default)]
    pub meta: Map<String, Value>,
}

impl PairFile {
    pub fn from_pair(pair: &TriPair, meta: Map<String, Value>) -> Self {
        Self {
            field: pair.field().clone(),
            dimension: pair.n(),
            a: pair.a().to_literal_rows(),
            astar: pair.astar().to_literal_rows(),
            meta,
        }
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let file: PairFile = serde_json::from_str(text).map_err(|e| Error::PairFile(e.to_string()))?;
        if let FieldSpec::Specialized { q } = &file.field {
            FieldSpec::specialized(q.clone())?;
        }
        Ok(file)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse_json(&text).map_err(|e| match e {
            Error::PairFile(m) => Error::PairFile(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("pair files always serialize")
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json() + "\n")?;
        Ok(())
    }

    fn matrix(&self, name: &str, rows: &[Vec<String>]) -> Result<MatrixE> {
        let n = self.dimension;
        if rows.len() != n {
            return Err(Error::PairFile(format!("{name} has {} rows, expected {n}", rows.len())));
        }
        let parsed = rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                if row.len() != n {
                    return Err(Error::PairFile(format!(
                        "{name} row {i} has {} entries, expected {n}",
                        row.len()
                    )));
                }
                row.iter()
                    .enumerate()
                    .map(|(j, lit)| {
                        parse_scalar(lit, &self.field)
                            .map_err(|e| Error::PairFile(format!("{name}[{i}][{j}] = {lit:?}: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MatrixE::from_rows(parsed))
    }

    pub fn to_pair(&self) -> Result<TriPair> {
        if self.dimension == 0 {
            return Err(Error::PairFile("dimension must be positive".into()));
        }
        let a = self.matrix("A", &self.a)?;
        let astar = self.matrix("Astar", &self.astar)?;
        TriPair::new(a, astar, self.field.clone())
    }

    /// `meta.c`, when present, as a scalar in the file's field.
    pub fn c_hint(&self) -> Result<Option<Scalar>> {
        match self.meta.get("c") {
            None | Some(Value::Null) => Ok(None),
            Some(Value::String(s)) => parse_scalar(s, &self.field).map(Some),
            Some(Value::Number(n)) => parse_scalar(&n.to_string(), &self.field).map(Some),
            Some(other) => Err(Error::PairFile(format!("meta.c must be a scalar literal, found {other}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::generate_qgeometric;

    #[test]
    fn round_trips_a_generated_pair() {
        let f = FieldSpec::Symbolic;
        let pair = generate_qgeometric(2, &f).unwrap();
        let mut meta = Map::new();
        meta.insert("c".into(), Value::String("q^2".into()));
        let file = PairFile::from_pair(&pair, meta);
        let back = PairFile::parse_json(&file.to_json()).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.to_pair().unwrap(), pair);
        assert_eq!(back.c_hint().unwrap(), Some(f.q_pow(2)));
    }

    #[test]
    fn parses_the_documented_layout() {
        let text = r#"{"field":{"mode":"numeric","q":"3/2"},"dimension":2,
            "A":[["2/3","0"],["1","3/2"]],"Astar":[["3/2","1"],["0","2/3"]],"meta":{}}"#;
        let pair = PairFile::parse_json(text).unwrap().to_pair().unwrap();
        assert_eq!(pair.a().get(0, 0), &Scalar::from_ratio(2, 3));
    }

    #[test]
    fn rejects_malformed_files() {
        let non_square = r#"{"field":{"mode":"symbolic"},"dimension":2,"A":[["1","0"]],"Astar":[["1","0"],["0","1"]]}"#;
        assert!(matches!(PairFile::parse_json(non_square).unwrap().to_pair(), Err(Error::PairFile(_))));
        let bad_q = r#"{"field":{"mode":"numeric","q":"1"},"dimension":1,"A":[["1"]],"Astar":[["1"]]}"#;
        assert!(PairFile::parse_json(bad_q).is_err());
        let bad_entry = r#"{"field":{"mode":"symbolic"},"dimension":1,"A":[["q+"]],"Astar":[["1"]]}"#;
        assert!(PairFile::parse_json(bad_entry).unwrap().to_pair().is_err());
        let symbolic_in_numeric = r#"{"field":{"mode":"numeric","q":"2"},"dimension":1,"A":[["q"]],"Astar":[["1"]]}"#;
        let parsed = PairFile::parse_json(symbolic_in_numeric).unwrap().to_pair().unwrap();
        assert_eq!(parsed.a().get(0, 0), &Scalar::from_int(2));
    }
}
