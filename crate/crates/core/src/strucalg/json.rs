use serde::{Deserialize, Serialize};

use super::{InvolutionMap, StructureAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::rational::Rational;

/// On-disk form of an algebra, optionally with an involution.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub name: String,
    pub dim: usize,
    pub labels: Vec<String>,
    pub unit: Option<Vec<Rational>>,
    pub structure: Vec<(usize, usize, usize, Rational)>,
    pub involution: Option<Vec<(usize, usize, Rational)>>,
}

impl AlgebraDocument {
    pub fn from_algebra(a: &StructureAlgebra, involution: Option<&InvolutionMap>) -> Self {
        AlgebraDocument {
            name: a.name().to_string(),
            dim: a.dim(),
            labels: a.labels().to_vec(),
            unit: a.unit().map(|u| u.to_dense(a.dim())),
            structure: a
                .structure_entries()
                .map(|(i, j, k, c)| (i, j, k, c.clone()))
                .collect(),
            involution: involution.map(|inv| {
                let mut entries: Vec<(usize, usize, Rational)> = inv
                    .images()
                    .iter()
                    .enumerate()
                    .flat_map(|(col, v)| v.iter().map(move |(row, c)| (row, col, c.clone())))
                    .collect();
                entries.sort_by_key(|(r, c, _)| (*r, *c));
                entries
            }),
        }
    }

    pub fn build(&self) -> Result<(StructureAlgebra, Option<InvolutionMap>)> {
        if self.labels.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for dimension {}",
                self.labels.len(),
                self.dim
            )));
        }
        let unit = match &self.unit {
            Some(u) if u.len() != self.dim => {
                return Err(Error::DimensionMismatch(format!(
                    "unit has {} entries",
                    u.len()
                )))
            }
            Some(u) => Some(Vector::from_dense(u)),
            None => None,
        };
        let a = StructureAlgebra::new(
            self.name.clone(),
            self.labels.clone(),
            self.structure.iter().cloned(),
            unit,
        )?;
        let inv = match &self.involution {
            None => None,
            Some(entries) => {
                let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.dim];
                for (row, col, c) in entries {
                    if *row >= self.dim || *col >= self.dim {
                        return Err(Error::DimensionMismatch(format!(
                            "involution entry ({row}, {col})"
                        )));
                    }
                    cols[*col].push((*row, c.clone()));
                }
                let images = cols.into_iter().map(Vector::from_pairs).collect();
                Some(InvolutionMap::new(&a, images)?)
            }
        };
        Ok((a, inv))
    }
}

pub fn algebra_to_json(a: &StructureAlgebra, involution: Option<&InvolutionMap>) -> String {
    serde_json::to_string_pretty(&AlgebraDocument::from_algebra(a, involution))
        .expect("serializable")
}

pub fn algebra_from_json(text: &str) -> Result<(StructureAlgebra, Option<InvolutionMap>)> {
    let doc: AlgebraDocument = serde_json::from_str(text)?;
    doc.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strucalg::{
        grassmann_algebra, involution_transpose, matrix_algebra, upper_triangular,
    };

    #[test]
    fn round_trip_is_bit_identical() {
        let m2 = matrix_algebra(2);
        let t = involution_transpose(&m2, 2).unwrap();
        let s1 = algebra_to_json(&m2, Some(&t));
        let (a, inv) = algebra_from_json(&s1).unwrap();
        assert_eq!(a, m2);
        assert_eq!(inv.as_ref(), Some(&t));
        let s2 = algebra_to_json(&a, inv.as_ref());
        assert_eq!(s1, s2);

        for alg in [grassmann_algebra(3), upper_triangular(3, true)] {
            let s = algebra_to_json(&alg, None);
            let (b, none) = algebra_from_json(&s).unwrap();
            assert!(none.is_none());
            assert_eq!(algebra_to_json(&b, None), s);
        }
    }

    #[test]
    fn format_shape() {
        let s = algebra_to_json(&grassmann_algebra(1), None);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["dim"], 2);
        assert_eq!(v["unit"], serde_json::json!(["1", "0"]));
        assert_eq!(v["structure"][0], serde_json::json!([0, 0, 0, "1"]));
        assert!(v["involution"].is_null());
    }

    #[test]
    fn malformed_documents() {
        assert!(matches!(algebra_from_json("{"), Err(Error::Parse { .. })));
        let bad =
            r#"{"name":"x","dim":2,"labels":["a"],"unit":null,"structure":[],"involution":null}"#;
        assert!(matches!(
            algebra_from_json(bad),
            Err(Error::DimensionMismatch(_))
        ));
        let nonassoc = r#"{"name":"x","dim":2,"labels":["a","b"],"unit":null,
            "structure":[[0,0,1,"1"],[1,0,0,"1"]],"involution":null}"#;
        assert!(matches!(
            algebra_from_json(nonassoc),
            Err(Error::NonAssociative(..))
        ));
    }
}
