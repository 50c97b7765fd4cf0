//! JSON file formats: matroids, vector configurations, graphs,
//! collections, sign maps, triangulations.

use crate::construct::{DirectedGraph, VectorConfiguration};
use crate::error::{OmError, Result};
use crate::ground::GroundSet;
use crate::matroid::OrientedMatroid;
use crate::ratmat::Rat;
use crate::separation::{Collection, SignMap};
use crate::sign::Sign;
use crate::signed_set::SignedSet;
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

/// Matroid file: elements and circuits, one entry per ± pair; the reader
/// closes under negation.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct MatroidFile {
    pub elements: Vec<String>,
    pub circuits: Vec<SignedSetFile>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct SignedSetFile {
    pub plus: Vec<String>,
    pub minus: Vec<String>,
}

impl MatroidFile {
    pub fn from_matroid(m: &OrientedMatroid) -> MatroidFile {
        MatroidFile {
            elements: m.ground().labels().to_vec(),
            circuits: m
                .circuits()
                .iter()
                .map(|c| SignedSetFile {
                    plus: m.ground().labels_of_mask(c.plus),
                    minus: m.ground().labels_of_mask(c.minus),
                })
                .collect(),
        }
    }

    /// Parses and validates.
    pub fn into_matroid(&self) -> Result<OrientedMatroid> {
        let ground = GroundSet::new(self.elements.clone())?;
        let circuits = self
            .circuits
            .iter()
            .map(|c| {
                let plus = ground.mask_of_labels(&c.plus)?;
                let minus = ground.mask_of_labels(&c.minus)?;
                if plus & minus != 0 {
                    return Err(OmError::InvalidInput(
                        "circuit plus and minus parts overlap".into(),
                    ));
                }
                Ok(SignedSet::new(plus, minus))
            })
            .collect::<Result<Vec<_>>>()?;
        OrientedMatroid::new(ground, circuits)
    }

    /// Parses without axiom validation (for the validate subcommand).
    pub fn into_matroid_unchecked(&self) -> Result<OrientedMatroid> {
        let ground = GroundSet::new(self.elements.clone())?;
        let circuits = self
            .circuits
            .iter()
            .map(|c| {
                let plus = ground.mask_of_labels(&c.plus)?;
                let minus = ground.mask_of_labels(&c.minus)?;
                if plus & minus != 0 {
                    return Err(OmError::InvalidInput(
                        "circuit plus and minus parts overlap".into(),
                    ));
                }
                Ok(SignedSet::new(plus, minus))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(OrientedMatroid::new_unchecked(ground, circuits))
    }
}

/// Vector file: dimension, columns of `p/q` strings, optional labels.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct VectorFile {
    pub dimension: usize,
    pub columns: Vec<Vec<String>>,
    #[serde(default)]
    pub labels: Vec<String>,
}

pub fn parse_rational(s: &str) -> Result<Rat> {
    let parse_int = |t: &str| {
        BigInt::from_str(t.trim())
            .map_err(|e| OmError::InvalidInput(format!("bad integer `{t}`: {e}")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(OmError::InvalidInput(format!("zero denominator in `{s}`")));
            }
            Ok(Rat::new(parse_int(p)?, den))
        }
        None => Ok(Rat::from(parse_int(s)?)),
    }
}

impl VectorFile {
    pub fn into_config(&self) -> Result<VectorConfiguration> {
        let columns = self
            .columns
            .iter()
            .map(|col| {
                if col.len() != self.dimension {
                    return Err(OmError::InvalidInput(format!(
                        "column has {} entries, dimension is {}",
                        col.len(),
                        self.dimension
                    )));
                }
                col.iter().map(|s| parse_rational(s)).collect()
            })
            .collect::<Result<Vec<_>>>()?;
        let labels = if self.labels.is_empty() {
            (1..=columns.len()).map(|i| i.to_string()).collect()
        } else {
            if self.labels.len() != columns.len() {
                return Err(OmError::InvalidInput(
                    "label count differs from column count".into(),
                ));
            }
            self.labels.clone()
        };
        Ok(VectorConfiguration {
            dimension: self.dimension,
            columns,
            labels,
        })
    }
}

/// Graph file: vertex count plus labeled directed edges.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct GraphFile {
    pub vertices: usize,
    pub edges: Vec<GraphEdgeFile>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct GraphEdgeFile {
    pub label: String,
    pub tail: usize,
    pub head: usize,
}

impl GraphFile {
    pub fn into_digraph(&self) -> Result<DirectedGraph> {
        for e in &self.edges {
            if e.tail >= self.vertices || e.head >= self.vertices {
                return Err(OmError::InvalidInput(format!(
                    "edge `{}` endpoint out of range",
                    e.label
                )));
            }
        }
        Ok(DirectedGraph {
            vertices: self.vertices,
            edges: self.edges.iter().map(|e| (e.tail, e.head)).collect(),
            labels: self.edges.iter().map(|e| e.label.clone()).collect(),
        })
    }
}

/// Collection file: a JSON list of label arrays.
pub fn collection_to_json(m: &OrientedMatroid, s: &Collection) -> serde_json::Value {
    serde_json::Value::Array(
        s.sets
            .iter()
            .map(|&set| {
                serde_json::Value::Array(
                    m.ground()
                        .labels_of_mask(set)
                        .into_iter()
                        .map(serde_json::Value::String)
                        .collect(),
                )
            })
            .collect(),
    )
}

pub fn collection_from_json(m: &OrientedMatroid, v: &serde_json::Value) -> Result<Collection> {
    let arr = v
        .as_array()
        .ok_or_else(|| OmError::InvalidInput("collection file must be a JSON list".into()))?;
    let mut sets = Vec::new();
    for entry in arr {
        let labels = entry
            .as_array()
            .ok_or_else(|| OmError::InvalidInput("collection entries are label lists".into()))?
            .iter()
            .map(|l| {
                l.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| OmError::InvalidInput("labels are strings".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        sets.push(m.ground().mask_of_labels(&labels)?);
    }
    Ok(Collection::new(sets))
}

/// Sign-map file: canonical circuit key → sign. The key serializes the
/// canonical representative as `+a,b|-c,d`.
pub fn circuit_key(m: &OrientedMatroid, c: &SignedSet) -> String {
    format!(
        "+{}|-{}",
        m.ground().labels_of_mask(c.plus).join(","),
        m.ground().labels_of_mask(c.minus).join(",")
    )
}

pub fn sign_map_to_json(m: &OrientedMatroid, sigma: &SignMap) -> serde_json::Value {
    let mut map = serde_json::Map::new();
    for (c, v) in m.circuits().iter().zip(&sigma.values) {
        map.insert(
            circuit_key(m, c),
            serde_json::Value::String(v.as_str().to_string()),
        );
    }
    serde_json::Value::Object(map)
}

pub fn sign_map_from_json(m: &OrientedMatroid, v: &serde_json::Value) -> Result<SignMap> {
    let obj = v
        .as_object()
        .ok_or_else(|| OmError::InvalidInput("sign map file must be a JSON object".into()))?;
    let mut values = Vec::with_capacity(m.circuits().len());
    for c in m.circuits() {
        let key = circuit_key(m, c);
        let entry = obj
            .get(&key)
            .ok_or_else(|| OmError::InvalidInput(format!("missing circuit key `{key}`")))?;
        let s = match entry.as_str() {
            Some("+") => Sign::Plus,
            Some("-") | Some("−") => Sign::Minus,
            Some("0") => Sign::Zero,
            _ => {
                return Err(OmError::InvalidInput(format!(
                    "bad sign for circuit `{key}`"
                )))
            }
        };
        values.push(s);
    }
    Ok(SignMap { values })
}

/// Triangulation file: polygon size plus diagonal list.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct TriangulationFile {
    pub polygon: usize,
    pub diagonals: Vec<(usize, usize)>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::alternating;

    #[test]
    fn matroid_roundtrip() {
        let m = alternating(5, 2);
        let file = MatroidFile::from_matroid(&m);
        let back = file.into_matroid().unwrap();
        assert_eq!(back.circuits(), m.circuits());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/4").unwrap(), crate::ratmat::rat(3, 4));
        assert_eq!(parse_rational("-7").unwrap(), crate::ratmat::rat_int(-7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn sign_map_roundtrip() {
        let m = alternating(4, 2);
        let sigma = SignMap {
            values: vec![Sign::Plus, Sign::Minus, Sign::Plus, Sign::Minus],
        };
        let json = sign_map_to_json(&m, &sigma);
        let back = sign_map_from_json(&m, &json).unwrap();
        assert_eq!(back, sigma);
    }
}
