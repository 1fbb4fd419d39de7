//! JSON and CSV interchange formats.

use serde::{Deserialize, Serialize};

use crate::builders::PointCloud;
use crate::complex::{BoundaryMatrix, CellComplex, ChainVector};
use crate::error::{Error, Result};
use crate::hodge::WeightSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryJson {
    pub k: usize,
    pub rows: usize,
    pub cols: usize,
    /// `[row, col, sign]`, sorted by `(col, row)`.
    pub entries: Vec<(usize, usize, i8)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub dim: usize,
    pub cells: Vec<Vec<String>>,
    pub boundaries: Vec<BoundaryJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChainJson {
    pub dim: usize,
    pub values: Vec<f64>,
}

impl From<&CellComplex> for ComplexJson {
    fn from(cc: &CellComplex) -> Self {
        ComplexJson {
            dim: cc.dim(),
            cells: cc.all_cells().to_vec(),
            boundaries: cc
                .boundaries()
                .iter()
                .enumerate()
                .map(|(i, b)| BoundaryJson { k: i + 1, rows: b.rows(), cols: b.cols(), entries: b.entries().collect() })
                .collect(),
        }
    }
}

impl TryFrom<ComplexJson> for CellComplex {
    type Error = Error;

    fn try_from(j: ComplexJson) -> Result<Self> {
        if j.cells.len() != j.dim + 1 {
            return Err(Error::ShapeMismatch(format!(
                "dim {} but {} cell lists",
                j.dim,
                j.cells.len()
            )));
        }
        let mut boundaries = Vec::with_capacity(j.boundaries.len());
        for (idx, b) in j.boundaries.into_iter().enumerate() {
            if b.k != idx + 1 {
                return Err(Error::ShapeMismatch(format!("boundary {} is labelled k = {}", idx + 1, b.k)));
            }
            for &(i, jj, s) in &b.entries {
                if s != 1 && s != -1 {
                    return Err(Error::InvalidEntry(format!("sign {s} at ({i}, {jj})")));
                }
            }
            boundaries.push(BoundaryMatrix::new(b.rows, b.cols, b.entries)?);
        }
        CellComplex::from_boundary_matrices(j.cells, boundaries)
    }
}

pub fn complex_to_json(cc: &CellComplex) -> String {
    serde_json::to_string_pretty(&ComplexJson::from(cc)).expect("complex serializes")
}

pub fn complex_from_json(s: &str) -> Result<CellComplex> {
    let j: ComplexJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    CellComplex::try_from(j)
}

pub fn chain_to_json(c: &ChainVector<f64>) -> String {
    serde_json::to_string(&ChainJson { dim: c.dim, values: c.values.iter().copied().collect() })
        .expect("chain serializes")
}

pub fn chain_from_json(s: &str) -> Result<ChainVector<f64>> {
    let j: ChainJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    if j.values.iter().any(|v| !v.is_finite()) {
        return Err(Error::Parse("chain values must be finite".into()));
    }
    Ok(ChainVector::from_vec(j.dim, j.values))
}

/// Weights as a JSON array of per-dimension arrays, `[[w_0...], [w_1...], ...]`.
pub fn weights_from_json(s: &str) -> Result<WeightSet<f64>> {
    let w: Vec<Vec<f64>> = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    WeightSet::new(w)
}

/// One row per point, comma-separated coordinates. Blank lines are skipped.
pub fn parse_csv_rows(s: &str) -> Result<Vec<Vec<f64>>> {
    s.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(n, l)| {
            l.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<f64>()
                        .ok()
                        .filter(|v| v.is_finite())
                        .ok_or_else(|| Error::Parse(format!("line {}: bad number {:?}", n + 1, t.trim())))
                })
                .collect()
        })
        .collect()
}

pub fn points_from_csv(s: &str) -> Result<PointCloud<f64>> {
    PointCloud::new(parse_csv_rows(s)?)
}

/// Planar coordinates, one `x,y` row per vertex.
pub fn coords_from_csv(s: &str) -> Result<Vec<[f64; 2]>> {
    parse_csv_rows(s)?
        .into_iter()
        .enumerate()
        .map(|(i, r)| match r.as_slice() {
            &[x, y] => Ok([x, y]),
            _ => Err(Error::Parse(format!("row {}: expected 2 coordinates, got {}", i + 1, r.len()))),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::tests::toy;

    #[test]
    fn complex_round_trip() {
        let cc = toy();
        let s = complex_to_json(&cc);
        assert_eq!(complex_from_json(&s).unwrap(), cc);
        let j: ComplexJson = serde_json::from_str(&s).unwrap();
        let e = &j.boundaries[0].entries;
        assert!(e.windows(2).all(|w| (w[0].1, w[0].0) < (w[1].1, w[1].0)));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(complex_from_json("{"), Err(Error::Parse(_))));
        let bad_sign = r#"{"dim":1,"cells":[["a","b"],["e"]],"boundaries":[{"k":1,"rows":2,"cols":1,"entries":[[0,0,2],[1,0,1]]}]}"#;
        assert!(matches!(complex_from_json(bad_sign), Err(Error::InvalidEntry(_))));
        let bad_dim = r#"{"dim":2,"cells":[["a"]],"boundaries":[]}"#;
        assert!(matches!(complex_from_json(bad_dim), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn chains_and_csv() {
        let c = chain_from_json(r#"{"dim":1,"values":[1,0,-1.5]}"#).unwrap();
        assert_eq!(c.values.as_slice(), &[1.0, 0.0, -1.5]);
        assert_eq!(chain_from_json(&chain_to_json(&c)).unwrap(), c);
        assert_eq!(parse_csv_rows("0,1\n\n2.5, 3\n").unwrap(), vec![vec![0.0, 1.0], vec![2.5, 3.0]]);
        assert!(parse_csv_rows("0,x").is_err());
        assert!(coords_from_csv("1,2,3").is_err());
        assert!(weights_from_json("[[1,2],[0]]").is_err());
    }
}
