use std::collections::{BTreeSet, HashMap};

use crate::complex::{BoundaryMatrix, CellComplex};
use crate::error::{Error, Result};

/// Label of a simplex: its vertex labels joined by `-`.
pub fn simplex_label<S: AsRef<str>>(vertices: &[S], simplex: &[usize]) -> String {
    simplex.iter().map(|&v| vertices[v].as_ref()).collect::<Vec<_>>().join("-")
}

/// Cell complex of an abstract simplicial complex.
///
/// `simplices` hold vertex indices. `k`-simplices become `k`-cells in lexicographic order of
/// their sorted vertex tuples; the face omitting position `i` enters the boundary with sign
/// `(−1)^i`. With `auto_close` the face closure is added; otherwise a missing face is an
/// error.
pub fn from_simplicial<S: AsRef<str>>(
    vertices: &[S],
    simplices: &[Vec<usize>],
    auto_close: bool,
) -> Result<CellComplex> {
    let mut by_dim: Vec<BTreeSet<Vec<usize>>> = Vec::new();
    for s in simplices {
        let mut s = s.clone();
        s.sort_unstable();
        s.dedup();
        if s.is_empty() {
            continue;
        }
        if let Some(&v) = s.iter().find(|&&v| v >= vertices.len()) {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        let k = s.len() - 1;
        if by_dim.len() <= k {
            by_dim.resize(k + 1, BTreeSet::new());
        }
        by_dim[k].insert(s);
    }
    if by_dim.is_empty() {
        return Err(Error::EmptyDimension(0));
    }
    for k in (1..by_dim.len()).rev() {
        let faces: Vec<Vec<usize>> = by_dim[k].iter().flat_map(|s| faces_of(s).map(|(f, _)| f)).collect();
        for f in faces {
            if !by_dim[k - 1].contains(&f) {
                if !auto_close {
                    return Err(Error::NotDownwardClosed(f));
                }
                by_dim[k - 1].insert(f);
            }
        }
    }
    if let Some(v) = (0..vertices.len()).find(|&v| !by_dim[0].contains(&vec![v])) {
        return Err(Error::UncoveredVertex(v));
    }

    let ordered: Vec<Vec<Vec<usize>>> = by_dim.into_iter().map(|s| s.into_iter().collect()).collect();
    let cells = ordered
        .iter()
        .map(|level| level.iter().map(|s| simplex_label(vertices, s)).collect())
        .collect();
    let mut boundaries = Vec::with_capacity(ordered.len().saturating_sub(1));
    for k in 1..ordered.len() {
        let index: HashMap<&[usize], usize> =
            ordered[k - 1].iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
        let columns = ordered[k]
            .iter()
            .map(|s| faces_of(s).map(|(f, sign)| (index[f.as_slice()], sign)).collect())
            .collect();
        boundaries.push(BoundaryMatrix::from_columns(ordered[k - 1].len(), columns)?);
    }
    CellComplex::from_boundary_matrices(cells, boundaries)
}

/// Codimension-one faces with their alternating signs.
fn faces_of(s: &[usize]) -> impl Iterator<Item = (Vec<usize>, i8)> + '_ {
    (0..s.len()).map(move |i| {
        let mut f = s.to_vec();
        f.remove(i);
        (f, if i % 2 == 0 { 1 } else { -1 })
    })
}
