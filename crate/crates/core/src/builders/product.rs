use crate::complex::{BoundaryMatrix, CellComplex};
use crate::error::{Error, Result};

/// Cartesian product of two complexes.
///
/// A `k̂`-cell is a pair `(a_k, b_{k'})` with `k + k' = k̂`, ordered by `k`, then index in
/// `a`, then index in `b`, and labelled `"a*b"`. Its boundary is
/// `∂a × b + (−1)^{k+k'} a × ∂b`, which keeps `B_{k̂−1} B_{k̂} = 0` and makes the vertex-edge
/// blocks `−I ⊗ B'_1` and `B_1 ⊗ I`.
pub fn product(a: &CellComplex, b: &CellComplex) -> CellComplex {
    let n = a.dim() + b.dim();
    let blocks = |total: usize| (0..=total).filter(move |&k| k <= a.dim() && total - k <= b.dim());

    // offsets[t][k]: first index of the (a_k, b_{t-k}) block in dimension t
    let mut offsets = vec![vec![0usize; a.dim() + 1]; n + 1];
    let mut cells = Vec::with_capacity(n + 1);
    for t in 0..=n {
        let mut labels = Vec::new();
        for k in blocks(t) {
            offsets[t][k] = labels.len();
            for la in a.cells(k) {
                for lb in b.cells(t - k) {
                    labels.push(format!("{la}*{lb}"));
                }
            }
        }
        cells.push(labels);
    }

    let mut boundaries = Vec::with_capacity(n);
    for t in 1..=n {
        let mut columns = Vec::with_capacity(cells[t].len());
        for k in blocks(t) {
            let kp = t - k;
            let nb_hi = b.num_cells(kp);
            let sign2: i8 = if t % 2 == 0 { 1 } else { -1 };
            for i in 0..a.num_cells(k) {
                for j in 0..nb_hi {
                    let mut col = Vec::new();
                    if k >= 1 {
                        let base = offsets[t - 1][k - 1];
                        for (r, s) in a.boundary(k).expect("k ≤ dim a").column(i) {
                            col.push((base + r * nb_hi + j, s));
                        }
                    }
                    if kp >= 1 {
                        let base = offsets[t - 1][k];
                        let nb_lo = b.num_cells(kp - 1);
                        for (r, s) in b.boundary(kp).expect("k' ≤ dim b").column(j) {
                            col.push((base + i * nb_lo + r, s * sign2));
                        }
                    }
                    columns.push(col);
                }
            }
        }
        boundaries.push(BoundaryMatrix::from_columns(cells[t - 1].len(), columns).expect("product entries are distinct"));
    }
    CellComplex::from_boundary_matrices(cells, boundaries).expect("product of valid complexes")
}

/// Path complex `P_n`: vertices `0..n`, edges `i → i+1`.
pub fn path(n: usize) -> Result<CellComplex> {
    if n == 0 {
        return Err(Error::EmptyDimension(0));
    }
    let vertices: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let edges: Vec<(String, String)> = (1..n).map(|i| (vertices[i - 1].clone(), vertices[i].clone())).collect();
    CellComplex::from_tuples(&vertices, &edges, &[])
}

/// Cubical grid `P_{n_1} × … × P_{n_d}`.
pub fn cubical(sizes: &[usize]) -> Result<CellComplex> {
    let (&first, rest) = sizes.split_first().ok_or(Error::EmptyDimension(0))?;
    rest.iter().try_fold(path(first)?, |acc, &n| Ok(product(&acc, &path(n)?)))
}
