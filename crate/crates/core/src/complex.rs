//! Cell complexes stored as ordered cell lists plus signed sparse boundary matrices.
//!
//! A complex of dimension `n` owns cells `C_0..C_n` and boundary matrices `B_1..B_n`,
//! where `B_k` has shape `|C_{k-1}| × |C_k|` and entries in `{-1, 0, +1}`. Column `j` of
//! `B_k` is the oriented boundary of the `j`-th `k`-cell; flipping the orientation of that
//! cell negates column `j` of `B_k` and row `j` of `B_{k+1}`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::ops::Neg;

use nalgebra::{DMatrix, DVector};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Sparse `{-1, 0, +1}` matrix in compressed-column form.
///
/// Entries within a column are kept sorted by row, so iteration order is `(col, row)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoundaryMatrix {
    rows: usize,
    cols: usize,
    col_ptr: Vec<usize>,
    row_idx: Vec<usize>,
    signs: Vec<i8>,
}

impl BoundaryMatrix {
    /// Build from `(row, col, sign)` triplets in any order.
    pub fn new(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, i8)>,
    ) -> Result<Self> {
        let mut columns = vec![Vec::new(); cols];
        for (i, j, s) in entries {
            if j >= cols || i >= rows {
                return Err(Error::InvalidEntry(format!(
                    "({i}, {j}) outside a {rows}×{cols} matrix"
                )));
            }
            columns[j].push((i, s));
        }
        Self::from_columns(rows, columns)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        BoundaryMatrix {
            rows,
            cols,
            col_ptr: vec![0; cols + 1],
            row_idx: Vec::new(),
            signs: Vec::new(),
        }
    }

    /// Build from per-column `(row, sign)` lists.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, i8)>>) -> Result<Self> {
        let cols = columns.len();
        let mut col_ptr = Vec::with_capacity(cols + 1);
        let mut row_idx = Vec::new();
        let mut signs = Vec::new();
        col_ptr.push(0);
        for (j, mut col) in columns.into_iter().enumerate() {
            col.sort_unstable_by_key(|&(i, _)| i);
            for w in col.windows(2) {
                if w[0].0 == w[1].0 {
                    return Err(Error::InvalidEntry(format!(
                        "duplicate entry at ({}, {j})",
                        w[0].0
                    )));
                }
            }
            for (i, s) in col {
                if i >= rows {
                    return Err(Error::InvalidEntry(format!(
                        "row {i} outside a matrix with {rows} rows"
                    )));
                }
                if s != 1 && s != -1 {
                    return Err(Error::InvalidEntry(format!("sign {s} at ({i}, {j})")));
                }
                row_idx.push(i);
                signs.push(s);
            }
            col_ptr.push(row_idx.len());
        }
        Ok(BoundaryMatrix { rows, cols, col_ptr, row_idx, signs })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn nnz(&self) -> usize {
        self.row_idx.len()
    }

    /// Nonzero `(row, sign)` pairs of column `j`, ascending by row.
    pub fn column(&self, j: usize) -> impl Iterator<Item = (usize, i8)> + '_ {
        let range = self.col_ptr[j]..self.col_ptr[j + 1];
        self.row_idx[range.clone()].iter().copied().zip(self.signs[range].iter().copied())
    }

    pub fn column_len(&self, j: usize) -> usize {
        self.col_ptr[j + 1] - self.col_ptr[j]
    }

    /// All `(row, col, sign)` triplets, sorted by `(col, row)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, i8)> + '_ {
        (0..self.cols).flat_map(move |j| self.column(j).map(move |(i, s)| (i, j, s)))
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.column(j).find(|&(r, _)| r == i).map_or(0, |(_, s)| s)
    }

    /// Row-wise view: for each row, its `(col, sign)` pairs ascending by column.
    pub fn row_lists(&self) -> Vec<Vec<(usize, i8)>> {
        let mut rows = vec![Vec::new(); self.rows];
        for (i, j, s) in self.entries() {
            rows[i].push((j, s));
        }
        rows
    }

    pub fn to_dense<S>(&self) -> DMatrix<S>
    where
        S: nalgebra::Scalar + Zero + One + Neg<Output = S>,
    {
        let mut m = DMatrix::from_element(self.rows, self.cols, S::zero());
        for (i, j, s) in self.entries() {
            m[(i, j)] = if s > 0 { S::one() } else { -S::one() };
        }
        m
    }

    pub fn transpose(&self) -> BoundaryMatrix {
        let columns = self.row_lists();
        BoundaryMatrix::from_columns(self.cols, columns).expect("transpose of a valid matrix")
    }

    pub(crate) fn flip_column(&mut self, j: usize) {
        for s in &mut self.signs[self.col_ptr[j]..self.col_ptr[j + 1]] {
            *s = -*s;
        }
    }

    pub(crate) fn flip_row(&mut self, i: usize) {
        for (r, s) in self.row_idx.iter().zip(self.signs.iter_mut()) {
            if *r == i {
                *s = -*s;
            }
        }
    }

    /// Submatrix on the given sorted row and column index sets, reindexed densely.
    pub(crate) fn restrict(&self, rows: &[usize], cols: &[usize]) -> BoundaryMatrix {
        let row_pos: HashMap<usize, usize> = rows.iter().enumerate().map(|(p, &r)| (r, p)).collect();
        let columns = cols
            .iter()
            .map(|&j| {
                self.column(j)
                    .filter_map(|(i, s)| row_pos.get(&i).map(|&p| (p, s)))
                    .collect()
            })
            .collect();
        BoundaryMatrix::from_columns(rows.len(), columns).expect("restriction of a valid matrix")
    }

    /// First nonzero entry `(row, col)` of the exact product `self · right`, scanning by
    /// column then row.
    pub fn first_nonzero_product(&self, right: &BoundaryMatrix) -> Result<Option<(usize, usize)>> {
        if self.cols != right.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}×{} by {}×{}",
                self.rows, self.cols, right.rows, right.cols
            )));
        }
        for j in 0..right.cols {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for (mid, s) in right.column(j) {
                for (i, t) in self.column(mid) {
                    let e = acc.entry(i).or_insert(0);
                    *e = e
                        .checked_add(i64::from(s) * i64::from(t))
                        .ok_or(Error::IntegerOverflow)?;
                }
            }
            if let Some((&i, _)) = acc.iter().find(|(_, &v)| v != 0) {
                return Ok(Some((i, j)));
            }
        }
        Ok(None)
    }
}

/// Addresses one oriented cell: position `index` in `C_dim`, with orientation `±1`
/// relative to the reference orientation stored in the boundary matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellRef {
    pub dim: usize,
    pub index: usize,
    pub orientation: i8,
}

impl CellRef {
    pub fn new(dim: usize, index: usize) -> Self {
        CellRef { dim, index, orientation: 1 }
    }

    pub fn reversed(self) -> Self {
        CellRef { orientation: -self.orientation, ..self }
    }
}

/// A real signal on the `dim`-cells of a complex, indexed by cell order.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainVector<T: Real> {
    pub dim: usize,
    pub values: DVector<T>,
}

impl<T: Real> ChainVector<T> {
    pub fn new(dim: usize, values: DVector<T>) -> Self {
        ChainVector { dim, values }
    }

    pub fn from_vec(dim: usize, values: Vec<T>) -> Self {
        ChainVector { dim, values: DVector::from_vec(values) }
    }

    pub fn zeros(cc: &CellComplex, dim: usize) -> Self {
        ChainVector { dim, values: DVector::zeros(cc.num_cells(dim)) }
    }

    /// Unit chain on one oriented cell.
    pub fn unit(cc: &CellComplex, cell: CellRef) -> Self {
        let mut c = Self::zeros(cc, cell.dim);
        c.values[cell.index] = T::lit(f64::from(cell.orientation));
        c
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn norm(&self) -> T {
        self.values.norm()
    }

    /// Fails unless this chain has the length of `C_dim` in `cc`.
    pub fn check_against(&self, cc: &CellComplex) -> Result<()> {
        if self.dim > cc.dim() {
            return Err(Error::BadDimension(self.dim));
        }
        if self.values.len() != cc.num_cells(self.dim) {
            return Err(Error::ShapeMismatch(format!(
                "{}-chain has {} values, complex has {} cells",
                self.dim,
                self.values.len(),
                cc.num_cells(self.dim)
            )));
        }
        Ok(())
    }
}

/// Readback of a simple complex of dimension at most 2 in tuple notation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleForm {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
    pub polygons: Vec<Vec<String>>,
}

/// Cells per dimension plus boundary matrices `B_1..B_n`. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellComplex {
    cells: Vec<Vec<String>>,
    boundaries: Vec<BoundaryMatrix>,
}

impl CellComplex {
    /// Build from labels and boundary matrices, checking shapes, label uniqueness and
    /// `B_{k-1} B_k = 0`. The regularity conditions are left to [`crate::validate`].
    pub fn from_boundary_matrices(
        cells: Vec<Vec<String>>,
        boundaries: Vec<BoundaryMatrix>,
    ) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::EmptyDimension(0));
        }
        if boundaries.len() + 1 != cells.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} cell dimensions need {} boundary matrices, got {}",
                cells.len(),
                cells.len() - 1,
                boundaries.len()
            )));
        }
        for (k, labels) in cells.iter().enumerate() {
            if labels.is_empty() {
                return Err(Error::EmptyDimension(k));
            }
            let mut seen = HashSet::with_capacity(labels.len());
            for l in labels {
                if !seen.insert(l.as_str()) {
                    return Err(Error::DuplicateLabel { dim: k, label: l.clone() });
                }
            }
        }
        for (idx, b) in boundaries.iter().enumerate() {
            let k = idx + 1;
            let expected = (cells[k - 1].len(), cells[k].len());
            if b.shape() != expected {
                return Err(Error::ShapeMismatch(format!(
                    "B_{k} is {}×{}, expected {}×{}",
                    b.rows, b.cols, expected.0, expected.1
                )));
            }
        }
        for k in 2..cells.len() {
            if let Some((row, col)) =
                boundaries[k - 2].first_nonzero_product(&boundaries[k - 1])?
            {
                return Err(Error::ExactnessViolated { k, row, col });
            }
        }
        Ok(CellComplex { cells, boundaries })
    }

    /// A single 0-cell.
    pub fn point(label: impl Into<String>) -> Self {
        CellComplex { cells: vec![vec![label.into()]], boundaries: Vec::new() }
    }

    /// Build a simple complex from vertex labels, oriented edges `(tail, head)` and
    /// polygons given as closed vertex walks.
    ///
    /// Edge `(u, v)` gets `-1` at `u` and `+1` at `v`. A polygon gets `+1` on each edge it
    /// traverses along the edge's orientation and `-1` otherwise. Edges are labelled
    /// `"u-v"`, polygons by their vertex labels joined with `-`.
    pub fn from_tuples<S: AsRef<str>>(
        vertices: &[S],
        edges: &[(S, S)],
        polygons: &[Vec<S>],
    ) -> Result<Self> {
        let vlabels: Vec<String> = vertices.iter().map(|v| v.as_ref().to_owned()).collect();
        let mut vindex = HashMap::with_capacity(vlabels.len());
        for (i, l) in vlabels.iter().enumerate() {
            if vindex.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel { dim: 0, label: l.clone() });
            }
        }
        let lookup = |s: &str| vindex.get(s).copied().ok_or_else(|| Error::UnknownVertex(s.to_owned()));

        let mut edge_index: HashMap<(usize, usize), (usize, i8)> = HashMap::new();
        let mut elabels = Vec::with_capacity(edges.len());
        let mut b1 = Vec::with_capacity(edges.len());
        for (j, (u, v)) in edges.iter().enumerate() {
            let (u, v) = (u.as_ref(), v.as_ref());
            let (iu, iv) = (lookup(u)?, lookup(v)?);
            if iu == iv {
                return Err(Error::InvalidEntry(format!("self-loop at {u:?}")));
            }
            if edge_index.contains_key(&(iu, iv)) {
                return Err(Error::ParallelEdge(u.to_owned(), v.to_owned()));
            }
            edge_index.insert((iu, iv), (j, 1));
            edge_index.insert((iv, iu), (j, -1));
            elabels.push(format!("{u}-{v}"));
            b1.push(vec![(iu, -1), (iv, 1)]);
        }

        let mut plabels = Vec::with_capacity(polygons.len());
        let mut b2 = Vec::with_capacity(polygons.len());
        for poly in polygons {
            let names: Vec<String> = poly.iter().map(|p| p.as_ref().to_owned()).collect();
            if names.len() < 3 {
                return Err(Error::DegeneratePolygon(names));
            }
            let idx = names.iter().map(|n| lookup(n)).collect::<Result<Vec<_>>>()?;
            let distinct: HashSet<_> = idx.iter().collect();
            if distinct.len() != idx.len() {
                return Err(Error::RepeatedVertexInPolygon(names));
            }
            let mut column = Vec::with_capacity(idx.len());
            for p in 0..idx.len() {
                let q = (p + 1) % idx.len();
                let &(e, s) = edge_index.get(&(idx[p], idx[q])).ok_or_else(|| Error::MissingEdge {
                    polygon: names.clone(),
                    from: names[p].clone(),
                    to: names[q].clone(),
                })?;
                column.push((e, s));
            }
            plabels.push(names.join("-"));
            b2.push(column);
        }

        let mut cells = vec![vlabels];
        let mut boundaries = Vec::new();
        if !edges.is_empty() {
            boundaries.push(BoundaryMatrix::from_columns(vertices.len(), b1)?);
            cells.push(elabels);
            if !polygons.is_empty() {
                boundaries.push(BoundaryMatrix::from_columns(edges.len(), b2)?);
                cells.push(plabels);
            }
        } else if !polygons.is_empty() {
            return Err(Error::EmptyDimension(1));
        }
        Self::from_boundary_matrices(cells, boundaries)
    }

    pub fn dim(&self) -> usize {
        self.cells.len() - 1
    }

    /// Labels of the `k`-cells; empty above the top dimension.
    pub fn cells(&self, k: usize) -> &[String] {
        self.cells.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn num_cells(&self, k: usize) -> usize {
        self.cells(k).len()
    }

    /// `|C_0|, …, |C_n|`.
    pub fn cell_counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn total_cells(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    /// `B_k` for `1 ≤ k ≤ dim`.
    pub fn boundary(&self, k: usize) -> Option<&BoundaryMatrix> {
        if k == 0 {
            None
        } else {
            self.boundaries.get(k - 1)
        }
    }

    pub fn boundaries(&self) -> &[BoundaryMatrix] {
        &self.boundaries
    }

    pub fn all_cells(&self) -> &[Vec<String>] {
        &self.cells
    }

    pub fn index_of(&self, k: usize, label: &str) -> Option<usize> {
        self.cells(k).iter().position(|l| l == label)
    }

    /// Cell reference by label, in reference orientation.
    pub fn cell(&self, k: usize, label: &str) -> Option<CellRef> {
        self.index_of(k, label).map(|i| CellRef::new(k, i))
    }

    fn check_ref(&self, cell: CellRef) -> Result<()> {
        if cell.index >= self.num_cells(cell.dim) {
            return Err(Error::CellOutOfRange { dim: cell.dim, index: cell.index });
        }
        Ok(())
    }

    /// Faces of an oriented cell with their incidence signs.
    pub fn boundary_of_cell(&self, cell: CellRef) -> Result<Vec<(CellRef, i8)>> {
        if cell.dim == 0 {
            return Err(Error::DimZeroHasNoBoundary);
        }
        self.check_ref(cell)?;
        let b = self.boundary(cell.dim).expect("checked dimension");
        Ok(b.column(cell.index)
            .map(|(i, s)| (CellRef::new(cell.dim - 1, i), s * cell.orientation))
            .collect())
    }

    /// `B_k x` for a `k`-chain `x`.
    pub fn apply_boundary<T: Real>(&self, chain: &ChainVector<T>) -> Result<ChainVector<T>> {
        if chain.dim == 0 {
            return Err(Error::DimZeroHasNoBoundary);
        }
        chain.check_against(self)?;
        let b = self.boundary(chain.dim).expect("checked dimension");
        let mut out = DVector::zeros(b.rows());
        for (i, j, s) in b.entries() {
            let x = chain.values[j];
            if s > 0 {
                out[i] += x;
            } else {
                out[i] -= x;
            }
        }
        Ok(ChainVector::new(chain.dim - 1, out))
    }

    /// `B_{k+1}^T x` for a `k`-chain `x`; zero when `k` is the top dimension.
    pub fn apply_coboundary<T: Real>(&self, chain: &ChainVector<T>) -> Result<ChainVector<T>> {
        chain.check_against(self)?;
        let k = chain.dim;
        let Some(b) = self.boundary(k + 1) else {
            return Ok(ChainVector::new(k + 1, DVector::zeros(0)));
        };
        let mut out = DVector::zeros(b.cols());
        for (i, j, s) in b.entries() {
            let x = chain.values[i];
            if s > 0 {
                out[j] += x;
            } else {
                out[j] -= x;
            }
        }
        Ok(ChainVector::new(k + 1, out))
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.len() as i64 } else { -(c.len() as i64) })
            .sum()
    }

    /// No two distinct `k`-cells (`k ≥ 1`) have boundary columns equal up to sign.
    pub fn is_simple(&self) -> bool {
        self.boundaries.iter().all(|b| {
            let mut seen = HashSet::with_capacity(b.cols());
            (0..b.cols()).all(|j| {
                let col: Vec<(usize, i8)> = b.column(j).collect();
                let lead = col.first().map_or(1, |&(_, s)| s);
                let normalized: Vec<(usize, i8)> = col.iter().map(|&(i, s)| (i, s * lead)).collect();
                seen.insert(normalized)
            })
        })
    }

    /// Reverse the reference orientation of one cell: negates its column in `B_k` and its
    /// row in `B_{k+1}`.
    pub fn flip_orientation(&self, dim: usize, index: usize) -> Result<CellComplex> {
        self.check_ref(CellRef::new(dim, index))?;
        let mut out = self.clone();
        out.flip_in_place(dim, index);
        Ok(out)
    }

    fn flip_in_place(&mut self, dim: usize, index: usize) {
        if dim >= 1 {
            self.boundaries[dim - 1].flip_column(index);
        }
        if dim < self.boundaries.len() {
            self.boundaries[dim].flip_row(index);
        }
    }

    /// `(tail, head)` of edge `j`, if its `B_1` column has one `-1` and one `+1`.
    pub fn edge_endpoints(&self, j: usize) -> Option<(usize, usize)> {
        let b1 = self.boundary(1)?;
        if j >= b1.cols() || b1.column_len(j) != 2 {
            return None;
        }
        let mut tail = None;
        let mut head = None;
        for (i, s) in b1.column(j) {
            if s < 0 {
                tail = Some(i);
            } else {
                head = Some(i);
            }
        }
        Some((tail?, head?))
    }

    /// Vertex cycle traced by 2-cell `j` along its orientation, starting at its smallest
    /// vertex index.
    pub fn polygon_cycle(&self, j: usize) -> Result<Vec<usize>> {
        let fail = || Error::NotSimpleCycle { dim: 2, index: j };
        let b2 = self.boundary(2).ok_or(Error::BadDimension(2))?;
        if j >= b2.cols() {
            return Err(Error::CellOutOfRange { dim: 2, index: j });
        }
        let mut succ = HashMap::new();
        for (e, s) in b2.column(j) {
            let (t, h) = self.edge_endpoints(e).ok_or_else(fail)?;
            let (from, to) = if s > 0 { (t, h) } else { (h, t) };
            if succ.insert(from, to).is_some() {
                return Err(fail());
            }
        }
        let start = *succ.keys().min().ok_or_else(fail)?;
        let mut cycle = vec![start];
        let mut cur = succ[&start];
        while cur != start {
            if cycle.len() >= succ.len() {
                return Err(fail());
            }
            cycle.push(cur);
            cur = *succ.get(&cur).ok_or_else(fail)?;
        }
        if cycle.len() != succ.len() {
            return Err(fail());
        }
        Ok(cycle)
    }

    /// Read the complex back in tuple notation. Polygons start at their smallest vertex
    /// and follow their reference orientation.
    pub fn to_tuples(&self) -> Result<TupleForm> {
        if self.dim() > 2 {
            return Err(Error::DimensionTooHigh { dim: self.dim(), max: 2 });
        }
        let v = self.cells(0);
        let edges = (0..self.num_cells(1))
            .map(|j| {
                let (t, h) = self.edge_endpoints(j).ok_or(Error::NotSimpleCycle { dim: 1, index: j })?;
                Ok((v[t].clone(), v[h].clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        let polygons = (0..self.num_cells(2))
            .map(|j| Ok(self.polygon_cycle(j)?.into_iter().map(|i| v[i].clone()).collect()))
            .collect::<Result<Vec<_>>>()?;
        Ok(TupleForm { vertices: v.to_vec(), edges, polygons })
    }

    /// Reorient a simple complex of dimension ≤ 2 so every edge runs from lower to higher
    /// vertex index and every polygon, read from its smallest vertex, continues to the
    /// smaller of that vertex's two cycle neighbours. Tuple-style labels are rewritten to
    /// match the new orientation.
    pub fn canonicalize_orientations(&self) -> Result<CellComplex> {
        if self.dim() > 2 {
            return Err(Error::DimensionTooHigh { dim: self.dim(), max: 2 });
        }
        if !self.is_simple() {
            return Err(Error::NotSimple);
        }
        let mut out = self.clone();
        let vl = self.cells(0).to_vec();
        for j in 0..self.num_cells(1) {
            let (t, h) = self.edge_endpoints(j).ok_or(Error::NotSimpleCycle { dim: 1, index: j })?;
            if t > h {
                out.flip_in_place(1, j);
                if out.cells[1][j] == format!("{}-{}", vl[t], vl[h]) {
                    out.cells[1][j] = format!("{}-{}", vl[h], vl[t]);
                }
            }
        }
        for j in 0..self.num_cells(2) {
            let cycle = self.polygon_cycle(j)?;
            let (canonical, flipped) = canonical_cycle(&cycle);
            if flipped {
                out.flip_in_place(2, j);
            }
            let is_tuple_label = (0..cycle.len()).any(|r| {
                let rotated: Vec<&str> =
                    (0..cycle.len()).map(|p| vl[cycle[(p + r) % cycle.len()]].as_str()).collect();
                out.cells[2][j] == rotated.join("-")
            });
            if is_tuple_label {
                out.cells[2][j] =
                    canonical.iter().map(|&i| vl[i].as_str()).collect::<Vec<_>>().join("-");
            }
        }
        Self::from_boundary_matrices(out.cells, out.boundaries)
    }

    /// Same cells and boundaries with the top dimension dropped while it is empty-free.
    pub(crate) fn from_parts_trimmed(
        mut cells: Vec<Vec<String>>,
        mut boundaries: Vec<BoundaryMatrix>,
    ) -> Result<Self> {
        while cells.len() > 1 && cells.last().is_some_and(Vec::is_empty) {
            cells.pop();
            boundaries.pop();
        }
        Self::from_boundary_matrices(cells, boundaries)
    }
}

/// Rotate a vertex cycle to start at its minimum and, if needed, reverse it so the second
/// vertex is smaller than the last. Returns the canonical cycle and whether it was reversed.
pub fn canonical_cycle(cycle: &[usize]) -> (Vec<usize>, bool) {
    let n = cycle.len();
    if n == 0 {
        return (Vec::new(), false);
    }
    let start = (0..n).min_by_key(|&p| cycle[p]).expect("nonempty");
    let forward: Vec<usize> = (0..n).map(|p| cycle[(start + p) % n]).collect();
    if n < 3 || forward[1] < forward[n - 1] {
        (forward, false)
    } else {
        let mut reversed = Vec::with_capacity(n);
        reversed.push(forward[0]);
        reversed.extend(forward[1..].iter().rev());
        (reversed, true)
    }
}
