//! Window lifting of straight-line plane graphs.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use crate::complex::{BoundaryMatrix, CellComplex};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// A graph with one point per vertex, drawn with straight edges that meet only at shared
/// endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct PlanarEmbedding<T: Real> {
    graph: CellComplex,
    coords: Vec<[T; 2]>,
    ends: Vec<(usize, usize)>,
}

impl<T: Real> PlanarEmbedding<T> {
    /// Vertices `0..coords.len()` labelled by index, with oriented edges `(tail, head)`.
    pub fn new(coords: Vec<[T; 2]>, edges: &[(usize, usize)]) -> Result<Self> {
        let labels: Vec<String> = (0..coords.len()).map(|i| i.to_string()).collect();
        let mut tuples = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            let get = |v: usize| labels.get(v).cloned().ok_or_else(|| Error::UnknownVertex(v.to_string()));
            tuples.push((get(a)?, get(b)?));
        }
        Self::from_complex(CellComplex::from_tuples(&labels, &tuples, &[])?, coords)
    }

    /// Embed the 1-skeleton of an existing graph complex.
    pub fn from_complex(graph: CellComplex, coords: Vec<[T; 2]>) -> Result<Self> {
        if graph.dim() > 1 {
            return Err(Error::DimensionTooHigh { dim: graph.dim(), max: 1 });
        }
        if coords.len() != graph.num_cells(0) {
            return Err(Error::ShapeMismatch(format!(
                "{} coordinates for {} vertices",
                coords.len(),
                graph.num_cells(0)
            )));
        }
        if coords.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::InvalidPointCloud("non-finite coordinate".into()));
        }
        let ends = (0..graph.num_cells(1))
            .map(|j| graph.edge_endpoints(j).ok_or_else(|| Error::InvalidEntry(format!("edge {j} lacks a head and a tail"))))
            .collect::<Result<Vec<_>>>()?;
        let emb = PlanarEmbedding { graph, coords, ends };
        emb.check_crossings()?;
        Ok(emb)
    }

    pub fn graph(&self) -> &CellComplex {
        &self.graph
    }

    pub fn coords(&self) -> &[[T; 2]] {
        &self.coords
    }

    fn check_crossings(&self) -> Result<()> {
        for (i, &(a, b)) in self.ends.iter().enumerate() {
            for (j, &(c, d)) in self.ends.iter().enumerate().skip(i + 1) {
                let [p, q, r, s] = [a, b, c, d].map(|v| self.coords[v]);
                let shared = [a, b].iter().filter(|v| [c, d].contains(v)).count();
                let crosses = match shared {
                    0 => segments_touch(p, q, r, s),
                    1 => {
                        let other_cd = if c == a || c == b { s } else { r };
                        let other_ab = if a == c || a == d { q } else { p };
                        (orient(p, q, other_cd) == Ordering::Equal && on_segment(p, q, other_cd))
                            || (orient(r, s, other_ab) == Ordering::Equal && on_segment(r, s, other_ab))
                    }
                    _ => true,
                };
                if crosses {
                    return Err(Error::EdgesCross(i, j));
                }
            }
        }
        Ok(())
    }
}

fn cross<T: Real>(o: [T; 2], a: [T; 2], b: [T; 2]) -> T {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

fn orient<T: Real>(o: [T; 2], a: [T; 2], b: [T; 2]) -> Ordering {
    cross(o, a, b).partial_cmp(&T::zero()).unwrap_or(Ordering::Equal)
}

/// `x` within the bounding box of segment `pq` (meaningful when collinear).
fn on_segment<T: Real>(p: [T; 2], q: [T; 2], x: [T; 2]) -> bool {
    (0..2).all(|c| x[c] >= p[c].min(q[c]) && x[c] <= p[c].max(q[c]))
}

fn segments_touch<T: Real>(p: [T; 2], q: [T; 2], r: [T; 2], s: [T; 2]) -> bool {
    let (d1, d2) = (orient(p, q, r), orient(p, q, s));
    let (d3, d4) = (orient(r, s, p), orient(r, s, q));
    if d1 != d2 && d3 != d4 && d1 != Ordering::Equal && d2 != Ordering::Equal && d3 != Ordering::Equal && d4 != Ordering::Equal {
        return true;
    }
    (d1 == Ordering::Equal && on_segment(p, q, r))
        || (d2 == Ordering::Equal && on_segment(p, q, s))
        || (d3 == Ordering::Equal && on_segment(r, s, p))
        || (d4 == Ordering::Equal && on_segment(r, s, q))
}

/// Attach every bounded face of a connected plane graph as a counterclockwise 2-cell.
///
/// Faces are traced through the rotation system given by the coordinates; the face with
/// the smallest (negative) signed area is the outer face and is skipped. Polygons are
/// ordered by their vertex tuple read from the smallest vertex.
pub fn window_lifting<T: Real>(emb: &PlanarEmbedding<T>) -> Result<CellComplex> {
    let n = emb.coords.len();
    let mut rotation: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (e, &(t, h)) in emb.ends.iter().enumerate() {
        rotation[t].push((h, e));
        rotation[h].push((t, e));
    }
    for (v, around) in rotation.iter_mut().enumerate() {
        let c = emb.coords[v];
        around.sort_by(|&(a, ea), &(b, eb)| {
            let angle = |w: usize| (emb.coords[w][1] - c[1]).atan2(emb.coords[w][0] - c[0]);
            angle(a).partial_cmp(&angle(b)).unwrap_or(Ordering::Equal).then(ea.cmp(&eb))
        });
    }
    if !connected(&rotation) {
        return Err(Error::Disconnected);
    }

    // half-edge (from, edge); next at the head is the clockwise neighbour of `from`
    let mut visited: HashMap<(usize, usize), bool> = HashMap::new();
    let mut faces: Vec<(T, Vec<(usize, usize)>)> = Vec::new();
    for (e, &(t, h)) in emb.ends.iter().enumerate() {
        for start in [(t, e), (h, e)] {
            if visited.contains_key(&start) {
                continue;
            }
            let mut walk = Vec::new();
            let mut cur = start;
            while visited.insert(cur, true).is_none() {
                walk.push(cur);
                let (from, edge) = cur;
                let (a, b) = emb.ends[edge];
                let to = if a == from { b } else { a };
                let around = &rotation[to];
                let pos = around.iter().position(|&(w, we)| w == from && we == edge).expect("edge in rotation");
                let next = around[(pos + around.len() - 1) % around.len()];
                cur = (to, next.1);
            }
            let area = walk.iter().fold(T::zero(), |acc, &(from, edge)| {
                let (a, b) = emb.ends[edge];
                let to = if a == from { b } else { a };
                let (p, q) = (emb.coords[from], emb.coords[to]);
                acc + p[0] * q[1] - q[0] * p[1]
            });
            faces.push((area, walk));
        }
    }
    if faces.len() <= 1 {
        return Ok(emb.graph.clone());
    }
    let outer = (0..faces.len())
        .min_by(|&a, &b| faces[a].0.partial_cmp(&faces[b].0).unwrap_or(Ordering::Equal))
        .expect("nonempty");

    let mut polygons: Vec<(Vec<usize>, Vec<(usize, i8)>)> = Vec::new();
    for (f, (_, walk)) in faces.iter().enumerate() {
        if f == outer {
            continue;
        }
        let mut signed: BTreeMap<usize, i32> = BTreeMap::new();
        for &(from, edge) in walk {
            *signed.entry(edge).or_default() += if emb.ends[edge].0 == from { 1 } else { -1 };
        }
        signed.retain(|_, s| *s != 0);
        let walk_vertices: Vec<usize> = walk.iter().map(|&(from, _)| from).collect();
        let mut succ = HashMap::new();
        for (&edge, &s) in &signed {
            let (a, b) = emb.ends[edge];
            let (from, to) = if s > 0 { (a, b) } else { (b, a) };
            if s.abs() != 1 || succ.insert(from, to).is_some() {
                return Err(Error::NonSimpleFace(walk_vertices));
            }
        }
        let start = *succ.keys().min().ok_or_else(|| Error::NonSimpleFace(walk_vertices.clone()))?;
        let mut cycle = vec![start];
        let mut cur = succ[&start];
        while cur != start && cycle.len() <= succ.len() {
            cycle.push(cur);
            cur = *succ.get(&cur).ok_or_else(|| Error::NonSimpleFace(walk_vertices.clone()))?;
        }
        if cycle.len() != succ.len() {
            return Err(Error::NonSimpleFace(walk_vertices));
        }
        polygons.push((cycle, signed.into_iter().map(|(e, s)| (e, s as i8)).collect()));
    }
    polygons.sort_by(|a, b| a.0.cmp(&b.0));

    let vl = emb.graph.cells(0);
    let labels = polygons
        .iter()
        .map(|(c, _)| c.iter().map(|&v| vl[v].as_str()).collect::<Vec<_>>().join("-"))
        .collect();
    let b2 = BoundaryMatrix::from_columns(emb.ends.len(), polygons.into_iter().map(|(_, col)| col).collect())?;
    let mut cells = emb.graph.all_cells().to_vec();
    cells.push(labels);
    let mut boundaries = emb.graph.boundaries().to_vec();
    boundaries.push(b2);
    CellComplex::from_boundary_matrices(cells, boundaries)
}

fn connected(rotation: &[Vec<(usize, usize)>]) -> bool {
    let mut seen = vec![false; rotation.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &(v, _) in &rotation[u] {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_square_window() {
        let emb = PlanarEmbedding::new(vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]], &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let cc = window_lifting(&emb).unwrap();
        assert_eq!(cc.cell_counts(), vec![4, 4, 1]);
        assert_eq!(cc.polygon_cycle(0).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn shared_edge_has_opposite_signs() {
        let emb = PlanarEmbedding::new(
            vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]],
            &[(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        let cc = window_lifting(&emb).unwrap();
        assert_eq!(cc.num_cells(2), 2);
        let b2 = cc.boundary(2).unwrap();
        assert_eq!(b2.get(1, 0) * b2.get(1, 1), -1);
    }

    #[test]
    fn tree_and_errors() {
        let tree = PlanarEmbedding::new(vec![[0.0, 0.0], [1.0, 0.0], [2.0, 1.0]], &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(window_lifting(&tree).unwrap().dim(), 1);
        let crossing = PlanarEmbedding::new(vec![[0.0, 0.0], [1.0, 1.0], [1.0, 0.0], [0.0, 1.0]], &[(0, 1), (2, 3)]);
        assert_eq!(crossing.unwrap_err(), Error::EdgesCross(0, 1));
        let overlap = PlanarEmbedding::new(vec![[0.0, 0.0], [2.0, 0.0], [1.0, 0.0]], &[(0, 1), (0, 2)]);
        assert_eq!(overlap.unwrap_err(), Error::EdgesCross(0, 1));
        let split = PlanarEmbedding::new(vec![[0.0, 0.0], [1.0, 0.0], [5.0, 5.0], [6.0, 5.0]], &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(window_lifting(&split), Err(Error::Disconnected));
    }

    #[test]
    fn pendant_edge_inside_a_face_cancels() {
        let emb = PlanarEmbedding::new(
            vec![[0.0, 0.0], [4.0, 0.0], [4.0, 4.0], [0.0, 4.0], [1.0, 1.0]],
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)],
        )
        .unwrap();
        let cc = window_lifting(&emb).unwrap();
        assert_eq!(cc.num_cells(2), 1);
        assert_eq!(cc.boundary(2).unwrap().column_len(0), 4);
    }
}
