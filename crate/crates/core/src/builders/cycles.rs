//! Graph liftings that attach 2-cells along cycles of a graph.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::complex::{canonical_cycle, BoundaryMatrix, CellComplex};
use crate::error::{Error, Result};

/// Default cap on the number of chordless cycles enumerated.
pub const DEFAULT_MAX_CYCLES: usize = 100_000;

struct Graph {
    vertices: usize,
    /// `(tail, head)` per edge.
    edges: Vec<(usize, usize)>,
    /// `(neighbour, edge)` per vertex, sorted.
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    fn from_complex(cc: &CellComplex) -> Result<Self> {
        if cc.dim() > 1 {
            return Err(Error::DimensionTooHigh { dim: cc.dim(), max: 1 });
        }
        let vertices = cc.num_cells(0);
        let edges = (0..cc.num_cells(1))
            .map(|j| cc.edge_endpoints(j).ok_or_else(|| Error::InvalidEntry(format!("edge {j} lacks a head and a tail"))))
            .collect::<Result<Vec<_>>>()?;
        let mut adjacency = vec![Vec::new(); vertices];
        for (e, &(t, h)) in edges.iter().enumerate() {
            adjacency[t].push((h, e));
            adjacency[h].push((t, e));
        }
        for a in &mut adjacency {
            a.sort_unstable();
        }
        Ok(Graph { vertices, edges, adjacency })
    }

    /// Column of the closed walk `cycle` through the given edges, `+1` where the walk
    /// follows the edge's orientation.
    fn cycle_column(&self, cycle: &[usize], edges: &[usize]) -> Vec<(usize, i8)> {
        cycle
            .iter()
            .zip(edges)
            .map(|(&from, &e)| (e, if self.edges[e].0 == from { 1 } else { -1 }))
            .collect()
    }
}

fn attach(
    cc: &CellComplex,
    polygons: Vec<(Vec<usize>, Vec<(usize, i8)>)>,
) -> Result<CellComplex> {
    if polygons.is_empty() {
        return Ok(cc.clone());
    }
    let vl = cc.cells(0);
    let mut labels = Vec::with_capacity(polygons.len());
    let mut used = HashSet::new();
    let mut columns = Vec::with_capacity(polygons.len());
    for (cycle, column) in polygons {
        let base = cycle.iter().map(|&v| vl[v].as_str()).collect::<Vec<_>>().join("-");
        let mut label = base.clone();
        let mut n = 1;
        while !used.insert(label.clone()) {
            n += 1;
            label = format!("{base}#{n}");
        }
        labels.push(label);
        columns.push(column);
    }
    let b2 = BoundaryMatrix::from_columns(cc.num_cells(1), columns)?;
    let mut cells = cc.all_cells().to_vec();
    cells.push(labels);
    let mut boundaries = cc.boundaries().to_vec();
    boundaries.push(b2);
    CellComplex::from_boundary_matrices(cells, boundaries)
}

/// Fill the fundamental cycles of a BFS spanning tree rooted at `root` (default vertex 0).
///
/// Each non-tree edge `u → v` closes the cycle `u → v`, then the tree path back to `u`;
/// the resulting 2-cell is then put in canonical orientation. Produces
/// `|C_1| − |C_0| + 1` polygons.
pub fn spanning_tree_lifting(cc: &CellComplex, root: Option<usize>) -> Result<CellComplex> {
    let g = Graph::from_complex(cc)?;
    let root = root.unwrap_or(0);
    if root >= g.vertices {
        return Err(Error::CellOutOfRange { dim: 0, index: root });
    }
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; g.vertices];
    let mut depth = vec![usize::MAX; g.vertices];
    let mut tree_edge = vec![false; g.edges.len()];
    depth[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &(v, e) in &g.adjacency[u] {
            if depth[v] == usize::MAX {
                depth[v] = depth[u] + 1;
                parent[v] = Some((u, e));
                tree_edge[e] = true;
                queue.push_back(v);
            }
        }
    }
    if depth.contains(&usize::MAX) {
        return Err(Error::Disconnected);
    }

    let mut polygons = Vec::new();
    for (e, &(u, v)) in g.edges.iter().enumerate() {
        if tree_edge[e] {
            continue;
        }
        // tree path v → u through the lowest common ancestor
        let (mut a, mut b) = (v, u);
        let mut up_from_v = vec![];
        let mut up_from_u = vec![];
        while a != b {
            if depth[a] >= depth[b] {
                let (p, pe) = parent[a].expect("non-root");
                up_from_v.push((a, pe));
                a = p;
            } else {
                let (p, pe) = parent[b].expect("non-root");
                up_from_u.push((p, pe));
                b = p;
            }
        }
        let mut cycle = vec![u];
        let mut walk_edges = vec![e];
        for &(x, pe) in &up_from_v {
            cycle.push(x);
            walk_edges.push(pe);
        }
        for &(p, pe) in up_from_u.iter().rev() {
            cycle.push(p);
            walk_edges.push(pe);
        }
        // cycle = [u, v, …, lca, …]; walk_edges[i] leaves cycle[i]
        let mut column = g.cycle_column(&cycle, &walk_edges);
        let (canon, flipped) = canonical_cycle(&cycle);
        if flipped {
            for entry in &mut column {
                entry.1 = -entry.1;
            }
        }
        polygons.push((canon, column));
    }
    attach(cc, polygons)
}

/// Chordless cycles (induced cycles of length ≥ 3) of a simple graph, as canonical vertex
/// tuples in lexicographic order.
pub fn chordless_cycles(cc: &CellComplex, max_cells: usize) -> Result<Vec<Vec<usize>>> {
    let g = Graph::from_complex(cc)?;
    let mut seen = HashSet::new();
    for &(t, h) in &g.edges {
        if !seen.insert((t.min(h), t.max(h))) {
            let vl = cc.cells(0);
            return Err(Error::ParallelEdge(vl[t].clone(), vl[h].clone()));
        }
    }
    let adj: Vec<HashSet<usize>> =
        g.adjacency.iter().map(|a| a.iter().map(|&(v, _)| v).collect()).collect();
    let mut out = Vec::new();
    for s in 0..g.vertices {
        let mut path = vec![s];
        for &(v1, _) in &g.adjacency[s] {
            if v1 > s {
                path.push(v1);
                extend(&adj, &g.adjacency, &mut path, &mut out, max_cells)?;
                path.pop();
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Grow an induced path `path = [s, v1, …, vk]` whose vertices all exceed `s`. A neighbour
/// of `s` closes a cycle (kept once, when `v1` is the smaller end).
fn extend(
    adj: &[HashSet<usize>],
    sorted_adj: &[Vec<(usize, usize)>],
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) -> Result<()> {
    let s = path[0];
    let last = *path.last().expect("nonempty path");
    for &(w, _) in &sorted_adj[last] {
        if w <= s || path.contains(&w) {
            continue;
        }
        if path[1..path.len() - 1].iter().any(|p| adj[w].contains(p)) {
            continue;
        }
        if adj[w].contains(&s) {
            if path[1] < w {
                if out.len() >= cap {
                    return Err(Error::CapExceeded(cap));
                }
                let mut cycle = path.clone();
                cycle.push(w);
                out.push(cycle);
            }
        } else {
            path.push(w);
            extend(adj, sorted_adj, path, out, cap)?;
            path.pop();
        }
    }
    Ok(())
}

/// Attach a 2-cell to every chordless cycle, in canonical orientation and sorted order.
pub fn chordless_cycle_lifting(cc: &CellComplex, max_cells: usize) -> Result<CellComplex> {
    let cycles = chordless_cycles(cc, max_cells)?;
    let g = Graph::from_complex(cc)?;
    let lookup: HashMap<(usize, usize), usize> = g
        .edges
        .iter()
        .enumerate()
        .flat_map(|(e, &(t, h))| [((t, h), e), ((h, t), e)])
        .collect();
    let polygons = cycles
        .into_iter()
        .map(|cycle| {
            let n = cycle.len();
            let edges: Vec<usize> = (0..n).map(|p| lookup[&(cycle[p], cycle[(p + 1) % n])]).collect();
            let column = g.cycle_column(&cycle, &edges);
            (cycle, column)
        })
        .collect();
    attach(cc, polygons)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{betti_numbers, Coefficients};

    fn graph(n: usize, edges: &[(usize, usize)]) -> CellComplex {
        let v: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let e: Vec<(String, String)> = edges.iter().map(|&(a, b)| (v[a].clone(), v[b].clone())).collect();
        CellComplex::from_tuples(&v, &e, &[]).unwrap()
    }

    #[test]
    fn tree_lifting() {
        let tree = graph(4, &[(0, 1), (1, 2), (1, 3)]);
        assert_eq!(spanning_tree_lifting(&tree, None).unwrap(), tree);
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let lifted = spanning_tree_lifting(&c4, None).unwrap();
        assert_eq!(lifted.cell_counts(), vec![4, 4, 1]);
        assert_eq!(lifted.polygon_cycle(0).unwrap(), vec![0, 1, 2, 3]);
        let toy = graph(5, &[(0, 1), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)]);
        let lifted = spanning_tree_lifting(&toy, Some(2)).unwrap();
        assert_eq!(lifted.num_cells(2), 2);
        assert_eq!(betti_numbers(&lifted, Coefficients::Real).unwrap().betti, vec![1, 0, 0]);
        assert_eq!(spanning_tree_lifting(&graph(3, &[(0, 1)]), None), Err(Error::Disconnected));
    }

    #[test]
    fn chordless() {
        let tri = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(chordless_cycles(&tri, 10).unwrap(), vec![vec![0, 1, 2]]);
        let chorded = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]);
        assert_eq!(chordless_cycles(&chorded, 10).unwrap(), vec![vec![0, 1, 2], vec![0, 2, 3]]);
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(chordless_cycles(&k4, 10).unwrap().len(), 4);
        assert_eq!(chordless_cycles(&k4, 3), Err(Error::CapExceeded(3)));
        let c5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(chordless_cycles(&c5, 10).unwrap(), vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn chordless_lifting_orientation() {
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let lifted = chordless_cycle_lifting(&k4, 10).unwrap();
        assert_eq!(lifted.num_cells(2), 4);
        for j in 0..4 {
            let c = lifted.polygon_cycle(j).unwrap();
            assert!(!canonical_cycle(&c).1);
        }
        assert_eq!(betti_numbers(&lifted, Coefficients::Real).unwrap().betti, vec![1, 0, 1]);
    }
}
