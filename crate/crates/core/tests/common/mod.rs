#![allow(dead_code)]

use arcc::{
    chordless_cycle_lifting, cubical, from_simplicial, product, spanning_tree_lifting, vietoris_rips, window_lifting,
    CellComplex, Embedding, Points,
};
use nalgebra::DMatrix;
use num_rational::Ratio;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn toy() -> CellComplex {
    CellComplex::from_tuples(
        &["0", "1", "2", "3", "4"],
        &[("0", "1"), ("0", "3"), ("0", "4"), ("1", "2"), ("2", "3"), ("3", "4")],
        &[vec!["0", "3", "4"], vec!["0", "1", "2", "3"]],
    )
    .unwrap()
}

pub fn toy_minus_triangle() -> CellComplex {
    CellComplex::from_tuples(
        &["0", "1", "2", "3", "4"],
        &[("0", "1"), ("0", "3"), ("0", "4"), ("1", "2"), ("2", "3"), ("3", "4")],
        &[vec!["0", "1", "2", "3"]],
    )
    .unwrap()
}

/// Rank over ℚ by fraction-exact Gaussian elimination.
pub fn rational_rank(m: &DMatrix<i64>) -> usize {
    let mut a: Vec<Vec<Ratio<i64>>> =
        (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| Ratio::from_integer(m[(i, j)])).collect()).collect();
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][c] != Ratio::from_integer(0)) else {
            continue;
        };
        a.swap(rank, p);
        for r in 0..rows {
            if r != rank && a[r][c] != Ratio::from_integer(0) {
                let f = a[r][c] / a[rank][c];
                for k in c..cols {
                    let d = f * a[rank][k];
                    a[r][k] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Betti numbers from ℚ ranks of the boundary matrices.
pub fn rational_betti(cc: &CellComplex) -> Vec<usize> {
    let n = cc.dim();
    let ranks: Vec<usize> = (0..=n + 1)
        .map(|k| if k == 0 || k > n { 0 } else { rational_rank(&cc.boundary(k).unwrap().to_dense::<i64>()) })
        .collect();
    (0..=n).map(|k| cc.num_cells(k) - ranks[k] - ranks[k + 1]).collect()
}

pub fn random_points(rng: &mut StdRng, n: usize, d: usize) -> Points {
    Points::new((0..n).map(|_| (0..d).map(|_| rng.gen_range(0.0..1.0)).collect()).collect()).unwrap()
}

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// Connected simple graph: a random spanning tree plus extra edges.
pub fn random_graph(rng: &mut StdRng, n: usize, extra: usize) -> CellComplex {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = std::collections::BTreeSet::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (a, b) = (order[i], order[j]);
        edges.insert((a.min(b), a.max(b)));
    }
    for _ in 0..extra {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    let vl = labels(n);
    let e: Vec<(String, String)> = edges.iter().map(|&(a, b)| (vl[a].clone(), vl[b].clone())).collect();
    CellComplex::from_tuples(&vl, &e, &[]).unwrap()
}

/// Grid graph on a jittered `w × h` lattice with random non-crossing diagonals and some
/// lattice edges removed while staying connected, plus its coordinates.
pub fn random_planar(rng: &mut StdRng, w: usize, h: usize) -> Embedding {
    let id = |x: usize, y: usize| y * w + x;
    let mut coords = Vec::new();
    for y in 0..h {
        for x in 0..w {
            coords.push([x as f64 + rng.gen_range(-0.2..0.2), y as f64 + rng.gen_range(-0.2..0.2)]);
        }
    }
    let mut edges = Vec::new();
    // snake path keeps the graph connected
    for y in 0..h {
        for x in 0..w - 1 {
            edges.push((id(x, y), id(x + 1, y)));
        }
        if y + 1 < h {
            let x = if y % 2 == 0 { w - 1 } else { 0 };
            edges.push((id(x, y), id(x, y + 1)));
        }
    }
    for y in 0..h.saturating_sub(1) {
        for x in 0..w {
            let e = (id(x, y), id(x, y + 1));
            if !edges.contains(&e) && rng.gen_bool(0.6) {
                edges.push(e);
            }
            if x + 1 < w && rng.gen_bool(0.3) {
                edges.push(if rng.gen_bool(0.5) { (id(x, y), id(x + 1, y + 1)) } else { (id(x + 1, y), id(x, y + 1)) });
            }
        }
    }
    Embedding::new(coords, &edges).unwrap()
}

/// Small random output of one of the builders, chosen by `rng`.
pub fn random_builder_output(rng: &mut StdRng) -> CellComplex {
    match rng.gen_range(0..7) {
        0 => {
            let (a, b) = (rng.gen_range(3..9), rng.gen_range(1..4));
            let pc = random_points(rng, a, b);
            let eps = rng.gen_range(0.2..0.9);
            vietoris_rips(&pc, eps, rng.gen_range(1..4)).unwrap()
        }
        1 => {
            let d = rng.gen_range(1..4);
            let sizes: Vec<usize> = (0..d).map(|_| rng.gen_range(1..4)).collect();
            cubical(&sizes).unwrap()
        }
        2 => {
            let (a, b) = (rng.gen_range(3..9), rng.gen_range(0..8));
            let g = random_graph(rng, a, b);
            let root = rng.gen_range(0..g.num_cells(0));
            spanning_tree_lifting(&g, Some(root)).unwrap()
        }
        3 => {
            let (a, b) = (rng.gen_range(3..8), rng.gen_range(0..7));
            let g = random_graph(rng, a, b);
            chordless_cycle_lifting(&g, 1000).unwrap()
        }
        4 => {
            let (a, b) = (rng.gen_range(2..5), rng.gen_range(2..4));
            let emb = random_planar(rng, a, b);
            window_lifting(&emb).unwrap()
        }
        5 => random_simplicial(rng),
        _ => {
            let a = small_complex(rng);
            let b = small_complex(rng);
            product(&a, &b)
        }
    }
}

/// Random simplicial complex from the closure of a few random simplices.
pub fn random_simplicial(rng: &mut StdRng) -> CellComplex {
    let n = rng.gen_range(3..8);
    let mut simplices: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    for _ in 0..rng.gen_range(1..5) {
        let mut s: Vec<usize> = (0..n).collect();
        s.shuffle(rng);
        s.truncate(rng.gen_range(2..=4.min(n)));
        simplices.push(s);
    }
    from_simplicial(&labels(n), &simplices, true).unwrap()
}

/// A complex small enough to take products of.
pub fn small_complex(rng: &mut StdRng) -> CellComplex {
    match rng.gen_range(0..4) {
        0 => cubical(&[rng.gen_range(1..4)]).unwrap(),
        1 => {
            let (a, b) = (rng.gen_range(2..5), rng.gen_range(0..3));
            let g = random_graph(rng, a, b);
            spanning_tree_lifting(&g, None).unwrap()
        }
        2 => {
            let (a, b) = (rng.gen_range(1..5), rng.gen_range(0..4));
            random_graph(rng, a, b)
        },
        _ => random_simplicial(rng),
    }
}

/// Graph plus 2-cells whose boundaries are signed sums of random closed walks, keeping
/// only columns with entries in `{-1, 0, 1}`. Columns may be empty, non-simple or split.
pub fn random_two_complex(rng: &mut StdRng) -> CellComplex {
    let (a, b) = (rng.gen_range(3..7), rng.gen_range(1..7));
    let g = random_graph(rng, a, b);
    let n = g.num_cells(0);
    let b1 = g.boundary(1).unwrap().clone();
    let mut adj = vec![Vec::new(); n];
    for j in 0..b1.cols() {
        let (t, h) = g.edge_endpoints(j).unwrap();
        adj[t].push((h, j, 1i64));
        adj[h].push((t, j, -1i64));
    }
    let mut columns = Vec::new();
    while columns.len() < rng.gen_range(1..5) {
        let mut col = vec![0i64; b1.cols()];
        if rng.gen_bool(0.9) {
            for _ in 0..rng.gen_range(1..3) {
                let start = rng.gen_range(0..n);
                let mut cur = start;
                let mut steps = 0;
                loop {
                    let &(next, e, s) = adj[cur].choose(rng).unwrap();
                    col[e] += s;
                    cur = next;
                    steps += 1;
                    if cur == start && (steps >= 3 || rng.gen_bool(0.3)) || steps > 12 {
                        break;
                    }
                }
                if cur != start {
                    col.iter_mut().for_each(|c| *c = 0);
                }
            }
        }
        if col.iter().all(|c| c.abs() <= 1) {
            columns.push(col.iter().enumerate().filter(|(_, &c)| c != 0).map(|(e, &c)| (e, c as i8)).collect::<Vec<_>>());
        }
    }
    let mut cells = g.all_cells().to_vec();
    cells.push((0..columns.len()).map(|i| format!("f{i}")).collect());
    let b2 = arcc::BoundaryMatrix::from_columns(b1.cols(), columns).unwrap();
    CellComplex::from_boundary_matrices(cells, vec![b1, b2]).unwrap()
}

pub fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0, |a: f64, &b| a.max(b.abs()))
}
