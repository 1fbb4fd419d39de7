use crate::builders::simplicial::from_simplicial;
use crate::complex::CellComplex;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Default cap on the number of simplices a Vietoris–Rips construction may produce.
pub const DEFAULT_MAX_SIMPLICES: usize = 1_000_000;

/// Finite points of a common dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct PointCloud<T: Real> {
    points: Vec<Vec<T>>,
}

impl<T: Real> PointCloud<T> {
    pub fn new(points: Vec<Vec<T>>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::InvalidPointCloud("no points".into()));
        };
        let d = first.len();
        for (i, p) in points.iter().enumerate() {
            if p.len() != d {
                return Err(Error::InvalidPointCloud(format!("point {i} has {} coordinates, expected {d}", p.len())));
            }
            if p.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidPointCloud(format!("point {i} has a non-finite coordinate")));
            }
        }
        Ok(PointCloud { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<T>] {
        &self.points
    }

    pub fn distance(&self, i: usize, j: usize) -> T {
        self.points[i]
            .iter()
            .zip(&self.points[j])
            .fold(T::zero(), |acc, (&a, &b)| acc + (a - b) * (a - b))
            .sqrt()
    }

    /// Largest pairwise distance among the given points (0 for a single point).
    pub fn diameter(&self, idx: &[usize]) -> T {
        let mut d = T::zero();
        for (p, &i) in idx.iter().enumerate() {
            for &j in &idx[p + 1..] {
                let x = self.distance(i, j);
                if x > d {
                    d = x;
                }
            }
        }
        d
    }

    /// Same points with the given permutation applied: point `i` of the result is point
    /// `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        PointCloud { points: perm.iter().map(|&i| self.points[i].clone()).collect() }
    }
}

/// All simplices with at most `max_dim + 1` vertices whose pairwise distances are `≤ eps`,
/// as sorted vertex tuples.
pub fn vietoris_rips_simplices<T: Real>(
    pc: &PointCloud<T>,
    eps: T,
    max_dim: usize,
    cap: usize,
) -> Result<Vec<Vec<usize>>> {
    let n = pc.len();
    let neighbours: Vec<Vec<usize>> =
        (0..n).map(|i| (i + 1..n).filter(|&j| pc.distance(i, j) <= eps).collect()).collect();
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<usize>, Vec<usize>)> = (0..n).rev().map(|i| (vec![i], neighbours[i].clone())).collect();
    while let Some((simplex, candidates)) = stack.pop() {
        out.push(simplex.clone());
        if out.len() > cap {
            return Err(Error::TooManySimplices(cap));
        }
        if simplex.len() > max_dim {
            continue;
        }
        for (p, &c) in candidates.iter().enumerate().rev() {
            let next: Vec<usize> = candidates[p + 1..]
                .iter()
                .copied()
                .filter(|d| neighbours[c].binary_search(d).is_ok())
                .collect();
            let mut s = simplex.clone();
            s.push(c);
            stack.push((s, next));
        }
    }
    Ok(out)
}

/// Vietoris–Rips complex at scale `eps`, truncated at dimension `max_dim`. Vertices are
/// labelled by point index.
pub fn vietoris_rips<T: Real>(pc: &PointCloud<T>, eps: T, max_dim: usize) -> Result<CellComplex> {
    let simplices = vietoris_rips_simplices(pc, eps, max_dim, DEFAULT_MAX_SIMPLICES)?;
    let labels: Vec<String> = (0..pc.len()).map(|i| i.to_string()).collect();
    from_simplicial(&labels, &simplices, false)
}
