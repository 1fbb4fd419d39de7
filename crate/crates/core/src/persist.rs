//! Persistent homology of Vietoris–Rips filtrations over ℤ/2.

use std::cmp::Ordering;

use crate::builders::{vietoris_rips_simplices, PointCloud, DEFAULT_MAX_SIMPLICES};
use crate::error::Result;
use crate::scalar::Real;

#[derive(Clone, Debug, PartialEq)]
pub struct FiltrationSimplex<T: Real> {
    pub birth: T,
    /// Sorted point indices.
    pub vertices: Vec<usize>,
}

impl<T: Real> FiltrationSimplex<T> {
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }
}

/// Simplices ordered by birth, then dimension, then vertex tuple. Every face precedes its
/// cofaces.
#[derive(Clone, Debug, PartialEq)]
pub struct Filtration<T: Real> {
    pub simplices: Vec<FiltrationSimplex<T>>,
}

/// Vietoris–Rips filtration up to scale `max_eps` and dimension `max_dim`. A simplex is born
/// at the largest pairwise distance among its vertices.
pub fn vr_filtration<T: Real>(pc: &PointCloud<T>, max_eps: T, max_dim: usize) -> Result<Filtration<T>> {
    vr_filtration_capped(pc, max_eps, max_dim, DEFAULT_MAX_SIMPLICES)
}

pub fn vr_filtration_capped<T: Real>(
    pc: &PointCloud<T>,
    max_eps: T,
    max_dim: usize,
    cap: usize,
) -> Result<Filtration<T>> {
    let mut simplices: Vec<FiltrationSimplex<T>> = vietoris_rips_simplices(pc, max_eps, max_dim, cap)?
        .into_iter()
        .map(|vertices| FiltrationSimplex { birth: pc.diameter(&vertices), vertices })
        .collect();
    simplices.sort_by(filtration_order);
    Ok(Filtration { simplices })
}

fn filtration_order<T: Real>(a: &FiltrationSimplex<T>, b: &FiltrationSimplex<T>) -> Ordering {
    a.birth
        .partial_cmp(&b.birth)
        .unwrap_or(Ordering::Equal)
        .then(a.vertices.len().cmp(&b.vertices.len()))
        .then_with(|| a.vertices.cmp(&b.vertices))
}

/// One persistence interval; `death == None` means it never dies.
#[derive(Clone, Debug, PartialEq)]
pub struct Bar<T: Real> {
    pub dim: usize,
    pub birth: T,
    pub death: Option<T>,
}

impl<T: Real> Bar<T> {
    pub fn is_alive_at(&self, eps: T) -> bool {
        self.birth <= eps && self.death.is_none_or(|d| eps < d)
    }

    pub fn is_infinite(&self) -> bool {
        self.death.is_none()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PersistenceDiagram<T: Real> {
    pub bars: Vec<Bar<T>>,
}

impl<T: Real> PersistenceDiagram<T> {
    /// Number of `dim`-dimensional bars alive at scale `eps`.
    pub fn alive(&self, dim: usize, eps: T) -> usize {
        self.bars.iter().filter(|b| b.dim == dim && b.is_alive_at(eps)).count()
    }

    pub fn in_dim(&self, dim: usize) -> impl Iterator<Item = &Bar<T>> {
        self.bars.iter().filter(move |b| b.dim == dim)
    }
}

/// Standard column reduction of the ℤ/2 boundary matrix in filtration order.
///
/// A pivot pair `(i, j)` gives the bar `(dim σ_i, birth σ_i, birth σ_j)`; unpaired
/// creators give infinite bars. Zero-length bars are dropped unless `keep_zero_bars`.
/// Bars are listed by dimension, then birth, then death.
pub fn persistence<T: Real>(f: &Filtration<T>, keep_zero_bars: bool) -> PersistenceDiagram<T> {
    let n = f.simplices.len();
    let index: std::collections::HashMap<&[usize], usize> =
        f.simplices.iter().enumerate().map(|(i, s)| (s.vertices.as_slice(), i)).collect();

    // columns as sorted row-index lists
    let mut columns: Vec<Vec<usize>> = f
        .simplices
        .iter()
        .map(|s| {
            if s.vertices.len() < 2 {
                return Vec::new();
            }
            let mut col: Vec<usize> = (0..s.vertices.len())
                .map(|skip| {
                    let face: Vec<usize> =
                        s.vertices.iter().enumerate().filter(|&(p, _)| p != skip).map(|(_, &v)| v).collect();
                    index[face.as_slice()]
                })
                .collect();
            col.sort_unstable();
            col
        })
        .collect();

    let mut pivot_owner: Vec<Option<usize>> = vec![None; n];
    let mut paired = vec![false; n];
    let mut pairs = Vec::new();
    for j in 0..n {
        while let Some(&low) = columns[j].last() {
            match pivot_owner[low] {
                Some(other) => {
                    let merged = symmetric_difference(&columns[j], &columns[other]);
                    columns[j] = merged;
                }
                None => {
                    pivot_owner[low] = Some(j);
                    paired[low] = true;
                    paired[j] = true;
                    pairs.push((low, j));
                    break;
                }
            }
        }
    }

    let mut bars = Vec::new();
    for (i, j) in pairs {
        let (si, sj) = (&f.simplices[i], &f.simplices[j]);
        if keep_zero_bars || si.birth != sj.birth {
            bars.push(Bar { dim: si.dim(), birth: si.birth, death: Some(sj.birth) });
        }
    }
    for (i, s) in f.simplices.iter().enumerate() {
        if !paired[i] {
            bars.push(Bar { dim: s.dim(), birth: s.birth, death: None });
        }
    }
    bars.sort_by(|a, b| {
        a.dim
            .cmp(&b.dim)
            .then(a.birth.partial_cmp(&b.birth).unwrap_or(Ordering::Equal))
            .then(match (a.death, b.death) {
                (Some(x), Some(y)) => x.partial_cmp(&y).unwrap_or(Ordering::Equal),
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (None, None) => Ordering::Equal,
            })
    });
    PersistenceDiagram { bars }
}

fn symmetric_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}
