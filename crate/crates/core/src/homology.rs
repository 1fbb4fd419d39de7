//! Real and integer homology.

use nalgebra::DVector;
use serde::{Deserialize, Serialize};

use crate::complex::{CellComplex, ChainVector};
use crate::error::{Error, Result};
use crate::hodge::{spectral_basis, Subspace};
use crate::linalg::{dense_boundary, least_squares, rank};
use crate::scalar::Real;
use crate::snf::smith_normal_form_sparse;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Real,
    Integer,
}

/// Betti numbers per dimension; torsion coefficients (invariant factors > 1) are only
/// filled on the integer path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologySummary {
    pub betti: Vec<usize>,
    pub torsion: Vec<Vec<i64>>,
}

pub fn betti_numbers(cc: &CellComplex, coefficients: Coefficients) -> Result<HomologySummary> {
    match coefficients {
        Coefficients::Real => Ok(betti_numbers_real::<f64>(cc)),
        Coefficients::Integer => betti_numbers_integer(cc),
    }
}

/// `β_k = |C_k| − rank B_k − rank B_{k+1}` with numerical ranks in `T`.
pub fn betti_numbers_real<T: Real>(cc: &CellComplex) -> HomologySummary {
    let n = cc.dim();
    let ranks: Vec<usize> = (0..=n + 1)
        .map(|k| if k == 0 || k > n { 0 } else { rank(&dense_boundary::<T>(cc, k)) })
        .collect();
    let betti = (0..=n).map(|k| cc.num_cells(k) - ranks[k] - ranks[k + 1]).collect();
    HomologySummary { betti, torsion: vec![Vec::new(); n + 1] }
}

/// Free ranks and torsion of `H_k(·; ℤ)` from Smith normal forms of the boundaries.
pub fn betti_numbers_integer(cc: &CellComplex) -> Result<HomologySummary> {
    let n = cc.dim();
    let snfs = (1..=n)
        .map(|k| smith_normal_form_sparse(cc.boundary(k).expect("k ≤ dim")))
        .collect::<Result<Vec<_>>>()?;
    let rank = |k: usize| if k == 0 || k > n { 0 } else { snfs[k - 1].rank };
    let betti = (0..=n).map(|k| cc.num_cells(k) - rank(k) - rank(k + 1)).collect();
    let torsion = (0..=n)
        .map(|k| if k < n { snfs[k].torsion() } else { Vec::new() })
        .collect();
    Ok(HomologySummary { betti, torsion })
}

/// Orthonormal basis of `ker L_k`; its size is `β_k` over ℝ.
pub fn harmonic_basis<T: Real>(cc: &CellComplex, k: usize) -> Result<Vec<ChainVector<T>>> {
    let basis = spectral_basis::<T>(cc, k, None)?;
    Ok(basis
        .tags
        .iter()
        .enumerate()
        .filter(|(_, &t)| t == Subspace::Harmonic)
        .map(|(i, _)| ChainVector::new(k, basis.eigenvectors.column(i).into_owned()))
        .collect())
}

/// Outcome of a homology-class comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct Homologous<T: Real> {
    pub homologous: bool,
    /// `w` with `B_{k+1} w = a − b`, present when `homologous`.
    pub witness: Option<ChainVector<T>>,
    /// Least-squares residual of `a − b` against `im B_{k+1}`, after scaling to max-abs 1.
    pub residual: T,
}

const CYCLE_TOL: f64 = 1e-8;

/// Whether cycles `a` and `b` differ by a boundary. Both must lie in `ker B_k`.
pub fn homologous<T: Real>(cc: &CellComplex, a: &ChainVector<T>, b: &ChainVector<T>) -> Result<Homologous<T>> {
    homologous_with_tolerance(cc, a, b, T::lit(CYCLE_TOL))
}

pub fn homologous_with_tolerance<T: Real>(
    cc: &CellComplex,
    a: &ChainVector<T>,
    b: &ChainVector<T>,
    tol: T,
) -> Result<Homologous<T>> {
    if a.dim != b.dim {
        return Err(Error::ShapeMismatch(format!("{}-chain vs {}-chain", a.dim, b.dim)));
    }
    a.check_against(cc)?;
    b.check_against(cc)?;
    let k = a.dim;
    for c in [a, b] {
        if k > 0 {
            let scale = max_abs(&c.values);
            let bx = cc.apply_boundary(c)?.values.norm();
            let rel = if scale > T::zero() { bx / scale } else { bx };
            if rel > tol {
                return Err(Error::NotACycle(rel.to_f64().unwrap_or(f64::NAN)));
            }
        }
    }
    let diff = &a.values - &b.values;
    let scale = max_abs(&diff);
    if scale == T::zero() {
        return Ok(Homologous {
            homologous: true,
            witness: Some(ChainVector::new(k + 1, DVector::zeros(cc.num_cells(k + 1)))),
            residual: T::zero(),
        });
    }
    let target = &diff / scale;
    let bk1 = dense_boundary::<T>(cc, k + 1);
    let w = least_squares(&bk1, &target);
    let residual = (&bk1 * &w - &target).norm();
    if residual <= tol {
        Ok(Homologous { homologous: true, witness: Some(ChainVector::new(k + 1, w * scale)), residual })
    } else {
        Ok(Homologous { homologous: false, witness: None, residual })
    }
}

fn max_abs<T: Real>(v: &DVector<T>) -> T {
    v.iter().fold(T::zero(), |m, &x| if x.abs() > m { x.abs() } else { m })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::CellRef;

    fn toy_minus_triangle() -> CellComplex {
        CellComplex::from_tuples(
            &["0", "1", "2", "3", "4"],
            &[("0", "1"), ("0", "3"), ("0", "4"), ("1", "2"), ("2", "3"), ("3", "4")],
            &[vec!["0", "1", "2", "3"]],
        )
        .unwrap()
    }

    #[test]
    fn worked_example_cycles() {
        let cc = toy_minus_triangle();
        let c = ChainVector::from_vec(1, vec![0.0f64, 1.0, -1.0, 0.0, 0.0, 1.0]);
        let c2 = ChainVector::from_vec(1, vec![1.0, 0.0, -1.0, 1.0, 1.0, 1.0]);
        let h = homologous(&cc, &c2, &c).unwrap();
        assert!(h.homologous);
        let w = h.witness.unwrap();
        assert!((w.values[0] - 1.0).abs() < 1e-8);

        let same = homologous(&cc, &c, &c).unwrap();
        assert!(same.homologous);
        assert_eq!(same.witness.unwrap().values, DVector::zeros(1));

        let zero = ChainVector::zeros(&cc, 1);
        assert!(!homologous(&cc, &c, &zero).unwrap().homologous);
    }

    #[test]
    fn non_cycle_is_rejected() {
        let cc = toy_minus_triangle();
        let e = ChainVector::<f64>::unit(&cc, CellRef::new(1, 0));
        let z = ChainVector::zeros(&cc, 1);
        assert!(matches!(homologous(&cc, &e, &z), Err(Error::NotACycle(_))));
    }

    #[test]
    fn integer_and_real_agree() {
        let cc = toy_minus_triangle();
        let r = betti_numbers(&cc, Coefficients::Real).unwrap();
        let z = betti_numbers(&cc, Coefficients::Integer).unwrap();
        assert_eq!(r.betti, vec![1, 1, 0]);
        assert_eq!(z.betti, r.betti);
        assert!(z.torsion.iter().all(Vec::is_empty));
    }

    #[test]
    fn harmonic_counts() {
        let cc = toy_minus_triangle();
        assert_eq!(harmonic_basis::<f64>(&cc, 1).unwrap().len(), 1);
        let h0 = harmonic_basis::<f64>(&cc, 0).unwrap();
        assert_eq!(h0.len(), 1);
        let v = &h0[0].values;
        let expected = 1.0 / 5f64.sqrt();
        assert!(v.iter().all(|x| (x - expected).abs() < 1e-10));
    }
}
