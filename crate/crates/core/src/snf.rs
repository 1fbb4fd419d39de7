//! Smith normal form over the integers with checked arithmetic.

use nalgebra::DMatrix;

use crate::complex::BoundaryMatrix;
use crate::error::{Error, Result};
use crate::scalar::Int;

/// Invariant factors `d_1 | d_2 | …` of an integer matrix, zeros trailing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult<I> {
    pub diagonal: Vec<I>,
    pub rank: usize,
}

impl<I: Int> SnfResult<I> {
    /// Nonzero invariant factors greater than one.
    pub fn torsion(&self) -> Vec<I> {
        self.diagonal.iter().copied().filter(|&d| d > I::one()).collect()
    }

    /// True when every nonzero invariant factor is one.
    pub fn is_unimodular(&self) -> bool {
        self.diagonal.iter().all(|&d| d.is_zero() || d.is_one())
    }
}

/// Smith normal form of a dense integer matrix.
///
/// Pivots are chosen by minimal absolute value; every intermediate operation is checked and
/// overflow is reported as [`Error::IntegerOverflow`].
pub fn smith_normal_form<I: Int>(m: &DMatrix<I>) -> Result<SnfResult<I>> {
    let (rows, cols) = m.shape();
    let mut a: Vec<Vec<I>> = (0..rows).map(|i| (0..cols).map(|j| m[(i, j)]).collect()).collect();
    let steps = rows.min(cols);
    let mut diagonal = Vec::with_capacity(steps);

    for t in 0..steps {
        let Some((pi, pj)) = min_abs_entry(&a, t) else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            if !clear_cross(&mut a, t)? {
                continue;
            }
            // the pivot must divide every remaining entry; otherwise fold that row in
            let p = a[t][t];
            let bad_row = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(a[i][j] % p).is_zero()));
            match bad_row {
                Some(i) => {
                    for j in t..cols {
                        a[t][j] = a[t][j].checked_add(&a[i][j]).ok_or(Error::IntegerOverflow)?;
                    }
                }
                None => break,
            }
        }
        let p = a[t][t];
        diagonal.push(if p < I::zero() { p.checked_neg().ok_or(Error::IntegerOverflow)? } else { p });
    }
    let rank = diagonal.len();
    diagonal.resize(steps, I::zero());
    Ok(SnfResult { diagonal, rank })
}

pub fn smith_normal_form_sparse(b: &BoundaryMatrix) -> Result<SnfResult<i64>> {
    smith_normal_form(&b.to_dense::<i64>())
}

fn min_abs_entry<I: Int>(a: &[Vec<I>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(I, usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, &v) in row.iter().enumerate().skip(t) {
            if !v.is_zero() {
                let av = v.abs();
                if best.is_none_or(|(b, _, _)| av < b) {
                    best = Some((av, i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Eliminate column `t` below and row `t` right of the pivot. Returns false when a
/// nonzero remainder forced a new, smaller pivot to be swapped in.
fn clear_cross<I: Int>(a: &mut [Vec<I>], t: usize) -> Result<bool> {
    let rows = a.len();
    let cols = a[0].len();
    let p = a[t][t];
    for i in t + 1..rows {
        let q = a[i][t] / p;
        if !q.is_zero() {
            for j in t..cols {
                let d = q.checked_mul(&a[t][j]).ok_or(Error::IntegerOverflow)?;
                a[i][j] = a[i][j].checked_sub(&d).ok_or(Error::IntegerOverflow)?;
            }
        }
    }
    for j in t + 1..cols {
        let q = a[t][j] / p;
        if !q.is_zero() {
            for row in a.iter_mut().skip(t) {
                let d = q.checked_mul(&row[t]).ok_or(Error::IntegerOverflow)?;
                row[j] = row[j].checked_sub(&d).ok_or(Error::IntegerOverflow)?;
            }
        }
    }
    let mut best: Option<(I, usize, bool)> = None;
    for i in t + 1..rows {
        let v = a[i][t];
        if !v.is_zero() && best.is_none_or(|(b, _, _)| v.abs() < b) {
            best = Some((v.abs(), i, true));
        }
    }
    for j in t + 1..cols {
        let v = a[t][j];
        if !v.is_zero() && best.is_none_or(|(b, _, _)| v.abs() < b) {
            best = Some((v.abs(), j, false));
        }
    }
    match best {
        None => Ok(true),
        Some((_, idx, true)) => {
            a.swap(t, idx);
            Ok(false)
        }
        Some((_, idx, false)) => {
            for row in a.iter_mut() {
                row.swap(t, idx);
            }
            Ok(false)
        }
    }
}
