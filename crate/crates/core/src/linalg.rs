//! Dense linear algebra helpers on top of nalgebra: numerical rank, orthonormal range
//! bases, least squares and a deterministic symmetric eigensolver.

use nalgebra::{DMatrix, DVector};

use crate::complex::CellComplex;
use crate::scalar::Real;

/// Dense `B_k` with the conventions `B_0 = 0 (0 × |C_0|)` and `B_{n+1} = 0 (|C_n| × 0)`.
pub fn dense_boundary<T: Real>(cc: &CellComplex, k: usize) -> DMatrix<T> {
    match cc.boundary(k) {
        Some(b) => b.to_dense(),
        None if k == 0 => DMatrix::zeros(0, cc.num_cells(0)),
        None => DMatrix::zeros(cc.num_cells(k - 1), cc.num_cells(k)),
    }
}

/// Exact dense `B_k` over any signed integer type, same conventions as [`dense_boundary`].
pub fn dense_boundary_exact<S>(cc: &CellComplex, k: usize) -> DMatrix<S>
where
    S: nalgebra::Scalar + num_traits::Zero + num_traits::One + std::ops::Neg<Output = S>,
{
    match cc.boundary(k) {
        Some(b) => b.to_dense(),
        None if k == 0 => DMatrix::from_element(0, cc.num_cells(0), S::zero()),
        None => DMatrix::from_element(cc.num_cells(k - 1), cc.num_cells(k), S::zero()),
    }
}

fn singular_cutoff<T: Real>(sigma: &DVector<T>) -> T {
    let max = sigma.iter().copied().fold(T::zero(), |a, b| if b > a { b } else { a });
    let scale = if max > T::one() { max } else { T::one() };
    T::zero_tolerance() * scale
}

/// Numerical rank: singular values above `tol · max(σ_max, 1)`.
pub fn rank<T: Real>(m: &DMatrix<T>) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let sigma = m.clone().singular_values();
    let cut = singular_cutoff(&sigma);
    sigma.iter().filter(|&&s| s > cut).count()
}

/// Orthonormal basis of the column space of `m`, as columns.
pub fn range_basis<T: Real>(m: &DMatrix<T>) -> DMatrix<T> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return DMatrix::zeros(m.nrows(), 0);
    }
    let svd = m.clone().svd(true, false);
    let u = svd.u.expect("requested U");
    let cut = singular_cutoff(&svd.singular_values);
    let keep: Vec<usize> = (0..svd.singular_values.len())
        .filter(|&i| svd.singular_values[i] > cut)
        .collect();
    DMatrix::from_fn(m.nrows(), keep.len(), |r, c| u[(r, keep[c])])
}

/// Orthogonal projection of `x` onto the span of the orthonormal columns of `basis`.
pub fn project<T: Real>(basis: &DMatrix<T>, x: &DVector<T>) -> DVector<T> {
    if basis.ncols() == 0 {
        return DVector::zeros(x.len());
    }
    basis * (basis.transpose() * x)
}

/// Minimum-norm least-squares solution of `a y = b`.
pub fn least_squares<T: Real>(a: &DMatrix<T>, b: &DVector<T>) -> DVector<T> {
    if a.nrows() == 0 || a.ncols() == 0 {
        return DVector::zeros(a.ncols());
    }
    let svd = a.clone().svd(true, true);
    let cut = singular_cutoff(&svd.singular_values);
    svd.solve(b, cut).expect("U and V were computed")
}

/// Symmetric eigendecomposition with ascending eigenvalues and each eigenvector's
/// largest-magnitude entry made positive (first such entry on ties).
pub fn symmetric_eigen<T: Real>(m: &DMatrix<T>) -> (DVector<T>, DMatrix<T>) {
    let n = m.nrows();
    if n == 0 {
        return (DVector::zeros(0), DMatrix::zeros(0, 0));
    }
    let eig = m.clone().symmetric_eigen();
    let mut u = eig.eigenvectors;
    let mut a = u.transpose() * m * &u;
    jacobi_polish(&mut a, &mut u);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].partial_cmp(&a[(j, j)]).unwrap_or(std::cmp::Ordering::Equal));
    let values = DVector::from_iterator(n, order.iter().map(|&i| a[(i, i)]));
    let mut vectors = DMatrix::zeros(n, n);
    for (c, &i) in order.iter().enumerate() {
        let mut v = u.column(i).into_owned();
        fix_sign(&mut v);
        vectors.set_column(c, &v);
    }
    (values, vectors)
}

/// Cyclic Jacobi sweeps on the nearly diagonal `a = uᵀ M u`, accumulating rotations into `u`.
fn jacobi_polish<T: Real>(a: &mut DMatrix<T>, u: &mut DMatrix<T>) {
    let n = a.nrows();
    let scale = (0..n).fold(T::one(), |acc, i| if a[(i, i)].abs() > acc { a[(i, i)].abs() } else { acc });
    let tol = T::default_epsilon() * scale;
    let two = T::lit(2.0);
    for _ in 0..50 {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq.abs() <= tol {
                    continue;
                }
                rotated = true;
                let theta = (a[(q, q)] - a[(p, p)]) / (two * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (kp, kq) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = c * kp - s * kq;
                    a[(k, q)] = s * kp + c * kq;
                }
                for k in 0..n {
                    let (pk, qk) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = c * pk - s * qk;
                    a[(q, k)] = s * pk + c * qk;
                }
                for k in 0..n {
                    let (kp, kq) = (u[(k, p)], u[(k, q)]);
                    u[(k, p)] = c * kp - s * kq;
                    u[(k, q)] = s * kp + c * kq;
                }
            }
        }
        if !rotated {
            break;
        }
    }
}

/// Make the largest-magnitude entry of `v` positive. Entries within a relative `1e-9` of
/// the maximum count as tied; the first of them decides.
pub fn fix_sign<T: Real>(v: &mut DVector<T>) {
    let max = v.iter().fold(T::zero(), |a, &b| if b.abs() > a { b.abs() } else { a });
    if max == T::zero() {
        return;
    }
    let slack = max * T::lit(1e-9);
    if let Some(lead) = v.iter().find(|x| x.abs() >= max - slack) {
        if *lead < T::zero() {
            v.neg_mut();
        }
    }
}

/// Symmetric PSD matrix restricted to its eigenvectors with eigenvalue above the zero
/// tolerance: returns `(eigenvalues, eigenvectors)` of the nonzero part.
pub fn nonzero_eigenpairs<T: Real>(m: &DMatrix<T>) -> (Vec<T>, Vec<DVector<T>>) {
    let (vals, vecs) = symmetric_eigen(m);
    let cut = eigen_cutoff(&vals);
    let mut out_vals = Vec::new();
    let mut out_vecs = Vec::new();
    for i in 0..vals.len() {
        if vals[i] > cut {
            out_vals.push(vals[i]);
            out_vecs.push(vecs.column(i).into_owned());
        }
    }
    (out_vals, out_vecs)
}

/// Threshold under which an eigenvalue of a PSD matrix with spectrum `vals` is zero.
pub fn eigen_cutoff<T: Real>(vals: &DVector<T>) -> T {
    let max = vals.iter().fold(T::zero(), |a, &b| if b.abs() > a { b.abs() } else { a });
    let scale = if max > T::one() { max } else { T::one() };
    T::zero_tolerance() * scale
}
