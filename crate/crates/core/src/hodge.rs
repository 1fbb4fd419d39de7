//! Hodge Laplacians and signal processing on chains.
//!
//! Weighted variants conjugate the boundaries by diagonal cell weights,
//! `B_k^W = W_{k-1}^{-1/2} B_k W_k^{1/2}`, and build every operator from those.
//! Eigenvectors are stored as orthonormal columns `U` with `L = U Λ Uᵀ`.

use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::complex::{CellComplex, ChainVector};
use crate::error::{Error, Result};
use crate::linalg::{dense_boundary, dense_boundary_exact, nonzero_eigenpairs, project, range_basis, symmetric_eigen};
use crate::scalar::Real;

/// Largest number of cells per dimension accepted by the dense solvers.
pub const MAX_DENSE_CELLS: usize = 3000;

/// Residual threshold used to tag eigenvectors by subspace.
pub const TAG_TOLERANCE: f64 = 1e-7;

/// Positive diagonal weights `w_0..w_n`, one vector per dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightSet<T: Real> {
    weights: Vec<DVector<T>>,
}

impl<T: Real> WeightSet<T> {
    pub fn new(weights: Vec<Vec<T>>) -> Result<Self> {
        for (dim, w) in weights.iter().enumerate() {
            for (index, &value) in w.iter().enumerate() {
                if !(value > T::zero()) || !value.is_finite() {
                    return Err(Error::NonPositiveWeight {
                        dim,
                        index,
                        value: value.to_f64().unwrap_or(f64::NAN),
                    });
                }
            }
        }
        Ok(WeightSet { weights: weights.into_iter().map(DVector::from_vec).collect() })
    }

    pub fn ones(cc: &CellComplex) -> Self {
        WeightSet { weights: cc.cell_counts().into_iter().map(|n| DVector::from_element(n, T::one())).collect() }
    }

    pub fn dim(&self, k: usize) -> &DVector<T> {
        &self.weights[k]
    }

    pub fn as_vecs(&self) -> Vec<Vec<T>> {
        self.weights.iter().map(|w| w.iter().copied().collect()).collect()
    }

    pub fn check_against(&self, cc: &CellComplex) -> Result<()> {
        let counts = cc.cell_counts();
        if self.weights.len() != counts.len() {
            return Err(Error::InvalidWeights(format!(
                "{} weight vectors for a complex of dimension {}",
                self.weights.len(),
                cc.dim()
            )));
        }
        for (k, (w, &n)) in self.weights.iter().zip(&counts).enumerate() {
            if w.len() != n {
                return Err(Error::InvalidWeights(format!("dimension {k}: {} weights for {n} cells", w.len())));
            }
        }
        Ok(())
    }

    fn diag_pow(&self, k: usize, power: T) -> DMatrix<T> {
        DMatrix::from_diagonal(&self.weights[k].map(|w| w.powf(power)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Part {
    Up,
    Down,
    Full,
}

/// Subspace of the Hodge decomposition an eigenvector belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Subspace {
    Gradient,
    Curl,
    Harmonic,
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subspace::Gradient => "gradient",
            Subspace::Curl => "curl",
            Subspace::Harmonic => "harmonic",
        })
    }
}

fn check_size(cc: &CellComplex, k: usize) -> Result<()> {
    let cells = cc.num_cells(k);
    if cells > MAX_DENSE_CELLS {
        return Err(Error::TooLarge { dim: k, cells, limit: MAX_DENSE_CELLS });
    }
    Ok(())
}

fn check_weights<T: Real>(cc: &CellComplex, weights: Option<&WeightSet<T>>) -> Result<()> {
    weights.map_or(Ok(()), |w| w.check_against(cc))
}

/// Dense `B_k^W` (plain `B_k` without weights), with zero matrices for `k = 0` and
/// `k = dim + 1`.
pub fn weighted_boundary<T: Real>(cc: &CellComplex, k: usize, weights: Option<&WeightSet<T>>) -> DMatrix<T> {
    let b = dense_boundary::<T>(cc, k);
    match weights {
        Some(w) if k >= 1 && k <= cc.dim() => {
            let half = T::lit(0.5);
            w.diag_pow(k - 1, -half) * b * w.diag_pow(k, half)
        }
        _ => b,
    }
}

/// `L_k` or one of its parts: `up = B_{k+1}B_{k+1}ᵀ`, `down = B_kᵀB_k`.
pub fn hodge_laplacian<T: Real>(
    cc: &CellComplex,
    k: usize,
    part: Part,
    weights: Option<&WeightSet<T>>,
) -> Result<DMatrix<T>> {
    if k > cc.dim() {
        return Err(Error::BadDimension(k));
    }
    check_size(cc, k)?;
    check_weights(cc, weights)?;
    let n = cc.num_cells(k);
    let mut l = DMatrix::zeros(n, n);
    if part != Part::Down {
        let up = weighted_boundary(cc, k + 1, weights);
        l += &up * up.transpose();
    }
    if part != Part::Up {
        let down = weighted_boundary(cc, k, weights);
        l += down.transpose() * &down;
    }
    Ok(l)
}

/// Integer Hodge Laplacian, for exact identities.
pub fn hodge_laplacian_exact(cc: &CellComplex, k: usize, part: Part) -> Result<DMatrix<i64>> {
    if k > cc.dim() {
        return Err(Error::BadDimension(k));
    }
    let n = cc.num_cells(k);
    let mut l = DMatrix::<i64>::zeros(n, n);
    if part != Part::Down {
        let up = dense_boundary_exact::<i64>(cc, k + 1);
        l += &up * up.transpose();
    }
    if part != Part::Up {
        let down = dense_boundary_exact::<i64>(cc, k);
        l += down.transpose() * &down;
    }
    Ok(l)
}

/// `L'_1 = B_1ᵀ W_0 B_1 + W_1^{-1} B_2 W_2 B_2ᵀ W_1^{-1}`.
///
/// Related to the symmetric weighted Laplacian by `L_1^W = W_1^{1/2} L'_1 W_1^{1/2}` when
/// `W_0 = I`; for any weights, `v ∈ ker L_1^W` implies `W_1^{1/2} v ∈ ker L'_1`.
pub fn nonsymmetric_hodge<T: Real>(cc: &CellComplex, weights: &WeightSet<T>) -> Result<DMatrix<T>> {
    if cc.dim() < 1 {
        return Err(Error::BadDimension(cc.dim()));
    }
    check_size(cc, 1)?;
    weights.check_against(cc)?;
    let b1 = dense_boundary::<T>(cc, 1);
    let b2 = dense_boundary::<T>(cc, 2);
    let w0 = weights.diag_pow(0, T::one());
    let w1_inv = weights.diag_pow(1, -T::one());
    let down = b1.transpose() * w0 * &b1;
    if cc.dim() < 2 {
        return Ok(down);
    }
    let w2 = weights.diag_pow(2, T::one());
    Ok(down + &w1_inv * &b2 * w2 * b2.transpose() * &w1_inv)
}

/// Weights of the normalized random-walk Hodge 1-Laplacian:
/// `W_2 = diag(|B_2|ᵀ𝟙)`, `W_1 = max(diag(|B_2|𝟙), I)`, `W_0 = 2 diag(|B_1| W_1 𝟙)`.
pub fn normalized_rw_weights<T: Real>(cc: &CellComplex) -> Result<WeightSet<T>> {
    if cc.dim() != 2 {
        return Err(Error::BadDimension(cc.dim()));
    }
    let b1 = cc.boundary(1).expect("dim 2");
    let b2 = cc.boundary(2).expect("dim 2");
    let w2: Vec<T> = (0..b2.cols()).map(|j| T::lit(b2.column_len(j) as f64)).collect();
    let mut w1 = vec![0usize; b2.rows()];
    for (i, _, _) in b2.entries() {
        w1[i] += 1;
    }
    let w1: Vec<T> = w1.into_iter().map(|d| T::lit(d.max(1) as f64)).collect();
    let mut w0 = vec![T::zero(); b1.rows()];
    for (i, j, _) in b1.entries() {
        w0[i] += w1[j];
    }
    // isolated vertices would get weight 0
    let w0 = w0.into_iter().map(|x| if x > T::zero() { T::lit(2.0) * x } else { T::one() }).collect();
    WeightSet::new(vec![w0, w1, w2])
}

fn block_offsets(cc: &CellComplex) -> Vec<usize> {
    let mut offsets = vec![0];
    for n in cc.cell_counts() {
        offsets.push(offsets.last().unwrap() + n);
    }
    offsets
}

/// `D = 𝐁 + 𝐁ᵀ` on the total chain space `C_0 ⊕ … ⊕ C_n`, where `𝐁` places each `B_k^W`
/// in block `(k−1, k)`.
pub fn dirac_operator<T: Real>(cc: &CellComplex, weights: Option<&WeightSet<T>>) -> Result<DMatrix<T>> {
    check_weights(cc, weights)?;
    let offsets = block_offsets(cc);
    let total = *offsets.last().unwrap();
    if total > MAX_DENSE_CELLS {
        return Err(Error::TooLarge { dim: cc.dim(), cells: total, limit: MAX_DENSE_CELLS });
    }
    let mut d = DMatrix::zeros(total, total);
    for k in 1..=cc.dim() {
        let b = weighted_boundary(cc, k, weights);
        d.view_mut((offsets[k - 1], offsets[k]), b.shape()).copy_from(&b);
        d.view_mut((offsets[k], offsets[k - 1]), (b.ncols(), b.nrows())).copy_from(&b.transpose());
    }
    Ok(d)
}

/// Integer Dirac operator.
pub fn dirac_operator_exact(cc: &CellComplex) -> DMatrix<i64> {
    let offsets = block_offsets(cc);
    let total = *offsets.last().unwrap();
    let mut d = DMatrix::<i64>::zeros(total, total);
    for k in 1..=cc.dim() {
        for (i, j, s) in cc.boundary(k).expect("k ≤ dim").entries() {
            let s = i64::from(s);
            d[(offsets[k - 1] + i, offsets[k] + j)] = s;
            d[(offsets[k] + j, offsets[k - 1] + i)] = s;
        }
    }
    d
}

/// Block diagonal `L_0 ⊕ … ⊕ L_n`, which equals `D²`.
pub fn total_laplacian<T: Real>(cc: &CellComplex, weights: Option<&WeightSet<T>>) -> Result<DMatrix<T>> {
    let offsets = block_offsets(cc);
    let total = *offsets.last().unwrap();
    let mut l = DMatrix::zeros(total, total);
    for k in 0..=cc.dim() {
        let lk = hodge_laplacian(cc, k, Part::Full, weights)?;
        l.view_mut((offsets[k], offsets[k]), lk.shape()).copy_from(&lk);
    }
    Ok(l)
}

pub fn total_laplacian_exact(cc: &CellComplex) -> Result<DMatrix<i64>> {
    let offsets = block_offsets(cc);
    let total = *offsets.last().unwrap();
    let mut l = DMatrix::<i64>::zeros(total, total);
    for k in 0..=cc.dim() {
        let lk = hodge_laplacian_exact(cc, k, Part::Full)?;
        l.view_mut((offsets[k], offsets[k]), lk.shape()).copy_from(&lk);
    }
    Ok(l)
}

/// Split of a chain into `im B_kᵀ`, `im B_{k+1}` and `ker L_k` components.
#[derive(Clone, Debug, PartialEq)]
pub struct HodgeDecomposition<T: Real> {
    pub gradient: ChainVector<T>,
    pub curl: ChainVector<T>,
    pub harmonic: ChainVector<T>,
}

/// Orthogonal Hodge decomposition of `x` (with respect to the weighted boundaries when
/// weights are given).
pub fn hodge_decompose<T: Real>(
    cc: &CellComplex,
    x: &ChainVector<T>,
    weights: Option<&WeightSet<T>>,
) -> Result<HodgeDecomposition<T>> {
    x.check_against(cc)?;
    check_size(cc, x.dim)?;
    check_weights(cc, weights)?;
    let k = x.dim;
    let grad_basis = range_basis(&weighted_boundary(cc, k, weights).transpose());
    let curl_basis = range_basis(&weighted_boundary(cc, k + 1, weights));
    let gradient = project(&grad_basis, &x.values);
    let curl = project(&curl_basis, &x.values);
    let harmonic = &x.values - &gradient - &curl;
    Ok(HodgeDecomposition {
        gradient: ChainVector::new(k, gradient),
        curl: ChainVector::new(k, curl),
        harmonic: ChainVector::new(k, harmonic),
    })
}

/// Full eigendecomposition of `L_k` with each eigenvector tagged by subspace.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralBasis<T: Real> {
    pub dim: usize,
    /// Ascending.
    pub eigenvalues: Vec<T>,
    /// Orthonormal columns, `L = U Λ Uᵀ`.
    pub eigenvectors: DMatrix<T>,
    pub tags: Vec<Subspace>,
}

impl<T: Real> SpectralBasis<T> {
    pub fn count(&self, tag: Subspace) -> usize {
        self.tags.iter().filter(|&&t| t == tag).count()
    }

    pub fn eigenvector(&self, i: usize) -> ChainVector<T> {
        ChainVector::new(self.dim, self.eigenvectors.column(i).into_owned())
    }
}

/// Eigenbasis of `L_k` adapted to the Hodge decomposition.
///
/// Gradient eigenvectors come from the nonzero spectrum of `L_k^down`, curl eigenvectors
/// from that of `L_k^up`, harmonic ones from the kernel of `L_k`; each is then tagged by the
/// smallest projection residual onto the three subspaces. Eigenpairs are sorted by
/// eigenvalue with a stable tie order (gradient, curl, harmonic).
pub fn spectral_basis<T: Real>(
    cc: &CellComplex,
    k: usize,
    weights: Option<&WeightSet<T>>,
) -> Result<SpectralBasis<T>> {
    let down = hodge_laplacian(cc, k, Part::Down, weights)?;
    let up = hodge_laplacian(cc, k, Part::Up, weights)?;
    let full = &down + &up;
    let n = full.nrows();

    let (dv, dvec) = nonzero_eigenpairs(&down);
    let (uv, uvec) = nonzero_eigenpairs(&up);
    let (fv, fvec) = symmetric_eigen(&full);
    let harmonic_count = n - dv.len() - uv.len();
    let mut pairs: Vec<(T, DVector<T>, Subspace)> = Vec::with_capacity(n);
    pairs.extend(dv.into_iter().zip(dvec).map(|(l, v)| (l, v, Subspace::Gradient)));
    pairs.extend(uv.into_iter().zip(uvec).map(|(l, v)| (l, v, Subspace::Curl)));
    // the kernel of L_k is spanned by the eigenvectors of its smallest eigenvalues
    pairs.extend((0..harmonic_count).map(|i| (fv[i].max(T::zero()), fvec.column(i).into_owned(), Subspace::Harmonic)));
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(std::cmp::Ordering::Equal).then(a.2.cmp(&b.2)));

    let grad_basis = range_basis(&weighted_boundary(cc, k, weights).transpose());
    let curl_basis = range_basis(&weighted_boundary(cc, k + 1, weights));
    let mut eigenvectors = DMatrix::zeros(n, n);
    let mut eigenvalues = Vec::with_capacity(n);
    let mut tags = Vec::with_capacity(n);
    for (c, (l, v, _)) in pairs.into_iter().enumerate() {
        tags.push(tag_vector(&grad_basis, &curl_basis, &v));
        eigenvectors.set_column(c, &v);
        eigenvalues.push(l);
    }
    Ok(SpectralBasis { dim: k, eigenvalues, eigenvectors, tags })
}

/// Subspace with the smallest projection residual (first in gradient, curl, harmonic order
/// on ties).
fn tag_vector<T: Real>(grad: &DMatrix<T>, curl: &DMatrix<T>, v: &DVector<T>) -> Subspace {
    let pg = project(grad, v);
    let pc = project(curl, v);
    let r_grad = (v - &pg).norm();
    let r_curl = (v - &pc).norm();
    let r_harm = (&pg + &pc).norm();
    let mut best = (Subspace::Gradient, r_grad);
    for cand in [(Subspace::Curl, r_curl), (Subspace::Harmonic, r_harm)] {
        if cand.1 < best.1 {
            best = cand;
        }
    }
    best.0
}

/// Spectral filter applied as `U f(Λ) Uᵀ x`.
#[derive(Clone, Debug, PartialEq)]
pub enum Filter<T: Real> {
    Identity,
    /// `1 − λ`
    LowPass,
    /// `exp(−tλ)`
    Heat { t: T },
    /// `Σ c_i λ^i`
    Polynomial(Vec<T>),
}

impl<T: Real> Filter<T> {
    pub fn response(&self, lambda: T) -> T {
        match self {
            Filter::Identity => T::one(),
            Filter::LowPass => T::one() - lambda,
            Filter::Heat { t } => (-*t * lambda).exp(),
            Filter::Polynomial(c) => c.iter().rev().fold(T::zero(), |acc, &ci| acc * lambda + ci),
        }
    }
}

impl<T: Real> FromStr for Filter<T> {
    type Err = Error;

    /// `identity`, `lowpass`, `heat:t=<t>`, `poly:<c0>,<c1>,…`.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownFilter(s.to_owned());
        let number = |x: &str| x.trim().parse::<f64>().map(T::lit).map_err(|_| unknown());
        match s.split_once(':') {
            None if s == "identity" => Ok(Filter::Identity),
            None if s == "lowpass" => Ok(Filter::LowPass),
            Some(("heat", arg)) => {
                let t = arg.strip_prefix("t=").unwrap_or(arg);
                Ok(Filter::Heat { t: number(t)? })
            }
            Some(("poly", arg)) => Ok(Filter::Polynomial(arg.split(',').map(number).collect::<Result<_>>()?)),
            _ => Err(unknown()),
        }
    }
}

pub fn spectral_filter<T: Real>(
    cc: &CellComplex,
    x: &ChainVector<T>,
    filter: &Filter<T>,
    weights: Option<&WeightSet<T>>,
) -> Result<ChainVector<T>> {
    x.check_against(cc)?;
    let basis = spectral_basis(cc, x.dim, weights)?;
    let u = &basis.eigenvectors;
    let coeffs = u.transpose() * &x.values;
    let scaled = DVector::from_iterator(
        coeffs.len(),
        coeffs.iter().zip(&basis.eigenvalues).map(|(&c, &l)| c * filter.response(l)),
    );
    Ok(ChainVector::new(x.dim, u * scaled))
}

/// Matrix-free low-pass filter `(I − L_k) x`.
pub fn lowpass_direct<T: Real>(
    cc: &CellComplex,
    x: &ChainVector<T>,
    weights: Option<&WeightSet<T>>,
) -> Result<ChainVector<T>> {
    x.check_against(cc)?;
    let l = hodge_laplacian(cc, x.dim, Part::Full, weights)?;
    Ok(ChainVector::new(x.dim, &x.values - l * &x.values))
}

/// `xᵀ L_k x = ‖B_{k+1}ᵀ x‖² + ‖B_k x‖²`, with weighted boundaries when weights are given.
pub fn quadratic_form<T: Real>(cc: &CellComplex, x: &ChainVector<T>, weights: Option<&WeightSet<T>>) -> Result<T> {
    x.check_against(cc)?;
    check_weights(cc, weights)?;
    let k = x.dim;
    let down = weighted_boundary(cc, k, weights) * &x.values;
    let up = weighted_boundary(cc, k + 1, weights).transpose() * &x.values;
    Ok(down.norm_squared() + up.norm_squared())
}

/// `⟨x, y⟩_W = xᵀ W y` for a diagonal weight vector.
pub fn weighted_inner<T: Real>(x: &DVector<T>, y: &DVector<T>, w: &DVector<T>) -> T {
    x.iter().zip(y.iter()).zip(w.iter()).fold(T::zero(), |acc, ((&a, &b), &c)| acc + a * b * c)
}
