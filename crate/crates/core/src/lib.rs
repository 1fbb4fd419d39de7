//! Cell complexes with sparse integer boundary matrices: validation, homology, Hodge
//! theory, constructions and persistence.
//!
//! Numerical routines are generic over [`Real`] (`f32` or `f64`); exact routines use
//! checked integer arithmetic. The aliases below fix the scalar to `f64`.

pub mod builders;
pub mod complex;
pub mod error;
pub mod hodge;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod persist;
pub mod scalar;
pub mod snf;
pub mod validate;

pub use builders::{
    chordless_cycle_lifting, chordless_cycles, cubical, from_simplicial, path, product, simplex_label,
    spanning_tree_lifting, vietoris_rips, vietoris_rips_simplices, window_lifting, PlanarEmbedding, PointCloud,
    DEFAULT_MAX_CYCLES, DEFAULT_MAX_SIMPLICES,
};
pub use complex::{canonical_cycle, BoundaryMatrix, CellComplex, CellRef, ChainVector, TupleForm};
pub use error::{Error, Result};
pub use hodge::{
    dirac_operator, dirac_operator_exact, hodge_decompose, hodge_laplacian, hodge_laplacian_exact, lowpass_direct,
    nonsymmetric_hodge, normalized_rw_weights, quadratic_form, spectral_basis, spectral_filter, total_laplacian,
    total_laplacian_exact, weighted_boundary, weighted_inner, Filter, HodgeDecomposition, Part, SpectralBasis,
    Subspace, WeightSet,
};
pub use homology::{
    betti_numbers, betti_numbers_integer, betti_numbers_real, harmonic_basis, homologous, homologous_with_tolerance,
    Coefficients, Homologous, HomologySummary,
};
pub use persist::{persistence, vr_filtration, Bar, Filtration, FiltrationSimplex, PersistenceDiagram};
pub use scalar::{Int, Real};
pub use snf::{smith_normal_form, smith_normal_form_sparse, SnfResult};
pub use validate::{closure, validate_dim1, validate_dim2, validate_nd, Condition, Failure, ValidationReport};

pub type Chain = ChainVector<f64>;
pub type Weights = WeightSet<f64>;
pub type Spectrum = SpectralBasis<f64>;
pub type Decomposition = HodgeDecomposition<f64>;
pub type Diagram = PersistenceDiagram<f64>;
pub type Points = PointCloud<f64>;
pub type Embedding = PlanarEmbedding<f64>;
pub type Snf = SnfResult<i64>;

pub type Chain32 = ChainVector<f32>;
pub type Weights32 = WeightSet<f32>;
pub type Spectrum32 = SpectralBasis<f32>;
pub type Points32 = PointCloud<f32>;
