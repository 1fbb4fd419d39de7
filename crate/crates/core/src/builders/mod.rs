//! Constructions that produce cell complexes from higher-level descriptions.

mod cycles;
mod planar;
mod product;
mod simplicial;
mod vr;

pub use cycles::{chordless_cycle_lifting, chordless_cycles, spanning_tree_lifting, DEFAULT_MAX_CYCLES};
pub use planar::{window_lifting, PlanarEmbedding};
pub use product::{cubical, path, product};
pub use simplicial::{from_simplicial, simplex_label};
pub use vr::{vietoris_rips, vietoris_rips_simplices, PointCloud, DEFAULT_MAX_SIMPLICES};
