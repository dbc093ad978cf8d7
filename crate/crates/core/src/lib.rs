//! Exact classical and quantum Littlewood-Richardson coefficients for the
//! Grassmannian `Gr(k, n)`, analysis of the `q`-degrees occurring in quantum
//! products, and a numerical fusion-ring cross-check.

pub mod classical;
pub mod degree;
pub mod error;
pub mod fusion;
pub mod partition;
pub mod quantum;
pub mod rim;
pub mod symmetric;
pub mod verify;

pub use classical::{classical_product, lr_coefficient, schur_product_k_rows, LrMemo, SchurCombination};
pub use degree::{
    belkale_default, belkale_reduce, degree_support, degree_support_of, dmax_slide, dmin, maximal_squares,
    minimal_term, minimal_term_against, slide, BelkaleReduction, Slide, SquarePlacement,
};
pub use error::{Error, Result};
pub use fusion::{fusion_product, verify_quantum_vs_fusion, CharacterTable, FusionProduct, FusionReport};
pub use partition::{BoxShape, BoxedPartition, LatticePath, Partition, Step};
pub use quantum::{quantum_lr, quantum_product, rectangle_multiply, QuantumClass, QuantumRing};
pub use rim::{beta_numbers, rim_reduce, RimReduction};
pub use symmetric::schur_expand_monomials;
