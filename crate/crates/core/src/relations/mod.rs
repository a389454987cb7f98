//! Exact linear algebra on q-expansions and on word spans: relation search,
//! graded dimension tables and double shuffle relation counts.

mod dims;
mod ds;
mod linalg;
mod report;
mod sequences;

pub use dims::{
    default_precision, family_generators, graded_dim, graded_dims, series_rows, DimReport, Family,
    Generator, STABILITY_MARGIN,
};
pub use ds::{ds_counts, ds_pairs, DsVariant};
pub use linalg::{combine_rows, rank_kernel, CoeffMatrix, IncrementalEchelon};
pub use report::{express_in_basis, find_relations, Expression, RelationReport};
pub use sequences::{d_sequence, dprime_sequence, gen_count};
