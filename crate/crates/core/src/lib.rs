//! Exact computation for cyclic Nakayama algebras given by Kupisch
//! series: classification of Gorenstein-projective modules, the
//! Gorenstein core and its invariants, universal deformation ring
//! presentations `k[[t1,...,tn]]/Jn(m)`, and the reduction for
//! Gorenstein-projective modules over triangular matrix algebras.
//!
//! Everything is combinatorial over the Kupisch data and exact; no
//! field-element arithmetic is performed, so the results hold over any
//! base field. All public values are immutable and all operations are
//! pure functions, safe for unrestricted concurrent use. With the
//! `parallel` feature (default) the survey harness and the symbolic
//! matrix powers distribute across threads via rayon; outputs are
//! deterministic either way.

pub mod algebra;
pub mod defring;
pub mod error;
pub mod gorenstein;
pub mod oracle;
pub mod poly;
pub mod position;
pub mod triangular;

pub use algebra::{KupischInput, NakayamaAlgebra, Uniserial};
pub use defring::{deformation_ring, jn_generators, matrix_n, DefRingPresentation};
pub use error::{Error, ErrorKind, Result};
pub use gorenstein::{
    build_core, elementaries, is_gorenstein_projective, is_in_core, is_minimal_projective,
    syzygy_orbit, GorensteinCore, SyzygyOrbit,
};
pub use oracle::{enumerate_kupisch, survey, survey_sequential, verify_algebra, SurveyReport};
pub use poly::{Monomial, SparsePoly};
pub use position::{core_length, distance_to_boundary, position, stable_tube, CorePosition, StableTube};
pub use triangular::{
    reduce_udr, tensor_bw, zhang_gp_check, BimoduleDescriptor, GammaDescriptor, TriangularModule,
    TriangularSpec, ZhangVerdict,
};
