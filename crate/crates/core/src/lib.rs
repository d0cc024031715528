//! Exact lattice-polytope toolkit.
//!
//! Ehrhart and vector-weighted Ehrhart polynomials, Delzant smoothness,
//! reflexivity, barycenters, unimodular equivalence and the classification
//! of smooth polytopes that are Ehrhart equivalent to a dilated standard
//! simplex. All arithmetic is exact.
//!
//! ```
//! use latpoly::{classify, corpus, ehrhart, Polytope};
//!
//! let p = Polytope::from_int_vertices(&[vec![0, 0], vec![3, 0], vec![0, 3]])?;
//! assert_eq!(ehrhart(&p)?.to_string(), "9/2m^2 + 9/2m + 1");
//!
//! let verdict = classify(&corpus::counterexample5d())?;
//! assert_eq!(verdict.case_applied.as_str(), "counterexample_family");
//! # Ok::<(), latpoly::Error>(())
//! ```

pub mod corpus;
pub mod document;
pub mod ehrhart;
pub mod enumerate;
pub mod error;
pub mod exact;
mod hull;
pub mod invariance;
pub mod poly;
pub mod polytope;
pub mod report;
pub mod toric;

pub use ehrhart::{
    ehrhart, ehrhart_report, hibi_reflexive, match_lambda_simplex, reciprocity_check, vector_ehrhart, EhrhartReport,
    ReciprocityWitness,
};
pub use enumerate::{enumerate, sample_range, DilationSample};
pub use error::{Error, ErrorKind, Result};
pub use exact::{Int, IntMat, Rat, RatVec};
pub use poly::{RatPoly, VecPoly};
pub use polytope::{AffineUnimodularMap, Facet, Polytope};
pub use toric::{
    classify, delzant_check, ono_check, unimodular_equivalent, volume_and_barycenter, Barycenter, DelzantReport,
    OnoReport, TheoremCase, Verdict,
};
