//! Entanglement detection with the Ky Fan norm of a bordered realignment
//! matrix, together with the lower bounds on concurrence and convex-roof
//! extended negativity (CREN) that follow from it.
//!
//! For a bipartite state `rho` on `C^{d_A} ⊗ C^{d_B}` and `alpha, beta >= 0`,
//!
//! ```text
//! M(rho) = [ alpha*beta         alpha*vec(rho_B)^T ]
//!          [ beta*vec(rho_A)    R(rho)             ]
//! ```
//!
//! satisfies `||M(rho)||_KF <= sqrt((alpha^2+1)(beta^2+1))` whenever `rho` is
//! separable. At `alpha = beta = 0` this is the CCNR criterion.
//!
//! ```
//! use kyfan_sep::{criteria, states, CriterionParams};
//!
//! let bell = states::bell_state();
//! let verdict = criteria::kyfan_criterion_test(&bell, CriterionParams::ZERO).unwrap();
//! assert!(verdict.detected);
//! assert!((verdict.margin - 1.0).abs() < 1e-12);
//! ```

pub mod bounds;
pub mod cli;
pub mod criteria;
pub mod density;
pub mod error;
pub mod linalg;
pub mod reproduce;
pub mod states;
pub mod sweep;

pub use bounds::{BoundReport, Measure, NoiseFamily};
pub use criteria::{Criterion, CriterionParams, CriterionVerdict, ParamGrid};
pub use density::{BipartiteDensityMatrix, PureState, SchmidtSpectrum};
pub use error::{Error, Result};
pub use linalg::{CMatrix, CVector, Dims, Subsystem};
