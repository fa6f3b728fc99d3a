//! Exact-arithmetic structure-constant algebras: Wedderburn decomposition,
//! Hopf-algebra verification, integrals, Frobenius-Schur indicators, and
//! involution classification, over the rationals and the Gaussian rationals.

pub mod algebra;
pub mod constructions;
pub mod error;
pub mod hopf;
pub mod indicators;
pub mod io;
pub mod linalg;
pub mod poly;
pub mod scalar;
pub mod wedderburn;

pub use error::{Error, Result};

/// The rational field.
pub type Q = scalar::Rational;
/// The Gaussian rational field Q(i).
pub type Qi = scalar::GaussianRational;

pub use algebra::{BilinearForm, Element, StructureAlgebra};
pub use constructions::{FiniteGroup, Preset};
pub use hopf::HopfData;
pub use indicators::{FormClassification, FormKind, IndicatorReport};
pub use wedderburn::{BlockDecomposition, DEFAULT_SEED};
