//! Exact computer algebra for exterior algebras on up to 16
//! generators: the full Hopf structure (product, split coproduct,
//! antipode, integrals), the Cayley meet/join pair with their
//! co-operations, contractions and Clifford-style deformed products
//! over arbitrary — possibly non-symmetric or degenerate — bilinear
//! forms, coscalar-driven deformed coproducts, and cochain twists with
//! their coboundary pairings.
//!
//! Operations are defined on whole multivectors through splits of
//! basis blades, never through per-grade case analysis.
//! Coefficients are generic over [`Scalar`];
//! use [`Rational`] for exact results (the default everywhere it
//! matters) or `f64` where speed beats exactness.

pub mod blade;
pub mod cayley;
pub mod cocycle;
pub mod contract;
pub mod error;
pub mod form;
pub mod hopf;
pub mod multivector;
pub mod scalar;
pub mod tensor;

pub use blade::{blades, cross_inversions, wedge_sign, Blade, Dim};
pub use cayley::{cojoin, comeet, double_meet, join, meet, meet_unit};
pub use cocycle::{
    circle_product, coboundary, coboundary_pairing, coboundary_vector_block, convolve, Cochain,
};
pub use contract::{
    clifford_coproduct, clifford_product, generator_contract, left_cocontract, left_contract,
    recursive_contract, right_cocontract, right_contract,
};
pub use error::AlgebraError;
pub use form::{coscalar_extension, BilinearForm, BladePairing, ExtendedForm, GeneralPairing};
pub use hopf::{antipode, bracket, cointegral, coproduct, counit, integral};
pub use multivector::Multivector;
pub use scalar::{Rational, Scalar};
pub use tensor::{Tensor2, Tensor3};
