// index loops mirror the basis-tuple structure of the tensor identities
#![allow(clippy::needless_range_loop)]

//! Exact structure-constant toolkit for Hopf heaps, translation Hopf
//! algebras and Hopf-Galois co-objects.
//!
//! Everything is computed over ℚ or a prime field with no tolerances: axiom
//! checks either pass exactly or report the first violated identity with a
//! basis-index witness. The crate covers the full dictionary between Hopf
//! heaps and Hopf-Galois co-objects: Grunspan maps, right and left
//! translation Hopf algebras, canonical and cotranslation maps, the
//! Ehresmann-Schauenburg Hopf algebra on the tensor-square quotient, and
//! round-trip checks of the equivalence on a generated catalog of examples.

pub mod catalog;
pub mod coalgebra;
pub mod galois;
pub mod heap;
pub mod hopf;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod tensor;
pub mod translations;

pub use coalgebra::{Coalgebra, CoalgebraMorphism};
pub use galois::{CotranslationTable, EhresmannHopf, GaloisCoObject};
pub use heap::{HeapMorphism, HopfHeap};
pub use hopf::HopfAlgebra;
pub use linalg::{Matrix, QuotientData, SubspaceBasis};
pub use report::{CheckReport, Violation};
pub use scalar::{FieldSpec, Scalar};
pub use tensor::{Tensor3, Tensor4};
pub use translations::{Side, TranslationAlgebra};
