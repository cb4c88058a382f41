//! Diagram algebras, their Specht modules and the combinatorial Gelfand model.
//!
//! Everything is exact: scalars are rationals or polynomials in the loop
//! parameter δ with rational coefficients.

pub mod algebra;
pub mod diagrams;
pub mod linalg;
pub mod model;
pub mod scalars;
pub mod specht;
pub mod symgroup;
pub mod verify;

pub use algebra::{AlgebraElement, GroupDescriptor, JClassId, JClassSpec, SimpleLabel};
pub use diagrams::{ComposeResult, Diagram, DiagramError, Family, FamilyTag, Node};
pub use linalg::{Matrix, PolyMatrix};
pub use scalars::{DeltaPoly, Rational};
pub use model::{ModelBasis, ModelVector};
pub use specht::{CellModule, RepMatrices, SpechtModule};
pub use symgroup::{IntPartition, Permutation};
pub use verify::{Check, Report, Status};
