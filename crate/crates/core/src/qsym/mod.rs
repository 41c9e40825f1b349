//! Quasisymmetric functions over exact rationals in the monomial (`M`),
//! fundamental (`L`) and type 1 quasisymmetric power sum (`psi`) bases.
//!
//! Elements carry their basis; nothing is silently normalized. Use
//! [`convert`] to move between bases. Arithmetic between elements of
//! different bases converts the right operand into the left operand's basis.

mod automorphism;
mod convert;
mod coproduct;
mod element;
mod format;
mod functional;
mod product;

pub use automorphism::{automorphism, Automorphism};
pub use convert::{convert, m_to_psi_expansion, psi_to_m_expansion};
pub use coproduct::{coproduct, graded_coproduct, TensorElement};
pub use element::{power_sum, power_sum_over_z, Basis, QSymElement, Rational};
pub use format::{StructuredElement, StructuredTensor, StructuredTensorTerm, StructuredTerm};
pub use functional::{max1, max1_basis, min1, min1_basis, psi_coefficients};
pub use product::multiply;
