//! Exact computations with vanishing ideals of affine and projective
//! varieties over finite fields.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is a pure function
//! of immutable values, so results are reproducible bit for bit:
//!
//! * [`field`]: arithmetic in GF(p^e) with canonical element encodings.
//! * [`poly`]: multivariate polynomials, monomial orders, parsing/printing,
//!   evaluation, substitution and homogenization.
//! * [`groebner`]: reduced Gröbner bases by Buchberger's algorithm, normal
//!   forms, ideal membership and equality.
//! * [`ideals`]: sums, intersections, quotients, saturation, elimination,
//!   homogeneity of ideals and radical membership.
//! * [`varieties`]: rational points of affine and projective space, zero
//!   sets and the brute-force vanishing ideal of a finite point set.
//! * [`nullstellensatz`]: the field-equation ideals `Γ_q`, `Γ_q*`, the
//!   affine and projective vanishing-ideal formulas, the emptiness
//!   classification and membership certificates.
//! * [`conjectures`]: form-class checks, bounded witness searches for the
//!   composed-form families `R1`/`R2`/`R3` and the search for non-radical
//!   `I + Γ_q*`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod conjectures;
mod error;
pub mod field;
pub mod groebner;
pub mod ideals;
pub mod nullstellensatz;
pub mod poly;
pub mod varieties;

pub use crate::error::{Error, Result};
pub use crate::field::{FieldElement, FieldSpec};
pub use crate::groebner::GroebnerBasis;
pub use crate::ideals::Ideal;
pub use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};
