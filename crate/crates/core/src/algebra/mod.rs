//! NSym and QSym: elements over the classical and Schur-like bases, change of
//! basis, products, coproducts, the pairing, perp operators, involutions and
//! the antipode.

mod basis;
mod element;
mod format;
pub mod linalg;
mod ops;
mod transition;

pub use basis::{Algebra, Basis};
pub use element::{Element, TensorElement, Term};
pub use ops::{
    antipode, convert, coproduct, counit, involution, multiply, pair, perp, quasi_shuffle, rperp,
    Involution,
};
pub use transition::{degree, transition_matrix, Degree, TransitionMatrix};

pub(crate) use ops::{canonical_coeffs, Coeffs};
