//! The four Schur-like dual pairs (shin / extended Schur and their row-strict,
//! flipped and backward variants) and the constructions built on them.

mod beth;
mod jacobi_trudi;
mod pieri;
mod ribbon;
mod skew;
mod structure;
mod sym;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::linalg::Matrix;
use crate::algebra::{degree, Basis, Element};
use crate::composition::{Composition, WeakComposition};
use crate::tableau::{count_k, Family};

pub use beth::{beth, beth_chain};
pub use jacobi_trudi::{jacobi_trudi, restricted_permutations, permutation_sign};
pub use pieri::{pieri, PieriRecursion, Generator, Side};
pub use ribbon::ribbon_multiply;
pub use skew::{coproduct_formula, skew, skew_ii, CoproductVariant, CoproductFormula};
pub use structure::{structure_coeffs, StructureCoefficient};
pub use sym::{chi, lr_coefficient, schur_detect, SymBasis, SymElement};

/// `K[α][β]`: the number of family tableaux of shape `α` and content `β`, over
/// compositions of `n` in canonical order.
pub fn kostka_matrix(family: Family, n: usize) -> Matrix {
    let d = degree(n);
    let mut m = vec![vec![BigInt::zero(); d.len()]; d.len()];
    for (i, a) in d.comps.iter().enumerate() {
        for (j, b) in d.comps.iter().enumerate() {
            let k = count_k(family, a, &WeakComposition::from(b)).expect("sizes agree");
            m[i][j] = BigInt::from(k);
        }
    }
    m
}

/// `X_α` in the NSym basis of the family.
pub fn nsym_basis(family: Family, index: Composition) -> Element {
    Element::basis(Basis::nsym_of(family), index)
}

/// `X*_α` in the QSym basis of the family.
pub fn qsym_basis(family: Family, index: Composition) -> Element {
    Element::basis(Basis::qsym_of(family), index)
}
