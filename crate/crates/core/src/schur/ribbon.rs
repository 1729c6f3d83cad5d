use crate::algebra::{Algebra, Basis, Element};
use crate::composition::{compositions, Composition};
use crate::error::Result;
use crate::tableau::{enumerate_standard, Family, Shape};

/// Multiplies `X_α` by the ribbon `R_β` on the family's side, combinatorially.
///
/// For shin and row-strict this is `X_α R_β = Σ_γ Σ_U X_γ` over standard skew
/// tableaux `U` of the family of shape `γ/α` with descent composition `β`. For
/// flipped and backward it is `R_β X_α`, summing over standard skew-II
/// tableaux of shape `γ//α`.
pub fn ribbon_multiply(family: Family, alpha: &Composition, beta: &Composition) -> Result<Element> {
    let basis = Basis::nsym_of(family);
    let mut out = Element::zero(Algebra::NSym);
    for gamma in compositions(alpha.size() + beta.size()) {
        let shape = if family.increasing_rows() {
            if !alpha.contained_in(&gamma) {
                continue;
            }
            Shape::skew(gamma.clone(), alpha.clone())?
        } else {
            if !alpha.reverse().contained_in(&gamma.reverse()) {
                continue;
            }
            Shape::skew_ii(gamma.clone(), alpha.clone())?
        };
        let count = enumerate_standard(&shape, family)
            .iter()
            .filter(|t| t.descent_composition().as_ref() == Ok(beta))
            .count();
        if count > 0 {
            out = out.try_add(&Element::term(basis, gamma, count as i64))?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{convert, multiply};
    use crate::comp;

    #[test]
    fn agrees_with_generic_product() {
        let alpha = comp![2, 3, 1];
        let beta = comp![2];
        let combinatorial = ribbon_multiply(Family::Shin, &alpha, &beta).unwrap();
        let generic = multiply(
            &Element::basis(Basis::Sh, alpha),
            &Element::basis(Basis::R, beta),
        )
        .unwrap();
        assert_eq!(combinatorial, generic);
    }

    #[test]
    fn empty_alpha_gives_ribbon() {
        let beta = comp![1, 2];
        let x = ribbon_multiply(Family::Shin, &Composition::empty(), &beta).unwrap();
        assert_eq!(x, convert(&Element::basis(Basis::R, beta), Basis::Sh).unwrap());
    }
}
