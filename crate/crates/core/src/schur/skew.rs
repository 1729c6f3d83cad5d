use num_bigint::BigInt;
use num_traits::One;

use super::{nsym_basis, qsym_basis};
use crate::algebra::{convert, perp, rperp, Algebra, Basis, TensorElement};
use crate::algebra::Element;
use crate::composition::{compositions, Composition};
use crate::error::Result;
use crate::tableau::Family;

/// `X*_{α/β} = X_β^⊥(X*_α)`, in the `M` basis.
///
/// When `β ⊄ α` the value is still the perp image (a warning is logged); for the
/// shin and row-strict families it vanishes.
pub fn skew(family: Family, alpha: &Composition, beta: &Composition) -> Result<Element> {
    if !beta.contained_in(alpha) {
        log::warn!("skew shape {alpha}/{beta}: {beta} is not contained in {alpha}");
    }
    perp(&nsym_basis(family, beta.clone()), &qsym_basis(family, alpha.clone()))
}

/// `X*_{α//β}`: the right-perp of `X_β` applied to `X*_α`, in the `M` basis.
pub fn skew_ii(family: Family, alpha: &Composition, beta: &Composition) -> Result<Element> {
    rperp(&nsym_basis(family, beta.clone()), &qsym_basis(family, alpha.clone()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoproductVariant {
    /// `Δ X*_α = Σ_β X*_β ⊗ X*_{α/β}`.
    Skew,
    /// `Δ X*_α = Σ_β X*_{α//β} ⊗ X*_β`.
    SkewII,
}

/// A coproduct assembled from skew functions, with the indices `β` that
/// contributed although they are not contained in `α` (for `Skew`) or `β^r` is
/// not contained in `α^r` (for `SkewII`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoproductFormula {
    pub tensor: TensorElement,
    pub uncontained: Vec<Composition>,
}

/// Sums the skew expansion of `Δ X*_α` over every `β` with `|β| ≤ |α|`; both legs
/// are written in the family's QSym basis.
pub fn coproduct_formula(family: Family, alpha: &Composition, variant: CoproductVariant) -> Result<CoproductFormula> {
    let star = Basis::qsym_of(family);
    let mut tensor = TensorElement::zero(Algebra::QSym);
    let mut uncontained = Vec::new();
    for size in 0..=alpha.size() {
        for beta in compositions(size) {
            let (piece, contained) = match variant {
                CoproductVariant::Skew => (
                    perp(&nsym_basis(family, beta.clone()), &qsym_basis(family, alpha.clone()))?,
                    beta.contained_in(alpha),
                ),
                CoproductVariant::SkewII => (
                    skew_ii(family, alpha, &beta)?,
                    beta.reverse().contained_in(&alpha.reverse()),
                ),
            };
            if piece.is_zero() {
                continue;
            }
            if !contained {
                log::debug!("coproduct term for {alpha} with uncontained index {beta}");
                uncontained.push(beta.clone());
            }
            let piece = convert(&piece, star)?;
            let single = Element::basis(star, beta);
            match variant {
                CoproductVariant::Skew => tensor.add_product(&single, &piece, &BigInt::one()),
                CoproductVariant::SkewII => tensor.add_product(&piece, &single, &BigInt::one()),
            }
        }
    }
    Ok(CoproductFormula { tensor, uncontained })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coproduct;
    use crate::comp;

    #[test]
    fn row_strict_skew_example() {
        let x = skew(Family::RowStrict, &comp![1, 3, 2], &comp![1, 2]).unwrap();
        let expected: Element = "F[2,1] + F[1,2] + F[1,1,1]".parse().unwrap();
        assert_eq!(convert(&x, Basis::F).unwrap(), expected);
    }

    #[test]
    fn skew_ii_negative_coefficient() {
        let x = skew_ii(Family::Shin, &comp![2, 1, 3], &comp![1, 2, 1]).unwrap();
        assert_eq!(x.coeff(Basis::M, &comp![1, 1]), BigInt::from(-1));
    }

    #[test]
    fn coproduct_of_small_shapes() {
        for alpha in [comp![1], comp![2, 1], comp![1, 2]] {
            let direct = coproduct(&Element::basis(Basis::ShStar, alpha.clone()))
                .unwrap()
                .convert(Basis::ShStar, Basis::ShStar)
                .unwrap();
            for v in [CoproductVariant::Skew, CoproductVariant::SkewII] {
                let f = coproduct_formula(Family::Shin, &alpha, v).unwrap();
                assert_eq!(f.tensor, direct);
                if v == CoproductVariant::Skew {
                    assert!(f.uncontained.is_empty());
                }
            }
        }
    }

    #[test]
    fn skew_ii_sum_needs_uncontained_terms() {
        // (2)^r is not contained in (2,1)^r, yet sh*_{(2,1)//(2)} = M_(1).
        let x = skew_ii(Family::Shin, &comp![2, 1], &comp![2]).unwrap();
        assert_eq!(x.to_string(), "M[1]");
        let f = coproduct_formula(Family::Shin, &comp![2, 1], CoproductVariant::SkewII).unwrap();
        assert_eq!(f.uncontained, vec![comp![2]]);
    }
}
