//! Pins down the answers to questions the source material leaves ambiguous.

use num_bigint::BigInt;

use shinsym::algebra::{convert, Algebra, Basis, Element};
use shinsym::comp;
use shinsym::composition::{compositions, partitions, Composition};
use shinsym::schur::{
    coproduct_formula, jacobi_trudi, nsym_basis, permutation_sign, restricted_permutations, schur_detect, skew,
    skew_ii, CoproductVariant, SymBasis, SymElement,
};
use shinsym::tableau::Family;

#[test]
fn backward_duals_need_reversed_partitions() {
    let mut literal_fails = Vec::new();
    for n in 1..=6 {
        for l in partitions(n) {
            let c = l.as_composition().clone();
            let want = Some(SymElement::term(SymBasis::Schur, l.conjugate(), 1));
            assert_eq!(schur_detect(&Element::basis(Basis::BshStar, c.reverse())).unwrap(), want);
            if schur_detect(&Element::basis(Basis::BshStar, c.clone())).unwrap() != want {
                literal_fails.push(c);
            }
        }
    }
    assert!(literal_fails.contains(&comp![2, 1]));
    // bsh*_(2,1) = F_(1,2) is not even symmetric
    assert_eq!(schur_detect(&Element::basis(Basis::BshStar, comp![2, 1])).unwrap(), None);
    // partitions whose reversal is themselves are the only ones that work literally
    for c in &literal_fails {
        assert_ne!(c.reverse(), *c);
    }
}

/// The determinant with the increasing-case index set applied verbatim to a
/// strictly decreasing index.
fn literal_flipped_determinant(gamma: &Composition) -> Element {
    let parts = gamma.parts();
    let terms = restricted_permutations(gamma.len()).into_iter().map(|s| {
        let idx: Vec<usize> = s.iter().map(|&p| parts[p - 1]).collect();
        (Basis::H, Composition::new(idx).unwrap(), BigInt::from(permutation_sign(&s)))
    });
    Element::from_terms(Algebra::NSym, terms).unwrap()
}

#[test]
fn flipped_determinant_uses_reversed_index_set() {
    for n in 1..=8 {
        for g in compositions(n).into_iter().filter(|g| g.is_strictly_decreasing()) {
            let want = convert(&nsym_basis(Family::Flipped, g.clone()), Basis::H).unwrap();
            assert_eq!(jacobi_trudi(Family::Flipped, &g).unwrap(), want);
            let literal = literal_flipped_determinant(&g);
            if g.len() <= 2 {
                assert_eq!(literal, want, "{g}");
            } else {
                assert_ne!(literal, want, "{g}");
            }
        }
    }
}

#[test]
fn skew_by_uncontained_index() {
    for a in (0..=5).flat_map(compositions) {
        for b in (1..=a.size()).flat_map(compositions) {
            if b.contained_in(&a) {
                continue;
            }
            for fam in [Family::Shin, Family::RowStrict] {
                assert!(skew(fam, &a, &b).unwrap().is_zero(), "{fam} {a}/{b}");
            }
        }
    }
    // skew-II values survive outside the stated bound
    assert_eq!(skew_ii(Family::Shin, &comp![2, 1], &comp![2]).unwrap().to_string(), "M[1]");
}

#[test]
fn coproduct_bounds() {
    for a in (0..=5).flat_map(compositions) {
        for fam in Family::ALL {
            let f = coproduct_formula(fam, &a, CoproductVariant::Skew).unwrap();
            if fam.increasing_rows() {
                assert!(f.uncontained.is_empty(), "{fam} {a}");
            }
        }
    }
    let f = coproduct_formula(Family::Shin, &comp![3, 1], CoproductVariant::SkewII).unwrap();
    assert_eq!(f.uncontained, vec![comp![2], comp![3]]);
}
