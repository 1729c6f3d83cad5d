use num_bigint::BigInt;

use shinsym::algebra::{convert, Basis, Element};
use shinsym::comp;
use shinsym::composition::{Composition, Partition, WeakComposition};
use shinsym::schur::{beth, beth_chain, skew};
use shinsym::tableau::{
    chain_to_tableau, count_k_shape, enumerate_standard, enumerate_tableaux, maximal_chains, Family, Shape, Tableau,
};

fn el(s: &str) -> Element {
    s.parse().unwrap()
}

fn rows(v: &[&[usize]]) -> Vec<Vec<usize>> {
    v.iter().map(|r| r.to_vec()).collect()
}

#[test]
fn composition_operations() {
    let a = comp![1, 2, 3, 1];
    let b = comp![3, 2];
    assert_eq!(a.concat(&b), comp![1, 2, 3, 1, 3, 2]);
    assert_eq!(a.near_concat(&b).unwrap(), comp![1, 2, 3, 4, 2]);
    assert_eq!(a.sort_to_partition(), Partition::new(vec![3, 2, 1, 1]).unwrap());
    let chain = [comp![1, 1, 1, 1], comp![1, 2, 1], comp![1, 3], comp![4]];
    for w in chain.windows(2) {
        assert!(w[0].refines(&w[1]).unwrap());
        assert!(!w[1].refines(&w[0]).unwrap());
    }
    assert!(comp![1, 1, 1].contained_in(&comp![2, 1, 1, 1]));
    assert!(comp![2, 1, 1, 1].contained_in(&comp![2, 3, 1, 2]));
    assert!(!comp![2, 3, 1, 2].contained_in(&comp![2, 1, 1, 1]));
}

#[test]
fn shin_tableaux_of_shape_3_4() {
    let list = enumerate_tableaux(
        &Shape::straight(comp![3, 4]),
        Family::Shin,
        &WeakComposition::new(vec![1, 2, 1, 1, 2]),
    )
    .unwrap();
    let got: Vec<_> = list.iter().map(|t| t.rows().to_vec()).collect();
    assert_eq!(
        got,
        vec![
            rows(&[&[1, 2, 2], &[3, 4, 5, 5]]),
            rows(&[&[1, 2, 3], &[2, 4, 5, 5]]),
            rows(&[&[1, 2, 4], &[2, 3, 5, 5]]),
        ]
    );
}

#[test]
fn standard_shin_tableaux_of_shape_2_3() {
    let list = enumerate_standard(&Shape::straight(comp![2, 3]), Family::Shin);
    let got: Vec<(Vec<Vec<usize>>, Composition)> = list
        .iter()
        .map(|t| (t.rows().to_vec(), t.descent_composition().unwrap()))
        .collect();
    assert_eq!(
        got,
        vec![
            (rows(&[&[1, 2], &[3, 4, 5]]), comp![2, 3]),
            (rows(&[&[1, 3], &[2, 4, 5]]), comp![1, 2, 2]),
        ]
    );
}

#[test]
fn skew_shin_tableaux_shapes() {
    let valid = [
        ("[3,3,2]/[2,1]", rows(&[&[1], &[1, 2], &[1, 2]])),
        ("[3,1,2]/[2,1]", rows(&[&[1], &[], &[1, 1]])),
        ("[1,3,2]/[1,2]", rows(&[&[], &[1], &[1, 1]])),
    ];
    for (shape, r) in valid {
        let shape: Shape = shape.parse().unwrap();
        assert!(shape.satisfies_removal_condition(), "{shape}");
        assert!(Tableau::new(shape, Family::Shin, r).unwrap().is_valid());
    }
    let bad: Shape = "[3,3,2]/[1,2]".parse().unwrap();
    assert!(!bad.satisfies_removal_condition());
    assert!(enumerate_standard(&bad, Family::Shin).is_empty());
}

#[test]
fn skew_extended_schur_3_4_over_2_1() {
    let shape: Shape = "[3,4]/[2,1]".parse().unwrap();
    let x = skew(Family::Shin, &comp![3, 4], &comp![2, 1]).unwrap();
    for (content, want) in [(comp![2, 2], 1u64), (comp![2, 1, 1], 1)] {
        let k = count_k_shape(Family::Shin, &shape, &WeakComposition::from(&content)).unwrap();
        assert_eq!(k, want);
        assert_eq!(x.coeff(Basis::M, &content), BigInt::from(want));
    }
    // x1 x2 x3 x4 appears at least twice
    assert!(x.coeff(Basis::M, &comp![1, 1, 1, 1]) >= BigInt::from(2));
    // x2 x3^3
    let k = count_k_shape(Family::Shin, &shape, &WeakComposition::new(vec![0, 1, 3])).unwrap();
    assert_eq!(BigInt::from(k), x.coeff(Basis::M, &comp![1, 3]));
}

#[test]
fn chain_example() {
    let chain = [comp![2, 1], comp![3, 1], comp![3, 1, 1], comp![3, 2, 1], comp![3, 3, 1], comp![3, 4, 1]];
    let t = chain_to_tableau(&chain).unwrap();
    assert_eq!(t.rows().to_vec(), rows(&[&[1], &[3, 4, 5], &[2]]));
    assert!(maximal_chains(&comp![2, 1], &comp![3, 4, 1]).unwrap().contains(&chain.to_vec()));
}

#[test]
fn skew_ii_shape_is_bottom_aligned() {
    let shape = Shape::skew_ii(comp![3, 4, 4], comp![2, 1]).unwrap();
    assert_eq!(shape.removed(), vec![0, 2, 1]);
    assert_eq!(shape.to_string(), "[3,4,4]//[2,1]");
}

#[test]
fn flip_example() {
    let t = Tableau::new(Shape::straight(comp![3, 2]), Family::Shin, rows(&[&[1, 3, 4], &[2, 5]])).unwrap();
    let f = t.flip().unwrap();
    assert_eq!(f.family(), Family::Flipped);
    assert_eq!(f.shape(), &Shape::straight(comp![2, 3]));
    assert_eq!(f.rows().to_vec(), rows(&[&[4, 1], &[5, 3, 2]]));
}

#[test]
fn flipped_and_backward_examples() {
    let shape = Shape::straight(comp![2, 3]);
    for r in [rows(&[&[1, 1], &[2, 2, 2]]), rows(&[&[1, 1], &[4, 3, 2]]), rows(&[&[3, 1], &[4, 2, 1]])] {
        assert!(Tableau::new(shape.clone(), Family::Flipped, r).unwrap().is_valid());
    }
    for r in [
        rows(&[&[2, 1], &[3, 2, 1]]),
        rows(&[&[3, 2], &[3, 2, 1]]),
        rows(&[&[4, 2], &[4, 2, 1]]),
        rows(&[&[4, 2], &[4, 3, 1]]),
    ] {
        assert!(Tableau::new(shape.clone(), Family::Backward, r).unwrap().is_valid());
    }
    // a 4 above a 3 breaks the weakly increasing columns
    for r in [rows(&[&[4, 2], &[3, 2, 1]]), rows(&[&[4, 1], &[3, 2, 1]])] {
        assert!(!Tableau::new(shape.clone(), Family::Backward, r).unwrap().is_valid());
    }
    let x = convert(&el("bsh*[2,3]"), Basis::M).unwrap();
    for c in [comp![2, 2, 1], comp![1, 2, 2], comp![1, 2, 1, 1], comp![2, 1, 1, 1], comp![1, 1, 1, 2]] {
        assert!(x.coeff(Basis::M, &c) > BigInt::from(0), "{c}");
    }
}

#[test]
fn standard_flipped_and_backward_of_3_2() {
    for (fam, want) in [
        (Family::Flipped, "F[3,2] + F[2,2,1]"),
        (Family::Backward, "F[1,1,2,1] + F[1,2,2]"),
    ] {
        let list = enumerate_standard(&Shape::straight(comp![3, 2]), fam);
        assert!(list.iter().any(|t| t.rows() == rows(&[&[3, 2, 1], &[5, 4]]).as_slice()));
        let mut sum = Element::zero(shinsym::algebra::Algebra::QSym);
        for t in &list {
            sum = sum.try_add(&Element::basis(Basis::F, t.descent_composition().unwrap())).unwrap();
        }
        assert_eq!(sum, el(want));
    }
}

#[test]
fn creation_operators_build_sh_1_3_4() {
    assert_eq!(beth(3, &el("H[4]")).unwrap(), el("H[3,4] - H[4,3]"));
    let want = el("H[1,3,4] - H[1,4,3] - H[3,1,4] + H[4,1,3]");
    assert_eq!(beth_chain(&comp![1, 3, 4]).unwrap(), want);
    assert_eq!(convert(&el("sh[3,1]"), Basis::H).unwrap(), el("H[3,1] - H[4]"));
}
