use num_bigint::BigInt;

use crate::algebra::{Algebra, Basis, Element};
use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::tableau::Family;

/// Permutations `σ` of `{1, …, k}` (one-line notation) with `σ(i) ≥ i − 1`,
/// in lexicographic order. There are `2^{k−1}` of them for `k ≥ 1`.
pub fn restricted_permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, k: usize, used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i > k {
            out.push(cur.clone());
            return;
        }
        for v in i.saturating_sub(1).max(1)..=k {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(i + 1, k, used, cur, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(1, k, &mut vec![false; k + 1], &mut Vec::new(), &mut out);
    out
}

/// `(−1)^{inversions}`.
pub fn permutation_sign(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Determinantal expansion of a Schur-like basis element.
///
/// * `sh_β` (in `H`) and `rsh_β` (in `E`) for strictly increasing `β`:
///   `Σ (−1)^σ G_{β_σ(1)} ⋯ G_{β_σ(k)}` over `σ(i) ≥ i − 1`.
/// * `fsh_γ` (in `H`) and `bsh_γ` (in `E`) for strictly decreasing `γ`: the same
///   sum over `τ(i) ≤ i + 1`, the reversal of the previous index set.
///
/// No formula of this shape exists without the monotonicity hypothesis: the
/// `H`-expansion of `sh_{(2,2,4)}` is
/// `H[2,2,4] − H[2,4,2] − H[3,1,4] + H[4,3,1] + H[5,1,2] − H[5,2,1]`,
/// which uses the parts 2, 3, 4 and 5 in its first factor.
pub fn jacobi_trudi(family: Family, beta: &Composition) -> Result<Element> {
    let increasing = family.increasing_rows();
    let monotone = if increasing {
        beta.is_strictly_increasing()
    } else {
        beta.is_strictly_decreasing()
    };
    if !monotone {
        let want = if increasing { "strictly increasing" } else { "strictly decreasing" };
        return Err(Error::Precondition(format!(
            "determinantal formula for {family} needs a {want} index, got {beta}; \
             no such formula exists in general, e.g. sh[2,2,4] = H[2,2,4] - H[2,4,2] - H[3,1,4] \
             + H[4,3,1] + H[5,1,2] - H[5,2,1]"
        )));
    }
    let generator = if family.strict_rows() { Basis::E } else { Basis::H };
    let k = beta.len();
    let parts = beta.parts();
    let mut terms = Vec::new();
    for sigma in restricted_permutations(k) {
        // τ(i) = k + 1 − σ(k + 1 − i) turns σ(i) ≥ i − 1 into τ(i) ≤ i + 1
        let perm: Vec<usize> = if increasing {
            sigma
        } else {
            (1..=k).map(|i| k + 1 - sigma[k - i]).collect()
        };
        let index: Vec<usize> = perm.iter().map(|&p| parts[p - 1]).collect();
        terms.push((
            generator,
            Composition::new(index)?,
            BigInt::from(permutation_sign(&perm)),
        ));
    }
    Element::from_terms(Algebra::NSym, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;

    #[test]
    fn restricted_permutations_of_three() {
        assert_eq!(
            restricted_permutations(3),
            vec![vec![1, 2, 3], vec![1, 3, 2], vec![2, 1, 3], vec![3, 1, 2]]
        );
        assert_eq!(restricted_permutations(5).len(), 16);
        assert_eq!(restricted_permutations(0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn shin_example() {
        let x = jacobi_trudi(Family::Shin, &comp![1, 3, 4]).unwrap();
        assert_eq!(x.to_string(), "H[1,3,4] - H[1,4,3] - H[3,1,4] + H[4,1,3]");
        assert_eq!(jacobi_trudi(Family::Shin, &comp![5]).unwrap().to_string(), "H[5]");
    }

    #[test]
    fn monotonicity_is_required() {
        let err = jacobi_trudi(Family::Shin, &comp![2, 2, 4]).unwrap_err();
        assert!(err.to_string().contains("sh[2,2,4]"));
        assert!(jacobi_trudi(Family::Flipped, &comp![1, 3]).is_err());
    }
}
