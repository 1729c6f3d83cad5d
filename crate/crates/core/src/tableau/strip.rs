//! Shin-horizontal strips and the poset they generate.

use super::{Family, Shape, Tableau};
use crate::composition::Composition;
use crate::error::{Error, Result};

/// All `β` obtained from `α` by adding a shin-horizontal strip of `r` boxes.
///
/// Rows of `α` may grow and at most one row may be appended; whenever row `i`
/// grows, every later row of `β` has length at most `α_i` (the overhang rule).
/// Returned in canonical order.
pub fn strip_extensions(alpha: &Composition, r: usize) -> Vec<Composition> {
    fn rec(
        a: &[usize],
        i: usize,
        left: usize,
        bound: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Composition>,
    ) {
        if i == a.len() {
            if left == 0 {
                out.push(Composition::from_vec_unchecked(cur.clone()));
            } else if left <= bound {
                cur.push(left);
                out.push(Composition::from_vec_unchecked(cur.clone()));
                cur.pop();
            }
            return;
        }
        if a[i] > bound {
            return;
        }
        for grow in 0..=left.min(bound - a[i]) {
            cur.push(a[i] + grow);
            let next_bound = if grow > 0 { bound.min(a[i]) } else { bound };
            rec(a, i + 1, left - grow, next_bound, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(alpha.parts(), 0, r, usize::MAX, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Upper covers of `α` in the shin poset.
pub fn poset_covers(alpha: &Composition) -> Vec<Composition> {
    strip_extensions(alpha, 1)
}

/// All saturated chains `β = γ_0 ⋖ γ_1 ⋖ ⋯ ⋖ γ_m = α`, each listed from `β` to `α`.
pub fn maximal_chains(beta: &Composition, alpha: &Composition) -> Result<Vec<Vec<Composition>>> {
    if !beta.contained_in(alpha) {
        return Err(Error::Precondition(format!("{beta} is not contained in {alpha}")));
    }
    fn rec(cur: &mut Vec<Composition>, alpha: &Composition, out: &mut Vec<Vec<Composition>>) {
        let last = cur.last().unwrap();
        if last == alpha {
            out.push(cur.clone());
            return;
        }
        for next in poset_covers(last) {
            if next.contained_in(alpha) {
                cur.push(next);
                rec(cur, alpha, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![beta.clone()], alpha, &mut out);
    Ok(out)
}

/// The standard skew shin tableau of shape `α/β` whose entry `j` sits in the
/// box added at the `j`-th step of the chain.
pub fn chain_to_tableau(chain: &[Composition]) -> Result<Tableau> {
    let (first, last) = match (chain.first(), chain.last()) {
        (Some(f), Some(l)) => (f, l),
        _ => return Err(Error::Precondition("empty chain".into())),
    };
    let shape = Shape::skew(last.clone(), first.clone())?;
    let removed = shape.removed();
    let mut rows: Vec<Vec<usize>> = shape.row_sizes().into_iter().map(|n| vec![0; n]).collect();
    for (j, w) in chain.windows(2).enumerate() {
        let (lo, hi) = (w[0].parts(), w[1].parts());
        if w[1].size() != w[0].size() + 1 || !poset_covers(&w[0]).contains(&w[1]) {
            return Err(Error::Precondition(format!("{} does not cover {}", w[1], w[0])));
        }
        let r = (0..hi.len())
            .find(|&r| lo.get(r).copied().unwrap_or(0) != hi[r])
            .expect("a cover adds one box");
        let c = hi[r] - 1;
        rows[r][c - removed[r]] = j + 1;
    }
    Tableau::new(shape, Family::Shin, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;
    use crate::tableau::enumerate_standard;

    #[test]
    fn overhang_examples() {
        assert_eq!(
            strip_extensions(&comp![3], 2),
            vec![comp![3, 2], comp![4, 1], comp![5]]
        );
        assert_eq!(
            strip_extensions(&comp![2, 3, 1], 2),
            vec![
                comp![2, 3, 1, 2],
                comp![2, 3, 2, 1],
                comp![2, 3, 3],
                comp![2, 4, 1, 1],
                comp![2, 4, 2],
                comp![2, 5, 1],
            ]
        );
        assert_eq!(strip_extensions(&Composition::empty(), 4), vec![comp![4]]);
    }

    #[test]
    fn chain_example() {
        let chain = vec![
            comp![2, 1],
            comp![3, 1],
            comp![3, 1, 1],
            comp![3, 2, 1],
            comp![3, 3, 1],
            comp![3, 4, 1],
        ];
        let t = chain_to_tableau(&chain).unwrap();
        assert_eq!(t.rows(), [vec![1], vec![3, 4, 5], vec![2]]);
        assert!(t.is_valid());
    }

    #[test]
    fn chain_counts() {
        assert_eq!(maximal_chains(&comp![3], &comp![3]).unwrap(), vec![vec![comp![3]]]);
        let chains = maximal_chains(&Composition::empty(), &comp![2, 3]).unwrap();
        assert_eq!(chains.len(), 2);
        assert_eq!(enumerate_standard(&Shape::Straight(comp![2, 3]), Family::Shin).len(), 2);
    }
}
