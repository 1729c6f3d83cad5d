//! Compositions, weak compositions, partitions and descent sets.
//!
//! A [`Composition`] is a finite sequence of positive integers and is the index
//! object for every basis in the crate. Compositions are totally ordered by size
//! first and then lexicographically, a proper prefix sorting before any of its
//! extensions; every enumeration and every transition matrix uses this order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Builds a [`Composition`] from literal parts. Panics on a zero part.
#[macro_export]
macro_rules! comp {
    () => { $crate::composition::Composition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::composition::Composition::new(vec![$($p),+]).expect("composition parts must be positive")
    };
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::MalformedComposition(format!("{parts:?}")));
        }
        Ok(Composition(parts))
    }

    pub(crate) fn from_vec_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        Composition(parts)
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// `α^r`.
    pub fn reverse(&self) -> Self {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// `α^c = comp(set(α)^c)` inside `{1, …, n-1}`.
    pub fn complement(&self) -> Self {
        let n = self.size();
        if n == 0 {
            return Composition::empty();
        }
        let set = self.descent_set();
        let comp: Vec<usize> = (1..n).filter(|i| !set.contains(*i)).collect();
        DescentSet::new_unchecked(n, comp).to_composition()
    }

    /// `α^t = (α^r)^c`.
    pub fn transpose(&self) -> Self {
        self.reverse().complement()
    }

    /// `α · β`.
    pub fn concat(&self, other: &Composition) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// `α ⊙ β`: the last part of `α` fused with the first part of `β`.
    pub fn near_concat(&self, other: &Composition) -> Result<Self> {
        if self.is_empty() || other.is_empty() {
            return Err(Error::EmptyOperand);
        }
        let mut parts = self.0.clone();
        *parts.last_mut().unwrap() += other.0[0];
        parts.extend_from_slice(&other.0[1..]);
        Ok(Composition(parts))
    }

    /// Prepends a part.
    pub fn prepend(&self, part: usize) -> Self {
        assert!(part > 0);
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(part);
        parts.extend_from_slice(&self.0);
        Composition(parts)
    }

    /// Appends a part.
    pub fn append(&self, part: usize) -> Self {
        assert!(part > 0);
        let mut parts = self.0.clone();
        parts.push(part);
        Composition(parts)
    }

    /// `α ⪯ β` in refinement order: `set(β) ⊆ set(α)`.
    pub fn refines(&self, other: &Composition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(format!(
                "refinement compares {self} and {other}"
            )));
        }
        let mine = self.descent_set();
        Ok(other.descent_set().elements().iter().all(|&s| mine.contains(s)))
    }

    /// `α ⊆ β` in dominance (containment) order: `ℓ(α) ≤ ℓ(β)` and `α_i ≤ β_i`.
    pub fn contained_in(&self, other: &Composition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn sort_to_partition(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(Composition(parts))
    }

    pub fn descent_set(&self) -> DescentSet {
        let mut acc = 0;
        let mut set = Vec::with_capacity(self.len().saturating_sub(1));
        for &p in self.0.iter().take(self.len().saturating_sub(1)) {
            acc += p;
            set.push(acc);
        }
        DescentSet::new_unchecked(self.size(), set)
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// Reverse hooks `(1^k, m)`.
    pub fn is_reverse_hook(&self) -> bool {
        match self.0.split_last() {
            None => true,
            Some((_, init)) => init.iter().all(|&p| p == 1),
        }
    }

    /// All compositions `β` with `β ⪯ α` (finer or equal), in canonical order.
    pub fn refinements(&self) -> Vec<Composition> {
        let mut out = vec![Vec::new()];
        for &p in &self.0 {
            let pieces = compositions(p);
            let mut next = Vec::with_capacity(out.len() * pieces.len());
            for prefix in &out {
                for piece in &pieces {
                    let mut v = prefix.clone();
                    v.extend_from_slice(piece.parts());
                    next.push(v);
                }
            }
            out = next;
        }
        let mut out: Vec<Composition> = out.into_iter().map(Composition).collect();
        out.sort();
        out
    }

    /// All compositions `β` with `α ⪯ β` (coarser or equal), in canonical order.
    pub fn coarsenings(&self) -> Vec<Composition> {
        let n = self.size();
        let set = self.descent_set();
        let elems = set.elements();
        let mut out = Vec::with_capacity(1 << elems.len());
        for mask in 0u64..(1u64 << elems.len()) {
            let kept: Vec<usize> = elems
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &s)| s)
                .collect();
            out.push(DescentSet::new_unchecked(n, kept).to_composition());
        }
        out.sort();
        out
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `[2,3,1]`, `2,3,1` or `[]`; whitespace is ignored.
impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = match (cleaned.strip_prefix('['), cleaned.strip_suffix(']')) {
            (Some(_), Some(_)) if cleaned.len() >= 2 => &cleaned[1..cleaned.len() - 1],
            (None, None) => cleaned.as_str(),
            _ => return Err(Error::MalformedComposition(s.to_string())),
        };
        if inner.is_empty() {
            return Ok(Composition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::MalformedComposition(s.to_string()))?;
        Composition::new(parts).map_err(|_| Error::MalformedComposition(s.to_string()))
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

/// All compositions of `n` in canonical order; `n = 0` yields the single empty composition.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn rec(remaining: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if remaining == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for first in 1..=remaining {
            prefix.push(first);
            rec(remaining - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(if n == 0 { 1 } else { 1 << (n - 1) });
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `n`, in canonical composition order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(Composition(prefix.clone())));
            return;
        }
        for part in 1..=remaining.min(max) {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A composition whose parts weakly decrease.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Composition);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)?.try_into()
    }

    pub fn as_composition(&self) -> &Composition {
        &self.0
    }

    pub fn into_composition(self) -> Composition {
        self.0
    }

    pub fn parts(&self) -> &[usize] {
        self.0.parts()
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    /// `λ'`: the column lengths of the diagram of `λ`.
    pub fn conjugate(&self) -> Partition {
        let parts = self.parts();
        let width = parts.first().copied().unwrap_or(0);
        let cols = (0..width)
            .map(|c| parts.iter().filter(|&&p| p > c).count())
            .collect();
        Partition(Composition(cols))
    }
}

impl TryFrom<Composition> for Partition {
    type Error = Error;

    fn try_from(c: Composition) -> Result<Self> {
        if c.is_partition() {
            Ok(Partition(c))
        } else {
            Err(Error::NotPartition(c.to_string()))
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// A sequence of non-negative integers. Trailing zeros are dropped on construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct WeakComposition(Vec<usize>);

impl WeakComposition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        WeakComposition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `α̃`: the composition obtained by deleting the zeros.
    pub fn flatten(&self) -> Composition {
        Composition(self.0.iter().copied().filter(|&p| p > 0).collect())
    }
}

impl From<&Composition> for WeakComposition {
    fn from(c: &Composition) -> Self {
        WeakComposition(c.parts().to_vec())
    }
}

impl FromStr for WeakComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = cleaned.trim_start_matches('[').trim_end_matches(']');
        if inner.is_empty() {
            return Ok(WeakComposition::default());
        }
        inner
            .split(',')
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(WeakComposition::new)
            .map_err(|_| Error::MalformedComposition(s.to_string()))
    }
}

/// A subset of `{1, …, n-1}` kept in increasing order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DescentSet {
    n: usize,
    elements: Vec<usize>,
}

impl DescentSet {
    pub fn new(n: usize, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.iter().any(|&s| s == 0 || s >= n) {
            return Err(Error::Precondition(format!(
                "descent set {elements:?} is not inside [1, {n})"
            )));
        }
        Ok(DescentSet { n, elements })
    }

    fn new_unchecked(n: usize, elements: Vec<usize>) -> Self {
        DescentSet { n, elements }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, s: usize) -> bool {
        self.elements.binary_search(&s).is_ok()
    }

    /// `comp(S)`.
    pub fn to_composition(&self) -> Composition {
        if self.n == 0 {
            return Composition::empty();
        }
        let mut parts = Vec::with_capacity(self.elements.len() + 1);
        let mut prev = 0;
        for &s in &self.elements {
            parts.push(s - prev);
            prev = s;
        }
        parts.push(self.n - prev);
        Composition(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involutions_on_three_two() {
        let b = comp![3, 2];
        assert_eq!(b.complement(), comp![1, 1, 2, 1]);
        assert_eq!(b.reverse(), comp![2, 3]);
        assert_eq!(b.transpose(), comp![1, 2, 1, 1]);
        let lambda: Partition = b.try_into().unwrap();
        assert_eq!(lambda.conjugate().parts(), &[2, 2, 1]);
    }

    #[test]
    fn small_cases() {
        assert_eq!(Composition::empty().complement(), Composition::empty());
        assert_eq!(Composition::empty().transpose(), Composition::empty());
        assert_eq!(comp![1, 1, 1, 1].complement(), comp![4]);
        assert_eq!(comp![5].reverse(), comp![5]);
        assert_eq!(comp![1, 2, 3, 1].reverse(), comp![1, 3, 2, 1]);
        assert_eq!(comp![2, 3].transpose(), comp![1, 1, 2, 1]);
        assert_eq!(Partition::new(vec![1, 1, 1]).unwrap().conjugate().parts(), &[3]);
        assert_eq!(
            Partition::new(vec![4, 2, 1]).unwrap().conjugate().parts(),
            &[3, 2, 1, 1]
        );
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn concatenations() {
        let a = comp![1, 2, 3, 1];
        let b = comp![3, 2];
        assert_eq!(a.concat(&b), comp![1, 2, 3, 1, 3, 2]);
        assert_eq!(a.near_concat(&b).unwrap(), comp![1, 2, 3, 4, 2]);
        assert_eq!(Composition::empty().concat(&comp![3]), comp![3]);
        assert_eq!(Composition::empty().near_concat(&b), Err(Error::EmptyOperand));
        assert_eq!(a.sort_to_partition().parts(), &[3, 2, 1, 1]);
    }

    #[test]
    fn orders() {
        assert!(comp![1, 2, 1].refines(&comp![1, 3]).unwrap());
        assert!(comp![1, 1, 1, 1].refines(&comp![1, 2, 1]).unwrap());
        assert!(!comp![1, 3].refines(&comp![1, 2, 1]).unwrap());
        assert!(comp![1, 2].refines(&comp![1, 2, 1]).is_err());
        assert!(comp![1, 1, 1].contained_in(&comp![2, 1, 1, 1]));
        assert!(comp![2, 1, 1, 1].contained_in(&comp![2, 3, 1, 2]));
        assert!(!comp![2, 1].contained_in(&comp![1, 3]));
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(compositions(0), vec![Composition::empty()]);
        assert_eq!(
            compositions(3),
            vec![comp![1, 1, 1], comp![1, 2], comp![2, 1], comp![3]]
        );
        assert_eq!(compositions(6).len(), 32);
        assert_eq!(partitions(5).len(), 7);
    }

    #[test]
    fn parsing() {
        assert_eq!("[2,3,1]".parse::<Composition>().unwrap(), comp![2, 3, 1]);
        assert_eq!("1,3,4".parse::<Composition>().unwrap(), comp![1, 3, 4]);
        assert_eq!("[ ]".parse::<Composition>().unwrap(), Composition::empty());
        assert!("[2,0]".parse::<Composition>().is_err());
        assert!("[2,x]".parse::<Composition>().is_err());
        assert!("[2,3".parse::<Composition>().is_err());
        assert_eq!(comp![2, 3, 1].to_string(), "[2,3,1]");
    }

    #[test]
    fn weak_compositions_drop_trailing_zeros() {
        let w = WeakComposition::new(vec![1, 0, 2, 0, 0]);
        assert_eq!(w, WeakComposition::new(vec![1, 0, 2]));
        assert_eq!(w.flatten(), comp![1, 2]);
    }

    #[test]
    fn refinements_and_coarsenings() {
        assert_eq!(comp![2, 1].refinements(), vec![comp![1, 1, 1], comp![2, 1]]);
        assert_eq!(comp![1, 2].coarsenings(), vec![comp![1, 2], comp![3]]);
        assert_eq!(comp![1, 1, 1].coarsenings().len(), 4);
    }
}
