//! Composition diagrams, the four tableau families and their fillings.
//!
//! Rows are numbered from the top. A straight shape `α` has `α_i` boxes in row
//! `i`, left justified. A skew shape `α/β` removes the left-most `β_i` boxes of
//! row `i`; a skew-II shape `α//β` matches the rows of `β` against the bottom
//! rows of `α` instead, so `β_ℓ` boxes are removed from the last row of `α`.
//!
//! Family conventions:
//!
//! | family       | rows, left to right | columns, top to bottom | `i` is a descent when `i+1` is | reading order            |
//! |--------------|---------------------|------------------------|--------------------------------|--------------------------|
//! | `Shin`       | weakly increasing   | strictly increasing    | strictly below `i`             | left to right, bottom up |
//! | `RowStrict`  | strictly increasing | weakly increasing      | weakly above `i`               | left to right, top down  |
//! | `Flipped`    | weakly decreasing   | strictly increasing    | strictly below `i`             | right to left, bottom up |
//! | `Backward`   | strictly decreasing | weakly increasing      | weakly above `i`               | right to left, top down  |
//!
//! A removed box behaves like an entry smaller than everything for the two
//! increasing-row families and larger than everything for the two
//! decreasing-row families. Column conditions are then checked over every pair
//! of boxes sharing a column (rows too short to reach the column are skipped),
//! which yields the legality conditions on skew and skew-II fillings.

mod fill;
mod strip;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::composition::{Composition, WeakComposition};
use crate::error::{Error, Result};

pub use strip::{chain_to_tableau, maximal_chains, poset_covers, strip_extensions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Shin,
    RowStrict,
    Flipped,
    Backward,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Shin,
        Family::RowStrict,
        Family::Flipped,
        Family::Backward,
    ];

    pub fn increasing_rows(self) -> bool {
        matches!(self, Family::Shin | Family::RowStrict)
    }

    pub fn strict_rows(self) -> bool {
        matches!(self, Family::RowStrict | Family::Backward)
    }

    pub fn strict_columns(self) -> bool {
        !self.strict_rows()
    }

    /// The family reached by reversing row order and complementing entries.
    pub fn flipped(self) -> Family {
        match self {
            Family::Shin => Family::Flipped,
            Family::Flipped => Family::Shin,
            Family::RowStrict => Family::Backward,
            Family::Backward => Family::RowStrict,
        }
    }

    /// Whether a standard tableau has a descent at `i`, given the rows of `i` and `i + 1`.
    fn is_descent(self, row_i: usize, row_next: usize) -> bool {
        if self.strict_rows() {
            row_next <= row_i
        } else {
            row_next > row_i
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Shin => "shin",
            Family::RowStrict => "row_strict",
            Family::Flipped => "flipped",
            Family::Backward => "backward",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Accepts the long names as well as the basis prefixes `sh`, `rsh`, `fsh`, `bsh`.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "shin" | "sh" => Ok(Family::Shin),
            "row_strict" | "row-strict" | "rsh" => Ok(Family::RowStrict),
            "flipped" | "fsh" => Ok(Family::Flipped),
            "backward" | "bsh" => Ok(Family::Backward),
            other => Err(Error::Precondition(format!("unknown family `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    Straight(Composition),
    Skew { outer: Composition, inner: Composition },
    SkewII { outer: Composition, inner: Composition },
}

impl Shape {
    pub fn straight(outer: Composition) -> Self {
        Shape::Straight(outer)
    }

    /// `α/β`; requires `β ⊆ α`. An empty `β` gives the straight shape.
    pub fn skew(outer: Composition, inner: Composition) -> Result<Self> {
        if !inner.contained_in(&outer) {
            return Err(Error::Precondition(format!("{inner} is not contained in {outer}")));
        }
        Ok(if inner.is_empty() {
            Shape::Straight(outer)
        } else {
            Shape::Skew { outer, inner }
        })
    }

    /// `α//β`; requires `β^r ⊆ α^r`. An empty `β` gives the straight shape.
    pub fn skew_ii(outer: Composition, inner: Composition) -> Result<Self> {
        if !inner.reverse().contained_in(&outer.reverse()) {
            return Err(Error::Precondition(format!(
                "{} is not contained in {}",
                inner.reverse(),
                outer.reverse()
            )));
        }
        Ok(if inner.is_empty() {
            Shape::Straight(outer)
        } else {
            Shape::SkewII { outer, inner }
        })
    }

    pub fn outer(&self) -> &Composition {
        match self {
            Shape::Straight(o) | Shape::Skew { outer: o, .. } | Shape::SkewII { outer: o, .. } => o,
        }
    }

    pub fn inner(&self) -> Composition {
        match self {
            Shape::Straight(_) => Composition::empty(),
            Shape::Skew { inner, .. } | Shape::SkewII { inner, .. } => inner.clone(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Shape::Straight(_) => "straight",
            Shape::Skew { .. } => "skew",
            Shape::SkewII { .. } => "skew2",
        }
    }

    pub fn num_rows(&self) -> usize {
        self.outer().len()
    }

    /// Number of removed (left-most) boxes in each row.
    pub fn removed(&self) -> Vec<usize> {
        let k = self.num_rows();
        let mut out = vec![0; k];
        match self {
            Shape::Straight(_) => {}
            Shape::Skew { inner, .. } => {
                out[..inner.len()].copy_from_slice(inner.parts());
            }
            Shape::SkewII { inner, .. } => {
                let l = inner.len();
                out[k - l..].copy_from_slice(inner.parts());
            }
        }
        out
    }

    /// Number of unremoved boxes in each row.
    pub fn row_sizes(&self) -> Vec<usize> {
        self.outer()
            .parts()
            .iter()
            .zip(self.removed())
            .map(|(o, r)| o - r)
            .collect()
    }

    pub fn num_boxes(&self) -> usize {
        self.outer().size() - self.inner().size()
    }

    /// The row-index form of the legality condition on removed boxes.
    ///
    /// For `α/β`: whenever row `i` keeps a box (`α_i > β_i`), every later row has
    /// `β_j ≤ β_i`, so no kept box sits above a removed one. For `α//β`, counting
    /// rows from the bottom: whenever `α_{k−i} > β_{ℓ−i}` for some `i ≥ 0`, no
    /// `j > i` has `β_{ℓ−j} > β_{ℓ−i}`, so no kept box sits below a removed one.
    /// Shapes failing it admit no tableaux of the matching families.
    pub fn satisfies_removal_condition(&self) -> bool {
        match self {
            Shape::Straight(_) => true,
            Shape::Skew { outer, inner } => {
                let b = |i: usize| inner.parts().get(i).copied().unwrap_or(0);
                (0..outer.len()).all(|i| {
                    outer.parts()[i] == b(i) || (i + 1..outer.len()).all(|j| b(j) <= b(i))
                })
            }
            Shape::SkewII { outer, inner } => {
                let (k, l) = (outer.len(), inner.len());
                // 1-based accessors; β_t = 0 for t ≤ 0
                let a = |t: usize| outer.parts()[t - 1];
                let b = |t: isize| if t >= 1 { inner.parts()[t as usize - 1] } else { 0 };
                (0..k).all(|i| {
                    let bi = b(l as isize - i as isize);
                    a(k - i) <= bi || (i + 1..l).all(|j| b(l as isize - j as isize) <= bi)
                })
            }
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Straight(o) => write!(f, "{o}"),
            Shape::Skew { outer, inner } => write!(f, "{outer}/{inner}"),
            Shape::SkewII { outer, inner } => write!(f, "{outer}//{inner}"),
        }
    }
}

/// Parses `[3,4]`, `[3,4]/[2,1]` or `[4,3]//[1,2]`.
impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some((o, i)) = s.split_once("//") {
            Shape::skew_ii(o.parse()?, i.parse()?)
        } else if let Some((o, i)) = s.split_once('/') {
            Shape::skew(o.parse()?, i.parse()?)
        } else {
            Ok(Shape::Straight(s.parse()?))
        }
    }
}

/// A filling of the unremoved boxes of a shape, stored row by row from left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Shape,
    family: Family,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Checks only that `rows` covers the unremoved boxes with positive entries;
    /// see [`Tableau::is_valid`] for the family conditions.
    pub fn new(shape: Shape, family: Family, rows: Vec<Vec<usize>>) -> Result<Self> {
        let sizes = shape.row_sizes();
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        if sizes != lens {
            return Err(Error::SizeMismatch(format!(
                "shape {shape} has row sizes {sizes:?} but the filling has {lens:?}"
            )));
        }
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(Error::Precondition("tableau entries must be positive".into()));
        }
        Ok(Tableau { shape, family, rows })
    }

    pub(crate) fn new_unchecked(shape: Shape, family: Family, rows: Vec<Vec<usize>>) -> Self {
        Tableau { shape, family, rows }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn num_boxes(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Row and column conditions of the family, including the skew legality conditions.
    pub fn is_valid(&self) -> bool {
        let fam = self.family;
        let removed = self.shape.removed();
        let outer = self.shape.outer().parts();
        let removed_value = if fam.increasing_rows() { i64::MIN } else { i64::MAX };
        let value = |r: usize, c: usize| -> Option<i64> {
            if c < removed[r] {
                None
            } else {
                Some(self.rows[r][c - removed[r]] as i64)
            }
        };
        for row in &self.rows {
            for w in row.windows(2) {
                let ok = match (fam.increasing_rows(), fam.strict_rows()) {
                    (true, true) => w[0] < w[1],
                    (true, false) => w[0] <= w[1],
                    (false, true) => w[0] > w[1],
                    (false, false) => w[0] >= w[1],
                };
                if !ok {
                    return false;
                }
            }
        }
        let width = outer.iter().copied().max().unwrap_or(0);
        for c in 0..width {
            let col: Vec<usize> = (0..outer.len()).filter(|&r| outer[r] > c).collect();
            for (a, &r) in col.iter().enumerate() {
                for &s in &col[a + 1..] {
                    let (top, bottom) = (value(r, c), value(s, c));
                    if top.is_none() && bottom.is_none() {
                        continue;
                    }
                    let top = top.unwrap_or(removed_value);
                    let bottom = bottom.unwrap_or(removed_value);
                    let ok = if fam.strict_columns() { top < bottom } else { top <= bottom };
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `β` with `β_i` the number of entries equal to `i`.
    pub fn content(&self) -> WeakComposition {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut counts = vec![0; max];
        for &v in self.rows.iter().flatten() {
            counts[v - 1] += 1;
        }
        WeakComposition::new(counts)
    }

    pub fn is_standard(&self) -> bool {
        let n = self.num_boxes();
        let mut seen = vec![false; n + 1];
        for &v in self.rows.iter().flatten() {
            if v > n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    fn row_of_entries(&self) -> Vec<usize> {
        let mut row_of = vec![0; self.num_boxes() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                row_of[v] = r;
            }
        }
        row_of
    }

    /// Descent set of a standard tableau under the family's convention.
    pub fn descents(&self) -> Result<Vec<usize>> {
        if !self.is_standard() {
            return Err(Error::NotStandard);
        }
        let row_of = self.row_of_entries();
        let n = self.num_boxes();
        Ok((1..n)
            .filter(|&i| self.family.is_descent(row_of[i], row_of[i + 1]))
            .collect())
    }

    pub fn descent_composition(&self) -> Result<Composition> {
        let set = crate::composition::DescentSet::new(self.num_boxes(), self.descents()?)?;
        Ok(set.to_composition())
    }

    /// Box positions `(row, index within the row's filling)` in reading order.
    fn reading_order(&self) -> Vec<(usize, usize)> {
        let k = self.rows.len();
        let rows: Vec<usize> = match self.family {
            Family::Shin | Family::Flipped => (0..k).rev().collect(),
            Family::RowStrict | Family::Backward => (0..k).collect(),
        };
        let mut out = Vec::with_capacity(self.num_boxes());
        for r in rows {
            let len = self.rows[r].len();
            if self.family.increasing_rows() {
                out.extend((0..len).map(|j| (r, j)));
            } else {
                out.extend((0..len).rev().map(|j| (r, j)));
            }
        }
        out
    }

    /// Relabels equal entries `1, 2, …` in reading order, smaller values first.
    pub fn standardize(&self) -> Tableau {
        let mut order = self.reading_order();
        // stable sort keeps reading order among equal values
        order.sort_by_key(|&(r, j)| self.rows[r][j]);
        let mut rows = self.rows.clone();
        for (label, (r, j)) in order.into_iter().enumerate() {
            rows[r][j] = label + 1;
        }
        Tableau::new_unchecked(self.shape.clone(), self.family, rows)
    }

    /// Reverses the row order and replaces each entry `i` by `n + 1 - i`.
    ///
    /// Exchanges shin with flipped and row-strict with backward; a straight shape
    /// `α` goes to `α^r`, `α/β` goes to `α^r//β^r` and back.
    pub fn flip(&self) -> Result<Tableau> {
        if !self.is_standard() {
            return Err(Error::NotStandard);
        }
        let n = self.num_boxes();
        let shape = match &self.shape {
            Shape::Straight(o) => Shape::Straight(o.reverse()),
            Shape::Skew { outer, inner } => Shape::SkewII {
                outer: outer.reverse(),
                inner: inner.reverse(),
            },
            Shape::SkewII { outer, inner } => Shape::Skew {
                outer: outer.reverse(),
                inner: inner.reverse(),
            },
        };
        let rows = self
            .rows
            .iter()
            .rev()
            .map(|row| row.iter().map(|&v| n + 1 - v).collect())
            .collect();
        Ok(Tableau::new_unchecked(shape, self.family.flipped(), rows))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let removed = self.shape.removed();
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let mut cells: Vec<String> = vec![".".to_string(); removed[r]];
            cells.extend(row.iter().map(|v| v.to_string()));
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// All tableaux of the given shape, family and content, ordered lexicographically
/// on the concatenated rows.
pub fn enumerate_tableaux(shape: &Shape, family: Family, content: &WeakComposition) -> Result<Vec<Tableau>> {
    if content.size() != shape.num_boxes() {
        return Err(Error::SizeMismatch(format!(
            "content {:?} has size {} but shape {shape} has {} boxes",
            content.parts(),
            content.size(),
            shape.num_boxes()
        )));
    }
    let mut out: Vec<Tableau> = fill::Filler::new(shape, family)
        .enumerate(content.parts())
        .into_iter()
        .map(|rows| Tableau::new_unchecked(shape.clone(), family, rows))
        .collect();
    out.sort_by(|a, b| a.rows.concat().cmp(&b.rows.concat()));
    Ok(out)
}

/// All standard tableaux of the given shape and family.
pub fn enumerate_standard(shape: &Shape, family: Family) -> Vec<Tableau> {
    let content = WeakComposition::new(vec![1; shape.num_boxes()]);
    enumerate_tableaux(shape, family, &content).expect("standard content matches the shape")
}

/// `K^X_{α,β}`: the number of family tableaux of straight shape `α` and content `β`.
pub fn count_k(family: Family, shape: &Composition, content: &WeakComposition) -> Result<u64> {
    count_k_shape(family, &Shape::Straight(shape.clone()), content)
}

/// As [`count_k`] for an arbitrary shape.
pub fn count_k_shape(family: Family, shape: &Shape, content: &WeakComposition) -> Result<u64> {
    if content.size() != shape.num_boxes() {
        return Err(Error::SizeMismatch(format!(
            "content {:?} does not fill shape {shape}",
            content.parts()
        )));
    }
    Ok(fill::Filler::new(shape, family).count(content.parts()))
}

/// `L^X_{α,β}`: the number of standard family tableaux of straight shape `α`
/// with descent composition `β`.
pub fn count_l(family: Family, shape: &Composition, descent: &Composition) -> Result<u64> {
    if shape.size() != descent.size() {
        return Err(Error::SizeMismatch(format!("{shape} and {descent}")));
    }
    Ok(enumerate_standard(&Shape::Straight(shape.clone()), family)
        .iter()
        .filter(|t| t.descent_composition().as_ref() == Ok(descent))
        .count() as u64)
}

#[derive(Serialize, Deserialize)]
struct ShapeJson {
    kind: String,
    outer: Vec<usize>,
    inner: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    shape: ShapeJson,
    family: Family,
    rows: Vec<Vec<usize>>,
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauJson {
            shape: ShapeJson {
                kind: self.shape.kind().to_string(),
                outer: self.shape.outer().parts().to_vec(),
                inner: self.shape.inner().into_parts(),
            },
            family: self.family,
            rows: self.rows.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = TableauJson::deserialize(d)?;
        let outer = Composition::new(raw.shape.outer).map_err(D::Error::custom)?;
        let inner = Composition::new(raw.shape.inner).map_err(D::Error::custom)?;
        let shape = match raw.shape.kind.as_str() {
            "straight" => Ok(Shape::Straight(outer)),
            "skew" => Shape::skew(outer, inner),
            "skew2" => Shape::skew_ii(outer, inner),
            other => Err(Error::Precondition(format!("unknown shape kind `{other}`"))),
        }
        .map_err(D::Error::custom)?;
        Tableau::new(shape, raw.family, raw.rows).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;

    fn straight(parts: Vec<usize>) -> Shape {
        Shape::Straight(Composition::new(parts).unwrap())
    }

    #[test]
    fn shin_tableaux_of_shape_three_four() {
        let t = Tableau::new(straight(vec![3, 4]), Family::Shin, vec![vec![1, 2, 2], vec![3, 4, 5, 5]]).unwrap();
        assert!(t.is_valid());
        let content = WeakComposition::new(vec![1, 2, 1, 1, 2]);
        assert_eq!(count_k(Family::Shin, &comp![3, 4], &content).unwrap(), 3);
        let all = enumerate_tableaux(&straight(vec![3, 4]), Family::Shin, &content).unwrap();
        assert_eq!(all.len(), 3);
        assert!(all.iter().all(Tableau::is_valid));
    }

    #[test]
    fn box_over_removed_box_is_rejected() {
        let shape = Shape::skew(comp![3, 3, 2], comp![1, 2]).unwrap();
        let bad = Tableau::new(shape, Family::Shin, vec![vec![1, 1], vec![2], vec![1, 2]]).unwrap();
        assert!(!bad.is_valid());
    }

    #[test]
    fn size_mismatch_is_an_error() {
        assert!(Tableau::new(straight(vec![2]), Family::Shin, vec![vec![1]]).is_err());
        let empty = Tableau::new(Shape::Straight(Composition::empty()), Family::Shin, vec![]).unwrap();
        assert!(empty.is_valid());
    }

    #[test]
    fn flipped_content_two_three() {
        let all = enumerate_tableaux(
            &straight(vec![2, 3]),
            Family::Flipped,
            &WeakComposition::new(vec![2, 3]),
        )
        .unwrap();
        assert!(all.iter().any(|t| t.rows() == [vec![1, 1], vec![2, 2, 2]]));
    }

    #[test]
    fn descent_compositions() {
        let rows = vec![vec![1, 2], vec![3, 4, 5]];
        let t = Tableau::new(straight(vec![2, 3]), Family::Shin, rows.clone()).unwrap();
        assert_eq!(t.descent_composition().unwrap(), comp![2, 3]);
        let t = Tableau::new(straight(vec![2, 3]), Family::RowStrict, rows).unwrap();
        assert_eq!(t.descent_composition().unwrap(), comp![1, 2, 1, 1]);
        let t = Tableau::new(straight(vec![3, 2]), Family::Backward, vec![vec![3, 2, 1], vec![5, 4]]).unwrap();
        assert_eq!(t.descent_composition().unwrap(), comp![1, 1, 2, 1]);
    }

    #[test]
    fn standard_counts() {
        let shin = enumerate_standard(&straight(vec![2, 3]), Family::Shin);
        let mut descents: Vec<_> = shin.iter().map(|t| t.descent_composition().unwrap()).collect();
        descents.sort();
        assert_eq!(descents, vec![comp![1, 2, 2], comp![2, 3]]);
        assert_eq!(enumerate_standard(&straight(vec![3, 2]), Family::Flipped).len(), 2);
        assert_eq!(count_l(Family::Shin, &comp![2, 3], &comp![1, 2, 2]).unwrap(), 1);
    }

    #[test]
    fn single_row_counts() {
        for fam in Family::ALL {
            let k = count_k(fam, &comp![3], &WeakComposition::new(vec![3])).unwrap();
            assert_eq!(k, if fam.strict_rows() { 0 } else { 1 });
            assert_eq!(enumerate_standard(&straight(vec![4]), fam).len(), 1);
        }
    }

    #[test]
    fn standardization() {
        let t = Tableau::new(straight(vec![3, 4]), Family::Shin, vec![vec![1, 2, 2], vec![3, 4, 5, 5]]).unwrap();
        assert_eq!(t.standardize().rows(), [vec![1, 2, 3], vec![4, 5, 6, 7]]);
        let t = Tableau::new(straight(vec![2, 3]), Family::Flipped, vec![vec![1, 1], vec![2, 2, 2]]).unwrap();
        assert_eq!(t.standardize().rows(), [vec![2, 1], vec![5, 4, 3]]);
    }

    #[test]
    fn flip_examples() {
        let t = Tableau::new(straight(vec![3, 2]), Family::Shin, vec![vec![1, 3, 4], vec![2, 5]]).unwrap();
        let f = t.flip().unwrap();
        assert_eq!(f.family(), Family::Flipped);
        assert_eq!(f.shape(), &straight(vec![2, 3]));
        assert_eq!(f.rows(), [vec![4, 1], vec![5, 3, 2]]);
        assert!(f.is_valid());
        assert_eq!(f.flip().unwrap(), t);

        let skew = Shape::skew(comp![3, 4], comp![2, 1]).unwrap();
        let s = &enumerate_standard(&skew, Family::Shin)[0];
        let f = s.flip().unwrap();
        assert_eq!(f.shape(), &Shape::skew_ii(comp![4, 3], comp![1, 2]).unwrap());
        assert!(f.is_valid());

        let nonstd = Tableau::new(straight(vec![2]), Family::Shin, vec![vec![1, 1]]).unwrap();
        assert_eq!(nonstd.flip(), Err(Error::NotStandard));
    }

    #[test]
    fn shape_parsing_and_json() {
        let s: Shape = "[3,4]/[2,1]".parse().unwrap();
        assert_eq!(s.to_string(), "[3,4]/[2,1]");
        let s: Shape = "[3,4,4]//[2,1]".parse().unwrap();
        assert_eq!(s.removed(), vec![0, 2, 1]);
        let t = Tableau::new(straight(vec![2, 3]), Family::Flipped, vec![vec![2, 1], vec![5, 4, 3]]).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"{"shape":{"kind":"straight","outer":[2,3],"inner":[]},"family":"flipped","rows":[[2,1],[5,4,3]]}"#
        );
        let back: Tableau = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
    }
}
