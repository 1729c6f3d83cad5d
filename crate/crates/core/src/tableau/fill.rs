//! Value-by-value filling of a shape.
//!
//! Entries are placed in increasing order of value. For increasing-row families
//! the boxes of a row are filled from the left, for decreasing-row families from
//! the right, so the state after each value is the number of filled boxes per
//! row. A new box is checked against every other box in its column.

use std::collections::HashMap;

use super::{Family, Shape};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Cell {
    Removed,
    Earlier,
    Same,
    Later,
}

pub(super) struct Filler {
    family: Family,
    outer: Vec<usize>,
    removed: Vec<usize>,
    sizes: Vec<usize>,
}

impl Filler {
    pub(super) fn new(shape: &Shape, family: Family) -> Self {
        Filler {
            family,
            outer: shape.outer().parts().to_vec(),
            removed: shape.removed(),
            sizes: shape.row_sizes(),
        }
    }

    /// Column of the `k`-th filled box of row `r`.
    fn column(&self, r: usize, k: usize) -> usize {
        if self.family.increasing_rows() {
            self.removed[r] + k
        } else {
            self.outer[r] - 1 - k
        }
    }

    fn cell(&self, s: usize, c: usize, filled: &[usize], add: &[usize]) -> Cell {
        if c < self.removed[s] {
            return Cell::Removed;
        }
        let idx = if self.family.increasing_rows() {
            c - self.removed[s]
        } else {
            self.outer[s] - 1 - c
        };
        if idx < filled[s] {
            Cell::Earlier
        } else if idx < filled[s] + add[s] {
            Cell::Same
        } else {
            Cell::Later
        }
    }

    fn placement_ok(&self, filled: &[usize], add: &[usize]) -> bool {
        let weak_cols = !self.family.strict_columns();
        let removed_is_low = self.family.increasing_rows();
        for r in 0..self.outer.len() {
            for k in filled[r]..filled[r] + add[r] {
                let c = self.column(r, k);
                for s in 0..self.outer.len() {
                    if s == r || self.outer[s] <= c {
                        continue;
                    }
                    let ok = match (s < r, self.cell(s, c, filled, add)) {
                        (true, Cell::Removed) => removed_is_low,
                        (true, Cell::Earlier) => true,
                        (true, Cell::Same) => weak_cols,
                        (true, Cell::Later) => false,
                        (false, Cell::Removed) => !removed_is_low,
                        (false, Cell::Earlier) => false,
                        (false, Cell::Same) => weak_cols,
                        (false, Cell::Later) => true,
                    };
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Legal ways to place `count` equal entries given the current state.
    fn steps(&self, filled: &[usize], count: usize) -> Vec<Vec<usize>> {
        let k = self.outer.len();
        let cap = |r: usize| {
            let room = self.sizes[r] - filled[r];
            if self.family.strict_rows() {
                room.min(1)
            } else {
                room
            }
        };
        let mut out = Vec::new();
        let mut add = vec![0; k];
        fn rec(
            f: &Filler,
            r: usize,
            left: usize,
            add: &mut Vec<usize>,
            filled: &[usize],
            cap: &dyn Fn(usize) -> usize,
            out: &mut Vec<Vec<usize>>,
        ) {
            if r == add.len() {
                if left == 0 && f.placement_ok(filled, add) {
                    out.push(add.clone());
                }
                return;
            }
            let rest: usize = (r + 1..add.len()).map(cap).sum();
            let lo = left.saturating_sub(rest);
            for a in lo..=cap(r).min(left) {
                add[r] = a;
                rec(f, r + 1, left - a, add, filled, cap, out);
            }
            add[r] = 0;
        }
        rec(self, 0, count, &mut add, filled, &cap, &mut out);
        out
    }

    pub(super) fn count(&self, content: &[usize]) -> u64 {
        let mut memo = HashMap::new();
        self.count_from(0, vec![0; self.outer.len()], content, &mut memo)
    }

    fn count_from(
        &self,
        step: usize,
        filled: Vec<usize>,
        content: &[usize],
        memo: &mut HashMap<(usize, Vec<usize>), u64>,
    ) -> u64 {
        if step == content.len() {
            return 1;
        }
        if let Some(&v) = memo.get(&(step, filled.clone())) {
            return v;
        }
        let mut total = 0;
        for add in self.steps(&filled, content[step]) {
            let next: Vec<usize> = filled.iter().zip(&add).map(|(f, a)| f + a).collect();
            total += self.count_from(step + 1, next, content, memo);
        }
        memo.insert((step, filled), total);
        total
    }

    /// Every filling, as rows listed left to right.
    pub(super) fn enumerate(&self, content: &[usize]) -> Vec<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut rows = vec![Vec::new(); self.outer.len()];
        self.enumerate_from(0, &mut vec![0; self.outer.len()], content, &mut rows, &mut out);
        out
    }

    fn enumerate_from(
        &self,
        step: usize,
        filled: &mut Vec<usize>,
        content: &[usize],
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if step == content.len() {
            let mut done = rows.clone();
            if !self.family.increasing_rows() {
                done.iter_mut().for_each(|row| row.reverse());
            }
            out.push(done);
            return;
        }
        for add in self.steps(filled, content[step]) {
            for (r, &a) in add.iter().enumerate() {
                filled[r] += a;
                rows[r].extend(std::iter::repeat(step + 1).take(a));
            }
            self.enumerate_from(step + 1, filled, content, rows, out);
            for (r, &a) in add.iter().enumerate() {
                filled[r] -= a;
                let len = rows[r].len();
                rows[r].truncate(len - a);
            }
        }
    }
}
