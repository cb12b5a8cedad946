//! Exact minimum set cover by branch and bound.
//!
//! Rows are the elements to cover, columns are the available sets.  The
//! solver is deterministic: candidate columns are explored in increasing
//! index order and the incumbent is replaced only on strict improvement,
//! so the reported witness depends only on the input.

/// Fixed-width bitset over `len` bits, stored in 64-bit blocks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bits {
    len: usize,
    blocks: Vec<u64>,
}

impl Bits {
    pub fn empty(len: usize) -> Self {
        Bits {
            len,
            blocks: vec![0; len.div_ceil(64)],
        }
    }

    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.blocks[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.blocks[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn intersects(&self, other: &Bits) -> bool {
        self.blocks.iter().zip(&other.blocks).any(|(a, b)| a & b != 0)
    }

    pub fn count(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    /// Number of bits set in `self` but not in `mask`.
    pub fn count_outside(&self, mask: &Bits) -> usize {
        self.blocks
            .iter()
            .zip(&mask.blocks)
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }
}

struct Solver<'a> {
    n_rows: usize,
    /// For each column, the rows it covers.
    col_rows: &'a [Bits],
    /// For each row, the covering columns in ascending order.
    row_cols: Vec<Vec<usize>>,
    /// For each row, the covering columns as a bitset over columns.
    row_mask: Vec<Bits>,
    best: usize,
    best_sel: Vec<usize>,
}

/// Returns the minimum number of columns whose union covers all rows,
/// together with one witness selection, or `None` if some row is
/// uncoverable.  `col_rows[c]` is the set of rows covered by column `c`.
pub fn min_cover(n_rows: usize, col_rows: &[Bits]) -> Option<(usize, Vec<usize>)> {
    if n_rows == 0 {
        return Some((0, Vec::new()));
    }
    let n_cols = col_rows.len();
    // Deduplicate columns with identical coverage, keeping the lowest index.
    let mut active: Vec<usize> = Vec::new();
    let mut seen: Vec<&Bits> = Vec::new();
    for (c, cov) in col_rows.iter().enumerate() {
        if !seen.contains(&cov) {
            seen.push(cov);
            active.push(c);
        }
    }
    let mut row_cols = vec![Vec::new(); n_rows];
    let mut row_mask = vec![Bits::empty(n_cols); n_rows];
    for &c in &active {
        for r in 0..n_rows {
            if col_rows[c].get(r) {
                row_cols[r].push(c);
                row_mask[r].set(c);
            }
        }
    }
    if row_cols.iter().any(|cs| cs.is_empty()) {
        return None;
    }

    let mut solver = Solver {
        n_rows,
        col_rows,
        row_cols,
        row_mask,
        best: usize::MAX,
        best_sel: Vec::new(),
    };
    let greedy = solver.greedy();
    solver.best = greedy.len();
    solver.best_sel = greedy;
    let mut chosen = Vec::new();
    solver.recurse(&Bits::empty(n_rows), &mut chosen);
    let mut sel = solver.best_sel;
    sel.sort_unstable();
    Some((sel.len(), sel))
}

impl Solver<'_> {
    fn greedy(&self) -> Vec<usize> {
        let mut covered = Bits::empty(self.n_rows);
        let mut sel = Vec::new();
        while !covered.is_full() {
            let mut best_c = usize::MAX;
            let mut best_gain = 0;
            for r in 0..self.n_rows {
                if covered.get(r) {
                    continue;
                }
                for &c in &self.row_cols[r] {
                    let gain = self.col_rows[c].count_outside(&covered);
                    if gain > best_gain || (gain == best_gain && c < best_c) {
                        best_gain = gain;
                        best_c = c;
                    }
                }
            }
            covered.union_with(&self.col_rows[best_c]);
            sel.push(best_c);
        }
        sel
    }

    /// Rows with pairwise disjoint candidate column sets each need a
    /// distinct column.
    fn lower_bound(&self, covered: &Bits) -> usize {
        let mut used = Bits::empty(self.row_mask[0].len);
        let mut lb = 0;
        for r in 0..self.n_rows {
            if covered.get(r) || used.intersects(&self.row_mask[r]) {
                continue;
            }
            used.union_with(&self.row_mask[r]);
            lb += 1;
        }
        lb
    }

    fn recurse(&mut self, covered: &Bits, chosen: &mut Vec<usize>) {
        if covered.is_full() {
            if chosen.len() < self.best {
                self.best = chosen.len();
                self.best_sel = chosen.clone();
            }
            return;
        }
        if chosen.len() + self.lower_bound(covered) >= self.best {
            return;
        }
        // Branch on the uncovered row with the fewest candidate columns.
        let mut row = usize::MAX;
        let mut fewest = usize::MAX;
        for r in 0..self.n_rows {
            if !covered.get(r) && self.row_cols[r].len() < fewest {
                fewest = self.row_cols[r].len();
                row = r;
            }
        }
        let candidates = self.row_cols[row].clone();
        for c in candidates {
            let mut next = covered.clone();
            next.union_with(&self.col_rows[c]);
            chosen.push(c);
            self.recurse(&next, chosen);
            chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cols(n_rows: usize, sets: &[&[usize]]) -> Vec<Bits> {
        sets.iter()
            .map(|s| {
                let mut b = Bits::empty(n_rows);
                for &r in *s {
                    b.set(r);
                }
                b
            })
            .collect()
    }

    #[test]
    fn covers_trivially() {
        let c = cols(3, &[&[0, 1, 2]]);
        assert_eq!(min_cover(3, &c), Some((1, vec![0])));
    }

    #[test]
    fn uncoverable_row() {
        let c = cols(2, &[&[0]]);
        assert_eq!(min_cover(2, &c), None);
    }

    #[test]
    fn needs_two_of_three() {
        // Inequality on 3: column z covers rows != z.
        let c = cols(3, &[&[1, 2], &[0, 2], &[0, 1]]);
        let (size, w) = min_cover(3, &c).unwrap();
        assert_eq!(size, 2);
        assert_eq!(w, vec![0, 1]);
    }

    #[test]
    fn equality_needs_all() {
        let c = cols(3, &[&[0], &[1], &[2]]);
        assert_eq!(min_cover(3, &c), Some((3, vec![0, 1, 2])));
    }
}
