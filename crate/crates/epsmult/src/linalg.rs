//! Exact incremental row reduction over QQ.

use num_traits::Zero;

use crate::poly::Q;

/// A sparse row: (column, coefficient) pairs sorted by column, no zeros.
pub type SparseRow = Vec<(usize, Q)>;

/// Row space in echelon form; rows are inserted one at a time and reduced
/// against the pivots seen so far.
#[derive(Default, Clone)]
pub struct RowSpace {
    /// Rows with pivot coefficient normalized to 1, ordered by insertion.
    rows: Vec<SparseRow>,
}

fn axpy(target: &mut SparseRow, c: &Q, source: &SparseRow) {
    // target += c * source, merging sorted sparse rows.
    let mut out: SparseRow = Vec::with_capacity(target.len() + source.len());
    let mut i = 0;
    let mut j = 0;
    while i < target.len() && j < source.len() {
        match target[i].0.cmp(&source[j].0) {
            std::cmp::Ordering::Less => {
                out.push(target[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((source[j].0, c * &source[j].1));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let v = &target[i].1 + c * &source[j].1;
                if !v.is_zero() {
                    out.push((target[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&target[i..]);
    for (col, v) in &source[j..] {
        out.push((*col, c * v));
    }
    *target = out;
}

impl RowSpace {
    pub fn new() -> Self {
        RowSpace::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `row` against the space without inserting it.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        for r in &self.rows {
            if row.is_empty() {
                break;
            }
            let pivot = r[0].0;
            if let Ok(pos) = row.binary_search_by_key(&pivot, |(c, _)| *c) {
                let c = -row[pos].1.clone();
                axpy(&mut row, &c, r);
            }
        }
        row
    }

    /// Insert a row; returns true when it enlarged the space.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut red = self.reduce(row);
        if red.is_empty() {
            return false;
        }
        let inv = red[0].1.recip();
        for (_, v) in red.iter_mut() {
            *v *= &inv;
        }
        // Keep echelon shape: eliminate the new pivot from earlier rows.
        let pivot = red[0].0;
        for r in self.rows.iter_mut() {
            if let Ok(pos) = r.binary_search_by_key(&pivot, |(c, _)| *c) {
                let c = -r[pos].1.clone();
                axpy(r, &c, &red);
            }
        }
        self.rows.push(red);
        true
    }

    /// Check membership without modifying the space.
    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }
}

/// Solve the square-or-overdetermined exact system `A x = b`.
/// Returns `None` when the system is singular or inconsistent.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let rows = a.len();
    let cols = a.first()?.len();
    let mut aug: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut row = r.clone();
            row.push(v.clone());
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..cols {
        let Some(src) = (pivot_row..rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(pivot_row, src);
        let inv = aug[pivot_row][col].recip();
        for v in aug[pivot_row].iter_mut() {
            *v *= &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !aug[r][col].is_zero() {
                let c = aug[r][col].clone();
                for k in 0..=cols {
                    let delta = &c * &aug[pivot_row][k];
                    aug[r][k] -= delta;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    if pivots.len() < cols {
        return None;
    }
    // Inconsistent rows?
    for r in pivot_row..rows {
        if !aug[r][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Q::zero(); cols];
    for (r, &col) in pivots.iter().enumerate() {
        x[col] = aug[r][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q_int;

    #[test]
    fn rank_of_dependent_rows() {
        let mut space = RowSpace::new();
        assert!(space.insert(vec![(0, q_int(1)), (1, q_int(2))]));
        assert!(space.insert(vec![(1, q_int(1))]));
        assert!(!space.insert(vec![(0, q_int(2)), (1, q_int(1))]));
        assert_eq!(space.rank(), 2);
    }

    #[test]
    fn solve_small_system() {
        let a = vec![
            vec![q_int(2), q_int(1)],
            vec![q_int(1), q_int(3)],
        ];
        let b = vec![q_int(5), q_int(10)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x, vec![q_int(1), q_int(3)]);
    }
}
