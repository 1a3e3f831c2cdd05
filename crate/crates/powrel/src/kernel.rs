//! Fraction-free (Bareiss) row elimination and nullspace vectors over an
//! exact coefficient ring.
//!
//! Every interior division is exact by the Bareiss minor identities; the
//! kernel vector is recovered by fraction-free back-substitution, seeding the
//! chosen free column with the final pivot so that every solve step divides
//! exactly.

use crate::ring::RingElem;

/// One nonzero vector `q` with `rows * q = 0`, or `None` when the matrix has
/// full column rank.
///
/// An identically zero column short-circuits to the unit vector on the first
/// such column. Pivot selection minimizes (term count, column index, row
/// index), which fixes the output deterministically.
#[allow(clippy::needless_range_loop)] // 2-D index loops over one work matrix
pub fn kernel_vector<T: RingElem>(rows: &[Vec<T>]) -> Option<Vec<T>> {
    let num_cols = rows.first().map(Vec::len).unwrap_or(0);
    if num_cols == 0 {
        return None;
    }
    assert!(
        rows.iter().all(|r| r.len() == num_cols),
        "kernel_vector needs a rectangular table"
    );

    // Zero-column short-circuit: 1 * (zero sequence) = 0 is a valid relation.
    for c in 0..num_cols {
        if rows.iter().all(|r| r[c].is_zero()) {
            let mut unit = vec![T::zero(); num_cols];
            unit[c] = T::one();
            return Some(unit);
        }
    }

    let mut work: Vec<Vec<T>> = rows.to_vec();
    let num_rows = work.len();
    let mut row_used = vec![false; num_rows];
    let mut col_used = vec![false; num_cols];
    // (row, column) of each pivot, in elimination order.
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut prev_pivot = T::one();

    loop {
        let mut best: Option<(usize, usize, usize)> = None;
        for c in 0..num_cols {
            if col_used[c] {
                continue;
            }
            for r in 0..num_rows {
                if row_used[r] || work[r][c].is_zero() {
                    continue;
                }
                let key = (work[r][c].complexity(), c, r);
                if best.map(|b| key < b).unwrap_or(true) {
                    best = Some(key);
                }
            }
        }
        let (_, pc, pr) = match best {
            Some(b) => b,
            None => break,
        };

        let pivot = work[pr][pc].clone();
        for r in 0..num_rows {
            if row_used[r] || r == pr {
                continue;
            }
            // Rows with a zero pivot-column entry still rescale by
            // pivot/prev_pivot; skipping them would break the minor
            // structure that keeps later divisions exact.
            let factor = work[r][pc].clone();
            for c in 0..num_cols {
                if c == pc {
                    continue;
                }
                let updated = pivot
                    .mul(&work[r][c])
                    .sub(&factor.mul(&work[pr][c]))
                    .exact_div(&prev_pivot)
                    .expect("Bareiss interior division must be exact");
                work[r][c] = updated;
            }
            work[r][pc] = T::zero();
        }
        row_used[pr] = true;
        col_used[pc] = true;
        pivots.push((pr, pc));
        prev_pivot = pivot;
    }

    let rank = pivots.len();
    if rank == num_cols {
        return None;
    }

    // Lowest-index free column carries the seed value; the seed is the last
    // pivot, which makes every back-substitution division exact (the solved
    // components are signed maximal minors).
    let free_col = (0..num_cols).find(|&c| !col_used[c]).expect("rank < cols");
    let mut solution: Vec<Option<T>> = vec![None; num_cols];
    for c in 0..num_cols {
        if !col_used[c] {
            solution[c] = Some(if c == free_col {
                prev_pivot.clone()
            } else {
                T::zero()
            });
        }
    }
    for &(pr, pc) in pivots.iter().rev() {
        let mut acc = T::zero();
        for c in 0..num_cols {
            if c == pc {
                continue;
            }
            match &solution[c] {
                Some(value) => {
                    if !value.is_zero() {
                        acc = acc.add(&work[pr][c].mul(value));
                    }
                }
                // Earlier pivot columns are still unsolved here, but the
                // frozen row has a zero coefficient on them.
                None => debug_assert!(work[pr][c].is_zero()),
            }
        }
        let value = acc
            .neg()
            .exact_div(&work[pr][pc])
            .expect("back-substitution division must be exact");
        solution[pc] = Some(value);
    }

    let q: Vec<T> = solution
        .into_iter()
        .map(|v| v.expect("all components solved"))
        .collect();
    debug_assert!(q.iter().any(|x| !x.is_zero()));
    debug_assert!(rows.iter().all(|row| dot(row, &q).is_zero()));
    Some(q)
}

fn dot<T: RingElem>(row: &[T], q: &[T]) -> T {
    let mut acc = T::zero();
    for (a, b) in row.iter().zip(q) {
        if !a.is_zero() && !b.is_zero() {
            acc = acc.add(&a.mul(b));
        }
    }
    acc
}
