//! Kernel correctness against an independent exact-rational row-reduction
//! oracle, plus residual exactness on symbolic tables.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use powrel::matrix::SymMatrix;
use powrel::poly::Poly;
use powrel::relations::{kernel_vector, power_table, EntrySet};

/// Plain Gauss-Jordan elimination over exact rationals, written without any
/// powrel machinery: the oracle for rank and nullspace membership.
mod oracle {
    use super::*;

    pub fn rref(rows: &mut [Vec<BigRational>]) -> Vec<usize> {
        let num_rows = rows.len();
        let num_cols = rows.first().map(Vec::len).unwrap_or(0);
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..num_cols {
            let Some(pr) = (r..num_rows).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, pr);
            let inv = rows[r][c].clone();
            for x in rows[r].iter_mut() {
                *x /= &inv;
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && !row[c].is_zero() {
                    let f = row[c].clone();
                    for (x, pv) in row.iter_mut().zip(&pivot_row) {
                        *x -= &f * pv;
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
            if r == num_rows {
                break;
            }
        }
        pivot_cols
    }

    pub fn rank(rows: &[Vec<i64>]) -> usize {
        let mut work: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| BigRational::from_integer(v.into()))
                    .collect()
            })
            .collect();
        rref(&mut work).len()
    }

    /// Residual of an integer matrix against a rational vector.
    pub fn in_nullspace(rows: &[Vec<i64>], q: &[BigRational]) -> bool {
        rows.iter().all(|row| {
            let mut acc = BigRational::zero();
            for (&a, b) in row.iter().zip(q) {
                acc += BigRational::from_integer(a.into()) * b;
            }
            acc.is_zero()
        })
    }
}

fn constant_rows(rows: &[Vec<i64>]) -> Vec<Vec<Poly>> {
    rows.iter()
        .map(|row| row.iter().map(|&v| Poly::constant(v)).collect())
        .collect()
}

fn poly_to_rational(p: &Poly) -> BigRational {
    let c: BigInt = p.as_constant().expect("constant coefficient");
    BigRational::from_integer(c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn kernel_agrees_with_rational_oracle(
        rows in prop::collection::vec(prop::collection::vec(-9i64..=9, 4), 1..=5)
    ) {
        let table = constant_rows(&rows);
        let found = kernel_vector(&table);
        let rank = oracle::rank(&rows);
        prop_assert_eq!(found.is_some(), rank < 4, "kernel existence must match rank");
        if let Some(q) = found {
            let rational: Vec<BigRational> = q.iter().map(poly_to_rational).collect();
            prop_assert!(rational.iter().any(|x| !x.is_zero()));
            prop_assert!(oracle::in_nullspace(&rows, &rational));
        }
    }
}

#[test]
fn random_full_rank_tall_table_has_no_kernel() {
    // A fixed 4x3 full-column-rank case: the guarantee never applies here.
    let rows = vec![
        vec![1i64, 0, 0],
        vec![0, 1, 0],
        vec![0, 0, 1],
        vec![5, -7, 2],
    ];
    assert_eq!(oracle::rank(&rows), 3);
    assert!(kernel_vector(&constant_rows(&rows)).is_none());
}

#[test]
fn rank_deficient_3x4_integer_case() {
    // Rank-3 wide table: kernel exists, residuals vanish, and the vector is
    // in the oracle's nullspace.
    let rows = vec![vec![2i64, 0, 1, -3], vec![0, 5, -1, 2], vec![1, 1, 1, 1]];
    assert_eq!(oracle::rank(&rows), 3);
    let q = kernel_vector(&constant_rows(&rows)).unwrap();
    let rational: Vec<BigRational> = q.iter().map(poly_to_rational).collect();
    assert!(oracle::in_nullspace(&rows, &rational));
}

#[test]
fn symbolic_kernel_residuals_are_exact_polynomials() {
    // The discovery window for the generic 3x3: symbolic Bareiss plus an
    // exact residual check, no tolerance anywhere.
    let a = SymMatrix::generic(3).unwrap();
    for entry_sets in [
        vec![(1, 2), (1, 3), (2, 1)],
        vec![(1, 2), (2, 3), (3, 1)],
        vec![(1, 1), (1, 2), (2, 1), (2, 2)],
    ] {
        let s = EntrySet::new(3, entry_sets).unwrap();
        let window = power_table(&a, &s, 3).unwrap();
        let q = kernel_vector(&window).expect("guaranteed kernel");
        for row in &window {
            let mut acc = Poly::zero();
            for (v, c) in row.iter().zip(&q) {
                acc = acc.add(&v.mul(c));
            }
            assert!(acc.is_zero(), "nonzero symbolic residual for {s:?}");
        }
    }
}

#[test]
fn normalized_output_has_unit_content_and_positive_lead() {
    let rows = vec![vec![Poly::constant(4), Poly::constant(6)]];
    let q = kernel_vector(&rows).unwrap();
    // (-6, 4) normalized: content 2 out, sign flipped -> (3, -2).
    assert_eq!(q, vec![Poly::constant(3), Poly::constant(-2)]);
}
