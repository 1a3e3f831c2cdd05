//! Discovery, verification, and classification of linear invariance
//! relations among entries of matrix powers: fixed polynomial coefficients
//! `q_s` with `sum_{s in S} q_s * (A^m)_s = 0` for every power `m >= 1`.
//!
//! Discovery always solves the window `m = 1..n`: every entry sequence
//! satisfies the shared order-n recurrence given by the characteristic
//! polynomial, so a combination vanishing on n consecutive initial values is
//! identically zero. Returned relations are re-verified on an extended
//! window before they are handed out.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::kernel::kernel_vector as kernel_vector_in;
use crate::matrix::{MatrixError, PowerTable, RatMatrix, SymMatrix};
use crate::poly::{normalize_vector, Poly};
use crate::ring::RingElem;

/// Default cap on the dimension of fully symbolic discovery.
pub const DEFAULT_SYMBOLIC_CAP: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelationError {
    DimensionMismatch {
        matrix: usize,
        set: usize,
    },
    EmptyEntrySet,
    DuplicateEntry {
        i: u32,
        j: u32,
    },
    EntryOutOfRange {
        i: u32,
        j: u32,
        n: usize,
    },
    /// The power table has full column rank: no nonzero combination exists.
    NoRelation,
    /// The extended check failed; this indicates an implementation bug and
    /// is never silently ignored.
    VerificationFailure {
        m: usize,
    },
    /// Fully symbolic discovery refused beyond the configured cap.
    SymbolicCapExceeded {
        n: usize,
        cap: usize,
    },
    Matrix(MatrixError),
}

impl fmt::Display for RelationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationError::DimensionMismatch { matrix, set } => {
                write!(
                    f,
                    "matrix dimension {matrix} does not match entry-set dimension {set}"
                )
            }
            RelationError::EmptyEntrySet => write!(f, "entry set is empty"),
            RelationError::DuplicateEntry { i, j } => {
                write!(f, "duplicate entry ({i},{j}) in entry set")
            }
            RelationError::EntryOutOfRange { i, j, n } => {
                write!(f, "entry ({i},{j}) out of range for dimension {n}")
            }
            RelationError::NoRelation => {
                write!(f, "no relation: the power table has full column rank")
            }
            RelationError::VerificationFailure { m } => {
                write!(
                    f,
                    "internal error: discovered relation failed verification at power {m}"
                )
            }
            RelationError::SymbolicCapExceeded { n, cap } => {
                write!(
                    f,
                    "symbolic discovery for n = {n} exceeds the configured cap {cap}; \
                     raise the cap or supply a specialized matrix"
                )
            }
            RelationError::Matrix(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for RelationError {}

impl From<MatrixError> for RelationError {
    fn from(e: MatrixError) -> Self {
        RelationError::Matrix(e)
    }
}

/// An ordered set of distinct matrix positions; the order indexes
/// coefficient vectors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct EntrySet {
    n: usize,
    entries: Vec<(u32, u32)>,
}

impl EntrySet {
    pub fn new(n: usize, entries: Vec<(u32, u32)>) -> Result<Self, RelationError> {
        if entries.is_empty() {
            return Err(RelationError::EmptyEntrySet);
        }
        let mut seen = BTreeSet::new();
        for &(i, j) in &entries {
            if i < 1 || j < 1 || i as usize > n || j as usize > n {
                return Err(RelationError::EntryOutOfRange { i, j, n });
            }
            if !seen.insert((i, j)) {
                return Err(RelationError::DuplicateEntry { i, j });
            }
        }
        Ok(EntrySet { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(u32, u32)] {
        &self.entries
    }

    /// True iff every position is off the main diagonal.
    pub fn is_off_diagonal(&self) -> bool {
        self.entries.iter().all(|&(i, j)| i != j)
    }
}

impl fmt::Display for EntrySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, (i, j)) in self.entries.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({i},{j})")?;
        }
        write!(f, "}}")
    }
}

/// A verified invariance relation `sum_s q_s * (A^m)_s = 0`.
///
/// The coefficient vector is jointly normalized: integer content one and a
/// positive leading coefficient on the first nonzero entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    entry_set: EntrySet,
    coeffs: Vec<Poly>,
    verified_up_to: usize,
}

impl Relation {
    /// Validates shape (lengths match, at least one nonzero coefficient) and
    /// normalizes the vector.
    pub fn from_parts(
        entry_set: EntrySet,
        coeffs: Vec<Poly>,
        verified_up_to: usize,
    ) -> Result<Self, RelationError> {
        if coeffs.len() != entry_set.len() {
            return Err(RelationError::DimensionMismatch {
                matrix: coeffs.len(),
                set: entry_set.len(),
            });
        }
        if coeffs.iter().all(Poly::is_zero) {
            return Err(RelationError::NoRelation);
        }
        Ok(Relation {
            entry_set,
            coeffs: normalize_vector(&coeffs),
            verified_up_to,
        })
    }

    pub fn entry_set(&self) -> &EntrySet {
        &self.entry_set
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn verified_up_to(&self) -> usize {
        self.verified_up_to
    }
}

/// Options for discovery: the verification horizon (default `2n + 4`) and
/// the symbolic dimension cap (default 4).
#[derive(Debug, Clone)]
pub struct DiscoveryOptions {
    pub verify_horizon: Option<usize>,
    pub symbolic_cap: usize,
}

impl Default for DiscoveryOptions {
    fn default() -> Self {
        DiscoveryOptions {
            verify_horizon: None,
            symbolic_cap: DEFAULT_SYMBOLIC_CAP,
        }
    }
}

impl DiscoveryOptions {
    fn horizon(&self, n: usize) -> usize {
        self.verify_horizon.unwrap_or(2 * n + 4).max(1)
    }
}

/// The table `V[m][s] = (A^m)_s` for `m = 1..=max_m`, entries in the order
/// of `S`.
pub fn power_table(
    a: &SymMatrix,
    s: &EntrySet,
    max_m: usize,
) -> Result<Vec<Vec<Poly>>, RelationError> {
    if a.n() != s.n() {
        return Err(RelationError::DimensionMismatch {
            matrix: a.n(),
            set: s.n(),
        });
    }
    let table = PowerTable::new(a, max_m)?;
    Ok(extract_rows(&table, s, max_m))
}

fn extract_rows<T: RingElem>(table: &PowerTable<T>, s: &EntrySet, max_m: usize) -> Vec<Vec<T>> {
    (1..=max_m)
        .map(|m| {
            s.entries()
                .iter()
                .map(|&(i, j)| table.power(m).entry(i as usize, j as usize).clone())
                .collect()
        })
        .collect()
}

/// A nonzero normalized vector annihilated by every row, found by
/// fraction-free elimination; `None` when the rows have full column rank.
pub fn kernel_vector(rows: &[Vec<Poly>]) -> Option<Vec<Poly>> {
    kernel_vector_in(rows).map(|q| normalize_vector(&q))
}

/// Discovers the relation for entry set `S` of a symbolic matrix.
///
/// Guaranteed to succeed when `|S| = n + 1`, or `|S| = n` with every entry
/// off-diagonal; other sizes are attempted best-effort and may return
/// `NoRelation`. The discovered vector is verified for `m = 1..=horizon`
/// before it is returned.
pub fn find_relation(
    a: &SymMatrix,
    s: &EntrySet,
    opts: &DiscoveryOptions,
) -> Result<Relation, RelationError> {
    if a.n() != s.n() {
        return Err(RelationError::DimensionMismatch {
            matrix: a.n(),
            set: s.n(),
        });
    }
    if a.has_variables() && a.n() > opts.symbolic_cap {
        return Err(RelationError::SymbolicCapExceeded {
            n: a.n(),
            cap: opts.symbolic_cap,
        });
    }
    let n = a.n();
    let horizon = opts.horizon(n);
    let table = PowerTable::new(a, horizon.max(n))?;
    let window = extract_rows(&table, s, n);
    let coeffs = kernel_vector(&window).ok_or(RelationError::NoRelation)?;
    for m in 1..=horizon {
        let mut acc = Poly::zero();
        for (q, &(i, j)) in coeffs.iter().zip(s.entries()) {
            acc = acc.add(&q.mul(table.power(m).entry(i as usize, j as usize)));
        }
        if !acc.is_zero() {
            return Err(RelationError::VerificationFailure { m });
        }
    }
    Relation::from_parts(s.clone(), coeffs, horizon)
}

/// Discovers a relation on a concrete rational matrix; coefficients are
/// constants, scaled to integers.
pub fn find_relation_specialized(
    r: &RatMatrix,
    s: &EntrySet,
    opts: &DiscoveryOptions,
) -> Result<Relation, RelationError> {
    if r.n() != s.n() {
        return Err(RelationError::DimensionMismatch {
            matrix: r.n(),
            set: s.n(),
        });
    }
    let n = r.n();
    let horizon = opts.horizon(n);
    let table = PowerTable::new(r, horizon.max(n))?;
    let window = extract_rows(&table, s, n);
    let q = kernel_vector_in(&window).ok_or(RelationError::NoRelation)?;
    let coeffs = rationals_to_constant_polys(&q);
    for m in 1..=horizon {
        let mut acc: BigRational = Zero::zero();
        for (c, &(i, j)) in q.iter().zip(s.entries()) {
            acc += c * table.power(m).entry(i as usize, j as usize);
        }
        if !RingElem::is_zero(&acc) {
            return Err(RelationError::VerificationFailure { m });
        }
    }
    Relation::from_parts(s.clone(), coeffs, horizon)
}

fn rationals_to_constant_polys(values: &[BigRational]) -> Vec<Poly> {
    let mut lcm = BigInt::one();
    for v in values {
        lcm = lcm.lcm(v.denom());
    }
    values
        .iter()
        .map(|v| {
            let scaled = v * BigRational::from_integer(lcm.clone());
            debug_assert!(scaled.denom().is_one());
            Poly::constant(scaled.numer().clone())
        })
        .collect()
}

/// Whether the relation identity holds symbolically for every `m = 1..=max_m`.
pub fn verify_relation(a: &SymMatrix, rel: &Relation, max_m: usize) -> Result<bool, RelationError> {
    if a.n() != rel.entry_set().n() {
        return Err(RelationError::DimensionMismatch {
            matrix: a.n(),
            set: rel.entry_set().n(),
        });
    }
    let table = PowerTable::new(a, max_m)?;
    for m in 1..=max_m {
        let mut acc = Poly::zero();
        for (q, &(i, j)) in rel.coeffs().iter().zip(rel.entry_set().entries()) {
            acc = acc.add(&q.mul(table.power(m).entry(i as usize, j as usize)));
        }
        if !acc.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Evaluates a (possibly symbolic) relation on a concrete rational matrix
/// under exact arithmetic.
pub fn verify_relation_specialized(
    r: &RatMatrix,
    rel: &Relation,
    max_m: usize,
) -> Result<bool, RelationError> {
    if r.n() != rel.entry_set().n() {
        return Err(RelationError::DimensionMismatch {
            matrix: r.n(),
            set: rel.entry_set().n(),
        });
    }
    let assignment = r.assignment();
    let values: Vec<BigRational> = rel
        .coeffs()
        .iter()
        .map(|q| q.eval(&assignment).expect("assignment covers all a[i,j]"))
        .collect();
    let table = PowerTable::new(r, max_m)?;
    for m in 1..=max_m {
        let mut acc: BigRational = Zero::zero();
        for (v, &(i, j)) in values.iter().zip(rel.entry_set().entries()) {
            acc += v * table.power(m).entry(i as usize, j as usize);
        }
        if !RingElem::is_zero(&acc) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The symmetry group used to identify equivalent entry sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    /// Simultaneous relabeling of rows and columns by a permutation.
    Perm,
    /// Relabeling combined with transposition.
    PermTranspose,
}

impl Group {
    pub fn as_str(&self) -> &'static str {
        match self {
            Group::Perm => "perm",
            Group::PermTranspose => "perm+transpose",
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An equivalence class of entry sets under the chosen group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitClass {
    pub representative: EntrySet,
    pub orbit_size: usize,
    pub group: Group,
}

/// Enumerates all size-`size` entry subsets (optionally off-diagonal only)
/// and groups them into orbits; representatives are the lexicographically
/// least members, classes are returned in representative order.
pub fn classify_subsets(
    n: usize,
    size: usize,
    off_diagonal_only: bool,
    group: Group,
) -> Vec<OrbitClass> {
    assert!(size >= 1, "subset size must be positive");
    let positions: Vec<(u32, u32)> = (1..=n as u32)
        .cartesian_product(1..=n as u32)
        .filter(|&(i, j)| !off_diagonal_only || i != j)
        .collect();
    let perms: Vec<Vec<u32>> = (1..=n as u32).permutations(n).collect();
    let mut classes: BTreeMap<Vec<(u32, u32)>, usize> = BTreeMap::new();
    let mut total = 0usize;
    for subset in positions.iter().copied().combinations(size) {
        total += 1;
        let mut images: BTreeSet<Vec<(u32, u32)>> = BTreeSet::new();
        for perm in &perms {
            for transpose in [false, true] {
                if transpose && group == Group::Perm {
                    continue;
                }
                let mut image: Vec<(u32, u32)> = subset
                    .iter()
                    .map(|&(i, j)| {
                        let (i, j) = if transpose { (j, i) } else { (i, j) };
                        (perm[(i - 1) as usize], perm[(j - 1) as usize])
                    })
                    .collect();
                image.sort_unstable();
                images.insert(image);
            }
        }
        let canon = images.iter().next().expect("orbit nonempty").clone();
        let sorted: Vec<(u32, u32)> = subset.iter().copied().sorted_unstable().collect();
        // Record each orbit once, keyed by its canonical member.
        if sorted == canon {
            classes.insert(canon, images.len());
        }
    }
    debug_assert_eq!(
        classes.values().sum::<usize>(),
        total,
        "orbit sizes must partition the subsets"
    );
    classes
        .into_iter()
        .map(|(representative, orbit_size)| OrbitClass {
            representative: EntrySet::new(n, representative)
                .expect("canonical representative is valid"),
            orbit_size,
            group,
        })
        .collect()
}

/// One report row: an orbit class and the discovery outcome for its
/// representative.
#[derive(Debug, Clone)]
pub struct ReportEntry {
    pub class: OrbitClass,
    pub relation: Result<Relation, RelationError>,
}

/// Discovers one relation per orbit class. Off-diagonal reports use subsets
/// of size `n` (guaranteed by the window identity); otherwise size `n + 1`.
/// Per-class failures are recorded, not propagated.
pub fn relation_report(
    n: usize,
    off_diagonal_only: bool,
    group: Group,
    opts: &DiscoveryOptions,
) -> Result<Vec<ReportEntry>, RelationError> {
    if n > opts.symbolic_cap {
        return Err(RelationError::SymbolicCapExceeded {
            n,
            cap: opts.symbolic_cap,
        });
    }
    let a = SymMatrix::generic(n)?;
    let size = if off_diagonal_only { n } else { n + 1 };
    let classes = classify_subsets(n, size, off_diagonal_only, group);
    Ok(classes
        .into_iter()
        .map(|class| {
            let relation = find_relation(&a, &class.representative, opts);
            ReportEntry { class, relation }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::var;

    fn entries(n: usize, list: &[(u32, u32)]) -> EntrySet {
        EntrySet::new(n, list.to_vec()).unwrap()
    }

    #[test]
    fn entry_set_validation() {
        assert!(matches!(
            EntrySet::new(2, vec![]),
            Err(RelationError::EmptyEntrySet)
        ));
        assert!(matches!(
            EntrySet::new(2, vec![(1, 2), (1, 2)]),
            Err(RelationError::DuplicateEntry { .. })
        ));
        assert!(matches!(
            EntrySet::new(2, vec![(3, 1)]),
            Err(RelationError::EntryOutOfRange { .. })
        ));
        assert!(entries(2, &[(1, 2), (2, 1)]).is_off_diagonal());
        assert!(!entries(2, &[(1, 1), (2, 1)]).is_off_diagonal());
    }

    #[test]
    fn power_table_of_generic_two_by_two() {
        let a = SymMatrix::generic(2).unwrap();
        let s = entries(2, &[(1, 2), (2, 1)]);
        let v = power_table(&a, &s, 2).unwrap();
        assert_eq!(v[0], vec![var(1, 2), var(2, 1)]);
        assert_eq!(
            v[1],
            vec![
                Poly::parse("a[1,1]*a[1,2] + a[1,2]*a[2,2]").unwrap(),
                Poly::parse("a[2,1]*a[1,1] + a[2,2]*a[2,1]").unwrap(),
            ]
        );
    }

    #[test]
    fn tridiagonal_corner_column_is_zero() {
        let a = SymMatrix::tridiagonal(3).unwrap();
        let s = entries(3, &[(1, 3)]);
        let v = power_table(&a, &s, 1).unwrap();
        assert!(v[0][0].is_zero());
    }

    #[test]
    fn identity_table_is_all_zero_off_diagonal() {
        let id = SymMatrix::from_integer_entries(2, &[1, 0, 0, 1]).unwrap();
        let s = entries(2, &[(1, 2), (2, 1)]);
        let v = power_table(&id, &s, 4).unwrap();
        assert!(v.iter().all(|row| row.iter().all(Poly::is_zero)));
    }

    #[test]
    fn two_by_two_relation_is_the_anti_diagonal_one() {
        let a = SymMatrix::generic(2).unwrap();
        let s = entries(2, &[(1, 2), (2, 1)]);
        let rel = find_relation(&a, &s, &DiscoveryOptions::default()).unwrap();
        assert_eq!(rel.coeffs(), &[var(2, 1), var(1, 2).neg()]);
        assert_eq!(rel.verified_up_to(), 8);
    }

    #[test]
    fn identity_specialization_gives_unit_vector() {
        let id = SymMatrix::from_integer_entries(2, &[1, 0, 0, 1]).unwrap();
        let s = entries(2, &[(1, 2), (2, 1)]);
        let rel = find_relation(&id, &s, &DiscoveryOptions::default()).unwrap();
        assert_eq!(rel.coeffs(), &[Poly::one(), Poly::zero()]);
    }

    #[test]
    fn symbolic_cap_refuses_large_generic() {
        let a = SymMatrix::generic(5).unwrap();
        let s = entries(5, &[(1, 2), (2, 1), (1, 3), (3, 1), (2, 3)]);
        let err = find_relation(&a, &s, &DiscoveryOptions::default()).unwrap_err();
        assert_eq!(err, RelationError::SymbolicCapExceeded { n: 5, cap: 4 });
    }

    #[test]
    fn specialized_matrices_ignore_the_cap() {
        let r = RatMatrix::from_i64_entries(
            5,
            &[
                1, 2, 0, 1, -1, 3, 0, 1, 1, 2, 2, 2, -3, 0, 1, 0, 1, 1, 1, 4, 5, -2, 1, 0, 2,
            ],
        )
        .unwrap();
        let s = entries(5, &[(1, 2), (2, 1), (1, 3), (3, 1), (2, 3)]);
        let rel = find_relation_specialized(&r, &s, &DiscoveryOptions::default()).unwrap();
        assert!(verify_relation_specialized(&r, &rel, 12).unwrap());
    }

    #[test]
    fn classification_counts() {
        let one = classify_subsets(2, 2, true, Group::Perm);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].representative.entries(), &[(1, 2), (2, 1)]);
        assert_eq!(one[0].orbit_size, 1);
        assert_eq!(classify_subsets(3, 3, true, Group::Perm).len(), 4);
        assert_eq!(classify_subsets(3, 3, true, Group::PermTranspose).len(), 3);
    }

    #[test]
    fn report_for_n_three_has_four_rows() {
        let report = relation_report(3, true, Group::Perm, &DiscoveryOptions::default()).unwrap();
        assert_eq!(report.len(), 4);
        for entry in &report {
            assert!(
                entry.relation.is_ok(),
                "class {}",
                entry.class.representative
            );
        }
    }

    #[test]
    fn report_honors_symbolic_cap() {
        let err = relation_report(5, true, Group::Perm, &DiscoveryOptions::default()).unwrap_err();
        assert!(matches!(err, RelationError::SymbolicCapExceeded { .. }));
    }
}
