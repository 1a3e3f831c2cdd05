//! Exact symbolic machinery for invariance relations among entries of
//! matrix powers.
//!
//! For a generic `n x n` matrix `A` with indeterminate entries `a[i,j]`,
//! every entry sequence `m -> (A^m)_{ij}` satisfies the same order-n linear
//! recurrence, forced by the Cayley-Hamilton identity. Any `n + 1` entry
//! sequences are therefore linearly dependent with polynomial coefficients
//! independent of `m`, and any `n` off-diagonal sequences already are,
//! because `sum_{k=1}^{n} p_k A^k = -det(A) I` has zero off-diagonal
//! entries. This crate discovers those dependencies exactly, verifies them
//! symbolically, classifies entry sets up to relabeling, and implements the
//! tridiagonal walk model whose weight-preserving bijection explains the
//! anti-diagonal invariance `a[i,i+1] (A^m)[i+1,i] = a[i+1,i] (A^m)[i,i+1]`.
//!
//! Everything is exact: polynomial arithmetic over arbitrary-precision
//! integers, fraction-free elimination for kernels, and exact rational
//! arithmetic for specialized matrices. See the `examples/` directory for
//! runnable entry points; the `powrel` binary exposes the same operations
//! as subcommands.
//!
//! ```
//! use powrel::{find_relation, DiscoveryOptions, EntrySet, SymMatrix};
//!
//! let a = SymMatrix::generic(2)?;
//! let s = EntrySet::new(2, vec![(1, 2), (2, 1)])?;
//! let rel = find_relation(&a, &s, &DiscoveryOptions::default())?;
//! assert_eq!(
//!     powrel::render::relation_text(&rel),
//!     "a[2,1]*(A^m)[1,2] - a[1,2]*(A^m)[2,1] = 0"
//! );
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod charpoly;
pub mod cli;
pub mod kernel;
pub mod matrix;
pub mod poly;
pub mod relations;
pub mod render;
pub mod ring;
pub mod walks;

pub use charpoly::{
    cayley_hamilton_check, charpoly, entry_recurrence_check, entry_recurrence_check_all,
    offdiag_window_check, CharPoly,
};
pub use matrix::{Matrix, MatrixError, PowerTable, RatMatrix, SymMatrix};
pub use poly::{normalize_vector, Monomial, Poly, PolyError, Var};
pub use relations::{
    classify_subsets, find_relation, find_relation_specialized, kernel_vector, power_table,
    relation_report, verify_relation, verify_relation_specialized, DiscoveryOptions, EntrySet,
    Group, OrbitClass, Relation, RelationError, ReportEntry,
};
pub use walks::{
    apply_t, apply_u, check_bijection, enumerate_words, eq2_check, is_legal, weight,
    weight_enumerator, BijectionReport, WalkError, Word, WordClass,
};
