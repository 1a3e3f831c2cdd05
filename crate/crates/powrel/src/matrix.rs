//! Square matrices over a coefficient ring: generic and tridiagonal-generic
//! symbolic matrices, exact rational specializations, products, and cached
//! power tables.
//!
//! Positions are 1-based throughout, matching the `a[i,j]` indeterminates.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use crate::poly::{Poly, Var};
use crate::ring::{parse_rational, RingElem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixError {
    /// Generic and tridiagonal constructions need n >= 2.
    BadDimension(usize),
    DimensionMismatch {
        left: usize,
        right: usize,
    },
    /// Entry list length does not match the declared dimension.
    BadEntryCount {
        n: usize,
        got: usize,
    },
    BadRationalEntry {
        row: usize,
        col: usize,
        message: String,
    },
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::BadDimension(n) => write!(f, "dimension must be at least 2, got {n}"),
            MatrixError::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            MatrixError::BadEntryCount { n, got } => {
                write!(f, "{n}x{n} matrix needs {} entries, got {got}", n * n)
            }
            MatrixError::BadRationalEntry { row, col, message } => {
                write!(f, "bad rational at ({row},{col}): {message}")
            }
        }
    }
}

impl std::error::Error for MatrixError {}

/// A square matrix with entries in `T`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    n: usize,
    entries: Vec<T>,
}

/// Symbolic matrix over [`Poly`].
pub type SymMatrix = Matrix<Poly>;

/// Exact rational specialization of a matrix.
pub type RatMatrix = Matrix<BigRational>;

impl<T: RingElem> Matrix<T> {
    pub fn from_entries(n: usize, entries: Vec<T>) -> Result<Self, MatrixError> {
        if entries.len() != n * n {
            return Err(MatrixError::BadEntryCount {
                n,
                got: entries.len(),
            });
        }
        Ok(Matrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        for row in &rows {
            if row.len() != n {
                return Err(MatrixError::BadEntryCount {
                    n,
                    got: row.len() * n,
                });
            }
        }
        Ok(Matrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zero(n: usize) -> Self {
        Matrix {
            n,
            entries: vec![T::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n);
        for i in 1..=n {
            *m.entry_mut(i, i) = T::one();
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 1-based access; panics when out of range.
    pub fn entry(&self, i: usize, j: usize) -> &T {
        assert!(
            (1..=self.n).contains(&i) && (1..=self.n).contains(&j),
            "entry ({i},{j}) out of range for a {0}x{0} matrix",
            self.n
        );
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    fn entry_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RingElem::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zero(self.n);
        for i in 1..=self.n {
            for j in 1..=self.n {
                *t.entry_mut(i, j) = self.entry(j, i).clone();
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_dims(other)?;
        Ok(Matrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn scalar_mul(&self, c: &T) -> Self {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(|e| e.mul(c)).collect(),
        }
    }

    pub fn trace(&self) -> T {
        let mut acc = T::zero();
        for i in 1..=self.n {
            acc = acc.add(self.entry(i, i));
        }
        acc
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_dims(other)?;
        let n = self.n;
        let mut out = Matrix::zero(n);
        for i in 1..=n {
            for j in 1..=n {
                let mut acc = T::zero();
                for t in 1..=n {
                    let left = self.entry(i, t);
                    if left.is_zero() {
                        continue;
                    }
                    acc = acc.add(&left.mul(other.entry(t, j)));
                }
                *out.entry_mut(i, j) = acc;
            }
        }
        Ok(out)
    }

    /// `m`-th power by iterated multiplication, `m >= 1`.
    pub fn mat_pow(&self, m: usize) -> Result<Self, MatrixError> {
        assert!(m >= 1, "mat_pow exponent must be positive");
        let mut acc = self.clone();
        for _ in 1..m {
            acc = acc.mat_mul(self)?;
        }
        Ok(acc)
    }

    fn check_dims(&self, other: &Self) -> Result<(), MatrixError> {
        if self.n != other.n {
            return Err(MatrixError::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }
}

impl SymMatrix {
    /// The fully generic matrix: entry (i,j) is the indeterminate `a[i,j]`.
    pub fn generic(n: usize) -> Result<Self, MatrixError> {
        if n < 2 {
            return Err(MatrixError::BadDimension(n));
        }
        let mut m = Matrix::zero(n);
        for i in 1..=n {
            for j in 1..=n {
                *m.entry_mut(i, j) = Poly::variable(Var::new(i as u32, j as u32));
            }
        }
        Ok(m)
    }

    /// Generic tridiagonal matrix: `a[i,j]` where `|i-j| <= 1`, zero elsewhere.
    pub fn tridiagonal(n: usize) -> Result<Self, MatrixError> {
        if n < 2 {
            return Err(MatrixError::BadDimension(n));
        }
        let mut m = Matrix::zero(n);
        for i in 1..=n {
            for j in 1..=n {
                if i.abs_diff(j) <= 1 {
                    *m.entry_mut(i, j) = Poly::variable(Var::new(i as u32, j as u32));
                }
            }
        }
        Ok(m)
    }

    pub fn from_integer_entries(n: usize, entries: &[i64]) -> Result<Self, MatrixError> {
        Matrix::from_entries(n, entries.iter().map(|&k| Poly::constant(k)).collect())
    }

    /// True when any entry contains an indeterminate.
    pub fn has_variables(&self) -> bool {
        self.entries.iter().any(|p| !p.vars().is_empty())
    }
}

impl RatMatrix {
    /// Parses row-major rational strings such as `"3"`, `"-1/2"`.
    pub fn from_str_rows(rows: &[Vec<String>]) -> Result<Self, MatrixError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(MatrixError::BadEntryCount { n, got: row.len() });
            }
            for (j, text) in row.iter().enumerate() {
                let value =
                    parse_rational(text).map_err(|message| MatrixError::BadRationalEntry {
                        row: i + 1,
                        col: j + 1,
                        message,
                    })?;
                entries.push(value);
            }
        }
        Matrix::from_entries(n, entries)
    }

    pub fn from_i64_entries(n: usize, entries: &[i64]) -> Result<Self, MatrixError> {
        Matrix::from_entries(
            n,
            entries
                .iter()
                .map(|&k| BigRational::from_integer(k.into()))
                .collect(),
        )
    }

    /// The assignment `a[i,j] -> entry (i,j)` used to evaluate symbolic
    /// coefficients on this specialization.
    pub fn assignment(&self) -> BTreeMap<Var, BigRational> {
        let mut map = BTreeMap::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                map.insert(Var::new(i as u32, j as u32), self.entry(i, j).clone());
            }
        }
        map
    }

    pub fn is_tridiagonal(&self) -> bool {
        (1..=self.n).all(|i| {
            (1..=self.n).all(|j| i.abs_diff(j) <= 1 || RingElem::is_zero(self.entry(i, j)))
        })
    }
}

/// Consecutive powers `A^1 .. A^M`, built once and shared read-only.
#[derive(Debug, Clone)]
pub struct PowerTable<T> {
    powers: Vec<Matrix<T>>,
}

impl<T: RingElem> PowerTable<T> {
    pub fn new(base: &Matrix<T>, max_m: usize) -> Result<Self, MatrixError> {
        assert!(max_m >= 1, "power table horizon must be positive");
        let mut powers = Vec::with_capacity(max_m);
        powers.push(base.clone());
        for _ in 1..max_m {
            let next = powers.last().expect("nonempty").mat_mul(base)?;
            powers.push(next);
        }
        Ok(PowerTable { powers })
    }

    pub fn max_m(&self) -> usize {
        self.powers.len()
    }

    pub fn base(&self) -> &Matrix<T> {
        &self.powers[0]
    }

    /// `A^m` for `1 <= m <= max_m`; panics outside that range.
    pub fn power(&self, m: usize) -> &Matrix<T> {
        assert!(m >= 1 && m <= self.powers.len(), "power {m} not tabulated");
        &self.powers[m - 1]
    }
}
