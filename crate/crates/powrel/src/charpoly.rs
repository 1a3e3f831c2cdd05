//! Characteristic polynomial in the convention `P_A(x) = det(A - xI)` and
//! the identities it forces on entries of matrix powers.
//!
//! The Faddeev-LeVerrier recurrence natively produces `det(xI - A)`; the
//! sign map `p_k = (-1)^n c_k` is applied at the boundary so that
//! `p_0 = det(A)` and `p_n = (-1)^n`.

use crate::matrix::{Matrix, PowerTable};
use crate::ring::RingElem;

/// Coefficient vector `p_0 .. p_n` of `P_A(x) = det(A - xI) = sum p_k x^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly<T> {
    coeffs: Vec<T>,
}

impl<T: RingElem> CharPoly<T> {
    pub fn n(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `p_k`; panics for `k > n`.
    pub fn coeff(&self, k: usize) -> &T {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// `p_0 = det(A)`.
    pub fn det(&self) -> &T {
        &self.coeffs[0]
    }
}

/// Characteristic polynomial of a square matrix by the Faddeev-LeVerrier
/// recurrence. Every interior division by the step index is an exact
/// division; a non-exact one indicates corrupted arithmetic and panics.
pub fn charpoly<T: RingElem>(a: &Matrix<T>) -> CharPoly<T> {
    let n = a.n();
    let identity = Matrix::identity(n);
    // c_k are the coefficients of det(xI - A); c_n = 1.
    let mut c = vec![T::zero(); n + 1];
    c[n] = T::one();
    // Running product A * M_{k-1}; M_0 = 0.
    let mut b = Matrix::<T>::zero(n);
    for k in 1..=n {
        let m_k = b
            .add(&identity.scalar_mul(&c[n - k + 1]))
            .expect("dimensions fixed");
        b = a.mat_mul(&m_k).expect("dimensions fixed");
        c[n - k] = b
            .trace()
            .exact_div(&T::from_int(k as i64))
            .expect("Faddeev-LeVerrier interior division must be exact")
            .neg();
    }
    if n % 2 == 1 {
        for coeff in &mut c {
            *coeff = coeff.neg();
        }
    }
    CharPoly { coeffs: c }
}

/// Whether `sum_{k=0}^{n} p_k A^k` is the zero matrix (`A^0 = I`).
pub fn cayley_hamilton_check<T: RingElem>(a: &Matrix<T>) -> bool {
    let n = a.n();
    let p = charpoly(a);
    let table = PowerTable::new(a, n).expect("square matrix");
    let mut acc = Matrix::identity(n).scalar_mul(p.coeff(0));
    for k in 1..=n {
        acc = acc
            .add(&table.power(k).scalar_mul(p.coeff(k)))
            .expect("dimensions fixed");
    }
    acc.is_zero()
}

/// Whether the entry sequence `(A^m)_{ij}` satisfies the shared order-n
/// recurrence `sum_{k=0}^{n} p_k (A^{m+k})_{ij} = 0` for every `m` in
/// `1..=horizon`.
pub fn entry_recurrence_check<T: RingElem>(
    a: &Matrix<T>,
    i: usize,
    j: usize,
    horizon: usize,
) -> bool {
    assert!(horizon >= 1, "horizon must be positive");
    let n = a.n();
    let p = charpoly(a);
    let table = PowerTable::new(a, horizon + n).expect("square matrix");
    for m in 1..=horizon {
        let mut acc = T::zero();
        for k in 0..=n {
            acc = acc.add(&p.coeff(k).mul(table.power(m + k).entry(i, j)));
        }
        if !acc.is_zero() {
            return false;
        }
    }
    true
}

/// [`entry_recurrence_check`] over every entry, sharing one power table.
pub fn entry_recurrence_check_all<T: RingElem>(a: &Matrix<T>, horizon: usize) -> bool {
    assert!(horizon >= 1, "horizon must be positive");
    let n = a.n();
    let p = charpoly(a);
    let table = PowerTable::new(a, horizon + n).expect("square matrix");
    for i in 1..=n {
        for j in 1..=n {
            for m in 1..=horizon {
                let mut acc = T::zero();
                for k in 0..=n {
                    acc = acc.add(&p.coeff(k).mul(table.power(m + k).entry(i, j)));
                }
                if !acc.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether `sum_{k=1}^{n} p_k A^k` equals `-det(A) I`, the diagonal window
/// identity behind the off-diagonal relations.
pub fn offdiag_window_check<T: RingElem>(a: &Matrix<T>) -> bool {
    let n = a.n();
    let p = charpoly(a);
    let table = PowerTable::new(a, n).expect("square matrix");
    let mut acc = Matrix::<T>::zero(n);
    for k in 1..=n {
        acc = acc
            .add(&table.power(k).scalar_mul(p.coeff(k)))
            .expect("dimensions fixed");
    }
    let expected = Matrix::identity(n).scalar_mul(&p.coeff(0).neg());
    acc == expected
}
