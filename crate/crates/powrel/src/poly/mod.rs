//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients over the matrix-entry indeterminates `a[i,j]`.
//!
//! Every value is immutable and canonical: no stored exponent or coefficient
//! is zero, and equal polynomials have identical term maps. Monomials are
//! ordered by graded lexicographic order induced by the row-major variable
//! order `a[1,1] < a[1,2] < ... < a[n,n]`, which fixes printing and the sign
//! rule of [`Poly::normalize`].

mod parse;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Errors raised by polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// `exact_div` was asked for a quotient that leaves a remainder.
    NotDivisible,
    /// `exact_div` with a zero divisor.
    DivisionByZero,
    /// `eval` met a variable missing from the assignment.
    UnboundVariable(Var),
    /// `parse` rejected the input at the given byte offset.
    Syntax { pos: usize, message: String },
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::NotDivisible => write!(f, "polynomial division is not exact"),
            PolyError::DivisionByZero => write!(f, "division by the zero polynomial"),
            PolyError::UnboundVariable(v) => write!(f, "unbound variable {v}"),
            PolyError::Syntax { pos, message } => {
                write!(f, "syntax error at byte {pos}: {message}")
            }
        }
    }
}

impl std::error::Error for PolyError {}

/// A matrix-entry indeterminate `a[row,col]`, 1-based.
///
/// The derived order is row-major: `a[1,1] < a[1,2] < ... < a[n,n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    row: u32,
    col: u32,
}

impl Var {
    /// Panics if either index is zero; indices are 1-based.
    pub fn new(row: u32, col: u32) -> Self {
        assert!(row >= 1 && col >= 1, "variable indices are 1-based");
        Var { row, col }
    }

    pub fn row(&self) -> u32 {
        self.row
    }

    pub fn col(&self) -> u32 {
        self.col
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a[{},{}]", self.row, self.col)
    }
}

/// A product of variables with positive exponents, kept sorted by variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(Var, u32)>,
}

impl Monomial {
    /// The empty product.
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        Monomial {
            factors: vec![(v, 1)],
        }
    }

    /// Builds a monomial from (variable, exponent) pairs, merging repeats and
    /// dropping zero exponents.
    pub fn from_powers<I: IntoIterator<Item = (Var, u32)>>(powers: I) -> Self {
        let mut map: BTreeMap<Var, u64> = BTreeMap::new();
        for (v, e) in powers {
            if e > 0 {
                *map.entry(v).or_insert(0) += u64::from(e);
            }
        }
        Monomial {
            factors: map
                .into_iter()
                .map(|(v, e)| (v, u32::try_from(e).expect("exponent overflow")))
                .collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| u64::from(e)).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.factors
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|idx| self.factors[idx].1)
            .unwrap_or(0)
    }

    pub fn powers(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.factors.iter().copied()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_powers(self.powers().chain(other.powers()))
    }

    /// Whether `self` divides `other` variable-wise.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.powers().all(|(v, e)| other.exponent(v) >= e)
    }

    /// `other / self`, or `None` when not divisible.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial::from_powers(
            other.powers().map(|(v, e)| (v, e - self.exponent(v))),
        ))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then exponents compared from
    /// the greatest variable downward (the monomial holding the larger power
    /// of the greater variable wins).
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mut lhs = self.factors.iter().rev().peekable();
        let mut rhs = other.factors.iter().rev().peekable();
        loop {
            match (lhs.peek(), rhs.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&&(lv, le)), Some(&&(rv, re))) => {
                    if lv != rv {
                        // Only one side has a power of the greater variable.
                        return lv.cmp(&rv);
                    }
                    if le != re {
                        return le.cmp(&re);
                    }
                    lhs.next();
                    rhs.next();
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over arbitrary-precision integers.
///
/// The zero polynomial is the empty term map; no stored coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Poly { terms }
    }

    pub fn variable(v: Var) -> Self {
        Poly::term(Monomial::var(v), BigInt::one())
    }

    /// Single-term polynomial `c * m` (zero when `c` is zero).
    pub fn term(m: Monomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    /// Canonicalizing constructor: merges repeated monomials, drops zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(iter: I) -> Self {
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in iter {
            if c.is_zero() {
                continue;
            }
            let entry = terms.entry(m).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.num_terms() == 1
            && self
                .leading()
                .map(|(m, c)| m.is_one() && c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Constant value when the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        if self.num_terms() == 1 {
            if let Some((m, c)) = self.leading() {
                if m.is_one() {
                    return Some(c.clone());
                }
            }
        }
        None
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Greatest term in graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    /// The set of variables that occur with nonzero exponent.
    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.powers().map(|(v, _)| v))
            .collect()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Poly { terms }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(BigInt::zero);
            *entry -= c;
        }
        terms.retain(|_, c| !c.is_zero());
        Poly { terms }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        // Iterate the smaller operand on the outside.
        let (small, large) = if self.num_terms() <= other.num_terms() {
            (self, other)
        } else {
            (other, self)
        };
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ms, cs) in &small.terms {
            for (ml, cl) in &large.terms {
                let m = ms.mul(ml);
                let entry = terms.entry(m).or_insert_with(BigInt::zero);
                *entry += cs * cl;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Poly { terms }
    }

    pub fn mul_scalar(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Exact division by an integer scalar; `NotDivisible` on any remainder.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Result<Poly, PolyError> {
        if c.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let mut terms = BTreeMap::new();
        for (m, k) in &self.terms {
            let (q, r) = k.div_rem(c);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            terms.insert(m.clone(), q);
        }
        Ok(Poly { terms })
    }

    /// Exact polynomial division: the quotient `q` with `q * d == self`.
    ///
    /// Signals `NotDivisible` when no such quotient exists and
    /// `DivisionByZero` when `d` is zero.
    pub fn exact_div(&self, d: &Poly) -> Result<Poly, PolyError> {
        let (dm, dc) = match d.leading() {
            None => return Err(PolyError::DivisionByZero),
            Some(lead) => lead,
        };
        let mut remainder = self.clone();
        let mut quotient_terms: Vec<(Monomial, BigInt)> = Vec::new();
        while let Some((rm, rc)) = remainder.leading() {
            let qm = match dm.quotient_of(rm) {
                Some(qm) => qm,
                None => return Err(PolyError::NotDivisible),
            };
            let (qc, rem) = rc.div_rem(dc);
            if !rem.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            let t = Poly::term(qm.clone(), qc.clone());
            remainder = remainder.sub(&t.mul(d));
            quotient_terms.push((qm, qc));
        }
        Ok(Poly::from_terms(quotient_terms))
    }

    /// GCD of all integer coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the integer content and flips the sign so the coefficient
    /// of the greatest monomial is positive. `normalize(0) = 0`.
    pub fn normalize(&self) -> Poly {
        let mut g = self.content();
        if g.is_zero() {
            return Poly::zero();
        }
        if let Some((_, lead)) = self.leading() {
            if lead.is_negative() {
                g = -g;
            }
        }
        self.div_scalar_exact(&g)
            .expect("content divides every coefficient")
    }

    /// Exact rational value at a variable assignment.
    pub fn eval(&self, assignment: &BTreeMap<Var, BigRational>) -> Result<BigRational, PolyError> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = BigRational::from(c.clone());
            for (v, e) in m.powers() {
                let val = assignment.get(&v).ok_or(PolyError::UnboundVariable(v))?;
                term *= BigRational::new(val.numer().pow(e), val.denom().pow(e));
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Applies a variable substitution `a[i,j] -> f(a[i,j])` to every term.
    pub fn rename_vars<F: Fn(Var) -> Var>(&self, f: F) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| {
            (
                Monomial::from_powers(m.powers().map(|(v, e)| (f(v), e))),
                c.clone(),
            )
        }))
    }

    /// Parses the polynomial text grammar; see the module docs of
    /// [`crate::poly`] and the crate README for the grammar.
    pub fn parse(text: &str) -> Result<Poly, PolyError> {
        parse::parse_poly(text)
    }
}

impl FromStr for Poly {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Poly::parse(s)
    }
}

/// Joint normalization of a coefficient vector: divides all polynomials by
/// their common integer content and flips the sign so the first nonzero
/// entry has a positive leading coefficient.
pub fn normalize_vector(coeffs: &[Poly]) -> Vec<Poly> {
    let mut g = BigInt::zero();
    for p in coeffs {
        g = g.gcd(&p.content());
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() {
        return coeffs.to_vec();
    }
    if let Some(first) = coeffs.iter().find(|p| !p.is_zero()) {
        let (_, lead) = first.leading().expect("nonzero polynomial has a lead");
        if lead.is_negative() {
            g = -g;
        }
    }
    coeffs
        .iter()
        .map(|p| {
            p.div_scalar_exact(&g)
                .expect("joint content divides every coefficient")
        })
        .collect()
}

impl fmt::Display for Poly {
    /// Terms in descending graded-lex order; unary minus folded into the
    /// separator; no `1*` prefix; single spaces around binary `+`/`-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                let mut lead_done = false;
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                    lead_done = true;
                }
                for (v, e) in m.powers() {
                    if lead_done {
                        write!(f, "*")?;
                    }
                    lead_done = true;
                    write!(f, "{v}")?;
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::add(self, rhs)
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        Poly::sub(self, rhs)
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::mul(self, rhs)
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

/// Shorthand used throughout the crate and its tests.
pub fn var(row: u32, col: u32) -> Poly {
    Poly::variable(Var::new(row, col))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn additive_inverse_cancels() {
        let a = var(1, 2);
        assert!(a.add(&a.neg()).is_zero());
    }

    #[test]
    fn coefficients_merge() {
        let sum = p("a[1,1] + a[2,2]").add(&p("a[1,1]"));
        assert_eq!(sum, p("2*a[1,1] + a[2,2]"));
    }

    #[test]
    fn additive_identity() {
        let m = p("a[1,2]*a[2,1]");
        assert_eq!(m.add(&Poly::zero()), m);
    }

    #[test]
    fn monomial_product() {
        assert_eq!(var(1, 2).mul(&var(2, 1)), p("a[1,2]*a[2,1]"));
    }

    #[test]
    fn difference_of_squares() {
        let lhs = p("a[1,1] + a[2,2]").mul(&p("a[1,1] - a[2,2]"));
        assert_eq!(lhs, p("a[1,1]^2 - a[2,2]^2"));
    }

    #[test]
    fn zero_absorbs() {
        assert!(p("a[1,1]^3 - 7*a[1,2]").mul(&Poly::zero()).is_zero());
    }

    #[test]
    fn exact_div_monomial() {
        let q = p("a[1,2]^2*a[2,1]").exact_div(&var(1, 2)).unwrap();
        assert_eq!(q, p("a[1,2]*a[2,1]"));
    }

    #[test]
    fn exact_div_factored() {
        let q = p("a[1,1]^2 - a[2,2]^2")
            .exact_div(&p("a[1,1] + a[2,2]"))
            .unwrap();
        assert_eq!(q, p("a[1,1] - a[2,2]"));
    }

    #[test]
    fn exact_div_non_multiple() {
        assert_eq!(
            p("a[1,1] + 1").exact_div(&var(1, 2)),
            Err(PolyError::NotDivisible)
        );
    }

    #[test]
    fn exact_div_by_zero() {
        assert_eq!(
            var(1, 1).exact_div(&Poly::zero()),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn normalize_content_and_sign() {
        // Greatest monomial is a[2,1] (row-major order, equal degree).
        assert_eq!(
            p("-2*a[1,2] - 4*a[2,1]").normalize(),
            p("a[1,2] + 2*a[2,1]")
        );
        assert_eq!(Poly::zero().normalize(), Poly::zero());
        assert_eq!(p("6*a[1,1]^2").normalize(), p("a[1,1]^2"));
    }

    #[test]
    fn monomial_order_matches_row_major_rule() {
        let a12 = Monomial::var(Var::new(1, 2));
        let a21 = Monomial::var(Var::new(2, 1));
        assert!(a21 > a12);
        let a11a22 = a12_pair(1, 1, 2, 2);
        let a12a21 = a12_pair(1, 2, 2, 1);
        assert!(a11a22 > a12a21);
        // Degree dominates.
        let deg2 = Monomial::from_powers([(Var::new(1, 1), 2)]);
        assert!(deg2 > Monomial::var(Var::new(2, 2)));
    }

    fn a12_pair(r1: u32, c1: u32, r2: u32, c2: u32) -> Monomial {
        Monomial::from_powers([(Var::new(r1, c1), 1), (Var::new(r2, c2), 1)])
    }

    #[test]
    fn eval_simple() {
        let mut asg = BTreeMap::new();
        asg.insert(Var::new(1, 2), BigRational::from(BigInt::from(2)));
        asg.insert(Var::new(2, 1), BigRational::from(BigInt::from(3)));
        let v = p("a[1,2]*a[2,1]").eval(&asg).unwrap();
        assert_eq!(v, BigRational::from(BigInt::from(6)));
        assert!(Poly::zero().eval(&BTreeMap::new()).unwrap().is_zero());
    }

    #[test]
    fn eval_unbound_variable() {
        let err = var(1, 1).eval(&BTreeMap::new()).unwrap_err();
        assert_eq!(err, PolyError::UnboundVariable(Var::new(1, 1)));
    }

    #[test]
    fn eval_cancellation_consistent() {
        let mut asg = BTreeMap::new();
        asg.insert(Var::new(1, 1), BigRational::from(BigInt::from(7)));
        let diff = var(1, 1).sub(&var(1, 1));
        assert!(diff.eval(&asg).unwrap().is_zero());
    }

    #[test]
    fn display_descending_with_folded_signs() {
        assert_eq!(
            p("a[1,2]*a[2,1] - a[1,1]*a[2,2]").to_string(),
            "-a[1,1]*a[2,2] + a[1,2]*a[2,1]"
        );
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(p("-3*a[1,2]^2").to_string(), "-3*a[1,2]^2");
        assert_eq!(
            p("a[1,1]*a[2,2] - a[1,2]*a[2,1]").to_string(),
            "a[1,1]*a[2,2] - a[1,2]*a[2,1]"
        );
    }

    #[test]
    fn vector_normalization_uses_first_nonzero_lead() {
        let v = normalize_vector(&[Poly::zero(), p("-2*a[2,1]"), p("4*a[1,2]")]);
        assert_eq!(v, vec![Poly::zero(), p("a[2,1]"), p("-2*a[1,2]")]);
    }

    #[test]
    fn rename_vars_transposes() {
        let q = p("a[1,2]^2*a[2,1]").rename_vars(|v| Var::new(v.col(), v.row()));
        assert_eq!(q, p("a[2,1]^2*a[1,2]"));
    }
}
