//! The tridiagonal walk model: legal words over `{1..n}` whose consecutive
//! letters differ by at most one, their weights, and the weight-preserving
//! bijection proving the anti-diagonal invariance of tridiagonal matrix
//! powers.
//!
//! A word `w_1 .. w_{m+1}` is a walk on the path graph with loops; its weight
//! is the monomial `a[w_1,w_2] * a[w_2,w_3] * ...`, and the weight enumerator
//! of all legal `(m+1)`-letter words from `i` to `j` equals `(A^m)_{ij}` for
//! the generic tridiagonal matrix.

use std::collections::BTreeSet;
use std::fmt;

use crate::matrix::{MatrixError, PowerTable, SymMatrix};
use crate::poly::{Monomial, Poly, Var};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WalkError {
    LetterOutOfRange {
        letter: u32,
        n: usize,
    },
    EmptyWord,
    /// A consecutive pair differs by more than one.
    IllegalWord {
        index: usize,
        from: u32,
        to: u32,
    },
    /// The word does not have the shape required by the bijection domain.
    NotInDomain {
        reason: String,
    },
    BadWordSyntax {
        text: String,
    },
    InvalidDimension {
        n: usize,
    },
    BadIndex {
        letter: u32,
        n: usize,
    },
}

impl fmt::Display for WalkError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WalkError::LetterOutOfRange { letter, n } => {
                if *n == 0 {
                    write!(f, "letter {letter} is not a positive integer")
                } else {
                    write!(f, "letter {letter} outside the alphabet 1..={n}")
                }
            }
            WalkError::EmptyWord => write!(f, "words must have at least one letter"),
            WalkError::IllegalWord { index, from, to } => {
                write!(f, "illegal step {from} -> {to} after letter {index}")
            }
            WalkError::NotInDomain { reason } => write!(f, "word not in domain: {reason}"),
            WalkError::BadWordSyntax { text } => write!(f, "cannot parse word {text:?}"),
            WalkError::InvalidDimension { n } => {
                write!(f, "dimension must be at least 2, got {n}")
            }
            WalkError::BadIndex { letter, n } => {
                write!(f, "index {letter} outside 1..={n}")
            }
        }
    }
}

impl std::error::Error for WalkError {}

/// A nonempty sequence of letters, each at least 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self, WalkError> {
        if letters.is_empty() {
            return Err(WalkError::EmptyWord);
        }
        for &l in &letters {
            if l == 0 {
                return Err(WalkError::LetterOutOfRange { letter: 0, n: 0 });
            }
        }
        Ok(Word { letters })
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Parses either a digit string (`"121"`) or comma-separated letters
    /// (`"1,2,1"`, required once letters exceed 9).
    pub fn parse(text: &str) -> Result<Self, WalkError> {
        let bad = || WalkError::BadWordSyntax {
            text: text.to_string(),
        };
        let letters: Vec<u32> = if text.contains(',') {
            text.split(',')
                .map(|part| part.trim().parse::<u32>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else {
            text.trim()
                .chars()
                .map(|c| c.to_digit(10).ok_or_else(bad))
                .collect::<Result<_, _>>()?
        };
        if letters.contains(&0) {
            return Err(bad());
        }
        Word::new(letters)
    }
}

impl fmt::Display for Word {
    /// Digit string for alphabets up to 9, comma-separated beyond.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.iter().all(|&l| l <= 9) {
            for l in &self.letters {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(u32::to_string).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

fn adjacent(a: u32, b: u32) -> bool {
    a.abs_diff(b) <= 1
}

fn steps_legal(letters: &[u32]) -> Result<(), WalkError> {
    for (idx, pair) in letters.windows(2).enumerate() {
        if !adjacent(pair[0], pair[1]) {
            return Err(WalkError::IllegalWord {
                index: idx + 1,
                from: pair[0],
                to: pair[1],
            });
        }
    }
    Ok(())
}

/// Whether all consecutive letters differ by at most one. Letters outside
/// `1..=n` are an error, not a `false`.
pub fn is_legal(w: &Word, n: usize) -> Result<bool, WalkError> {
    for &l in w.letters() {
        if l as usize > n {
            return Err(WalkError::LetterOutOfRange { letter: l, n });
        }
    }
    Ok(steps_legal(w.letters()).is_ok())
}

/// All legal `(m+1)`-letter words from `i` to `j`, in lexicographic order.
pub fn enumerate_words(n: usize, m: usize, i: u32, j: u32) -> Result<Vec<Word>, WalkError> {
    check_letter(i, n)?;
    check_letter(j, n)?;
    let mut out = Vec::new();
    let mut prefix = vec![i];
    extend_words(n, m + 1, j, &mut prefix, &mut out);
    Ok(out)
}

fn check_letter(l: u32, n: usize) -> Result<(), WalkError> {
    if l < 1 || l as usize > n {
        return Err(WalkError::BadIndex { letter: l, n });
    }
    Ok(())
}

fn extend_words(
    n: usize,
    target_len: usize,
    last: u32,
    prefix: &mut Vec<u32>,
    out: &mut Vec<Word>,
) {
    let current = *prefix.last().expect("prefix nonempty");
    if prefix.len() == target_len {
        if current == last {
            out.push(Word {
                letters: prefix.clone(),
            });
        }
        return;
    }
    // Unreachable endpoints prune the search.
    let remaining = (target_len - prefix.len()) as u32;
    if current.abs_diff(last) > remaining {
        return;
    }
    let lo = current.saturating_sub(1).max(1);
    let hi = (current + 1).min(n as u32);
    for next in lo..=hi {
        prefix.push(next);
        extend_words(n, target_len, last, prefix, out);
        prefix.pop();
    }
}

/// The weight monomial `prod a[w_t, w_{t+1}]`; a single letter has weight 1.
pub fn weight(w: &Word) -> Result<Poly, WalkError> {
    steps_legal(w.letters())?;
    let powers = w
        .letters()
        .windows(2)
        .map(|pair| (Var::new(pair[0], pair[1]), 1u32));
    Ok(Poly::term(Monomial::from_powers(powers), 1.into()))
}

/// Sum of the weights of all of `W_m(i,j)`; equals the `(i,j)` entry of the
/// `m`-th power of the generic tridiagonal matrix.
pub fn weight_enumerator(n: usize, m: usize, i: u32, j: u32) -> Result<Poly, WalkError> {
    let mut acc = Poly::zero();
    for w in enumerate_words(n, m, i, j)? {
        acc = acc.add(&weight(&w)?);
    }
    Ok(acc)
}

/// A set of legal words described by endpoints: either `W_m(i,j)` (words of
/// `m+1` letters from `i` to `j`) or, with a second-letter constraint, the
/// prefixed `(m+2)`-letter sets such as `i W_m(i',i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordClass {
    pub n: usize,
    pub m: usize,
    pub first: u32,
    pub last: u32,
    pub second: Option<u32>,
}

impl WordClass {
    /// `W_m(i,j)`.
    pub fn plain(n: usize, m: usize, first: u32, last: u32) -> Self {
        WordClass {
            n,
            m,
            first,
            last,
            second: None,
        }
    }

    /// The `(m+2)`-letter words `first . W_m(second, last)`.
    pub fn prefixed(n: usize, m: usize, first: u32, second: u32, last: u32) -> Self {
        WordClass {
            n,
            m,
            first,
            last,
            second: Some(second),
        }
    }

    pub fn word_len(&self) -> usize {
        self.m + 1 + usize::from(self.second.is_some())
    }

    pub fn enumerate(&self) -> Result<Vec<Word>, WalkError> {
        match self.second {
            None => enumerate_words(self.n, self.m, self.first, self.last),
            Some(second) => {
                check_letter(self.first, self.n)?;
                check_letter(second, self.n)?;
                if !adjacent(self.first, second) {
                    return Ok(Vec::new());
                }
                let tails = enumerate_words(self.n, self.m, second, self.last)?;
                Ok(tails
                    .into_iter()
                    .map(|tail| {
                        let mut letters = Vec::with_capacity(tail.len() + 1);
                        letters.push(self.first);
                        letters.extend_from_slice(tail.letters());
                        Word { letters }
                    })
                    .collect())
            }
        }
    }

    pub fn contains(&self, w: &Word) -> Result<bool, WalkError> {
        if !is_legal(w, self.n)? {
            return Ok(false);
        }
        let letters = w.letters();
        if letters.len() != self.word_len() {
            return Ok(false);
        }
        if letters[0] != self.first || *letters.last().expect("nonempty") != self.last {
            return Ok(false);
        }
        if let Some(second) = self.second {
            if letters[1] != second {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The forward bijection `T_i : i W_m(i',i) -> i' W_m(i,i')` with `i' = i+1`.
///
/// Splits at the first descent `i' i`; the three cases correspond to the
/// descent sitting at the front, at the very end, or strictly inside.
pub fn apply_t(i: u32, w: &Word) -> Result<Word, WalkError> {
    let ip = i + 1;
    let letters = w.letters();
    check_domain_shape(letters, i, ip, i)?;
    let len = letters.len();
    // Smallest 0-based t with (w[t], w[t+1]) = (i', i); 1-based k = t + 1.
    let t = (0..len - 1)
        .find(|&t| letters[t] == ip && letters[t + 1] == i)
        .ok_or_else(|| WalkError::NotInDomain {
            reason: format!("no descent {ip}{i} found"),
        })?;
    let mut image = Vec::with_capacity(len);
    if t == 1 {
        // Case I: w = i i' i u i  ->  i' i u i i'  (minimal word i i' i -> i' i i').
        if len == 3 {
            image.extend_from_slice(&[ip, i, ip]);
        } else {
            image.extend_from_slice(&[ip, i]);
            image.extend_from_slice(&letters[3..len - 1]);
            image.extend_from_slice(&[i, ip]);
        }
    } else if t == len - 2 {
        // Case II: w = i i' u i' i  ->  i' i i' u i'.
        image.extend_from_slice(&[ip, i, ip]);
        image.extend_from_slice(&letters[2..len - 2]);
        image.push(ip);
    } else {
        // Case III: w = i i' u i' i v i  ->  i' i v i i' u i'.
        let u = &letters[2..t];
        let v = &letters[t + 2..len - 1];
        image.extend_from_slice(&[ip, i]);
        image.extend_from_slice(v);
        image.extend_from_slice(&[i, ip]);
        image.extend_from_slice(u);
        image.push(ip);
    }
    debug_assert_eq!(image.len(), len);
    Ok(Word { letters: image })
}

/// The inverse bijection `U_i : i' W_m(i,i') -> i W_m(i',i)`.
///
/// Splits at the last ascent `i i'`; cases mirror those of `apply_t`.
pub fn apply_u(i: u32, w: &Word) -> Result<Word, WalkError> {
    let ip = i + 1;
    let letters = w.letters();
    check_domain_shape(letters, ip, i, ip)?;
    let len = letters.len();
    // Largest 0-based t with (w[t], w[t+1]) = (i, i'); 1-based k = t + 1.
    let t = (0..len - 1)
        .rev()
        .find(|&t| letters[t] == i && letters[t + 1] == ip)
        .ok_or_else(|| WalkError::NotInDomain {
            reason: format!("no ascent {i}{ip} found"),
        })?;
    let mut image = Vec::with_capacity(len);
    if t == len - 2 {
        // Case I: w = i' i u i i'  ->  i i' i u i  (minimal word i' i i' -> i i' i).
        if len == 3 {
            image.extend_from_slice(&[i, ip, i]);
        } else {
            image.extend_from_slice(&[i, ip, i]);
            image.extend_from_slice(&letters[2..len - 2]);
            image.push(i);
        }
    } else if t == 1 {
        // Case II: w = i' i i' u i'  ->  i i' u i' i.
        image.extend_from_slice(&[i, ip]);
        image.extend_from_slice(&letters[3..len - 1]);
        image.extend_from_slice(&[ip, i]);
    } else {
        // Case III: w = i' i v i i' u i'  ->  i i' u i' i v i.
        let v = &letters[2..t];
        let u = &letters[t + 2..len - 1];
        image.extend_from_slice(&[i, ip]);
        image.extend_from_slice(u);
        image.extend_from_slice(&[ip, i]);
        image.extend_from_slice(v);
        image.push(i);
    }
    debug_assert_eq!(image.len(), len);
    Ok(Word { letters: image })
}

fn check_domain_shape(
    letters: &[u32],
    first: u32,
    second: u32,
    last: u32,
) -> Result<(), WalkError> {
    if letters.len() < 3 {
        return Err(WalkError::NotInDomain {
            reason: "domain words have at least 3 letters".to_string(),
        });
    }
    if letters[0] != first || letters[1] != second {
        return Err(WalkError::NotInDomain {
            reason: format!("word must start {first}{second}"),
        });
    }
    if *letters.last().expect("nonempty") != last {
        return Err(WalkError::NotInDomain {
            reason: format!("word must end with {last}"),
        });
    }
    steps_legal(letters).map_err(|_| WalkError::NotInDomain {
        reason: "word is not legal".to_string(),
    })
}

/// Outcome of the exhaustive bijection check for one `(n, m, i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionReport {
    pub n: usize,
    pub m: usize,
    pub i: u32,
    pub domain_size: usize,
    pub codomain_size: usize,
    pub pass: bool,
    /// First domain (or codomain) word violating an assertion.
    pub counterexample: Option<Word>,
}

/// Exhaustively checks that `T_i` maps `i W_m(i',i)` into `i' W_m(i,i')`
/// bijectively, preserves weights, and inverts against `U_i` both ways.
pub fn check_bijection(n: usize, m: usize, i: u32) -> Result<BijectionReport, WalkError> {
    if n < 2 {
        return Err(WalkError::InvalidDimension { n });
    }
    check_letter(i, n)?;
    if i as usize >= n {
        return Err(WalkError::BadIndex {
            letter: i,
            n: n - 1,
        });
    }
    assert!(m >= 1, "bijection checks need m >= 1");
    let ip = i + 1;
    let domain = WordClass::prefixed(n, m, i, ip, i).enumerate()?;
    let codomain = WordClass::prefixed(n, m, ip, i, ip).enumerate()?;
    let codomain_set: BTreeSet<&Word> = codomain.iter().collect();

    let mut report = BijectionReport {
        n,
        m,
        i,
        domain_size: domain.len(),
        codomain_size: codomain.len(),
        pass: true,
        counterexample: None,
    };
    let fail = |report: &mut BijectionReport, w: &Word| {
        report.pass = false;
        if report.counterexample.is_none() {
            report.counterexample = Some(w.clone());
        }
    };

    let mut images: BTreeSet<Word> = BTreeSet::new();
    for w in &domain {
        let image = match apply_t(i, w) {
            Ok(image) => image,
            Err(_) => {
                fail(&mut report, w);
                continue;
            }
        };
        let ok = codomain_set.contains(&image)
            && weight(&image) == weight(w)
            && apply_u(i, &image).as_ref() == Ok(w)
            && images.insert(image);
        if !ok {
            fail(&mut report, w);
        }
    }
    for v in &codomain {
        let ok = matches!(apply_u(i, v).and_then(|back| apply_t(i, &back)), Ok(ref w) if w == v);
        if !ok {
            fail(&mut report, v);
        }
    }
    if domain.len() != codomain.len() {
        report.pass = false;
    }
    Ok(report)
}

/// Whether `a[i,i+1] * (A^m)_{i+1,i} = a[i+1,i] * (A^m)_{i,i+1}` holds
/// symbolically for the generic tridiagonal matrix, for all `1 <= i < n`
/// and `1 <= m <= max_m`.
pub fn eq2_check(n: usize, max_m: usize) -> Result<bool, WalkError> {
    if n < 2 {
        return Err(WalkError::InvalidDimension { n });
    }
    assert!(max_m >= 1, "eq2_check needs max_m >= 1");
    let a = SymMatrix::tridiagonal(n).map_err(|_| WalkError::InvalidDimension { n })?;
    let table =
        PowerTable::new(&a, max_m).map_err(|_: MatrixError| WalkError::InvalidDimension { n })?;
    for i in 1..n {
        let above = a.entry(i, i + 1);
        let below = a.entry(i + 1, i);
        for m in 1..=max_m {
            let lhs = above.mul(table.power(m).entry(i + 1, i));
            let rhs = below.mul(table.power(m).entry(i, i + 1));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> Word {
        Word::parse(text).unwrap()
    }

    #[test]
    fn long_word_legality_examples() {
        assert!(is_legal(&w("2333234333221122112234455443"), 5).unwrap());
        assert!(!is_legal(&w("233312"), 5).unwrap());
        assert!(is_legal(&w("4"), 5).unwrap());
    }

    #[test]
    fn out_of_range_letters_error() {
        assert!(matches!(
            is_legal(&w("126"), 5),
            Err(WalkError::LetterOutOfRange { letter: 6, n: 5 })
        ));
    }

    #[test]
    fn enumerate_small_sets() {
        let single = enumerate_words(2, 1, 1, 2).unwrap();
        assert_eq!(single, vec![w("12")]);
        let pair = enumerate_words(3, 2, 1, 1).unwrap();
        assert_eq!(pair, vec![w("111"), w("121")]);
        // Walks of length 4 from 1 to 1 with no upper clipping: Motzkin M_4.
        assert_eq!(enumerate_words(5, 4, 1, 1).unwrap().len(), 9);
        assert!(enumerate_words(3, 1, 1, 3).unwrap().is_empty());
    }

    #[test]
    fn weights_of_short_words() {
        assert_eq!(
            weight(&w("121")).unwrap(),
            Poly::parse("a[1,2]*a[2,1]").unwrap()
        );
        assert_eq!(weight(&w("111")).unwrap(), Poly::parse("a[1,1]^2").unwrap());
        assert_eq!(
            weight(&w("1232")).unwrap(),
            Poly::parse("a[1,2]*a[2,3]*a[3,2]").unwrap()
        );
        assert_eq!(weight(&w("7")).unwrap(), Poly::one());
        assert!(matches!(
            weight(&w("131")),
            Err(WalkError::IllegalWord {
                index: 1,
                from: 1,
                to: 3
            })
        ));
    }

    #[test]
    fn small_weight_enumerators() {
        assert_eq!(
            weight_enumerator(2, 2, 1, 1).unwrap(),
            Poly::parse("a[1,1]^2 + a[1,2]*a[2,1]").unwrap()
        );
        assert!(weight_enumerator(3, 1, 1, 3).unwrap().is_zero());
        assert_eq!(
            weight_enumerator(3, 2, 1, 3).unwrap(),
            Poly::parse("a[1,2]*a[2,3]").unwrap()
        );
    }

    #[test]
    fn bijection_case_one_minimal() {
        assert_eq!(apply_t(1, &w("121")).unwrap(), w("212"));
        assert_eq!(apply_u(1, &w("212")).unwrap(), w("121"));
    }

    #[test]
    fn bijection_case_two() {
        assert_eq!(apply_t(1, &w("12221")).unwrap(), w("21222"));
        assert_eq!(apply_u(1, &w("21222")).unwrap(), w("12221"));
    }

    #[test]
    fn bijection_case_three() {
        assert_eq!(apply_t(1, &w("122111")).unwrap(), w("211122"));
        assert_eq!(apply_u(1, &w("211122")).unwrap(), w("122111"));
    }

    #[test]
    fn bijection_rejects_bad_shapes() {
        assert!(matches!(
            apply_t(1, &w("12")),
            Err(WalkError::NotInDomain { .. })
        ));
        assert!(matches!(
            apply_t(1, &w("212")),
            Err(WalkError::NotInDomain { .. })
        ));
        assert!(matches!(
            apply_t(2, &w("121")),
            Err(WalkError::NotInDomain { .. })
        ));
        // Ends with the wrong letter.
        assert!(matches!(
            apply_t(1, &w("122")),
            Err(WalkError::NotInDomain { .. })
        ));
    }

    #[test]
    fn minimal_bijection_report() {
        let report = check_bijection(2, 1, 1).unwrap();
        assert!(report.pass);
        assert_eq!(report.domain_size, 1);
        assert_eq!(report.codomain_size, 1);
        assert_eq!(report.counterexample, None);
    }

    #[test]
    fn moderate_bijection_reports() {
        assert!(check_bijection(3, 4, 1).unwrap().pass);
        assert!(check_bijection(5, 7, 3).unwrap().pass);
    }

    #[test]
    fn eq2_small_cases() {
        assert!(eq2_check(2, 2).unwrap());
        assert!(eq2_check(3, 4).unwrap());
    }

    #[test]
    fn word_parsing_and_display() {
        assert_eq!(w("1,2,1"), w("121"));
        assert_eq!(w("121").to_string(), "121");
        let big = Word::new(vec![9, 10, 11]).unwrap();
        assert_eq!(big.to_string(), "9,10,11");
        assert_eq!(Word::parse("9,10,11").unwrap(), big);
        assert!(Word::parse("").is_err());
        assert!(Word::parse("1x2").is_err());
        assert!(Word::parse("102").is_err());
    }
}
