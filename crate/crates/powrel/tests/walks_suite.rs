//! Walk-model invariants beyond the acceptance sweep: the three-way
//! weight-enumerator identity, bijection totality and codomain membership,
//! and word-class bookkeeping.

use powrel::matrix::{PowerTable, SymMatrix};
use powrel::poly::Poly;
use powrel::walks::{
    apply_t, apply_u, check_bijection, enumerate_words, weight, weight_enumerator, WalkError, Word,
    WordClass,
};

#[test]
fn three_way_equality_for_eq2_sides() {
    // Both sides of the anti-diagonal identity equal the weight enumerators
    // of the prefixed word sets.
    for n in 2..=4usize {
        let a = SymMatrix::tridiagonal(n).unwrap();
        let table = PowerTable::new(&a, 5).unwrap();
        for m in 1..=5usize {
            for i in 1..n as u32 {
                let ip = i + 1;
                let lhs = a
                    .entry(i as usize, ip as usize)
                    .mul(table.power(m).entry(ip as usize, i as usize));
                let rhs = a
                    .entry(ip as usize, i as usize)
                    .mul(table.power(m).entry(i as usize, ip as usize));
                let domain_sum = class_weight_sum(&WordClass::prefixed(n, m, i, ip, i));
                let codomain_sum = class_weight_sum(&WordClass::prefixed(n, m, ip, i, ip));
                assert_eq!(lhs, domain_sum, "lhs n={n} m={m} i={i}");
                assert_eq!(rhs, codomain_sum, "rhs n={n} m={m} i={i}");
                assert_eq!(lhs, rhs, "eq n={n} m={m} i={i}");
            }
        }
    }
}

fn class_weight_sum(class: &WordClass) -> Poly {
    let mut acc = Poly::zero();
    for w in class.enumerate().unwrap() {
        acc = acc.add(&weight(&w).unwrap());
    }
    acc
}

#[test]
fn bijection_is_total_and_lands_in_codomain() {
    for n in 2..=4usize {
        for m in 1..=6usize {
            for i in 1..n as u32 {
                let domain = WordClass::prefixed(n, m, i, i + 1, i);
                let codomain = WordClass::prefixed(n, m, i + 1, i, i + 1);
                for w in domain.enumerate().unwrap() {
                    let image =
                        apply_t(i, &w).unwrap_or_else(|e| panic!("apply_t failed on {w}: {e}"));
                    assert!(codomain.contains(&image).unwrap(), "{w} -> {image}");
                    assert_eq!(image.len(), w.len());
                    assert_eq!(weight(&image).unwrap(), weight(&w).unwrap());
                    assert_eq!(apply_u(i, &image).unwrap(), w);
                }
            }
        }
    }
}

#[test]
fn mutual_inversion_exhaustive_to_m8() {
    for n in [2usize, 5] {
        for m in 1..=8usize {
            for i in 1..n as u32 {
                let codomain = WordClass::prefixed(n, m, i + 1, i, i + 1);
                for v in codomain.enumerate().unwrap() {
                    let back = apply_u(i, &v).unwrap();
                    assert_eq!(apply_t(i, &back).unwrap(), v);
                }
            }
        }
    }
}

#[test]
fn word_class_counts_match_enumeration() {
    let plain = WordClass::plain(3, 4, 1, 2);
    let words = plain.enumerate().unwrap();
    assert_eq!(words, enumerate_words(3, 4, 1, 2).unwrap());
    for w in &words {
        assert!(plain.contains(w).unwrap());
    }
    // Wrong length, endpoints, or second letter are excluded.
    assert!(!plain.contains(&Word::parse("12").unwrap()).unwrap());
    let prefixed = WordClass::prefixed(3, 2, 1, 2, 1);
    assert!(prefixed.contains(&Word::parse("1221").unwrap()).unwrap());
    assert!(!prefixed.contains(&Word::parse("1121").unwrap()).unwrap());
    // Non-adjacent prefix letters produce the empty class.
    assert!(WordClass::prefixed(5, 2, 1, 3, 1)
        .enumerate()
        .unwrap()
        .is_empty());
}

#[test]
fn enumeration_is_lexicographic_and_duplicate_free() {
    let words = enumerate_words(4, 5, 2, 3).unwrap();
    let mut sorted = words.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(words, sorted);
}

#[test]
fn weight_enumerator_of_unreachable_class_is_zero() {
    assert!(weight_enumerator(4, 2, 1, 4).unwrap().is_zero());
    assert_eq!(
        weight_enumerator(4, 3, 1, 4).unwrap(),
        Poly::parse("a[1,2]*a[2,3]*a[3,4]").unwrap()
    );
}

#[test]
fn check_bijection_validates_arguments() {
    assert!(matches!(
        check_bijection(1, 1, 1),
        Err(WalkError::InvalidDimension { n: 1 })
    ));
    assert!(matches!(
        check_bijection(3, 1, 3),
        Err(WalkError::BadIndex { .. })
    ));
    assert!(matches!(
        check_bijection(3, 1, 0),
        Err(WalkError::BadIndex { .. })
    ));
}

#[test]
fn bijection_counterexample_reporting_shape() {
    // A passing case has no counterexample and equal sizes.
    let report = check_bijection(4, 6, 2).unwrap();
    assert!(report.pass);
    assert!(report.counterexample.is_none());
    assert_eq!(report.domain_size, report.codomain_size);
}

#[test]
fn words_on_larger_alphabets_use_commas() {
    let letters: Vec<u32> = (8..=12).collect();
    let w = Word::new(letters).unwrap();
    assert_eq!(w.to_string(), "8,9,10,11,12");
    let back = Word::parse("8,9,10,11,12").unwrap();
    assert_eq!(back, w);
    let monomial = weight(&w).unwrap();
    assert_eq!(
        monomial,
        Poly::parse("a[8,9]*a[9,10]*a[10,11]*a[11,12]").unwrap()
    );
}
