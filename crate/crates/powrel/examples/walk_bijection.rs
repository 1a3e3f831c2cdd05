//! The weight-preserving bijection T_i between the prefixed word sets
//! i W_m(i+1, i) and (i+1) W_m(i, i+1), its inverse U_i, and the
//! exhaustive checker.

use powrel::{apply_t, apply_u, check_bijection, is_legal, weight, Word};

fn main() {
    // Legality over the alphabet {1..5}.
    for text in ["2333234333221122112234455443", "233312"] {
        let w = Word::parse(text).unwrap();
        println!("{text} legal over n=5: {}", is_legal(&w, 5).unwrap());
    }
    println!();

    // One word per case of the bijection.
    for text in ["121", "12221", "122111"] {
        let w = Word::parse(text).unwrap();
        let image = apply_t(1, &w).unwrap();
        let back = apply_u(1, &image).unwrap();
        assert_eq!(back, w);
        println!(
            "T_1({w}) = {image}   weight {}   U_1(T_1(w)) = {back}",
            weight(&image).unwrap()
        );
    }
    println!();

    // Exhaustive verification over a grid of parameters.
    for (n, m, i) in [(2usize, 1usize, 1u32), (3, 4, 1), (4, 6, 2), (5, 7, 3)] {
        let report = check_bijection(n, m, i).unwrap();
        println!(
            "n={n} m={m} i={i}: |domain| = |codomain| = {}, bijection {}",
            report.domain_size,
            if report.pass { "verified" } else { "FAILED" }
        );
    }
}
