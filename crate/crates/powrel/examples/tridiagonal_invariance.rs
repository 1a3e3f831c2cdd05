//! The tridiagonal anti-diagonal invariance
//! a[i,i+1] (A^m)[i+1,i] = a[i+1,i] (A^m)[i,i+1], checked symbolically for
//! every dimension up to 6, together with the walk model that explains it:
//! entries of tridiagonal powers are weight enumerators of legal words.

use powrel::matrix::PowerTable;
use powrel::{eq2_check, weight_enumerator, SymMatrix};

fn main() {
    for n in 2..=6 {
        let pass = eq2_check(n, 6).unwrap();
        println!(
            "n = {n}, m = 1..6: anti-diagonal invariance {}",
            verdict(pass)
        );
    }
    println!();

    // The (i,j) entry of A^m is the weight enumerator of the legal
    // (m+1)-letter words from i to j.
    let n = 3;
    let a = SymMatrix::tridiagonal(n).unwrap();
    let table = PowerTable::new(&a, 3).unwrap();
    for m in 1..=3usize {
        for (i, j) in [(1usize, 1usize), (1, 3), (2, 3)] {
            let from_words = weight_enumerator(n, m, i as u32, j as u32).unwrap();
            let from_power = table.power(m).entry(i, j);
            assert_eq!(&from_words, from_power);
            println!("(A^{m})[{i},{j}] = {from_words}");
        }
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "holds"
    } else {
        "FAILS"
    }
}
